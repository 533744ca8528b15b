"""Tests for configuration defaults and CLI overrides."""
from src.configurations.config import CliConfig, Config


def test_defaults():
    assert Config.TOLERANCE == 1e-9
    assert Config.ENUMERATION_CAP == 10
    assert Config.ORACLE_CAP == 7
    assert Config.CANONICAL_SIZE_CAP == 12


def test_cli_overrides():
    config = CliConfig()
    assert config.effective_tolerance == Config.TOLERANCE
    assert config.effective_cap == Config.ENUMERATION_CAP
    assert config.effective_oracle_cap == Config.ORACLE_CAP

    config = CliConfig(tolerance=1e-6, cap_n=8, oracle_cap=5)
    assert (config.effective_tolerance, config.effective_cap, config.effective_oracle_cap) == (1e-6, 8, 5)
