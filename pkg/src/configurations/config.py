"""Configuration settings for the Sombor cactus toolkit."""
import os
from dataclasses import dataclass
from typing import Optional
from dotenv import load_dotenv

# Optional overrides; nothing here is required
load_dotenv()

class Config:
    TOOL_VERSION: str = "1.0.0"

    # Comparison tolerances
    TOLERANCE: float = 1e-9
    CONSTRUCTION_TOLERANCE: float = 1e-12
    SCAN_NOISE_GUARD: float = 1e-13

    # Size caps
    CANONICAL_SIZE_CAP: int = 12
    MATCHING_SIZE_CAP: int = 24
    ENUMERATION_CAP: int = 10
    ORACLE_CAP: int = 7
    GRAPH6_MAX_VERTICES: int = 258047

    # The cactus theorem is stated from this order on; smaller cells are informative
    THEOREM_MIN_N: int = 5

    # Monotonicity scan defaults
    SCAN_X_MAX: float = 50.0
    SCAN_STEP: float = 0.5
    SCAN_D_MIN: int = 2
    SCAN_D_MAX: int = 10
    SCAN_F2_R_MAX: int = 5

    # Output
    SIGNIFICANT_DIGITS: int = 12

    # Logging
    LOG_LEVEL: str = os.getenv("SOMBOR_LOG_LEVEL", "WARNING")

    # Sweep parallelism
    SWEEP_WORKERS: int = int(os.getenv("SOMBOR_SWEEP_WORKERS", "1"))


@dataclass
class CliConfig:
    input_format: str = "auto"
    output_format: str = "json"
    tolerance: Optional[float] = None
    cap_n: Optional[int] = None
    oracle_cap: Optional[int] = None
    workers: int = Config.SWEEP_WORKERS

    @property
    def effective_tolerance(self) -> float:
        """Tolerance from the command line, else the configured default."""
        return Config.TOLERANCE if self.tolerance is None else self.tolerance

    @property
    def effective_cap(self) -> int:
        return Config.ENUMERATION_CAP if self.cap_n is None else self.cap_n

    @property
    def effective_oracle_cap(self) -> int:
        return Config.ORACLE_CAP if self.oracle_cap is None else self.oracle_cap
