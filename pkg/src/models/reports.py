"""Pydantic models for bounds, scans and verification reports."""
from typing import Dict, List, Literal, Optional, Tuple, Union
from pydantic import BaseModel, ConfigDict, Field
from src.configurations.config import Config

Direction = Literal["strictly-increasing", "strictly-decreasing", "non-monotone", "inconclusive"]
CellStatus = Literal["pass", "fail", "vacuous", "error"]


class ExtremalBound(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: Literal["Q", "Phi"]
    params: Tuple[int, int]
    value: float


class ScanReport(BaseModel):
    function_id: str
    kind: Literal["monotonicity", "convexity"] = "monotonicity"
    bindings: Dict[str, float] = Field(default_factory=dict)
    grid: Tuple[float, float, float]
    points: int
    direction: Direction
    witness: Optional[Tuple[float, float]] = None
    inconclusive_at: Optional[float] = None


class LemmaScanReport(BaseModel):
    """A printed monotonicity claim next to what the scans observed."""
    function_id: str
    claim: str
    claimed_direction: Direction
    observed_direction: Direction
    documented_discrepancy: bool = False
    passed: bool
    scans: List[ScanReport]


class CellError(BaseModel):
    kind: str
    message: str


class Provenance(BaseModel):
    tool_version: str = Config.TOOL_VERSION
    tolerance: float = Config.TOLERANCE
    enumeration_cap: int = Config.ENUMERATION_CAP
    oracle_cap: int = Config.ORACLE_CAP
    canonical_size_cap: int = Config.CANONICAL_SIZE_CAP


class VerificationReport(BaseModel):
    theorem: Literal["max-cacti", "max-pm-cacti"]
    params: Dict[str, int]
    status: CellStatus
    informative: bool = False
    enumerated_count: int = 0
    max_value: Optional[float] = None
    bound_value: Optional[float] = None
    argmax: List[str] = Field(default_factory=list)
    extremal_graph: Optional[str] = None
    matches_bound: bool = False
    bound_respected: bool = False
    argmax_is_extremal: bool = False
    argmax_unique: bool = False
    published_bound: Optional[float] = None
    published_bound_matches: Optional[bool] = None
    error: Optional[CellError] = None
    elapsed_seconds: float = 0.0


class PartitionCase(BaseModel):
    name: str
    hypothesis: str
    count: int = 0
    max_value: Optional[float] = None
    strict: bool
    violations: List[str] = Field(default_factory=list)


class PartitionReport(BaseModel):
    family: Literal["pm-cacti", "cacti"]
    params: Dict[str, int]
    status: CellStatus
    bound_value: Optional[float] = None
    enumerated_count: int = 0
    cases: List[PartitionCase] = Field(default_factory=list)
    uncovered: List[str] = Field(default_factory=list)
    equality_graphs: List[str] = Field(default_factory=list)
    error: Optional[CellError] = None
    elapsed_seconds: float = 0.0


class SweepReport(BaseModel):
    mode: str
    grid: Dict[str, List[int]]
    provenance: Provenance = Field(default_factory=Provenance)
    cells: List[Union[VerificationReport, PartitionReport]] = Field(default_factory=list)
    passed: int = 0
    failed: int = 0
    vacuous: int = 0
    errors: int = 0
    informative: int = 0
    all_passed: bool = True
