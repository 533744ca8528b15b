"""Exception types raised across the toolkit."""
from typing import Optional


class SomborError(ValueError):
    """Base class for all toolkit errors."""
    kind: str = "error"


class InvalidArgumentError(SomborError):
    kind = "invalid-argument"


class UnsupportedSizeError(SomborError):
    kind = "unsupported-size"

    def __init__(self, what: str, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class GraphParseError(SomborError):
    """Malformed graph text; carries a line number (edge lists) or byte offset (graph6)."""
    kind = "parse-error"

    def __init__(self, message: str, line: Optional[int] = None, offset: Optional[int] = None):
        self.reason = message
        self.line = line
        self.offset = offset
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif offset is not None:
            where = f"byte {offset}: "
        super().__init__(f"{where}{message}")
