"""Value types produced by the invariant computations."""
from dataclasses import dataclass
from typing import FrozenSet, Tuple
from src.models.graph import Edge

DegreePair = Tuple[int, int]


@dataclass(frozen=True)
class Matching:
    pairs: FrozenSet[Edge]

    @property
    def size(self) -> int:
        return len(self.pairs)

    def covered(self) -> FrozenSet[int]:
        return frozenset(v for pair in self.pairs for v in pair)


@dataclass(frozen=True)
class IndexValue:
    """Sombor index of a graph plus the degree-pair multiset it was summed from.

    degree_pairs is sorted and each pair is (larger, smaller), so two values
    compare exactly equal whenever their multisets agree.
    """
    value: float
    term_count: int
    degree_pairs: Tuple[DegreePair, ...]
