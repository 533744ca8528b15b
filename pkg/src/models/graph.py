"""Immutable graph value types shared by every module."""
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Sequence, Tuple
import networkx as nx
from src.models.errors import InvalidArgumentError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are stored as normalized pairs (u, v) with u < v. The adjacency
    table is derived once at construction and excluded from equality.
    """
    n: int
    edges: FrozenSet[Edge]
    adjacency: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise InvalidArgumentError(f"vertex count must be a non-negative integer, got {self.n!r}")

        normalized = set()
        for edge in self.edges:
            u, v = edge
            if u == v:
                raise InvalidArgumentError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidArgumentError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

        neighbours: List[set] = [set() for _ in range(self.n)]
        for u, v in normalized:
            neighbours[u].add(v)
            neighbours[v].add(u)
        object.__setattr__(self, "adjacency", tuple(frozenset(s) for s in neighbours))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph, rejecting duplicate edges instead of merging them."""
        pairs = []
        seen = set()
        for edge in edges:
            u, v = int(edge[0]), int(edge[1])
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InvalidArgumentError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            pairs.append((u, v))
        return cls(n, frozenset(pairs))

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        """Convert a networkx graph, relabeling nodes 0..n-1 in sorted order."""
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls(len(nodes), frozenset((index[u], index[v]) for u, v in nx_graph.edges()))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def to_networkx(self) -> nx.Graph:
        """networkx copy with nodes 0..n-1."""
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.sorted_edges())
        return nx_graph


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: Tuple[Tuple[FrozenSet[int], FrozenSet[Edge]], ...]
    articulation_vertices: FrozenSet[int]

    def cycle_blocks(self) -> List[Tuple[FrozenSet[int], FrozenSet[Edge]]]:
        """Blocks whose edge count equals their vertex count."""
        return [(vs, es) for vs, es in self.blocks if len(es) == len(vs) and len(es) >= 3]


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-class key: the graph6 bytes of the canonically relabeled graph."""
    key: bytes

    def text(self) -> str:
        return self.key.decode("ascii")
