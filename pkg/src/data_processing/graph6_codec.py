"""graph6 encoding and decoding on top of networkx, with byte-offset diagnostics."""
from typing import Iterator, Tuple
import networkx as nx
from src.configurations.config import Config
from src.models.errors import GraphParseError, InvalidArgumentError
from src.models.graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def strip_graph6_header(text: str) -> Tuple[str, int]:
    """Remove the optional header; returns the body and how many characters were skipped."""
    skipped = len(text) - len(text.lstrip())
    body = text.strip()
    if body.startswith(GRAPH6_HEADER):
        rest = body[len(GRAPH6_HEADER):]
        skipped += len(GRAPH6_HEADER) + len(rest) - len(rest.lstrip())
        body = rest.strip()
    return body, skipped


def encode_graph6(g: Graph) -> str:
    """graph6 string of g, without header or newline."""
    if g.n > Config.GRAPH6_MAX_VERTICES:
        raise InvalidArgumentError(f"graph6 supports at most {Config.GRAPH6_MAX_VERTICES} vertices, got {g.n}")
    return nx.to_graph6_bytes(g.to_networkx(), header=False).rstrip(b"\n").decode("ascii")


def validate_graph6(body: str, base: int = 0) -> None:
    """Reject malformed bodies with the offset of the first bad byte.

    networkx reports no position and accepts non-zero padding.
    """
    if not body:
        raise GraphParseError("empty graph6 string", offset=base)

    for position, char in enumerate(body):
        if not 63 <= ord(char) <= 126:
            raise GraphParseError(f"character {char!r} outside the graph6 range 63..126", offset=base + position)

    codes = [ord(char) - 63 for char in body]
    if codes[0] == 63:
        if len(codes) < 4:
            raise GraphParseError("truncated long-form vertex count", offset=base + len(codes))
        if codes[1] == 63:
            raise GraphParseError("8-byte vertex counts are not supported", offset=base + 1)
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        data_start = 4
    else:
        n = codes[0]
        data_start = 1

    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    available = len(codes) - data_start
    if available != expected:
        raise GraphParseError(
            f"expected {expected} data bytes for n={n}, found {available}",
            offset=base + data_start + min(available, expected),
        )

    if bit_count % 6:
        pad_mask = (1 << (6 - bit_count % 6)) - 1
        if codes[-1] & pad_mask:
            raise GraphParseError("non-zero padding bits", offset=base + len(codes) - 1)


def decode_graph6(text: str) -> Graph:
    """Parse one graph6 string; errors carry the byte offset into the given text."""
    body, base = strip_graph6_header(text)
    validate_graph6(body, base)
    return Graph.from_networkx(nx.from_graph6_bytes(body.encode("ascii")))


def iter_graph6_lines(text: str) -> Iterator[Graph]:
    """Decode a stream with one graph6 string per non-blank line."""
    offset = 0
    for line in text.splitlines(keepends=True):
        if line.strip() and not line.lstrip().startswith("#"):
            try:
                yield decode_graph6(line)
            except GraphParseError as exc:
                raise GraphParseError(exc.reason, offset=offset + (exc.offset or 0)) from exc
        offset += len(line.encode("ascii", errors="replace"))
