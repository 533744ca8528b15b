"""Load graphs from edge-list or graph6 text, from a file path or standard input."""
import sys
from pathlib import Path
from typing import List
from loguru import logger
from src.data_processing.graph6_codec import GRAPH6_HEADER, encode_graph6, iter_graph6_lines
from src.models.errors import GraphParseError, InvalidArgumentError
from src.models.graph import Graph

INPUT_FORMATS = ("auto", "edge-list", "graph6")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" header followed by m "u v" lines; '#' starts a comment."""
    header = None
    edges = []
    seen = set()
    header_line = 0

    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = _strip_comment(raw)
        if not content:
            continue
        tokens = content.split()
        if len(tokens) != 2:
            raise GraphParseError(f"expected two integers, found {len(tokens)} fields", line=line_no)
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(f"non-integer token in {content!r}", line=line_no)

        if header is None:
            if a < 0 or b < 0:
                raise GraphParseError("vertex and edge counts must be non-negative", line=line_no)
            header = (a, b)
            header_line = line_no
            continue

        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise GraphParseError(f"vertex id out of range 0..{n - 1}", line=line_no)
        if a == b:
            raise GraphParseError(f"self-loop at vertex {a}", line=line_no)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphParseError(f"duplicate edge {a} {b}", line=line_no)
        seen.add(key)
        edges.append(key)

    if header is None:
        raise GraphParseError("missing 'n m' header", line=1)
    if len(edges) != header[1]:
        raise GraphParseError(f"header declares {header[1]} edges, found {len(edges)}", line=header_line)
    return Graph(header[0], frozenset(edges))


def format_edge_list(g: Graph) -> str:
    """The "n m" header followed by one sorted edge per line."""
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def format_graph(g: Graph, output_format: str) -> str:
    """Render g as graph6 or as an edge list, newline terminated."""
    if output_format == "graph6":
        return encode_graph6(g) + "\n"
    if output_format == "edge-list":
        return format_edge_list(g)
    raise InvalidArgumentError(f"unknown graph output format {output_format!r}")


def _looks_like_graph6(content: str) -> bool:
    if content.startswith(GRAPH6_HEADER):
        return True
    return len(content.split()) == 1 and all(63 <= ord(char) <= 126 for char in content)


def detect_format(text: str) -> str:
    """graph6 when the first content line is a header or one token of graph6 characters; else edge list."""
    for raw in text.splitlines():
        content = _strip_comment(raw)
        if content:
            return "graph6" if _looks_like_graph6(content) else "edge-list"
    return "edge-list"


class GraphLoader:
    def __init__(self, input_format: str = "auto"):
        if input_format not in INPUT_FORMATS:
            raise InvalidArgumentError(f"unknown input format {input_format!r}")
        self.input_format = input_format

    def _non_ascii_error(self, data: bytes, position: int) -> GraphParseError:
        fmt = self.input_format
        if fmt == "auto":
            fmt = detect_format(data.decode("ascii", errors="replace"))
        if fmt == "edge-list":
            return GraphParseError("input is not ASCII text", line=data[:position].count(b"\n") + 1)
        return GraphParseError("input is not ASCII text", offset=position)

    def read_text(self, source: str) -> str:
        """Read a path, or standard input when source is '-'."""
        if source == "-":
            return sys.stdin.read()
        try:
            data = Path(source).read_bytes()
        except OSError as e:
            logger.error(f"Failed to read graph input: {e}")
            raise
        try:
            return data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise self._non_ascii_error(data, exc.start)

    def parse(self, text: str) -> List[Graph]:
        """Parse text into one graph (edge list) or one graph per line (graph6)."""
        fmt = detect_format(text) if self.input_format == "auto" else self.input_format
        if fmt == "edge-list":
            graphs = [parse_edge_list(text)]
        else:
            graphs = list(iter_graph6_lines(text))
            if not graphs:
                raise GraphParseError("no graph6 strings found", offset=0)
        logger.info(f"Parsed {len(graphs)} graph(s) as {fmt}")
        return graphs

    def load(self, source: str) -> List[Graph]:
        """Read and parse every graph in source."""
        return self.parse(self.read_text(source))

    def load_one(self, source: str) -> Graph:
        """Read source and require exactly one graph."""
        graphs = self.load(source)
        if len(graphs) != 1:
            raise InvalidArgumentError(f"expected a single graph, found {len(graphs)}")
        return graphs[0]
