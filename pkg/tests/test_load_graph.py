"""Tests for reading and writing edge-list and graph6 input."""
import io
import pytest
from src.data_processing.load_graph import GraphLoader, detect_format, format_graph, parse_edge_list
from src.models.errors import GraphParseError, InvalidArgumentError
from src.models.graph import Graph

PAW_EDGE_LIST = """# triangle with a pendant vertex
4 4
0 1
0 2
1 2   # closing edge
0 3
"""


def test_parse_edge_list():
    g = parse_edge_list(PAW_EDGE_LIST)
    assert (g.n, g.m) == (4, 4)
    assert (0, 3) in g.edges


@pytest.mark.parametrize("text, line", [
    ("2 1\n0 1 2\n", 2),
    ("2 1\n0 x\n", 2),
    ("-1 0\n", 1),
    ("2 1\n0 2\n", 2),
    ("3 1\n1 1\n", 2),
    ("3 2\n0 1\n1 0\n", 3),
    ("3 2\n0 1\n", 1),
    ("# nothing here\n", 1),
])
def test_edge_list_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphParseError) as exc_info:
        parse_edge_list(text)
    assert exc_info.value.line == line
    assert str(exc_info.value).startswith(f"line {line}: ")


def test_format_round_trips_through_the_parser():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    assert parse_edge_list(format_graph(g, "edge-list")) == g
    assert format_graph(g, "graph6").endswith("\n")
    with pytest.raises(InvalidArgumentError):
        format_graph(g, "dot")


@pytest.mark.parametrize("text, expected", [
    ("2 1\n0 1\n", "edge-list"),
    ("# comment\n3 0\n", "edge-list"),
    ("A_\n", "graph6"),
    (">>graph6<<Bw\n", "graph6"),
])
def test_detect_format(text, expected):
    assert detect_format(text) == expected


def test_loader_reads_files_and_standard_input(tmp_path, monkeypatch):
    path = tmp_path / "paw.txt"
    path.write_text(PAW_EDGE_LIST)
    loader = GraphLoader()
    assert loader.load_one(str(path)).m == 4

    monkeypatch.setattr("sys.stdin", io.StringIO("A_\nBw\n"))
    graphs = loader.load("-")
    assert [g.m for g in graphs] == [1, 3]


def test_loader_honours_an_explicit_format():
    with pytest.raises(GraphParseError):
        GraphLoader("graph6").parse("2 1\n0 1\n")
    with pytest.raises(InvalidArgumentError):
        GraphLoader("dot")


def test_load_one_rejects_streams(tmp_path):
    path = tmp_path / "two.g6"
    path.write_text("A_\nBw\n")
    with pytest.raises(InvalidArgumentError):
        GraphLoader().load_one(str(path))


@pytest.mark.parametrize("text", [
    "# a graph\nthree 2\n0 1\n1 2\n",
    "5\n",
    "4 4 4\n",
])
def test_malformed_headers_stay_edge_lists(text):
    assert detect_format(text) == "edge-list"
    with pytest.raises(GraphParseError) as exc_info:
        GraphLoader().parse(text)
    assert exc_info.value.line is not None


def test_single_graph6_token_is_graph6():
    assert detect_format("?\n") == "graph6"
    assert detect_format("# header comment\nBw\n") == "graph6"


def test_non_ascii_edge_list_reports_a_line(tmp_path):
    path = tmp_path / "accent.txt"
    path.write_bytes("2 1\n# café\n0 1\n".encode("utf-8"))
    with pytest.raises(GraphParseError) as exc_info:
        GraphLoader().load(str(path))
    assert exc_info.value.line == 2
    assert exc_info.value.offset is None


def test_non_ascii_graph6_reports_an_offset(tmp_path):
    path = tmp_path / "accent.g6"
    path.write_bytes("A_\nB\xe9\n".encode("utf-8"))
    with pytest.raises(GraphParseError) as exc_info:
        GraphLoader("graph6").load(str(path))
    assert exc_info.value.offset == 4
