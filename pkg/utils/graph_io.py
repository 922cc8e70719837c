"""Edge-list (native) and graph6 (ingestion only) graph formats."""

from enum import Enum
from pathlib import Path
from typing import Iterator

import networkx as nx

from utils.errors import GraphError, GraphParseError
from utils.multigraph import MultiGraph, build

GRAPH6_HEADER = ">>graph6<<"


class GraphFormat(Enum):
    EDGELIST = "edgelist"
    GRAPH6 = "graph6"


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, stripped line) skipping blanks and '#' comments."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line


def _parse_ints(line: str, number: int, expected: int, what: str) -> list[int]:
    parts = line.split()
    if len(parts) != expected:
        raise GraphParseError(f"expected {expected} integers for {what}, got {line!r}", number)
    try:
        return [int(part) for part in parts]
    except ValueError:
        raise GraphParseError(f"non-integer token in {what}: {line!r}", number) from None


def iter_edgelist(text: str) -> Iterator[MultiGraph]:
    """
    Parse a stream of edge-list records.

    Each record is a header line "n m" followed by m lines "u v"; blank
    lines and lines starting with '#' are ignored anywhere.
    """
    lines = _content_lines(text)
    for number, header in lines:
        n, m = _parse_ints(header, number, 2, "header 'n m'")
        if n < 0 or m < 0:
            raise GraphParseError(f"negative size in header {header!r}", number)
        edges = []
        last_number = number
        for _ in range(m):
            try:
                last_number, line = next(lines)
            except StopIteration:
                raise GraphParseError(
                    f"expected {m} edges, found {len(edges)} before end of input", last_number
                ) from None
            edges.append(tuple(_parse_ints(line, last_number, 2, "edge 'u v'")))
        try:
            yield build(n, edges)
        except GraphError as exc:
            raise GraphParseError(str(exc), last_number) from None


def parse_edgelist(text: str) -> MultiGraph:
    """Parse exactly one edge-list record."""
    graphs = list(iter_edgelist(text))
    if len(graphs) != 1:
        raise GraphParseError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def parse_graph6(text: str) -> MultiGraph:
    """
    Decode one graph6 string (optional '>>graph6<<' header).

    graph6 is simple by construction, so the result never has parallel edges.
    """
    lines = [line for _, line in _content_lines(text)]
    if len(lines) != 1:
        raise GraphParseError(f"expected exactly one graph6 line, found {len(lines)}")
    s = lines[0]
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    try:
        graph = nx.from_graph6_bytes(s.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as exc:
        raise GraphParseError(f"malformed graph6 data: {exc}", 1) from None
    return build(graph.number_of_nodes(), sorted(tuple(sorted(edge)) for edge in graph.edges()))


def read_graph(path: str | Path, graph_format: GraphFormat = GraphFormat.EDGELIST) -> MultiGraph:
    """
    Read a single graph from a file.

    Args:
        path: File to read
        graph_format: EDGELIST (native) or GRAPH6

    Returns:
        The parsed graph
    """
    text = Path(path).read_text(encoding="ascii")
    if graph_format is GraphFormat.GRAPH6:
        return parse_graph6(text)
    return parse_edgelist(text)


def read_graphs(path: str | Path) -> list[MultiGraph]:
    """Read every edge-list record of a file."""
    return list(iter_edgelist(Path(path).read_text(encoding="ascii")))


def canonical_edges(g: MultiGraph) -> list[tuple[int, int]]:
    """Edges as (min, max) pairs sorted; parallel edges stay adjacent."""
    return sorted((min(u, v), max(u, v)) for u, v in g.endpoints)


def format_edgelist(g: MultiGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in canonical_edges(g))
    return "\n".join(lines) + "\n"


def write_graph(g: MultiGraph, graph_format: GraphFormat = GraphFormat.EDGELIST) -> bytes:
    """Serialize g in the canonical edge-list form."""
    if graph_format is not GraphFormat.EDGELIST:
        raise GraphError(f"writing {graph_format.value} is not supported")
    return format_edgelist(g).encode("ascii")


def graph_to_json(g: MultiGraph) -> dict:
    return {"n": g.n, "m": g.m, "edges": [list(pair) for pair in g.endpoints]}


def graph_from_json(data: dict) -> MultiGraph:
    return build(data["n"], [tuple(pair) for pair in data["edges"]])
