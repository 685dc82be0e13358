"""Reading and writing graphs as edge lists and JSON."""

import json
import os

from ..errors import ParseError
from ..graph import Dag, Digraph, Edge
from ..padding import PaddedDag

# the keyword of the optional vertex count header of an edge list
_HEADER = "n"


def _integer(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer. Got: {token!r}", line) from None


def parse_edge_list(text: str) -> Dag:
    """Parse an edge list into a DAG.

    Every line is "u v" or "u v w" with 1-based ids and an optional real
    weight. '#' starts a comment and blank lines are ignored. An optional first
    line "n <count>" fixes the vertex count, otherwise n is the largest id seen.

    Args:
        text (str): the contents of the file

    Returns:
        Dag: the validated graph

    """
    n = None
    edges: list[Edge] = []
    seen_content = False
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if tokens[0] == _HEADER:
            if seen_content:
                raise ParseError('the "n <count>" header must come before any edge', number)
            if len(tokens) != 2:
                raise ParseError('the header must read "n <count>"', number)
            n = _integer(tokens[1], number, "the vertex count")
            if n < 1:
                raise ParseError(f"the vertex count must be positive. Got: {n}", number)
            seen_content = True
            continue
        seen_content = True
        if len(tokens) not in (2, 3):
            raise ParseError(f'expected "u v" or "u v w". Got: {raw.strip()!r}', number)
        u = _integer(tokens[0], number, "a vertex id")
        v = _integer(tokens[1], number, "a vertex id")
        weight = 1.0
        if len(tokens) == 3:
            try:
                weight = float(tokens[2])
            except ValueError:
                raise ParseError(f"weight must be a real number. Got: {tokens[2]!r}", number) from None
        if u < 1 or v < 1:
            raise ParseError(f"vertex ids are 1-based. Got: ({u}, {v})", number)
        edges.append(Edge(u, v, weight))
    if not seen_content:
        raise ParseError("the graph file is empty")
    if n is None:
        n = max(max(u, v) for u, v, _ in edges)
    return Dag(n, tuple(edges))


def format_edge_list(graph: Digraph) -> str:
    """Return a graph as an edge list with a vertex count header."""
    lines = [f"{_HEADER} {graph.n}"]
    for u, v, weight in graph.edges:
        lines.append(f"{u} {v}" if weight == 1 else f"{u} {v} {weight!r}")
    return "\n".join(lines) + "\n"


def graph_to_json(graph: Digraph) -> dict:
    """Return the JSON object {"n": n, "edges": [[u, v, w], ...]}."""
    return {"n": graph.n, "edges": [[u, v, weight] for u, v, weight in graph.edges]}


def _edges(obj) -> tuple[Edge, ...]:
    try:
        return tuple(Edge(int(u), int(v), float(w)) for u, v, w in obj)
    except (TypeError, ValueError):
        raise ParseError("edges must be an array of [u, v, w] triples") from None


def graph_from_json(obj: dict, kind: type[Digraph] = Dag) -> Digraph:
    """Build a graph from the JSON object written by graph_to_json."""
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParseError('a JSON graph needs the fields "n" and "edges"')
    if not isinstance(obj["n"], int):
        raise ParseError(f'"n" must be an integer. Got: {obj["n"]!r}')
    return kind(obj["n"], _edges(obj["edges"]))


def padded_to_json(padded: PaddedDag) -> dict:
    """Return a zero-padded graph as one flat JSON object.

    The padded graph's "n" and "edges" sit next to the bookkeeping fields,
    so the object also reads as a plain JSON graph.
    """
    return {
        **graph_to_json(padded.graph),
        "original_n": padded.original_n,
        "added_vertices": list(padded.added_vertices),
        "added_edges": {
            kind.value: [[u, v, weight] for u, v, weight in edges]
            for kind, edges in padded.added_edges.items()
        },
        "original_map": list(padded.original_map),
    }


def padded_from_json(obj: dict) -> PaddedDag:
    """Build a zero-padded graph from the JSON object written by padded_to_json."""
    try:
        added = obj["added_edges"]
        return PaddedDag(
            graph=graph_from_json(obj, Digraph),
            original_n=int(obj["original_n"]),
            added_vertices=tuple(int(v) for v in obj["added_vertices"]),
            connectivity_edges=_edges(added["connectivity"]),
            return_path=_edges(added["return_path"]),
            original_map=tuple(int(v) for v in obj["original_map"]),
        )
    except (KeyError, TypeError) as error:
        raise ParseError(f"malformed zero-padded graph: {error}") from None


def loads_json(text: str):
    """Parse JSON text, reporting syntax errors as ParseError."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise ParseError(error.msg, error.lineno) from None


def read_graph(path: str) -> Dag:
    """Read a DAG from an edge list, or from JSON when the path ends in .json."""
    with open(path) as graph_file:
        text = graph_file.read()
    if os.path.splitext(path)[1].lower() == ".json":
        return graph_from_json(loads_json(text))
    return parse_edge_list(text)


# explicitly define the outward facing API of this module
__all__ = [
    parse_edge_list.__name__,
    format_edge_list.__name__,
    graph_to_json.__name__,
    graph_from_json.__name__,
    padded_to_json.__name__,
    padded_from_json.__name__,
    loads_json.__name__,
    read_graph.__name__,
]  # pyright: ignore [reportUnsupportedDunderAll]
