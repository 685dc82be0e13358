"""Graph zero-padding: connecting a DAG, closing it, and padding the added paths."""

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import pairwise
from typing import NamedTuple

import numpy as np

from .enums import EdgeKind
from .errors import ConnectivityInvariantError, NotConnected
from .graph import Dag, Digraph, Edge, as_signal, hamiltonian_path, path_dag

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PaddedDag:
    """A DAG augmented with connectivity paths and a closing return path."""

    graph: Digraph
    original_n: int
    added_vertices: tuple[int, ...]
    connectivity_edges: tuple[Edge, ...]
    return_path: tuple[Edge, ...]
    original_map: tuple[int, ...]
    """Entry v - 1 holds the id in `graph` of original vertex v."""

    @property
    def added_edges(self) -> dict[EdgeKind, tuple[Edge, ...]]:
        """Return the added edges keyed by why they were added."""
        return {
            EdgeKind.CONNECTIVITY: self.connectivity_edges,
            EdgeKind.RETURN_PATH: self.return_path,
        }

    @property
    def pad_size(self) -> int:
        """Return the number of vertices on the return path."""
        return len(self.return_path) - 1

    def adjacency_matrix(self) -> np.ndarray:
        """Return the adjacency matrix of the augmented graph (A_ZP)."""
        return self.graph.adjacency_matrix()

    def opened(self) -> Dag:
        """Return the augmented graph without the edge leaving the sink.

        Removing that one edge breaks the only cycle, so this is a DAG.
        """
        first = self.return_path[0]
        edges = tuple(e for e in self.graph.edges if (e.u, e.v) != (first.u, first.v))
        return Dag(self.graph.n, edges)


class ConnectionStep(NamedTuple):
    """One iteration of the source-linking loop."""

    sources: tuple[int, ...]
    links: tuple[Edge, ...]
    removed: int


def connection_steps(dag: Dag) -> Iterator[ConnectionStep]:
    """Run the source-linking loop one iteration at a time.

    Each iteration lists the sources of the shrinking copy, links them by a
    path in ascending id order when there is more than one, and removes the
    (now unique) first source. Every iteration removes one vertex.

    Args:
        dag (Dag): the DAG to connect

    Yields:
        ConnectionStep: the sources seen, the links added and the vertex removed

    """
    in_degree = [dag.in_degree(v) for v in dag.vertices]
    successors = [list(dag.successors(v)) for v in dag.vertices]
    remaining = set(dag.vertices)
    while remaining:
        found = tuple(sorted(v for v in remaining if in_degree[v - 1] == 0))
        links = tuple(Edge(u, v) for u, v in pairwise(found))
        for u, v, _ in links:
            successors[u - 1].append(v)
            in_degree[v - 1] += 1
        head = found[0]
        remaining.discard(head)
        for v in successors[head - 1]:
            in_degree[v - 1] -= 1
        logger.debug("sources %s: linked %d, removed %d", found, len(links), head)
        yield ConnectionStep(found, links, head)


def connect_dag(dag: Dag) -> tuple[Dag, tuple[Edge, ...]]:
    """Make a DAG connected by linking its sources.

    Args:
        dag (Dag): any valid DAG

    Returns:
        tuple[Dag, tuple[Edge, ...]]: the connected DAG (original edges first,
            in their original order) and the added edges that survive pruning,
            in insertion order

    """
    links = [link for step in connection_steps(dag) for link in step.links]
    linked = Dag(dag.n, dag.edges + tuple(links))
    path = hamiltonian_path(linked)
    if path is None:
        logger.error("no Hamiltonian path after linking sources of %r", dag)
        raise ConnectivityInvariantError(
            "linking sources produced a graph without a Hamiltonian path"
        )
    on_path = set(pairwise(path))
    kept = tuple(link for link in links if (link.u, link.v) in on_path)
    logger.info("connected DAG: %d links added, %d kept", len(links), len(kept))
    return Dag(dag.n, dag.edges + kept), kept


def _padded_path(u: int, v: int, first_id: int, pad: int, weight: float = 1.0):
    """Return the edges of u -> p1 -> ... -> p_pad -> v and the new vertex ids.

    The first edge carries `weight`, every other edge weight 1.
    """
    vertices = list(range(first_id, first_id + pad))
    chain = [u, *vertices, v]
    edges = [Edge(a, b) for a, b in pairwise(chain)]
    edges[0] = edges[0]._replace(weight=weight)
    return edges, vertices


def _check_pad(pad: int):
    if isinstance(pad, bool) or not isinstance(pad, (int, np.integer)):
        raise TypeError(f"M must be of type: int. Got: {type(pad).__name__}")
    if pad < 0:
        raise ValueError(f"M must be a nonnegative integer. Got: {pad}")


def zero_pad_connected(dag: Dag, M: int, weight: float = 1.0) -> PaddedDag:
    """Close a connected DAG with a return path of M zero-padded vertices.

    The new vertices are n + 1 .. n + M on the path sink -> n+1 -> ... ->
    n+M -> source, so the adjacency matrix is the block form [[A, C], [D, J]].

    Args:
        dag (Dag): a connected DAG
        M (int): the number of vertices on the return path
        weight (float): the weight of the edge leaving the sink

    Returns:
        PaddedDag: the closed graph

    """
    _check_pad(M)
    path = hamiltonian_path(dag)
    if path is None:
        raise NotConnected("zero-padding a single return path needs a connected DAG")
    source, sink = path[0], path[-1]
    returning, added = _padded_path(sink, source, dag.n + 1, int(M), weight)
    graph = Digraph(dag.n + int(M), dag.edges + tuple(returning))
    return PaddedDag(
        graph=graph,
        original_n=dag.n,
        added_vertices=tuple(added),
        connectivity_edges=(),
        return_path=tuple(returning),
        original_map=tuple(dag.vertices),
    )


def close_cycle(dag: Dag, weight: float = 1.0) -> PaddedDag:
    """Add the single sink -> source edge to a connected DAG.

    For one vertex the edge is the self-loop (1, 1), legal only in the
    augmented graph.
    """
    return zero_pad_connected(dag, 0, weight)


def cycle_graph(n: int) -> Digraph:
    """Return the directed cycle 1 -> 2 -> ... -> n -> 1, the circular domain."""
    return close_cycle(path_dag(n)).graph


def zero_pad_general(
    dag: Dag, M: int, weight: float = 1.0, renumber: bool = False
) -> PaddedDag:
    """Zero-pad any DAG: connect it, pad every added edge, close it.

    Args:
        dag (Dag): any valid DAG with N vertices
        M (int): the number of vertices on every added path
        weight (float): the weight of the edge leaving the sink
        renumber (bool): whether to relabel the result along its Hamiltonian
            cycle, starting at the source, so the adjacency matrix is upper
            triangular apart from its lower-left corner

    Returns:
        PaddedDag: the padded graph with N + (K + 1) M vertices, K the number
            of connectivity edges connect_dag keeps

    """
    _check_pad(M)
    M = int(M)
    connected, links = connect_dag(dag)
    next_id = dag.n + 1
    connectivity: list[Edge] = []
    added: list[int] = []
    for u, v, _ in links:
        edges, vertices = _padded_path(u, v, next_id, M)
        connectivity.extend(edges)
        added.extend(vertices)
        next_id += M
    path = hamiltonian_path(connected)
    assert path is not None
    returning, vertices = _padded_path(path[-1], path[0], next_id, M, weight)
    added.extend(vertices)

    graph = Digraph(next_id + M - 1, dag.edges + tuple(connectivity) + tuple(returning))
    padded = PaddedDag(
        graph=graph,
        original_n=dag.n,
        added_vertices=tuple(added),
        connectivity_edges=tuple(connectivity),
        return_path=tuple(returning),
        original_map=tuple(dag.vertices),
    )
    logger.info(
        "zero-padded %d vertices with K=%d, M=%d: %d vertices",
        dag.n,
        len(links),
        M,
        graph.n,
    )
    if renumber:
        padded = _renumber(padded)
    return padded


def _renumber(padded: PaddedDag) -> PaddedDag:
    """Relabel a padded graph along its Hamiltonian cycle from the source."""
    cycle = hamiltonian_path(padded.opened())
    assert cycle is not None
    # the opened path starts on the return path; rotate it to start at the source
    start = cycle.index(padded.return_path[-1].v)
    cycle = cycle[start:] + cycle[:start]
    permutation = [0] * padded.graph.n
    for new, old in enumerate(cycle, start=1):
        permutation[old - 1] = new

    def move(edges: tuple[Edge, ...]) -> tuple[Edge, ...]:
        return tuple(Edge(permutation[u - 1], permutation[v - 1], w) for u, v, w in edges)

    return PaddedDag(
        graph=padded.graph.relabel(permutation),
        original_n=padded.original_n,
        added_vertices=tuple(sorted(permutation[v - 1] for v in padded.added_vertices)),
        connectivity_edges=move(padded.connectivity_edges),
        return_path=move(padded.return_path),
        original_map=tuple(permutation[v - 1] for v in padded.original_map),
    )


def zero_pad_signal(padded: PaddedDag, x) -> np.ndarray:
    """Embed a signal on the original vertices, with zeros on added vertices."""
    x = as_signal(x, padded.original_n)
    out = np.zeros(padded.graph.n, dtype=x.dtype)
    out[np.asarray(padded.original_map) - 1] = x
    return out


def restrict_signal(padded: PaddedDag, y) -> np.ndarray:
    """Return the values of a padded-graph signal at the original vertices."""
    y = as_signal(y, padded.graph.n)
    return y[np.asarray(padded.original_map) - 1]


# explicitly define the outward facing API of this module
__all__ = [
    PaddedDag.__name__,
    ConnectionStep.__name__,
    connection_steps.__name__,
    connect_dag.__name__,
    close_cycle.__name__,
    cycle_graph.__name__,
    zero_pad_connected.__name__,
    zero_pad_general.__name__,
    zero_pad_signal.__name__,
    restrict_signal.__name__,
]  # pyright: ignore [reportUnsupportedDunderAll]
