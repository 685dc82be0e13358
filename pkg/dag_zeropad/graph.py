"""Weighted directed graphs, DAG validation, structural queries and the shift operator.

Vertex ids are 1-based at every public boundary. Storage indexed by vertex
(successor lists, numpy index arrays) is 0-based internally.
"""

import heapq
import logging
import math
import numbers
import operator
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .errors import (
    CycleDetected,
    DuplicateEdge,
    LengthMismatch,
    NotConnected,
    SelfLoop,
    VertexOutOfRange,
    ZeroWeight,
)

logger = logging.getLogger(__name__)


class Edge(NamedTuple):
    """A weighted directed edge u -> v between 1-based vertex ids."""

    u: int
    v: int
    weight: float = 1.0


EdgeLike = Edge | tuple[int, int] | tuple[int, int, float] | Sequence


def _as_edge(item: EdgeLike) -> Edge:
    """Coerce a (u, v) or (u, v, w) sequence into an Edge.

    Args:
        item: the edge description to coerce

    Returns:
        Edge: the validated-type edge (range checks happen in the graph)

    """
    if len(item) == 2:
        u, v = item
        weight = 1.0
    elif len(item) == 3:
        u, v, weight = item
    else:
        raise ValueError(f"an edge must be (u, v) or (u, v, weight). Got: {item!r}")
    if not isinstance(weight, numbers.Real):
        raise TypeError(f"edge weight must be a real number. Got: {weight!r}")
    # operator.index rejects floats and strings with a TypeError
    return Edge(operator.index(u), operator.index(v), float(weight))


def as_signal(x, n: int, what: str = "signal") -> np.ndarray:
    """Return x as a 1-D floating (or complex) array of length n.

    Args:
        x: array-like of values, one per vertex
        n (int): the vertex count the signal must match
        what (str): the name used in the error message

    Returns:
        np.ndarray: the signal as a numpy vector

    """
    x = np.asarray(x)
    if x.ndim != 1:
        raise LengthMismatch(n, x.size, what)
    if not np.issubdtype(x.dtype, np.inexact):
        x = x.astype(float)
    if x.shape[0] != n:
        raise LengthMismatch(n, x.shape[0], what)
    return x


@dataclass(frozen=True)
class Digraph:
    """A weighted directed graph on vertices 1..n.

    This is the container for augmented graphs, which contain a cycle (and,
    for the single-vertex closure, a self-loop). Acyclic inputs use Dag.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    # whether an edge (u, u) is legal for this kind of graph
    allows_self_loops = True

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, numbers.Integral):
            raise TypeError(f"n must be of type: int. Got: {type(self.n).__name__}")
        if self.n < 1:
            raise ValueError(f"n must be a positive integer. Got: {self.n}")
        edges = tuple(_as_edge(edge) for edge in self.edges)
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", edges)

        seen = set()
        for u, v, weight in edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise VertexOutOfRange(u, v, self.n)
            if u == v and not self.allows_self_loops:
                raise SelfLoop(u)
            if (u, v) in seen:
                raise DuplicateEdge(u, v)
            if weight == 0 or not math.isfinite(weight):
                raise ZeroWeight(u, v, weight)
            seen.add((u, v))
        self._validate()

    def _validate(self):
        """Check invariants beyond the edge-level ones (none for digraphs)."""

    # MARK: adjacency structure

    @cached_property
    def _out(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            out[u - 1].append(v)
        return tuple(map(tuple, out))

    @cached_property
    def _in(self) -> tuple[tuple[int, ...], ...]:
        into = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            into[v - 1].append(u)
        return tuple(map(tuple, into))

    @cached_property
    def _weights(self) -> dict[tuple[int, int], float]:
        return {(u, v): weight for u, v, weight in self.edges}

    @cached_property
    def _coo(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        rows = np.fromiter((e.u - 1 for e in self.edges), dtype=np.intp)
        cols = np.fromiter((e.v - 1 for e in self.edges), dtype=np.intp)
        weights = np.fromiter((e.weight for e in self.edges), dtype=float)
        return rows, cols, weights

    def successors(self, u: int) -> tuple[int, ...]:
        """Return the heads of the edges leaving u."""
        return self._out[u - 1]

    def predecessors(self, v: int) -> tuple[int, ...]:
        """Return the tails of the edges entering v."""
        return self._in[v - 1]

    def in_degree(self, v: int) -> int:
        """Return the number of edges entering v."""
        return len(self._in[v - 1])

    def out_degree(self, u: int) -> int:
        """Return the number of edges leaving u."""
        return len(self._out[u - 1])

    def has_edge(self, u: int, v: int) -> bool:
        """Return True if the edge u -> v exists."""
        return (u, v) in self._weights

    def weight(self, u: int, v: int) -> float:
        """Return the weight of u -> v, or 0.0 if there is no such edge."""
        return self._weights.get((u, v), 0.0)

    @property
    def vertices(self) -> range:
        """Return the 1-based vertex ids."""
        return range(1, self.n + 1)

    def adjacency_matrix(self) -> np.ndarray:
        """Return the dense n x n adjacency matrix; row u lists successors of u."""
        rows, cols, weights = self._coo
        matrix = np.zeros((self.n, self.n))
        matrix[rows, cols] = weights
        return matrix

    def shift(self, x) -> np.ndarray:
        """Return y = A x evaluated edge by edge (the backward shift)."""
        x = as_signal(x, self.n)
        rows, cols, weights = self._coo
        y = np.zeros(self.n, dtype=np.result_type(x.dtype, float))
        np.add.at(y, rows, weights * x[cols])
        return y

    def relabel(self, permutation: Sequence[int]):
        """Return a copy whose vertex `old` is renamed `permutation[old - 1]`.

        Edge order is preserved, so row-wise accumulation order is too.
        """
        if sorted(permutation) != list(self.vertices):
            raise ValueError(f"not a permutation of 1..{self.n}: {permutation!r}")
        edges = tuple(
            Edge(permutation[u - 1], permutation[v - 1], w) for u, v, w in self.edges
        )
        return type(self)(self.n, edges)


def _kahn(graph: Digraph) -> tuple[list[int], set[int]]:
    """Topologically sort with lowest-id-first tie breaking.

    Returns:
        the order found and the set of vertices left on cycles (empty for DAGs)

    """
    in_degree = [graph.in_degree(v) for v in graph.vertices]
    ready = [v for v in graph.vertices if in_degree[v - 1] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for v in graph.successors(u):
            in_degree[v - 1] -= 1
            if in_degree[v - 1] == 0:
                heapq.heappush(ready, v)
    return order, set(graph.vertices) - set(order)


def _cycle_witness(graph: Digraph, remaining: set[int]) -> list[int]:
    """Return one directed cycle among vertices Kahn's algorithm could not order."""
    # every remaining vertex has a remaining predecessor, so walking backwards
    # must eventually revisit a vertex
    v = min(remaining)
    position = {}
    walk = []
    while v not in position:
        position[v] = len(walk)
        walk.append(v)
        v = min(p for p in graph.predecessors(v) if p in remaining)
    cycle = walk[position[v] :][::-1]
    start = cycle.index(min(cycle))
    return cycle[start:] + cycle[:start]


@dataclass(frozen=True)
class Dag(Digraph):
    """A weighted directed acyclic graph on vertices 1..n."""

    allows_self_loops = False

    def _validate(self):
        order, remaining = _kahn(self)
        if remaining:
            raise CycleDetected(_cycle_witness(self, remaining))
        object.__setattr__(self, "_order", tuple(order))

    @property
    def topological_order(self) -> tuple[int, ...]:
        """Return the lowest-id-first topological order."""
        return self._order  # pyright: ignore[reportAttributeAccessIssue]


# MARK: operations


def dag_from_edge_list(n: int, edges: Iterable[EdgeLike]) -> Dag:
    """Build and validate a DAG from (u, v) or (u, v, weight) tuples.

    Args:
        n (int): the number of vertices
        edges: the edges with 1-based endpoints and optional nonzero weights

    Returns:
        Dag: the validated graph

    """
    return Dag(n, tuple(edges))


def adjacency_matrix(graph: Digraph) -> np.ndarray:
    """Return the dense adjacency matrix of a graph."""
    return graph.adjacency_matrix()


def topological_order(dag: Dag) -> list[int]:
    """Return the deterministic (lowest id first) topological order."""
    return list(dag.topological_order)


def sources(graph: Digraph) -> list[int]:
    """Return the vertices with in-degree 0, ascending."""
    return [v for v in graph.vertices if graph.in_degree(v) == 0]


def sinks(graph: Digraph) -> list[int]:
    """Return the vertices with out-degree 0, ascending."""
    return [v for v in graph.vertices if graph.out_degree(v) == 0]


def nilpotency_index(dag: Dag) -> int:
    """Return the smallest m with A^m = 0.

    That is one more than the number of edges on the longest directed path,
    found by dynamic programming over the topological order.
    """
    longest = [0] * dag.n
    for u in dag.topological_order:
        for v in dag.successors(u):
            longest[v - 1] = max(longest[v - 1], longest[u - 1] + 1)
    return max(longest) + 1


def shift(graph: Digraph, x) -> np.ndarray:
    """Return the shifted signal y = A x."""
    return graph.shift(x)


def hamiltonian_path(dag: Dag) -> list[int] | None:
    """Return the unique Hamiltonian path of a DAG, or None if there is none.

    A DAG has a Hamiltonian path exactly when consecutive vertices of its
    topological order are all joined by edges; the path is then that order.
    """
    order = dag.topological_order
    for u, v in zip(order, order[1:]):
        if not dag.has_edge(u, v):
            return None
    return list(order)


def is_connected_dag(dag: Dag) -> bool:
    """Return True if every vertex pair is ordered by reachability."""
    return hamiltonian_path(dag) is not None


def renumber_by_hamiltonian(dag: Dag) -> tuple[Dag, tuple[int, ...]]:
    """Relabel a connected DAG along its Hamiltonian path.

    Args:
        dag (Dag): a connected DAG

    Returns:
        tuple[Dag, tuple[int, ...]]: the relabelled DAG (upper triangular
            adjacency with a nonzero super-diagonal) and the permutation
            where entry old - 1 holds the new id of vertex old

    """
    path = hamiltonian_path(dag)
    if path is None:
        raise NotConnected("the DAG has no Hamiltonian path to renumber along")
    permutation = [0] * dag.n
    for new, old in enumerate(path, start=1):
        permutation[old - 1] = new
    return dag.relabel(permutation), tuple(permutation)


# MARK: constructors


def path_dag(n: int) -> Dag:
    """Return the directed path 1 -> 2 -> ... -> n, a classical signal domain."""
    return Dag(n, tuple(Edge(v, v + 1) for v in range(1, n)))


def random_dag(
    n: int, p: float, rng: np.random.Generator, shuffle: bool = True
) -> Dag:
    """Return a random DAG with each forward edge present with probability p.

    Args:
        n (int): the number of vertices
        p (float): the edge probability for every pair i < j
        rng (np.random.Generator): the random number generator to draw from
        shuffle (bool): whether to relabel vertices by a random permutation

    Returns:
        Dag: the random graph

    """
    i, j = np.triu_indices(n, k=1)
    keep = rng.random(i.shape[0]) < p
    edges = [Edge(int(u) + 1, int(v) + 1) for u, v in zip(i[keep], j[keep])]
    dag = Dag(n, tuple(edges))
    if shuffle:
        dag = dag.relabel([int(v) + 1 for v in rng.permutation(n)])
    return dag


def random_connected_dag(
    n: int, p: float, rng: np.random.Generator, shuffle: bool = False
) -> Dag:
    """Return a random DAG containing the Hamiltonian path 1 -> ... -> n."""
    dag = random_dag(n, p, rng, shuffle=False)
    edges = list(dag.edges)
    for v in range(1, n):
        if not dag.has_edge(v, v + 1):
            edges.append(Edge(v, v + 1))
    dag = Dag(n, tuple(edges))
    if shuffle:
        dag = dag.relabel([int(v) + 1 for v in rng.permutation(n)])
    return dag


# explicitly define the outward facing API of this module
__all__ = [
    Edge.__name__,
    Digraph.__name__,
    Dag.__name__,
    as_signal.__name__,
    dag_from_edge_list.__name__,
    adjacency_matrix.__name__,
    topological_order.__name__,
    sources.__name__,
    sinks.__name__,
    nilpotency_index.__name__,
    shift.__name__,
    hamiltonian_path.__name__,
    is_connected_dag.__name__,
    renumber_by_hamiltonian.__name__,
    path_dag.__name__,
    random_dag.__name__,
    random_connected_dag.__name__,
]  # pyright: ignore [reportUnsupportedDunderAll]
