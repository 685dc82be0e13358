"""Graphs, matrices and helpers shared by the test cases."""

import itertools

import numpy as np

from ..graph import Dag, dag_from_edge_list, is_connected_dag

# a connected DAG on 8 vertices with Hamiltonian path 1 .. 8
CONNECTED_EDGES = [
    (1, 2),
    (1, 3),
    (1, 7),
    (2, 3),
    (2, 5),
    (2, 6),
    (3, 4),
    (4, 5),
    (5, 6),
    (5, 8),
    (6, 7),
    (7, 8),
]

CONNECTED_ADJACENCY = np.array(
    [
        [0, 1, 1, 0, 0, 0, 1, 0],
        [0, 0, 1, 0, 1, 1, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 1],
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 0, 0],
    ],
    dtype=float,
)

# the same graph closed by the return path 8 -> 9 -> 10 -> 1
CONNECTED_PADDED_ADJACENCY = np.array(
    [
        [0, 1, 1, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 1, 0, 1, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    ],
    dtype=float,
)

# a disconnected DAG that connect_dag connects with the edges (2, 3) and (5, 6)
DISCONNECTED_EDGES = [
    (1, 2),
    (1, 3),
    (3, 4),
    (4, 5),
    (4, 6),
    (6, 7),
    (7, 8),
    (5, 8),
]

# a disconnected DAG of nilpotency index 5 (longest path 1 3 4 5 8)
NILPOTENT_FIVE_EDGES = [
    (1, 2),
    (1, 3),
    (3, 4),
    (4, 5),
    (5, 8),
    (6, 7),
    (7, 8),
]

# the path 1 .. 20 without (5, 6) and (12, 13), plus shortcuts inside each piece
GAPPED_PATH_EDGES = [
    (v, v + 1) for v in range(1, 20) if v not in (5, 12)
] + [(1, 3), (7, 9), (14, 17)]


def connected_dag() -> Dag:
    """Return the connected 8-vertex DAG."""
    return dag_from_edge_list(8, CONNECTED_EDGES)


def disconnected_dag() -> Dag:
    """Return the disconnected 8-vertex DAG."""
    return dag_from_edge_list(8, DISCONNECTED_EDGES)


def nilpotent_five_dag() -> Dag:
    """Return the disconnected DAG of nilpotency index 5."""
    return dag_from_edge_list(8, NILPOTENT_FIVE_EDGES)


def gapped_path_dag() -> Dag:
    """Return the 20-vertex path with two missing links."""
    return dag_from_edge_list(20, GAPPED_PATH_EDGES)


def all_dags(n: int):
    """Yield every DAG on n vertices whose edges go from lower to higher ids.

    Every DAG is isomorphic to one of these; connected ones are filtered by
    the caller.
    """
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for chosen in itertools.product((False, True), repeat=len(pairs)):
        yield Dag(n, tuple(pair for pair, keep in zip(pairs, chosen) if keep))


def brute_force_connected_dags(n: int) -> set[tuple[tuple[int, int], ...]]:
    """Return the edge sets of every connected forward DAG on n vertices."""
    return {
        tuple(sorted((u, v) for u, v, _ in dag.edges))
        for dag in all_dags(n)
        if is_connected_dag(dag)
    }
