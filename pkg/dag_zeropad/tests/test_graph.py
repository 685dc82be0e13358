"""Test cases for the graph types and ordering operations."""

from unittest import TestCase

import numpy as np

from .. import errors
from ..graph import (
    Dag,
    Digraph,
    Edge,
    dag_from_edge_list,
    hamiltonian_path,
    is_connected_dag,
    nilpotency_index,
    path_dag,
    random_connected_dag,
    random_dag,
    renumber_by_hamiltonian,
    shift,
    sinks,
    sources,
    topological_order,
)
from . import fixtures


class ShouldBuildAdjacencyMatrix(TestCase):
    def test(self):
        dag = fixtures.connected_dag()
        self.assertEqual(8, dag.n)
        self.assertTrue(np.array_equal(fixtures.CONNECTED_ADJACENCY, dag.adjacency_matrix()))

    def test_weights(self):
        dag = dag_from_edge_list(3, [(1, 2, 0.5), (2, 3)])
        self.assertEqual(0.5, dag.adjacency_matrix()[0, 1])
        self.assertEqual(1.0, dag.adjacency_matrix()[1, 2])
        self.assertEqual(0.5, dag.weight(1, 2))
        self.assertEqual(0.0, dag.weight(1, 3))


class ShouldRejectInvalidEdges(TestCase):
    def test_cycle(self):
        with self.assertRaises(errors.CycleDetected) as context:
            dag_from_edge_list(3, [(1, 2), (2, 3), (3, 1)])
        self.assertEqual([1, 2, 3], context.exception.witness)
        self.assertIn("1 -> 2 -> 3 -> 1", str(context.exception))

    def test_self_loop(self):
        self.assertRaises(errors.SelfLoop, dag_from_edge_list, 2, [(1, 1)])

    def test_out_of_range(self):
        self.assertRaises(errors.VertexOutOfRange, dag_from_edge_list, 2, [(1, 3)])
        self.assertRaises(errors.VertexOutOfRange, dag_from_edge_list, 2, [(0, 1)])

    def test_duplicate(self):
        self.assertRaises(errors.DuplicateEdge, dag_from_edge_list, 3, [(1, 2), (1, 2, 2.0)])

    def test_zero_weight(self):
        self.assertRaises(errors.ZeroWeight, dag_from_edge_list, 2, [(1, 2, 0.0)])
        self.assertRaises(errors.ZeroWeight, dag_from_edge_list, 2, [(1, 2, float("nan"))])

    def test_types(self):
        self.assertRaises(TypeError, dag_from_edge_list, "3", [])
        self.assertRaises(TypeError, dag_from_edge_list, 3, [(1.5, 2)])
        self.assertRaises(ValueError, dag_from_edge_list, 0, [])

    def test_errors_are_value_errors(self):
        self.assertRaises(ValueError, dag_from_edge_list, 2, [(1, 2), (2, 1)])


class ShouldAllowSelfLoopsInDigraphs(TestCase):
    def test(self):
        graph = Digraph(1, [(1, 1)])
        self.assertEqual(1.0, graph.adjacency_matrix()[0, 0])


class ShouldOrderVertices(TestCase):
    def test_connected(self):
        dag = fixtures.connected_dag()
        self.assertEqual(list(range(1, 9)), topological_order(dag))
        self.assertEqual([1], sources(dag))
        self.assertEqual([8], sinks(dag))

    def test_lowest_id_first(self):
        dag = dag_from_edge_list(4, [(3, 1), (4, 2)])
        self.assertEqual([3, 1, 4, 2], topological_order(dag))
        self.assertEqual([3, 4], sources(dag))
        self.assertEqual([1, 2], sinks(dag))

    def test_edgeless(self):
        dag = dag_from_edge_list(3, [])
        self.assertEqual([1, 2, 3], topological_order(dag))
        self.assertIsNone(hamiltonian_path(dag))

    def test_order_respects_edges(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            dag = random_dag(int(rng.integers(1, 15)), 0.3, rng)
            position = {v: k for k, v in enumerate(topological_order(dag))}
            for u, v, _ in dag.edges:
                self.assertLess(position[u], position[v])

    def test_single_vertex(self):
        dag = dag_from_edge_list(1, [])
        self.assertEqual([1], sources(dag))
        self.assertEqual([1], sinks(dag))


class ShouldMatchDegreesOfEdgeList(TestCase):
    def test(self):
        rng = np.random.default_rng(1)
        for _ in range(100):
            n = int(rng.integers(1, 25))
            dag = random_dag(n, float(rng.uniform(0.0, 0.5)), rng)
            heads = {v for _, v, _ in dag.edges}
            tails = {u for u, _, _ in dag.edges}
            self.assertEqual([v for v in range(1, n + 1) if v not in heads], sources(dag))
            self.assertEqual([v for v in range(1, n + 1) if v not in tails], sinks(dag))


class ShouldFindHamiltonianPath(TestCase):
    def test_connected(self):
        self.assertEqual(list(range(1, 9)), hamiltonian_path(fixtures.connected_dag()))
        self.assertTrue(is_connected_dag(fixtures.connected_dag()))

    def test_disconnected(self):
        self.assertIsNone(hamiltonian_path(fixtures.disconnected_dag()))
        self.assertFalse(is_connected_dag(fixtures.nilpotent_five_dag()))

    def test_single_vertex(self):
        self.assertEqual([1], hamiltonian_path(Dag(1)))

    def test_relabelled(self):
        dag = dag_from_edge_list(3, [(3, 1), (1, 2), (3, 2)])
        self.assertEqual([3, 1, 2], hamiltonian_path(dag))


class ShouldComputeNilpotencyIndex(TestCase):
    def test_five(self):
        self.assertEqual(5, nilpotency_index(fixtures.nilpotent_five_dag()))

    def test_path(self):
        self.assertEqual(8, nilpotency_index(path_dag(8)))

    def test_edgeless(self):
        self.assertEqual(1, nilpotency_index(dag_from_edge_list(4, [])))

    def test_matches_matrix_powers(self):
        rng = np.random.default_rng(1)
        for _ in range(30):
            dag = random_dag(int(rng.integers(1, 10)), 0.4, rng)
            A = dag.adjacency_matrix()
            index = nilpotency_index(dag)
            self.assertFalse(np.any(np.linalg.matrix_power(A, index)))
            self.assertTrue(np.any(np.linalg.matrix_power(A, index - 1)))


class ShouldShiftSignals(TestCase):
    def test_backward_shift(self):
        x = np.arange(1.0, 9.0)
        self.assertTrue(np.array_equal(fixtures.CONNECTED_ADJACENCY @ x, shift(fixtures.connected_dag(), x)))

    def test_path(self):
        y = shift(path_dag(4), [1, 2, 3, 4])
        self.assertTrue(np.array_equal([2.0, 3.0, 4.0, 0.0], y))

    def test_length_mismatch(self):
        self.assertRaises(errors.LengthMismatch, shift, path_dag(4), [1, 2, 3])


class ShouldRenumberByHamiltonianPath(TestCase):
    def test(self):
        dag = dag_from_edge_list(4, [(3, 1), (1, 4), (4, 2), (3, 2)])
        renumbered, permutation = renumber_by_hamiltonian(dag)
        self.assertEqual((2, 4, 1, 3), permutation)
        A = renumbered.adjacency_matrix()
        self.assertFalse(np.any(np.tril(A)))
        self.assertTrue(np.all(np.diag(A, k=1) == 1))

    def test_disconnected(self):
        self.assertRaises(errors.NotConnected, renumber_by_hamiltonian, fixtures.disconnected_dag())


class ShouldGenerateRandomDags(TestCase):
    def test_connected(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            dag = random_connected_dag(int(rng.integers(1, 20)), 0.2, rng, shuffle=True)
            self.assertTrue(is_connected_dag(dag))

    def test_deterministic(self):
        first = random_dag(12, 0.3, np.random.default_rng(7))
        second = random_dag(12, 0.3, np.random.default_rng(7))
        self.assertEqual(first, second)

    def test_edge_type(self):
        dag = random_dag(5, 1.0, np.random.default_rng(3), shuffle=False)
        self.assertEqual(10, len(dag.edges))
        self.assertIsInstance(dag.edges[0], Edge)
