"""Test cases for the connected DAG census."""

import math
import os
from fractions import Fraction
from unittest import TestCase, skipUnless

from .. import errors
from ..census import (
    CensusRow,
    census,
    census_range,
    census_union,
    connected_dag_count,
    connected_dag_from_mask,
    default_workers,
    enumerate_connected_dags,
    free_positions,
    has_distinct_eigenvalues,
    sink_path_counts,
    weighted_census,
)
from ..exact import distinct_eigenvalues_exact, source_sink_path_counts
from ..graph import hamiltonian_path, is_connected_dag
from ..padding import zero_pad_connected
from . import fixtures

# whether to run the censuses that take minutes rather than seconds
EXTENDED = os.environ.get("DAG_ZEROPAD_EXTENDED") == "1"


class ShouldEnumerateConnectedDags(TestCase):
    def test_counts(self):
        for n, expected in [(2, 1), (3, 2), (4, 8), (5, 64), (7, 32768), (8, 2097152), (9, 2**29)]:
            self.assertEqual(expected, connected_dag_count(n))
            self.assertEqual(n * (n - 3) // 2 + 1, len(free_positions(n)))

    def test_enumerated_counts(self):
        for n in range(2, 7):
            self.assertEqual(connected_dag_count(n), sum(1 for _ in enumerate_connected_dags(n)))

    def test_two_vertices(self):
        (dag,) = enumerate_connected_dags(2)
        self.assertEqual(((1, 2, 1.0),), dag.edges)

    def test_every_graph_is_connected(self):
        for n in range(2, 7):
            for dag in enumerate_connected_dags(n):
                self.assertTrue(is_connected_dag(dag))
                self.assertEqual(list(range(1, n + 1)), hamiltonian_path(dag))

    def test_brute_force(self):
        for n in range(2, 6):
            enumerated = {
                tuple((u, v) for u, v, _ in dag.edges) for dag in enumerate_connected_dags(n)
            }
            self.assertEqual(fixtures.brute_force_connected_dags(n), enumerated)

    def test_mask_order(self):
        self.assertEqual(((1, 3), (1, 4), (2, 4)), free_positions(4))
        dag = connected_dag_from_mask(4, 0b101)
        self.assertEqual([(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)], [(u, v) for u, v, _ in dag.edges])

    def test_budget(self):
        self.assertRaises(errors.TooLarge, next, enumerate_connected_dags(10))
        self.assertRaises(errors.TooLarge, census, 6, budget=5)
        self.assertRaises(ValueError, next, enumerate_connected_dags(1))
        self.assertRaises(TypeError, census, 4.0)


class ShouldClassifyWithoutMatrices(TestCase):
    def test_path_counts(self):
        for n in range(2, 7):
            for mask in range(connected_dag_count(n)):
                dag = connected_dag_from_mask(n, mask)
                self.assertEqual(tuple(source_sink_path_counts(dag)), sink_path_counts(n, mask))

    def test_path_counts_above_32_bits(self):
        # the complete DAG has C(n-2, k-1) paths with k edges
        for n in (38, 48, 64):
            full = (1 << len(free_positions(n))) - 1
            for mask in (full, full // 3):
                dag = connected_dag_from_mask(n, mask)
                self.assertEqual(tuple(source_sink_path_counts(dag)), sink_path_counts(n, mask))
        self.assertEqual(math.comb(62, 31), sink_path_counts(64, (1 << len(free_positions(64))) - 1)[32])

    def test_matches_exact_matrices(self):
        n = 5
        for mask in range(connected_dag_count(n)):
            dag = connected_dag_from_mask(n, mask)
            for zp in (0, 1, 2):
                for weight in (1, Fraction(1, 2)):
                    A = zero_pad_connected(dag, zp, weight=float(weight)).adjacency_matrix()
                    self.assertEqual(
                        distinct_eigenvalues_exact(A),
                        has_distinct_eigenvalues(n, mask, zp, weight),
                    )


class ShouldTallyCensusRows(TestCase):
    def test_two_vertices(self):
        row = census(2, workers=1)
        self.assertEqual(CensusRow(2, 0, Fraction(1), 1, 1, 0), row)
        self.assertEqual(0.0, row.repeated_pct)

    def test_partition_invariance(self):
        whole = census(6, workers=1)
        total = connected_dag_count(6)
        for cuts in ([0, 100, total], [0, 1, 511, 512, total], [0, total // 3, 2 * total // 3, total]):
            parts = [census_range(6, 0, 1, a, b) for a, b in zip(cuts, cuts[1:])]
            merged = parts[0]
            for part in reversed(parts[1:]):
                merged = part.merge(merged)
            self.assertEqual(whole, merged)

    def test_workers(self):
        self.assertEqual(census(6, 1, workers=1), census(6, 1, workers=2))

    def test_rejects_inconsistent_rows(self):
        self.assertRaises(ValueError, CensusRow, 3, 0, Fraction(1), 2, 2, 1)
        row = census(3, workers=1)
        self.assertRaises(ValueError, row.merge, census(3, 1, workers=1))

    def test_default_workers(self):
        previous = os.environ.get("DAG_ZEROPAD_WORKERS")
        try:
            os.environ["DAG_ZEROPAD_WORKERS"] = "3"
            self.assertEqual(3, default_workers())
            os.environ["DAG_ZEROPAD_WORKERS"] = "many"
            self.assertRaises(ValueError, default_workers)
        finally:
            if previous is None:
                os.environ.pop("DAG_ZEROPAD_WORKERS", None)
            else:
                os.environ["DAG_ZEROPAD_WORKERS"] = previous


class ShouldReproduceCensusRow:
    """A test case for one census configuration with known counts."""

    # the number of vertices
    n = None
    # the number of vertices on the sink-to-source path
    zp = 0
    # the weight of the edge leaving the sink
    weight = Fraction(1)
    # the number of graphs with distinct eigenvalues
    distinct = None
    # the number of graphs with a repeated eigenvalue
    repeated = None

    def test(self):
        row = census(self.n, self.zp, self.weight, workers=1, keep_failures=True)
        self.assertEqual(connected_dag_count(self.n), row.total)
        self.assertEqual(self.distinct, row.distinct)
        self.assertEqual(self.repeated, row.repeated)
        self.assertEqual(self.repeated, len(row.failures))
        for mask in row.failures[:3]:
            self.assertFalse(has_distinct_eigenvalues(self.n, mask, self.zp, self.weight))


class ShouldCountSevenVerticesWithEdge(ShouldReproduceCensusRow, TestCase):
    n = 7
    distinct = 32250
    repeated = 518


class ShouldCountSevenVerticesWithOnePaddedVertex(ShouldReproduceCensusRow, TestCase):
    n = 7
    zp = 1
    distinct = 32758
    repeated = 10


class ShouldCountSevenVerticesWithWeightedEdge(ShouldReproduceCensusRow, TestCase):
    n = 7
    weight = Fraction(1, 2)
    distinct = 32768
    repeated = 0


class ShouldCountFourVerticesWithWeightedEdge(ShouldReproduceCensusRow, TestCase):
    n = 4
    weight = Fraction(1, 2)
    distinct = 8
    repeated = 0


@skipUnless(EXTENDED, "set DAG_ZEROPAD_EXTENDED=1 to run")
class ShouldCountEightVerticesWithEdge(ShouldReproduceCensusRow, TestCase):
    n = 8
    distinct = 2075682
    repeated = 21470


@skipUnless(EXTENDED, "set DAG_ZEROPAD_EXTENDED=1 to run")
class ShouldCountEightVerticesWithOnePaddedVertex(ShouldReproduceCensusRow, TestCase):
    n = 8
    zp = 1
    distinct = 2088106
    repeated = 2097152 - 2088106


@skipUnless(EXTENDED, "set DAG_ZEROPAD_EXTENDED=1 to run")
class ShouldCountEightVerticesWithTwoPaddedVertices(ShouldReproduceCensusRow, TestCase):
    n = 8
    zp = 2
    distinct = 2095224
    repeated = 1928


@skipUnless(EXTENDED, "set DAG_ZEROPAD_EXTENDED=1 to run")
class ShouldCountEightVerticesWithWeightedEdge(ShouldReproduceCensusRow, TestCase):
    n = 8
    weight = Fraction(1, 2)
    distinct = 2097152
    repeated = 0


class ShouldBreakDownCensusUnion(TestCase):
    def test_seven(self):
        union = census_union(7, workers=1, keep_failures=True)
        self.assertEqual(32768, union.total)
        self.assertEqual(32250, union.resolved_by_edge)
        self.assertEqual(518, union.resolved_by_1zp)
        self.assertEqual(0, union.unresolved)
        self.assertEqual(10, union.regressed_by_1zp)
        self.assertEqual((), union.failures)

    def test_weighted_default(self):
        self.assertEqual(0, weighted_census(5, workers=1).repeated)
