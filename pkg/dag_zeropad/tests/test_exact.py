"""Test cases for exact characteristic polynomials."""

from fractions import Fraction
from unittest import TestCase

import numpy as np

from .. import errors
from ..census import enumerate_connected_dags
from ..exact import (
    characteristic_polynomial,
    closure_charpoly,
    distinct_eigenvalues_exact,
    exact_determinant,
    is_square_free,
    source_sink_path_counts,
)
from ..graph import dag_from_edge_list, path_dag
from ..padding import zero_pad_connected
from . import fixtures


class ShouldComputeCharacteristicPolynomial(TestCase):
    def test_cycle(self):
        A = zero_pad_connected(path_dag(3), 0).adjacency_matrix()
        self.assertEqual([1, 0, 0, -1], characteristic_polynomial(A))

    def test_diagonal(self):
        self.assertEqual([1, -3, 2], characteristic_polynomial([[1, 0], [0, 2]]))

    def test_rational(self):
        coefficients = characteristic_polynomial([[0, Fraction(1, 2)], [1, 0]])
        self.assertEqual([1, 0, Fraction(-1, 2)], coefficients)

    def test_matches_numpy(self):
        rng = np.random.default_rng(10)
        for _ in range(20):
            A = rng.integers(-3, 4, size=(6, 6))
            expected = np.round(np.poly(A)).astype(int).tolist()
            self.assertEqual(expected, characteristic_polynomial(A))

    def test_large_entries(self):
        A = [[10**30, 1], [0, 10**30]]
        self.assertEqual([1, -2 * 10**30, 10**60], characteristic_polynomial(A))

    def test_rejects_inexact(self):
        self.assertRaises(errors.NonExactEntries, characteristic_polynomial, [[0.1]])
        self.assertRaises(errors.NonExactEntries, characteristic_polynomial, [[1j]])
        self.assertRaises(errors.NonExactEntries, characteristic_polynomial, [[True]])
        self.assertRaises(ValueError, characteristic_polynomial, [[1, 2]])


class ShouldComputeExactDeterminant(TestCase):
    def test(self):
        self.assertEqual(-2, exact_determinant([[1, 2], [3, 4]]))
        self.assertEqual(6, exact_determinant([[1, 0, 0], [0, 2, 0], [0, 0, 3]]))

    def test_padded(self):
        A = fixtures.CONNECTED_PADDED_ADJACENCY.astype(int)
        self.assertIn(exact_determinant(A), (1, -1))


class ShouldTestDistinctEigenvalues(TestCase):
    def test_square_free(self):
        self.assertTrue(is_square_free([1, 0, -1]))
        self.assertFalse(is_square_free([1, -2, 1]))
        self.assertTrue(is_square_free([0, 0, 1, -3, 2]))
        self.assertFalse(is_square_free([Fraction(1, 2), -1, Fraction(1, 2)]))

    def test_identity(self):
        self.assertFalse(distinct_eigenvalues_exact(np.eye(3, dtype=int)))

    def test_padded(self):
        self.assertTrue(distinct_eigenvalues_exact(fixtures.CONNECTED_PADDED_ADJACENCY))

    def test_cycle(self):
        self.assertTrue(distinct_eigenvalues_exact(zero_pad_connected(path_dag(8), 2).adjacency_matrix()))

    def test_nilpotent(self):
        self.assertFalse(distinct_eigenvalues_exact(fixtures.CONNECTED_ADJACENCY))

    def test_one_by_one(self):
        self.assertTrue(distinct_eigenvalues_exact([[0]]))

    def test_scaling_invariance(self):
        A = zero_pad_connected(fixtures.connected_dag(), 1, weight=0.5).adjacency_matrix()
        self.assertEqual(distinct_eigenvalues_exact(A), distinct_eigenvalues_exact(2 * A))


class ShouldCountSourceToSinkPaths(TestCase):
    def test_path(self):
        self.assertEqual([0, 0, 0, 1], source_sink_path_counts(path_dag(4)))

    def test_connected(self):
        counts = source_sink_path_counts(fixtures.connected_dag())
        self.assertEqual(8, len(counts))
        A = fixtures.CONNECTED_ADJACENCY.astype(int)
        for k in range(8):
            self.assertEqual(np.linalg.matrix_power(A, k)[0, 7], counts[k])

    def test_weighted(self):
        dag = dag_from_edge_list(3, [(1, 2, 0.5), (2, 3), (1, 3, 2.0)])
        self.assertEqual([0, 2, Fraction(1, 2)], source_sink_path_counts(dag))


class ShouldMatchClosedFormClosurePolynomial(TestCase):
    def test_exhaustive(self):
        for n in range(2, 7):
            for dag in enumerate_connected_dags(n):
                counts = source_sink_path_counts(dag)
                for zp in (0, 1, 2):
                    A = zero_pad_connected(dag, zp).adjacency_matrix().astype(int)
                    self.assertEqual(characteristic_polynomial(A), closure_charpoly(counts, zp))

    def test_weighted(self):
        dag = fixtures.connected_dag()
        counts = source_sink_path_counts(dag)
        for zp in (0, 1, 2):
            A = zero_pad_connected(dag, zp, weight=0.5).adjacency_matrix()
            expected = characteristic_polynomial(A)
            self.assertEqual(expected, closure_charpoly(counts, zp, Fraction(1, 2)))
