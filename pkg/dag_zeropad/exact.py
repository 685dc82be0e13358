"""Exact characteristic polynomials and the distinct-eigenvalue test.

Nothing in this module touches floating point arithmetic once the input has
been converted: matrices become numpy object arrays of Python integers and
polynomials are lists of integers, highest degree first.
"""

import math
import numbers
from collections.abc import Sequence
from fractions import Fraction

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.sqfreetools import dup_sqf_p

from .errors import NonExactEntries
from .graph import Dag, hamiltonian_path

# the largest denominator accepted when reading a binary float as a rational
_MAX_DENOMINATOR = 2**20

Coefficient = int | Fraction


def _as_fraction(value) -> Fraction:
    """Return value as an exact rational, or raise NonExactEntries."""
    if isinstance(value, (bool, np.bool_)):
        raise NonExactEntries(f"boolean matrix entry {value!r}")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Complex) and not isinstance(value, numbers.Real):
        if value.imag != 0:
            raise NonExactEntries(f"complex matrix entry {value!r}")
        value = value.real
    if isinstance(value, numbers.Real):
        value = float(value)
        if not math.isfinite(value):
            raise NonExactEntries(f"non-finite matrix entry {value!r}")
        exact = Fraction(value)
        if exact.denominator > _MAX_DENOMINATOR:
            raise NonExactEntries(
                f"entry {value!r} is not a short binary fraction; pass a Fraction instead"
            )
        return exact
    raise NonExactEntries(f"matrix entry {value!r} is not a number")


def integer_matrix(matrix) -> tuple[np.ndarray, int]:
    """Clear the denominators of a rational matrix.

    Args:
        matrix: a square matrix of integers, Fractions or short binary floats

    Returns:
        tuple[np.ndarray, int]: the object array of Python ints c * matrix
            and the scale c (the lcm of all denominators)

    """
    rows = [[_as_fraction(value) for value in row] for row in matrix]
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise ValueError("matrix must be square and nonempty")
    scale = math.lcm(1, *(value.denominator for row in rows for value in row))
    ints = np.empty((n, n), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            ints[i, j] = int(value * scale)
    return ints, scale


def _faddeev_leverrier(matrix: np.ndarray) -> list[int]:
    """Return det(xI - B) of an integer object array, highest degree first."""
    n = matrix.shape[0]
    identity = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            identity[i, j] = int(i == j)
    coefficients = [1]
    m = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        # M_k = B M_{k-1} + c_{n-k+1} I and c_{n-k} = -tr(B M_k) / k
        m = matrix @ m + coefficients[-1] * identity
        product = matrix @ m
        trace = sum(product[i, i] for i in range(n))
        coefficient, remainder = divmod(-trace, k)
        if remainder:
            raise ArithmeticError("Faddeev-LeVerrier division was not exact")
        coefficients.append(int(coefficient))
    return coefficients


def characteristic_polynomial(matrix) -> list[Coefficient]:
    """Return the coefficients of det(xI - A), highest degree first.

    Integer matrices give integer coefficients; rational entries give
    Fractions where the value is not integral.
    """
    ints, scale = integer_matrix(matrix)
    coefficients = _faddeev_leverrier(ints)
    if scale == 1:
        return coefficients
    # det(xI - cA) has coefficient c^k a_k at x^(n - k)
    scaled = [Fraction(b, scale**k) for k, b in enumerate(coefficients)]
    return [int(a) if a.denominator == 1 else a for a in scaled]


def exact_determinant(matrix) -> Coefficient:
    """Return det(A) exactly, from the constant term of its characteristic polynomial."""
    coefficients = characteristic_polynomial(matrix)
    n = len(coefficients) - 1
    return coefficients[-1] if n % 2 == 0 else -coefficients[-1]


def is_square_free(coefficients: Sequence[Coefficient]) -> bool:
    """Return True if gcd(p, p') is constant, i.e. p has no repeated root.

    Args:
        coefficients: the polynomial, highest degree first, integer or rational

    Returns:
        bool: whether the polynomial is square-free over the rationals

    """
    values = [Fraction(c) for c in coefficients]
    scale = math.lcm(1, *(value.denominator for value in values))
    poly = [ZZ(int(value * scale)) for value in values]
    # leading zeros would change the degree, not the roots
    while len(poly) > 1 and poly[0] == 0:
        poly.pop(0)
    return bool(dup_sqf_p(poly, ZZ))


def distinct_eigenvalues_exact(matrix) -> bool:
    """Return True if every eigenvalue of A has algebraic multiplicity one.

    Denominators are cleared first; scaling maps the spectrum bijectively so
    distinctness is unchanged.
    """
    ints, _ = integer_matrix(matrix)
    return is_square_free(_faddeev_leverrier(ints))


# MARK: closed form for a connected DAG closed by one return path


def source_sink_path_counts(dag: Dag) -> list[Coefficient]:
    """Return the weighted number of source-to-sink paths by edge count.

    Args:
        dag (Dag): a connected DAG

    Returns:
        list: entry k is the sum over paths with k edges of the product of
            their (exact rational) weights, k = 0..n-1

    """
    path = hamiltonian_path(dag)
    if path is None:
        raise ValueError("source-to-sink path counts need a connected DAG")
    counts = {path[0]: [Fraction(0)] * dag.n}
    counts[path[0]][0] = Fraction(1)
    for u in path[1:]:
        counts[u] = [Fraction(0)] * dag.n
    for u in path:
        for v in dag.successors(u):
            weight = _as_fraction(dag.weight(u, v))
            for k in range(dag.n - 1):
                if counts[u][k]:
                    counts[v][k + 1] += weight * counts[u][k]
    return [int(c) if c.denominator == 1 else c for c in counts[path[-1]]]


def closure_charpoly(
    path_counts: Sequence[Coefficient],
    zp: int,
    closing_weight: Coefficient = 1,
    path_weight: Coefficient = 1,
) -> list[Coefficient]:
    """Return det(xI - A) of a connected DAG closed by a return path.

    Every directed cycle of the closed graph runs through the return path, so
    no two cycles are disjoint and the determinant expansion keeps only single
    cycles: p(x) = x^T - sum_k w P_k x^(n - 1 - k) with T = n + zp.

    Args:
        path_counts: weighted source-to-sink path counts by edge count (n entries)
        zp (int): the number of vertices on the return path
        closing_weight: the weight of the first return edge (leaving the sink)
        path_weight: the weight of every other return-path edge

    Returns:
        list: the coefficients, highest degree first

    """
    n = len(path_counts)
    coefficients: list[Coefficient] = [0] * (n + zp + 1)
    coefficients[0] = 1
    closing = closing_weight * path_weight**zp
    for k, count in enumerate(path_counts):
        coefficients[zp + 1 + k] -= closing * count
    return coefficients


# explicitly define the outward facing API of this module
__all__ = [
    integer_matrix.__name__,
    characteristic_polynomial.__name__,
    exact_determinant.__name__,
    is_square_free.__name__,
    distinct_eigenvalues_exact.__name__,
    source_sink_path_counts.__name__,
    closure_charpoly.__name__,
]  # pyright: ignore [reportUnsupportedDunderAll]
