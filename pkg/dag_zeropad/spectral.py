"""Eigendecomposition of adjacency matrices and the graph Fourier transform."""

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DegenerateSpectrum, LengthMismatch, NotDiagonalizable
from .exact import distinct_eigenvalues_exact

logger = logging.getLogger(__name__)


# eigenvector entries within this relative distance of the largest magnitude
# count as tied for the phase convention
_PHASE_TIE = 1e-9


@dataclass(frozen=True)
class Tolerances:
    """Acceptance thresholds for a numerical eigendecomposition."""

    gap: float = 1e-10
    """Minimum eigenvalue separation, relative to the spectral radius."""
    cond: float = 1e12
    """Maximum condition number of the eigenvector matrix."""
    strict_gap: bool = False
    """Whether a separation below `gap` rejects the decomposition outright."""


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """A = V diag(eigenvalues) V_inv, eigenvalues in ascending frequency order."""

    eigenvalues: np.ndarray
    V: np.ndarray
    V_inv: np.ndarray
    min_gap: float
    cond_estimate: float
    order: np.ndarray
    """The permutation taking the solver's output order to ascending frequency."""

    @property
    def n(self) -> int:
        """Return the size of the decomposed matrix."""
        return self.eigenvalues.shape[0]

    @property
    def frequencies(self) -> np.ndarray:
        """Return the principal arguments of the eigenvalues, in (-pi, pi]."""
        return principal_angle(self.eigenvalues)

    def reconstruct(self) -> np.ndarray:
        """Return V diag(eigenvalues) V_inv."""
        return (self.V * self.eigenvalues) @ self.V_inv


def principal_angle(values: np.ndarray) -> np.ndarray:
    """Return arg(values) mapped into (-pi, pi]."""
    angles = np.angle(values)
    # a rounding error in the imaginary part of -1 must not flip its frequency
    angles[angles <= -np.pi + 1e-12] = np.pi
    return angles


def _min_gap(eigenvalues: np.ndarray) -> float:
    if eigenvalues.shape[0] < 2:
        return float("inf")
    distances = np.abs(eigenvalues[:, None] - eigenvalues[None, :])
    np.fill_diagonal(distances, np.inf)
    return float(distances.min())


def _normalize_columns(vectors: np.ndarray) -> np.ndarray:
    """Scale each column to unit norm with its first dominant entry real positive."""
    vectors = vectors / np.linalg.norm(vectors, axis=0)
    magnitudes = np.abs(vectors)
    dominant = np.argmax(magnitudes >= magnitudes.max(axis=0) * (1 - _PHASE_TIE), axis=0)
    phases = vectors[dominant, np.arange(vectors.shape[1])]
    return vectors * (np.abs(phases) / phases)


def eigendecompose(
    matrix, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> EigenDecomposition:
    """Return the full complex eigendecomposition of a general square matrix.

    Args:
        matrix: the (non-symmetric, real or complex) square matrix
        tolerances (Tolerances): the acceptance thresholds

    Returns:
        EigenDecomposition: eigenvalues sorted by frequency then modulus

    """
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"matrix must be square. Got shape: {matrix.shape}")
    n = matrix.shape[0]

    eigenvalues, vectors = np.linalg.eig(matrix)
    eigenvalues = eigenvalues.astype(complex)
    order = np.lexsort((np.abs(eigenvalues), principal_angle(eigenvalues)))
    eigenvalues = eigenvalues[order]
    vectors = _normalize_columns(vectors.astype(complex)[:, order])

    radius = float(np.abs(eigenvalues).max())
    if n > 1 and radius <= np.finfo(float).eps * max(1.0, np.abs(matrix).max()):
        raise NotDiagonalizable(
            "every eigenvalue is zero (nilpotent matrix); zero-pad the graph first"
        )
    cond = float(np.linalg.cond(vectors))
    if not np.isfinite(cond) or cond > tolerances.cond:
        raise NotDiagonalizable(
            f"eigenvector matrix condition estimate {cond:.3g} exceeds {tolerances.cond:.3g}"
        )
    gap = _min_gap(eigenvalues)
    if gap < tolerances.gap * radius:
        if tolerances.strict_gap:
            raise NotDiagonalizable(
                f"eigenvalue separation {gap:.3g} below {tolerances.gap:.3g} x {radius:.3g}"
            )
        logger.warning(
            "repeated eigenvalue cluster (gap %.3g) accepted with condition %.3g",
            gap,
            cond,
        )
    try:
        inverse = np.linalg.inv(vectors)
    except np.linalg.LinAlgError as error:
        raise NotDiagonalizable(f"eigenvector matrix is singular: {error}") from error
    logger.debug("decomposed %dx%d matrix: min gap %.3g, cond %.3g", n, n, gap, cond)
    return EigenDecomposition(eigenvalues, vectors, inverse, gap, cond, order)


def gft(decomposition: EigenDecomposition, x) -> np.ndarray:
    """Return the graph Fourier transform X = V_inv x."""
    x = np.asarray(x)
    if x.ndim != 1 or x.shape[0] != decomposition.n:
        raise LengthMismatch(decomposition.n, x.shape[0] if x.ndim else 1)
    return decomposition.V_inv @ x


def igft(decomposition: EigenDecomposition, spectrum) -> np.ndarray:
    """Return the inverse graph Fourier transform x = V X."""
    spectrum = np.asarray(spectrum)
    if spectrum.ndim != 1 or spectrum.shape[0] != decomposition.n:
        raise LengthMismatch(
            decomposition.n, spectrum.shape[0] if spectrum.ndim else 1, "spectrum"
        )
    return decomposition.V @ spectrum


class SpectrumRecord(NamedTuple):
    """One eigenvalue with its frequency interpretation."""

    k: int
    eigenvalue: complex
    omega: float
    total_variation: float


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    """Per-eigenvalue frequency and total variation."""

    eigenvalues: np.ndarray
    omega: np.ndarray
    total_variation: np.ndarray
    ordering: np.ndarray

    def records(self) -> Iterator[SpectrumRecord]:
        """Yield the records with 1-based index k in report order."""
        for k, (value, omega, tv) in enumerate(
            zip(self.eigenvalues, self.omega, self.total_variation), start=1
        ):
            yield SpectrumRecord(k, complex(value), float(omega), float(tv))

    def by_total_variation(self) -> "SpectrumReport":
        """Return the report re-sorted from low to high total variation."""
        order = np.argsort(self.total_variation, kind="stable")
        return SpectrumReport(
            self.eigenvalues[order],
            self.omega[order],
            self.total_variation[order],
            self.ordering[order],
        )


def spectrum_report(decomposition: EigenDecomposition) -> SpectrumReport:
    """Return the frequency and total variation of every eigenvalue.

    E_TV(k) = |1 - lambda_k / max_m |lambda_m||.
    """
    radius = np.abs(decomposition.eigenvalues).max()
    if radius == 0:
        raise DegenerateSpectrum("the spectral radius is zero; E_TV is undefined")
    tv = np.abs(1 - decomposition.eigenvalues / radius)
    return SpectrumReport(
        decomposition.eigenvalues.copy(),
        decomposition.frequencies,
        tv,
        decomposition.order.copy(),
    )


# explicitly define the outward facing API of this module
__all__ = [
    Tolerances.__name__,
    EigenDecomposition.__name__,
    SpectrumRecord.__name__,
    SpectrumReport.__name__,
    principal_angle.__name__,
    eigendecompose.__name__,
    gft.__name__,
    igft.__name__,
    spectrum_report.__name__,
    distinct_eigenvalues_exact.__name__,
]  # pyright: ignore [reportUnsupportedDunderAll]
