"""Polynomial systems on graphs, evaluated in the vertex and spectral domains."""

import logging
import warnings
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial

from .errors import OrderExceedsPadding
from .graph import Dag, Digraph, as_signal
from .padding import PaddedDag, restrict_signal, zero_pad_general, zero_pad_signal
from .spectral import (
    DEFAULT_TOLERANCES,
    EigenDecomposition,
    Tolerances,
    eigendecompose,
    gft,
    igft,
)

logger = logging.getLogger(__name__)

# the largest imaginary residue silently dropped from a real spectral output
IMAGINARY_TOLERANCE = 1e-8


class ImaginaryResidualWarning(RuntimeWarning):
    """A spectral evaluation of a real system left a sizeable imaginary part."""


def filter_coefficients(h) -> np.ndarray:
    """Validate system coefficients h_0 .. h_S and return them as a float array."""
    h = np.atleast_1d(np.asarray(h))
    if h.ndim != 1 or h.shape[0] == 0:
        raise ValueError("filter coefficients must be a nonempty sequence h_0 .. h_S")
    if np.iscomplexobj(h):
        raise TypeError("filter coefficients must be real")
    return h.astype(float)


def filter_order(h) -> int:
    """Return the system order S of coefficients h_0 .. h_S."""
    return filter_coefficients(h).shape[0] - 1


def apply_vertex_domain(graph: Digraph, h, x) -> np.ndarray:
    """Return y = sum_s h_s A^s x by Horner's scheme over repeated shifts.

    Args:
        graph (Digraph): the graph whose adjacency matrix is the shift
        h: the system coefficients h_0 .. h_S
        x: the input signal

    Returns:
        np.ndarray: the output signal

    """
    h = filter_coefficients(h)
    x = as_signal(x, graph.n)
    y = h[-1] * x
    for coefficient in h[-2::-1]:
        y = graph.shift(y) + coefficient * x
    return y


def frequency_response(decomposition: EigenDecomposition, h) -> np.ndarray:
    """Return H(lambda_k) = sum_s h_s lambda_k^s for every eigenvalue."""
    return polynomial.polyval(decomposition.eigenvalues, filter_coefficients(h))


def transfer_function(decomposition: EigenDecomposition, h) -> np.ndarray:
    """Return the diagonal transfer function matrix H(Lambda)."""
    return np.diag(frequency_response(decomposition, h))


def apply_spectral(decomposition: EigenDecomposition, h, x) -> np.ndarray:
    """Return y = V H(Lambda) V_inv x.

    A real input gives a real output; an imaginary residue above
    IMAGINARY_TOLERANCE is reported with an ImaginaryResidualWarning.
    """
    x = as_signal(x, decomposition.n)
    y = igft(decomposition, frequency_response(decomposition, h) * gft(decomposition, x))
    if np.iscomplexobj(x):
        return y
    residue = float(np.abs(y.imag).max())
    if residue > IMAGINARY_TOLERANCE:
        logger.warning("spectral output has imaginary residue %.3g", residue)
        warnings.warn(
            f"discarding imaginary residue {residue:.3g} from a real system output; "
            "the eigenvector basis is ill-conditioned",
            ImaginaryResidualWarning,
            stacklevel=2,
        )
    return y.real


@dataclass(frozen=True, eq=False)
class ZeroPaddedDomain:
    """A zero-padded DAG together with the eigendecomposition of its adjacency.

    Building it once and filtering many signals shares the decomposition,
    which is read-only.
    """

    dag: Dag
    padded: PaddedDag
    decomposition: EigenDecomposition
    pad: int

    @classmethod
    def build(
        cls,
        dag: Dag,
        M: int,
        weight: float = 1.0,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
        renumber: bool = False,
    ) -> "ZeroPaddedDomain":
        """Zero-pad a DAG with M vertices per added path and decompose it."""
        padded = zero_pad_general(dag, M, weight=weight, renumber=renumber)
        decomposition = eigendecompose(padded.adjacency_matrix(), tolerances)
        return cls(dag, padded, decomposition, int(M))

    def gft(self, x) -> np.ndarray:
        """Return the GFT of the zero-padded version of an original signal."""
        return gft(self.decomposition, zero_pad_signal(self.padded, x))

    def filter(self, h, x, full: bool = False) -> np.ndarray:
        """Evaluate a system of order S <= M spectrally on the padded graph.

        Args:
            h: the system coefficients h_0 .. h_S
            x: the signal on the original vertices
            full (bool): whether to return the output on every padded vertex
                instead of the original vertices only

        Returns:
            np.ndarray: the output signal

        """
        order = filter_order(h)
        if order > self.pad:
            raise OrderExceedsPadding(order, self.pad)
        y = apply_spectral(self.decomposition, h, zero_pad_signal(self.padded, x))
        return y if full else restrict_signal(self.padded, y)


def padded_filter_output(
    dag: Dag,
    h,
    x,
    M: int,
    weight: float = 1.0,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> tuple[PaddedDag, np.ndarray]:
    """Return the padded graph and the spectral output on all of its vertices."""
    order = filter_order(h)
    if order > M:
        raise OrderExceedsPadding(order, M)
    domain = ZeroPaddedDomain.build(dag, M, weight=weight, tolerances=tolerances)
    return domain.padded, domain.filter(h, x, full=True)


def filter_via_zero_padding(
    dag: Dag,
    h,
    x,
    M: int,
    weight: float = 1.0,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> np.ndarray:
    """Evaluate a system on a DAG through the GFT of its zero-padded graph.

    Args:
        dag (Dag): any valid DAG
        h: the system coefficients h_0 .. h_S, with S <= M
        x: the signal on the DAG
        M (int): the number of zero-padded vertices on every added path
        weight (float): the weight of the edge leaving the sink
        tolerances (Tolerances): the decomposition acceptance thresholds

    Returns:
        np.ndarray: the output at the original vertices, equal to
            apply_vertex_domain(dag, h, x) up to rounding

    """
    padded, y = padded_filter_output(dag, h, x, M, weight=weight, tolerances=tolerances)
    return restrict_signal(padded, y)


# explicitly define the outward facing API of this module
__all__ = [
    ImaginaryResidualWarning.__name__,
    filter_coefficients.__name__,
    filter_order.__name__,
    apply_vertex_domain.__name__,
    frequency_response.__name__,
    transfer_function.__name__,
    apply_spectral.__name__,
    ZeroPaddedDomain.__name__,
    padded_filter_output.__name__,
    filter_via_zero_padding.__name__,
]  # pyright: ignore [reportUnsupportedDunderAll]
