"""Exceptions raised throughout the code base."""


class GraphError(ValueError):
    """Base class for structural problems with a graph."""

    # the process exit code the command line maps this error to
    exit_code = 1


class VertexOutOfRange(GraphError):
    """An edge endpoint is outside of 1..n."""

    def __init__(self, u: int, v: int, n: int):
        self.u, self.v, self.n = u, v, n
        super().__init__(f"edge ({u}, {v}) has an endpoint outside of 1..{n}")


class SelfLoop(GraphError):
    """A DAG may not contain an edge from a vertex to itself."""

    def __init__(self, u: int):
        self.u = u
        super().__init__(f"self-loop at vertex {u}")


class DuplicateEdge(GraphError):
    """The ordered pair (u, v) appears more than once."""

    def __init__(self, u: int, v: int):
        self.u, self.v = u, v
        super().__init__(f"duplicate edge ({u}, {v})")


class ZeroWeight(GraphError):
    """Edge weights must be finite and nonzero."""

    def __init__(self, u: int, v: int, weight=0.0):
        self.u, self.v = u, v
        super().__init__(f"edge ({u}, {v}) has invalid weight {weight!r}")


class CycleDetected(GraphError):
    """The edge set contains a directed cycle."""

    def __init__(self, witness: list[int]):
        # the vertices of one directed cycle, in order, 1-based
        self.witness = list(witness)
        path = " -> ".join(map(str, self.witness + self.witness[:1]))
        super().__init__(f"directed cycle detected: {path}")


class NotConnected(GraphError):
    """The operation requires a connected DAG (one with a Hamiltonian path)."""


class LengthMismatch(ValueError):
    """A signal or spectrum does not match the vertex count of its graph."""

    exit_code = 1

    def __init__(self, expected: int, got: int, what: str = "signal"):
        self.expected, self.got = expected, got
        super().__init__(f"{what} length must be {expected}. Got: {got}")


class OrderExceedsPadding(ValueError):
    """A filter of order S cannot be evaluated alias-free with M < S."""

    exit_code = 1

    def __init__(self, order: int, pad: int):
        self.order, self.pad = order, pad
        super().__init__(
            f"filter order S={order} exceeds the zero-padding M={pad}; use M >= {order}"
        )


class ParseError(ValueError):
    """An input file could not be parsed."""

    exit_code = 1

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NonExactEntries(TypeError):
    """Matrix entries cannot be represented exactly as rationals."""

    exit_code = 1


class NotDiagonalizable(ArithmeticError):
    """The eigenvector basis is missing or too ill-conditioned to use."""

    exit_code = 2


class DegenerateSpectrum(ArithmeticError):
    """Every eigenvalue is zero, so no frequency ordering exists."""

    exit_code = 2


class TooLarge(ValueError):
    """The requested enumeration exceeds the configured budget."""

    exit_code = 3


class ConnectivityInvariantError(RuntimeError):
    """Connecting a DAG produced a graph without a Hamiltonian path."""

    exit_code = 1


# explicitly define the outward facing API of this module
__all__ = [
    GraphError.__name__,
    VertexOutOfRange.__name__,
    SelfLoop.__name__,
    DuplicateEdge.__name__,
    ZeroWeight.__name__,
    CycleDetected.__name__,
    NotConnected.__name__,
    LengthMismatch.__name__,
    OrderExceedsPadding.__name__,
    ParseError.__name__,
    NonExactEntries.__name__,
    NotDiagonalizable.__name__,
    DegenerateSpectrum.__name__,
    TooLarge.__name__,
    ConnectivityInvariantError.__name__,
]  # pyright: ignore [reportUnsupportedDunderAll]
