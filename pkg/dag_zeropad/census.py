"""Exhaustive census of connected DAGs and the distinctness of their spectra.

A connected DAG on n vertices is numbered along its Hamiltonian path, so its
adjacency matrix is upper triangular with a full super-diagonal. The entries
strictly above the super-diagonal are free; bit b of a mask sets the b-th of
them in row-major order. Every mask in [0, 2^(n(n-3)/2+1)) is one graph and
no two masks give isomorphic graphs.

The census never builds a matrix. Closing a connected DAG with a return path
leaves a characteristic polynomial that depends only on the number of
source-to-sink paths of each length, so each graph costs one path-count pass
and a cached square-free test.

"Repeated" counts graphs with an eigenvalue of algebraic multiplicity above
one. Such a matrix may still be diagonalizable; the census does not decide it.
"""

import functools
import logging
import os
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from fractions import Fraction

import tqdm

from .errors import TooLarge
from .exact import closure_charpoly, is_square_free
from .graph import Dag, Edge

logger = logging.getLogger(__name__)

# the largest n enumerated unless a caller raises the budget
DEFAULT_BUDGET = 9

# the environment variable holding the default number of census workers
WORKERS_VARIABLE = "DAG_ZEROPAD_WORKERS"

# the number of masks a worker classifies per task
_CHUNK = 1 << 12

# path counts are packed into one integer, one digit of at least this many bits per length
_DIGIT = 32


def default_workers() -> int:
    """Return the census worker count from the environment (default 1)."""
    value = os.environ.get(WORKERS_VARIABLE, "1")
    try:
        workers = int(value)
    except ValueError as error:
        raise ValueError(f"{WORKERS_VARIABLE} must be an integer. Got: {value!r}") from error
    return max(1, workers)


def _as_weight(weight) -> Fraction:
    if isinstance(weight, bool):
        raise TypeError(f"weight must be a rational number. Got: {weight!r}")
    weight = Fraction(weight)
    if weight == 0:
        raise ValueError("the closing edge weight must be nonzero")
    return weight


# MARK: enumeration


def connected_dag_count(n: int) -> int:
    """Return 2^(n(n-3)/2+1), the number of connected DAGs on n labelled-by-path vertices."""
    return 1 << free_position_count(n)


def free_position_count(n: int) -> int:
    """Return the number of entries strictly above the super-diagonal."""
    return (n - 1) * (n - 2) // 2


@functools.lru_cache(maxsize=None)
def free_positions(n: int) -> tuple[tuple[int, int], ...]:
    """Return the free (u, v) positions, 1-based, in bit order."""
    return tuple((u, v) for u in range(1, n + 1) for v in range(u + 2, n + 1))


def _check_size(n: int, budget: int):
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be of type: int. Got: {type(n).__name__}")
    if n < 2:
        raise ValueError(f"the census needs n >= 2. Got: {n}")
    if n > budget:
        raise TooLarge(
            f"n={n} enumerates {connected_dag_count(n):,} graphs, above the budget n <= {budget}"
        )


def connected_dag_from_mask(n: int, mask: int) -> Dag:
    """Return the connected DAG selected by a mask, edges in row-major order."""
    chosen = {
        position for bit, position in enumerate(free_positions(n)) if mask >> bit & 1
    }
    chosen.update((u, u + 1) for u in range(1, n))
    return Dag(n, tuple(Edge(u, v) for u, v in sorted(chosen)))


def enumerate_connected_dags(n: int, budget: int = DEFAULT_BUDGET) -> Iterator[Dag]:
    """Yield every connected DAG on n vertices in mask order.

    Args:
        n (int): the number of vertices, at least 2
        budget (int): the largest n allowed

    Yields:
        Dag: the graph of mask 0, 1, ..., 2^(n(n-3)/2+1) - 1

    """
    _check_size(n, budget)
    for mask in range(connected_dag_count(n)):
        yield connected_dag_from_mask(n, mask)


# MARK: classification


@functools.lru_cache(maxsize=None)
def _predecessor_bits(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Entry v holds (bit, u) for every free position u -> v, 0-based vertices."""
    table: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for bit, (u, v) in enumerate(free_positions(n)):
        table[v - 1].append((bit, u - 1))
    return tuple(tuple(entries) for entries in table)


def sink_path_counts(n: int, mask: int) -> tuple[int, ...]:
    """Return the number of source-to-sink paths with k edges, k = 0 .. n-1.

    Counts by length are packed into one integer, so extending every path by
    one edge is a single shift. A vertex sees at most 2^(n-2) paths of one
    length, so a digit of n bits never carries into the next.
    """
    digit = max(_DIGIT, n)
    counts = [1]
    for v, predecessors in enumerate(_predecessor_bits(n)[1:], start=1):
        total = counts[v - 1]
        for bit, u in predecessors:
            if mask >> bit & 1:
                total += counts[u]
        counts.append(total << digit)
    packed = counts[-1]
    digit_mask = (1 << digit) - 1
    return tuple(packed >> (digit * k) & digit_mask for k in range(n))


@functools.lru_cache(maxsize=None)
def _closure_is_distinct(
    counts: tuple[int, ...], zp: int, numerator: int, denominator: int
) -> bool:
    # scaled by the denominator: DAG edges and padded edges weigh c, the closing edge a
    scaled = [count * denominator**k for k, count in enumerate(counts)]
    return is_square_free(closure_charpoly(scaled, zp, numerator, denominator))


def has_distinct_eigenvalues(n: int, mask: int, zp: int = 0, weight=1) -> bool:
    """Return True if the closed graph of a mask has all eigenvalues distinct.

    Args:
        n (int): the number of vertices
        mask (int): the graph
        zp (int): the number of vertices on the sink-to-source path
        weight: the rational weight of the edge leaving the sink

    Returns:
        bool: whether the characteristic polynomial is square-free

    """
    weight = _as_weight(weight)
    return _closure_is_distinct(
        sink_path_counts(n, mask), zp, weight.numerator, weight.denominator
    )


# MARK: tallies


@dataclass(frozen=True)
class CensusRow:
    """The distinct and repeated eigenvalue counts of one census configuration."""

    n: int
    zp: int
    weight: Fraction
    total: int
    distinct: int
    repeated: int
    failures: tuple[int, ...] = field(default=(), repr=False, compare=False)
    """The masks with a repeated eigenvalue, when collected."""

    def __post_init__(self):
        if self.distinct + self.repeated != self.total:
            raise ValueError(
                f"distinct ({self.distinct}) + repeated ({self.repeated}) != total ({self.total})"
            )

    @property
    def repeated_pct(self) -> float:
        """Return the percentage of graphs with a repeated eigenvalue."""
        return 100.0 * self.repeated / self.total if self.total else 0.0

    def merge(self, other: "CensusRow") -> "CensusRow":
        """Return the tally of two disjoint mask ranges."""
        if (self.n, self.zp, self.weight) != (other.n, other.zp, other.weight):
            raise ValueError(f"cannot merge census rows {self!r} and {other!r}")
        return CensusRow(
            n=self.n,
            zp=self.zp,
            weight=self.weight,
            total=self.total + other.total,
            distinct=self.distinct + other.distinct,
            repeated=self.repeated + other.repeated,
            failures=tuple(sorted(self.failures + other.failures)),
        )


@dataclass(frozen=True)
class CensusUnion:
    """How a single return edge and one zero-padded vertex resolve repetition.

    resolved_by_edge counts graphs already distinct with the edge alone,
    resolved_by_1zp those repeated with the edge but distinct with one added
    vertex, unresolved those repeated both ways, and regressed_by_1zp those
    distinct with the edge but repeated with one added vertex.
    """

    n: int
    total: int
    resolved_by_edge: int
    resolved_by_1zp: int
    unresolved: int
    regressed_by_1zp: int
    failures: tuple[int, ...] = field(default=(), repr=False, compare=False)
    """The unresolved masks, when collected."""

    def merge(self, other: "CensusUnion") -> "CensusUnion":
        """Return the tally of two disjoint mask ranges."""
        if self.n != other.n:
            raise ValueError(f"cannot merge census unions for n={self.n} and n={other.n}")
        return CensusUnion(
            n=self.n,
            total=self.total + other.total,
            resolved_by_edge=self.resolved_by_edge + other.resolved_by_edge,
            resolved_by_1zp=self.resolved_by_1zp + other.resolved_by_1zp,
            unresolved=self.unresolved + other.unresolved,
            regressed_by_1zp=self.regressed_by_1zp + other.regressed_by_1zp,
            failures=tuple(sorted(self.failures + other.failures)),
        )


def census_range(
    n: int, zp: int, weight, start: int, stop: int, keep_failures: bool = False
) -> CensusRow:
    """Tally the masks in [start, stop) in this process."""
    weight = _as_weight(weight)
    distinct = 0
    failures = []
    for mask in range(start, stop):
        if _closure_is_distinct(
            sink_path_counts(n, mask), zp, weight.numerator, weight.denominator
        ):
            distinct += 1
        elif keep_failures:
            failures.append(mask)
    total = stop - start
    return CensusRow(n, zp, weight, total, distinct, total - distinct, tuple(failures))


def union_range(n: int, start: int, stop: int, keep_failures: bool = False) -> CensusUnion:
    """Tally the union breakdown of the masks in [start, stop) in this process."""
    by_edge = by_vertex = unresolved = regressed = 0
    failures = []
    for mask in range(start, stop):
        counts = sink_path_counts(n, mask)
        edge = _closure_is_distinct(counts, 0, 1, 1)
        vertex = _closure_is_distinct(counts, 1, 1, 1)
        if edge:
            by_edge += 1
            regressed += not vertex
        elif vertex:
            by_vertex += 1
        else:
            unresolved += 1
            if keep_failures:
                failures.append(mask)
    return CensusUnion(
        n, stop - start, by_edge, by_vertex, unresolved, regressed, tuple(failures)
    )


def _ranges(total: int) -> list[tuple[int, int]]:
    return [(start, min(start + _CHUNK, total)) for start in range(0, total, _CHUNK)]


def _run(task: Callable, n: int, workers: int, desc: str):
    """Map task(start, stop) over every mask range and merge the partial tallies."""
    ranges = _ranges(connected_dag_count(n))
    partials = []
    with tqdm.tqdm(total=len(ranges), desc=desc, unit="chunk", leave=False) as progress:
        if workers <= 1:
            for start, stop in ranges:
                partials.append(task(start, stop))
                progress.update()
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(task, start, stop) for start, stop in ranges]
                for future in as_completed(futures):
                    partials.append(future.result())
                    progress.update()
                    logger.debug("census chunk done: %r", partials[-1])
    return functools.reduce(lambda a, b: a.merge(b), partials)


def census(
    n: int,
    zp: int = 0,
    weight=1,
    workers: int | None = None,
    budget: int = DEFAULT_BUDGET,
    keep_failures: bool = False,
) -> CensusRow:
    """Count the connected DAGs whose closed graph has distinct eigenvalues.

    Args:
        n (int): the number of vertices
        zp (int): the number of vertices on the sink-to-source path (0, 1 or 2)
        weight: the rational weight of the edge leaving the sink
        workers (int): the number of worker processes; None reads
            DAG_ZEROPAD_WORKERS
        budget (int): the largest n allowed
        keep_failures (bool): whether to collect the masks with a repeated
            eigenvalue in CensusRow.failures

    Returns:
        CensusRow: the tally, identical for any worker count

    """
    _check_size(n, budget)
    if isinstance(zp, bool) or not isinstance(zp, int) or zp < 0:
        raise ValueError(f"zp must be a nonnegative integer. Got: {zp!r}")
    weight = _as_weight(weight)
    workers = default_workers() if workers is None else workers
    row = _run(
        functools.partial(census_range, n, zp, weight, keep_failures=keep_failures),
        n,
        workers,
        f"census n={n} zp={zp} w={weight}",
    )
    logger.info(
        "census n=%d zp=%d w=%s: %d distinct, %d repeated of %d",
        n,
        zp,
        weight,
        row.distinct,
        row.repeated,
        row.total,
    )
    return row


def census_union(
    n: int,
    workers: int | None = None,
    budget: int = DEFAULT_BUDGET,
    keep_failures: bool = False,
) -> CensusUnion:
    """Break the census down by whether one return edge or one padded vertex resolves it."""
    _check_size(n, budget)
    workers = default_workers() if workers is None else workers
    union = _run(
        functools.partial(union_range, n, keep_failures=keep_failures),
        n,
        workers,
        f"census union n={n}",
    )
    logger.info("census union n=%d: %r", n, union)
    return union


def weighted_census(
    n: int,
    weight=Fraction(1, 2),
    zp: int = 0,
    workers: int | None = None,
    budget: int = DEFAULT_BUDGET,
    keep_failures: bool = False,
) -> CensusRow:
    """Run the census with a weighted edge leaving the sink (default 1/2)."""
    return census(n, zp, weight, workers, budget, keep_failures)


# explicitly define the outward facing API of this module
__all__ = [
    CensusRow.__name__,
    CensusUnion.__name__,
    default_workers.__name__,
    connected_dag_count.__name__,
    free_position_count.__name__,
    free_positions.__name__,
    connected_dag_from_mask.__name__,
    enumerate_connected_dags.__name__,
    sink_path_counts.__name__,
    has_distinct_eigenvalues.__name__,
    census_range.__name__,
    union_range.__name__,
    census.__name__,
    census_union.__name__,
    weighted_census.__name__,
]  # pyright: ignore [reportUnsupportedDunderAll]
