"""Zero-padding of directed acyclic graphs for graph Fourier analysis."""

import argparse
import contextlib
import json
import logging
import sys
from fractions import Fraction

import numpy as np

from .. import _formats
from ..census import DEFAULT_BUDGET, census, census_union
from ..enums import Command, FilterMode, OutputFormat
from ..errors import NotDiagonalizable
from ..filtering import ZeroPaddedDomain, apply_vertex_domain, filter_order
from ..graph import (
    Dag,
    hamiltonian_path,
    is_connected_dag,
    nilpotency_index,
    sinks,
    sources,
)
from ..padding import connect_dag, zero_pad_general
from ..spectral import Tolerances, eigendecompose, spectrum_report

logger = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """An argument parser that exits with status 1 on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _get_args(argv=None):
    """Parse command line arguments and return them."""
    # subparsers are built with the class of their parent
    parser = _ArgumentParser(description=__doc__)
    parser.add_argument(
        "--verbose",
        "-v",
        action="count",
        default=0,
        help="Log progress to stderr (-v for info, -vv for debug)",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    # options shared by the commands that read a graph
    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument(
        "--input",
        "-i",
        type=str,
        required=True,
        help="The graph file: an edge list, or JSON when it ends in .json",
    )
    graph.add_argument(
        "--output",
        "-o",
        type=str,
        default=None,
        help="The file to write to (default: stdout)",
    )
    # options shared by the commands that write tables or signals
    formatted = argparse.ArgumentParser(add_help=False)
    formatted.add_argument(
        "--format",
        "-f",
        type=str,
        default=OutputFormat.CSV.value,
        choices=OutputFormat.values(),
        help="The output format",
    )
    # options shared by the commands that zero-pad
    padding = argparse.ArgumentParser(add_help=False)
    padding.add_argument(
        "--pad",
        "-M",
        type=int,
        default=None,
        help="The number of vertices on every added path",
    )
    padding.add_argument(
        "--weight",
        "-w",
        type=float,
        default=1.0,
        help="The weight of the edge leaving the sink",
    )
    padding.add_argument(
        "--renumber",
        action="store_true",
        help="Number the padded graph along its Hamiltonian cycle",
    )
    # options shared by the commands that decompose
    spectral = argparse.ArgumentParser(add_help=False)
    spectral.add_argument(
        "--tol-gap",
        type=float,
        default=Tolerances.gap,
        help="The minimum eigenvalue separation relative to the spectral radius",
    )
    spectral.add_argument(
        "--tol-cond",
        type=float,
        default=Tolerances.cond,
        help="The maximum condition number of the eigenvector matrix",
    )
    spectral.add_argument(
        "--strict-gap",
        action="store_true",
        help="Reject decompositions whose eigenvalue separation is below --tol-gap",
    )
    signal = argparse.ArgumentParser(add_help=False)
    signal.add_argument(
        "--signal",
        "-s",
        type=str,
        required=True,
        help="The signal file: one value per line, or vertex,value rows",
    )

    commands.add_parser(
        Command.INFO.value,
        parents=[graph, formatted],
        help="Describe the ordering of a DAG",
    )
    commands.add_parser(
        Command.CONNECT.value,
        parents=[graph, formatted],
        help="Connect a DAG by linking its sources",
    )
    zeropad = commands.add_parser(
        Command.ZEROPAD.value, parents=[graph, padding], help="Zero-pad a DAG"
    )
    zeropad.add_argument(
        "--adjacency",
        type=str,
        default=None,
        metavar="PATH",
        help="Also write the padded adjacency matrix as CSV",
    )
    commands.add_parser(
        Command.SPECTRUM.value,
        parents=[graph, formatted, padding, spectral],
        help="Write the eigenvalues, frequencies and total variations",
    )
    commands.add_parser(
        Command.GFT.value,
        parents=[graph, formatted, padding, spectral, signal],
        help="Write the graph Fourier transform of a zero-padded signal",
    )
    filtering = commands.add_parser(
        Command.FILTER.value,
        parents=[graph, formatted, padding, spectral, signal],
        help="Apply a polynomial graph filter",
    )
    filtering.add_argument(
        "--coeffs",
        "-c",
        type=str,
        required=True,
        metavar="h0,h1,...",
        help="The filter coefficients, or a file with one per line",
    )
    filtering.add_argument(
        "--mode",
        "-m",
        type=str,
        default=FilterMode.SPECTRAL.value,
        choices=[mode.value for mode in FilterMode],
        help="The domain to evaluate the filter in",
    )

    tally = commands.add_parser(
        Command.CENSUS.value, help="Count connected DAGs with distinct eigenvalues"
    )
    tally.add_argument("n", type=int, help="The number of vertices")
    tally.add_argument(
        "--zp",
        type=int,
        default=0,
        help="The number of vertices on the sink-to-source path",
    )
    tally.add_argument(
        "--weight",
        "-w",
        type=Fraction,
        default=Fraction(1),
        help="The rational weight of the edge leaving the sink (e.g. 1/2)",
    )
    tally.add_argument(
        "--workers",
        "-j",
        type=int,
        default=None,
        help="The number of worker processes (default: $DAG_ZEROPAD_WORKERS or 1)",
    )
    tally.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="The largest n to enumerate",
    )
    tally.add_argument(
        "--union",
        action="store_true",
        help="Break the census down by single edge versus one padded vertex",
    )
    tally.add_argument(
        "--dump-failures",
        type=str,
        default=None,
        metavar="PATH",
        help="Write the mask of every failing graph, one per line",
    )
    tally.add_argument("--output", "-o", type=str, default=None)
    tally.add_argument(
        "--format",
        "-f",
        type=str,
        default=OutputFormat.CSV.value,
        choices=OutputFormat.values(),
    )
    # parse arguments and return them
    return parser.parse_args(argv)


@contextlib.contextmanager
def _output(path: str | None):
    """Yield a text stream for a path, or stdout when there is none."""
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as stream:
            yield stream


def _tolerances(args) -> Tolerances:
    return Tolerances(gap=args.tol_gap, cond=args.tol_cond, strict_gap=args.strict_gap)


def _domain(args, dag: Dag, pad: int) -> ZeroPaddedDomain:
    """Zero-pad and decompose, with a hint on the rare failure."""
    try:
        return ZeroPaddedDomain.build(
            dag, pad, args.weight, _tolerances(args), renumber=args.renumber
        )
    except NotDiagonalizable as error:
        raise NotDiagonalizable(f"{error}; try a larger --pad than {pad}") from error


def _info(args, dag: Dag):
    path = hamiltonian_path(dag)
    report = {
        "n": dag.n,
        "edges": len(dag.edges),
        "sources": sources(dag),
        "sinks": sinks(dag),
        "nilpotency index": nilpotency_index(dag),
        "connected": is_connected_dag(dag),
        "hamiltonian": path,
    }
    with _output(args.output) as stream:
        if OutputFormat(args.format) is OutputFormat.JSON:
            json.dump(report, stream, indent=2)
            stream.write("\n")
            return
        for key, value in report.items():
            if isinstance(value, bool):
                value = str(value).lower()
            elif isinstance(value, list):
                value = " ".join(map(str, value))
            elif value is None:
                value = "none"
            print(f"{key}: {value}", file=stream)


def _connect(args, dag: Dag):
    connected, added = connect_dag(dag)
    with _output(args.output) as stream:
        if OutputFormat(args.format) is OutputFormat.JSON:
            obj = _formats.graph_to_json(connected)
            obj["added_edges"] = [[u, v, w] for u, v, w in added]
            json.dump(obj, stream, indent=2)
            stream.write("\n")
            return
        for u, v, _ in added:
            stream.write(f"# added: {u} {v}\n")
        stream.write(_formats.format_edge_list(connected))


def _zeropad(args, dag: Dag):
    padded = zero_pad_general(dag, args.pad or 0, args.weight, renumber=args.renumber)
    with _output(args.output) as stream:
        json.dump(_formats.padded_to_json(padded), stream, indent=2)
        stream.write("\n")
    if args.adjacency is not None:
        with _output(args.adjacency) as stream:
            _formats.write_matrix(padded.adjacency_matrix(), stream)


def _spectrum(args, dag: Dag):
    if args.pad is None:
        # without zero-padding every eigenvalue of a DAG is zero
        try:
            decomposition = eigendecompose(dag.adjacency_matrix(), _tolerances(args))
        except NotDiagonalizable as error:
            raise NotDiagonalizable(f"{error}; pass --pad M to zero-pad it") from error
    else:
        decomposition = _domain(args, dag, args.pad).decomposition
    rows = _formats.spectrum_rows(spectrum_report(decomposition))
    with _output(args.output) as stream:
        _formats.write_table(_formats.SPECTRUM_COLUMNS, rows, stream, OutputFormat(args.format))


def _gft(args, dag: Dag):
    domain = _domain(args, dag, args.pad or 0)
    spectrum = domain.gft(_formats.read_signal(args.signal))
    rows = _formats.transform_rows(spectrum, domain.decomposition.frequencies)
    with _output(args.output) as stream:
        _formats.write_table(_formats.TRANSFORM_COLUMNS, rows, stream, OutputFormat(args.format))


def _filter(args, dag: Dag):
    h = _formats.parse_coefficients(args.coeffs)
    x = _formats.read_signal(args.signal)
    direct = apply_vertex_domain(dag, h, x)
    if not FilterMode(args.mode).needs_decomposition:
        y = direct
    else:
        pad = filter_order(h) if args.pad is None else args.pad
        y = _domain(args, dag, pad).filter(h, x)
        print(f"max deviation: {float(np.abs(y - direct).max()):.3g}", file=sys.stderr)
    with _output(args.output) as stream:
        _formats.write_signal(y, stream, OutputFormat(args.format))


def _census(args):
    if args.union:
        union = census_union(
            args.n, args.workers, args.budget, keep_failures=args.dump_failures is not None
        )
        failures = union.failures
        columns, rows = _formats.UNION_COLUMNS, _formats.union_rows([union])
    else:
        row = census(
            args.n,
            args.zp,
            args.weight,
            args.workers,
            args.budget,
            keep_failures=args.dump_failures is not None,
        )
        failures = row.failures
        columns, rows = _formats.CENSUS_COLUMNS, _formats.census_rows([row])
    with _output(args.output) as stream:
        _formats.write_table(columns, rows, stream, OutputFormat(args.format))
    if args.dump_failures is not None:
        _formats.write_masks(failures, args.dump_failures)


# a key mapping of graph commands to their handlers
_GRAPH_COMMANDS = {
    Command.INFO: _info,
    Command.CONNECT: _connect,
    Command.ZEROPAD: _zeropad,
    Command.SPECTRUM: _spectrum,
    Command.GFT: _gft,
    Command.FILTER: _filter,
}


def main(argv=None):
    """The main entry point for the command line interface."""
    # parse arguments from the command line (argparse validates arguments)
    args = _get_args(argv)
    logging.basicConfig(
        level=max(logging.DEBUG, logging.WARNING - 10 * args.verbose),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    logger.debug("arguments: %r", args)
    command = Command(args.command)
    try:
        if command.reads_graph:
            _GRAPH_COMMANDS[command](args, _formats.read_graph(args.input))
        else:
            _census(args)
    except (ValueError, TypeError, ArithmeticError, RuntimeError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        sys.exit(getattr(error, "exit_code", 1))


# explicitly define the outward facing API of this module
__all__ = [main.__name__]  # pyright: ignore [reportUnsupportedDunderAll]
