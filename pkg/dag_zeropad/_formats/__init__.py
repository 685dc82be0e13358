"""Methods for reading and writing graph, signal and table files."""

from .graph_file import (
    format_edge_list,
    graph_from_json,
    graph_to_json,
    loads_json,
    padded_from_json,
    padded_to_json,
    parse_edge_list,
    read_graph,
)
from .signal_file import parse_coefficients, parse_signal, read_signal, write_signal
from .tables import (
    CENSUS_COLUMNS,
    SPECTRUM_COLUMNS,
    TRANSFORM_COLUMNS,
    UNION_COLUMNS,
    census_rows,
    spectrum_rows,
    transform_rows,
    union_rows,
    write_masks,
    write_matrix,
    write_table,
)

# explicitly define the outward facing API of this package
__all__ = [
    format_edge_list.__name__,
    graph_from_json.__name__,
    graph_to_json.__name__,
    loads_json.__name__,
    padded_from_json.__name__,
    padded_to_json.__name__,
    parse_edge_list.__name__,
    read_graph.__name__,
    parse_coefficients.__name__,
    parse_signal.__name__,
    read_signal.__name__,
    write_signal.__name__,
    "CENSUS_COLUMNS",
    "SPECTRUM_COLUMNS",
    "TRANSFORM_COLUMNS",
    "UNION_COLUMNS",
    census_rows.__name__,
    spectrum_rows.__name__,
    transform_rows.__name__,
    union_rows.__name__,
    write_masks.__name__,
    write_matrix.__name__,
    write_table.__name__,
]  # pyright: ignore [reportUnsupportedDunderAll]
