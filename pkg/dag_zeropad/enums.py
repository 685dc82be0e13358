"""Common enums used throughout the code base."""

from enum import Enum


class EdgeKind(Enum):
    """An enumeration of the reasons an edge was added to a DAG."""

    CONNECTIVITY = "connectivity"
    """Edges (or padded paths) added to link the sources of the DAG."""
    RETURN_PATH = "return_path"
    """The sink-to-source edge or zero-padded path closing the cycle."""


class FilterMode(Enum):
    """An enumeration of the domains a graph filter can be evaluated in."""

    VERTEX = "vertex"
    SPECTRAL = "spectral"

    @property
    def needs_decomposition(self):
        """Return True if this mode evaluates through the GFT."""
        return self is FilterMode.SPECTRAL


class OutputFormat(Enum):
    """An enumeration of the machine readable output formats."""

    CSV = "csv"
    JSON = "json"

    @classmethod
    def values(cls):
        """Return all the formats as strings."""
        return [member.value for member in cls]


class Command(Enum):
    """An enumeration of the commands of the command line interface."""

    INFO = "info"
    CONNECT = "connect"
    ZEROPAD = "zeropad"
    SPECTRUM = "spectrum"
    GFT = "gft"
    FILTER = "filter"
    CENSUS = "census"

    @property
    def reads_graph(self):
        """Check if the command consumes a graph file."""
        return self is not Command.CENSUS


# explicitly define the outward facing API of this module
__all__ = [
    EdgeKind.__name__,
    FilterMode.__name__,
    OutputFormat.__name__,
    Command.__name__,
]  # pyright: ignore [reportUnsupportedDunderAll]
