"""Tabular outputs: spectra, transforms, census rows and adjacency matrices."""

import csv
import json
from collections.abc import Iterable, Sequence
from typing import TextIO

import numpy as np

from ..census import CensusRow, CensusUnion
from ..enums import OutputFormat
from ..spectral import SpectrumReport

# the columns of every table, in output order
SPECTRUM_COLUMNS = ("k", "re", "im", "omega", "tv")
TRANSFORM_COLUMNS = ("k", "re", "im", "omega")
CENSUS_COLUMNS = ("n", "zp", "weight", "total", "distinct", "repeated", "repeated_pct")
UNION_COLUMNS = (
    "n",
    "total",
    "resolved_by_edge",
    "resolved_by_1zp",
    "unresolved",
    "regressed_by_1zp",
)


def write_table(
    columns: Sequence[str],
    rows: Iterable[Sequence],
    stream: TextIO,
    fmt: OutputFormat = OutputFormat.CSV,
):
    """Write rows as CSV with a header, or as a JSON array of objects."""
    if fmt is OutputFormat.JSON:
        json.dump([dict(zip(columns, row)) for row in rows], stream, indent=2)
        stream.write("\n")
        return
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)


def spectrum_rows(report: SpectrumReport) -> list[tuple]:
    """Return (k, re, im, omega, tv) for every eigenvalue of a report."""
    return [
        (r.k, r.eigenvalue.real, r.eigenvalue.imag, r.omega, r.total_variation)
        for r in report.records()
    ]


def transform_rows(spectrum: np.ndarray, omega: np.ndarray) -> list[tuple]:
    """Return (k, re, im, omega) for every GFT coefficient."""
    return [
        (k, float(value.real), float(value.imag), float(w))
        for k, (value, w) in enumerate(zip(spectrum, omega), start=1)
    ]


def census_rows(rows: Iterable[CensusRow]) -> list[tuple]:
    """Return one table row per census configuration."""
    return [
        (r.n, r.zp, str(r.weight), r.total, r.distinct, r.repeated, round(r.repeated_pct, 2))
        for r in rows
    ]


def union_rows(unions: Iterable[CensusUnion]) -> list[tuple]:
    """Return one table row per census union."""
    return [tuple(getattr(union, column) for column in UNION_COLUMNS) for union in unions]


def write_matrix(matrix: np.ndarray, stream: TextIO):
    """Write a real matrix as comma separated rows."""
    np.savetxt(stream, np.asarray(matrix, dtype=float), delimiter=",", fmt="%.17g")


def write_masks(masks: Iterable[int], path: str):
    """Write one mask per line."""
    with open(path, "w") as mask_file:
        mask_file.writelines(f"{mask}\n" for mask in masks)


# explicitly define the outward facing API of this module
__all__ = [
    write_table.__name__,
    spectrum_rows.__name__,
    transform_rows.__name__,
    census_rows.__name__,
    union_rows.__name__,
    write_matrix.__name__,
    write_masks.__name__,
]  # pyright: ignore [reportUnsupportedDunderAll]
