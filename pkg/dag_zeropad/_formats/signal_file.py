"""Reading graph signals and filter coefficients, and writing signals."""

import csv
import json
import os
from typing import TextIO

import numpy as np

from ..enums import OutputFormat
from ..errors import ParseError


def _real(token: str, line: int | None) -> float:
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"expected a real number. Got: {token!r}", line) from None


def parse_signal(text: str) -> np.ndarray:
    """Parse a signal file.

    The file holds one value per line, or CSV lines "vertex,value" with
    1-based vertices (an optional "vertex,value" header row is skipped). In
    the CSV form every vertex 1 .. n must appear exactly once, in any order.

    Args:
        text (str): the contents of the file

    Returns:
        np.ndarray: the signal, one float per vertex

    """
    plain: list[float] = []
    indexed: dict[int, float] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "," not in line:
            if indexed:
                raise ParseError("cannot mix plain values with vertex,value rows", number)
            plain.append(_real(line, number))
            continue
        if plain:
            raise ParseError("cannot mix plain values with vertex,value rows", number)
        vertex, value = (field.strip() for field in next(csv.reader([line]))[:2])
        if vertex.lower() == "vertex" and not indexed:
            continue
        try:
            index = int(vertex)
        except ValueError:
            raise ParseError(f"vertex must be an integer. Got: {vertex!r}", number) from None
        if index in indexed:
            raise ParseError(f"vertex {index} appears twice", number)
        indexed[index] = _real(value, number)
    if plain:
        return np.array(plain, dtype=float)
    if not indexed:
        raise ParseError("the signal file is empty")
    n = max(indexed)
    missing = sorted(set(range(1, n + 1)) - set(indexed))
    if missing or min(indexed) < 1:
        raise ParseError(f"vertex,value rows must cover 1..{n}; missing {missing}")
    return np.array([indexed[v] for v in range(1, n + 1)], dtype=float)


def read_signal(path: str) -> np.ndarray:
    """Read a signal file."""
    with open(path) as signal_file:
        return parse_signal(signal_file.read())


def parse_coefficients(argument: str) -> np.ndarray:
    """Return filter coefficients from "h0,h1,..." or from a one-per-line file."""
    if os.path.isfile(argument):
        with open(argument) as coefficient_file:
            tokens = [
                (number, line.split("#", 1)[0].strip())
                for number, line in enumerate(coefficient_file, start=1)
            ]
        values = [_real(token, number) for number, token in tokens if token]
    else:
        values = [_real(token.strip(), None) for token in argument.split(",")]
    if not values:
        raise ParseError("no filter coefficients given")
    return np.array(values, dtype=float)


def write_signal(signal: np.ndarray, stream: TextIO, fmt: OutputFormat = OutputFormat.CSV):
    """Write a real signal as "vertex,value" rows or a JSON array."""
    if fmt is OutputFormat.JSON:
        json.dump({"signal": [float(value) for value in signal]}, stream, indent=2)
        stream.write("\n")
        return
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["vertex", "value"])
    for vertex, value in enumerate(signal, start=1):
        writer.writerow([vertex, repr(float(value))])


# explicitly define the outward facing API of this module
__all__ = [
    parse_signal.__name__,
    read_signal.__name__,
    parse_coefficients.__name__,
    write_signal.__name__,
]  # pyright: ignore [reportUnsupportedDunderAll]
