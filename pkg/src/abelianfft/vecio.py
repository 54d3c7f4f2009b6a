"""Reading and writing complex vectors as JSON or CSV files.

JSON: an array whose items are either [re, im] pairs or bare numbers
(imaginary part 0). CSV: one `re,im` line per element, optional header.
Writers emit 17 significant digits, so write -> parse round-trips exactly.
"""

from __future__ import annotations

import json
import numbers
import os

import numpy as np

from .errors import VectorParseError
from .vectors import as_vector


def _f(x: float) -> str:
    return format(float(x), ".17g")


def detect_format(path: str, fmt: str | None = None) -> str:
    if fmt:
        if fmt not in ("json", "csv"):
            raise ValueError(f"unknown vector format {fmt!r}")
        return fmt
    ext = os.path.splitext(path)[1].lower()
    if ext == ".csv":
        return "csv"
    return "json"


def _entry_to_complex(item, where: str) -> complex:
    if isinstance(item, bool):
        raise VectorParseError(f"{where}: booleans are not numbers")
    if isinstance(item, numbers.Real):
        return complex(float(item), 0.0)
    if isinstance(item, (list, tuple)) and len(item) == 2:
        re, im = item
        if isinstance(re, bool) or isinstance(im, bool):
            raise VectorParseError(f"{where}: booleans are not numbers")
        if isinstance(re, numbers.Real) and isinstance(im, numbers.Real):
            return complex(float(re), float(im))
    raise VectorParseError(f"{where}: expected a number or an [re, im] pair, got {item!r}")


def loads_json_vector(text: str, where: str = "<json>") -> np.ndarray:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise VectorParseError(f"{where}: invalid JSON ({exc})") from exc
    if not isinstance(data, list) or not data:
        raise VectorParseError(f"{where}: expected a non-empty JSON array")
    values = [_entry_to_complex(item, where) for item in data]
    try:
        return as_vector(values)
    except ValueError as exc:
        raise VectorParseError(f"{where}: {exc}") from exc


def loads_csv_vector(text: str, where: str = "<csv>") -> np.ndarray:
    values = []
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise VectorParseError(f"{where}: empty file")
    for lineno, line in enumerate(lines, start=1):
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 2:
            raise VectorParseError(f"{where}:{lineno}: expected 're,im', got {line!r}")
        try:
            values.append(complex(float(parts[0]), float(parts[1])))
        except ValueError:
            if lineno == 1:
                continue  # tolerate a header line
            raise VectorParseError(f"{where}:{lineno}: non-numeric entries {line!r}") from None
    if not values:
        raise VectorParseError(f"{where}: no data rows")
    try:
        return as_vector(values)
    except ValueError as exc:
        raise VectorParseError(f"{where}: {exc}") from exc


def read_vector(path: str, fmt: str | None = None) -> np.ndarray:
    """Read a complex vector from a JSON or CSV file (format by extension)."""
    kind = detect_format(path, fmt)
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise VectorParseError(f"cannot read {path}: {exc}") from exc
    if kind == "csv":
        return loads_csv_vector(text, where=path)
    return loads_json_vector(text, where=path)


def dumps_vector(v, fmt: str = "json") -> str:
    """Serialize a vector deterministically with 17 significant digits."""
    vec = as_vector(v)
    if fmt == "csv":
        return "".join(f"{_f(z.real)},{_f(z.imag)}\n" for z in vec)
    if fmt != "json":
        raise ValueError(f"unknown vector format {fmt!r}")
    rows = ",\n".join(f"  [{_f(z.real)}, {_f(z.imag)}]" for z in vec)
    return "[\n" + rows + "\n]\n"


def write_vector(path: str, v, fmt: str | None = None) -> None:
    kind = detect_format(path, fmt)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps_vector(v, kind))


def format_complex(z: complex, precision: int = 6) -> str:
    """Human-readable 're+imi' with the given significant digits."""
    z = complex(z)
    sign = "-" if z.imag < 0 else "+"
    return f"{format(z.real, f'.{precision}g')}{sign}{format(abs(z.imag), f'.{precision}g')}i"
