"""Reading delimited datasets and column-spec files.

A column-spec file has one line per dataset column::

    # comment
    rent: shifted-inverted-max cost
    size: max-ratio gain

The direction may be omitted, in which case the strategy's natural direction
is used (gain for identity/max-ratio, cost for the inverted strategies).
"""

from __future__ import annotations

import csv
import io
from importlib import resources
from pathlib import Path

import numpy as np

from evoweights.core import EvoWeightsError, InvalidDataError, RawDataset
from evoweights.normalize import Direction, NormalizationSpec, Strategy


class ParseError(EvoWeightsError, ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        prefix = ""
        if source:
            prefix += f"{source}:"
        if line is not None:
            prefix += f"{line}:"
        super().__init__(f"{prefix} {message}" if prefix else message)


class SpecError(EvoWeightsError, ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = f"{source or 'spec'}:{line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


def parse_dataset(
    text: str,
    delimiter: str = ",",
    row_labels: bool = False,
    source: str | None = None,
) -> RawDataset:
    """Parse delimited text whose first row holds the column headers."""
    reader = csv.reader(io.StringIO(text), delimiter=delimiter)
    rows = [(reader.line_num, row) for row in reader if any(cell.strip() for cell in row)]
    if not rows:
        raise ParseError("input is empty", source=source)
    header_line, header = rows[0]
    header = [h.strip() for h in header]
    names = header[1:] if row_labels else header
    if len(rows) < 2:
        raise ParseError("no data rows after the header", header_line, source)

    labels: list[str] = []
    values: list[list[float]] = []
    for line, row in rows[1:]:
        if len(row) != len(header):
            raise ParseError(
                f"expected {len(header)} fields, found {len(row)}", line, source
            )
        if row_labels:
            labels.append(row[0].strip())
            row = row[1:]
        parsed = []
        for name, cell in zip(names, row):
            try:
                value = float(cell)
            except ValueError:
                raise ParseError(
                    f"column {name!r}: cannot parse {cell.strip()!r} as a number", line, source
                ) from None
            if not np.isfinite(value):
                raise ParseError(f"column {name!r}: non-finite value {cell.strip()!r}", line, source)
            parsed.append(value)
        values.append(parsed)

    try:
        return RawDataset(np.array(values), tuple(labels), tuple(names))
    except InvalidDataError as exc:
        raise ParseError(str(exc), source=source) from None


def read_dataset(path: str | Path, delimiter: str = ",", row_labels: bool = False) -> RawDataset:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_dataset(text, delimiter, row_labels, source=str(path))


def parse_column_spec(
    text: str, column_names: tuple[str, ...], source: str | None = None
) -> NormalizationSpec:
    """Resolve a column-spec file against the dataset's column names."""
    entries: dict[str, tuple[Strategy, Direction, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise SpecError("expected 'column: strategy [gain|cost]'", lineno, source)
        name, rest = (part.strip() for part in line.rsplit(":", 1))
        words = rest.split()
        if not name or not 1 <= len(words) <= 2:
            raise SpecError("expected 'column: strategy [gain|cost]'", lineno, source)
        try:
            strategy = Strategy(words[0].lower())
        except ValueError:
            choices = ", ".join(s.value for s in Strategy)
            raise SpecError(f"unknown strategy {words[0]!r} (choose from {choices})", lineno, source) from None
        try:
            direction = Direction(words[1].lower()) if len(words) == 2 else strategy.natural_direction
        except ValueError:
            raise SpecError(f"unknown direction {words[1]!r} (gain or cost)", lineno, source) from None
        if name in entries:
            raise SpecError(f"column {name!r} specified twice", lineno, source)
        if name not in column_names:
            raise SpecError(f"column {name!r} is not in the dataset", lineno, source)
        entries[name] = (strategy, direction, lineno)

    missing = [c for c in column_names if c not in entries]
    if missing:
        raise SpecError(f"no strategy given for column(s): {', '.join(missing)}", source=source)
    return NormalizationSpec(
        tuple(entries[c][0] for c in column_names),
        tuple(entries[c][1] for c in column_names),
    )


def read_column_spec(path: str | Path, column_names: tuple[str, ...]) -> NormalizationSpec:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_column_spec(text, column_names, source=str(path))


def format_column_spec(spec: NormalizationSpec, column_names: tuple[str, ...]) -> str:
    return "".join(
        f"{name}: {s.value} {d.value}\n"
        for name, s, d in zip(column_names, spec.strategies, spec.directions)
    )


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled data file (``office.csv``, ``office.spec``)."""
    return Path(str(resources.files("evoweights") / "data" / name))


def load_office() -> tuple[RawDataset, NormalizationSpec]:
    """The bundled 15-row Vienna office dataset and its column spec."""
    data = read_dataset(fixture_path("office.csv"), row_labels=True)
    spec = read_column_spec(fixture_path("office.spec"), data.column_names)
    return data, spec
