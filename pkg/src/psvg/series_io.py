"""Loading, preprocessing and windowing of time-series data.

A series is an ordered list of (label, value) samples. Labels are opaque
strings (typically dates); ordering is positional, so label monotonicity is
advisory only and violations merely warn. Windowing matches boundary labels
verbatim instead of doing date arithmetic, which keeps the loader free of any
calendar assumptions.
"""

from __future__ import annotations

import csv
import io
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Sequence, Union

import numpy as np

from .exceptions import (
    BoundaryNotFoundError,
    EmptyInputError,
    MalformedValueError,
    WindowTooSmallError,
)

Source = Union[str, Path, IO[str], IO[bytes]]


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Ordered finite sequence of labelled real-valued samples.

    Values are stored as a float64 array and must be finite; labels and
    values always have identical length. Instances are immutable and safe
    to share between concurrent analyses.
    """

    labels: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 1:
            raise ValueError("values must be one-dimensional")
        if len(labels) != len(values):
            raise ValueError(
                f"labels and values differ in length: {len(labels)} != {len(values)}"
            )
        if len(values) == 0:
            raise ValueError("series must contain at least one sample")
        if not np.all(np.isfinite(values)):
            bad = int(np.flatnonzero(~np.isfinite(values))[0])
            raise ValueError(f"non-finite value at position {bad}")
        values.setflags(write=False)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_values(cls, values: Iterable[float]) -> "TimeSeries":
        """Build a series from bare values, labelling samples 0, 1, 2, ..."""
        vals = np.asarray(list(values), dtype=np.float64)
        return cls(labels=tuple(str(i) for i in range(len(vals))), values=vals)

    @property
    def length(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class CsvConfig:
    """Column mapping and dialect for delimited input/output.

    Columns are selected by 0-based index, or by header name when
    ``header`` is true.
    """

    delimiter: str = ","
    header: bool = False
    label_column: Union[int, str, None] = 0
    value_column: Union[int, str] = 1


@dataclass(frozen=True)
class WindowSpec:
    """Ordered list of (start_label, end_label, window_name) triples.

    Boundaries are inclusive on both ends and must resolve to
    non-overlapping, left-to-right slices of the target series.
    """

    boundaries: tuple[tuple[str, str, str], ...]

    def __post_init__(self):
        triples = tuple((str(a), str(b), str(c)) for a, b, c in self.boundaries)
        if not triples:
            raise ValueError("window spec must contain at least one window")
        object.__setattr__(self, "boundaries", triples)


def _open_text(source: Source):
    """Return (text stream, needs_close) for a path, text or byte stream."""
    if isinstance(source, (str, Path)):
        return open(source, "r", encoding="utf-8", newline=""), True
    if isinstance(source, io.TextIOBase):
        return source, False
    # binary stream
    return io.TextIOWrapper(source, encoding="utf-8", newline=""), False


def _resolve_column(spec: Union[int, str, None], header_row: Sequence[str] | None,
                    what: str) -> int | None:
    if spec is None:
        return None
    if isinstance(spec, int):
        return spec
    if header_row is None:
        raise ValueError(f"{what} selected by name {spec!r} but header=False")
    try:
        return header_row.index(spec)
    except ValueError:
        raise ValueError(f"{what} {spec!r} not found in header {header_row}") from None


def load_csv(source: Source, config: CsvConfig = CsvConfig()) -> TimeSeries:
    """Read a delimited text file into a TimeSeries.

    Row numbers in errors are 1-based physical line numbers (the header,
    when present, is line 1). Rows are kept in file order; duplicate or
    lexicographically decreasing labels warn but do not reject, since
    sample ordering is positional.
    """
    stream, needs_close = _open_text(source)
    try:
        reader = csv.reader(stream, delimiter=config.delimiter)
        header_row: list[str] | None = None
        rows = iter(reader)
        row_no = 0
        if config.header:
            try:
                header_row = next(rows)
                row_no = 1
            except StopIteration:
                raise EmptyInputError("input contains no rows") from None
        label_ix = _resolve_column(config.label_column, header_row, "label column")
        value_ix = _resolve_column(config.value_column, header_row, "value column")
        assert value_ix is not None

        labels: list[str] = []
        values: list[float] = []
        for row in rows:
            row_no += 1
            if not row:
                continue
            if value_ix >= len(row):
                raise MalformedValueError(row_no, f"missing value column {value_ix}")
            raw = row[value_ix].strip()
            try:
                val = float(raw)
            except ValueError:
                raise MalformedValueError(row_no, f"not a number: {raw!r}") from None
            if not np.isfinite(val):
                raise MalformedValueError(row_no, f"non-finite value: {raw!r}")
            if label_ix is None:
                labels.append(str(len(values)))
            else:
                if label_ix >= len(row):
                    raise MalformedValueError(row_no, f"missing label column {label_ix}")
                labels.append(row[label_ix].strip())
            values.append(val)
    finally:
        if needs_close:
            stream.close()

    if not values:
        raise EmptyInputError("input contains no data rows")

    if len(set(labels)) != len(labels):
        warnings.warn("duplicate labels in input; ordering stays positional",
                      stacklevel=2)
    else:
        try:
            keys: list = [int(label) for label in labels]
        except ValueError:
            keys = list(labels)
        if any(a > b for a, b in zip(keys, keys[1:])):
            warnings.warn("labels are not in increasing order; "
                          "ordering stays positional", stacklevel=2)

    return TimeSeries(labels=tuple(labels), values=np.array(values))


def save_csv(series: TimeSeries, dest: Union[str, Path, IO[str]],
             config: CsvConfig = CsvConfig()) -> None:
    """Write a series as label,value rows readable back by load_csv.

    Values are written with repr, which round-trips float64 exactly.
    """
    if isinstance(dest, (str, Path)):
        stream = open(dest, "w", encoding="utf-8", newline="")
        needs_close = True
    else:
        stream, needs_close = dest, False
    try:
        writer = csv.writer(stream, delimiter=config.delimiter, lineterminator="\n")
        if config.header:
            writer.writerow(["label", "value"])
        for label, value in zip(series.labels, series.values):
            writer.writerow([label, repr(float(value))])
    finally:
        if needs_close:
            stream.close()


def to_positive_plane(series: TimeSeries, offset: float = 1.0) -> TimeSeries:
    """Shift the series so every value is strictly positive.

    If min(values) <= 0 the whole series is shifted by (-min + offset);
    otherwise the input is returned unchanged. The shift is harmless to
    downstream graph construction (the visibility relation is invariant
    under positive affine maps) and exists only so plots and logs live in
    the positive plane. Idempotent for any offset > 0.
    """
    if offset <= 0:
        raise ValueError(f"offset must be positive, got {offset}")
    lo = float(series.values.min())
    if lo > 0:
        return series
    return TimeSeries(labels=series.labels, values=series.values + (-lo + offset))


def _find_label(series: TimeSeries, label: str, start_at: int = 0) -> int:
    for i in range(start_at, series.length):
        if series.labels[i] == label:
            return i
    raise BoundaryNotFoundError(label)


def partition_windows(series: TimeSeries,
                      spec: WindowSpec) -> list[tuple[str, TimeSeries]]:
    """Slice the series into the named windows of a WindowSpec.

    Each boundary label is matched against sample labels (first occurrence;
    end labels are searched from the window start). Windows must appear in
    series order and must not overlap; each must cover at least two samples.
    """
    out: list[tuple[str, TimeSeries]] = []
    prev_end = -1
    for start_label, end_label, name in spec.boundaries:
        start = _find_label(series, start_label)
        end = _find_label(series, end_label, start_at=start)
        if start <= prev_end:
            raise ValueError(
                f"window {name!r} starting at {start_label!r} overlaps the "
                f"previous window or is out of order")
        if end - start + 1 < 2:
            raise WindowTooSmallError(
                f"window {name!r} resolves to {end - start + 1} sample(s); "
                f"need at least 2")
        sub = TimeSeries(labels=series.labels[start:end + 1],
                         values=series.values[start:end + 1].copy())
        out.append((name, sub))
        prev_end = end
    return out


def read_window_spec(source: Source) -> WindowSpec:
    """Parse a window spec file: one `start,end,name` line per window.

    Blank lines and lines starting with '#' are ignored.
    """
    stream, needs_close = _open_text(source)
    try:
        triples = []
        for line_no, line in enumerate(stream, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = [p.strip() for p in line.split(",")]
            if len(parts) != 3:
                raise ValueError(
                    f"window spec line {line_no}: expected 'start,end,name', "
                    f"got {line!r}")
            triples.append(tuple(parts))
    finally:
        if needs_close:
            stream.close()
    if not triples:
        raise EmptyInputError("window spec contains no windows")
    return WindowSpec(boundaries=tuple(triples))
