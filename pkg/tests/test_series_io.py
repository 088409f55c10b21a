"""Loader, preprocessing and windowing tests."""

import io

import numpy as np
import pytest

from psvg.exceptions import (
    BoundaryNotFoundError,
    EmptyInputError,
    MalformedValueError,
    WindowTooSmallError,
)
from psvg.series_io import (
    CsvConfig,
    TimeSeries,
    WindowSpec,
    load_csv,
    partition_windows,
    read_window_spec,
    save_csv,
    to_positive_plane,
)

from support import GOLD_SPANS, monthly_series


class TestTimeSeries:
    def test_basic_construction(self):
        s = TimeSeries(labels=("a", "b"), values=np.array([1.0, 2.0]))
        assert s.length == 2
        assert len(s) == 2

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            TimeSeries(labels=("a",), values=np.array([1.0, 2.0]))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            TimeSeries.from_values([1.0, float("nan")])
        with pytest.raises(ValueError):
            TimeSeries.from_values([1.0, float("inf")])

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            TimeSeries.from_values([])

    def test_values_read_only(self):
        s = TimeSeries.from_values([1.0, 2.0])
        with pytest.raises(ValueError):
            s.values[0] = 5.0


class TestLoadCsv:
    def test_three_rows(self):
        text = "1990-01,401.0\n1990-02,416.3\n1990-03,393.1"
        s = load_csv(io.StringIO(text))
        assert s.length == 3
        assert list(s.values) == [401.0, 416.3, 393.1]
        assert s.labels == ("1990-01", "1990-02", "1990-03")

    def test_empty_file(self):
        with pytest.raises(EmptyInputError):
            load_csv(io.StringIO(""))

    def test_malformed_value_reports_row(self):
        rows = ["r1,1.0", "r2,2.0", "r3,3.0", "r4,4.0", "r5,abc", "r6,6.0"]
        with pytest.raises(MalformedValueError) as exc:
            load_csv(io.StringIO("\n".join(rows)))
        assert exc.value.row == 5

    def test_non_finite_value_rejected(self):
        with pytest.raises(MalformedValueError):
            load_csv(io.StringIO("a,1.0\nb,nan\n"))

    def test_header_and_named_columns(self):
        text = "date,price\n2001-01,5.5\n2001-02,6.5\n"
        cfg = CsvConfig(header=True, label_column="date", value_column="price")
        s = load_csv(io.StringIO(text), cfg)
        assert s.labels == ("2001-01", "2001-02")
        assert list(s.values) == [5.5, 6.5]

    def test_named_column_without_header(self):
        with pytest.raises(ValueError):
            load_csv(io.StringIO("a,1\n"), CsvConfig(value_column="price"))

    def test_missing_named_column(self):
        with pytest.raises(ValueError):
            load_csv(io.StringIO("date,price\na,1\n"),
                     CsvConfig(header=True, value_column="cost"))

    def test_alternative_delimiter(self):
        s = load_csv(io.StringIO("a;1.5\nb;2.5\n"), CsvConfig(delimiter=";"))
        assert list(s.values) == [1.5, 2.5]

    def test_positional_labels(self):
        s = load_csv(io.StringIO("7.0\n8.0\n"),
                     CsvConfig(label_column=None, value_column=0))
        assert s.labels == ("0", "1")

    def test_duplicate_labels_warn(self):
        with pytest.warns(UserWarning, match="duplicate"):
            load_csv(io.StringIO("a,1\na,2\n"))

    def test_decreasing_labels_warn(self):
        with pytest.warns(UserWarning, match="not in increasing order"):
            load_csv(io.StringIO("b,1\na,2\n"))

    def test_numeric_labels_compared_numerically(self, recwarn):
        load_csv(io.StringIO("\n".join(f"{i},{i}.5" for i in range(12)) + "\n"))
        assert not recwarn.list

    def test_byte_stream(self):
        s = load_csv(io.BytesIO(b"a,1.0\nb,2.0\n"))
        assert s.length == 2

    def test_blank_lines_skipped(self):
        s = load_csv(io.StringIO("a,1.0\n\nb,2.0\n"))
        assert s.length == 2


class TestSaveCsv:
    def test_round_trip_exact(self, tmp_path):
        values = [401.0, 0.1, 1.0 / 3.0, -2.5e-17, 12345.678901234567]
        s = TimeSeries(labels=tuple("abcde"), values=np.array(values))
        path = tmp_path / "series.csv"
        save_csv(s, path)
        back = load_csv(path)
        assert back.labels == s.labels
        assert np.array_equal(back.values, s.values)

    def test_header_round_trip(self, tmp_path):
        s = TimeSeries.from_values([1.0, 2.0])
        path = tmp_path / "series.csv"
        cfg = CsvConfig(header=True, label_column="label", value_column="value")
        save_csv(s, path, cfg)
        back = load_csv(path, cfg)
        assert np.array_equal(back.values, s.values)


class TestToPositivePlane:
    def test_shifts_non_positive(self):
        s = to_positive_plane(TimeSeries.from_values([-2, 0, 3]))
        assert list(s.values) == [1.0, 3.0, 6.0]

    def test_positive_unchanged(self):
        s = TimeSeries.from_values([5, 7, 2])
        assert to_positive_plane(s) is s

    def test_zero_minimum_boundary(self):
        s = to_positive_plane(TimeSeries.from_values([0.0]))
        assert list(s.values) == [1.0]

    def test_idempotent(self):
        s = TimeSeries.from_values([-5.5, 2.0, -0.25])
        once = to_positive_plane(s)
        twice = to_positive_plane(once)
        assert twice is once

    def test_labels_preserved(self):
        s = TimeSeries(labels=("x", "y"), values=np.array([-1.0, 1.0]))
        assert to_positive_plane(s).labels == ("x", "y")

    def test_custom_offset(self):
        s = to_positive_plane(TimeSeries.from_values([-2, 0]), offset=0.5)
        assert list(s.values) == [0.5, 2.5]

    def test_rejects_bad_offset(self):
        with pytest.raises(ValueError):
            to_positive_plane(TimeSeries.from_values([1.0, 2.0]), offset=0.0)


class TestPartitionWindows:
    def _monthly_series(self):
        return monthly_series()

    def test_six_spans(self):
        series = self._monthly_series()
        assert series.length == 281
        parts = partition_windows(series, GOLD_SPANS)
        assert [name for name, _ in parts] == [
            "1990-1993", "1994-1997", "1998-2001",
            "2002-2005", "2006-2009", "2010-2013"]
        assert [len(sub) for _, sub in parts] == [48, 48, 48, 48, 48, 41]
        assert parts[-1][1].labels[-1] == "2013-05"

    def test_windows_preserve_values_exactly(self):
        series = self._monthly_series()
        parts = partition_windows(series, GOLD_SPANS)
        rebuilt = np.concatenate([sub.values for _, sub in parts])
        assert np.array_equal(rebuilt, series.values)

    def test_identity_partition(self):
        series = self._monthly_series()
        spec = WindowSpec(boundaries=(("1990-01", "2013-05", "all"),))
        [(name, sub)] = partition_windows(series, spec)
        assert name == "all"
        assert sub.labels == series.labels
        assert np.array_equal(sub.values, series.values)

    def test_missing_boundary(self):
        series = self._monthly_series()
        spec = WindowSpec(boundaries=(("1990-01", "2099-12", "w"),))
        with pytest.raises(BoundaryNotFoundError):
            partition_windows(series, spec)

    def test_window_too_small(self):
        series = self._monthly_series()
        spec = WindowSpec(boundaries=(("1990-01", "1990-01", "w"),))
        with pytest.raises(WindowTooSmallError):
            partition_windows(series, spec)

    def test_overlap_rejected(self):
        series = self._monthly_series()
        spec = WindowSpec(boundaries=(
            ("1990-01", "1994-12", "w1"),
            ("1994-01", "1997-12", "w2"),
        ))
        with pytest.raises(ValueError):
            partition_windows(series, spec)


class TestWindowSpecParsing:
    def test_file_format(self):
        text = "# four-year spans\n\n1990-01,1993-12,first\n1994-01,1997-12,second\n"
        spec = read_window_spec(io.StringIO(text))
        assert spec.boundaries == (("1990-01", "1993-12", "first"),
                                   ("1994-01", "1997-12", "second"))

    def test_bad_line(self):
        with pytest.raises(ValueError):
            read_window_spec(io.StringIO("only,two\n"))

    def test_empty_spec(self):
        with pytest.raises(EmptyInputError):
            read_window_spec(io.StringIO("# nothing here\n"))

    def test_empty_boundaries_rejected(self):
        with pytest.raises(ValueError):
            WindowSpec(boundaries=())
