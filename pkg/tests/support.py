"""Shared helpers for the test suite."""

import numpy as np

from psvg.series_io import TimeSeries, WindowSpec


def monthly_labels(start_year, start_month, end_year, end_month):
    labels = []
    y, m = start_year, start_month
    while (y, m) <= (end_year, end_month):
        labels.append(f"{y:04d}-{m:02d}")
        m += 1
        if m == 13:
            y, m = y + 1, 1
    return labels


def monthly_series(seed=11, lo=250.0, hi=1800.0):
    labels = monthly_labels(1990, 1, 2013, 5)
    rng = np.random.default_rng(seed)
    return TimeSeries(labels=tuple(labels),
                      values=rng.uniform(lo, hi, len(labels)))


GOLD_SPANS = WindowSpec(boundaries=(
    ("1990-01", "1993-12", "1990-1993"),
    ("1994-01", "1997-12", "1994-1997"),
    ("1998-01", "2001-12", "1998-2001"),
    ("2002-01", "2005-12", "2002-2005"),
    ("2006-01", "2009-12", "2006-2009"),
    ("2010-01", "2013-05", "2010-2013"),
))
