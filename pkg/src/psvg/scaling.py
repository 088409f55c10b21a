"""Degree distributions and the PSVG scale-freeness exponent.

The degree distribution of a visibility graph with n nodes is the empirical
P(k) = n_k / n over observed degrees k. When P(k) ~ k^(-lambda_p) the
exponent lambda_p — the power of scale-freeness of the visibility graph
(PSVG) — is read off as the slope of log2 P(k) against log2(1/k); with that
choice of abscissa an exact power law produces the slope +lambda_p. The fit
is an ordinary least-squares line over the raw (unbinned) distribution, by
default across all observed degrees, optionally restricted to a degree
range. Maximum-likelihood tail estimation is a known alternative and is
deliberately out of scope here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .exceptions import DegenerateXError, InsufficientPointsError, SeriesTooShortError
from .series_io import TimeSeries, to_positive_plane
from .visibility import VisibilityGraph, build_graph


class DegreeBin(NamedTuple):
    k: int
    count: int
    fraction: float


@dataclass(frozen=True)
class DegreeDistribution:
    """Empirical degree distribution; entries sorted ascending by degree."""

    entries: tuple[DegreeBin, ...]
    total_nodes: int

    def degrees(self) -> list[int]:
        return [e.k for e in self.entries]

    def fractions(self) -> list[float]:
        return [e.fraction for e in self.entries]


@dataclass(frozen=True)
class PsvgFit:
    """OLS line through (log2(1/k), log2 p_k) points.

    lambda_p is the slope; for a pure power law p_k = c * k^(-lambda) it
    equals lambda exactly. r_squared is diagnostic only and is never
    thresholded here.
    """

    lambda_p: float
    intercept: float
    r_squared: float
    points_used: int
    k_min_used: int
    k_max_used: int


@dataclass(frozen=True)
class AnalysisConfig:
    """Knobs for the series -> report pipeline."""

    k_min: Optional[int] = None
    k_max: Optional[int] = None
    constructor: str = "fast"
    min_length: int = 16
    positive_offset: float = 1.0


@dataclass(frozen=True)
class WindowReport:
    """Full result bundle for one labelled analysis window."""

    window_name: str
    sample_count: int
    edge_count: int
    distribution: DegreeDistribution
    fit: Optional[PsvgFit]
    fit_error: Optional[str] = None

    @property
    def fit_available(self) -> bool:
        return self.fit is not None


def degree_distribution(graph: VisibilityGraph) -> DegreeDistribution:
    """Exact empirical P(k) = n_k / n of a graph."""
    degrees = np.array([graph.degree(i) for i in range(graph.node_count)])
    ks, counts = np.unique(degrees, return_counts=True)
    n = graph.node_count
    entries = tuple(DegreeBin(int(k), int(c), int(c) / n)
                    for k, c in zip(ks, counts))
    return DegreeDistribution(entries=entries, total_nodes=n)


def loglog_points(dist: DegreeDistribution) -> list[tuple[float, float]]:
    """One (log2(1/k), log2 p_k) point per observed degree."""
    if not dist.entries:
        raise ValueError("distribution has no entries")
    return [(float(np.log2(1.0 / e.k)), float(np.log2(e.fraction)))
            for e in dist.entries]


def fit_psvg(points: Sequence[tuple[float, float]],
             k_min: Optional[int] = None,
             k_max: Optional[int] = None) -> PsvgFit:
    """Least-squares PSVG estimate from log-log points.

    The optional k range filters points by the degree recovered from the
    abscissa (k = 2^-x). At least three points must survive the filter.
    """
    if k_min is not None and k_max is not None and k_min > k_max:
        raise ValueError(f"k_min {k_min} exceeds k_max {k_max}")
    kept = []
    for x, y in points:
        k = 2.0 ** (-x)
        if k_min is not None and k < k_min - 1e-9:
            continue
        if k_max is not None and k > k_max + 1e-9:
            continue
        kept.append((float(x), float(y), k))
    if len(kept) < 3:
        raise InsufficientPointsError(
            f"{len(kept)} point(s) after degree filtering; need at least 3")
    xs = np.array([p[0] for p in kept])
    ys = np.array([p[1] for p in kept])
    if np.all(xs == xs[0]):
        raise DegenerateXError("all abscissae equal; slope undefined")
    design = np.vstack([xs, np.ones_like(xs)]).T
    (slope, intercept), *_ = np.linalg.lstsq(design, ys, rcond=None)
    resid = ys - (slope * xs + intercept)
    ss_res = float(np.sum(resid ** 2))
    ss_tot = float(np.sum((ys - ys.mean()) ** 2))
    if ss_tot > 0:
        r2 = max(0.0, min(1.0, 1.0 - ss_res / ss_tot))
    else:
        r2 = 1.0 if ss_res < 1e-24 else 0.0
    k_used = [int(round(p[2])) for p in kept]
    return PsvgFit(lambda_p=float(slope), intercept=float(intercept),
                   r_squared=r2, points_used=len(kept),
                   k_min_used=min(k_used), k_max_used=max(k_used))


def analyze_series(series: TimeSeries,
                   config: AnalysisConfig = AnalysisConfig(),
                   name: str = "series") -> WindowReport:
    """Run the full pipeline on one series and bundle the results.

    Composes the positive-plane shift, graph construction, degree
    distribution and PSVG fit. A fit that fails for lack of distinct
    degrees is reported as unavailable instead of raising, so windowed
    batch runs always complete.
    """
    if len(series) < config.min_length:
        raise SeriesTooShortError(
            f"series has {len(series)} samples; configured minimum is "
            f"{config.min_length}")
    shifted = to_positive_plane(series, offset=config.positive_offset)
    graph = build_graph(shifted, constructor=config.constructor)
    dist = degree_distribution(graph)
    fit: Optional[PsvgFit] = None
    fit_error: Optional[str] = None
    try:
        fit = fit_psvg(loglog_points(dist), k_min=config.k_min, k_max=config.k_max)
    except (InsufficientPointsError, DegenerateXError) as exc:
        fit_error = str(exc)
    return WindowReport(window_name=name, sample_count=len(series),
                        edge_count=graph.edge_count, distribution=dist,
                        fit=fit, fit_error=fit_error)
