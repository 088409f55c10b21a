"""Visibility-graph scale-freeness analysis for finite time series.

The library maps a series to its natural visibility graph, estimates the
power of scale-freeness (PSVG) from the graph's degree distribution, and
runs that pipeline over labelled windows of price-series data. Synthetic
fractional-noise generators with known Hurst exponents serve as oracles
for validating the whole chain.
"""

from .exceptions import (
    BoundaryNotFoundError,
    DegenerateXError,
    EmbeddingNotPositiveDefiniteError,
    EmptyInputError,
    InsufficientPointsError,
    MalformedValueError,
    PsvgError,
    SeriesTooShortError,
    WindowTooSmallError,
)
from .scaling import (
    AnalysisConfig,
    DegreeBin,
    DegreeDistribution,
    PsvgFit,
    WindowReport,
    analyze_series,
    degree_distribution,
    fit_psvg,
    loglog_points,
)
from .series_io import (
    CsvConfig,
    TimeSeries,
    WindowSpec,
    load_csv,
    partition_windows,
    read_window_spec,
    save_csv,
    to_positive_plane,
)
from .synth import (
    FbmConfig,
    gen_constant,
    gen_fbm,
    gen_fgn,
    gen_monotone,
    gen_uniform_random,
)
from .visibility import (
    VisibilityGraph,
    build_graph,
    build_graph_fast,
    build_graph_naive,
    degree_sequence,
    visible,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisConfig",
    "BoundaryNotFoundError",
    "CsvConfig",
    "DegenerateXError",
    "DegreeBin",
    "DegreeDistribution",
    "EmbeddingNotPositiveDefiniteError",
    "EmptyInputError",
    "FbmConfig",
    "InsufficientPointsError",
    "MalformedValueError",
    "PsvgError",
    "PsvgFit",
    "SeriesTooShortError",
    "TimeSeries",
    "VisibilityGraph",
    "WindowReport",
    "WindowSpec",
    "WindowTooSmallError",
    "analyze_series",
    "build_graph",
    "build_graph_fast",
    "build_graph_naive",
    "degree_distribution",
    "degree_sequence",
    "fit_psvg",
    "gen_constant",
    "gen_fbm",
    "gen_fgn",
    "gen_monotone",
    "gen_uniform_random",
    "load_csv",
    "loglog_points",
    "partition_windows",
    "read_window_spec",
    "save_csv",
    "to_positive_plane",
    "visible",
]
