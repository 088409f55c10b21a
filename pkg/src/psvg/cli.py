"""Command-line interface.

Subcommands:
  analyze     windowed PSVG analysis of a CSV series, with report files
  synth       write a synthetic series as CSV
  validate    fractional-motion oracle run: mean PSVG per Hurst value
  bench       time the graph constructors against each other
  dump-graph  emit the visibility graph as an edge list

All configuration is explicit; no environment variables are consulted.
Analytical outputs are deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np

from . import reporting, series_io, synth
from .exceptions import PsvgError
from .scaling import AnalysisConfig, WindowReport, analyze_series
from .series_io import CsvConfig, TimeSeries, WindowSpec
from .visibility import build_graph

_FORMATS = ("json", "csv", "plotdata", "figures")


@dataclass(frozen=True)
class RunConfig:
    """Resolved settings for one analyze run."""

    input_path: Path
    csv: CsvConfig
    windows: Optional[WindowSpec]
    analysis: AnalysisConfig
    out_dir: Path
    formats: tuple[str, ...] = ("json", "csv")


def _column(spec: str) -> Union[int, str, None]:
    if spec.lower() == "none":
        return None
    try:
        return int(spec)
    except ValueError:
        return spec


def _formats(spec: str) -> tuple[str, ...]:
    parts = tuple(p.strip() for p in spec.split(",") if p.strip())
    if "all" in parts:
        return _FORMATS
    for p in parts:
        if p not in _FORMATS:
            raise argparse.ArgumentTypeError(
                f"unknown format {p!r}; choose from {', '.join(_FORMATS)} or 'all'")
    return parts


def _lengths(spec: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(p) for p in spec.split(",") if p.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not vals:
        raise argparse.ArgumentTypeError("no lengths given")
    return vals


def _add_csv_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--delimiter", default=",", help="field delimiter (default ,)")
    parser.add_argument("--header", action="store_true",
                        help="first row is a header")
    parser.add_argument("--label-column", type=_column, default=0,
                        help="label column index or header name; 'none' for "
                             "positional labels (default 0)")
    parser.add_argument("--value-column", type=_column, default=1,
                        help="value column index or header name (default 1)")


def _csv_config(args: argparse.Namespace) -> CsvConfig:
    return CsvConfig(delimiter=args.delimiter, header=args.header,
                     label_column=args.label_column,
                     value_column=args.value_column)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psvg",
        description="Visibility-graph scale-freeness analysis of time series.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="windowed PSVG analysis of a CSV series")
    p.add_argument("--input", required=True, type=Path, help="input CSV path")
    _add_csv_options(p)
    p.add_argument("--windows", type=Path,
                   help="window spec file: one start,end,name line per window")
    p.add_argument("--window", action="append", default=[], metavar="START,END,NAME",
                   help="inline window triple; repeatable")
    p.add_argument("--kmin", type=int, help="smallest degree used in the fit")
    p.add_argument("--kmax", type=int, help="largest degree used in the fit")
    p.add_argument("--constructor", choices=("fast", "naive"), default="fast")
    p.add_argument("--min-length", type=int, default=16,
                   help="minimum samples per analyzed window (default 16)")
    p.add_argument("--out-dir", type=Path, default=Path("psvg-report"))
    p.add_argument("--format", type=_formats, default=("json", "csv"),
                   help="comma-separated outputs: json,csv,plotdata,figures or all")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("synth", help="write a synthetic series as CSV")
    p.add_argument("--kind", choices=("fbm", "fgn", "uniform", "monotone", "constant"),
                   default="fbm")
    p.add_argument("--hurst", type=float, default=0.5,
                   help="Hurst exponent for fbm/fgn (default 0.5)")
    p.add_argument("--length", type=int, default=1024)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default="-", help="output CSV path; - for stdout")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("validate",
                       help="check mean PSVG against the 3 - 2H fractal reference")
    p.add_argument("--hurst", type=float, action="append", default=None,
                   help="Hurst grid value; repeatable (default 0.3 0.5 0.7)")
    p.add_argument("--length", type=int, default=4096, help="series length (>= 1024)")
    p.add_argument("--seeds", type=int, default=10, help="seeds per H (>= 3)")
    p.add_argument("--seed", type=int, default=0, help="base seed")
    p.add_argument("--kmin", type=int, default=3,
                   help="fit window lower degree bound (default 3; the small-k "
                        "bins sit off the power-law asymptote)")
    p.add_argument("--kmax", type=int, default=None)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("bench", help="time graph constructors")
    p.add_argument("--lengths", type=_lengths, required=True,
                   help="comma-separated series lengths")
    p.add_argument("--kind", choices=("random", "monotone", "constant", "fbm"),
                   default="random")
    p.add_argument("--hurst", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--constructor", choices=("both", "fast", "naive"),
                   default="both")
    p.add_argument("--out", default="-", help="timing CSV path; - for stdout")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("dump-graph", help="emit the visibility graph edge list")
    p.add_argument("--input", required=True, type=Path, help="input CSV path")
    _add_csv_options(p)
    p.add_argument("--constructor", choices=("fast", "naive"), default="fast")
    p.add_argument("--out", default="-", help="edge list path; - for stdout")
    p.set_defaults(func=cmd_dump_graph)

    return parser


def _load_windows(args: argparse.Namespace) -> Optional[WindowSpec]:
    if args.windows is not None and args.window:
        raise PsvgError("give either --windows FILE or repeated --window flags, "
                        "not both")
    if args.windows is not None:
        return series_io.read_window_spec(args.windows)
    if args.window:
        triples = []
        for item in args.window:
            parts = [p.strip() for p in item.split(",")]
            if len(parts) != 3:
                raise PsvgError(f"--window expects START,END,NAME, got {item!r}")
            triples.append(tuple(parts))
        return WindowSpec(boundaries=tuple(triples))
    return None


def run_analysis(config: RunConfig) -> list[WindowReport]:
    """Load, window and analyze; returns reports in window order."""
    series = series_io.load_csv(config.input_path, config.csv)
    if config.windows is None:
        pieces = [("all", series)]
    else:
        pieces = series_io.partition_windows(series, config.windows)
    return [analyze_series(sub, config.analysis, name=name)
            for name, sub in pieces]


def cmd_analyze(args: argparse.Namespace) -> int:
    config = RunConfig(
        input_path=args.input,
        csv=_csv_config(args),
        windows=_load_windows(args),
        analysis=AnalysisConfig(k_min=args.kmin, k_max=args.kmax,
                                constructor=args.constructor,
                                min_length=args.min_length),
        out_dir=args.out_dir,
        formats=args.format,
    )
    reports = run_analysis(config)

    config.out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    if "json" in config.formats:
        path = config.out_dir / "report.json"
        reporting.write_json(reports, path)
        written.append(path)
    if "csv" in config.formats:
        path = config.out_dir / "summary.csv"
        reporting.write_summary_csv(reports, path)
        written.append(path)
    if "plotdata" in config.formats:
        for report in reports:
            written.extend(reporting.write_plot_data(report, config.out_dir))
    if "figures" in config.formats:
        written.extend(reporting.render_figures(reports, config.out_dir))

    print(reporting.format_summary_table(reports))
    for path in written:
        print(f"wrote {path}")
    return 0


def cmd_synth(args: argparse.Namespace) -> int:
    if args.kind in ("fbm", "fgn"):
        cfg = synth.FbmConfig(hurst=args.hurst, length=args.length, seed=args.seed)
        series = synth.gen_fbm(cfg) if args.kind == "fbm" else synth.gen_fgn(cfg)
    elif args.kind == "uniform":
        series = synth.gen_uniform_random(args.length, args.seed)
    elif args.kind == "monotone":
        series = synth.gen_monotone(args.length)
    else:
        series = synth.gen_constant(args.length)
    if args.output == "-":
        series_io.save_csv(series, sys.stdout)
    else:
        series_io.save_csv(series, args.output)
        print(f"wrote {args.output}")
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    grid = args.hurst if args.hurst else [0.3, 0.5, 0.7]
    for h in grid:
        if not 0.0 < h < 1.0:
            raise PsvgError(f"hurst values must lie in (0, 1), got {h}")
    if args.length < 1024:
        raise PsvgError(f"--length must be >= 1024, got {args.length}")
    if args.seeds < 3:
        raise PsvgError(f"--seeds must be >= 3 for a dispersion estimate, "
                        f"got {args.seeds}")

    analysis = AnalysisConfig(k_min=args.kmin, k_max=args.kmax)
    print(f"{'hurst':>6} {'ref(3-2H)':>10} {'mean':>8} {'sd':>7} {'dev':>7}")
    means = []
    for h in grid:
        lams = []
        for s in range(args.seeds):
            cfg = synth.FbmConfig(hurst=h, length=args.length,
                                  seed=args.seed + s)
            report = analyze_series(synth.gen_fbm(cfg), analysis,
                                    name=f"H={h}")
            if report.fit is None:
                raise PsvgError(f"fit unavailable for H={h} seed={args.seed + s}: "
                                f"{report.fit_error}")
            lams.append(report.fit.lambda_p)
        mean = float(np.mean(lams))
        sd = float(np.std(lams))
        ref = 3.0 - 2.0 * h
        means.append(mean)
        print(f"{h:6.2f} {ref:10.2f} {mean:8.3f} {sd:7.3f} {mean - ref:+7.3f}")

    by_h = sorted(zip(grid, means))
    monotone = all(a[1] > b[1] for a, b in zip(by_h, by_h[1:]))
    print(f"mean lambda_p strictly decreasing in H: {'yes' if monotone else 'NO'}")
    return 0 if monotone else 1


def _bench_series(kind: str, length: int, seed: int, hurst: float) -> TimeSeries:
    if kind == "random":
        return synth.gen_uniform_random(length, seed)
    if kind == "monotone":
        return synth.gen_monotone(length)
    if kind == "constant":
        return synth.gen_constant(length)
    return synth.gen_fbm(synth.FbmConfig(hurst=hurst, length=length, seed=seed))


def cmd_bench(args: argparse.Namespace) -> int:
    constructors = (("fast", "naive") if args.constructor == "both"
                    else (args.constructor,))
    lines = ["length,constructor,seconds,edges"]
    ok = True
    for length in args.lengths:
        series = _bench_series(args.kind, length, args.seed, args.hurst)
        edge_counts = {}
        for name in constructors:
            start = time.perf_counter()
            graph = build_graph(series, constructor=name)
            elapsed = time.perf_counter() - start
            edge_counts[name] = graph.edge_count
            lines.append(f"{length},{name},{elapsed:.6f},{graph.edge_count}")
        if len(edge_counts) == 2 and len(set(edge_counts.values())) != 1:
            print(f"edge-count mismatch at length {length}: {edge_counts}",
                  file=sys.stderr)
            ok = False
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    return 0 if ok else 1


def cmd_dump_graph(args: argparse.Namespace) -> int:
    series = series_io.load_csv(args.input, _csv_config(args))
    graph = build_graph(series, constructor=args.constructor)
    text = "\n".join(f"{m} {n}" for m, n in graph.edges()) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PsvgError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        name = getattr(exc, "filename", None)
        where = f" ({name})" if name else ""
        print(f"error: {exc}{where}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
