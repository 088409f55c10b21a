"""Report serialization: JSON, CSV summary, plot-data files and figures.

All analytical outputs are deterministic byte-for-byte for identical
reports: no timestamps, insertion-ordered JSON, repr-formatted floats.
Figures are rendered with the Agg backend and are not part of the
determinism contract.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Sequence

from .scaling import WindowReport


def slugify(name: str) -> str:
    """File-system-safe version of a window name."""
    slug = re.sub(r"[^A-Za-z0-9._-]+", "_", name).strip("_")
    return slug or "window"


def report_to_dict(report: WindowReport) -> dict:
    """Full-precision JSON-ready view of one window report."""
    out: dict = {
        "window": report.window_name,
        "n": report.sample_count,
        "edge_count": report.edge_count,
        "status": "ok" if report.fit_available else "fit-unavailable",
    }
    if report.fit is not None:
        fit = report.fit
        out["lambda_p"] = fit.lambda_p
        out["intercept"] = fit.intercept
        out["r_squared"] = fit.r_squared
        out["points_used"] = fit.points_used
        out["k_min_used"] = fit.k_min_used
        out["k_max_used"] = fit.k_max_used
    else:
        out["fit_error"] = report.fit_error
    out["distribution"] = [
        {"k": e.k, "count": e.count, "p": e.fraction}
        for e in report.distribution.entries
    ]
    return out


def write_json(reports: Sequence[WindowReport], path: Path) -> None:
    payload = [report_to_dict(r) for r in reports]
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def write_summary_csv(reports: Sequence[WindowReport], path: Path) -> None:
    lines = ["window,n,lambda_p,r_squared,status"]
    for r in reports:
        if r.fit is not None:
            lam, r2 = repr(r.fit.lambda_p), repr(r.fit.r_squared)
            status = "ok"
        else:
            lam, r2, status = "", "", "fit-unavailable"
        lines.append(f"{r.window_name},{r.sample_count},{lam},{r2},{status}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_plot_data(report: WindowReport, out_dir: Path) -> list[Path]:
    """Two-column text files: P(k) vs k, and log2 P(k) vs log2(1/k)."""
    from .scaling import loglog_points

    slug = slugify(report.window_name)
    pk_path = out_dir / f"{slug}_pk.txt"
    ll_path = out_dir / f"{slug}_loglog.txt"
    pk_lines = [f"{e.k} {repr(e.fraction)}" for e in report.distribution.entries]
    ll_lines = [f"{repr(x)} {repr(y)}" for x, y in loglog_points(report.distribution)]
    pk_path.write_text("\n".join(pk_lines) + "\n", encoding="utf-8")
    ll_path.write_text("\n".join(ll_lines) + "\n", encoding="utf-8")
    return [pk_path, ll_path]


def render_figures(reports: Sequence[WindowReport], out_dir: Path) -> list[Path]:
    """Render per-window distribution figures plus the cross-window trend."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    from .scaling import loglog_points

    written: list[Path] = []
    for report in reports:
        slug = slugify(report.window_name)
        ks = report.distribution.degrees()
        ps = report.distribution.fractions()

        fig, ax = plt.subplots(figsize=(5, 4))
        ax.loglog(ks, ps, "o", ms=5)
        ax.set_xlabel("k")
        ax.set_ylabel("P(k)")
        ax.set_title(f"Degree distribution — {report.window_name}")
        fig.tight_layout()
        path = out_dir / f"{slug}_pk.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

        pts = loglog_points(report.distribution)
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        fig, ax = plt.subplots(figsize=(5, 4))
        ax.plot(xs, ys, "o", ms=5)
        if report.fit is not None:
            fit = report.fit
            x0, x1 = min(xs), max(xs)
            ax.plot([x0, x1],
                    [fit.lambda_p * x0 + fit.intercept,
                     fit.lambda_p * x1 + fit.intercept],
                    "-", lw=1.2,
                    label=f"slope = {fit.lambda_p:.2f}, r² = {fit.r_squared:.3f}")
            ax.legend()
        ax.set_xlabel("log2(1/k)")
        ax.set_ylabel("log2 P(k)")
        ax.set_title(f"PSVG fit — {report.window_name}")
        fig.tight_layout()
        path = out_dir / f"{slug}_loglog.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

    fitted = [r for r in reports if r.fit is not None]
    if len(fitted) >= 2:
        fig, ax = plt.subplots(figsize=(6, 4))
        names = [r.window_name for r in fitted]
        lams = [r.fit.lambda_p for r in fitted]
        ax.plot(range(len(fitted)), lams, "o-")
        ax.set_xticks(range(len(fitted)))
        ax.set_xticklabels(names, rotation=30, ha="right")
        ax.set_ylabel("lambda_p")
        ax.set_title("PSVG per window")
        fig.tight_layout()
        path = out_dir / "lambda_trend.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)
    return written


def format_summary_table(reports: Sequence[WindowReport]) -> str:
    """Human-readable per-window summary (lambda to two decimals)."""
    header = f"{'window':<16} {'n':>6} {'edges':>8} {'lambda_p':>9} {'r^2':>6}  status"
    rows = [header, "-" * len(header)]
    for r in reports:
        if r.fit is not None:
            lam = f"{r.fit.lambda_p:9.2f}"
            r2 = f"{r.fit.r_squared:6.3f}"
            status = "ok"
        else:
            lam, r2 = " " * 9, " " * 6
            status = "fit-unavailable"
        rows.append(f"{r.window_name:<16} {r.sample_count:>6} {r.edge_count:>8} "
                    f"{lam} {r2}  {status}")
    return "\n".join(rows)
