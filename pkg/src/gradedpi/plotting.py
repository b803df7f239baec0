"""Matplotlib figures for the report commands, written straight to files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import mpmath  # noqa: E402

from .asymptotics import AsymptoticReport, asymptotic_value  # noqa: E402

LN10 = float(mpmath.log(10))


def _figure(width=6.4, height=4.0):
    fig, ax = plt.subplots(figsize=(width, height), facecolor="w")
    ax.grid(True, which="both", alpha=0.3)
    return fig, ax


def plot_deviation(report: AsymptoticReport, path: str | Path) -> Path:
    """|exact/asymptotic - 1| against n on log-log axes."""
    fig, ax = _figure()
    ns = [r.n for r in report.rows]
    dev = [abs(float(r.deviation)) for r in report.rows]
    ax.loglog(ns, dev, "o-", label=f"k = {report.k}")
    if len(ns) > 1:
        # reference slope -1
        ax.loglog(ns, [dev[0] * ns[0] / n for n in ns], "--", color="gray", label="~ 1/n")
    ax.set_xlabel("n")
    ax.set_ylabel("|c_k(n) / asymptotic - 1|")
    ax.legend()
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_counts(k: int, rows: list[tuple[int, int]], path: str | Path) -> Path:
    """log10 of exact c_k(n) with the asymptotic curve for n >= 1."""
    fig, ax = _figure()
    ns = [n for n, _ in rows]
    exact = [float(mpmath.log10(v)) if v > 0 else 0.0 for _, v in rows]
    ax.plot(ns, exact, "o", label="exact")
    pos = [n for n in ns if n >= 1]
    if pos:
        ax.plot(pos, [float(asymptotic_value(k, n)) / LN10 for n in pos], "-", label="asymptotic")
    ax.set_xlabel("n")
    ax.set_ylabel("log10 c_k(n)")
    ax.set_title(f"graded codimensions, k = {k}")
    ax.legend()
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
