"""Figure rendering for table and reproduction reports.

Figures are written to files next to the delimited output; no interactive
backend is ever touched.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .tables import TableReport

__all__ = ["save_values_figure", "save_reproduction_figure"]

_SYMBOL = {"tau": "independence number", "phi": "spanning number"}


def save_values_figure(rows, kind: str, parameter: int, path: str) -> str:
    """Step plot of computed values against group order.

    rows: iterable of (n, value, exhaustive) triples.
    """
    data = sorted(rows)
    ns = [r[0] for r in data]
    values = [r[1] for r in data]
    fig, ax = plt.subplots(figsize=(7.0, 4.0))
    ax.step(ns, values, where="post", lw=1.2)
    ax.plot(ns, values, "o", ms=3)
    partial = [(n, v) for n, v, exhaustive in data if not exhaustive]
    if partial:
        ax.plot(*zip(*partial), "x", color="tab:red", ms=6, label="budget hit")
        ax.legend(loc="lower right")
    ax.set_xlabel("n")
    ax.set_ylabel(f"{_SYMBOL.get(kind, kind)} (parameter {parameter})")
    ax.set_title(f"{kind}(Z_n, {parameter})")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_reproduction_figure(report: TableReport, path: str) -> str:
    """Computed values overlaid on published ones, mismatches highlighted."""
    rows = sorted(report.rows, key=lambda r: r.n)
    ns = [r.n for r in rows]
    computed = [r.computed for r in rows]
    published = [r.published for r in rows]
    fig, ax = plt.subplots(figsize=(7.0, 4.0))
    ax.plot(ns, published, "o", mfc="none", ms=6, color="tab:blue", label="published")
    ax.plot(ns, computed, ".", ms=4, color="tab:green", label="computed")
    bad = [(r.n, r.computed) for r in rows if not r.match]
    if bad:
        ax.plot(*zip(*bad), "x", color="tab:red", ms=9, mew=2, label="mismatch")
        for n, v in bad:
            ax.annotate(str(n), (n, v), textcoords="offset points", xytext=(4, 6), fontsize=8)
    ax.set_xlabel("n")
    ax.set_ylabel(f"{_SYMBOL.get(report.kind, report.kind)} (parameter {report.parameter})")
    ax.set_title(f"reproduction of {report.table}")
    ax.legend(loc="lower right")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
