"""Figures for the bounds catalog."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

from .bounds import ms_upper_legacy  # noqa: E402


def plot_catalog(rows, path, oracle=None, title=None):
    """Bracket of M_S(L,3) per even L, the legacy bound for comparison, and
    optional exact search values (``oracle``: dict L -> value)."""
    Ls = [r["L"] for r in rows]
    fig, ax = plt.subplots(figsize=(7, 4))
    lo = [(r["L"], r["lower"]) for r in rows if r["lower"] is not None]
    hi = [(r["L"], r["upper"]) for r in rows if r["upper"] is not None]
    if hi:
        ax.step(*zip(*hi), where="mid", color="C0", label="upper bound")
    if lo:
        ax.step(*zip(*lo), where="mid", color="C1", linestyle="--", label="lower bound")
    legacy = [(L, ms_upper_legacy(L).upper) for L in Ls if ms_upper_legacy(L).applicable]
    if legacy:
        ax.plot(*zip(*legacy), ".", color="0.6", label="legacy upper bound")
    exact = [(r["L"], r["upper"]) for r in rows if r["exact"]]
    if exact:
        ax.plot(*zip(*exact), "o", mfc="none", color="C2", label="exact (closed form)")
    if oracle:
        pts = sorted(oracle.items())
        ax.plot(*zip(*pts), "x", color="C3", label="exact (search)")
    ax.set_xlabel("L")
    ax.set_ylabel(r"$M_S(L,3)$")
    ax.yaxis.set_major_locator(MaxNLocator(integer=True))
    if title:
        ax.set_title(title)
    ax.grid(alpha=0.3)
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
