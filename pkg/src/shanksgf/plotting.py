"""Figures written next to the CLI's delimited output."""

from __future__ import annotations

import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .verify import CheckResult  # noqa: E402


def _save(fig, path: str) -> None:
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_coefficients(m: int, values: Sequence[int], path: str) -> None:
    """log10 s_{m,n} against n, even (c) and odd (d) positions marked separately."""
    fig, ax = plt.subplots(figsize=(6, 4))
    logs = [math.log10(v) for v in values]
    ns = range(len(values))
    ax.plot(ns, logs, color="0.7", lw=1, zorder=1)
    ax.scatter(ns[::2], logs[::2], marker="o", label="c (even n)", zorder=2)
    ax.scatter(ns[1::2], logs[1::2], marker="s", label="d (odd n)", zorder=2)
    ax.set_xlabel("n")
    ax.set_ylabel(r"$\log_{10} s_{m,n}$")
    ax.set_title(f"m = {m}")
    ax.legend(frameon=False)
    _save(fig, path)


def plot_lhat(m: int, values: Sequence[float], path: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(range(len(values)), values, "o-")
    ax.axhline(1.0, color="0.6", lw=0.8, ls="--")
    ax.set_xlabel("s")
    ax.set_ylabel(r"$\hat L_m(s)$")
    ax.set_title(f"m = {m}")
    _save(fig, path)


def plot_report(m: int, results: Sequence[CheckResult], path: str) -> None:
    """Deviation of each check against its tolerance, log scale."""
    rows = [r for r in results if r.deviation is not None]
    fig, ax = plt.subplots(figsize=(7, max(2.5, 0.25 * len(rows) + 1)))
    floor = 1e-18
    ys = range(len(rows))
    colors = ["tab:green" if r.passed else "tab:red" for r in rows]
    devs = [max(r.deviation, floor) for r in rows]
    ax.hlines(list(ys), floor, devs, colors=colors, lw=4)
    for y, r in zip(ys, rows):
        if r.tolerance > 0:
            ax.plot([r.tolerance, r.tolerance], [y - 0.4, y + 0.4], color="k", lw=1)
    ax.set_xscale("log")
    ax.set_xlim(left=floor)
    ax.set_yticks(list(ys))
    ax.set_yticklabels([f"{r.check} {r.param}" for r in rows], fontsize=7)
    ax.set_xlabel("deviation (exact checks drawn at the floor)")
    ax.set_title(f"verify m = {m}")
    _save(fig, path)
