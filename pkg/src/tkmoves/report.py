"""Figures for the verify report."""

from __future__ import annotations

import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _checks_figure(results, path):
    fig, ax = plt.subplots(figsize=(7, 3.2))
    ids = [r.id for r in results]
    passed = [r.checks - len(r.failures) for r in results]
    failed = [len(r.failures) for r in results]
    ax.barh(ids, passed, color="tab:green", label="passed")
    ax.barh(ids, failed, left=passed, color="tab:red", label="failed")
    ax.invert_yaxis()
    ax.set_xlabel("checks")
    ax.legend(loc="lower right", frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _t3_figure(names, verdicts, path):
    n = len(names)
    grid = [[0.0] * n for _ in range(n)]
    for i, x in enumerate(names):
        for j, y in enumerate(names):
            grid[i][j] = 1.0 if verdicts[(x, y)][0] == "Compatible" else 0.0
    fig, ax = plt.subplots(figsize=(5.5, 5))
    ax.imshow(grid, cmap="Greys", vmin=0, vmax=1.4)
    ax.set_xticks(range(n), names, rotation=60, fontsize=8)
    ax.set_yticks(range(n), names, fontsize=8)
    for i, x in enumerate(names):
        for j, y in enumerate(names):
            v, lev = verdicts[(x, y)]
            if v == "Compatible":
                ax.text(j, i, str(lev), ha="center", va="center", fontsize=7, color="white")
    ax.set_title("t3 level distances (blank: separated)", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _golden_figure(values, path):
    names = list(values)
    got = [values[k][0] for k in names]
    want = [values[k][1] for k in names]
    fig, ax = plt.subplots(figsize=(5.5, 3.2))
    xs = range(len(names))
    ax.scatter(xs, want, marker="o", s=60, facecolors="none", edgecolors="k", label="closed form")
    ax.scatter(xs, got, marker="x", color="tab:blue", label="computed")
    ax.set_xticks(list(xs), names)
    ax.set_ylabel("|P(1, phi)|")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_report(results, out: Path) -> list:
    out.mkdir(parents=True, exist_ok=True)
    by_id = {r.id: r for r in results}
    paths = [out / "checks.png"]
    _checks_figure(results, paths[0])
    if "obstructions" in by_id and "t3" in by_id["obstructions"].values:
        names, verdicts = by_id["obstructions"].values["t3"]
        paths.append(out / "t3_levels.png")
        _t3_figure(names, verdicts, paths[-1])
    if "table-polynomials" in by_id:
        paths.append(out / "golden_values.png")
        _golden_figure(by_id["table-polynomials"].values, paths[-1])
    summary = out / "summary.json"
    summary.write_text(json.dumps([r.to_json() for r in results], indent=2))
    paths.append(summary)
    return paths
