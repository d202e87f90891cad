"""Figures written next to the CLI reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _finish(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_census(census_rows, path, title=""):
    """Even/odd counts for each multiset of a census sweep, side by side."""
    labels = [r["multiset"] for r in census_rows]
    even = [r["even"] for r in census_rows]
    odd = [r["odd"] for r in census_rows]
    x = range(len(labels))
    width = max(6.0, 0.25 * len(labels))
    fig, ax = plt.subplots(figsize=(width, 4))
    ax.bar([i - 0.2 for i in x], even, width=0.4, label="even", color="tab:blue")
    ax.bar([i + 0.2 for i in x], odd, width=0.4, label="odd", color="tab:orange")
    ax.set_xticks(list(x))
    ax.set_xticklabels(labels, rotation=90, fontsize=7)
    ax.set_yscale("symlog")
    ax.set_ylabel("words")
    ax.set_title(title or "even vs odd words")
    ax.legend()
    return _finish(fig, path)


def plot_by_k(by_k, path, title=""):
    """Signed arrangement counts (-1)^k b_k; the bars sum to the alternating sum."""
    items = sorted((int(k), v) for k, v in by_k.items())
    ks = [k for k, _ in items]
    vals = [(-1) ** k * v for k, v in items]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(ks, vals, color=["tab:red" if v < 0 else "tab:green" for v in vals])
    ax.axhline(0, color="black", linewidth=0.8)
    ax.set_xlabel("k (number of necklaces)")
    ax.set_ylabel("(-1)^k b_k")
    ax.set_title(title or f"alternating sum = {sum(vals)}")
    return _finish(fig, path)


def plot_stirling(table, path):
    """Heat map of the Stirling cycle triangle, rows n and columns k."""
    n = len(table) - 1
    grid = [[table[i][j] if j <= i else 0 for j in range(n + 1)] for i in range(n + 1)]
    fig, ax = plt.subplots(figsize=(5, 4.5))
    im = ax.imshow(grid, cmap="viridis", norm=matplotlib.colors.SymLogNorm(1))
    for i in range(n + 1):
        for j in range(i + 1):
            ax.text(j, i, str(grid[i][j]), ha="center", va="center", fontsize=7, color="white")
    ax.set_xlabel("k")
    ax.set_ylabel("n")
    fig.colorbar(im, ax=ax)
    ax.set_title("permutations of [n] with k cycles")
    return _finish(fig, path)


def plot_witt(report, path):
    """LHS coefficient per monomial of the truncated product, graded-lex order."""
    terms = report.lhs.terms
    labels = ["".join(str(x) for x in e) for e in terms]
    fig, ax = plt.subplots(figsize=(max(5.0, 0.3 * len(labels)), 4))
    ax.bar(range(len(labels)), list(terms.values()), color="tab:purple")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=90, fontsize=7)
    ax.set_ylabel("coefficient")
    ax.set_title(f"Witt product, k={report.k}, D={report.D}: equal={report.equal}")
    return _finish(fig, path)
