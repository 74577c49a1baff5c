"""Figure rendering for scan results."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

PARAM_LABELS = {"werner": "x", "ku": r"$\chi t$", "wclass": "a"}


def render_scan(rows, path: str) -> None:
    """Plot normalized scan curves to an image file.

    Expects the scan rows produced by the CLI (attributes family, n, param,
    lhs, bound): one curve per n of lhs/bound against the family parameter.
    Points below the dashed line violate the uncertainty relation.
    """
    rows = list(rows)
    if not rows:
        raise ValueError("no rows to plot")
    family = rows[0].family
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for n in sorted({r.n for r in rows}):
        series = [(r.param, r.lhs / r.bound) for r in rows if r.n == n]
        xs, ys = zip(*series)
        ax.plot(xs, ys, label=f"n = {n}")
    ax.axhline(1.0, color="black", linestyle="--", linewidth=1, label="separable bound")
    ax.set_xlabel(PARAM_LABELS.get(family, "parameter"))
    ax.set_ylabel("variance sum / bound")
    ax.set_title(f"LSUR scan: {family} family")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
