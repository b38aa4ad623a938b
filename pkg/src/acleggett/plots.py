"""Optional figure rendering for the CLI report paths."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def leggett_scan_figure(rows, path):
    """Inequality left-hand side vs bound over the scanned phase range."""
    phi = [r["phi"] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(phi, [r["lhs"] for r in rows], label="lhs")
    ax.plot(phi, [r["bound"] for r in rows], "--", label="bound")
    ax.fill_between(
        phi, 0, 1,
        where=[r["violated_flag"] for r in rows],
        transform=ax.get_xaxis_transform(), alpha=0.15, color="C3", label="violated",
    )
    ax.set_xlabel(r"$\varphi$ (rad)")
    ax.set_ylabel("correlation sum")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def convention_report_figure(rows, path):
    """Scatter of the projector-route vs closed-form correlation values."""
    ok = [r for r in rows if not r["degenerate_flag"]]
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.scatter([r["c_analytic"] for r in ok], [r["c_pipeline"] for r in ok], s=8, alpha=0.6)
    ax.plot([-1, 1], [-1, 1], "k--", lw=0.8)
    ax.set_xlabel("closed-form correlation")
    ax.set_ylabel("projector-route correlation")
    ax.set_xlim(-1.05, 1.05)
    ax.set_ylim(-1.05, 1.05)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def layout_figure(layout, path):
    """Top view of the four paths, sources, meeting points, and the charge."""
    fig, ax = plt.subplots(figsize=(5, 5))
    for name, p in (("l1", layout.l1), ("l2", layout.l2), ("l3", layout.l3), ("l4", layout.l4)):
        xs, ys = zip(*p.vertices)
        ax.plot(xs, ys, marker=".", label=name)
    for label, pt in (("O12", layout.o12), ("O34", layout.o34), ("A", layout.a), ("B", layout.b)):
        ax.annotate(label, pt, textcoords="offset points", xytext=(4, 4))
    ax.plot(*layout.charge.position, "k*", markersize=12, label="charge")
    ax.set_aspect("equal")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
