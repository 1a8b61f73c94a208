"""Figure rendering for sweep and detection reports.

Figures are written straight to files (Agg backend, no display) next to
the delimited output; the CSV remains the primary artifact.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def render_sweep_figure(rows: list[dict[str, float]], path: str) -> None:
    """Entanglement of the output electrons against the coupling strength.

    Solid line: definite (down) impurity preparation; dashed line:
    completely random preparation.
    """
    j = [row["jbold"] for row in rows]
    fig, (ax_e, ax_c) = plt.subplots(1, 2, figsize=(9, 3.6), sharex=True)

    ax_e.plot(j, [row["eof_definite"] for row in rows], "k-", label="definite impurity")
    ax_e.plot(j, [row["eof_random"] for row in rows], "k--", label="random impurity")
    ax_e.set_xlabel("coupling strength")
    ax_e.set_ylabel("entanglement of formation (bits)")
    ax_e.set_ylim(0, 1.02)
    ax_e.legend(loc="lower right")

    ax_c.plot(j, [row["concurrence_definite"] for row in rows], "k-", label="definite impurity")
    ax_c.plot(j, [row["concurrence_random"] for row in rows], "k--", label="random impurity")
    ax_c.set_xlabel("coupling strength")
    ax_c.set_ylabel("concurrence")
    ax_c.set_ylim(0, 1.02)
    ax_c.legend(loc="lower right")

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_detection_figure(rows: list[dict[str, float]], path: str) -> None:
    """Detection observables against the coupling strength."""
    j = [row["jbold"] for row in rows]
    fig, ax = plt.subplots(figsize=(5.5, 3.6))
    ax.plot(j, [row["sz_correlation"] for row in rows], "k-",
            label=r"$\langle S_z(5)\,S_z(6)\rangle$")
    ax.plot(j, [row["bunching"] for row in rows], "k--", label="bunching probability")
    ax.axhline(0.0, color="0.7", linewidth=0.8)
    ax.set_xlabel("coupling strength")
    ax.set_ylabel("detection observable")
    ax.legend(loc="upper right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
