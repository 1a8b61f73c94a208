"""Coupling-strength sweeps: the library behind the CLI's delimited output.

Each grid point evaluates the definite-impurity and random-impurity
scattering outputs, their entanglement measures, and the beam-splitter
detection observables of the preparation selected by the config.  Rows
are emitted in grid order; the computation is deterministic, so identical
configs produce byte-identical CSV output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np

from .detection import BeamSplitter, two_fermion_transform
from .entanglement import entanglement_of_formation
from .scattering import ImpurityPreparation, ScatterOutcome, scatter_full
from .spinspace import PAULI_Z, tensor

SWEEP_COLUMNS = (
    "jbold",
    "concurrence_definite",
    "eof_definite",
    "concurrence_random",
    "eof_random",
    "flip_probability",
    "bunching",
    "sz_correlation",
)

DETECT_COLUMNS = ("jbold", "bunching", "sz_correlation")

_SZ_SZ = tensor(PAULI_Z, PAULI_Z)


STDOUT_MARKER = "-"


@dataclass(frozen=True)
class SweepConfig:
    """Uniform inclusive coupling grid, impurity preparation tag, output target.

    ``output_path`` is a file path, or ``"-"`` for standard output.
    """

    j_min: float = 0.0
    j_max: float = 5.0
    steps: int = 101
    impurity: str = "down"
    output_path: str = STDOUT_MARKER

    def __post_init__(self):
        if self.j_min < 0.0 or self.j_max < 0.0:
            raise ValueError("coupling grid bounds must be nonnegative")
        if self.j_min > self.j_max:
            raise ValueError("j_min must not exceed j_max")
        if self.steps < 2:
            raise ValueError("a sweep needs at least 2 grid points")
        ImpurityPreparation.from_tag(self.impurity)


def sweep_grid(config: SweepConfig) -> np.ndarray:
    return np.linspace(config.j_min, config.j_max, config.steps)


def _selected_outcome(strength: float, config: SweepConfig,
                      definite: ScatterOutcome, randomized: ScatterOutcome) -> ScatterOutcome:
    if config.impurity == "down":
        return definite
    if config.impurity == "random":
        return randomized
    return scatter_full(strength, ImpurityPreparation.up())


def sweep_rows(config: SweepConfig) -> list[dict[str, float]]:
    """Evaluate every grid point; one dict per row, keyed by SWEEP_COLUMNS."""
    splitter = BeamSplitter.fifty_fifty()
    rows = []
    for strength in sweep_grid(config):
        definite = scatter_full(strength, ImpurityPreparation.down())
        randomized = scatter_full(strength, ImpurityPreparation.random())
        ent_definite = entanglement_of_formation(definite.unconditional)
        ent_random = entanglement_of_formation(randomized.unconditional)

        selected = _selected_outcome(strength, config, definite, randomized)
        dist = two_fermion_transform(splitter, selected.unconditional)
        flip = selected.flip_probability
        correlation = (dist.conditional_spin_56.expectation(_SZ_SZ)
                       if dist.conditional_spin_56 is not None else float("nan"))

        rows.append({
            "jbold": float(strength),
            "concurrence_definite": ent_definite.concurrence,
            "eof_definite": ent_definite.eof,
            "concurrence_random": ent_random.concurrence,
            "eof_random": ent_random.eof,
            "flip_probability": float("nan") if flip is None else flip,
            "bunching": dist.p_55 + dist.p_66,
            "sz_correlation": correlation,
        })
    return rows


def format_value(value: float) -> str:
    """12 significant digits, plain decimal point."""
    return format(value, ".12g")


def write_csv(rows: Iterable[dict[str, float]], columns: tuple[str, ...],
              stream: TextIO) -> None:
    """Comma-separated rows with a header line and LF line endings."""
    stream.write(",".join(columns) + "\n")
    for row in rows:
        stream.write(",".join(format_value(row[name]) for name in columns) + "\n")
