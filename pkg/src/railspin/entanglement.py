"""Two-qubit mixed-state entanglement: Wootters concurrence and entanglement of formation.

The concurrence of a two-qubit density matrix rho is

    C = max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)),

where l1 >= ... >= l4 are the eigenvalues of rho * rho_tilde and
rho_tilde = (sy x sy) rho* (sy x sy) is the spin-flipped density (complex
conjugation taken entrywise in the fixed standard basis).  The
entanglement of formation follows as h((1 + sqrt(1 - C^2))/2) with h the
binary entropy in bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spinspace import (
    PAULI_Y,
    TwoQubitDensity,
    as_density,
    general_eigenvalues_psd_product,
    tensor,
)

_YY = tensor(PAULI_Y, PAULI_Y)
_YY.setflags(write=False)


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0 by continuity."""
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def eof_from_concurrence(c: float) -> float:
    """Entanglement of formation as a function of the concurrence."""
    return binary_entropy(0.5 * (1.0 + math.sqrt(max(0.0, 1.0 - c * c))))


@dataclass(frozen=True)
class EntanglementReport:
    """Concurrence and entanglement of formation of one density matrix."""

    concurrence: float
    eof: float

    def __post_init__(self):
        if not 0.0 <= self.concurrence <= 1.0 or not 0.0 <= self.eof <= 1.0:
            raise ValueError("entanglement measures must lie in [0, 1]")
        if abs(self.eof - eof_from_concurrence(self.concurrence)) > 1e-12:
            raise ValueError("entanglement of formation inconsistent with concurrence")


def spin_flip(rho) -> TwoQubitDensity:
    """The spin-flipped density (sy x sy) rho* (sy x sy)."""
    mat = as_density(rho).matrix
    return TwoQubitDensity(_YY @ mat.conj() @ _YY)


def concurrence(rho) -> float:
    """Wootters concurrence of a two-qubit density matrix, in [0, 1]."""
    density = as_density(rho)
    lams = general_eigenvalues_psd_product(density, spin_flip(density))
    roots = np.sqrt(lams)
    return max(0.0, float(roots[0] - roots[1] - roots[2] - roots[3]))


def entanglement_of_formation(rho) -> EntanglementReport:
    """Concurrence plus the derived entanglement of formation (bits)."""
    c = concurrence(rho)
    return EntanglementReport(concurrence=c, eof=eof_from_concurrence(c))
