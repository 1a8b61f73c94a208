"""First-order exchange scattering of two same-spin electrons off a magnetic impurity.

Two electrons with parallel spins meet a localized spin-1/2 impurity at a
four-rail junction and leave through separate rails, 3 and 4.  At first
order in the exchange coupling the scattering map on the 8-dimensional
(electron3 x electron4 x impurity) spin space is

    S = 1 + i*J*K,    K = I - 2*(P_3i + P_4i),

where J is the dimensionless coupling strength (pi * exchange energy *
density of states at the Fermi level) and P_li exchanges the spin of
electron l with the impurity spin.  Equivalently, in Pauli form,
K = -(I + tau.(sigma_3 + sigma_4)).  K commutes with the total z spin,
is Hermitian, and squares to 9 on the electron-triplet sector and to 1 on
the electron-singlet sector, so the pre-normalization squared norm of the
scattered state is 1 + 9J^2 (triplet input) or 1 + J^2 (singlet input).

A down-prepared impurity turns the spin-filtered input |uu> x |dn> into

    [(1 + iJ)|uu>|dn> - 2*sqrt(2)*iJ |psi+>|up>] / sqrt(1 + 9J^2),

so measuring the impurity flipped (probability 8J^2/(1+9J^2)) leaves the
electrons in the maximally entangled |psi+>.  Without any impurity
measurement the electrons end up in the mixed state returned by
:func:`scatter_full`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spinspace import (
    HERMITICITY_TOL,
    IDENTITY_2,
    KET_DOWN,
    KET_UP,
    KET_UP_UP,
    PAULI_Z,
    JointState,
    TwoQubitDensity,
    partial_trace_impurity,
    tensor,
)

# Probability below which a measurement branch is treated as absent.
_BRANCH_TOL = 1e-14


@dataclass(frozen=True)
class Coupling:
    """Dimensionless scattering strength, nonnegative and finite."""

    strength: float

    def __post_init__(self):
        value = float(self.strength)
        if not math.isfinite(value) or value < 0.0:
            raise ValueError("coupling strength must be finite and nonnegative")
        object.__setattr__(self, "strength", value)


def coupling_from_parameters(j_exchange: float, rho_fermi: float) -> Coupling:
    """Coupling strength pi * j_exchange * rho_fermi.

    j_exchange is the exchange energy per impurity atom and rho_fermi the
    conduction-electron density of states at the Fermi level (inverse
    energy).  For a bandwidth-D metal both are of order D and 1/D, so the
    strength comes out of order unity.
    """
    if j_exchange < 0.0 or rho_fermi < 0.0:
        raise ValueError("exchange coupling and density of states must be nonnegative")
    return Coupling(math.pi * j_exchange * rho_fermi)


def _strength(j) -> float:
    return j.strength if isinstance(j, Coupling) else Coupling(j).strength


def _build_kernel() -> np.ndarray:
    # K = I - 2*(P_3i + P_4i) from explicit spin-swap permutations; the
    # Pauli identity tau.sigma = 2*SWAP - I makes this -(I + tau.sigma_tot).
    p3 = np.zeros((8, 8), dtype=complex)
    p4 = np.zeros((8, 8), dtype=complex)
    for i in range(8):
        s3, s4, si = (i >> 2) & 1, (i >> 1) & 1, i & 1
        p3[(si << 2) | (s4 << 1) | s3, i] = 1.0
        p4[(s3 << 2) | (si << 1) | s4, i] = 1.0
    kernel = np.eye(8, dtype=complex) - 2.0 * (p3 + p4)
    kernel.setflags(write=False)
    return kernel


_KERNEL = _build_kernel()


def born_kernel() -> np.ndarray:
    """The 8x8 Hermitian kernel K of the first-order scattering map 1 + iJK."""
    return _KERNEL


def scatter(j, state: JointState) -> JointState:
    """Apply the first-order scattering map and normalize.

    The output norm before normalization is 1 + J^2 <K^2> >= 1, so the
    map never annihilates a normalized input.
    """
    strength = _strength(j)
    if not isinstance(state, JointState):
        state = JointState(state)
    if not state.is_normalized():
        raise ValueError("scatter expects a normalized input state")
    raw = state.vector + 1j * strength * (_KERNEL @ state.vector)
    norm2 = np.vdot(raw, raw).real
    assert norm2 >= 1.0 - 1e-9, "first-order map lost norm; kernel is corrupted"
    return JointState(raw / np.sqrt(norm2))


def unitary_probe(j, state: JointState) -> JointState:
    """Apply exp(iJK) via the spectral decomposition of the kernel.

    A norm-preserving sanity probe: for small couplings it agrees with
    :func:`scatter` to first order in J.  This is not a resummation of the
    scattering series beyond first order.
    """
    strength = _strength(j)
    if not isinstance(state, JointState):
        state = JointState(state)
    if not state.is_normalized():
        raise ValueError("unitary_probe expects a normalized input state")
    eigvals, eigvecs = np.linalg.eigh(_KERNEL)
    phases = np.exp(1j * strength * eigvals)
    out = eigvecs @ (phases * (eigvecs.conj().T @ state.vector))
    return JointState(out)


@dataclass(frozen=True)
class ImpurityPreparation:
    """Initial impurity spin: definite up/down, completely random, or explicit.

    The completely random preparation is the normalized maximally mixed
    state I/2.  An explicit preparation is any valid 2x2 density matrix.
    """

    kind: str
    matrix: np.ndarray

    _KINDS = ("down", "up", "random", "explicit")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown impurity preparation {self.kind!r}")
        mat = np.array(self.matrix, dtype=complex)
        if mat.shape != (2, 2):
            raise ValueError("impurity preparation must be a 2x2 density matrix")
        if np.max(np.abs(mat - mat.conj().T)) > HERMITICITY_TOL:
            raise ValueError("impurity preparation must be Hermitian")
        if abs(np.trace(mat).real - 1.0) > HERMITICITY_TOL:
            raise ValueError("impurity preparation must have unit trace")
        if np.linalg.eigvalsh(mat).min() < -1e-10:
            raise ValueError("impurity preparation must be positive semidefinite")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    @classmethod
    def down(cls) -> "ImpurityPreparation":
        return cls("down", np.outer(KET_DOWN, KET_DOWN.conj()))

    @classmethod
    def up(cls) -> "ImpurityPreparation":
        return cls("up", np.outer(KET_UP, KET_UP.conj()))

    @classmethod
    def random(cls) -> "ImpurityPreparation":
        return cls("random", np.eye(2, dtype=complex) / 2.0)

    @classmethod
    def explicit(cls, matrix: np.ndarray) -> "ImpurityPreparation":
        return cls("explicit", matrix)

    @classmethod
    def from_tag(cls, tag: str) -> "ImpurityPreparation":
        try:
            return {"down": cls.down, "up": cls.up, "random": cls.random}[tag]()
        except KeyError:
            raise ValueError(f"unknown impurity tag {tag!r}") from None

    @property
    def is_definite(self) -> bool:
        return self.kind in ("down", "up")

    def branches(self) -> list[tuple[float, np.ndarray]]:
        """Pure components (weight, ket) of the preparation.

        Mixed preparations are split along the eigenbasis.  Because the
        electrons always enter spin-aligned (triplet sector), every branch
        scatters with the same pre-normalization norm 1 + 9J^2, which makes
        the preparation-to-output map linear and therefore independent of
        the decomposition chosen here.
        """
        if self.kind == "down":
            return [(1.0, KET_DOWN)]
        if self.kind == "up":
            return [(1.0, KET_UP)]
        if self.kind == "random":
            return [(0.5, KET_UP), (0.5, KET_DOWN)]
        weights, vectors = np.linalg.eigh(self.matrix)
        return [(float(w), vectors[:, i].copy())
                for i, w in enumerate(weights) if w > _BRANCH_TOL]


@dataclass(frozen=True)
class ScatterOutcome:
    """Electron-spin output of a full scattering run.

    ``flip_probability`` is the chance that a z measurement of the impurity
    disagrees with its prepared direction; it is defined only for definite
    preparations and is None otherwise.  A conditional density is None when
    its branch has zero probability.  For definite preparations,

        unconditional = p_flip * conditional_on_flip
                        + (1 - p_flip) * conditional_on_no_flip.
    """

    unconditional: TwoQubitDensity
    flip_probability: float | None
    conditional_on_flip: TwoQubitDensity | None
    conditional_on_no_flip: TwoQubitDensity | None


def _impurity_branch(vector: np.ndarray, s_imp: int) -> tuple[float, TwoQubitDensity | None]:
    """Probability and conditional electron state for impurity z outcome s_imp."""
    amplitudes = vector.reshape(4, 2)[:, s_imp]
    prob = float(np.vdot(amplitudes, amplitudes).real)
    if prob <= _BRANCH_TOL:
        return prob, None
    return prob, TwoQubitDensity(np.outer(amplitudes, amplitudes.conj()) / prob)


def scatter_full(j, preparation: ImpurityPreparation) -> ScatterOutcome:
    """Scatter the spin-filtered |uu> electron pair off a prepared impurity.

    Each pure impurity component is scattered and traced over the impurity;
    the results are mixed with the preparation weights.  With a definite
    down preparation the unconditional output is

        [(1 + J^2)|uu><uu| + 8J^2 |psi+><psi+|] / (1 + 9J^2),

    with flip probability 8J^2/(1+9J^2); a completely random preparation
    instead yields weights (1+5J^2)/(1+9J^2) and 4J^2/(1+9J^2).
    """
    mixture = np.zeros((4, 4), dtype=complex)
    scattered = None
    for weight, ket in preparation.branches():
        out = scatter(j, JointState.from_parts(KET_UP_UP, ket))
        mixture += weight * partial_trace_impurity(out).matrix
        scattered = out
    unconditional = TwoQubitDensity(0.5 * (mixture + mixture.conj().T))

    if not preparation.is_definite:
        return ScatterOutcome(unconditional, None, None, None)

    prepared = 0 if preparation.kind == "up" else 1
    flip_prob, conditional_flip = _impurity_branch(scattered.vector, 1 - prepared)
    _, conditional_stay = _impurity_branch(scattered.vector, prepared)
    return ScatterOutcome(unconditional, flip_prob, conditional_flip, conditional_stay)


def total_sz_operator() -> np.ndarray:
    """Total z-spin operator (Pauli units) on the 8-dimensional joint space."""
    return (tensor(PAULI_Z, IDENTITY_2, IDENTITY_2)
            + tensor(IDENTITY_2, PAULI_Z, IDENTITY_2)
            + tensor(IDENTITY_2, IDENTITY_2, PAULI_Z))
