import numpy as np
import pytest

from railspin.entanglement import (
    EntanglementReport,
    binary_entropy,
    concurrence,
    entanglement_of_formation,
    eof_from_concurrence,
    spin_flip,
)
from railspin.scattering import ImpurityPreparation, scatter_full
from railspin.spinspace import KET_DOWN_DOWN, KET_UP_UP, PSI_PLUS, TwoQubitDensity, tensor

# Frozen oracle value: h(0.8) = -0.8 log2 0.8 - 0.2 log2 0.2.
EOF_AT_C_08 = 0.7219280948873623


def haar_ket(rng, dim=2):
    vec = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return vec / np.linalg.norm(vec)


def lambda_state(strength, random_impurity=False):
    prep = ImpurityPreparation.random() if random_impurity else ImpurityPreparation.down()
    return scatter_full(strength, prep).unconditional


class TestSpinFlip:
    def test_psi_plus_invariant(self):
        rho = TwoQubitDensity.from_pure(PSI_PLUS)
        assert np.max(np.abs(spin_flip(rho).matrix - rho.matrix)) <= 1e-15

    def test_aligned_pair_flips(self):
        rho = TwoQubitDensity.from_pure(KET_UP_UP)
        flipped = spin_flip(rho)
        assert np.max(np.abs(flipped.matrix - np.outer(KET_DOWN_DOWN, KET_DOWN_DOWN))) <= 1e-15

    def test_maximally_mixed_invariant(self):
        mixed = TwoQubitDensity(np.eye(4, dtype=complex) / 4)
        assert np.max(np.abs(spin_flip(mixed).matrix - mixed.matrix)) <= 1e-15

    def test_is_involution(self):
        from railspin.oracle import random_density

        rho = random_density(7)
        assert np.max(np.abs(spin_flip(spin_flip(rho)).matrix - rho.matrix)) <= 1e-14


class TestConcurrence:
    def test_maximally_entangled(self):
        assert concurrence(TwoQubitDensity.from_pure(PSI_PLUS)) == pytest.approx(1.0, abs=1e-12)

    def test_scattered_mixed_state_at_unit_coupling(self):
        assert concurrence(lambda_state(1.0)) == pytest.approx(0.8, abs=1e-12)

    def test_product_states_are_zero(self):
        rng = np.random.default_rng(13)
        for _ in range(20):
            product = np.kron(haar_ket(rng), haar_ket(rng))
            assert concurrence(TwoQubitDensity.from_pure(product)) <= 1e-7

    def test_closed_forms_for_both_preparations(self):
        rng = np.random.default_rng(29)
        for strength in rng.uniform(0.0, 5.0, 50):
            denom = 1 + 9 * strength**2
            assert concurrence(lambda_state(strength)) == pytest.approx(
                8 * strength**2 / denom, abs=1e-10)
            assert concurrence(lambda_state(strength, random_impurity=True)) == pytest.approx(
                4 * strength**2 / denom, abs=1e-10)

    def test_local_unitary_invariance(self):
        from railspin.oracle import random_density

        rng = np.random.default_rng(37)
        for seed in range(15):
            rho = random_density(seed)
            locals_ = []
            for _ in range(2):
                g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
                q, r = np.linalg.qr(g)
                locals_.append(q * (np.diag(r) / np.abs(np.diag(r))))
            u = tensor(locals_[0], locals_[1])
            rotated = TwoQubitDensity(u @ rho.matrix @ u.conj().T)
            assert concurrence(rotated) == pytest.approx(concurrence(rho), abs=1e-9)

    def test_range_on_random_densities(self):
        from railspin.oracle import random_density

        for seed in range(30):
            c = concurrence(random_density(seed))
            assert 0.0 <= c <= 1.0


class TestEntanglementOfFormation:
    def test_value_at_unit_coupling(self):
        report = entanglement_of_formation(lambda_state(1.0))
        assert report.concurrence == pytest.approx(0.8, abs=1e-12)
        assert report.eof == pytest.approx(EOF_AT_C_08, abs=1e-9)

    def test_above_080_at_coupling_3(self):
        report = entanglement_of_formation(lambda_state(3.0))
        assert report.concurrence == pytest.approx(72 / 82, abs=1e-12)
        assert report.eof > 0.8

    def test_zero_concurrence_gives_zero_eof(self):
        report = entanglement_of_formation(TwoQubitDensity.from_pure(KET_UP_UP))
        assert report.concurrence <= 1e-12
        assert report.eof <= 1e-12

    def test_binary_entropy_endpoints(self):
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0
        assert binary_entropy(0.5) == pytest.approx(1.0, abs=1e-15)

    def test_report_consistency_enforced(self):
        with pytest.raises(ValueError):
            EntanglementReport(concurrence=0.8, eof=0.5)
        with pytest.raises(ValueError):
            EntanglementReport(concurrence=1.2, eof=eof_from_concurrence(1.2))

    def test_monotone_sweep_and_dominance(self):
        grid = np.linspace(0.0, 5.0, 51)
        eof_definite = [entanglement_of_formation(lambda_state(j)).eof for j in grid]
        eof_random = [entanglement_of_formation(lambda_state(j, random_impurity=True)).eof
                      for j in grid]
        assert np.all(np.diff(eof_definite) >= -1e-12)
        assert np.all(np.diff(eof_random) >= -1e-12)
        for d, r, j in zip(eof_definite, eof_random, grid):
            assert d >= r - 1e-12
            if j > 0:
                assert d > 0.0 and r > 0.0
