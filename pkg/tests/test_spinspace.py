import numpy as np
import pytest

from railspin.spinspace import (
    IDENTITY_2,
    KET_DOWN,
    KET_UP,
    KET_UP_UP,
    PAULI_Z,
    PSI_PLUS,
    JointState,
    TwoQubitDensity,
    general_eigenvalues_psd_product,
    hermitian_eigenvalues,
    partial_trace_impurity,
    tensor,
)


def random_state(rng, dim):
    vec = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return vec / np.linalg.norm(vec)


def random_hermitian(rng, dim):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return 0.5 * (g + g.conj().T)


class TestTensor:
    def test_up_down_product(self):
        assert np.array_equal(tensor(KET_UP, KET_DOWN), np.array([0, 1, 0, 0], dtype=complex))

    def test_identity_product(self):
        assert np.array_equal(tensor(IDENTITY_2, IDENTITY_2), np.eye(4, dtype=complex))

    def test_zz_eigenvalue_on_up_down(self):
        up_down = tensor(KET_UP, KET_DOWN)
        assert np.allclose(tensor(PAULI_Z, PAULI_Z) @ up_down, -up_down, atol=1e-15)

    def test_associative(self):
        rng = np.random.default_rng(11)
        a, b, c = (rng.standard_normal(d) + 1j * rng.standard_normal(d) for d in (2, 3, 4))
        assert np.allclose(tensor(tensor(a, b), c), tensor(a, tensor(b, c)), atol=0)
        ma, mb, mc = (random_hermitian(rng, d) for d in (2, 2, 2))
        assert np.allclose(tensor(tensor(ma, mb), mc), tensor(ma, tensor(mb, mc)), atol=0)

    def test_mixed_kinds_rejected(self):
        with pytest.raises(ValueError):
            tensor(KET_UP, IDENTITY_2)


class TestJointState:
    def test_basis_indexing(self):
        state = JointState.basis(1, 0, 1)
        assert state.vector[4 * 1 + 2 * 0 + 1] == 1.0
        assert state.norm_squared == 1.0

    def test_dimension_enforced(self):
        with pytest.raises(ValueError):
            JointState(np.zeros(4, dtype=complex))

    def test_normalized_within_tolerance(self):
        rng = np.random.default_rng(3)
        vec = 5.0 * (rng.standard_normal(8) + 1j * rng.standard_normal(8))
        state = JointState(vec).normalized()
        assert abs(state.norm_squared - 1.0) <= 1e-12

    def test_vector_is_read_only(self):
        state = JointState.basis(0, 0, 0)
        with pytest.raises(ValueError):
            state.vector[0] = 2.0


class TestTwoQubitDensity:
    def test_rejects_non_hermitian(self):
        mat = np.eye(4, dtype=complex) / 4
        mat[0, 1] = 0.1
        with pytest.raises(ValueError):
            TwoQubitDensity(mat)

    def test_rejects_bad_trace(self):
        with pytest.raises(ValueError):
            TwoQubitDensity(np.eye(4, dtype=complex))

    def test_rejects_negative_eigenvalue(self):
        mat = np.diag([1.1, -0.1, 0.0, 0.0]).astype(complex)
        with pytest.raises(ValueError):
            TwoQubitDensity(mat)

    def test_weight_of_pure_state(self):
        rho = TwoQubitDensity.from_pure(PSI_PLUS)
        assert rho.weight(PSI_PLUS) == pytest.approx(1.0, abs=1e-14)
        assert rho.weight(KET_UP_UP) == pytest.approx(0.0, abs=1e-14)


class TestPartialTraceImpurity:
    def test_product_state(self):
        state = JointState.from_parts(KET_UP_UP, KET_DOWN)
        rho = partial_trace_impurity(state)
        assert np.allclose(rho.matrix, np.outer(KET_UP_UP, KET_UP_UP), atol=1e-15)

    def test_entangled_electron_impurity_pair(self):
        # (|uud> + |udu>)/sqrt(2) traces to the even mixture of uu and ud.
        vec = np.zeros(8, dtype=complex)
        vec[1] = vec[2] = 1.0 / np.sqrt(2.0)
        rho = partial_trace_impurity(JointState(vec))
        assert np.allclose(rho.matrix, np.diag([0.5, 0.5, 0, 0]), atol=1e-15)

    def test_scattered_state_weights(self):
        # Mixed output of the down-prepared impurity at strength 1: weights
        # (1+J^2)/(1+9J^2) = 0.2 and 8J^2/(1+9J^2) = 0.8.
        from railspin.scattering import scatter

        out = scatter(1.0, JointState.from_parts(KET_UP_UP, KET_DOWN))
        rho = partial_trace_impurity(out)
        assert rho.weight(KET_UP_UP) == pytest.approx(0.2, abs=1e-12)
        assert rho.weight(PSI_PLUS) == pytest.approx(0.8, abs=1e-12)

    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            partial_trace_impurity(2.0 * JointState.basis(0, 0, 0).vector)

    def test_accepts_joint_density(self):
        state = JointState.from_parts(PSI_PLUS, KET_UP)
        rho_from_vec = partial_trace_impurity(state)
        joint = np.outer(state.vector, state.vector.conj())
        rho_from_mat = partial_trace_impurity(joint)
        assert np.allclose(rho_from_vec.matrix, rho_from_mat.matrix, atol=1e-15)

    def test_random_inputs_give_valid_densities(self):
        rng = np.random.default_rng(17)
        for _ in range(50):
            rho = partial_trace_impurity(JointState(random_state(rng, 8)))
            assert abs(np.trace(rho.matrix).real - 1.0) <= 1e-12
            assert np.max(np.abs(rho.matrix - rho.matrix.conj().T)) <= 1e-12
            assert np.linalg.eigvalsh(rho.matrix).min() >= -1e-10


class TestHermitianEigenvalues:
    def test_identity(self):
        assert np.allclose(hermitian_eigenvalues(np.eye(4)), np.ones(4), atol=1e-14)

    def test_already_diagonal(self):
        vals = hermitian_eigenvalues(np.diag([0.8, 0.2, 0.0, 0.0]))
        assert np.allclose(vals, [0.8, 0.2, 0.0, 0.0], atol=1e-14)

    def test_zz_spectrum(self):
        vals = hermitian_eigenvalues(tensor(PAULI_Z, PAULI_Z))
        assert np.allclose(vals, [1, 1, -1, -1], atol=1e-14)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            hermitian_eigenvalues(np.zeros((2, 3)))

    def test_rejects_non_hermitian(self):
        mat = np.eye(4, dtype=complex)
        mat[0, 1] = 1.0
        with pytest.raises(ValueError):
            hermitian_eigenvalues(mat)

    def test_sum_matches_trace_and_reconstruction(self):
        rng = np.random.default_rng(23)
        for _ in range(25):
            mat = random_hermitian(rng, 4)
            vals = hermitian_eigenvalues(mat)
            assert np.all(np.diff(vals) <= 1e-14)
            assert np.sum(vals) == pytest.approx(np.trace(mat).real, abs=1e-10)
            w, v = np.linalg.eigh(mat)
            assert np.allclose(np.sort(vals), w, atol=1e-10)
            assert np.max(np.abs(v @ np.diag(w) @ v.conj().T - mat)) <= 1e-8


class TestGeneralEigenvaluesPsdProduct:
    def test_maximally_mixed_pair(self):
        mixed = TwoQubitDensity(np.eye(4, dtype=complex) / 4)
        assert np.allclose(general_eigenvalues_psd_product(mixed, mixed),
                           np.full(4, 1 / 16), atol=1e-14)

    def test_psi_plus_with_its_flip(self):
        rho = TwoQubitDensity.from_pure(PSI_PLUS)
        vals = general_eigenvalues_psd_product(rho, rho)
        assert np.allclose(vals, [1, 0, 0, 0], atol=1e-12)

    def test_orthogonal_supports(self):
        a = TwoQubitDensity(np.diag([1, 0, 0, 0]).astype(complex))
        b = TwoQubitDensity(np.diag([0, 0, 0, 1]).astype(complex))
        assert np.allclose(general_eigenvalues_psd_product(a, b), np.zeros(4), atol=1e-14)

    def test_sum_matches_product_trace(self):
        from railspin.oracle import random_density

        for seed in range(25):
            a, b = random_density(seed), random_density(seed + 500)
            vals = general_eigenvalues_psd_product(a, b)
            assert np.all(vals >= 0.0)
            total = np.trace(a.matrix @ b.matrix).real
            assert np.sum(vals) == pytest.approx(total, abs=1e-9)

    def test_invalid_inputs_rejected(self):
        not_a_density = np.diag([1.5, -0.5, 0, 0]).astype(complex)
        with pytest.raises(ValueError):
            general_eigenvalues_psd_product(not_a_density, np.eye(4) / 4)
