import json

import numpy as np
import pytest

from lsurkit import errors, numlin, oracle, tomo
from lsurkit.spin import collective_moments, make_spin_ops
from lsurkit.states import (
    SymmetricState,
    ku_bloch_analytic,
    ku_state,
    singlet,
    wclass_coeffs,
    wclass_covariance,
    wclass_state,
    wclass_two_qubit,
    werner,
)


def brute_pair_marginal(psi: SymmetricState) -> np.ndarray:
    """Reference two-qubit marginal via full embedding and index contraction."""
    ts = oracle.embed_dicke(psi)
    rho = np.outer(ts.amplitudes, ts.amplitudes.conj())
    return numlin.partial_trace(rho, [2] * psi.n_qubits, keep={0, 1})


class TestSinglet:
    def test_two_qubit_singlet(self):
        expected = np.array([0, 1, -1, 0]) / np.sqrt(2)
        assert np.allclose(singlet(1), expected, atol=1e-15)

    def test_spin_one_singlet_phases(self):
        # (|1,1>|1,-1> - |1,0>|1,0> + |1,-1>|1,1>) / sqrt(3)
        expected = np.zeros(9)
        expected[0 * 3 + 2] = 1
        expected[1 * 3 + 1] = -1
        expected[2 * 3 + 0] = 1
        expected = expected / np.sqrt(3)
        assert np.allclose(singlet(2), expected, atol=1e-15)

    @pytest.mark.parametrize("two_j", [1, 2, 3, 4])
    def test_total_spin_annihilation(self, two_j):
        ops = make_spin_ops(two_j)
        psi = singlet(two_j)
        eye = np.eye(ops.dim)
        for op in ops.components:
            total = np.kron(op, eye) + np.kron(eye, op)
            assert np.linalg.norm(total @ psi) <= 1e-12

    @pytest.mark.parametrize("two_j", [1, 2, 3])
    def test_lsur_lhs_vanishes(self, two_j):
        ops = make_spin_ops(two_j)
        psi = singlet(two_j)
        eye = np.eye(ops.dim)
        lhs = 0.0
        for op in ops.components:
            total = np.kron(op, eye) + np.kron(eye, op)
            mean = np.vdot(psi, total @ psi).real
            lhs += np.vdot(total @ psi, total @ psi).real - mean**2
        assert abs(lhs) <= 1e-10


class TestWerner:
    def test_fully_mixed_limit(self):
        assert np.allclose(werner(0.0), np.eye(4) / 4, atol=1e-15)

    def test_pure_limit_is_singlet_projector(self):
        psi = singlet(1)
        assert np.allclose(werner(1.0), np.outer(psi, psi.conj()), atol=1e-15)

    def test_per_component_variance(self):
        from lsurkit.spin import ID2, PAULIS

        rho = werner(0.5)
        for p in PAULIS:
            op = np.kron(p, ID2) + np.kron(ID2, p)
            mean = np.trace(rho @ op).real
            var = np.trace(rho @ op @ op).real - mean**2
            assert var == pytest.approx(2 * (1 - 0.5), abs=1e-12)

    @pytest.mark.parametrize("x", [-0.1, 1.1])
    def test_domain(self, x):
        with pytest.raises(errors.DomainError):
            werner(x)


class TestWClassState:
    def test_product_limit(self):
        with pytest.warns(UserWarning):
            psi = wclass_state(4, 1.0)
        assert np.allclose(psi.amplitudes, [1, 0, 0, 0, 0], atol=1e-15)

    def test_pure_w_limit(self):
        with pytest.warns(UserWarning):
            psi = wclass_state(4, 0.0)
        assert np.allclose(psi.amplitudes, [0, 1, 0, 0, 0], atol=1e-15)

    def test_balanced_amplitudes(self):
        psi = wclass_state(4, 1 / np.sqrt(2))
        expected = np.zeros(5)
        expected[0] = expected[1] = 1 / np.sqrt(2)
        assert np.allclose(psi.amplitudes, expected, atol=1e-15)

    def test_domain(self):
        with pytest.raises(errors.DomainError):
            wclass_state(4, 1.5)
        with pytest.raises(errors.DomainError):
            wclass_state(1, 0.5)


class TestWClassTwoQubit:
    def test_product_limit_projector(self):
        with pytest.warns(UserWarning):
            rho = wclass_two_qubit(4, 1.0)
        assert np.allclose(rho, np.diag([1, 0, 0, 0]), atol=1e-15)

    def test_pure_w_n4_coefficients(self):
        with pytest.warns(UserWarning):
            c = wclass_coeffs(4, 0.0)
        assert c.A == pytest.approx(0.5, abs=1e-15)
        assert c.B == pytest.approx(0.0, abs=1e-15)
        assert c.D == pytest.approx(0.25, abs=1e-15)
        assert c.normalizer == pytest.approx(1.0, abs=1e-15)

    @pytest.mark.parametrize("n_qubits", [2, 3, 4, 5, 6, 8])
    def test_matches_brute_force_marginal(self, n_qubits):
        rng = np.random.default_rng(n_qubits)
        for a in rng.uniform(0.01, 0.99, size=5):
            closed = wclass_two_qubit(n_qubits, a)
            brute = brute_pair_marginal(wclass_state(n_qubits, a))
            assert np.max(np.abs(closed - brute)) <= 1e-10

    @pytest.mark.parametrize(
        "rho_factory",
        [
            lambda: wclass_two_qubit(6, 0.4),
            lambda: wclass_two_qubit(2, 0.7),
            lambda: werner(0.0),
            lambda: werner(0.3),
            lambda: werner(1.0),
        ],
    )
    def test_generated_matrices_are_valid_densities(self, rho_factory):
        rho = rho_factory()
        assert numlin.hermiticity_defect(rho) <= 1e-14
        assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
        assert np.linalg.eigvalsh(rho)[0] >= -1e-10


class TestWClassCovariance:
    def test_product_limit_vanishes(self):
        with pytest.warns(UserWarning):
            cov = wclass_covariance(4, 1.0)
        assert np.max(np.abs(cov)) <= 1e-14

    def test_pure_w_n4_least_eigenvalue(self):
        with pytest.warns(UserWarning):
            cov = wclass_covariance(4, 0.0)
        assert np.allclose(cov, np.diag([0.5, 0.5, -0.25]), atol=1e-14)
        assert np.linalg.eigvalsh(cov)[0] == pytest.approx(-0.25, abs=1e-12)

    @pytest.mark.parametrize("n_qubits", [2, 4, 6, 8])
    def test_c22_cross_check(self, n_qubits):
        rng = np.random.default_rng(20 + n_qubits)
        for a in rng.uniform(0.01, 0.99, size=5):
            c = wclass_coeffs(n_qubits, a)
            bp = tomo.bloch_from_two_qubit(wclass_two_qubit(n_qubits, a))
            extracted = (bp.t - np.outer(bp.s, bp.s))[1, 1]
            assert extracted == pytest.approx(2 * c.D / c.normalizer, abs=1e-10)

    @pytest.mark.parametrize("n_qubits", [2, 3, 4, 6, 8])
    def test_full_matrix_against_tomo(self, n_qubits):
        rng = np.random.default_rng(30 + n_qubits)
        for a in rng.uniform(0.01, 0.99, size=5):
            closed = wclass_covariance(n_qubits, a)
            bp = tomo.bloch_from_two_qubit(wclass_two_qubit(n_qubits, a))
            extracted = tomo.covariance(bp).c
            assert np.max(np.abs(closed - extracted)) <= 1e-10


class TestKuState:
    def test_no_evolution(self):
        psi = ku_state(4, 0.0)
        assert np.allclose(psi.amplitudes, [0, 0, 0, 0, 1], atol=1e-12)

    @pytest.mark.parametrize("n_qubits", [2, 4, 6, 10])
    def test_mean_spin_z_closed_form(self, n_qubits):
        for chi_t in (0.1, 0.7, 1.9):
            psi = ku_state(n_qubits, chi_t)
            m1, _ = collective_moments(psi)
            s3 = 2 * m1[2] / n_qubits
            assert s3 == pytest.approx(-np.cos(chi_t) ** (n_qubits - 1), abs=1e-10)

    def test_norm_preserved(self):
        for chi_t in (0.0, 0.3, 2.7, 11.0):
            psi = ku_state(6, chi_t)
            assert np.vdot(psi.amplitudes, psi.amplitudes).real == pytest.approx(
                1.0, abs=1e-12
            )

    def test_odd_qubit_count_rejected(self):
        with pytest.raises(errors.DomainError):
            ku_state(5, 0.2)


class TestKuBlochAnalytic:
    def test_initial_point(self):
        bp = ku_bloch_analytic(4, 0.0)
        assert np.allclose(bp.s, [0, 0, -1], atol=1e-15)
        assert np.allclose(bp.t, np.diag([0, 0, 1]), atol=1e-15)

    def test_quarter_turn_correlation(self):
        bp = ku_bloch_analytic(4, np.pi / 4)
        assert bp.t[0, 1] == pytest.approx(np.sqrt(2) / 4, abs=1e-14)

    @pytest.mark.parametrize("n_qubits", [4, 6, 8, 10])
    def test_matches_numeric_evolution(self, n_qubits):
        worst = 0.0
        for chi_t in np.linspace(0.0, np.pi, 50):
            analytic = ku_bloch_analytic(n_qubits, chi_t)
            extracted = tomo.bloch_from_symmetric(ku_state(n_qubits, chi_t))
            worst = max(
                worst,
                float(np.max(np.abs(analytic.s - extracted.s))),
                float(np.max(np.abs(analytic.t - extracted.t))),
            )
        assert worst <= 1e-9

    def test_odd_qubit_count_rejected(self):
        with pytest.raises(errors.DomainError):
            ku_bloch_analytic(7, 0.2)


class TestJsonSchema:
    def test_round_trip(self):
        psi = ku_state(4, 0.37)
        again = SymmetricState.from_json_obj(json.loads(psi.to_json()))
        assert again.n_qubits == 4
        assert np.allclose(again.amplitudes, psi.amplitudes, atol=1e-15)

    def test_schema_document_shape(self):
        doc = json.loads(wclass_state(3, 0.5).to_json())
        assert set(doc) == {"n_qubits", "dicke_amplitudes"}
        assert doc["n_qubits"] == 3
        assert len(doc["dicke_amplitudes"]) == 4
        assert all(len(pair) == 2 for pair in doc["dicke_amplitudes"])

    @pytest.mark.parametrize(
        "obj",
        [
            [],
            {},
            {"n_qubits": 2},
            {"n_qubits": "2", "dicke_amplitudes": [[1, 0], [0, 0], [0, 0]]},
            {"n_qubits": 2, "dicke_amplitudes": [[1, 0], [0, 0]]},
            {"n_qubits": 2, "dicke_amplitudes": [[1, 0], [0, 0], "x"]},
            {"n_qubits": 2, "dicke_amplitudes": [[1, 0], [0, 0], [0, "i"]]},
        ],
    )
    def test_malformed_documents_rejected(self, obj):
        with pytest.raises(errors.ContractError):
            SymmetricState.from_json_obj(obj)

    def test_unnormalized_document_rejected(self):
        obj = {"n_qubits": 2, "dicke_amplitudes": [[1, 0], [1, 0], [0, 0]]}
        with pytest.raises(errors.ContractError):
            SymmetricState.from_json_obj(obj)
