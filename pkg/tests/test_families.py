import numpy as np
import pytest

from steerability import absolute, errors, families, states

SINGLET = np.outer([0, 1, -1, 0], [0, 1, -1, 0]) / 2.0


class TestWerner:
    def test_endpoints(self):
        assert np.allclose(families.werner(0.0), np.eye(4) / 4)
        assert np.allclose(families.werner(1.0), SINGLET, atol=1e-14)

    def test_eigenvalue_closed_form_on_grid(self):
        for p in np.linspace(0.0, 1.0, 101):
            eigs = states.spectrum_report(families.werner(p)).eigenvalues
            expected = np.array([(1 + 3 * p) / 4, (1 - p) / 4, (1 - p) / 4, (1 - p) / 4])
            assert np.max(np.abs(eigs - expected)) < 1e-10

    def test_boundary_purity(self):
        rep = states.spectrum_report(families.werner(1 / np.sqrt(3)))
        assert rep.purity == pytest.approx(0.5, abs=1e-12)
        assert absolute.decide_aus3(families.werner(1 / np.sqrt(3))).in_aus3

    @pytest.mark.parametrize("p", [-0.1, -1 / 3, 1.1])
    def test_out_of_range(self, p):
        with pytest.raises(errors.OutOfRange):
            families.werner(p)


class TestGisin:
    def test_spectrum_closed_form_any_angle(self):
        for lam in np.linspace(0.0, 1.0, 51):
            expected = np.array([lam, (1 - lam) / 2, (1 - lam) / 2, 0.0])
            expected = np.sort(expected)[::-1]
            for theta in (0.1, np.pi / 4, 1.4):
                eigs = states.spectrum_report(families.gisin(lam, theta)).eigenvalues
                assert np.max(np.abs(eigs - expected)) < 1e-10

    def test_verdict_independent_of_angle(self):
        for lam in (0.3, 2 / 3, 0.9):
            verdicts = [
                absolute.decide_aus3(families.gisin(lam, theta))
                for theta in (0.1, np.pi / 4, 1.4)
            ]
            assert len({v.in_aus3 for v in verdicts}) == 1
            spread = max(v.f3_global_max for v in verdicts) - min(
                v.f3_global_max for v in verdicts
            )
            assert spread < 1e-10

    def test_boundary_cases(self):
        boundary = absolute.decide_aus3(families.gisin(2 / 3, 0.8))
        assert boundary.in_aus3
        assert boundary.f3_global_max == pytest.approx(1.0, abs=1e-9)
        mix_only = absolute.decide_aus3(families.gisin(0.0, 0.8))
        assert mix_only.in_aus3
        assert mix_only.purity == pytest.approx(0.5, abs=1e-12)
        pure = absolute.decide_aus3(families.gisin(1.0, np.pi / 4))
        assert pure.f3_global_max == pytest.approx(np.sqrt(3), abs=1e-12)

    def test_out_of_range(self):
        with pytest.raises(errors.OutOfRange):
            families.gisin(1.2, 0.5)
        with pytest.raises(errors.OutOfRange):
            families.gisin(0.5, 0.0)
        with pytest.raises(errors.OutOfRange):
            families.gisin(0.5, np.pi / 2)


class TestXState:
    def test_bell_projector(self):
        rho = families.x_state(0.5, 0, 0, 0.5, 0.5, 0)
        phi_plus = np.zeros(4)
        phi_plus[0] = phi_plus[3] = 1 / np.sqrt(2)
        assert np.allclose(rho, np.outer(phi_plus, phi_plus), atol=1e-14)
        # purity oracle: explicit matrix
        assert np.trace(rho @ rho).real == pytest.approx(1.0, abs=1e-12)
        assert not absolute.decide_aus3(rho).in_aus3

    def test_diagonal_quarter(self):
        rho = families.x_state(0.25, 0.25, 0.25, 0.25, 0, 0)
        assert np.allclose(rho, np.eye(4) / 4)
        assert absolute.decide_aus3(rho).in_aus3

    def test_coherence_constraints(self):
        with pytest.raises(errors.OutOfRange):
            families.x_state(0.5, 0, 0, 0.5, 0.6, 0)
        with pytest.raises(errors.OutOfRange):
            families.x_state(0.25, 0.25, 0.25, 0.25, 0, 0.3)

    def test_weight_constraints(self):
        with pytest.raises(errors.OutOfRange):
            families.x_state(0.5, 0.5, 0.5, 0.5, 0, 0)
        with pytest.raises(errors.OutOfRange):
            families.x_state(1.5, -0.5, 0, 0, 0, 0)

    def test_membership_matches_weight_formula(self):
        rng = np.random.default_rng(95)
        for _ in range(300):
            v = rng.dirichlet(np.ones(4))
            v5 = rng.uniform(-1, 1) * np.sqrt(v[0] * v[3])
            v6 = rng.uniform(-1, 1) * np.sqrt(v[1] * v[2])
            rho = families.x_state(v[0], v[1], v[2], v[3], v5, v6)
            weight = np.sum(v**2) + 2 * (v5**2 + v6**2)
            assert np.trace(rho @ rho).real == pytest.approx(weight, abs=1e-12)
            assert absolute.decide_aus3(rho).in_aus3 == (weight <= 0.5 + 1e-9)


class TestScan:
    def test_werner_threshold(self):
        grid = np.arange(0.0, 1.0 + 1e-12, 1e-3)
        result = families.scan_family("werner", grid)
        assert result.threshold is not None
        assert abs(result.threshold - 1 / np.sqrt(3)) < 1e-9

    @pytest.mark.parametrize("theta", [0.1, np.pi / 4, 1.4])
    def test_gisin_threshold(self, theta):
        grid = np.arange(0.0, 1.0 + 1e-12, 1e-3)
        result = families.scan_family("gisin", grid, theta=theta)
        assert result.threshold is not None
        assert abs(result.threshold - 2 / 3) < 1e-9

    def test_single_point_grid(self):
        result = families.scan_family("werner", [0.4])
        assert len(result.points) == 1
        assert result.threshold is None
        point = result.points[0]
        assert point.parameters == {"p": 0.4}
        direct = absolute.decide_aus3(families.werner(0.4))
        assert point.verdict.in_aus3 == direct.in_aus3
        assert point.verdict.f3_global_max == pytest.approx(
            direct.f3_global_max, abs=1e-12
        )

    def test_rejects_bad_input(self):
        with pytest.raises(errors.OutOfRange):
            families.scan_family("xstate", [0.1])
        with pytest.raises(errors.OutOfRange):
            families.scan_family("werner", [])
