from math import cos, pi, sin, sqrt

import numpy as np
import pytest
from hypothesis import given, strategies as st

from acleggett import measurement, spinstates
from acleggett.evolution import PhaseSet, evolve
from acleggett.measurement import (
    DegenerateNormalization,
    Setting,
    analytic_correlation,
    convention_report,
    joint_probabilities,
    no_signaling_deviation,
    normalized_correlation,
    operator_correlation,
)
from acleggett.spinstates import Direction, initial_state


def random_unit(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


class TestSetting:
    def test_vector_is_unit(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            s = Setting(rng.uniform(0, pi), rng.uniform(0, 2 * pi))
            assert np.linalg.norm(s.vector) == pytest.approx(1, abs=1e-12)


class TestJointProbabilities:
    def test_unrotated_z_projectors(self):
        psi = evolve(initial_state(), PhaseSet(0, 0, 0, 0))
        p = joint_probabilities(psi, Direction(0, 0), Direction(0, 0))
        assert np.allclose(p, [[0, 0.25], [0.25, 0]], atol=1e-12)

    def test_probabilities_bounded(self):
        rng = np.random.default_rng(1)
        for _ in range(200):
            psi = evolve(initial_state(), PhaseSet(*rng.uniform(-pi, pi, size=4)))
            p = joint_probabilities(
                psi,
                Direction(rng.uniform(0, pi), rng.uniform(0, 2 * pi)),
                Direction(rng.uniform(0, pi), rng.uniform(0, 2 * pi)),
            )
            assert p.min() >= -1e-12
            assert p.max() <= 1 + 1e-12
            assert p.sum() <= 1 + 1e-12

    def test_equatorial_stretch_probability(self):
        # 16-dim brute-force value: p11 = sin^2(thetaA - thetaB) / 4
        psi = evolve(initial_state(), PhaseSet(0, 0, 0, 0))
        p = joint_probabilities(psi, Direction(pi / 2, 0.0), Direction(pi / 2, pi / 4))
        assert p[1, 1] == pytest.approx(sin(pi / 4) ** 2 / 4, abs=1e-12)
        assert p[1, 1] == pytest.approx(1 / 8, abs=1e-12)

    def test_global_phase_invariance(self):
        psi = evolve(initial_state(), PhaseSet(0.3, 0.1, -0.4, 0.9))
        da, db = Direction(1.0, 2.0), Direction(0.5, 4.0)
        p1 = joint_probabilities(psi, da, db)
        p2 = joint_probabilities(np.exp(0.77j) * psi, da, db)
        assert np.allclose(p1, p2, atol=1e-12)

    def test_swap_symmetry_transposes(self):
        # exchanging the two pairs' roles and swapping dA <-> dB transposes p
        psi = evolve(initial_state(), PhaseSet(0.3, 1.1, -0.4, 0.6))
        psi_swapped = evolve(initial_state(), PhaseSet(1.1, 0.3, 0.6, -0.4))
        da, db = Direction(1.0, 2.0), Direction(0.5, 4.0)
        p = joint_probabilities(psi, da, db)
        p_swapped = joint_probabilities(psi_swapped, db, da)
        assert np.allclose(p, p_swapped.T, atol=1e-12)


class TestNormalizedCorrelation:
    def test_anticorrelated(self):
        assert normalized_correlation(np.array([[0, 0.25], [0.25, 0]])) == pytest.approx(-1)

    def test_correlated(self):
        assert normalized_correlation(np.array([[0.25, 0], [0, 0.25]])) == pytest.approx(1)

    def test_degenerate(self):
        with pytest.raises(DegenerateNormalization):
            normalized_correlation(np.zeros((2, 2)))

    @given(st.floats(min_value=1e-6, max_value=1e6))
    def test_scaling_invariance(self, scale):
        p = np.array([[0.1, 0.2], [0.3, 0.15]])
        assert normalized_correlation(scale * p) == pytest.approx(
            normalized_correlation(p), abs=1e-12
        )


class TestOperatorCorrelation:
    def test_parallel_settings(self):
        s = Setting(0.8, 1.1)
        assert operator_correlation(s, s) == pytest.approx(-1, abs=1e-12)

    def test_perpendicular(self):
        assert operator_correlation([1, 0, 0], [0, 0, 1]) == pytest.approx(0, abs=1e-12)

    def test_matches_dot_product(self):
        rng = np.random.default_rng(2)
        for _ in range(1000):
            a, b = random_unit(rng), random_unit(rng)
            assert operator_correlation(a, b) == pytest.approx(-np.dot(a, b), abs=1e-12)

    def test_bilinear(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            a1, a2 = rng.normal(size=3), rng.normal(size=3)
            b = random_unit(rng)
            al, be = rng.normal(), rng.normal()
            lhs = operator_correlation(al * a1 + be * a2, b)
            rhs = al * operator_correlation(a1, b) + be * operator_correlation(a2, b)
            assert lhs == pytest.approx(rhs, abs=1e-12)


class TestAnalyticCorrelation:
    def test_parallel(self):
        assert analytic_correlation([1, 0, 0], [1, 0, 0]) == -1

    def test_chsh_pair(self):
        assert analytic_correlation([1, 0, 0], [1 / sqrt(2), 1 / sqrt(2), 0]) == pytest.approx(
            -1 / sqrt(2)
        )

    def test_leggett_pair(self):
        phi = 0.77
        b = [sin(phi / 2), 0, cos(phi / 2)]
        assert analytic_correlation([0, 0, 1], b) == pytest.approx(-cos(phi / 2), abs=1e-12)


class TestNoSignaling:
    def test_random_settings(self):
        rng = np.random.default_rng(4)
        settings = [Setting(rng.uniform(0, pi), rng.uniform(0, 2 * pi)) for _ in range(100)]
        psi = evolve(initial_state(), PhaseSet(*rng.uniform(-pi, pi, size=4)))
        assert no_signaling_deviation(psi, settings, settings) < 1e-12

    def test_gamma_independent(self):
        settings = [Setting(0.4, 1.9), Setting(2.0, 0.3)]
        # same (phi_A, phi_B), different gamma
        p1 = PhaseSet(0.5, 0.1, -0.2, 0.3)
        p2 = PhaseSet(1.5, 0.1, -0.2, 1.3)
        d1 = no_signaling_deviation(evolve(initial_state(), p1), settings, settings)
        d2 = no_signaling_deviation(evolve(initial_state(), p2), settings, settings)
        assert d1 == pytest.approx(d2, abs=1e-12)

    def test_empty_lists_rejected(self):
        with pytest.raises(ValueError):
            no_signaling_deviation(initial_state(), [], [Setting(0, 0)])


class TestConventionReport:
    def test_runs_and_summarizes(self):
        rng = np.random.default_rng(5)
        phase_sets = [PhaseSet(*rng.uniform(-pi, pi, size=4)) for _ in range(4)]
        thetas = [tuple(rng.uniform(0, 2 * pi, size=2)) for _ in range(4)]
        rows, summary = convention_report(phase_sets, thetas)
        assert summary["n_rows"] == 16
        assert summary["n_degenerate"] + len(
            [r for r in rows if not r["degenerate_flag"]]
        ) == 16
        for r in rows:
            if r["degenerate_flag"]:
                assert r["c_pipeline"] is None
            else:
                assert -1 - 1e-12 <= r["c_pipeline"] <= 1 + 1e-12

    def test_equal_settings_row(self):
        # phi_A = phi_B = 0, theta_A = theta_B: analytic says -1; the literal
        # projector route is degenerate or +1 (p01 = p10 = 0 at xi = pi/2).
        rows, _ = convention_report([PhaseSet(0, 0, 0, 0)], [(0.7, 0.7)])
        (row,) = rows
        assert row["c_analytic"] == pytest.approx(-1, abs=1e-12)
        assert row["p01"] == pytest.approx(0, abs=1e-12)
        assert row["p10"] == pytest.approx(0, abs=1e-12)
        assert row["degenerate_flag"] or row["c_pipeline"] == pytest.approx(1, abs=1e-12)

    def test_pipeline_off_diagonal_cells_vanish(self):
        # xi = pi/2 pair-basis index-1 states are orthogonal to the pair
        # subspace, so the cross cells vanish for every sample.
        rng = np.random.default_rng(6)
        phase_sets = [PhaseSet(*rng.uniform(-pi, pi, size=4)) for _ in range(3)]
        thetas = [tuple(rng.uniform(0, 2 * pi, size=2)) for _ in range(3)]
        rows, _ = convention_report(phase_sets, thetas)
        for r in rows:
            assert r["p01"] == pytest.approx(0, abs=1e-12)
            assert r["p10"] == pytest.approx(0, abs=1e-12)
