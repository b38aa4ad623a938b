"""Named invariant suites behind the `verify` command.

Each check returns (name, passed, detail). These mirror the library's
algebraic identities; the pytest suite covers them too, but this module
lets a deployed install self-check without a test harness.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import cos, pi, sqrt

import numpy as np

from . import geometry, inequalities, measurement, spinstates, statevec
from .evolution import PhaseSet, ac_gate, evolve, pair_equivalence_residual, pseudo_rotation
from .measurement import Setting
from .spinstates import Direction

TOL = 1e-12


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str


def _result(suite, name, residual, tol):
    return CheckResult(suite, name, residual < tol, f"residual {residual:.3e} (tol {tol:g})")


def _random_state(rng, n):
    c = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return c / np.linalg.norm(c)


def _random_unit(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def check_statevec(seed=42):
    rng = np.random.default_rng(seed)
    out = []
    res = 0.0
    for _ in range(100):
        a, b = _random_state(rng, 1), _random_state(rng, 1)
        c, d = _random_state(rng, 1), _random_state(rng, 1)
        lhs = statevec.inner(statevec.tensor(a, b), statevec.tensor(c, d))
        rhs = statevec.inner(a, c) * statevec.inner(b, d)
        res = max(res, abs(lhs - rhs))
    out.append(_result("statevec", "tensor-inner compatibility", res, TOL))
    res = 0.0
    for _ in range(100):
        s = _random_state(rng, 4)
        g = ac_gate(rng.uniform(-pi, pi))
        after = statevec.apply_single(g, int(rng.integers(1, 5)), s)
        res = max(res, abs(statevec.norm(after) - statevec.norm(s)))
    out.append(_result("statevec", "unitary norm preservation", res, TOL))
    res = 0.0
    perm = (1, 4, 2, 3)
    for _ in range(50):
        s = _random_state(rng, 4)
        back = statevec.reorder(statevec.reorder(s, perm), statevec.invert_perm(perm))
        res = max(res, float(np.linalg.norm(back - s)))
    out.append(_result("statevec", "reorder involution", res, TOL))
    return out


def check_spinstates(seed=42):
    rng = np.random.default_rng(seed)
    out = []
    res_orth = res_sing = res_trip = 0.0
    for _ in range(100):
        d = Direction(rng.uniform(0, pi), rng.uniform(0, 2 * pi))
        z0 = spinstates.pseudo_pair_state(0, d)
        z1 = spinstates.pseudo_pair_state(1, d)
        res_orth = max(res_orth, abs(statevec.inner(z0, z1)))
        res_sing = max(res_sing, abs(abs(statevec.inner(spinstates.singlet(), z0)) - 1))
        res_trip = max(res_trip, abs(statevec.inner(z1, spinstates.singlet())))
    out.append(_result("spinstates", "pair-basis orthonormality", res_orth, TOL))
    out.append(_result("spinstates", "singlet rotation invariance", res_sing, TOL))
    out.append(_result("spinstates", "singlet-triplet orthogonality", res_trip, TOL))
    proj = spinstates.pair_subspace_projector()
    res = 0.0
    for i, ax1 in enumerate("xyz"):
        for j, ax2 in enumerate("xyz"):
            anti = spinstates.pseudo_pauli(ax1) @ spinstates.pseudo_pauli(ax2)
            anti = anti + spinstates.pseudo_pauli(ax2) @ spinstates.pseudo_pauli(ax1)
            want = 2 * proj if i == j else np.zeros((4, 4))
            res = max(res, float(np.abs(anti - want).max()))
    out.append(_result("spinstates", "pseudo-Pauli anticommutators", res, TOL))
    return out


def check_evolution(seed=42):
    rng = np.random.default_rng(seed)
    out = []
    psi0 = spinstates.initial_state()
    res_norm = res_reduce = 0.0
    proj16 = np.kron(spinstates.pair_subspace_projector(), spinstates.pair_subspace_projector())
    for _ in range(100):
        p = PhaseSet(*rng.uniform(-2 * pi, 2 * pi, size=4))
        psi = evolve(psi0, p)
        res_norm = max(res_norm, abs(statevec.norm(psi) - 1))
        # second phase set with the same (phi_A, phi_B)
        shift = rng.uniform(-pi, pi)
        shift2 = rng.uniform(-pi, pi)
        p2 = PhaseSet(p.phi1 + shift, p.phi2 + shift2, p.phi3 + shift2, p.phi4 + shift)
        s1 = proj16 @ statevec.reorder(evolve(psi0, p), spinstates.PAIRING_ORDER)
        s2 = proj16 @ statevec.reorder(evolve(psi0, p2), spinstates.PAIRING_ORDER)
        res_reduce = max(res_reduce, float(np.linalg.norm(s1 - s2)))
    out.append(_result("evolution", "norm preservation", res_norm, TOL))
    out.append(_result("evolution", "subspace depends only on phase differences", res_reduce, TOL))
    out.append(
        _result(
            "evolution",
            "pair gate / rotation equivalence",
            pair_equivalence_residual(rng.uniform(-2 * pi, 2 * pi), 200, seed=seed),
            TOL,
        )
    )
    res = final_state_residual(seed=seed, trials=100)
    out.append(_result("evolution", "final-state sector structure", res, TOL))
    return out


def final_state_residual(seed=42, trials=500) -> float:
    """Max sector residual between the evolved state and its closed form.

    The closed form: pseudo-x rotations by (phi_A, phi_B) on the
    pair-subspace part, phases e^{+-i gamma} on the two complement kets.
    """
    rng = np.random.default_rng(seed)
    psi0_1423 = spinstates.initial_state_1423()
    proj16 = np.kron(spinstates.pair_subspace_projector(), spinstates.pair_subspace_projector())
    up2down2 = statevec.tensor(statevec.UP, statevec.UP, statevec.DOWN, statevec.DOWN)
    down2up2 = statevec.tensor(statevec.DOWN, statevec.DOWN, statevec.UP, statevec.UP)
    worst = 0.0
    for _ in range(trials):
        p = PhaseSet(*rng.uniform(-2 * pi, 2 * pi, size=4))
        psi = statevec.reorder(evolve(spinstates.initial_state(), p), spinstates.PAIRING_ORDER)
        rot = np.kron(pseudo_rotation(p.phi_a), pseudo_rotation(p.phi_b))
        worst = max(worst, float(np.linalg.norm(proj16 @ psi - rot @ (proj16 @ psi0_1423))))
        comp = psi - proj16 @ psi
        want = 0.5 * (
            np.exp(1j * p.gamma) * up2down2 - np.exp(-1j * p.gamma) * down2up2
        )
        worst = max(worst, float(np.linalg.norm(comp - want)))
    return worst


def check_measurement(seed=42):
    rng = np.random.default_rng(seed)
    out = []
    res = 0.0
    for _ in range(200):
        a, b = _random_unit(rng), _random_unit(rng)
        res = max(res, abs(measurement.operator_correlation(a, b) + np.dot(a, b)))
    out.append(_result("measurement", "operator correlation equals -a.b", res, TOL))
    res = 0.0
    for _ in range(50):
        a1, a2, b = rng.normal(size=3), rng.normal(size=3), _random_unit(rng)
        al, be = rng.normal(), rng.normal()
        lhs = measurement.operator_correlation(al * a1 + be * a2, b)
        rhs = al * measurement.operator_correlation(a1, b) + be * measurement.operator_correlation(a2, b)
        res = max(res, abs(lhs - rhs))
    out.append(_result("measurement", "bilinearity", res, TOL))
    settings = [Setting(rng.uniform(0, pi), rng.uniform(0, 2 * pi)) for _ in range(20)]
    psi_f = evolve(spinstates.initial_state(), PhaseSet(*rng.uniform(-pi, pi, size=4)))
    out.append(
        _result(
            "measurement",
            "no-signaling marginals",
            measurement.no_signaling_deviation(psi_f, settings, settings),
            TOL,
        )
    )
    res = 0.0
    for _ in range(50):
        da = Direction(rng.uniform(0, pi), rng.uniform(0, 2 * pi))
        db = Direction(rng.uniform(0, pi), rng.uniform(0, 2 * pi))
        p1 = measurement.joint_probabilities(psi_f, da, db)
        p2 = measurement.joint_probabilities(np.exp(1j * rng.uniform(0, 2 * pi)) * psi_f, da, db)
        res = max(res, float(np.abs(p1 - p2).max()))
        if p1.min() < -TOL or p1.sum() > 1 + TOL:
            res = max(res, 1.0)
    out.append(_result("measurement", "Born probabilities well formed / phase invariant", res, TOL))
    return out


def check_inequalities(seed=42):
    rng = np.random.default_rng(seed)
    out = []
    res_end = res_op = 0.0
    for phi in np.linspace(0, pi, 200):
        s = inequalities.leggett_settings(phi)
        lhs = inequalities.leggett_lhs(measurement.analytic_correlation, s)
        res_end = max(
            res_end,
            abs(lhs - inequalities.leggett_bound(phi) - inequalities.leggett_violation(phi)),
        )
        lhs_op = inequalities.leggett_lhs(measurement.operator_correlation, s)
        res_op = max(res_op, abs(lhs - lhs_op))
    out.append(_result("inequalities", "bound/violation decomposition", res_end, TOL))
    out.append(_result("inequalities", "operator route matches analytic route", res_op, TOL))
    s = inequalities.leggett_settings(rng.uniform(0.1, 3))
    es = [(np.asarray(b.vector) - np.asarray(bp.vector)) for _, b, bp in s.pairs()]
    res = max(abs(float(np.dot(es[i], es[j]))) for i in range(3) for j in range(3) if i != j)
    out.append(_result("inequalities", "difference vectors orthogonal", res, TOL))
    chsh = inequalities.chsh_value(measurement.analytic_correlation, inequalities.chsh_settings())
    out.append(_result("inequalities", "CHSH attains 2*sqrt(2)", abs(chsh - 2 * sqrt(2)), TOL))
    return out


def random_polyline(rng, n_vertices=5, r_lo=0.5, r_hi=3.0):
    """Open polyline with all vertices well outside the exclusion zone."""
    radii = rng.uniform(r_lo, r_hi, size=n_vertices)
    angles = np.cumsum(rng.uniform(-0.9, 0.9, size=n_vertices)) + rng.uniform(0, 2 * pi)
    verts = [(r * cos(a), r * np.sin(a)) for r, a in zip(radii, angles)]
    return geometry.Path(tuple(verts))


def check_geometry(seed=42):
    rng = np.random.default_rng(seed)
    charge = geometry.LineCharge((0.0, 0.0), 1.0)
    out = []
    res = 0.0
    count = 0
    while count < 200:
        p = random_polyline(rng)
        try:
            geometry.check_exclusion(p, charge)
        except geometry.ExclusionZoneViolation:
            continue
        count += 1
        res = max(
            res,
            abs(geometry.ac_phase_numeric(p, charge) - geometry.ac_phase_analytic(p, charge)),
        )
    out.append(_result("geometry", "numeric vs analytic phase", res, 1e-8))
    res = 0.0
    for _ in range(50):
        p = random_polyline(rng)
        res = max(
            res,
            abs(
                geometry.ac_phase_analytic(p.reversed(), charge)
                + geometry.ac_phase_analytic(p, charge)
            ),
        )
    out.append(_result("geometry", "reversal antisymmetry", res, TOL))
    circle = geometry.Path(
        tuple((cos(t), np.sin(t)) for t in np.linspace(0, 2 * pi, 100, endpoint=False)),
        closed=True,
    )
    res = abs(geometry.ac_phase_analytic(circle, charge) + 2 * pi)
    res = max(res, abs(geometry.winding(circle, charge) - 1))
    out.append(_result("geometry", "closed CCW loop gives -2*pi*k, winding +1", res, 1e-10))
    return out


SUITES = {
    "statevec": check_statevec,
    "spinstates": check_spinstates,
    "evolution": check_evolution,
    "measurement": check_measurement,
    "inequalities": check_inequalities,
    "geometry": check_geometry,
}


def run_suites(names=None, seed=42):
    results = []
    for name in names or SUITES:
        results.extend(SUITES[name](seed=seed))
    return results
