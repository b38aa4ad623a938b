"""Joint probabilities, correlation functions, and the convention report.

Two correlation routes are kept deliberately separate:

* the projector route: pair-basis projectors on pairs (1,4) and (2,3)
  give four joint probabilities, normalized into a correlation;
* the operator route: expectation of pseudo-Pauli dot products on the
  initial state, renormalized by the pair-subspace weight 1/2.

The operator route reproduces C(a, b) = -a.b exactly. Whether the
literal projector route agrees is an open numerical question that
convention_report tabulates without asserting either way.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import cos, sin

import numpy as np

from . import statevec, spinstates
from .evolution import PhaseSet, evolve
from .spinstates import Direction, PAIRING_ORDER

EPS_NORM = 1e-10


class DegenerateNormalization(ValueError):
    """All four joint probabilities vanish; the conditional correlation is undefined."""


@dataclass(frozen=True)
class Setting:
    """Measurement setting: projector angle theta and accumulated phase phi."""

    theta: float
    phi: float

    @property
    def vector(self) -> np.ndarray:
        return np.array(
            [sin(self.theta) * cos(self.phi), sin(self.theta) * sin(self.phi), cos(self.theta)]
        )

    @property
    def vector_heisenberg(self) -> np.ndarray:
        """Alternative effective vector from evolving the projector operator."""
        return np.array(
            [sin(self.theta), -cos(self.theta) * sin(self.phi), cos(self.theta) * cos(self.phi)]
        )


def _as_vector(a) -> np.ndarray:
    if isinstance(a, Setting):
        return a.vector
    return np.asarray(a, dtype=float)


def joint_probabilities(psi_f: np.ndarray, d_a: Direction, d_b: Direction) -> np.ndarray:
    """2x2 Born probabilities for the pair-basis projectors.

    psi_f is in 1234 particle order; projectors act on pair (1,4) with
    d_a and pair (2,3) with d_b.
    """
    if len(psi_f) != 16:
        raise ValueError("expected a four-particle state")
    psi = statevec.reorder(psi_f, PAIRING_ORDER)
    p = np.empty((2, 2))
    for i, j in product((0, 1), repeat=2):
        basis = statevec.tensor(
            spinstates.pseudo_pair_state(i, d_a), spinstates.pseudo_pair_state(j, d_b)
        )
        p[i, j] = abs(statevec.inner(basis, psi)) ** 2
    return p


def normalized_correlation(p: np.ndarray, eps_norm: float = EPS_NORM) -> float:
    """(p00 - p01 - p10 + p11) / (p00 + p01 + p10 + p11)."""
    total = float(np.sum(p))
    if total <= eps_norm:
        raise DegenerateNormalization(f"probability mass {total} below {eps_norm}")
    signed = p[0, 0] - p[0, 1] - p[1, 0] + p[1, 1]
    return float(signed / total)


SUBSPACE_WEIGHT = 0.5  # squared norm of the pair-subspace part of the initial state


def _pair_expectation(psi_1423: np.ndarray, op_a: np.ndarray, op_b: np.ndarray) -> float:
    op = np.kron(op_a, op_b)
    val = statevec.inner(psi_1423, op @ psi_1423) / SUBSPACE_WEIGHT
    if abs(val.imag) > 1e-12:
        raise ArithmeticError(f"expectation has imaginary residue {val.imag}")
    return val.real


def operator_correlation(a, b) -> float:
    """Pseudo-Pauli correlation of the initial state; equals -a.b for unit vectors.

    Accepts Settings or raw 3-vectors; raw vectors are used as-is, which
    keeps the function bilinear.
    """
    return _pair_expectation(
        spinstates.initial_state_1423(),
        spinstates._sigma_dot_raw(_as_vector(a)),
        spinstates._sigma_dot_raw(_as_vector(b)),
    )


def analytic_correlation(a, b) -> float:
    """Closed-form correlation -a.b."""
    return float(-np.dot(_as_vector(a), _as_vector(b)))


def no_signaling_deviation(psi_f: np.ndarray, settings_a, settings_b) -> float:
    """Largest one-sided marginal of the pseudo-Pauli measurement.

    Both marginals vanish identically for the (rotated) pseudo-singlet,
    so the return value bounds the signaling any setting could induce.
    """
    if not settings_a or not settings_b:
        raise ValueError("settings lists must be nonempty")
    psi = statevec.reorder(psi_f, PAIRING_ORDER)
    proj = spinstates.pair_subspace_projector()
    worst = 0.0
    for a in settings_a:
        worst = max(worst, abs(_pair_expectation(psi, spinstates.pseudo_dot(_as_vector(a)), proj)))
    for b in settings_b:
        worst = max(worst, abs(_pair_expectation(psi, proj, spinstates.pseudo_dot(_as_vector(b)))))
    return worst


CONVENTION_COLUMNS = [
    "phi1", "phi2", "phi3", "phi4", "thetaA", "thetaB",
    "p00", "p01", "p10", "p11",
    "c_pipeline", "c_analytic", "abs_diff", "degenerate_flag",
    "c_analytic_alt", "abs_diff_alt",
]


def convention_report(phase_sets, thetas, eps_norm: float = EPS_NORM):
    """Cross phase sets with projector angle pairs and compare correlation routes.

    Projector directions stay in the xy-plane (polar angle pi/2). Each
    row carries the projector-route value (flagged when degenerate), the
    closed-form value under the direct angle mapping, and under the
    alternative Heisenberg-evolved mapping. Returns (rows, summary).
    """
    rows = []
    for p, (theta_a, theta_b) in product(phase_sets, thetas):
        psi_f = evolve(spinstates.initial_state(), p)
        probs = joint_probabilities(
            psi_f, Direction(np.pi / 2, theta_a), Direction(np.pi / 2, theta_b)
        )
        a = Setting(theta_a, p.phi_a)
        b = Setting(theta_b, p.phi_b)
        c_analytic = analytic_correlation(a, b)
        c_alt = float(-np.dot(a.vector_heisenberg, b.vector_heisenberg))
        row = {
            "phi1": p.phi1, "phi2": p.phi2, "phi3": p.phi3, "phi4": p.phi4,
            "thetaA": theta_a, "thetaB": theta_b,
            "p00": probs[0, 0], "p01": probs[0, 1], "p10": probs[1, 0], "p11": probs[1, 1],
            "c_analytic": c_analytic, "c_analytic_alt": c_alt,
        }
        try:
            c_pipe = normalized_correlation(probs, eps_norm)
            row.update(
                c_pipeline=c_pipe,
                abs_diff=abs(c_pipe - c_analytic),
                abs_diff_alt=abs(c_pipe - c_alt),
                degenerate_flag=False,
            )
        except DegenerateNormalization:
            row.update(c_pipeline=None, abs_diff=None, abs_diff_alt=None, degenerate_flag=True)
        rows.append(row)

    diffs = [r["abs_diff"] for r in rows if not r["degenerate_flag"]]
    diffs_alt = [r["abs_diff_alt"] for r in rows if not r["degenerate_flag"]]
    summary = {
        "n_rows": len(rows),
        "n_degenerate": sum(r["degenerate_flag"] for r in rows),
        "max_abs_diff": max(diffs) if diffs else None,
        "mean_abs_diff": float(np.mean(diffs)) if diffs else None,
        "max_abs_diff_alt": max(diffs_alt) if diffs_alt else None,
        "mean_abs_diff_alt": float(np.mean(diffs_alt)) if diffs_alt else None,
        "n_disagree_1e9": sum(d > 1e-9 for d in diffs),
        "n_disagree_1e9_alt": sum(d > 1e-9 for d in diffs_alt),
    }
    return rows, summary
