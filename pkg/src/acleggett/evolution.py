"""Spin-dependent phase gates and the resulting four-particle evolution.

Each particle j picks up phase +phi_j/2 on spin up and -phi_j/2 on spin
down. On a spin pair the two gates act inside span{singlet, triplet0}
as a rotation about the pseudo-x axis by phi_m - phi_n.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import cos, sin

import numpy as np

from . import statevec, spinstates


@dataclass(frozen=True)
class PhaseSet:
    """Per-particle accumulated phases (radians)."""

    phi1: float
    phi2: float
    phi3: float
    phi4: float

    @property
    def phi_a(self) -> float:
        return self.phi1 - self.phi4

    @property
    def phi_b(self) -> float:
        return self.phi2 - self.phi3

    @property
    def gamma(self) -> float:
        return (self.phi1 + self.phi4 - self.phi2 - self.phi3) / 2

    def phases(self) -> tuple[float, float, float, float]:
        return (self.phi1, self.phi2, self.phi3, self.phi4)


def ac_gate(phi: float) -> np.ndarray:
    """diag(e^{i phi/2}, e^{-i phi/2})."""
    if not np.isfinite(phi):
        raise ValueError("phase must be finite")
    return np.diag([np.exp(1j * phi / 2), np.exp(-1j * phi / 2)])


def evolve(state: np.ndarray, p: PhaseSet) -> np.ndarray:
    """Apply each particle's phase gate to a four-particle state (1234 order)."""
    if len(state) != 16:
        raise ValueError("evolve expects a four-particle state")
    out = state
    for j, phi in enumerate(p.phases(), start=1):
        out = statevec.apply_single(ac_gate(phi), j, out)
    return out


def pseudo_rotation(delta: float) -> np.ndarray:
    """Rotation by delta about the pseudo-x axis; zero on the pair-subspace complement."""
    proj = spinstates.pair_subspace_projector()
    return cos(delta / 2) * proj + 1j * sin(delta / 2) * spinstates.pseudo_pauli("x")


def pair_equivalence_residual(delta: float, trials: int, seed: int = 42) -> float:
    """Max norm gap between two-gate evolution and the pseudo-x rotation.

    Samples random states in the pair subspace and random phase splits
    (phi_m, phi_n) with phi_m - phi_n = delta.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    rot = pseudo_rotation(delta)
    worst = 0.0
    for _ in range(trials):
        c = rng.normal(size=2) + 1j * rng.normal(size=2)
        c /= np.linalg.norm(c)
        psi = c[0] * spinstates.singlet() + c[1] * spinstates.triplet0()
        phi_n = rng.uniform(-2 * np.pi, 2 * np.pi)
        phi_m = phi_n + delta
        via_gates = statevec.apply_single(ac_gate(phi_n), 2, statevec.apply_single(ac_gate(phi_m), 1, psi))
        worst = max(worst, float(np.linalg.norm(via_gates - rot @ psi)))
    return worst
