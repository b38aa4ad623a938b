"""Named spin states and pair-subspace (pseudo-qubit) operators.

A spin pair's singlet and triplet-0 states span a two-dimensional
subspace that behaves like a single qubit; the pseudo-Pauli operators
act as Pauli matrices on that subspace and as zero on its complement.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import cos, sin, sqrt

import numpy as np

from .statevec import UP, DOWN, reorder, tensor

UNIT_TOL = 1e-9


@dataclass(frozen=True)
class Direction:
    """Measurement direction with polar angle xi and azimuth theta (radians)."""

    xi: float
    theta: float

    @property
    def vector(self) -> np.ndarray:
        return np.array(
            [sin(self.xi) * cos(self.theta), sin(self.xi) * sin(self.theta), cos(self.xi)]
        )


def bloch_plus(d: Direction) -> np.ndarray:
    """Spin-up eigenstate along direction d."""
    return np.array([cos(d.xi / 2), sin(d.xi / 2) * np.exp(1j * d.theta)], dtype=complex)


def bloch_minus(d: Direction) -> np.ndarray:
    """Spin-down eigenstate along direction d (orthogonal to bloch_plus)."""
    return np.array([sin(d.xi / 2), -cos(d.xi / 2) * np.exp(1j * d.theta)], dtype=complex)


def singlet() -> np.ndarray:
    return np.array([0.0, 1.0, -1.0, 0.0], dtype=complex) / sqrt(2)


def triplet0() -> np.ndarray:
    return np.array([0.0, 1.0, 1.0, 0.0], dtype=complex) / sqrt(2)


def pseudo_pair_state(x: int, d: Direction) -> np.ndarray:
    """Singlet-like (x=0) or triplet-like (x=1) pair state along direction d."""
    if x not in (0, 1):
        raise ValueError(f"pseudo-basis index must be 0 or 1, got {x}")
    plus, minus = bloch_plus(d), bloch_minus(d)
    sign = -1.0 if x == 0 else 1.0
    return (tensor(plus, minus) + sign * tensor(minus, plus)) / sqrt(2)


def pair_subspace_projector() -> np.ndarray:
    """Projector onto span{singlet, triplet0} of one spin pair."""
    s, t = singlet(), triplet0()
    return np.outer(s, s.conj()) + np.outer(t, t.conj())


def pseudo_pauli(axis: str) -> np.ndarray:
    """Pauli-like 4x4 operator on the pair subspace, zero on its complement."""
    s, t = singlet(), triplet0()
    st = np.outer(s, t.conj())  # |0><1|
    ts = np.outer(t, s.conj())  # |1><0|
    if axis == "x":
        return st + ts
    if axis == "y":
        return -1j * (st - ts)
    if axis == "z":
        return np.outer(s, s.conj()) - np.outer(t, t.conj())
    raise ValueError(f"axis must be 'x', 'y' or 'z', got {axis!r}")


def pseudo_dot(a) -> np.ndarray:
    """Pseudo-Pauli vector contracted with a unit 3-vector."""
    a = np.asarray(a, dtype=float)
    if abs(np.linalg.norm(a) - 1.0) > UNIT_TOL:
        raise ValueError(f"expected a unit vector, got norm {np.linalg.norm(a)}")
    return _sigma_dot_raw(a)


def _sigma_dot_raw(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    return a[0] * pseudo_pauli("x") + a[1] * pseudo_pauli("y") + a[2] * pseudo_pauli("z")


def initial_state() -> np.ndarray:
    """Four-particle input state: singlet on pair (1,2), triplet-0 on pair (3,4)."""
    return tensor(singlet(), triplet0())


# Ordering that puts pair (1,4) before pair (2,3).
PAIRING_ORDER = (1, 4, 2, 3)


def initial_state_1423() -> np.ndarray:
    return reorder(initial_state(), PAIRING_ORDER)
