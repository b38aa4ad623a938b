"""Dense complex state vectors for up to four spin-1/2 particles.

Convention: basis index is a bit string with particle 1 in the most
significant bit; bit value 0 means spin up, 1 means spin down.
"""
from __future__ import annotations

import numpy as np

MAX_PARTICLES = 4

UP = np.array([1.0, 0.0], dtype=complex)
DOWN = np.array([0.0, 1.0], dtype=complex)


def n_particles(state: np.ndarray) -> int:
    """Number of spin-1/2 particles encoded in a state vector."""
    dim = len(state)
    n = dim.bit_length() - 1
    if dim != 2**n or n < 1:
        raise ValueError(f"state length {dim} is not a power of two >= 2")
    return n


def norm(state: np.ndarray) -> float:
    return float(np.linalg.norm(state))


def tensor(*factors: np.ndarray) -> np.ndarray:
    """Tensor product of state vectors, earlier factors more significant."""
    if not factors:
        raise ValueError("tensor needs at least one factor")
    total = sum(n_particles(f) for f in factors)
    if total > MAX_PARTICLES:
        raise ValueError(f"combined particle count {total} exceeds {MAX_PARTICLES}")
    out = np.asarray(factors[0], dtype=complex)
    for f in factors[1:]:
        out = np.kron(out, np.asarray(f, dtype=complex))
    return out


def inner(u: np.ndarray, v: np.ndarray) -> complex:
    """Inner product <u|v>, conjugate-linear in the first argument."""
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return complex(np.vdot(u, v))


def apply_single(gate: np.ndarray, j: int, state: np.ndarray) -> np.ndarray:
    """Apply a 2x2 gate to particle j (1-based) of a multi-particle state."""
    n = n_particles(state)
    if not 1 <= j <= n:
        raise IndexError(f"particle index {j} out of range 1..{n}")
    g = np.asarray(gate, dtype=complex)
    if g.shape != (2, 2):
        raise ValueError("single-spin gate must be 2x2")
    psi = np.asarray(state, dtype=complex).reshape([2] * n)
    # particle j lives on axis j-1 (particle 1 = most significant bit)
    psi = np.tensordot(g, psi, axes=([1], [j - 1]))
    psi = np.moveaxis(psi, 0, j - 1)
    return psi.reshape(-1)


def reorder(state: np.ndarray, perm: tuple[int, ...]) -> np.ndarray:
    """Relabel particles: position k of the result holds original particle perm[k].

    perm is 1-based, e.g. (1, 4, 2, 3) produces the "1423" ordering.
    """
    n = n_particles(state)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"perm {perm} is not a permutation of 1..{n}")
    psi = np.asarray(state, dtype=complex).reshape([2] * n)
    return np.transpose(psi, [p - 1 for p in perm]).reshape(-1)


def invert_perm(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for k, p in enumerate(perm):
        inv[p - 1] = k + 1
    return tuple(inv)
