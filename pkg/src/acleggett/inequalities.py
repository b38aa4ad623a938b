"""Leggett and Bell-CHSH inequality evaluation and violation search."""
from __future__ import annotations

from dataclasses import dataclass
from math import atan, cos, pi, sin, sqrt
from typing import Callable, Optional

import numpy as np
from scipy.optimize import minimize_scalar

from .measurement import Setting, analytic_correlation

Correlation = Callable[[Setting, Setting], float]


@dataclass(frozen=True)
class LeggettSettings:
    """Three settings for one side, three difference-pairs for the other."""

    a1: Setting
    a2: Setting
    a3: Setting
    b1: Setting
    b1p: Setting
    b2: Setting
    b2p: Setting
    b3: Setting
    b3p: Setting
    phi: float

    def pairs(self):
        return (
            (self.a1, self.b1, self.b1p),
            (self.a2, self.b2, self.b2p),
            (self.a3, self.b3, self.b3p),
        )


@dataclass(frozen=True)
class ChshSettings:
    a: Setting
    ap: Setting
    b: Setting
    bp: Setting


def leggett_settings(phi: float) -> LeggettSettings:
    """The nine-setting family with b_i - b'_i = 2 sin(phi/2) e_i."""
    return LeggettSettings(
        a1=Setting(pi / 2, 0.0),
        a2=Setting(pi / 2, pi / 2),
        a3=Setting(0.0, 0.0),
        b1=Setting(pi / 2, phi / 2),
        b1p=Setting(pi / 2, -phi / 2),
        b2=Setting(pi / 2 - phi / 2, pi / 2),
        b2p=Setting(pi / 2 + phi / 2, pi / 2),
        b3=Setting(phi / 2, 0.0),
        b3p=Setting(phi / 2, pi),
        phi=phi,
    )


def leggett_lhs(corr: Correlation, s: LeggettSettings) -> float:
    """(1/3) sum_i |C(a_i, b_i) + C(a_i, b'_i)|."""
    return sum(abs(corr(a, b) + corr(a, bp)) for a, b, bp in s.pairs()) / 3


def leggett_bound(phi: float) -> float:
    """Nonlocal-realistic bound 2 - (2/3)|sin(phi/2)|."""
    return 2 - (2 / 3) * abs(sin(phi / 2))


def leggett_violation(phi: float) -> float:
    """2|cos(phi/2)| + (2/3)|sin(phi/2)| - 2; positive means violated."""
    return 2 * abs(cos(phi / 2)) + (2 / 3) * abs(sin(phi / 2)) - 2


def chsh_settings() -> ChshSettings:
    """The coplanar quadruple attaining the quantum maximum."""
    return ChshSettings(
        a=Setting(pi / 2, 0.0),
        ap=Setting(pi / 2, pi / 2),
        b=Setting(pi / 2, pi / 4),
        bp=Setting(pi / 2, -pi / 4),
    )


def chsh_value(corr: Correlation, s: ChshSettings) -> float:
    """|C(a,b) + C(a',b) + C(a,b') - C(a',b')|."""
    return abs(corr(s.a, s.b) + corr(s.ap, s.b) + corr(s.a, s.bp) - corr(s.ap, s.bp))


def _bisect_root(f: Callable[[float], float], lo: float, hi: float, tol: float) -> float:
    flo = f(lo)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if (f(mid) > 0) == (flo > 0):
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def violation_region(
    phi_min: float = 0.0, phi_max: float = pi, steps: int = 1000, tol: float = 1e-8
) -> Optional[tuple[float, float]]:
    """Maximal interval of positive leggett_violation, endpoints by bisection."""
    if steps < 100:
        raise ValueError("steps must be >= 100")
    grid = np.linspace(phi_min, phi_max, steps + 1)
    vals = np.array([leggett_violation(x) for x in grid])
    positive = np.flatnonzero(vals > 0)
    if len(positive) == 0:
        return None
    i0, i1 = positive[0], positive[-1]
    lo = grid[i0] if i0 == 0 else _bisect_root(leggett_violation, grid[i0 - 1], grid[i0], tol)
    hi = grid[i1] if i1 == len(grid) - 1 else _bisect_root(
        leggett_violation, grid[i1], grid[i1 + 1], tol
    )
    return (lo, hi)


def max_violation(tol: float = 1e-9) -> tuple[float, float]:
    """(phi*, value) maximizing leggett_violation over (0, pi)."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    res = minimize_scalar(
        lambda x: -leggett_violation(x), bounds=(0.0, pi), method="bounded",
        options={"xatol": tol},
    )
    return float(res.x), float(-res.fun)


def violation_endpoint() -> float:
    """Closed-form right endpoint of the violation region."""
    return 4 * atan(1 / 3)


def max_violation_closed_form() -> tuple[float, float]:
    return 2 * atan(1 / 3), 20 / (3 * sqrt(10)) - 2
