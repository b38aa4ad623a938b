"""Accumulated phases from planar paths around a line charge.

All physical constants collapse into one dimensionless strength k; a
closed loop encircling the charge once picks up phase -2*pi*k under the
sign convention used here (field radially outward, moments along +z,
integrand -k d(azimuth)).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import atan2, hypot, pi

import numpy as np
from scipy.integrate import quad

from .evolution import PhaseSet

RHO_MIN = 1e-3
ENDPOINT_TOL = 1e-9


class ExclusionZoneViolation(ValueError):
    """A path segment passes inside the exclusion radius of the charge."""


@dataclass(frozen=True)
class LineCharge:
    position: tuple[float, float]
    k: float


@dataclass(frozen=True)
class Path:
    """Polyline in the xy-plane; a closed path implicitly repeats its first vertex."""

    vertices: tuple[tuple[float, float], ...]
    closed: bool = False

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise ValueError("a path needs at least two vertices")
        object.__setattr__(self, "vertices", tuple(tuple(map(float, v)) for v in self.vertices))

    def segments(self):
        verts = list(self.vertices)
        if self.closed:
            verts.append(verts[0])
        return list(zip(verts[:-1], verts[1:]))

    def reversed(self) -> "Path":
        return Path(tuple(reversed(self.vertices)), self.closed)

    @property
    def start(self) -> tuple[float, float]:
        return self.vertices[0]

    @property
    def end(self) -> tuple[float, float]:
        return self.vertices[-1]


def concatenate(*paths: Path, closed: bool = False) -> Path:
    verts: list[tuple[float, float]] = []
    for p in paths:
        if p.closed:
            raise ValueError("can only concatenate open paths")
        if verts and hypot(verts[-1][0] - p.start[0], verts[-1][1] - p.start[1]) > ENDPOINT_TOL:
            raise ValueError("paths do not join end to start")
        verts.extend(p.vertices if not verts else p.vertices[1:])
    return Path(tuple(verts), closed)


def _segment_distance(p: tuple[float, float], a, b) -> float:
    ax, ay = a[0] - p[0], a[1] - p[1]
    bx, by = b[0] - p[0], b[1] - p[1]
    dx, dy = bx - ax, by - ay
    seg2 = dx * dx + dy * dy
    if seg2 == 0:
        return hypot(ax, ay)
    t = min(1.0, max(0.0, -(ax * dx + ay * dy) / seg2))
    return hypot(ax + t * dx, ay + t * dy)


def check_exclusion(path: Path, charge: LineCharge, rho_min: float = RHO_MIN) -> None:
    for a, b in path.segments():
        if _segment_distance(charge.position, a, b) <= rho_min:
            raise ExclusionZoneViolation(
                f"segment {a}->{b} within {rho_min} of charge at {charge.position}"
            )


def _sweep(a, b, origin) -> float:
    """Signed azimuthal angle swept by the straight segment a->b, seen from origin."""
    ax, ay = a[0] - origin[0], a[1] - origin[1]
    bx, by = b[0] - origin[0], b[1] - origin[1]
    return atan2(ax * by - ay * bx, ax * bx + ay * by)


def ac_phase_analytic(path: Path, charge: LineCharge, rho_min: float = RHO_MIN) -> float:
    """Exact accumulated phase -k * (total signed azimuthal sweep)."""
    check_exclusion(path, charge, rho_min)
    return -charge.k * sum(_sweep(a, b, charge.position) for a, b in path.segments())


def ac_phase_numeric(path: Path, charge: LineCharge, rho_min: float = RHO_MIN) -> float:
    """Accumulated phase by adaptive quadrature of -k (x dy - y dx) / r^2."""
    check_exclusion(path, charge, rho_min)
    cx, cy = charge.position
    total = 0.0
    for a, b in path.segments():
        ax, ay = a[0] - cx, a[1] - cy
        dx, dy = b[0] - a[0], b[1] - a[1]

        def integrand(t):
            x, y = ax + t * dx, ay + t * dy
            return (x * dy - y * dx) / (x * x + y * y)

        val, _ = quad(integrand, 0.0, 1.0, epsabs=1e-12, epsrel=1e-12, limit=200)
        total += val
    return -charge.k * total


def winding(path: Path, charge: LineCharge) -> int:
    """Signed number of times a closed path encircles the charge."""
    if not path.closed and path.start != path.end:
        raise ValueError("winding requires a closed path")
    sweep = sum(_sweep(a, b, charge.position) for a, b in path.segments())
    return round(sweep / (2 * pi))


def deformation_check(p1: Path, p2: Path, charge: LineCharge, rho_min: float = RHO_MIN) -> float:
    """Phase gap between two same-endpoint paths in the same winding class."""
    if p1.closed or p2.closed:
        raise ValueError("deformation_check expects open paths")
    for q1, q2 in ((p1.start, p2.start), (p1.end, p2.end)):
        if hypot(q1[0] - q2[0], q1[1] - q2[1]) > ENDPOINT_TOL:
            raise ValueError("paths must share endpoints")
    loop = concatenate(p1, p2.reversed(), closed=False)
    if winding(Path(loop.vertices, closed=True), charge) != 0:
        raise ValueError("paths are in different winding classes")
    return abs(ac_phase_numeric(p1, charge, rho_min) - ac_phase_numeric(p2, charge, rho_min))


@dataclass(frozen=True)
class Layout:
    """Two sources, two meeting points, and one path per particle.

    l1: O12 -> A, l4: O34 -> A, l2: O12 -> B, l3: O34 -> B.
    """

    charge: LineCharge
    o12: tuple[float, float]
    o34: tuple[float, float]
    a: tuple[float, float]
    b: tuple[float, float]
    l1: Path
    l2: Path
    l3: Path
    l4: Path

    def __post_init__(self):
        declared = {
            "l1": (self.l1, self.o12, self.a),
            "l2": (self.l2, self.o12, self.b),
            "l3": (self.l3, self.o34, self.b),
            "l4": (self.l4, self.o34, self.a),
        }
        for name, (path, src, dst) in declared.items():
            for got, want in ((path.start, src), (path.end, dst)):
                if hypot(got[0] - want[0], got[1] - want[1]) > ENDPOINT_TOL:
                    raise ValueError(f"path {name} endpoint {got} does not match {want}")

    def combined_loop(self) -> Path:
        """l1 followed by reversed l4, then l3, then reversed l2; closed at O12."""
        joined = concatenate(self.l1, self.l4.reversed(), self.l3, self.l2.reversed())
        return Path(joined.vertices, closed=True)


@dataclass(frozen=True)
class LayoutPhases:
    phases: PhaseSet
    numeric: tuple[float, float, float, float]
    analytic: tuple[float, float, float, float]
    loop_winding: int


def layout_phases(layout: Layout, rho_min: float = RHO_MIN) -> LayoutPhases:
    paths = (layout.l1, layout.l2, layout.l3, layout.l4)
    numeric = tuple(ac_phase_numeric(p, layout.charge, rho_min) for p in paths)
    analytic = tuple(ac_phase_analytic(p, layout.charge, rho_min) for p in paths)
    return LayoutPhases(
        phases=PhaseSet(*numeric),
        numeric=numeric,
        analytic=analytic,
        loop_winding=winding(layout.combined_loop(), layout.charge),
    )


def load_layout(source) -> Layout:
    """Build a Layout from the JSON schema {charge, points, paths}."""
    if isinstance(source, (str, bytes)):
        doc = json.loads(source)
    else:
        doc = json.load(source)
    charge = LineCharge(tuple(doc["charge"]["position"]), float(doc["charge"]["k"]))
    pts = doc["points"]
    paths = {name: Path(tuple(map(tuple, doc["paths"][name]))) for name in ("l1", "l2", "l3", "l4")}
    return Layout(
        charge=charge,
        o12=tuple(pts["O12"]),
        o34=tuple(pts["O34"]),
        a=tuple(pts["A"]),
        b=tuple(pts["B"]),
        **paths,
    )
