"""Immersed-curve dimension oracle.

A curve system is a list of components, each with a local-system dimension
k and the lift directions (p, q) of its straight segments. The surgery line
for twist m has direction (1, m), so a segment meets it |p - m q| times.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Dict, List, Sequence, Tuple, Union

Slope = Tuple[int, int]


class SlopeCollisionError(ValueError):
    pass


@dataclass(frozen=True)
class CurveComponent:
    k: int
    slopes: Tuple[Slope, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("local system dimension must be positive")
        for p, q in self.slopes:
            if q < 0:
                raise ValueError(f"slope ({p},{q}) must have q >= 0")
            if q == 0 and abs(p) != 1:
                raise ValueError(f"vertical slope must be (+-1, 0), got ({p},{q})")
            if q > 0 and gcd(p, q) != 1:
                raise ValueError(f"slope ({p},{q}) is not primitive")
        # segments are unoriented, so both vertical directions are stored as (1, 0)
        object.__setattr__(self, "slopes", tuple((1, 0) if q == 0 else (p, q) for p, q in self.slopes))


@dataclass(frozen=True)
class CurveSystem:
    components: Tuple[CurveComponent, ...]
    fitted: bool = False

    @classmethod
    def of(cls, items: Sequence[Tuple[int, Sequence[Slope]]], fitted: bool = False) -> "CurveSystem":
        return cls(tuple(CurveComponent(k, tuple(tuple(s) for s in slopes)) for k, slopes in items), fitted)

    def to_json(self) -> Dict[str, object]:
        out: Dict[str, object] = {"components": [{"k": c.k, "slopes": [list(s) for s in c.slopes]} for c in self.components]}
        if self.fitted:
            out["fitted"] = True
        return out


def load_curves(path: Union[str, Path]) -> CurveSystem:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return CurveSystem.of([(c["k"], c["slopes"]) for c in data["components"]], bool(data.get("fitted", False)))


def _twist_slope(s: Slope, n: int) -> Slope:
    p, q = s
    q2 = q + n * p
    if q2 < 0:
        # reverse the segment so the stored direction keeps q >= 0
        return (-p, -q2)
    if q2 == 0:
        return (1, 0)
    return (p, q2)


def dehn_twist(c: CurveSystem, n: int) -> CurveSystem:
    """(p, q) -> (p, q + n p) on every segment; local systems unchanged."""
    return CurveSystem(
        tuple(CurveComponent(comp.k, tuple(_twist_slope(s, n) for s in comp.slopes)) for comp in c.components),
        c.fitted,
    )


def intersection_count(c: CurveSystem, direction: Slope) -> int:
    """Sum of k |det| against a line with lift direction (p, q)."""
    dp, dq = direction
    return sum(comp.k * abs(p * dq - q * dp) for comp in c.components for p, q in comp.slopes)


def predicted_dim(c: CurveSystem, twist_count: int) -> int:
    m = twist_count
    for comp in c.components:
        for p, q in comp.slopes:
            if q > 0 and p == m * q:
                raise SlopeCollisionError(f"segment ({p},{q}) is parallel to the surgery line at m={m}")
    return sum(comp.k * abs(p - m * q) for comp in c.components for p, q in comp.slopes)


def fit_curve_from_dims(dims: Sequence[Tuple[int, int]]) -> Tuple[int, int]:
    """(D, d) with total = D m - d on every given point."""
    pts = sorted(dims)
    if len(pts) < 2:
        raise ValueError("need at least two points")
    (m0, t0), (m1, t1) = pts[0], pts[1]
    slope = Fraction(t1 - t0, m1 - m0)
    d = slope * m0 - t0
    if slope.denominator != 1 or d.denominator != 1 or any(slope * m - d != t for m, t in pts):
        raise ValueError("dimensions are not exactly affine with integer coefficients")
    if slope < 0:
        raise ValueError("negative dimension slope")
    return int(slope), int(d)


def fitted_system(big_d: int, small_d: int) -> CurveSystem:
    """A curve system whose predicted dimension is D m - d for m large.

    Uses one segment (d, 1) and D - 1 segments (0, 1); with D = 0 it uses
    -d vertical lines.
    """
    if big_d == 0:
        if small_d >= 0:
            raise ValueError("D = 0 needs d < 0")
        return CurveSystem((CurveComponent(-small_d, ((1, 0),)),), fitted=True)
    slopes: List[Slope] = [(small_d, 1)] + [(0, 1)] * (big_d - 1)
    return CurveSystem((CurveComponent(1, tuple(slopes)),), fitted=True)


__all__ = [
    "CurveComponent",
    "CurveSystem",
    "SlopeCollisionError",
    "dehn_twist",
    "fit_curve_from_dims",
    "fitted_system",
    "intersection_count",
    "load_curves",
    "predicted_dim",
]
