"""Exact arithmetic in the grading group and double-coset bigradings.

Elements are (maslov; i, j; alex) with half-integer maslov/i/j and an
integer Alexander factor. Half-integers are stored doubled so that every
operation stays in the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

Number = Union[int, str, Fraction, "HalfInt"]


@dataclass(frozen=True, order=True)
class HalfInt:
    """A value in (1/2)Z, stored as twice its value."""

    doubled: int

    @classmethod
    def of(cls, value: Number) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a half-integer")
        if isinstance(value, int):
            return cls(2 * value)
        frac = Fraction(value)
        twice = 2 * frac
        if twice.denominator != 1:
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(int(twice))

    @property
    def integral(self) -> bool:
        return self.doubled % 2 == 0

    def to_int(self) -> int:
        if not self.integral:
            raise ValueError(f"{self} is not an integer")
        return self.doubled // 2

    def to_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.doubled + other.doubled)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.doubled - other.doubled)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.doubled)

    def scale(self, n: int) -> "HalfInt":
        return HalfInt(self.doubled * n)

    def __str__(self) -> str:
        if self.integral:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    def serialize(self) -> Union[int, str]:
        return self.doubled // 2 if self.integral else f"{self.doubled}/2"


def _cross(i1: HalfInt, j1: HalfInt, i2: HalfInt, j2: HalfInt) -> HalfInt:
    # i1*j2 - j1*i2 on doubled values: (2a)(2b)/4 doubled -> (2a)(2b)/2
    num = i1.doubled * j2.doubled - j1.doubled * i2.doubled
    assert num % 2 == 0, "cross term of half-integers with i+j integral is a half-integer"
    return HalfInt(num // 2)


@dataclass(frozen=True)
class GradingElement:
    maslov: HalfInt
    spin_i: HalfInt
    spin_j: HalfInt
    alex: int = 0

    def __post_init__(self) -> None:
        if not (self.spin_i + self.spin_j).integral:
            raise ValueError(f"i + j must be integral: {self}")

    @classmethod
    def of(cls, maslov: Number, i: Number, j: Number, alex: int = 0) -> "GradingElement":
        return cls(HalfInt.of(maslov), HalfInt.of(i), HalfInt.of(j), int(alex))

    @classmethod
    def parse(cls, values: Sequence[Number]) -> "GradingElement":
        """Read a 3- or 4-entry list; strings like "-7/2" are allowed."""
        if len(values) == 3:
            return cls.of(values[0], values[1], values[2], 0)
        if len(values) == 4:
            alex = HalfInt.of(values[3])
            return cls.of(values[0], values[1], values[2], alex.to_int())
        raise ValueError(f"grading needs 3 or 4 entries, got {values!r}")

    def serialize(self) -> list:
        return [self.maslov.serialize(), self.spin_i.serialize(), self.spin_j.serialize(), self.alex]

    def __mul__(self, other: "GradingElement") -> "GradingElement":
        return compose(self, other)

    def __str__(self) -> str:
        return f"({self.maslov};{self.spin_i},{self.spin_j};{self.alex})"


IDENTITY = GradingElement.of(0, 0, 0, 0)
LAMBDA = GradingElement.of(1, 0, 0, 0)
MU = GradingElement.of(0, 0, 0, 1)


def compose(g1: GradingElement, g2: GradingElement) -> GradingElement:
    """Group law (m1+m2+i1*j2-j1*i2; i1+i2, j1+j2; a1+a2)."""
    cross = _cross(g1.spin_i, g1.spin_j, g2.spin_i, g2.spin_j)
    return GradingElement(
        g1.maslov + g2.maslov + cross,
        g1.spin_i + g2.spin_i,
        g1.spin_j + g2.spin_j,
        g1.alex + g2.alex,
    )


def inverse(g: GradingElement) -> GradingElement:
    # the cross term of g with -g vanishes, so negation is the inverse
    return GradingElement(-g.maslov, -g.spin_i, -g.spin_j, -g.alex)


def power(g: GradingElement, n: int) -> GradingElement:
    """g^n. Powers of one element commute, so the cross terms cancel."""
    return GradingElement(g.maslov.scale(n), g.spin_i.scale(n), g.spin_j.scale(n), g.alex * n)


def product(*gs: GradingElement) -> GradingElement:
    out = IDENTITY
    for g in gs:
        out = compose(out, g)
    return out


class DegenerateContextError(ValueError):
    pass


@dataclass(frozen=True)
class DoubleCosetContext:
    """Left generator (M;0,1;omega), right generator (*;1,-m;0) and m."""

    left_gen: GradingElement
    right_gen: GradingElement
    twist_count: int

    def __post_init__(self) -> None:
        m = self.twist_count
        if m < 1:
            raise DegenerateContextError("twist_count must be positive")
        if (self.left_gen.spin_i, self.left_gen.spin_j) != (HalfInt.of(0), HalfInt.of(1)):
            raise DegenerateContextError(f"left generator must have spin (0,1): {self.left_gen}")
        if (self.right_gen.spin_i, self.right_gen.spin_j) != (HalfInt.of(1), HalfInt.of(-m)):
            raise DegenerateContextError(f"right generator must have spin (1,-m): {self.right_gen}")
        if self.right_gen.alex != 0:
            raise DegenerateContextError("right generator must have Alexander 0")
        if self.left_gen.alex == 0:
            raise DegenerateContextError("winding number (left Alexander) must be nonzero")

    @property
    def omega(self) -> int:
        return self.left_gen.alex

    @property
    def maslov_m(self) -> HalfInt:
        return self.left_gen.maslov


def relative_bigrading(
    ctx: DoubleCosetContext, g1: GradingElement, g2: GradingElement
) -> Optional[Tuple[int, int]]:
    """(h, a) with [g1] = [g2 * lambda^h * mu^a], or None across Spin^c classes."""
    t_half = g2.spin_i - g1.spin_i
    if not t_half.integral:
        return None
    t = t_half.to_int()
    s_half = (g2.spin_j - g1.spin_j) + HalfInt.of(t * ctx.twist_count)
    if not s_half.integral:
        return None
    s = s_half.to_int()
    moved = product(power(ctx.left_gen, s), g1, power(ctx.right_gen, t))
    assert (moved.spin_i, moved.spin_j) == (g2.spin_i, g2.spin_j)
    return (moved.maslov - g2.maslov).to_int(), moved.alex - g2.alex


def normalize_left_gen(g: GradingElement) -> GradingElement:
    """Return the generator of <g> whose spin is (0,1)."""
    if (g.spin_i, g.spin_j) == (HalfInt.of(0), HalfInt.of(1)):
        return g
    if (g.spin_i, g.spin_j) == (HalfInt.of(0), HalfInt.of(-1)):
        return inverse(g)
    raise DegenerateContextError(f"periodic generator must have spin (0,+-1): {g}")
