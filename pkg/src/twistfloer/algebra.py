"""The torus algebra over F2: eight basis elements, idempotents, products, gradings."""

from __future__ import annotations

from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from .grading import IDENTITY, GradingElement, compose

IDEMPOTENTS = ("i0", "i1")
RHOS = ("r1", "r2", "r3", "r12", "r23", "r123")
BASIS = IDEMPOTENTS + RHOS

# (left idempotent, right idempotent) read off the quiver
_SIDES: Dict[str, Tuple[str, str]] = {
    "i0": ("i0", "i0"),
    "i1": ("i1", "i1"),
    "r1": ("i0", "i1"),
    "r2": ("i1", "i0"),
    "r3": ("i0", "i1"),
    "r12": ("i0", "i0"),
    "r23": ("i1", "i1"),
    "r123": ("i0", "i1"),
}

# nonzero products of rho elements; everything else composable is zero
_RHO_PRODUCTS: Dict[Tuple[str, str], str] = {
    ("r1", "r2"): "r12",
    ("r2", "r3"): "r23",
    ("r1", "r23"): "r123",
    ("r12", "r3"): "r123",
}

_BASE_GRADINGS = {
    "r1": GradingElement.of("-1/2", "1/2", "-1/2"),
    "r2": GradingElement.of("-1/2", "1/2", "1/2"),
    "r3": GradingElement.of("-1/2", "-1/2", "1/2"),
}
_GRADINGS: Dict[str, GradingElement] = {
    "i0": IDENTITY,
    "i1": IDENTITY,
    **_BASE_GRADINGS,
    "r12": compose(_BASE_GRADINGS["r1"], _BASE_GRADINGS["r2"]),
    "r23": compose(_BASE_GRADINGS["r2"], _BASE_GRADINGS["r3"]),
    "r123": compose(compose(_BASE_GRADINGS["r1"], _BASE_GRADINGS["r2"]), _BASE_GRADINGS["r3"]),
}

AlgebraValue = FrozenSet[str]
ZERO: AlgebraValue = frozenset()
UNIT: AlgebraValue = frozenset(IDEMPOTENTS)


def _check(x: str) -> None:
    if x not in _SIDES:
        raise ValueError(f"unknown algebra element {x!r}")


def idempotent_sides(x: str) -> Tuple[str, str]:
    _check(x)
    return _SIDES[x]


def multiply_basis(a: str, b: str) -> Optional[str]:
    """Product of two basis elements, or None for zero."""
    _check(a)
    _check(b)
    if _SIDES[a][1] != _SIDES[b][0]:
        return None
    if a in IDEMPOTENTS:
        return b
    if b in IDEMPOTENTS:
        return a
    return _RHO_PRODUCTS.get((a, b))


def multiply(a: Iterable[str], b: Iterable[str]) -> AlgebraValue:
    """Bilinear extension over F2."""
    out: set = set()
    for x in a:
        for y in b:
            p = multiply_basis(x, y)
            if p is not None:
                out ^= {p}
    return frozenset(out)


def grading_of(x: str) -> GradingElement:
    _check(x)
    return _GRADINGS[x]


def grading_of_word(word: Iterable[str]) -> GradingElement:
    out = IDENTITY
    for x in word:
        out = compose(out, grading_of(x))
    return out


def word_composable(word: Tuple[str, ...]) -> bool:
    return all(_SIDES[a][1] == _SIDES[b][0] for a, b in zip(word, word[1:]))
