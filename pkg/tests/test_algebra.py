from __future__ import annotations

import itertools

from twistfloer.algebra import (
    BASIS,
    IDEMPOTENTS,
    RHOS,
    UNIT,
    ZERO,
    grading_of,
    idempotent_sides,
    multiply,
    multiply_basis,
)
from twistfloer.grading import GradingElement, compose


def test_products_from_the_quiver():
    assert multiply_basis("r1", "r2") == "r12"
    assert multiply_basis("r2", "r1") is None
    assert multiply_basis("i0", "r1") == "r1"
    assert multiply_basis("r1", "i1") == "r1"
    assert multiply_basis("r1", "i0") is None


def test_linear_extension_over_f2():
    assert multiply({"r1"}, {"r2", "r23"}) == {"r12", "r123"}
    assert multiply(UNIT, {"r3"}) == {"r3"}
    assert multiply(ZERO, {"r3"}) == ZERO
    # r12 r3 and r1 r23 both give r123 and cancel mod 2
    assert multiply({"r12", "r1"}, {"r3", "r23"}) == ZERO


def test_gradings_table():
    assert grading_of("r2") == GradingElement.of("-1/2", "1/2", "1/2")
    assert grading_of("i1") == GradingElement.of(0, 0, 0)
    assert grading_of("r123") == compose(compose(grading_of("r1"), grading_of("r2")), grading_of("r3"))
    assert grading_of("r23") == GradingElement.of("-1/2", 0, 1)


def test_idempotent_sides():
    assert idempotent_sides("r23") == ("i1", "i1")
    assert idempotent_sides("i0") == ("i0", "i0")
    assert idempotent_sides("r123") == ("i0", "i1")


def test_associative_exhaustive():
    for a, b, c in itertools.product(BASIS, repeat=3):
        assert multiply(multiply({a}, {b}), {c}) == multiply({a}, multiply({b}, {c}))


def test_grading_multiplicative_and_idempotents_consistent():
    for a, b in itertools.product(BASIS, repeat=2):
        p = multiply_basis(a, b)
        if p is not None:
            assert idempotent_sides(a)[1] == idempotent_sides(b)[0]
            assert compose(grading_of(a), grading_of(b)) == grading_of(p)


def test_basis_sizes():
    assert len(BASIS) == 8 and len(RHOS) == 6 and set(IDEMPOTENTS) == set(UNIT)
