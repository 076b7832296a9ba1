from __future__ import annotations

from types import SimpleNamespace

import numpy as np
import pytest

from twistfloer import f2
from twistfloer.box import build_complex
from twistfloer.invariants import tau

from .conftest import fixture, pair


def test_identity_solve():
    rank, sols = f2.rank_and_solve(f2.F2Matrix.from_dense(np.eye(3, dtype=np.uint8)), [0b010])
    assert rank == 3 and sols == [0b010]


def test_zero_matrix_has_no_preimage():
    rank, sols = f2.rank_and_solve(f2.F2Matrix(3, 3, frozenset()), [0b001])
    assert rank == 0 and sols == [None]


def test_target_too_long():
    with pytest.raises(ValueError):
        f2.rank_and_solve(f2.F2Matrix(2, 2, frozenset()), [0b100])


def test_entries_checked():
    with pytest.raises(ValueError):
        f2.F2Matrix(2, 2, frozenset({(2, 0)}))


def test_support_round_trip():
    assert f2.support(0b10110) == [1, 2, 4]
    assert f2.from_support([4, 1, 2]) == 0b10110


def test_sparse_matches_dense_random():
    rng = np.random.default_rng(7)
    for _ in range(30):
        r, c = rng.integers(1, 51, size=2)
        a = (rng.random((r, c)) < rng.uniform(0.05, 0.6)).astype(np.uint8)
        m = f2.F2Matrix.from_dense(a)
        assert np.array_equal(m.to_dense(), a)
        rank, _ = f2.rank_and_solve(m)
        assert rank == f2.dense_rank(a)


def test_solutions_are_preimages():
    rng = np.random.default_rng(11)
    a = (rng.random((40, 30)) < 0.2).astype(np.uint8)
    m = f2.F2Matrix.from_dense(a)
    cols = m.columns()
    targets = [f2.apply(cols, int(rng.integers(0, 1 << 30))) for _ in range(20)]
    _, sols = f2.rank_and_solve(m, targets)
    for t, s in zip(targets, sols):
        assert s is not None and f2.apply(cols, s) == t


def test_two_element_complex_is_acyclic():
    c = SimpleNamespace(dim=2, columns=[0b10, 0])
    h = f2.homology(c)
    assert h.dim == 0 and h.cycle_rank == 1 and h.boundary_rank == 1


def test_boundary_is_in_span():
    c = SimpleNamespace(dim=2, columns=[0b10, 0])
    assert f2.class_in_span(c, 0b10, [])
    assert not f2.class_in_span(c, 0b01, [])


def test_unknot_core_homology():
    assert f2.homology(build_complex(fixture("unknot_core"), "knot", 4)).dim == 1


def test_mazur_z_generator_at_three():
    z = build_complex(fixture("mazur"), "full", 3)
    v = z.vector([("x0", 0), ("x1", 1), ("x1", 2), ("x1", 3)])
    assert z.boundary(v) == 0
    h = f2.homology(z)
    assert h.dim == 1
    assert not f2.class_in_span(z, v, [])
    assert f2.class_in_span(z, h.classes[0], [v])


def test_z_generator_against_filtration():
    knot, z = pair("mazur", 3)
    t = tau(knot, z)
    gen = f2.homology(z).classes[0]
    cycles = f2.homology(z).classes
    assert f2.class_in_span(z, gen, cycles)
    below = [k for k, (_, a) in enumerate(knot.bigrading) if a < t]
    sub = f2.homology_of_columns(z.dim, z.columns, below)
    assert not f2.class_in_span(z, gen, sub.classes)


@pytest.mark.parametrize("name", ["mazur", "unknot_core", "h_infinity"])
def test_z_homology_is_one_dimensional(name):
    for m in range(1, 51, 7):
        assert f2.homology(build_complex(fixture(name), "full", m)).dim == 1


def test_euler_characteristic_invariant():
    from twistfloer.invariants import euler_characteristic_of_basis, hfk_table

    for name in ("mazur", "h_infinity"):
        knot, _ = pair(name, 4)
        table = hfk_table(knot)
        from_homology = {}
        for (a, h), n in table.dims.items():
            from_homology[a] = from_homology.get(a, 0) + (-1) ** (h % 2) * n
        assert euler_characteristic_of_basis(knot) == {a: v for a, v in sorted(from_homology.items()) if v}
