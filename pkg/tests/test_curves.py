from __future__ import annotations

import json
import random
from math import gcd

import pytest

from twistfloer.curves import (
    CurveSystem,
    SlopeCollisionError,
    dehn_twist,
    fit_curve_from_dims,
    fitted_system,
    intersection_count,
    load_curves,
    predicted_dim,
)

UNKNOT = CurveSystem.of([(1, [(1, 0)])])


def random_system(rng):
    comps = []
    for _ in range(rng.randint(1, 3)):
        slopes = []
        while len(slopes) < rng.randint(1, 4):
            p, q = rng.randint(-12, 12), rng.randint(0, 6)
            if q == 0:
                p = rng.choice((-1, 1))
            elif gcd(p, q) != 1:
                continue
            slopes.append((p, q))
        comps.append((rng.randint(1, 3), slopes))
    return CurveSystem.of(comps)


def test_twist_examples():
    assert dehn_twist(CurveSystem.of([(1, [(1, 1)])]), 1) == CurveSystem.of([(1, [(1, 2)])])
    c = CurveSystem.of([(2, [(3, 1), (-1, 2)]), (1, [(1, 0)])])
    assert dehn_twist(c, 0) == c
    assert dehn_twist(dehn_twist(c, 4), -4) == c


def test_twist_is_an_action():
    rng = random.Random(3)
    for _ in range(100):
        c = random_system(rng)
        a, b = rng.randint(-5, 5), rng.randint(-5, 5)
        assert dehn_twist(dehn_twist(c, a), b) == dehn_twist(c, a + b)


def test_predicted_dim_examples():
    c = CurveSystem.of([(1, [(3, 1)]), (2, [(1, 1)])])
    assert predicted_dim(c, 5) == 10
    for m in range(1, 31):
        assert predicted_dim(UNKNOT, m) == 1
    with pytest.raises(SlopeCollisionError):
        predicted_dim(c, 3)


def test_predicted_dim_is_a_determinant():
    rng = random.Random(5)
    for _ in range(100):
        c = random_system(rng)
        m = rng.randint(13, 40)
        assert predicted_dim(c, m) == intersection_count(c, (m, 1))


def test_large_m_affine():
    c = CurveSystem.of([(1, [(3, 1), (-2, 1)]), (2, [(1, 2)])])
    big_d = sum(k * q for k, slopes in [(1, [(3, 1), (-2, 1)]), (2, [(1, 2)])] for _, q in slopes)
    small_d = sum(k * p for k, slopes in [(1, [(3, 1), (-2, 1)]), (2, [(1, 2)])] for p, _ in slopes)
    for m in range(10, 20):
        assert predicted_dim(c, m) == big_d * m - small_d


def test_twist_preserves_pairing_with_sheared_line():
    # twisting the curves and the surgery direction together keeps every count
    rng = random.Random(9)
    for _ in range(100):
        c = random_system(rng)
        n, m = rng.randint(-10, 10), rng.randint(13, 20)
        sheared = (m, 1 + n * m)
        assert intersection_count(dehn_twist(c, n), sheared) == predicted_dim(c, m)


def test_twist_does_not_shift_the_surgery_index():
    # twisting slopes by n is not the same as moving from twist m to m + n
    c = CurveSystem.of([(1, [(0, 1)])])
    assert predicted_dim(dehn_twist(c, 1), 2) == 2
    assert predicted_dim(c, 3) == 3


def test_fit_curve_examples():
    assert fit_curve_from_dims([(20, 159), (21, 167)]) == (8, 1)
    assert fit_curve_from_dims([(5, 1), (6, 1)]) == (0, -1)
    assert fit_curve_from_dims([(3, 7), (4, 12)]) == (5, 8)
    with pytest.raises(ValueError):
        fit_curve_from_dims([(1, 1), (2, 4), (3, 9)])
    with pytest.raises(ValueError):
        fit_curve_from_dims([(1, 1)])


def test_fitted_system_reproduces_line():
    for big_d, small_d in [(8, 1), (5, 8), (1, -3), (0, -1), (0, -3)]:
        c = fitted_system(big_d, small_d)
        assert c.fitted
        for m in range(max(small_d, 0) + 1, max(small_d, 0) + 15):
            assert predicted_dim(c, m) == big_d * m - small_d


def test_bad_slopes_rejected():
    for slopes in ([(2, 0)], [(2, 4)], [(1, -1)]):
        with pytest.raises(ValueError):
            CurveSystem.of([(1, slopes)])
    with pytest.raises(ValueError):
        CurveSystem.of([(0, [(1, 1)])])


def test_json_round_trip(tmp_path):
    c = CurveSystem.of([(2, [(3, 1), (1, 0)])], fitted=True)
    path = tmp_path / "curves.json"
    path.write_text(json.dumps(c.to_json()))
    assert load_curves(path) == c
