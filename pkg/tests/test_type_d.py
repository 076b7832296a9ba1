from __future__ import annotations

import pytest

from twistfloer.grading import GradingElement
from twistfloer.type_d import (
    DEdge,
    TypeDStructure,
    build_cfd_one_over_m,
    delta_sequences,
    verify_type_d,
)


def edge_set(d):
    return {(e.src, e.label, e.dst) for e in d.edges}


def test_m3_edges():
    d = build_cfd_one_over_m(3)
    assert edge_set(d) == {("eta", "3", "xi1"), ("eta", "1", "xi3"), ("xi1", "23", "xi2"), ("xi2", "23", "xi3")}


def test_m3_gradings():
    d = build_cfd_one_over_m(3)
    assert d.grading_cw["xi1"] == GradingElement.of("-1/2", "1/2", "-1/2")
    assert d.periodic_gen == GradingElement.of(-1, 1, -3)


def test_m1_both_eta_edges_hit_xi1():
    d = build_cfd_one_over_m(1)
    assert edge_set(d) == {("eta", "3", "xi1"), ("eta", "1", "xi1")}


def test_counterclockwise_table_endpoints():
    d = build_cfd_one_over_m(5)
    assert d.grading_ccw["xi5"] == GradingElement.of("-1/2", "-1/2", "1/2")
    assert d.grading_ccw["xi1"] == GradingElement.of("7/2", "-1/2", "9/2")


def test_rejects_nonpositive_m():
    with pytest.raises(ValueError):
        build_cfd_one_over_m(0)


def test_delta_sequences_from_eta():
    d = build_cfd_one_over_m(3)
    seqs = set(delta_sequences(d, "eta"))
    assert seqs == {
        ((), "eta"),
        (("r3",), "xi1"),
        (("r1",), "xi3"),
        (("r3", "r23"), "xi2"),
        (("r3", "r23", "r23"), "xi3"),
    }


def test_delta_sequences_sink_and_chains():
    d = build_cfd_one_over_m(6)
    assert delta_sequences(d, "xi6") == [((), "xi6")]
    for k in range(8):
        seqs = delta_sequences(d, "xi1", k)
        assert {w for w, _ in seqs} == {("r23",) * n for n in range(min(k, 5) + 1)}


@pytest.mark.parametrize("m", range(1, 51))
def test_family_self_checks(m):
    d = build_cfd_one_over_m(m)
    report = verify_type_d(d)
    assert report.ok, report.problems
    assert len(delta_sequences(d, "eta")) == m + 2


def test_cycle_is_unbounded():
    d = TypeDStructure([("x", "i0")], [DEdge("x", "12", "x")], {"x": GradingElement.of(0, 0, 0)}, {"x": GradingElement.of(0, 0, 0)}, GradingElement.of(0, 1, -1))
    assert verify_type_d(d).bounded is False


def test_uncancelled_two_step_path_breaks_relation():
    z = GradingElement.of(0, 0, 0)
    d = TypeDStructure(
        [("x", "i0"), ("y", "i1"), ("z", "i0")],
        [DEdge("x", "1", "y"), DEdge("y", "2", "z")],
        {"x": z, "y": z, "z": z},
        {"x": z, "y": z, "z": z},
        GradingElement.of(0, 1, -1),
    )
    assert verify_type_d(d).relation_ok is False
