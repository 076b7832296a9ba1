from __future__ import annotations

import json
from fractions import Fraction as Fr

import pytest

from twistfloer.grading import GradingElement
from twistfloer.type_a import (
    FIXTURES,
    AOperation,
    PatternError,
    fixture_path,
    import_decorated_graph,
    load_fixture,
    load_pattern,
    m_eval,
    pattern_from_dict,
    pattern_to_dict,
    regroup_word,
    verify_a_infinity,
    verify_op_gradings,
)

from .test_grading import frac, law

PAPER_KNOT_OPS = {
    ("x2", ("r1",), "x1"),
    ("x4", ("r1",), "x3"),
    ("y4", ("r1",), "y3"),
    ("x1", ("r2",), "x0"),
    ("x3", ("r2",), "y2"),
    ("x2", ("r12",), "x0"),
    ("x4", ("r12",), "y2"),
    ("y3", ("r2", "r1"), "y1"),
    ("y4", ("r1", "r2", "r1"), "y1"),
}


def base(ops=(), gens=(("x", "i0"), ("y", "i1"), ("z", "i0"))):
    return {
        "generators": [{"name": n, "idem": i, "gr": [0, 0, 0, 0]} for n, i in gens],
        "periodic_gen": ["-1/2", 0, 1, -1],
        "ops": list(ops),
    }


def test_mazur_loads(mazur):
    assert len(mazur.generators) == 13
    idem = mazur.idempotent
    assert [n for n in mazur.names if idem[n] == "i0"] == ["x0", "y2", "y4", "x4", "x2"]
    assert [n for n in mazur.names if idem[n] == "i1"] == ["x5", "x6", "y6", "y5", "y1", "y3", "x3", "x1"]
    assert mazur.periodic_gen == GradingElement.of("-7/2", 0, -1, -1)


def test_mazur_knot_view_contains_paper_list(mazur):
    knot = {(op.src, op.args, op.dst) for op in mazur.view_ops("knot")}
    assert PAPER_KNOT_OPS <= knot
    # the only extra knot-view operation is the regrouped reading of the y4 -> y1 path
    assert knot - PAPER_KNOT_OPS == {("y4", ("r12", "r1"), "y1")}


def test_unknot_core_has_no_operations(unknot_core):
    assert unknot_core.names == ["x0"]
    assert unknot_core.view_ops("knot") == [] and unknot_core.view_ops("full") == []


def test_bad_idempotent_rejected():
    with pytest.raises(PatternError, match="r2"):
        pattern_from_dict(base([{"src": "x", "args": ["r2"], "dst": "z", "w": 0}]))


def test_schema_errors_rejected():
    with pytest.raises(PatternError):
        pattern_from_dict({"generators": []})
    with pytest.raises(PatternError):
        pattern_from_dict(base([{"src": "x", "args": ["r1"], "dst": "y", "w": -1}]))
    bad = base()
    bad["periodic_gen"] = ["-1/2", 0, 1, 0]
    with pytest.raises(PatternError, match="winding"):
        pattern_from_dict(bad)


def test_m_eval_examples(mazur, h_infinity):
    assert m_eval(mazur, "knot", "x2", ["r1"]) == {"x1"}
    assert m_eval(mazur, "knot", "y4", ["r1", "r2", "r1"]) == {"y1"}
    assert m_eval(h_infinity, "full", "x0", ["r3", "r23", "r2"]) == {"x0"}
    assert m_eval(h_infinity, "knot", "x0", ["r3", "r23", "r2"]) == frozenset()
    assert m_eval(mazur, "knot", "x2", ["r3"]) == frozenset()


def test_knot_view_subset_of_full_view():
    for name in FIXTURES:
        a = load_fixture(name)
        full = a.view_ops("full", 6)
        assert all(op in full for op in a.view_ops("knot", 6))


def test_a_infinity_trivial_and_family():
    assert verify_a_infinity(load_fixture("unknot_core"), "full").ok
    assert verify_a_infinity(load_fixture("unknot_core"), "knot").ok
    rep = verify_a_infinity(load_fixture("h_infinity"), "full", max_args=10)
    assert rep.ok and rep.words_checked > 1000


def test_a_infinity_missing_partner_detected():
    a = pattern_from_dict(
        base(
            [
                {"src": "x", "args": ["r1"], "dst": "y", "w": 0},
                {"src": "y", "args": ["r2"], "dst": "z", "w": 0},
            ]
        )
    )
    rep = verify_a_infinity(a, "knot", 3)
    assert [(v.src, v.word) for v in rep.violations] == [("x", ("r1", "r2"))]


def test_mazur_a_infinity_verdicts(mazur):
    assert verify_a_infinity(mazur, "knot", 6).ok
    # the paper-listed m4(y4; r1, r2, r1) is the only source of trouble in the full view
    rep = verify_a_infinity(mazur, "full", 6)
    assert [(v.src, v.word) for v in rep.violations] == [("x4", ("r1", "r2", "r1"))]


def test_mazur_grading_examples_by_oracle(mazur):
    gr = {n: frac(g) for n, g in mazur.gradings.items()}
    r1 = (Fr(-1, 2), Fr(1, 2), Fr(-1, 2), Fr(0))
    r2 = (Fr(-1, 2), Fr(1, 2), Fr(1, 2), Fr(0))
    lam = (Fr(1), Fr(0), Fr(0), Fr(0))
    assert law(gr["x2"], r1) == gr["x1"] == (Fr(-3, 2), Fr(3, 2), Fr(-3, 2), Fr(1))
    assert law(law(law(lam, gr["y3"]), r2), r1) == gr["y1"] == (Fr(-1, 2), Fr(3, 2), Fr(-1, 2), Fr(0))


def test_mazur_op_gradings_flag_only_paper_m4(mazur):
    rep = verify_op_gradings(mazur)
    assert [v.op for v in rep.violations] == [AOperation("y4", ("r1", "r2", "r1"), "y1", 0)]
    assert rep.violations[0].defect == (-1, 0)


def test_other_fixtures_gradings_consistent():
    assert verify_op_gradings(load_fixture("unknot_core")).ok
    assert verify_op_gradings(load_fixture("h_infinity"), family_bound=20).ok


def test_m1_grading_rule():
    ok = base([{"src": "x", "args": [], "dst": "z", "w": 1}], gens=(("x", "i0"), ("z", "i0")))
    ok["generators"][1]["gr"] = [-1, 0, 0, -1]
    assert verify_op_gradings(pattern_from_dict(ok)).ok
    ok["generators"][1]["gr"] = [-1, 0, 0, 0]
    assert not verify_op_gradings(pattern_from_dict(ok)).ok


def test_regroup_word():
    assert regroup_word("121") == ("r12", "r1")
    assert regroup_word("21") == ("r2", "r1")
    assert regroup_word("321") == ("r3", "r2", "r1")
    assert regroup_word("1232") == ("r123", "r2")
    assert regroup_word("") == ()


def graph(edges, gens=(("x", "i0"), ("y", "i1"), ("z", "i0"))):
    data = base(gens=gens)
    data.pop("ops")
    data["edges"] = [{"src": s, "label": l, "dst": d, "w": 0} for s, l, d in edges]
    return data


def test_import_single_edge():
    a = import_decorated_graph(graph([("x", "3", "y")]))
    assert a.ops == [AOperation("x", ("r1",), "y", 0)]


def test_import_two_edge_path_regroups():
    a = import_decorated_graph(graph([("x", "3", "y"), ("y", "23", "w")], gens=(("x", "i0"), ("y", "i1"), ("w", "i1"))))
    assert AOperation("x", ("r12", "r1"), "w", 0) in a.ops
    assert AOperation("y", ("r2", "r1"), "w", 0) in a.ops


def test_import_empty_graph():
    assert import_decorated_graph(graph([])).ops == []


def test_import_rejects_bad_label():
    with pytest.raises(PatternError):
        import_decorated_graph(graph([("x", "13", "y")]))


def test_import_round_trips_mazur_knot_graph():
    data = json.loads(fixture_path("mazur").with_name("mazur_graph.json").read_text())
    data["edges"] = [e for e in data["edges"] if e["w"] == 0]
    ops = {(op.src, op.args, op.dst) for op in import_decorated_graph(data).ops}
    expected = (PAPER_KNOT_OPS - {("y4", ("r1", "r2", "r1"), "y1")}) | {("y4", ("r12", "r1"), "y1")}
    assert ops == expected


def test_mazur_fixture_is_graph_import_plus_listed_op(mazur):
    imported = import_decorated_graph(fixture_path("mazur").with_name("mazur_graph.json"))
    listed = AOperation("y4", ("r1", "r2", "r1"), "y1", 0)
    assert sorted(imported.ops + [listed], key=str) == sorted(mazur.ops, key=str)


def test_pattern_round_trip(tmp_path, mazur):
    path = tmp_path / "copy.json"
    path.write_text(json.dumps(pattern_to_dict(mazur)))
    again = load_pattern(path)
    assert again.ops == mazur.ops and again.gradings == mazur.gradings
