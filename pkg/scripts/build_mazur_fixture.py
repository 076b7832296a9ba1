"""Regenerate fixtures/mazur.json from fixtures/mazur_graph.json.

The graph holds the w = 0 edges (knot view) and the w-crossing edges that
complete the z view. Operations come from the Hedden-Levine path reading;
the paper-listed m4(y4; r1, r2, r1) is kept alongside its regrouped form
m3(y4; r12, r1) so that the checkers can report on it.
"""

from __future__ import annotations

import json
from pathlib import Path

from twistfloer.type_a import AOperation, import_decorated_graph, pattern_to_dict

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "twistfloer" / "fixtures"


def main() -> None:
    graph = json.loads((FIXTURES / "mazur_graph.json").read_text(encoding="utf-8"))
    a = import_decorated_graph(FIXTURES / "mazur_graph.json")
    ops = list(a.ops)
    listed = AOperation("y4", ("r1", "r2", "r1"), "y1", 0)
    ops.insert(next(k for k, op in enumerate(ops) if op.src == "y4" and len(op.args) > 2) if any(
        op.src == "y4" and len(op.args) > 2 for op in ops) else len(ops), listed)
    a.ops = ops
    out = pattern_to_dict(a)
    out["name"] = "mazur"
    out["description"] = graph.get("description", "")
    out["flagged_ops"] = [str(listed)]
    out["families"] = []
    text = json.dumps(out, indent=1)
    (FIXTURES / "mazur.json").write_text(text + "\n", encoding="utf-8")
    print(f"wrote {len(ops)} operations")


if __name__ == "__main__":
    main()
