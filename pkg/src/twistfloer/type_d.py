"""Type D structures as decorated graphs, and the built-in solid-torus family.

The family CFD(1/m) has generators eta (idempotent i0) and xi_1..xi_m
(idempotent i1) with delta(eta) = r3 xi_1 + r1 xi_m and
delta(xi_i) = r23 xi_{i+1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from . import algebra
from .grading import (
    LAMBDA,
    DoubleCosetContext,
    GradingElement,
    HalfInt,
    compose,
    product,
)

# graph labels use the digit strings; the empty label is an idempotent edge
LABEL_TO_BASIS = {"": None, "1": "r1", "2": "r2", "3": "r3", "12": "r12", "23": "r23", "123": "r123"}

ETA = "eta"


def xi(i: int) -> str:
    return f"xi{i}"


@dataclass(frozen=True)
class DEdge:
    src: str
    label: str
    dst: str


@dataclass
class TypeDStructure:
    generators: List[Tuple[str, str]]
    edges: List[DEdge]
    grading_cw: Dict[str, GradingElement]
    grading_ccw: Dict[str, GradingElement]
    periodic_gen: GradingElement
    _out: Dict[str, List[DEdge]] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self._out = {name: [] for name, _ in self.generators}
        for e in self.edges:
            self._out[e.src].append(e)

    @property
    def idempotent(self) -> Dict[str, str]:
        return dict(self.generators)

    def out_edges(self, gen: str) -> List[DEdge]:
        return self._out[gen]

    def graph(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(name for name, _ in self.generators)
        for e in self.edges:
            g.add_edge(e.src, e.dst, label=e.label)
        return g


def build_cfd_one_over_m(twist_count: int) -> TypeDStructure:
    m = twist_count
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"twist_count must be a positive integer, got {m!r}")
    gens = [(ETA, "i0")] + [(xi(i), "i1") for i in range(1, m + 1)]
    edges = [DEdge(ETA, "3", xi(1)), DEdge(ETA, "1", xi(m))]
    edges += [DEdge(xi(i), "23", xi(i + 1)) for i in range(1, m)]
    cw = {ETA: GradingElement.of(0, 0, 0)}
    ccw = {ETA: GradingElement.of(0, 0, 0)}
    for k in range(m):
        # clockwise from the r3 edge, counterclockwise from the r1 edge
        cw[xi(k + 1)] = GradingElement(HalfInt(-1), HalfInt(1), HalfInt(-(2 * k + 1)))
        ccw[xi(m - k)] = GradingElement(HalfInt(2 * k - 1), HalfInt(-1), HalfInt(2 * k + 1))
    periodic = GradingElement(HalfInt(-(m - 1)), HalfInt(2), HalfInt(-2 * m))
    return TypeDStructure(gens, edges, cw, ccw, periodic)


def delta_sequences(
    d: TypeDStructure, start: str, max_len: Optional[int] = None
) -> List[Tuple[Tuple[str, ...], str]]:
    """Directed paths from start as (basis-label word, endpoint), empty path first.

    Idempotent (unlabeled) edges are not part of higher delta maps; the
    built-in family has none.
    """
    if max_len is None and not is_bounded(d):
        raise ValueError("unbounded structure needs a finite max_len")
    out: List[Tuple[Tuple[str, ...], str]] = [((), start)]
    frontier = [((), start)]
    while frontier:
        nxt = []
        for word, gen in frontier:
            if max_len is not None and len(word) >= max_len:
                continue
            for e in d.out_edges(gen):
                basis = LABEL_TO_BASIS[e.label]
                if basis is None:
                    continue
                item = (word + (basis,), e.dst)
                out.append(item)
                nxt.append(item)
        frontier = nxt
    return out


def is_bounded(d: TypeDStructure) -> bool:
    return nx.is_directed_acyclic_graph(d.graph())


@dataclass(frozen=True)
class TypeDReport:
    bounded: bool
    reduced: bool
    relation_ok: bool
    grading_ok: bool
    problems: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.bounded and self.reduced and self.relation_ok and self.grading_ok


def _relation_problems(d: TypeDStructure) -> List[str]:
    # (mu (x) I)(I (x) delta) delta = 0: sum over two-step paths of label products
    idem = d.idempotent
    problems = []
    for name, _ in d.generators:
        totals: Dict[Tuple[str, str], int] = {}
        for e1 in d.out_edges(name):
            for e2 in d.out_edges(e1.dst):
                a = LABEL_TO_BASIS[e1.label] or idem[e1.src]
                b = LABEL_TO_BASIS[e2.label] or idem[e2.src]
                p = algebra.multiply_basis(a, b)
                if p is not None:
                    key = (p, e2.dst)
                    totals[key] = totals.get(key, 0) ^ 1
        for (p, dst), bit in sorted(totals.items()):
            if bit:
                problems.append(f"relation: {name} -> {p} {dst} survives")
    return problems


def _label_problems(d: TypeDStructure) -> List[str]:
    idem = d.idempotent
    problems = []
    for e in d.edges:
        basis = LABEL_TO_BASIS.get(e.label, "bad")
        if basis == "bad":
            problems.append(f"label: unknown label {e.label!r} on {e.src}->{e.dst}")
        elif basis is None:
            if idem[e.src] != idem[e.dst]:
                problems.append(f"label: empty label joins different idempotents {e.src}->{e.dst}")
        elif algebra.idempotent_sides(basis) != (idem[e.src], idem[e.dst]):
            problems.append(f"label: {e.label} not allowed on {e.src}->{e.dst}")
    return problems


def edge_grading_defect(
    d: TypeDStructure, e: DEdge, table: Dict[str, GradingElement]
) -> Optional[Tuple[int, int]]:
    """Relative bigrading between gr(src) and lambda*gr(label)*gr(dst); (0,0) when consistent.

    The rule is gr(delta x) = lambda^{-1} gr(x) with gr(a (x) y) = gr(a) gr(y).
    """
    basis = LABEL_TO_BASIS[e.label] or d.idempotent[e.src]
    predicted = product(LAMBDA, algebra.grading_of(basis), table[e.dst])
    return right_coset_difference(d.periodic_gen, table[e.src], predicted)


def right_coset_difference(
    periodic: GradingElement, g1: GradingElement, g2: GradingElement
) -> Optional[Tuple[int, int]]:
    """(h, a) with g1 = g2 * periodic^t * lambda^h * mu^a, or None if no t matches spins."""
    di = g1.spin_i - g2.spin_i
    pi = periodic.spin_i
    if pi.doubled == 0 or di.doubled % pi.doubled:
        return None
    t = di.doubled // pi.doubled
    moved = compose(g2, GradingElement(periodic.maslov.scale(t), pi.scale(t), periodic.spin_j.scale(t), periodic.alex * t))
    if moved.spin_j != g1.spin_j:
        return None
    return (g1.maslov - moved.maslov).to_int(), g1.alex - moved.alex


def verify_type_d(d: TypeDStructure) -> TypeDReport:
    problems = _label_problems(d)
    relation = _relation_problems(d)
    grading = []
    for tname, table in (("cw", d.grading_cw), ("ccw", d.grading_ccw)):
        for e in d.edges:
            if LABEL_TO_BASIS.get(e.label, "bad") == "bad":
                continue
            if edge_grading_defect(d, e, table) != (0, 0):
                grading.append(f"grading[{tname}]: {e.src} -{e.label}-> {e.dst}")
    bounded = is_bounded(d)
    reduced = all(e.label != "" for e in d.edges)
    return TypeDReport(
        bounded=bounded,
        reduced=reduced,
        relation_ok=not relation and not problems,
        grading_ok=not grading,
        problems=tuple(problems + relation + grading),
    )


def cfd_context(d: TypeDStructure, left_gen: GradingElement, twist_count: int) -> DoubleCosetContext:
    return DoubleCosetContext(left_gen, d.periodic_gen, twist_count)


def grading_table(d: TypeDStructure, representative: str = "cw") -> Dict[str, GradingElement]:
    if representative not in ("cw", "ccw"):
        raise ValueError("representative must be 'cw' or 'ccw'")
    return d.grading_cw if representative == "cw" else d.grading_ccw


__all__ = [
    "DEdge",
    "ETA",
    "TypeDReport",
    "TypeDStructure",
    "build_cfd_one_over_m",
    "delta_sequences",
    "edge_grading_defect",
    "grading_table",
    "is_bounded",
    "verify_type_d",
    "xi",
]
