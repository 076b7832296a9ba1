"""The paired complex CFA (x) CFD(1/m) on the basis C* + white(1..m).

Black-box elements pair idempotent-i0 generators with eta; white(i) pairs
idempotent-i1 generators with xi_i. Edges come from matching delta
sequences of the solid-torus structure against the pattern's operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import f2
from .grading import DoubleCosetContext, GradingElement, compose, relative_bigrading
from .type_a import TypeAStructure
from .type_d import ETA, build_cfd_one_over_m, delta_sequences, grading_table, xi

BLACK = 0


class BigradingError(ValueError):
    """Pairing data that does not yield a knot in S^3 (or is inconsistently graded)."""


@dataclass(frozen=True, order=True)
class BoxElement:
    box: int  # 0 for the black box, i >= 1 for white(i)
    a_gen: str

    @property
    def is_black(self) -> bool:
        return self.box == BLACK

    def d_gen(self) -> str:
        return ETA if self.box == BLACK else xi(self.box)

    def __str__(self) -> str:
        return f"{self.a_gen}*{self.d_gen()}"


@dataclass(frozen=True)
class BoxEdge:
    src: int
    dst: int
    edge_type: int


@dataclass
class BoxComplex:
    twist_count: int
    view: str
    basis: List[BoxElement]
    edges: List[BoxEdge]
    ctx: DoubleCosetContext
    gradings: List[GradingElement]
    relative: List[Tuple[int, int]]
    bigrading: Optional[List[Tuple[int, int]]] = None
    pattern_name: str = ""
    index: Dict[BoxElement, int] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self.index = {e: k for k, e in enumerate(self.basis)}
        cols = [0] * len(self.basis)
        for e in self.edges:
            cols[e.src] ^= 1 << e.dst
        self.columns = cols

    @property
    def dim(self) -> int:
        return len(self.basis)

    def element(self, a_gen: str, box: int) -> int:
        return self.index[BoxElement(box, a_gen)]

    def vector(self, items: Sequence[Tuple[str, int]]) -> int:
        return f2.from_support(self.element(g, b) for g, b in items)

    def boundary(self, v: int) -> int:
        return f2.apply(self.columns, v)

    def black_mask(self) -> int:
        return f2.from_support(k for k, e in enumerate(self.basis) if e.is_black)

    def to_json(self) -> Dict[str, object]:
        out: Dict[str, object] = {
            "pattern": self.pattern_name,
            "view": self.view,
            "m": self.twist_count,
            "basis": [str(e) for e in self.basis],
            "edges": [[str(self.basis[e.src]), str(self.basis[e.dst]), e.edge_type] for e in self.edges],
        }
        if self.bigrading is not None:
            out["bigrading"] = {str(e): list(hb) for e, hb in zip(self.basis, self.bigrading)}
        return out


def _basis(a: TypeAStructure, m: int) -> List[BoxElement]:
    idem = a.idempotent
    black = [BoxElement(BLACK, n) for n in a.names if idem[n] == "i0"]
    white = [BoxElement(i, n) for i in range(1, m + 1) for n in a.names if idem[n] == "i1"]
    return black + white


def _edge_type(src: BoxElement, word: Tuple[str, ...]) -> int:
    if src.is_black:
        if not word:
            return 1
        if word[0] == "r3":
            return 2
        if word == ("r1",):
            return 3
        raise AssertionError(f"unexpected delta word {word}")
    return 4


def element_grading(a: TypeAStructure, e: BoxElement, table: Dict[str, GradingElement]) -> GradingElement:
    return compose(a.gradings[e.a_gen], table[e.d_gen()])


def build_complex(a: TypeAStructure, view: str, twist_count: int, representative: str = "cw") -> BoxComplex:
    """del(x (x) y) = sum_k m_{k+1}(x (x) delta_k(y)), with each surviving edge typed."""
    m = twist_count
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"twist_count must be a positive integer, got {m!r}")
    d = build_cfd_one_over_m(m)
    basis = _basis(a, m)
    index = {e: k for k, e in enumerate(basis)}
    seqs = {name: delta_sequences(d, name, m + 2) for name, _ in d.generators}
    acc: Dict[Tuple[int, int], List[int]] = {}
    for k, e in enumerate(basis):
        for word, end in seqs[e.d_gen()]:
            box = BLACK if end == ETA else int(end[2:])
            for dst, _ in a.lookup(view, e.a_gen, word):
                target = index[BoxElement(box, dst)]
                acc.setdefault((k, target), []).append(_edge_type(e, word))
    edges = [BoxEdge(s, t, types[0]) for (s, t), types in sorted(acc.items()) if len(types) % 2]
    table = grading_table(d, representative)
    grs = [element_grading(a, e, table) for e in basis]
    ctx = DoubleCosetContext(a.left_gen, d.periodic_gen, m)
    relative = []
    for g in grs:
        r = relative_bigrading(ctx, g, grs[0])
        if r is None:
            raise BigradingError("basis elements fall in more than one Spin^c structure")
        relative.append(r)
    return BoxComplex(m, view, basis, edges, ctx, grs, relative, pattern_name=a.name)


def shift(e: BoxElement, direction: str, twist_count: int) -> Optional[BoxElement]:
    if direction not in ("+", "-"):
        raise ValueError("direction must be '+' or '-'")
    if e.is_black:
        return None
    box = e.box + (1 if direction == "+" else -1)
    if not 1 <= box <= twist_count:
        return None
    return BoxElement(box, e.a_gen)


def inclusion(e: BoxElement, twist_count: int, variant: str = "phi") -> BoxElement:
    """C^m -> C^{m+1}; phi opens a new white box after the middle, phi_prime appends one."""
    if variant not in ("phi", "phi_prime"):
        raise ValueError("variant must be 'phi' or 'phi_prime'")
    if e.is_black or variant == "phi_prime":
        return e
    if Fraction(e.box) <= Fraction(twist_count, 2):
        return e
    return BoxElement(e.box + 1, e.a_gen)


def precedes(u: BoxElement, v: BoxElement) -> bool:
    """Clockwise partial order: the black box first, then white boxes by index."""
    if u.is_black:
        return True
    if v.is_black:
        return False
    return u.box <= v.box


# ---------------------------------------------------------------- bigrading


def _maslov_blocks(c: BoxComplex) -> Dict[int, List[int]]:
    blocks: Dict[int, List[int]] = {}
    for k, (h, _) in enumerate(c.relative):
        blocks.setdefault(h, []).append(k)
    return blocks


def check_edge_gradings(c: BoxComplex, grading: Sequence[Tuple[int, int]]) -> List[str]:
    """Edges must drop h by one and never raise a; knot-view edges keep a."""
    bad = []
    for e in c.edges:
        (h0, a0), (h1, a1) = grading[e.src], grading[e.dst]
        if h1 != h0 - 1 or a1 > a0 or (c.view == "knot" and a1 != a0):
            bad.append(f"{c.basis[e.src]} -> {c.basis[e.dst]}: ({h0},{a0}) -> ({h1},{a1})")
    return bad


def z_generator(z: BoxComplex) -> Tuple[int, int]:
    """A Maslov-homogeneous representative of the z-homology generator meeting C*, and its h."""
    total = f2.homology_of_columns(z.dim, z.columns)
    if total.dim != 1:
        raise BigradingError(f"not a knot pattern: z-homology has dimension {total.dim}")
    black = z.black_mask()
    blocks = _maslov_blocks(z)
    for h, members in sorted(blocks.items()):
        part = f2.homology_of_columns(z.dim, z.columns, members, blocks.get(h + 1, []))
        if part.dim == 0:
            continue
        rep = part.classes[0]
        if not rep & black:
            # try to move the class onto C* by adding a boundary from the block above
            for k in blocks.get(h + 1, []):
                b = z.columns[k]
                if b & black:
                    rep ^= b
                    break
        if not rep & black:
            raise BigradingError("z-homology generator has no representative meeting the black box")
        return rep, h
    raise AssertionError("unreachable: homology is one-dimensional")


def bigrade(c: BoxComplex, z: BoxComplex) -> BoxComplex:
    """Absolute (h, a) on c (knot view) from its z-view companion on the same basis."""
    if c.basis != z.basis or c.twist_count != z.twist_count:
        raise BigradingError("knot and z complexes must share a basis")
    rel = c.relative
    bad = check_edge_gradings(z, rel) + check_edge_gradings(c, rel)
    if bad:
        raise BigradingError("edges inconsistent with relative gradings: " + "; ".join(bad[:5]))
    rep, _ = z_generator(z)
    black_support = [k for k in f2.support(rep) if c.basis[k].is_black]
    anchor = min(black_support, key=lambda k: c.basis[k].a_gen)
    if len({rel[k][0] for k in f2.support(rep)}) != 1:
        raise BigradingError("z-homology generator is not Maslov-homogeneous")
    h0 = rel[anchor][0]
    dims = _relative_hfk(c)
    alex = [a for (a, _), n in dims.items() if n]
    twice_center = max(alex) + min(alex)
    if twice_center % 2:
        raise BigradingError("asymmetric HFK: no integral Alexander centering")
    a0 = twice_center // 2
    graded = [(h - h0, a - a0) for h, a in rel]
    out_c = replace(c, bigrading=graded)
    return out_c


def _relative_hfk(c: BoxComplex) -> Dict[Tuple[int, int], int]:
    blocks: Dict[Tuple[int, int], List[int]] = {}
    for k, (h, a) in enumerate(c.relative):
        blocks.setdefault((a, h), []).append(k)
    return {
        (a, h): f2.homology_of_columns(c.dim, c.columns, members, blocks.get((a, h + 1), [])).dim
        for (a, h), members in blocks.items()
    }


def build_pair(a: TypeAStructure, twist_count: int, representative: str = "cw") -> Tuple[BoxComplex, BoxComplex]:
    """Bigraded knot-view and z-view complexes for one twist count."""
    knot = build_complex(a, "knot", twist_count, representative)
    z = build_complex(a, "full", twist_count, representative)
    knot = bigrade(knot, z)
    z = replace(z, bigrading=knot.bigrading)
    return knot, z


__all__ = [
    "BLACK",
    "BigradingError",
    "BoxComplex",
    "BoxEdge",
    "BoxElement",
    "bigrade",
    "build_complex",
    "build_pair",
    "check_edge_gradings",
    "element_grading",
    "inclusion",
    "precedes",
    "shift",
    "z_generator",
]
