"""Type A structures (right A-infinity modules over the torus algebra).

A pattern carries one operation list. Each operation records how often its
domain crosses the second basepoint w: operations with w = 0 form the knot
view, and all operations together form the full (z-only) view.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from . import algebra
from .grading import (
    LAMBDA,
    MU,
    GradingElement,
    compose,
    normalize_left_gen,
    power,
    product,
)

VIEWS = ("knot", "full")
PathLike = Union[str, Path]


class PatternError(ValueError):
    """Schema, composability or hypothesis violation in pattern data."""


@dataclass(frozen=True)
class AOperation:
    src: str
    args: Tuple[str, ...]
    dst: str
    w_mult: int = 0

    def __str__(self) -> str:
        inner = "".join(f" (x) {a}" for a in self.args)
        tag = f" [w={self.w_mult}]" if self.w_mult else ""
        return f"m{len(self.args) + 1}({self.src}{inner}) = {self.dst}{tag}"


@dataclass(frozen=True)
class ChainFamilyOp:
    """m(src (x) prefix (x) r23^n (x) suffix) = dst for every n >= 0.

    The instance at n crosses w exactly w_mult + n * w_step times.
    """

    src: str
    prefix: Tuple[str, ...]
    suffix: Tuple[str, ...]
    dst: str
    w_mult: int = 0
    w_step: int = 0

    def instance(self, n: int) -> AOperation:
        return AOperation(self.src, self.prefix + ("r23",) * n + self.suffix, self.dst, self.w_mult + n * self.w_step)

    def match(self, args: Tuple[str, ...]) -> Optional[int]:
        """The n with args = prefix + r23^n + suffix, if any."""
        lp, ls = len(self.prefix), len(self.suffix)
        if len(args) < lp + ls:
            return None
        if args[:lp] != self.prefix or args[len(args) - ls:] != self.suffix:
            return None
        middle = args[lp:len(args) - ls]
        if any(a != "r23" for a in middle):
            return None
        return len(middle)

    def in_view(self, view: str, n: int) -> bool:
        return view == "full" or self.instance(n).w_mult == 0


@dataclass
class TypeAStructure:
    generators: List[Tuple[str, str]]
    gradings: Dict[str, GradingElement]
    periodic_gen: GradingElement
    ops: List[AOperation]
    families: List[ChainFamilyOp] = field(default_factory=list)
    name: str = "pattern"
    notes: Dict[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self._index: Dict[Tuple[str, Tuple[str, ...]], List[AOperation]] = {}
        for op in self.ops:
            self._index.setdefault((op.src, op.args), []).append(op)

    @property
    def idempotent(self) -> Dict[str, str]:
        return dict(self.generators)

    @property
    def names(self) -> List[str]:
        return [n for n, _ in self.generators]

    @property
    def left_gen(self) -> GradingElement:
        """Periodic generator normalized to spin (0, 1)."""
        return normalize_left_gen(self.periodic_gen)

    @property
    def omega(self) -> int:
        return self.left_gen.alex

    def view_ops(self, view: str, family_bound: int = 0) -> List[AOperation]:
        _check_view(view)
        out = [op for op in self.ops if view == "full" or op.w_mult == 0]
        for fam in self.families:
            for n in range(family_bound + 1):
                if fam.in_view(view, n):
                    out.append(fam.instance(n))
        return out

    def lookup(self, view: str, src: str, args: Tuple[str, ...]) -> List[Tuple[str, int]]:
        """All (dst, w_mult) of operations in the view with this input; duplicates kept."""
        found = [(op.dst, op.w_mult) for op in self._index.get((src, args), ()) if view == "full" or op.w_mult == 0]
        for fam in self.families:
            if fam.src != src:
                continue
            n = fam.match(args)
            if n is not None and fam.in_view(view, n):
                found.append((fam.dst, fam.instance(n).w_mult))
        return found

    def max_args(self) -> Optional[int]:
        """Longest argument list, or None when chain families are present."""
        if self.families:
            return None
        return max((len(op.args) for op in self.ops), default=0)


def _check_view(view: str) -> None:
    if view not in VIEWS:
        raise ValueError(f"view must be one of {VIEWS}, got {view!r}")


def m_eval(a: TypeAStructure, view: str, src: str, args: Sequence[str]) -> frozenset:
    """F2 sum of outputs of every matching operation in the view."""
    _check_view(view)
    out: set = set()
    for dst, _ in a.lookup(view, src, tuple(args)):
        out ^= {dst}
    return frozenset(out)


# ---------------------------------------------------------------- validation


def _validate(a: TypeAStructure) -> None:
    idem = a.idempotent
    if len(idem) != len(a.generators):
        raise PatternError("duplicate generator names")
    for name, i in a.generators:
        if i not in algebra.IDEMPOTENTS:
            raise PatternError(f"generator {name}: bad idempotent {i!r}")
        if name not in a.gradings:
            raise PatternError(f"generator {name}: missing grading")
    try:
        left = a.left_gen
    except ValueError as exc:
        raise PatternError(str(exc)) from None
    if left.alex == 0:
        raise PatternError("periodic generator has zero Alexander component (winding number 0)")
    items: List[Tuple[str, AOperation]] = [(str(op), op) for op in a.ops]
    for fam in a.families:
        items.append((f"family {fam.src}->{fam.dst}", fam.instance(0)))
        items.append((f"family {fam.src}->{fam.dst}", fam.instance(1)))
    for label, op in items:
        _check_op(label, op, idem)


def _check_op(label: str, op: AOperation, idem: Mapping[str, str]) -> None:
    for g in (op.src, op.dst):
        if g not in idem:
            raise PatternError(f"{label}: unknown generator {g!r}")
    if op.w_mult < 0:
        raise PatternError(f"{label}: negative w multiplicity")
    if not op.args:
        if idem[op.src] != idem[op.dst]:
            raise PatternError(f"{label}: m1 joins different idempotents")
        return
    for x in op.args:
        if x not in algebra.RHOS:
            raise PatternError(f"{label}: argument {x!r} is not a rho element")
    sides = [algebra.idempotent_sides(x) for x in op.args]
    if sides[0][0] != idem[op.src]:
        raise PatternError(f"{label}: {op.args[0]} needs left idempotent {sides[0][0]}, {op.src} has {idem[op.src]}")
    for (_, r), (l, _) in zip(sides, sides[1:]):
        if r != l:
            raise PatternError(f"{label}: arguments are not composable")
    if sides[-1][1] != idem[op.dst]:
        raise PatternError(f"{label}: {op.args[-1]} ends at {sides[-1][1]}, {op.dst} has {idem[op.dst]}")


# ---------------------------------------------------------------- file IO


def _parse_args(raw: object, where: str) -> Tuple[str, ...]:
    if not isinstance(raw, list) or not all(isinstance(x, str) for x in raw):
        raise PatternError(f"{where}: args must be a list of strings")
    return tuple(raw)


def _nat(raw: object, where: str) -> int:
    if not isinstance(raw, int) or isinstance(raw, bool) or raw < 0:
        raise PatternError(f"{where}: expected a natural number, got {raw!r}")
    return raw


def _parse_generators(data: Mapping) -> Tuple[List[Tuple[str, str]], Dict[str, GradingElement]]:
    gens, grs = [], {}
    for k, g in enumerate(data.get("generators", [])):
        try:
            name, idem = g["name"], g["idem"]
            grs[name] = GradingElement.parse(g["gr"])
        except (KeyError, TypeError, ValueError) as exc:
            raise PatternError(f"generator #{k}: {exc}") from None
        gens.append((name, idem))
    return gens, grs


def pattern_from_dict(data: Mapping, name: str = "pattern") -> TypeAStructure:
    if not isinstance(data, Mapping):
        raise PatternError("pattern must be a JSON object")
    for key in ("generators", "periodic_gen"):
        if key not in data:
            raise PatternError(f"missing field {key!r}")
    gens, grs = _parse_generators(data)
    try:
        periodic = GradingElement.parse(data["periodic_gen"])
    except (TypeError, ValueError) as exc:
        raise PatternError(f"periodic_gen: {exc}") from None
    ops = []
    for k, raw in enumerate(data.get("ops", [])):
        where = f"op #{k}"
        try:
            ops.append(AOperation(raw["src"], _parse_args(raw["args"], where), raw["dst"], _nat(raw.get("w", 0), where)))
        except KeyError as exc:
            raise PatternError(f"{where}: missing field {exc}") from None
    fams = []
    for k, raw in enumerate(data.get("families", [])):
        where = f"family #{k}"
        try:
            fams.append(
                ChainFamilyOp(
                    raw["src"],
                    _parse_args(raw.get("prefix", []), where),
                    _parse_args(raw.get("suffix", []), where),
                    raw["dst"],
                    _nat(raw.get("w", 0), where),
                    _nat(raw.get("w_step", 0), where),
                )
            )
        except KeyError as exc:
            raise PatternError(f"{where}: missing field {exc}") from None
    notes = {k: v for k, v in data.items() if k not in ("generators", "periodic_gen", "ops", "families")}
    a = TypeAStructure(gens, grs, periodic, ops, fams, name=str(data.get("name", name)), notes=notes)
    _validate(a)
    return a


def pattern_to_dict(a: TypeAStructure) -> Dict[str, object]:
    out: Dict[str, object] = {"name": a.name}
    out.update(a.notes)
    out["generators"] = [{"name": n, "idem": i, "gr": a.gradings[n].serialize()} for n, i in a.generators]
    out["periodic_gen"] = a.periodic_gen.serialize()
    out["ops"] = [{"src": op.src, "args": list(op.args), "dst": op.dst, "w": op.w_mult} for op in a.ops]
    fams = []
    for f in a.families:
        item = {"src": f.src, "prefix": list(f.prefix), "suffix": list(f.suffix), "dst": f.dst, "w": f.w_mult}
        if f.w_step:
            item["w_step"] = f.w_step
        fams.append(item)
    out["families"] = fams
    return out


def load_pattern(file: PathLike) -> TypeAStructure:
    path = Path(file)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise PatternError(f"{path}: invalid JSON: {exc}") from None
    return pattern_from_dict(data, name=path.stem)


FIXTURES = ("mazur", "unknot_core", "h_infinity")


def fixture_path(name: str) -> Path:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {FIXTURES}")
    return Path(str(resources.files("twistfloer") / "fixtures" / f"{name}.json"))


def load_fixture(name: str) -> TypeAStructure:
    return load_pattern(fixture_path(name))


# ---------------------------------------------------------------- A-infinity relation


@dataclass(frozen=True)
class Violation:
    src: str
    word: Tuple[str, ...]
    residue: Tuple[str, ...]

    def __str__(self) -> str:
        return f"({self.src}; {', '.join(self.word) or '-'}) leaves {', '.join(self.residue)}"


@dataclass(frozen=True)
class AInfinityReport:
    view: str
    max_args: int
    words_checked: int
    violations: Tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _words(start: str, max_len: int) -> Iterator[Tuple[str, ...]]:
    yield ()
    frontier: List[Tuple[Tuple[str, ...], str]] = [((), start)]
    for _ in range(max_len):
        nxt = []
        for word, idem in frontier:
            for r in algebra.RHOS:
                left, right = algebra.idempotent_sides(r)
                if left == idem:
                    w = word + (r,)
                    yield w
                    nxt.append((w, right))
        frontier = nxt


def _relation_residue(a: TypeAStructure, view: str, x: str, word: Tuple[str, ...]) -> Dict[str, int]:
    acc: Dict[str, int] = {}

    def add(gens: Iterable[str]) -> None:
        for g in gens:
            acc[g] = acc.get(g, 0) ^ 1

    n = len(word)
    for j in range(n + 1):
        for y in m_eval(a, view, x, word[:j]):
            add(m_eval(a, view, y, word[j:]))
    for l in range(n - 1):
        p = algebra.multiply_basis(word[l], word[l + 1])
        if p is not None:
            add(m_eval(a, view, x, word[:l] + (p,) + word[l + 2:]))
    return acc


def verify_a_infinity(a: TypeAStructure, view: str = "full", max_args: Optional[int] = None) -> AInfinityReport:
    """Check sum_j m(m(x, a_1..a_j), a_{j+1}..a_n) + sum_l m(x, .., a_l a_{l+1}, ..) = 0.

    Words range over composable rho-letters of length <= max_args; the
    default covers every operation input plus one extra letter.
    """
    _check_view(view)
    if max_args is None:
        longest = a.max_args()
        max_args = (longest if longest is not None else 8) + 1
    violations = []
    count = 0
    idem = a.idempotent
    for x in a.names:
        for word in _words(idem[x], max_args):
            count += 1
            residue = _relation_residue(a, view, x, word)
            left = tuple(sorted(g for g, bit in residue.items() if bit))
            if left:
                violations.append(Violation(x, word, left))
    return AInfinityReport(view, max_args, count, tuple(violations))


# ---------------------------------------------------------------- gradings


def left_coset_difference(left: GradingElement, g1: GradingElement, g2: GradingElement) -> Optional[Tuple[int, int]]:
    """(h, a) with g1 = left^s * g2 * lambda^h * mu^a, or None when spins disagree."""
    di = g1.spin_i - g2.spin_i
    if di.doubled != 0:
        return None
    dj = g1.spin_j - g2.spin_j
    if not dj.integral:
        return None
    moved = compose(power(left, dj.to_int()), g2)
    return (g1.maslov - moved.maslov).to_int(), g1.alex - moved.alex


def predicted_target_grading(a: TypeAStructure, op: AOperation, with_w: bool = True) -> GradingElement:
    n = len(op.args)
    g = product(power(LAMBDA, n - 1), a.gradings[op.src], algebra.grading_of_word(op.args))
    if with_w and op.w_mult:
        g = compose(g, power(MU, -op.w_mult))
    return g


@dataclass(frozen=True)
class GradingViolation:
    op: AOperation
    defect: Optional[Tuple[int, int]]

    def __str__(self) -> str:
        if self.defect is None:
            return f"{self.op}: Spin^c mismatch"
        h, al = self.defect
        return f"{self.op}: off by lambda^{h} mu^{al}"


@dataclass(frozen=True)
class OpGradingReport:
    checked: int
    violations: Tuple[GradingViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_op_gradings(a: TypeAStructure, family_bound: int = 10) -> OpGradingReport:
    """gr(dst) = lambda^{n-1} gr(src) gr(a_1)...gr(a_n) mu^{-w} modulo the periodic generator."""
    left = a.left_gen
    bad = []
    ops = a.view_ops("full", family_bound)
    for op in ops:
        target = predicted_target_grading(a, op)
        defect = left_coset_difference(left, a.gradings[op.dst], target)
        if defect != (0, 0):
            bad.append(GradingViolation(op, defect))
    return OpGradingReport(len(ops), tuple(bad))


# ---------------------------------------------------------------- decorated-graph import

_DIGIT_SWAP = {"1": "3", "2": "2", "3": "1"}
_RUN_TO_BASIS = {"1": "r1", "2": "r2", "3": "r3", "12": "r12", "23": "r23", "123": "r123"}


def regroup_word(word: str) -> Tuple[str, ...]:
    """Split a digit word into maximal runs of consecutive increasing digits."""
    if not word:
        return ()
    runs = [word[0]]
    for ch in word[1:]:
        if int(ch) == int(runs[-1][-1]) + 1:
            runs[-1] += ch
        else:
            runs.append(ch)
    try:
        return tuple(_RUN_TO_BASIS[r] for r in runs)
    except KeyError:
        raise PatternError(f"word {word!r} has no regrouping into algebra elements") from None


def _graph_edges(data: Mapping) -> List[Tuple[str, str, str, int]]:
    edges = []
    for k, e in enumerate(data.get("edges", [])):
        try:
            label = str(e["label"])
            if label not in ("", "1", "2", "3", "12", "23", "123"):
                raise PatternError(f"edge #{k}: bad label {label!r}")
            edges.append((e["src"], label, e["dst"], _nat(e.get("w", 0), f"edge #{k}")))
        except KeyError as exc:
            raise PatternError(f"edge #{k}: missing field {exc}") from None
    return edges


def graph_to_operations(edges: Sequence[Tuple[str, str, str, int]], idem: Mapping[str, str]) -> List[AOperation]:
    """Hedden-Levine reading of a decorated graph as A-infinity operations.

    Labels are relabeled 1<->3 and concatenated along directed paths of
    labeled edges; each path word is regrouped into maximal consecutive runs.
    A path continues only where the letters at a junction merge (last digit
    plus one equals next first digit), which is what keeps the lambda power
    of the composite operation consistent. Unlabeled edges give m1 and never
    join longer paths.
    """
    out: Dict[str, List[Tuple[str, str, int]]] = {}
    ops: List[AOperation] = []
    for src, label, dst, w in edges:
        if label == "":
            ops.append(AOperation(src, (), dst, w))
        else:
            out.setdefault(src, []).append(("".join(_DIGIT_SWAP[c] for c in label), dst, w))
    limit = sum(1 for e in edges if e[1]) + 1
    for start in sorted(idem, key=list(idem).index):
        stack = [(start, "", 0, 0)]
        while stack:
            node, word, w, depth = stack.pop()
            if depth > limit:
                raise PatternError(f"directed cycle through {start}; graph is not bounded")
            for piece, dst, ew in out.get(node, ()):
                if word and int(piece[0]) != int(word[-1]) + 1:
                    # a junction that does not merge letters is not a disk
                    continue
                path_word = word + piece
                args = regroup_word(path_word)
                op = AOperation(start, args, dst, w + ew)
                try:
                    _check_op(f"path {start}->{dst} word {path_word}", op, idem)
                except PatternError as exc:
                    raise PatternError(str(exc)) from None
                ops.append(op)
                stack.append((dst, path_word, w + ew, depth + 1))
    ops.sort(key=lambda o: (list(idem).index(o.src), len(o.args), o.args, list(idem).index(o.dst), o.w_mult))
    return ops


def import_decorated_graph(file: Union[PathLike, Mapping]) -> TypeAStructure:
    """Read a decorated-graph JSON file into a type A structure.

    Schema: generators and periodic_gen as in pattern files, plus
    "edges": [{"src", "label", "dst", "w"}] with labels in
    {"", "1", "2", "3", "12", "23", "123"}.
    """
    if isinstance(file, Mapping):
        data, name = file, "graph"
    else:
        path = Path(file)
        data, name = json.loads(path.read_text(encoding="utf-8")), path.stem
    gens, grs = _parse_generators(data)
    ops = graph_to_operations(_graph_edges(data), dict(gens))
    raw = {"generators": data.get("generators", []), "periodic_gen": data.get("periodic_gen"), "ops": []}
    base = pattern_from_dict(raw, name=str(data.get("name", name)))
    a = TypeAStructure(gens, grs, base.periodic_gen, ops, [], name=base.name)
    _validate(a)
    return a


__all__ = [
    "AInfinityReport",
    "AOperation",
    "ChainFamilyOp",
    "FIXTURES",
    "OpGradingReport",
    "PatternError",
    "TypeAStructure",
    "VIEWS",
    "fixture_path",
    "graph_to_operations",
    "import_decorated_graph",
    "left_coset_difference",
    "load_fixture",
    "load_pattern",
    "m_eval",
    "pattern_from_dict",
    "pattern_to_dict",
    "regroup_word",
    "verify_a_infinity",
    "verify_op_gradings",
]
