"""Linear algebra over F2 with int bitsets, plus a dense numpy oracle.

Vectors are Python ints: bit k set means basis element k is in the support.
A matrix is stored by columns, each column the bitset of its nonzero rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np


def support(v: int) -> List[int]:
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


def from_support(indices: Iterable[int]) -> int:
    v = 0
    for k in indices:
        v ^= 1 << k
    return v


@dataclass(frozen=True)
class F2Matrix:
    rows: int
    cols: int
    entries: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for r, c in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r},{c}) outside {self.rows}x{self.cols}")

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[int]) -> "F2Matrix":
        entries = {(r, c) for c, col in enumerate(columns) for r in support(col)}
        return cls(rows, len(columns), frozenset(entries))

    @classmethod
    def from_dense(cls, array: np.ndarray) -> "F2Matrix":
        a = np.asarray(array) % 2
        rs, cs = np.nonzero(a)
        return cls(a.shape[0], a.shape[1], frozenset(zip(rs.tolist(), cs.tolist())))

    def columns(self) -> List[int]:
        cols = [0] * self.cols
        for r, c in self.entries:
            cols[c] ^= 1 << r
        return cols

    def to_dense(self) -> np.ndarray:
        a = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for r, c in self.entries:
            a[r, c] = 1
        return a


class _Reducer:
    """Incremental column basis keyed by lowest set bit, with preimage tracking."""

    def __init__(self) -> None:
        self.pivots: Dict[int, Tuple[int, int]] = {}

    def reduce(self, v: int, combo: int = 0) -> Tuple[int, int]:
        while v:
            low = (v & -v).bit_length() - 1
            hit = self.pivots.get(low)
            if hit is None:
                break
            v ^= hit[0]
            combo ^= hit[1]
        return v, combo

    def add(self, v: int, combo: int = 0) -> Tuple[int, int]:
        """Insert v; returns the reduced remainder and the combination that produced it."""
        v, combo = self.reduce(v, combo)
        if v:
            self.pivots[(v & -v).bit_length() - 1] = (v, combo)
        return v, combo

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank_and_solve(m: F2Matrix, targets: Sequence[int] = ()) -> Tuple[int, List[Optional[int]]]:
    """Rank of m and, per target (bitset over rows), a preimage bitset over columns or None."""
    red = _Reducer()
    for c, col in enumerate(m.columns()):
        red.add(col, 1 << c)
    solutions: List[Optional[int]] = []
    for t in targets:
        if t >> m.rows:
            raise ValueError("target has entries beyond the row count")
        rest, combo = red.reduce(t)
        solutions.append(None if rest else combo)
    return red.rank, solutions


def dense_rank(array: np.ndarray) -> int:
    """Plain row reduction on a uint8 array; used as an independent oracle."""
    a = (np.asarray(array) % 2).astype(np.uint8).copy()
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        hits = np.nonzero(a[:, c])[0]
        hits = hits[hits != r]
        a[hits] ^= a[r]
        r += 1
        if r == rows:
            break
    return r


@dataclass(frozen=True)
class HomologyBasis:
    classes: Tuple[int, ...]
    cycle_rank: int
    boundary_rank: int

    @property
    def dim(self) -> int:
        return len(self.classes)


def _kernel(columns: Sequence[int], idx: Iterable[int]) -> Tuple[List[int], _Reducer]:
    image = _Reducer()
    kernel: List[int] = []
    for k in idx:
        rest, combo = image.add(columns[k], 1 << k)
        if not rest:
            kernel.append(combo)
    return kernel, image


def homology_of_columns(
    n: int,
    columns: Sequence[int],
    subset: Optional[Sequence[int]] = None,
    incoming: Optional[Sequence[int]] = None,
) -> HomologyBasis:
    """Homology of the differential whose column k is the boundary of basis element k.

    subset restricts the cycles to a span of basis elements; incoming lists
    the elements whose boundaries count as the image (default: subset). For
    one degree of a graded complex pass the degree as subset and the degree
    above as incoming.
    """
    idx = list(range(n)) if subset is None else list(subset)
    kernel, image = _kernel(columns, idx)
    if incoming is not None:
        _, image = _kernel(columns, incoming)
    boundary_rank = image.rank
    span = _Reducer()
    for v, _ in image.pivots.values():
        span.add(v)
    classes = []
    for z in kernel:
        rest, _ = span.add(z)
        if rest:
            classes.append(z)
    return HomologyBasis(tuple(classes), len(kernel), boundary_rank)


def in_span_mod_image(columns: Sequence[int], v: int, spanset: Iterable[int]) -> bool:
    red = _Reducer()
    for col in columns:
        red.add(col)
    for s in spanset:
        red.add(s)
    rest, _ = red.reduce(v)
    return rest == 0


def homology(c) -> HomologyBasis:
    """Homology of any complex exposing .dim and .columns."""
    return homology_of_columns(c.dim, c.columns)


def class_in_span(c, v: int, spanset: Iterable[int]) -> bool:
    """Whether v lies in span(spanset) + im(del) for the complex c."""
    return in_span_mod_image(c.columns, v, spanset)


def apply(columns: Sequence[int], v: int) -> int:
    out = 0
    for k in support(v):
        out ^= columns[k]
    return out


def square_is_zero(columns: Sequence[int]) -> bool:
    return all(apply(columns, col) == 0 for col in columns)


__all__ = [
    "F2Matrix",
    "HomologyBasis",
    "apply",
    "dense_rank",
    "from_support",
    "homology_of_columns",
    "in_span_mod_image",
    "homology",
    "class_in_span",
    "rank_and_solve",
    "square_is_zero",
    "support",
]
