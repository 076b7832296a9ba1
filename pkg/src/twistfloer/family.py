"""Sweeps over the twist parameter, exact tail fits and stabilization verdicts."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .box import build_pair
from .invariants import (
    alexander_polynomial,
    bottom_jumps,
    hfk_table,
    jump_sequence,
    nonzero_jump_count,
    tau,
    thickness,
)
from .type_a import TypeAStructure

DEFAULT_WINDOW = 8
EXTRA_POINTS = 3
SERIES = ("total_dim", "two_genus", "tau", "thickness", "alex_degree", "delta_min", "delta_max")


@dataclass(frozen=True)
class TwistRecord:
    m: int
    total_dim: int
    genus: int
    tau: int
    thickness: int
    delta_min: int
    delta_max: int
    alex_degree: int
    alexander: Dict[int, int]
    jumps: Dict[int, int]
    extremal_groups: Dict[int, List[Tuple[int, int]]]

    @property
    def two_genus(self) -> int:
        return 2 * self.genus

    def value(self, series: str) -> int:
        return getattr(self, series)


def compute_record(pattern: TypeAStructure, m: int, k: int = 2) -> TwistRecord:
    knot, z = build_pair(pattern, m)
    table = hfk_table(knot)
    poly = alexander_polynomial(table)
    g = table.genus()
    deltas = table.delta_values()
    return TwistRecord(
        m=m,
        total_dim=table.total_dim(),
        genus=g,
        tau=tau(knot, z),
        thickness=thickness(table),
        delta_min=deltas[0],
        delta_max=deltas[-1],
        alex_degree=poly.degree(),
        alexander=dict(poly.coeffs),
        jumps=jump_sequence(poly, pattern.omega),
        extremal_groups={j: sorted(table.column(-g + j).items()) for j in range(k)},
    )


def _record_job(args: Tuple[TypeAStructure, int, int]) -> TwistRecord:
    pattern, m, k = args
    try:
        return compute_record(pattern, m, k)
    except Exception as exc:  # re-raised with the failing m attached
        raise RuntimeError(f"m={m}: {exc}") from exc


def fit_linear_tail(series: Sequence[Tuple[int, int]], window: int) -> Optional[Tuple[Fraction, Fraction]]:
    """Line through the last `window` points if they are exactly collinear."""
    if window < 3:
        raise ValueError("window must be at least 3")
    pts = sorted(series)[-window:]
    if len(pts) < window:
        return None
    (x0, y0), (x1, y1) = pts[0], pts[1]
    slope = Fraction(y1 - y0, x1 - x0)
    intercept = y0 - slope * x0
    if all(slope * x + intercept == y for x, y in pts):
        return slope, intercept
    return None


@dataclass(frozen=True)
class Fit:
    slope: Fraction
    intercept: Fraction
    tail_start: int

    def at(self, m: int) -> Fraction:
        return self.slope * m + self.intercept

    def to_json(self) -> Dict[str, str]:
        return {"slope": str(self.slope), "intercept": str(self.intercept), "tail_start": self.tail_start}


def verified_fit(series: Sequence[Tuple[int, int]], window: int = DEFAULT_WINDOW, extra: int = EXTRA_POINTS) -> Optional[Fit]:
    """Exact fit on the last `window` points, re-checked on the `extra` points before them."""
    pts = sorted(series)
    if len(pts) < window + extra:
        return None
    line = fit_linear_tail(pts, window)
    if line is None:
        return None
    slope, intercept = line
    checked = pts[-(window + extra):]
    if any(slope * x + intercept != y for x, y in checked):
        return None
    return Fit(slope, intercept, checked[0][0])


@dataclass
class SweepReport:
    pattern: str
    m_from: int
    m_to: int
    k: int
    window: int
    omega: int
    records: List[TwistRecord]
    fits: Dict[str, Optional[Fit]] = field(default_factory=dict)
    derived: Dict[str, object] = field(default_factory=dict)
    verdicts: Dict[str, bool] = field(default_factory=dict)

    def series(self, name: str) -> List[Tuple[int, int]]:
        return [(r.m, r.value(name)) for r in self.records]

    def record(self, m: int) -> TwistRecord:
        for r in self.records:
            if r.m == m:
                return r
        raise KeyError(m)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def tail_records(self) -> List[TwistRecord]:
        start = self.tail_start()
        return [r for r in self.records if r.m >= start]

    def tail_start(self) -> int:
        return max(self.m_from, self.m_to - self.window - EXTRA_POINTS + 1)

    def to_json(self) -> Dict[str, object]:
        return {
            "pattern": self.pattern,
            "m_from": self.m_from,
            "m_to": self.m_to,
            "k": self.k,
            "tail_window": self.window,
            "records": [_record_json(r) for r in self.records],
            "fits": {k: (v.to_json() if v else None) for k, v in self.fits.items()},
            "derived": {k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.derived.items()},
            "verdicts": self.verdicts,
        }


def _record_json(r: TwistRecord) -> Dict[str, object]:
    d = asdict(r)
    d["alexander"] = {str(i): c for i, c in sorted(r.alexander.items())}
    d["jumps"] = {str(i): c for i, c in sorted(r.jumps.items())}
    d["extremal_groups"] = {str(j): [list(x) for x in v] for j, v in sorted(r.extremal_groups.items())}
    return d


def derive_fk(report: SweepReport) -> Tuple[int, Fraction]:
    """x([D]) from the genus slope (2g = x*lk*m + 2G) and F_K = (lk-x+1)(lk-x-1)/4.

    The winding number's sign depends on the orientation of the pattern;
    the genus formula is used with lk = |omega|.
    """
    fit = report.fits.get("two_genus")
    if fit is None:
        raise ValueError("no exact genus fit on the tail")
    lk = abs(report.omega)
    x = fit.slope / lk
    if x.denominator != 1:
        raise ValueError(f"genus slope {fit.slope} is not divisible by lk={lk}; tail too short?")
    x_norm = int(x)
    return x_norm, Fraction((lk - x_norm + 1) * (lk - x_norm - 1), 4)


def extremal_shift_ok(report: SweepReport, f_k: Fraction) -> bool:
    """Bottom-k groups at m+1 equal those at m with Maslov gradings moved down by F_K."""
    if f_k.denominator != 1:
        return False
    tail = report.tail_records()
    for r0, r1 in zip(tail, tail[1:]):
        for j in range(report.k):
            moved = [(h - int(f_k), n) for h, n in r0.extremal_groups[j]]
            if moved != r1.extremal_groups[j]:
                return False
    return True


def observed_extremal_shifts(report: SweepReport) -> List[Optional[int]]:
    """Per consecutive tail pair, the common Maslov shift of the bottom-k groups (None if none)."""
    out = []
    tail = report.tail_records()
    for r0, r1 in zip(tail, tail[1:]):
        shift = None
        for j in range(report.k):
            g0, g1 = r0.extremal_groups[j], r1.extremal_groups[j]
            if not g0 and not g1:
                continue
            if len(g0) != len(g1):
                shift = None
                break
            s = {h1 - h0 for (h0, _), (h1, _) in zip(g0, g1)}
            same_dims = all(n0 == n1 for (_, n0), (_, n1) in zip(g0, g1))
            if len(s) != 1 or not same_dims or (shift is not None and s != {shift}):
                shift = None
                break
            shift = s.pop()
        out.append(None if shift is None else -shift)
    return out


def jumps_stable(report: SweepReport) -> bool:
    tail = report.tail_records()
    bottoms = {tuple(bottom_jumps(r.jumps, report.k)) for r in tail}
    counts = {nonzero_jump_count(r.jumps) for r in tail}
    return len(bottoms) == 1 and len(counts) == 1


def alex_degree_quantized(report: SweepReport, x_norm: int) -> bool:
    """deg(Delta) slope equals (l/2)*lk for an integer l in [0, x_norm]."""
    fit = report.fits.get("alex_degree")
    if fit is None:
        return False
    l = 2 * fit.slope / abs(report.omega)
    return l.denominator == 1 and 0 <= l <= x_norm


def sweep(
    pattern: TypeAStructure,
    m_from: int,
    m_to: int,
    k: int = 2,
    window: int = DEFAULT_WINDOW,
    jobs: int = 1,
) -> SweepReport:
    if not 1 <= m_from <= m_to:
        raise ValueError("need 1 <= m_from <= m_to")
    if k < 1:
        raise ValueError("k must be at least 1")
    if window < 3:
        raise ValueError("tail window must be at least 3")
    ms = list(range(m_from, m_to + 1))
    jobs_args = [(pattern, m, k) for m in ms]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_record_job, jobs_args))
    else:
        records = [_record_job(a) for a in jobs_args]
    report = SweepReport(pattern.name, m_from, m_to, k, window, pattern.omega, records)
    for name in SERIES:
        report.fits[name] = verified_fit(report.series(name), window)
    report.derived = {"omega": pattern.omega, "lk": -pattern.omega}
    for name in ("total_dim", "two_genus", "tau", "thickness"):
        report.verdicts[f"affine_{name}"] = report.fits[name] is not None
    report.verdicts["jumps_stable"] = jumps_stable(report)
    try:
        x_norm, f_k = derive_fk(report)
    except ValueError:
        report.verdicts["extremal_stable"] = False
        report.verdicts["alex_degree_quantized"] = False
        return report
    report.derived.update({"x_norm": x_norm, "F_K": f_k, "observed_shifts": observed_extremal_shifts(report)})
    report.verdicts["extremal_stable"] = extremal_shift_ok(report, f_k)
    report.verdicts["alex_degree_quantized"] = alex_degree_quantized(report, x_norm)
    return report


TSV_HEADER = "m\ttotal_dim\tgenus\ttau\tthickness\talex_degree\tdelta_span"


def to_tsv(report: SweepReport) -> str:
    lines = [TSV_HEADER]
    for r in report.records:
        span = f"{r.delta_min}..{r.delta_max}"
        lines.append(f"{r.m}\t{r.total_dim}\t{r.genus}\t{r.tau}\t{r.thickness}\t{r.alex_degree}\t{span}")
    return "\n".join(lines) + "\n"


__all__ = [
    "DEFAULT_WINDOW",
    "Fit",
    "SweepReport",
    "TSV_HEADER",
    "TwistRecord",
    "compute_record",
    "derive_fk",
    "extremal_shift_ok",
    "fit_linear_tail",
    "jumps_stable",
    "observed_extremal_shifts",
    "sweep",
    "to_tsv",
    "verified_fit",
]
