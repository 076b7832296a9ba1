"""Knot Floer homology of twist families from bordered pairing data."""

from .box import BoxComplex, BoxElement, bigrade, build_complex, build_pair
from .curves import CurveSystem, dehn_twist, fit_curve_from_dims, predicted_dim
from .family import SweepReport, derive_fk, fit_linear_tail, sweep
from .grading import DoubleCosetContext, GradingElement, HalfInt, compose, inverse, power, relative_bigrading
from .invariants import alexander_polynomial, hfk_table, jump_sequence, tau, thickness
from .type_a import TypeAStructure, import_decorated_graph, load_fixture, load_pattern, m_eval
from .type_d import TypeDStructure, build_cfd_one_over_m, delta_sequences, verify_type_d

__version__ = "0.1.0"

__all__ = [
    "BoxComplex",
    "BoxElement",
    "CurveSystem",
    "DoubleCosetContext",
    "GradingElement",
    "HalfInt",
    "SweepReport",
    "TypeAStructure",
    "TypeDStructure",
    "alexander_polynomial",
    "bigrade",
    "build_cfd_one_over_m",
    "build_complex",
    "build_pair",
    "compose",
    "dehn_twist",
    "delta_sequences",
    "derive_fk",
    "fit_curve_from_dims",
    "fit_linear_tail",
    "hfk_table",
    "import_decorated_graph",
    "inverse",
    "jump_sequence",
    "load_fixture",
    "load_pattern",
    "m_eval",
    "power",
    "predicted_dim",
    "relative_bigrading",
    "sweep",
    "tau",
    "thickness",
    "verify_type_d",
]
