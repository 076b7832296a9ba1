"""
The torus algebra and its grading group
=======================================

Multiply Reeb chords, read off their gradings and compare two grading
elements inside a double coset.
"""

from __future__ import annotations

from twistfloer.algebra import grading_of, multiply_basis
from twistfloer.grading import DoubleCosetContext, GradingElement, compose, relative_bigrading
from twistfloer.type_d import build_cfd_one_over_m

# products of chords concatenate when the endpoints match, and vanish otherwise
print("r1 * r2  =", multiply_basis("r1", "r2"))
print("r2 * r1  =", multiply_basis("r2", "r1") or 0)
print("r1 * r23 =", multiply_basis("r1", "r23"))

# the grading map is a homomorphism: gr(r1) gr(r2) = gr(r12)
g = compose(grading_of("r1"), grading_of("r2"))
print("gr(r1) gr(r2) =", g.serialize(), " gr(r12) =", grading_of("r12").serialize())

# the type D side for twist count m carries a periodic element P(eta)
m = 4
d = build_cfd_one_over_m(m)
print(f"P(eta) at m={m}:", d.periodic_gen.serialize())

# two elements compare only modulo the periodic subgroups on both sides
left = GradingElement.of("7/2", 0, 1, 1)
ctx = DoubleCosetContext(left, d.periodic_gen, m)
x1 = GradingElement.of("-3/2", "3/2", "-3/2", 1)
for i in range(1, m):
    a = compose(x1, d.grading_cw[f"xi{i + 1}"])
    b = compose(x1, d.grading_cw[f"xi{i}"])
    print(f"(h, a) of white box {i + 1} relative to box {i}:", relative_bigrading(ctx, a, b))
