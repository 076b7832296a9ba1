"""
Pairing the Mazur pattern with the twisted solid torus
======================================================

Build both views of the paired complex for three twists, list the edges
and find the generator of the homology of the ambient sphere.
"""

from __future__ import annotations

from twistfloer import f2
from twistfloer.box import build_complex, build_pair
from twistfloer.invariants import alexander_polynomial, hfk_table, tau
from twistfloer.type_a import load_fixture, verify_op_gradings

mazur = load_fixture("mazur")
print(len(mazur.generators), "generators,", len(mazur.ops), "operations")

# one listed operation does not respect the grading rule; it is kept and flagged
for v in verify_op_gradings(mazur).violations:
    print("flagged:", v)

m = 3
knot = build_complex(mazur, "knot", m)
print(f"\nknot view at m={m}: {knot.dim} basis elements")
for e in knot.edges:
    print(f"  {knot.basis[e.src]} -> {knot.basis[e.dst]}  (type {e.edge_type})")

# the full view computes the homology of the three-sphere: one class
z = build_complex(mazur, "full", m)
h = f2.homology(z)
v = z.vector([("x0", 0), ("x1", 1), ("x1", 2), ("x1", 3)])
print("\nfull view homology dimension:", h.dim)
print("x0*eta + x1*(xi1 + xi2 + xi3) is a cycle:", z.boundary(v) == 0)
print("and represents the generator:", not f2.class_in_span(z, v, []))

# bigraded knot Floer homology
knot, z = build_pair(mazur, m)
table = hfk_table(knot)
print("\n" + table.to_text())
print("Alexander polynomial:", alexander_polynomial(table))
print("genus", table.genus(), " tau", tau(knot, z))
