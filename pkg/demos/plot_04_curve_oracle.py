"""
Dimensions from immersed curves
===============================

Count intersections of straight segments with the surgery line and match
the count against the measured dimensions of the Mazur family.
"""

from __future__ import annotations

from twistfloer.curves import CurveSystem, dehn_twist, fit_curve_from_dims, fitted_system, predicted_dim
from twistfloer.family import compute_record
from twistfloer.type_a import load_fixture

c = CurveSystem.of([(1, [(3, 1)]), (2, [(1, 1)])])
print("predicted dimension at m=5:", predicted_dim(c, 5))
print("after one twist the slopes are", [comp.slopes for comp in dehn_twist(c, 1).components])

# fit (D, d) on a window of measured totals and predict the next few
mazur = load_fixture("mazur")
measured = [(m, compute_record(mazur, m, 1).total_dim) for m in range(20, 31)]
big_d, small_d = fit_curve_from_dims(measured[:6])
system = fitted_system(big_d, small_d)
print(f"\nD = {big_d}, d = {small_d}")
for m, n in measured[6:]:
    print(f"m={m}: measured {n}, predicted {predicted_dim(system, m)}")
