"""
Stabilization along the twist family
====================================

Sweep the twist count, fit the tails of each invariant exactly and derive
the per-twist Maslov shift of the extremal groups from the genus slope.
"""

from __future__ import annotations

from twistfloer.family import derive_fk, observed_extremal_shifts, sweep, to_tsv
from twistfloer.type_a import load_fixture

report = sweep(load_fixture("mazur"), 1, 24, k=3)
print(to_tsv(report))

for name, fit in report.fits.items():
    print(f"{name:12s}", f"{fit.slope}*m + {fit.intercept} from m={fit.tail_start}" if fit else "no exact tail")

# the genus slope fixes the Thurston norm of the pattern's disk; F_K follows
x_norm, f_k = derive_fk(report)
print("\nx_norm =", x_norm, " F_K =", f_k)
print("observed shifts of the bottom groups:", sorted(set(observed_extremal_shifts(report))))
print("verdicts:", {k: v for k, v in report.verdicts.items()})
