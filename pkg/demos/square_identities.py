"""Symmetric and antisymmetric squares of the adjoint at every exceptional point.

S^2 g = 1 + Y2(alpha) + Y2(beta) + Y2(gamma) and
L^2 g = g + X2 should hold as functions of x, and their classical limits
should add up to dim(g)^2.
"""

from vogeldim.vogel import EXCEPTIONAL, square_identities, vogel_point

for name, n in EXCEPTIONAL.items():
    report = square_identities(vogel_point("exc", n), [0.2, 0.7], 1e-9)
    c = report.classical
    print(f"{name:3s} passed={report.passed}  dim={c['adjoint']:>4s}"
          f"  Y2={', '.join(c['Y2'])}  X2={c['X2']}")

print()
print("so(8) for comparison (same dimension as D4, different Y2 split):")
c = square_identities(vogel_point("so", 8), [0.3], 1e-9).classical
print(f"    dim={c['adjoint']}  Y2={', '.join(c['Y2'])}  X2={c['X2']}")
