"""The E multiplet: a reconstruction that needs the Z2 correction.

For the composite D((3,1),(2,1,1)) the two diagrams differ, so sl(N) sees two
conjugate copies and the sp line only matches after one argument is doubled.
The search finds a single value y_k for that doubled argument.
"""

from vogeldim import build_problem, solve, vogel_point
from vogeldim.vogel import FORMULAS, universal_dimension

problem = build_problem((3, 1), (2, 1, 1))
print("so diagram:", problem.so_diagram, "  sp diagram:", problem.sp_diagram)
print("Z2 correction active:", problem.z2_active)

[sol] = solve(problem)
print("y_k =", sol.y_k)
print("denominator:", sol.denominator_product)
print("universal factor with correction:", sol.universal_factor)

print()
print("Universal dim E at a few points:")
for family, param in [("sl", 6), ("so", 12), ("sp", 8), ("exc", 8)]:
    point = vogel_point(family, param)
    print(f"  {point}: {universal_dimension(FORMULAS['dimE'].body, point)}")
