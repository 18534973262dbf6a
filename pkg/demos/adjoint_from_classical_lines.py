"""Recover the universal adjoint denominator from the three classical lines.

The adjoint of sl(N) sits inside the mixed tensor with one box and one
anti-box.  We fit its quantum dimension as a function of N on each classical
series, read off the N-free denominator arguments, and search for the unique
way of pairing them into linear forms in (alpha, beta).
"""

from vogeldim import YoungDiagram, build_problem, rank_interpolate, solve
from vogeldim.reconstruct import limit_polynomial
from vogeldim.weyl import RepSpec

box = YoungDiagram((1,))

print("Rank-interpolated quantum dimensions:")
print("  sl:", rank_interpolate(RepSpec.sl(box, box)))
print("  so:", rank_interpolate(RepSpec.so((1, 1))))
print("  sp:", rank_interpolate(RepSpec.sp((2,))))

problem = build_problem(box, box)
print()
print("N-free denominator arguments (x/2 units):")
print("  sl:", [str(v) for v in problem.X])
print("  so:", [str(v) for v in problem.O_so])
print("  sp:", [str(v) for v in problem.O_sp])

solutions = solve(problem)
print()
print(f"{len(solutions)} solution(s)")
for sol in solutions:
    print("  pairs (x, y):", [(str(a), str(b)) for a, b in sol.pairs])
    print("  universal denominator:", sol.denominator_product)
    print("  classical limit:      ", limit_polynomial(sol))
