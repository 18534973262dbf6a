"""Check every known universal formula against Weyl-formula data.

Each formula is specialized to sl, so and sp and compared with the quantum
dimension of its associated classical representation over a range of ranks
and sample points x.
"""

from vogeldim.vogel import FORMULAS, verify_formula

for name, entry in FORMULAS.items():
    for series in ("sl", "so", "sp"):
        report = verify_formula(entry, series, range(4, 17), [0.1, 0.5, 1.0], 1e-9)
        status = "ok " if report.passed else "BAD"
        print(f"{status} {name:9s} {series}  max rel dev {report.max_rel_dev:.1e}"
              f"  skipped ranks {report.skipped_ranks}")
