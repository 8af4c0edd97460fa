"""The eight equivalent conditions on products of local algebras and on quivers with arrows
between distinct vertices, plus what happens when enumeration cannot finish."""
from taulattice import build_algebra, check_conditions, cross_validate
from taulattice.corpus import corpus, kronecker

for name in ("K[x]/(x^2) x K[y]/(y^3)", "A2", "A3/(a1a2)"):
    report = check_conditions(corpus()[name])
    print(name)
    for c, v in report.verdicts.items():
        print(f"  {'(' + c + ')':<5}{v.value.value:<6} {v.evidence}")

cv = cross_validate(build_algebra(kronecker()), node_bound=15, dim_bound=16)
print("Kronecker with small bounds:", cv.report.values())
print("  flagged inconsistent:", cv.report.inconsistent)
