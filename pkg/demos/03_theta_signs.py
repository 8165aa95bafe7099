"""Why the theta rules carry a plus sign.

Adjoining theta symbols is meant to absorb the associator defect.  Running
the scan with both sign choices shows that only one of them does it once
q - 1 can tell 2 apart from 0 (q >= 4).
"""

from periodic_hall import HallAlgebra, run_suite

for q in (3, 4, 5):
    H = HallAlgebra.build("A2", q)
    good = run_suite("theta-associativity", H)
    bad = run_suite("theta-associativity", H, literal=True)
    print(f"q={q}: plus sign {len(good.violations)} violations, minus sign {len(bad.violations)} violations")
    for v in bad.violations[:2]:
        print("    e.g.", v["witness"])
