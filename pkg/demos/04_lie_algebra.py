"""The Lie algebra over Z/(q-1) and its Chevalley basis.

For A2 at q=5 the bracket of u_X and u_Y lands on the indecomposable whose
class is h_X + h_Y, and the result matches sl_3 after flipping the signs
of some generators.
"""

from periodic_hall import HallAlgebra, HallLie, chevalley_compare

lie = HallLie(HallAlgebra.build("A2", 5))
rc = lie.rc
print("nonzero brackets [u_X, u_Y] over Z/4:")
for X, Y, r in lie.structure_constants():
    if not r.is_zero():
        terms = [f"{c} u_{rc.name(L)}" for L, c in sorted(r.u.items())] + \
                [f"{c} h{i}" for i, c in enumerate(r.h) if c]
        print(f"  [{rc.name(X)}, {rc.name(Y)}] = " + " + ".join(terms))

print("\nJacobi violations:", len(lie.verify_jacobi()))
res = chevalley_compare(lie)
print("matches the Chevalley basis of sl_3:", res["ok"])
print("signs:", res["signs"])
