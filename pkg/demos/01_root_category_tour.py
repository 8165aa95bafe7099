"""A walk through the root category of A2 over F_3.

Objects are 2-periodic complexes of projectives.  We list the six
indecomposables, their Hom dimensions, and watch mapping cones change as a
morphism moves through its Hom space.
"""

from collections import Counter

from periodic_hall import RootCategory, cone

rc = RootCategory("A2", 3)
ind = rc.indecomposables

print("indecomposables and their classes in the Grothendieck group:")
for X in ind:
    print(f"  {rc.name(X):<10} h = {str(rc.groth(X).tolist()):<9} |Aut| = {rc.aut_order(X)}")

print("\ndim Hom(row, column):")
print(" " * 11 + "".join(f"{rc.name(Y):>11}" for Y in ind))
for X in ind:
    print(f"{rc.name(X):<11}" + "".join(f"{rc.hom_dim(X, Y):>11}" for Y in ind))

# every map S(1,0) -> S(0,1)[1] is an extension class; the nonzero ones have cone P(1,1)[1]
S10, S01_1 = rc.parse_label("S(1,0)"), rc.parse_label("S(0,1)[1]")
H = rc.hom(S10, S01_1)
cones = Counter(rc.name(rc.label_of(cone(f)[0])) for _, f in H.elements())
print(f"\ncones of the {H.size} maps S(1,0) -> S(0,1)[1]: {dict(cones)}")

# decomposable objects: automorphism groups grow quickly
S = ind[0]
for k in (1, 2, 3):
    L = sum([S] * (k - 1), S)
    print(f"|Aut({rc.name(L)})| = {rc.aut_order(L)}")
