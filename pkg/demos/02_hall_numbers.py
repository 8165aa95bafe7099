"""Hall numbers and the near-associativity of the u-product.

For A1 the numbers reduce to familiar counts.  For A2 the associator of
three basis elements is zero modulo q-1 except in two shift-degenerate
configurations, where it equals -dim Hom(Z,X) or +dim Hom(X,Y).
"""

import itertools
from collections import Counter

from periodic_hall import HallAlgebra
from periodic_hall.arith import residue

for q in (2, 3, 4):
    H = HallAlgebra.build("A1", q)
    S, S1 = H.rc.indecomposables
    print(f"q={q}: g_(S,S)^(S+S) = {H.g(S, S, S + S)}, g_(S,S[1])^0 = {H.g(S, S1, H.rc.parse_label('0'))}")

q = 5
H = HallAlgebra.build("A2", q)
rc = H.rc
ind = rc.indecomposables
print("\nu_X . u_Y for X = S(0,1), Y = S(0,1)[1]:")
X, Y = ind[0], ind[1]
for L, c in sorted(H.product_u(X, Y).u.items()):
    print(f"  {c} * u_{rc.name(L)}")

tally = Counter()
for X, Y, Z, M in itertools.product(ind, repeat=4):
    if H.is_excluded(X, Y, Z):
        continue
    a = H.associator(X, Y, Z, M)
    case, expected = H.expected_associator(X, Y, Z, M)
    tally[case, residue(a, q).signed(), residue(a, q) == residue(expected, q)] += 1
print(f"\nassociator residues mod {q - 1} grouped by (case, residue, matches classification):")
for k, v in sorted(tally.items()):
    print(f"  {k}: {v}")
