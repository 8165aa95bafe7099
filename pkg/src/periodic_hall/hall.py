"""Hall numbers of the root category.

All counts are exact.  For labels ``U, V, W``:

* ``cone_fiber_count(U, W, V) = |(U, W)_V|``, the number of classes
  ``f: U -> W`` whose cone is ``V``;
* ``g_{UV}^W = |(U, W)_V| / |Aut U|`` and ``gbar_{UV}^W = |(W, V)_{U[1]}| / |Aut V|``
  with the two split special cases;
* ``F_{XY}^L`` counts triangles ``X -> L -> Y -> X[1]`` up to ``Aut X x Aut Y``.

Products of ``u`` symbols follow ``u_X u_Y = sum_L g_{YX}^L u_L``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .arith import VerificationFailure, rational_json, residue
from .linalg import EnumerationTooLarge
from .rootcat import ChainMap, HomSpace, IsoLabel, RootCategory, cone, is_iso


class HallAlgebra:
    """Memoized Hall numbers over a :class:`RootCategory`."""

    def __init__(self, rc: RootCategory):
        self.rc = rc
        self.q = rc.q
        self.F = rc.F
        self._dist = {}
        self._middle = {}
        self._fvals = {}
        self.g_override = {}  # fault-injection hook: (U, V, W) -> Fraction

    @classmethod
    def build(cls, quiver, q, guard=None):
        kw = {} if guard is None else {"guard": guard}
        return cls(RootCategory(quiver, q, **kw))

    def label(self, X):
        return X if isinstance(X, IsoLabel) else self.rc.label_of(X)

    def shift(self, label):
        return label.shift()

    # cone fibres
    def cone_distribution(self, U, W):
        """``Counter`` of cone labels over all of Hom(U, W)."""
        key = (U, W)
        dist = self._dist.get(key)
        if dist is None:
            H = self.rc.hom(U, W)
            self.F.check_guard(H.dim, self.rc.guard, f"Hom({self.rc.name(U)}, {self.rc.name(W)})")
            dist = Counter(self.rc.label_of(cone(f)[0]) for _, f in H.elements(self.rc.guard))
            self._dist[key] = dist
        return dist

    def cone_fiber_count(self, U, W, V):
        return self.cone_distribution(U, W).get(V, 0)

    def cone_fiber(self, U, W, V):
        """The morphisms in ``(U, W)_V`` as chain maps."""
        H = self.rc.hom(U, W)
        return [f for _, f in H.elements(self.rc.guard) if self.rc.label_of(cone(f)[0]) == V]

    def aut(self, label):
        return self.rc.aut_order(label)

    def d(self, label):
        return self.rc.d_value(label)

    # g and gbar
    def g(self, U, V, W):
        """``g_{UV}^W``."""
        if (U, V, W) in self.g_override:
            return self.g_override[(U, V, W)]
        if U == W + V.shift():
            return Fraction(1, self.aut(V))
        return Fraction(self.cone_fiber_count(U, W, V), self.aut(U))

    def gbar(self, U, V, W):
        """``gbar_{UV}^W``."""
        if V == W + U.shift():
            return Fraction(1, self.aut(U))
        return Fraction(self.cone_fiber_count(W, V, U.shift()), self.aut(V))

    def middle_terms(self, A, B):
        """All L with ``g_{AB}^L != 0``: middles of triangles ``A -> L -> B -> A[1]``."""
        key = (A, B)
        out = self._middle.get(key)
        if out is None:
            found = set(self.cone_distribution(B, A.shift()))
            cand = {L.shift() for L in found}
            rest = A.minus(B.shift())
            if rest is not None:
                cand.add(rest)
            out = sorted(L for L in cand if self.g(A, B, L) != 0)
            self._middle[key] = out
        return out

    # products
    def product_u(self, X, Y):
        """``u_X u_Y = sum_L g_{YX}^L u_L``."""
        return FormalSum({L: self.g(Y, X, L) for L in self.middle_terms(Y, X)})

    def associator(self, X, Y, Z, M, bar=False):
        """``sum_L g_{XY}^L g_{ZL}^M - sum_L' g_{ZX}^L' g_{L'Y}^M`` (with gbar if ``bar``)."""
        first = sum((self.g(X, Y, L) * (self.gbar if bar else self.g)(Z, L, M)
                     for L in self.middle_terms(X, Y)), Fraction(0))
        second = sum(((self.gbar if bar else self.g)(Z, X, Lp) * self.g(Lp, Y, M)
                      for Lp in self.middle_terms(Z, X)), Fraction(0))
        return first - second

    def associator_via_products(self, X, Y, Z, M):
        """``((u_Y u_X) u_Z - u_Y (u_X u_Z))(M)`` from :meth:`product_u`."""
        left = sum((c * self.g(Z, L, M) for L, c in self.product_u(Y, X).u.items()), Fraction(0))
        right = sum((c * self.g(L, Y, M) for L, c in self.product_u(X, Z).u.items()), Fraction(0))
        return left - right

    def is_excluded(self, X, Y, Z):
        """The standing exclusion for associator quadruples."""
        return ((X == Z and Z == Y.shift())
                or (X == Y and Y == Z.shift())
                or (Y == Z and Z == X.shift()))

    def expected_associator(self, X, Y, Z, M):
        """``(case, value)`` predicted by the classification for indecomposable X, Y, Z, M."""
        if X == Y.shift() and X != Z and X != Z.shift() and M == Z:
            return 1, Fraction(-self.rc.hom_dim(Z, X), self.d(X))
        if X == Z.shift() and X != Y and X != Y.shift() and M == Y:
            return 2, Fraction(self.rc.hom_dim(X, Y), self.d(X))
        return 3, Fraction(0)

    # theta-extended product
    def theta_product(self, a, b, literal=False):
        """Dot product of formal sums with theta symbols.

        ``u_X . u_X[1]`` gains ``theta_X[1]``.  The coefficients attached to
        ``u_Y . theta_X`` and ``theta_X . u_Y`` carry the sign that makes the
        associator vanish; ``literal=True`` uses the opposite sign instead.
        """
        sign = -1 if literal else 1
        out = FormalSum()
        for A, ca in a.u.items():
            for B, cb in b.u.items():
                c = ca * cb
                out = out + self.product_u(A, B).scale(c)
                if A.is_indecomposable() and A == B.shift():
                    out = out + FormalSum(theta={B: c})
            for T, cb in b.theta.items():
                coef = sign * Fraction(self.rc.hom_dim(T.shift(), A), self.d(T))
                out = out + FormalSum({A: ca * cb * coef})
        for T, ca in a.theta.items():
            if b.theta:
                raise ValueError("undefined product: theta . theta")
            for B, cb in b.u.items():
                coef = sign * Fraction(self.rc.hom_dim(B, T), self.d(T))
                out = out + FormalSum({B: ca * cb * coef})
        return out

    def theta_coeff(self, a, b, M, literal=False):
        """Coefficient of ``u_M`` in ``a . b`` without expanding the product."""
        sign = -1 if literal else 1
        total = Fraction(0)
        for A, ca in a.u.items():
            for B, cb in b.u.items():
                total += ca * cb * self.g(B, A, M)
            if A == M:
                for T, cb in b.theta.items():
                    total += ca * cb * sign * Fraction(self.rc.hom_dim(T.shift(), A), self.d(T))
        for T, ca in a.theta.items():
            if b.theta:
                raise ValueError("undefined product: theta . theta")
            if M in b.u:
                total += ca * b.u[M] * sign * Fraction(self.rc.hom_dim(M, T), self.d(T))
        return total

    def theta_associator(self, X, Y, Z, M, literal=False):
        """``((u_Y . u_X) . u_Z - u_Y . (u_X . u_Z))(M)``."""
        uX, uY, uZ = FormalSum.u_of(X), FormalSum.u_of(Y), FormalSum.u_of(Z)
        left = self.theta_coeff(self.theta_product(uY, uX, literal), uZ, M, literal)
        right = self.theta_coeff(uY, self.theta_product(uX, uZ, literal), M, literal)
        return left - right

    # triangles
    def is_triangle(self, f, g, h):
        """Whether ``X -f-> L -g-> Y -h-> X[1]`` is isomorphic to the standard triangle of f."""
        C, incl, proj = cone(f)
        Y = g.tgt
        H = HomSpace(C, Y)
        HL = HomSpace(incl.src, Y)
        HX = HomSpace(C, h.tgt)
        A = np.concatenate([H.linear_map(lambda w: w.compose(incl), HL),
                            H.linear_map(lambda w: h.compose(w), HX)], axis=0)
        b = np.concatenate([HL.coords(g), HX.coords(proj)])
        if A.shape[0] == 0:
            A = A.reshape(0, H.dim)
        sol = self.F.solve_affine(A, b)
        if sol is None:
            return False
        x0, kernel = sol
        self.F.check_guard(kernel.shape[0], self.rc.guard, "is_triangle coset")
        for c in self.F.coefficient_vectors(kernel.shape[0], self.rc.guard):
            x = self.F.ADD[x0, self.F.lincomb(c, kernel)] if kernel.shape[0] else x0
            if is_iso(H.element(x)):
                return True
        return False

    def triangle_set(self, X, Y, L):
        """``W(X, Y; L)`` as a dict from coordinate keys to ``(f, g, h)``.

        Each ``f`` with cone Y is completed by every isomorphism
        ``w: cone(f) -> Y`` to ``(f, w incl, proj w^-1)``.
        """
        rc = self.rc
        Xo, Yo = rc.obj(X), rc.obj(Y)
        HXL, HLY, HYX = rc.hom(X, L), rc.hom(L, Y), HomSpace(Yo, Xo.shift())
        size = HXL.size * HLY.size * HYX.size
        if size > rc.guard:
            raise EnumerationTooLarge(size, rc.guard, f"W({rc.name(X)}, {rc.name(Y)}; {rc.name(L)})")
        out = {}
        for cf, f in HXL.elements(rc.guard):
            C, incl, proj = cone(f)
            if rc.label_of(C) != Y:
                continue
            HCY = HomSpace(C, Yo)
            HYC = HomSpace(Yo, C)
            for _, w in HCY.elements(rc.guard):
                if not is_iso(w):
                    continue
                winv = _inverse(w, HYC, rc.hom(Y, Y))
                g = w.compose(incl)
                h = proj.compose(winv)
                key = (tuple(cf), tuple(HLY.coords(g)), tuple(HYX.coords(h)))
                out.setdefault(key, (f, g, h))
        return out

    def triangle_orbits(self, X, Y, L, method="fibered"):
        """Orbits of ``W(X, Y; L)`` under ``Aut X x Aut Y``.

        ``method="brute"`` enumerates all triangles and the group action
        ``(f a, c^-1 g, a[1]^-1 h c)``; orbit sizes then sum to ``|W|``.
        ``method="fibered"`` uses that ``Aut Y`` acts transitively on the
        completions of a fixed ``f``, so orbits are the ``Aut X``-orbits on
        ``(X, L)_Y``; recorded sizes count the ``f``-orbit.
        """
        rc = self.rc
        if method == "brute":
            return self._orbits_brute(X, Y, L)
        HXL = rc.hom(X, L)
        self.F.check_guard(HXL.dim, rc.guard, "Hom(X, L)")
        fs = {}
        for cf, f in HXL.elements(rc.guard):
            C = cone(f)[0]
            if rc.label_of(C) == Y:
                fs[tuple(cf)] = f
        auts = self._units(X)
        right = [HXL.linear_map(lambda f, a=a: f.compose(a), HXL) for a in auts]
        seen, records = set(), []
        for key, f in fs.items():
            if key in seen:
                continue
            v = np.array(key, dtype=np.int64)
            orbit = {tuple(self.F.matmul(m, v.reshape(-1, 1)).reshape(-1)) for m in right}
            seen |= orbit
            s, t = self.st_values(X, f)
            records.append(OrbitRecord(key, len(orbit), s, t))
        return records

    def _orbits_brute(self, X, Y, L):
        rc = self.rc
        W = self.triangle_set(X, Y, L)
        auts_x = self._units(X)
        auts_y = self._units(Y)
        HXL, HLY = rc.hom(X, L), rc.hom(L, Y)
        HYX = HomSpace(rc.obj(Y), rc.obj(X).shift())
        inv_y = [_inverse(c, rc.hom(Y, Y), rc.hom(Y, Y)) for c in auts_y]
        inv_x1 = [_inverse(a, rc.hom(X, X), rc.hom(X, X)).shift() for a in auts_x]
        seen, records = set(), []
        for key, (f, g, h) in W.items():
            if key in seen:
                continue
            orbit = set()
            for a, ainv1 in zip(auts_x, inv_x1):
                fa = tuple(HXL.coords(f.compose(a)))
                ha = ainv1.compose(h)
                for c, cinv in zip(auts_y, inv_y):
                    orbit.add((fa, tuple(HLY.coords(cinv.compose(g))), tuple(HYX.coords(ha.compose(c)))))
            if not orbit <= W.keys():
                raise VerificationFailure("group action left W", witness=key)
            seen |= orbit
            s, t = self.st_values(X, f)
            records.append(OrbitRecord(key[0], len(orbit), s, t))
        return records

    def _units(self, X):
        E = self.rc.hom(X, X)
        return [a for _, a in E.elements(self.rc.guard) if is_iso(a)]

    def st_values(self, X, f):
        """``(s, t)`` for the triangle on ``f: X -> L`` with connecting map ``h: Y -> X[1]``.

        ``s = dim h o Hom(X[1], Y)`` (inside End X[1]) and
        ``t = dim Hom(X[1], Y) o h`` (inside End Y).  Both are invariant under
        replacing ``(Y, h)`` by ``(cone f, proj)``.
        """
        C, _, proj = cone(f)
        X1 = proj.tgt
        H = HomSpace(X1, C)
        s = self.F.rank(H.linear_map(lambda p: proj.compose(p), HomSpace(X1, X1)))
        t = self.F.rank(H.linear_map(lambda p: p.compose(proj), HomSpace(C, C)))
        return s, t

    def F_value(self, X, Y, L, method="fibered"):
        key = (X, Y, L, method)
        if key not in self._fvals:
            self._fvals[key] = len(self.triangle_orbits(X, Y, L, method))
        return self._fvals[key]

    def orbit_sums(self, Z, L, M, method="fibered"):
        """``(g, sum q^-s, gbar, sum q^-t)`` over ``V(Z, L; M)``."""
        recs = self.triangle_orbits(Z, L, M, method)
        q = self.q
        return (self.g(Z, L, M), sum((Fraction(1, q**r.s) for r in recs), Fraction(0)),
                self.gbar(Z, L, M), sum((Fraction(1, q**r.t) for r in recs), Fraction(0)))

    def verify_orbit_sums(self, Z, L, M, method="fibered"):
        if L == M + Z.shift():
            raise ValueError("orbit-sum identity needs L != M + Z[1]")
        g, gs, gb, gt = self.orbit_sums(Z, L, M, method)
        if g != gs or gb != gt:
            raise VerificationFailure("orbit sums disagree", witness={
                "Z": self.rc.name(Z), "L": self.rc.name(L), "M": self.rc.name(M),
                "g": str(g), "sum_s": str(gs), "gbar": str(gb), "sum_t": str(gt)})
        return True

    # export
    def g_table(self, labels=None):
        """Rows ``(U, V, W, g)`` for all nonzero g with U, V from ``labels``."""
        labels = labels or self.rc.indecomposables
        rows = []
        for U in labels:
            for V in labels:
                for W in self.middle_terms(U, V):
                    rows.append((U, V, W, self.g(U, V, W)))
        return rows

    def table_csv(self, rows):
        lines = ["U,V,W,num,den"]
        for U, V, W, val in rows:
            val = Fraction(val)
            lines.append(f"{self.rc.name(U)},{self.rc.name(V)},{self.rc.name(W)},{val.numerator},{val.denominator}")
        return "\n".join(lines) + "\n"

    def table_json(self, rows):
        return {f"{self.rc.name(U)}|{self.rc.name(V)}|{self.rc.name(W)}": rational_json(val)
                for U, V, W, val in rows}


def _inverse(w, back, end_tgt):
    """Homotopy inverse of an invertible chain map ``w: C -> Y``; ``back = Hom(Y, C)``."""
    ident = end_tgt.coords(_identity_like(end_tgt))
    A = back.linear_map(lambda v: w.compose(v), end_tgt)
    sol = back.F.solve_affine(A, ident)
    if sol is None:
        raise ValueError("map is not invertible")
    return back.element(sol[0])


def _identity_like(hs):
    F = hs.F
    return ChainMap(hs.X, hs.Y, F.eye(len(hs.X.p0)), F.eye(len(hs.X.p1)))


@dataclass(frozen=True)
class OrbitRecord:
    representative: tuple
    size: int
    s: int
    t: int


@dataclass
class FormalSum:
    """Finite combination of ``u_L`` and ``theta_L`` with rational coefficients."""

    u: dict = dc_field(default_factory=dict)
    theta: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        self.u = {k: Fraction(v) for k, v in self.u.items() if v}
        self.theta = {k: Fraction(v) for k, v in self.theta.items() if v}

    @classmethod
    def u_of(cls, label, coeff=1):
        return cls({label: coeff})

    def __add__(self, other):
        u, th = dict(self.u), dict(self.theta)
        for k, v in other.u.items():
            u[k] = u.get(k, 0) + v
        for k, v in other.theta.items():
            th[k] = th.get(k, 0) + v
        return FormalSum(u, th)

    def scale(self, c):
        return FormalSum({k: v * c for k, v in self.u.items()},
                         {k: v * c for k, v in self.theta.items()})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def coeff(self, label):
        return self.u.get(label, Fraction(0))

    def residues(self, q):
        return ({k: residue(v, q) for k, v in self.u.items()},
                {k: residue(v, q) for k, v in self.theta.items()})

    def is_zero(self):
        return not self.u and not self.theta
