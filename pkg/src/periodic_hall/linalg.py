"""Dense linear algebra over F_q for q in {2, 3, 4, 5, 7, 8, 9}.

Field elements are small integers.  For q = p**e with e > 1 the integer
``sum(c_i * p**i)`` stands for the polynomial ``sum(c_i * x**i)`` reduced
modulo a fixed irreducible polynomial; all arithmetic goes through
precomputed tables.  Matrices are plain ``numpy`` integer arrays; 0 x n and
n x 0 shapes are allowed throughout.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9)

# low-degree-first coefficients, leading coefficient 1 omitted
REDUCTION_POLYS = {
    4: (1, 1),      # x^2 + x + 1
    8: (1, 1, 0),   # x^3 + x + 1
    9: (1, 0),      # x^2 + 1
}

DEFAULT_GUARD = 10**7


class EnumerationTooLarge(Exception):
    """Raised when an exhaustive enumeration would exceed the guard."""

    def __init__(self, size, guard, what="enumeration"):
        super().__init__(f"{what} too large: {size} elements exceeds guard {guard}")
        self.size = size
        self.guard = guard
        self.what = what


def _prime_power(q):
    for p in (2, 3, 5, 7):
        e, n = 0, q
        while n % p == 0:
            n //= p
            e += 1
        if n == 1 and e > 0:
            return p, e
    raise ValueError(f"unsupported field size {q}; expected one of {SUPPORTED_Q}")


class FqField:
    """The finite field with q elements, backed by lookup tables."""

    def __init__(self, q):
        if q not in SUPPORTED_Q:
            raise ValueError(f"unsupported field size {q}; expected one of {SUPPORTED_Q}")
        self.q = q
        self.p, self.e = _prime_power(q)
        self.poly = REDUCTION_POLYS.get(q, ())
        p, e = self.p, self.e
        digits = np.array(
            [[(x // p**i) % p for i in range(e)] for x in range(q)], dtype=np.int64
        )
        self._digits = digits
        self._weights = p ** np.arange(e, dtype=np.int64)
        add = np.zeros((q, q), dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                add[a, b] = int(((digits[a] + digits[b]) % p) @ self._weights)
                mul[a, b] = self._poly_mul(digits[a], digits[b])
        self.ADD = add
        self.MUL = mul
        self.NEG = np.array([int(((-digits[a]) % p) @ self._weights) for a in range(q)])
        self.SUB = add[:, self.NEG]
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        self.INV = inv
        self.prime = e == 1

    def _poly_mul(self, a, b):
        p, e = self.p, self.e
        prod = [0] * (2 * e - 1)
        for i in range(e):
            for j in range(e):
                prod[i + j] = (prod[i + j] + int(a[i]) * int(b[j])) % p
        # x^e = -(poly)
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i, pc in enumerate(self.poly):
                    prod[k - e + i] = (prod[k - e + i] - c * pc) % p
        return sum(prod[i] * p**i for i in range(e))

    def __repr__(self):
        return f"FqField({self.q})"

    def __eq__(self, other):
        return isinstance(other, FqField) and other.q == self.q

    def __hash__(self):
        return hash(("FqField", self.q))

    def __reduce__(self):
        return (field, (self.q,))

    # elementwise
    def add(self, a, b):
        return self.ADD[a, b]

    def sub(self, a, b):
        return self.SUB[a, b]

    def neg(self, a):
        return self.NEG[a]

    def mul(self, a, b):
        return self.MUL[a, b]

    def one_minus(self, a):
        return self.SUB[1, a]

    def zeros(self, rows, cols):
        return np.zeros((rows, cols), dtype=np.int64)

    def eye(self, n):
        return np.eye(n, dtype=np.int64)

    def matmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.shape[1] != b.shape[0]:
            raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
        if self.prime:
            return (a @ b) % self.p
        if a.shape[1] == 0:
            return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        prod = self.MUL[a[:, :, None], b[None, :, :]]
        dig = self._digits[prod].sum(axis=1) % self.p
        return dig @ self._weights

    def kron(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.MUL[a[:, None, :, None], b[None, :, None, :]]
        return out.reshape(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])

    def lincomb(self, coeffs, rows):
        """``sum(coeffs[i] * rows[i])`` for a coefficient vector and row matrix."""
        coeffs = np.asarray(coeffs, dtype=np.int64).reshape(1, -1)
        rows = np.asarray(rows, dtype=np.int64)
        if rows.shape[0] == 0:
            return np.zeros(rows.shape[1], dtype=np.int64)
        return self.matmul(coeffs, rows)[0]

    # elimination
    def rref(self, m):
        """Reduced row echelon form with first-nonzero pivoting.

        Returns ``(R, pivots)``; ``rank == len(pivots)``.
        """
        r = np.array(m, dtype=np.int64, copy=True)
        rows, cols = r.shape
        pivots = []
        row = 0
        for col in range(cols):
            if row == rows:
                break
            nz = np.nonzero(r[row:, col])[0]
            if nz.size == 0:
                continue
            piv = row + nz[0]
            if piv != row:
                r[[row, piv]] = r[[piv, row]]
            r[row] = self.MUL[self.INV[r[row, col]], r[row]]
            others = np.nonzero(r[:, col])[0]
            others = others[others != row]
            if others.size:
                factors = r[others, col]
                r[others] = self.SUB[r[others], self.MUL[factors[:, None], r[row][None, :]]]
            pivots.append(col)
            row += 1
        return r, pivots

    def rank(self, m):
        m = np.asarray(m)
        if m.size == 0:
            return 0
        return len(self.rref(m)[1])

    def nullspace(self, m):
        """Basis (as rows) of ``{x : m @ x = 0}``."""
        m = np.asarray(m, dtype=np.int64)
        cols = m.shape[1]
        r, pivots = self.rref(m)
        free = [c for c in range(cols) if c not in set(pivots)]
        basis = np.zeros((len(free), cols), dtype=np.int64)
        for i, f in enumerate(free):
            basis[i, f] = 1
            for k, pc in enumerate(pivots):
                basis[i, pc] = self.NEG[r[k, f]]
        return basis

    def row_basis(self, m):
        """Nonzero rows of the rref: a basis of the row space."""
        m = np.asarray(m, dtype=np.int64)
        if m.shape[0] == 0:
            return m.reshape(0, m.shape[1])
        r, pivots = self.rref(m)
        return r[: len(pivots)]

    def solve_affine(self, a, b):
        """Solve ``a @ x = b``.

        Returns ``(particular, kernel_rows)`` or ``None`` if inconsistent.
        """
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64).reshape(-1)
        rows, cols = a.shape
        aug = np.concatenate([a, b.reshape(rows, 1)], axis=1)
        r, pivots = self.rref(aug)
        if cols in pivots:
            return None
        x = np.zeros(cols, dtype=np.int64)
        for k, pc in enumerate(pivots):
            x[pc] = r[k, cols]
        return x, self.nullspace(a)

    def is_invertible(self, m):
        m = np.asarray(m)
        return m.shape[0] == m.shape[1] and self.rank(m) == m.shape[0]

    def inverse(self, m):
        m = np.asarray(m, dtype=np.int64)
        n = m.shape[0]
        r, pivots = self.rref(np.concatenate([m, self.eye(n)], axis=1))
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        return r[:, n:]

    # enumeration
    def space_size(self, dim):
        return self.q**dim

    def check_guard(self, dim, guard=DEFAULT_GUARD, what="enumeration"):
        size = self.q**dim
        if size > guard:
            raise EnumerationTooLarge(size, guard, what)
        return size

    def coefficient_vectors(self, dim, guard=DEFAULT_GUARD):
        """All of F_q^dim as an array, lexicographic, first coordinate slowest."""
        self.check_guard(dim, guard)
        return _coefficient_array(self.q, dim)

    def enumerate_space(self, basis, guard=DEFAULT_GUARD):
        """Yield every element of the span of ``basis`` exactly once."""
        basis = np.asarray(basis, dtype=np.int64)
        dim = basis.shape[0]
        self.check_guard(dim, guard)
        for coeffs in itertools.product(range(self.q), repeat=dim):
            yield self.lincomb(coeffs, basis) if dim else np.zeros(
                basis.shape[1] if basis.ndim == 2 else 0, dtype=np.int64
            )

    def span_array(self, basis, guard=DEFAULT_GUARD):
        """The elements of :meth:`enumerate_space` stacked into one array."""
        basis = np.asarray(basis, dtype=np.int64)
        coeffs = self.coefficient_vectors(basis.shape[0], guard)
        if basis.shape[0] == 0:
            return np.zeros((1, basis.shape[1]), dtype=np.int64)
        return self.matmul(coeffs, basis)


@lru_cache(maxsize=None)
def _coefficient_array(q, dim):
    if dim == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((q,) * dim).reshape(dim, -1).T
    grids.setflags(write=False)
    return grids


@lru_cache(maxsize=None)
def field(q):
    """Shared :class:`FqField` instance for ``q``."""
    return FqField(q)
