"""Representations of Dynkin quivers over F_q.

Vertices are numbered from 0 internally.  A representation stores one
matrix per arrow, of shape ``dim[target] x dim[source]``.  Because the
underlying graph of a Dynkin quiver is a tree there is at most one path
between two vertices, which keeps projectives and their morphisms simple:
``Hom(P(i), P(j))`` is one-dimensional exactly when there is a path from
``j`` to ``i``.
"""

from __future__ import annotations

import re
import zlib
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .linalg import DEFAULT_GUARD, EnumerationTooLarge, field


class QuiverError(ValueError):
    """Raised for quivers outside the supported Dynkin types."""


class Quiver:
    """A connected quiver whose underlying graph is of type A, D or E."""

    def __init__(self, n, arrows):
        self.n = int(n)
        self.arrows = tuple((int(s), int(t)) for s, t in arrows)
        for s, t in self.arrows:
            if not (0 <= s < self.n and 0 <= t < self.n) or s == t:
                raise QuiverError(f"bad arrow {s}->{t}")
        self.type = classify_dynkin(self.n, self.arrows)

    @classmethod
    def from_type(cls, name):
        """Standard orientation: arrows point away from vertex 0 along the chain."""
        m = re.fullmatch(r"([ADE])(\d+)", name.strip().upper())
        if not m:
            raise QuiverError(f"{name!r}: only Dynkin types A_n, D_n, E_6..8 are supported")
        kind, n = m.group(1), int(m.group(2))
        if kind == "A" and n >= 1:
            arrows = [(i, i + 1) for i in range(n - 1)]
        elif kind == "D" and n >= 4:
            arrows = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        elif kind == "E" and n in (6, 7, 8):
            arrows = [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
        else:
            raise QuiverError(f"{name!r}: only Dynkin types A_n, D_n, E_6..8 are supported")
        return cls(n, arrows)

    @classmethod
    def from_text(cls, text):
        """Parse ``vertices n`` followed by ``arrow i j`` lines (1-based)."""
        n = None
        arrows = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "vertices" and len(parts) == 2 and n is None:
                n = int(parts[1])
            elif parts[0] == "arrow" and len(parts) == 3 and n is not None:
                arrows.append((int(parts[1]) - 1, int(parts[2]) - 1))
            else:
                raise QuiverError(f"line {lineno}: cannot parse {raw!r}")
        if n is None:
            raise QuiverError("missing 'vertices n' line")
        return cls(n, arrows)

    def to_text(self):
        lines = [f"vertices {self.n}"]
        lines += [f"arrow {s + 1} {t + 1}" for s, t in self.arrows]
        return "\n".join(lines) + "\n"

    def key(self):
        return (self.n, self.arrows)

    def __eq__(self, other):
        return isinstance(other, Quiver) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Quiver({self.n}, {list(self.arrows)})"

    @cached_property
    def paths(self):
        """``paths[i][j]``: arrow indices of the path i -> j, or None."""
        out = [[None] * self.n for _ in range(self.n)]
        for i in range(self.n):
            out[i][i] = ()
            todo = deque([i])
            while todo:
                v = todo.popleft()
                for a, (s, t) in enumerate(self.arrows):
                    if s == v and out[i][t] is None:
                        out[i][t] = out[i][v] + (a,)
                        todo.append(t)
        return out

    @cached_property
    def reach(self):
        """Boolean matrix: ``reach[i, j]`` iff there is a path from i to j."""
        return np.array([[p is not None for p in row] for row in self.paths], dtype=bool)

    def euler(self, a, b):
        """Euler form <a, b> = sum a_i b_i - sum over arrows i->j of a_i b_j."""
        return int(sum(x * y for x, y in zip(a, b)) - sum(a[s] * b[t] for s, t in self.arrows))

    @cached_property
    def euler_matrix(self):
        m = np.eye(self.n, dtype=np.int64)
        for s, t in self.arrows:
            m[s, t] -= 1
        return m

    @cached_property
    def symmetric_form(self):
        """Symmetrized Euler form, i.e. the Cartan matrix."""
        return self.euler_matrix + self.euler_matrix.T

    @cached_property
    def positive_roots(self):
        """Positive roots as tuples, sorted lexicographically."""
        simple = [tuple(int(i == j) for j in range(self.n)) for i in range(self.n)]
        seen = set(simple)
        todo = deque(simple)
        while todo:
            r = todo.popleft()
            for i in range(self.n):
                s = tuple(x + (j == i) for j, x in enumerate(r))
                if s not in seen and self.euler(s, s) == 1:
                    seen.add(s)
                    todo.append(s)
        return sorted(seen)


def classify_dynkin(n, arrows):
    """Return the Dynkin type name of the underlying graph or raise QuiverError."""
    if n < 1:
        raise QuiverError("a quiver needs at least one vertex")
    edges = {frozenset(a) for a in arrows}
    if len(edges) != len(arrows) or len(arrows) != n - 1:
        raise QuiverError("underlying graph is not a tree; only Dynkin types A, D, E are supported")
    adj = {v: set() for v in range(n)}
    for s, t in arrows:
        adj[s].add(t)
        adj[t].add(s)
    seen, todo = {0}, [0]
    while todo:
        v = todo.pop()
        for w in adj[v] - seen:
            seen.add(w)
            todo.append(w)
    if len(seen) != n:
        raise QuiverError("quiver is not connected")
    degrees = sorted(len(adj[v]) for v in range(n))
    if not degrees or degrees[-1] <= 2:
        return f"A{n}"
    branch = [v for v in range(n) if len(adj[v]) >= 3]
    if len(branch) > 1 or len(adj[branch[0]]) > 3:
        raise QuiverError("underlying graph is not Dynkin (A, D or E)")
    c = branch[0]
    arms = []
    for w in adj[c]:
        length, prev, cur = 1, c, w
        while len(adj[cur]) == 2:
            prev, cur = cur, next(iter(adj[cur] - {prev}))
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{n}"
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return f"E{n}"
    raise QuiverError("underlying graph is not Dynkin (A, D or E); affine and wild types are rejected")


def _solve_columns(F, a, b):
    """X with a @ X = b, for a of full column rank."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    x = np.zeros((a.shape[1], b.shape[1]), dtype=np.int64)
    for c in range(b.shape[1]):
        sol = F.solve_affine(a, b[:, c])
        if sol is None:
            raise ValueError("subspace is not invariant")
        x[:, c] = sol[0]
    return x


def complement_basis(F, sub, ambient_dim):
    """Standard basis vectors (as columns) completing the column span of ``sub``."""
    sub = np.asarray(sub, dtype=np.int64)
    if ambient_dim == 0:
        return np.zeros((0, 0), dtype=np.int64)
    cur = sub.reshape(ambient_dim, -1).T.copy()
    rank = F.rank(cur)
    chosen = []
    for i in range(ambient_dim):
        e = np.zeros((1, ambient_dim), dtype=np.int64)
        e[0, i] = 1
        trial = np.concatenate([cur, e])
        r = F.rank(trial)
        if r > rank:
            cur, rank = trial, r
            chosen.append(i)
    out = np.zeros((ambient_dim, len(chosen)), dtype=np.int64)
    for k, i in enumerate(chosen):
        out[i, k] = 1
    return out


@dataclass(frozen=True, eq=False)
class Rep:
    """A representation: vector space dims per vertex and one matrix per arrow."""

    quiver: Quiver
    q: int
    dim: tuple
    mats: tuple

    def __post_init__(self):
        object.__setattr__(self, "dim", tuple(int(d) for d in self.dim))
        mats = tuple(np.asarray(m, dtype=np.int64).reshape(self.dim[t], self.dim[s])
                     for m, (s, t) in zip(self.mats, self.quiver.arrows))
        if len(mats) != len(self.quiver.arrows):
            raise ValueError("one matrix per arrow required")
        object.__setattr__(self, "mats", mats)

    @property
    def F(self):
        return field(self.q)

    @property
    def total_dim(self):
        return sum(self.dim)

    def path_map(self, i, j):
        """Matrix of the unique path i -> j (None if there is none)."""
        path = self.quiver.paths[i][j]
        if path is None:
            return None
        m = self.F.eye(self.dim[i])
        for a in path:
            m = self.F.matmul(self.mats[a], m)
        return m

    def direct_sum(self, other):
        mats = []
        for a, (s, t) in enumerate(self.quiver.arrows):
            m = np.zeros((self.dim[t] + other.dim[t], self.dim[s] + other.dim[s]), dtype=np.int64)
            m[: self.dim[t], : self.dim[s]] = self.mats[a]
            m[self.dim[t]:, self.dim[s]:] = other.mats[a]
            mats.append(m)
        return Rep(self.quiver, self.q, tuple(x + y for x, y in zip(self.dim, other.dim)), tuple(mats))

    def to_json(self):
        return {"dim": list(self.dim), "mats": [m.tolist() for m in self.mats]}

    def __repr__(self):
        return f"Rep(dim={self.dim})"


def zero_rep(quiver, q):
    return Rep(quiver, q, (0,) * quiver.n, tuple(np.zeros((0, 0)) for _ in quiver.arrows))


def direct_sum(reps, quiver=None, q=None):
    reps = list(reps)
    if not reps:
        return zero_rep(quiver, q)
    out = reps[0]
    for r in reps[1:]:
        out = out.direct_sum(r)
    return out


def simple(quiver, q, i):
    dim = tuple(int(v == i) for v in range(quiver.n))
    return Rep(quiver, q, dim, tuple(np.zeros((dim[t], dim[s])) for s, t in quiver.arrows))


@dataclass(frozen=True, eq=False)
class RepMap:
    """A morphism of representations, one block per vertex."""

    src: Rep
    tgt: Rep
    blocks: tuple

    def is_intertwining(self):
        F = self.src.F
        for a, (s, t) in enumerate(self.src.quiver.arrows):
            lhs = F.matmul(self.tgt.mats[a], self.blocks[s])
            rhs = F.matmul(self.blocks[t], self.src.mats[a])
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def compose(self, other):
        """``self o other`` (apply ``other`` first)."""
        F = self.src.F
        return RepMap(other.src, self.tgt,
                      tuple(F.matmul(b, c) for b, c in zip(self.blocks, other.blocks)))

    def is_zero(self):
        return all(not b.any() for b in self.blocks)


def identity(rep):
    return RepMap(rep, rep, tuple(rep.F.eye(d) for d in rep.dim))


def hom_system(M, N):
    """Coefficient matrix of the intertwining equations in block unknowns."""
    F = M.F
    Q = M.quiver
    offsets = np.cumsum([0] + [N.dim[v] * M.dim[v] for v in range(Q.n)])
    rows = []
    for a, (s, t) in enumerate(Q.arrows):
        eq = np.zeros((N.dim[t] * M.dim[s], offsets[-1]), dtype=np.int64)
        # N_a phi_s - phi_t M_a, row-major vec
        eq[:, offsets[s]:offsets[s + 1]] = F.kron(N.mats[a], F.eye(M.dim[s]))
        eq[:, offsets[t]:offsets[t + 1]] = F.NEG[F.kron(F.eye(N.dim[t]), M.mats[a].T)]
        rows.append(eq)
    if rows:
        return np.concatenate(rows), offsets
    return np.zeros((0, offsets[-1]), dtype=np.int64), offsets


def hom_basis(M, N):
    """Basis of Hom(M, N) as a list of RepMaps."""
    if M.quiver != N.quiver or M.q != N.q:
        raise ValueError("representations over different quivers or fields")
    sysm, offsets = hom_system(M, N)
    basis = M.F.nullspace(sysm)
    out = []
    for vec in basis:
        blocks = tuple(vec[offsets[v]:offsets[v + 1]].reshape(N.dim[v], M.dim[v])
                       for v in range(M.quiver.n))
        out.append(RepMap(M, N, blocks))
    return out


def hom_dim(M, N):
    sysm, offsets = hom_system(M, N)
    return int(offsets[-1]) - M.F.rank(sysm)


def ext1_dim(M, N):
    """dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N>."""
    return hom_dim(M, N) - M.quiver.euler(M.dim, N.dim)


def projective(quiver, q, i):
    """Indecomposable projective P(i): paths starting at i."""
    dim = tuple(int(quiver.reach[i, v]) for v in range(quiver.n))
    mats = tuple(np.ones((dim[t], dim[s]), dtype=np.int64) for s, t in quiver.arrows)
    return Rep(quiver, q, dim, mats)


def projective_sum(quiver, q, vertices):
    """``P(v_0) + P(v_1) + ...`` with basis at w = summands k whose vertex reaches w."""
    reach = quiver.reach
    dim = tuple(sum(int(reach[v, w]) for v in vertices) for w in range(quiver.n))
    mats = []
    for s, t in quiver.arrows:
        rows = [k for k, v in enumerate(vertices) if reach[v, t]]
        cols = [k for k, v in enumerate(vertices) if reach[v, s]]
        m = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for c, k in enumerate(cols):
            m[rows.index(k), c] = 1
        mats.append(m)
    return Rep(quiver, q, dim, tuple(mats))


def compact_blocks(quiver, mat, src_vertices, tgt_vertices):
    """Per-vertex blocks of the map between projective sums given by ``mat``.

    ``mat[l, k]`` is the coefficient of the path map ``P(src_k) -> P(tgt_l)``.
    """
    reach = quiver.reach
    mat = np.asarray(mat, dtype=np.int64).reshape(len(tgt_vertices), len(src_vertices))
    blocks = []
    for w in range(quiver.n):
        rows = [l for l, v in enumerate(tgt_vertices) if reach[v, w]]
        cols = [k for k, v in enumerate(src_vertices) if reach[v, w]]
        blocks.append(mat[np.ix_(rows, cols)])
    return tuple(blocks)


def path_mask(quiver, src_vertices, tgt_vertices):
    """Which entries of a compact matrix ``tgt x src`` may be nonzero."""
    reach = quiver.reach
    return np.array([[reach[t, s] for s in src_vertices] for t in tgt_vertices],
                    dtype=bool).reshape(len(tgt_vertices), len(src_vertices))


def compact_to_repmap(quiver, q, mat, src_vertices, tgt_vertices):
    return RepMap(projective_sum(quiver, q, src_vertices),
                  projective_sum(quiver, q, tgt_vertices),
                  compact_blocks(quiver, mat, src_vertices, tgt_vertices))


def top_generators(M):
    """Per vertex, columns spanning a complement of the radical of M."""
    F = M.F
    Q = M.quiver
    gens = []
    for v in range(Q.n):
        imgs = [M.mats[a] for a, (s, t) in enumerate(Q.arrows) if t == v]
        rad = np.concatenate(imgs, axis=1) if imgs else np.zeros((M.dim[v], 0), dtype=np.int64)
        gens.append(complement_basis(F, rad, M.dim[v]))
    return gens


@dataclass(frozen=True, eq=False)
class Presentation:
    """Minimal projective resolution ``0 -> P1 -> P0 -> M -> 0``.

    ``p0``/``p1`` list the vertices of the indecomposable projective summands,
    ``matrix`` is the compact matrix of ``P1 -> P0`` and ``cover`` the
    epimorphism ``P0 -> M``.
    """

    module: Rep
    p0: tuple
    p1: tuple
    matrix: np.ndarray
    cover: RepMap


def projective_presentation(M):
    F = M.F
    Q = M.quiver
    gens = top_generators(M)
    p0 = []
    vectors = []
    for v in range(Q.n):
        for c in range(gens[v].shape[1]):
            p0.append(v)
            vectors.append(gens[v][:, c])
    P0 = projective_sum(Q, M.q, p0)
    blocks = []
    for w in range(Q.n):
        cols = []
        for k, v in enumerate(p0):
            if Q.reach[v, w]:
                cols.append(F.matmul(M.path_map(v, w), vectors[k].reshape(-1, 1))[:, 0])
        blocks.append(np.array(cols, dtype=np.int64).T.reshape(M.dim[w], len(cols)))
    cover = RepMap(P0, M, tuple(blocks))
    # kernel of the cover, inside P0
    kernel = [F.nullspace(b).T for b in blocks]
    p1 = []
    columns = []
    for w in range(Q.n):
        coords = [k for k, v in enumerate(p0) if Q.reach[v, w]]
        imgs = []
        for a, (s, t) in enumerate(Q.arrows):
            if t == w:
                imgs.append(F.matmul(P0.mats[a], kernel[s]))
        rad = np.concatenate(imgs, axis=1) if imgs else np.zeros((P0.dim[w], 0), dtype=np.int64)
        kb = kernel[w]
        if kb.shape[1] == 0:
            continue
        # generators: kernel vectors outside the radical, kept in kernel-basis order
        cur = rad.T.copy()
        rank = F.rank(cur) if cur.size else 0
        for c in range(kb.shape[1]):
            trial = np.concatenate([cur, kb[:, c].reshape(1, -1)])
            r = F.rank(trial)
            if r > rank:
                cur, rank = trial, r
                full = np.zeros(len(p0), dtype=np.int64)
                full[coords] = kb[:, c]
                p1.append(w)
                columns.append(full)
    matrix = np.array(columns, dtype=np.int64).T.reshape(len(p0), len(p1))
    return Presentation(M, tuple(p0), tuple(p1), matrix, cover)


def subrep(M, bases):
    """Representation on invariant subspaces given by per-vertex column bases."""
    F = M.F
    mats = []
    for a, (s, t) in enumerate(M.quiver.arrows):
        img = F.matmul(M.mats[a], bases[s])
        mats.append(_solve_columns(F, bases[t], img))
    return Rep(M.quiver, M.q, tuple(b.shape[1] for b in bases), tuple(mats))


def _power(F, m, k):
    out = F.eye(m.shape[0])
    for _ in range(k):
        out = F.matmul(m, out)
    return out


def fitting_split(M, phi):
    """Split M by an endomorphism: ``(ker phi^N, im phi^N)`` as sub-representations.

    Returns None when phi^N is zero or invertible (no proper splitting).
    """
    F = M.F
    N = M.total_dim
    powers = [_power(F, b, N) for b in phi.blocks]
    ranks = [F.rank(p) if p.size else 0 for p in powers]
    if sum(ranks) == 0 or sum(ranks) == N:
        return None
    ker = [F.nullspace(p).T for p in powers]
    im = [F.row_basis(p.T).T for p in powers]
    return subrep(M, ker), subrep(M, im)


def find_splitting(M, guard=DEFAULT_GUARD, seed=0):
    """An endomorphism giving a proper Fitting splitting, or None if End(M) is local."""
    F = M.F
    basis = hom_basis(M, M)
    if len(basis) <= 1:
        return None
    for phi in basis:
        parts = fitting_split(M, phi)
        if parts:
            return parts
    rng = np.random.default_rng(seed)
    for _ in range(64):
        c = rng.integers(0, M.q, len(basis))
        parts = fitting_split(M, _combine(F, M, basis, c))
        if parts:
            return parts
    try:
        F.check_guard(len(basis), guard, "endomorphism search")
    except EnumerationTooLarge:
        raise
    for c in F.coefficient_vectors(len(basis), guard):
        parts = fitting_split(M, _combine(F, M, basis, c))
        if parts:
            return parts
    return None


def _combine(F, M, basis, coeffs):
    blocks = []
    for v in range(M.quiver.n):
        acc = F.zeros(M.dim[v], M.dim[v])
        for c, phi in zip(coeffs, basis):
            if c:
                acc = F.ADD[acc, F.MUL[int(c), phi.blocks[v]]]
        blocks.append(acc)
    return RepMap(M, M, tuple(blocks))


def indecomposable_summands(M, guard=DEFAULT_GUARD):
    """Fitting decomposition of M into indecomposable Reps."""
    if M.total_dim == 0:
        return []
    parts = find_splitting(M, guard)
    if parts is None:
        return [M]
    return indecomposable_summands(parts[0], guard) + indecomposable_summands(parts[1], guard)


def is_indecomposable(M, guard=DEFAULT_GUARD):
    return M.total_dim > 0 and find_splitting(M, guard) is None


class IndCatalog:
    """Indecomposable representations, one per positive root, in lexicographic order."""

    def __init__(self, quiver, q):
        self.quiver = quiver
        self.q = q
        self.F = field(q)
        self.roots = list(quiver.positive_roots)
        self.reps = [_find_indecomposable(quiver, q, r) for r in self.roots]
        self.index = {r: i for i, r in enumerate(self.roots)}

    def __len__(self):
        return len(self.reps)

    def __getitem__(self, i):
        return self.reps[i]

    def name(self, i):
        r = self.roots[i]
        if sum(r) == 1:
            return "S(" + ",".join(map(str, r)) + ")"
        if any(self.roots[i] == tuple(int(x) for x in self.quiver.reach[v]) for v in range(self.quiver.n)):
            return "P(" + ",".join(map(str, r)) + ")"
        return "M(" + ",".join(map(str, r)) + ")"

    def identify(self, M):
        """Catalog id of an indecomposable representation (via its dimension vector)."""
        try:
            return self.index[tuple(M.dim)]
        except KeyError:
            raise ValueError(f"dimension vector {M.dim} is not a positive root") from None

    @cached_property
    def hom_matrix(self):
        """``H[i, j] = dim Hom(X_i, X_j)``."""
        n = len(self)
        return np.array([[hom_dim(self.reps[i], self.reps[j]) for j in range(n)] for i in range(n)],
                        dtype=np.int64)

    @cached_property
    def hom_inverse(self):
        """Integer inverse of the Hom matrix (unitriangular up to order)."""
        inv = np.linalg.inv(self.hom_matrix.astype(float))
        rounded = np.rint(inv).astype(np.int64)
        if not np.array_equal(rounded @ self.hom_matrix, np.eye(len(self), dtype=np.int64)):
            raise ArithmeticError("Hom matrix of the catalog is not unimodular")
        return rounded

    @cached_property
    def presentations(self):
        return [projective_presentation(M) for M in self.reps]

    def multiplicities_from_homs(self, homs):
        """Multiplicity vector of a module from ``dim Hom(X_i, M)`` for all i."""
        m = self.hom_inverse @ np.asarray(homs, dtype=np.int64)
        if (m < 0).any():
            raise ArithmeticError("negative multiplicity; Hom data inconsistent")
        return m

    def to_json(self):
        return [{"id": i, "name": self.name(i), "dim": list(r), **self.reps[i].to_json()}
                for i, r in enumerate(self.roots)]


def _find_indecomposable(quiver, q, dimvec):
    """Deterministic search for an indecomposable with dimension vector ``dimvec``.

    Starts from partial identity matrices and does a seeded local search on
    single matrix entries, accepting moves that do not increase dim End.
    For a Dynkin quiver dim End = 1 characterizes the indecomposable.
    """
    mats = [np.eye(dimvec[t], dimvec[s], dtype=np.int64) for s, t in quiver.arrows]
    cur = hom_dim(Rep(quiver, q, dimvec, tuple(mats)), Rep(quiver, q, dimvec, tuple(mats)))
    rng = np.random.default_rng(zlib.crc32(repr((quiver.key(), q, dimvec)).encode()))
    movable = [a for a, (s, t) in enumerate(quiver.arrows) if dimvec[s] and dimvec[t]]
    steps = 0
    while cur > 1:
        steps += 1
        if steps > 200000 or not movable:
            raise RuntimeError(f"no indecomposable found for {dimvec} over F_{q}")
        a = movable[rng.integers(len(movable))]
        m = mats[a]
        i, j = rng.integers(m.shape[0]), rng.integers(m.shape[1])
        old = m[i, j]
        m[i, j] = rng.integers(q)
        M = Rep(quiver, q, dimvec, tuple(mats))
        new = hom_dim(M, M)
        if new <= cur:
            cur = new
        else:
            m[i, j] = old
    return Rep(quiver, q, dimvec, tuple(mats))


_catalogs = {}


def build_catalog(quiver, q):
    key = (quiver.key(), q)
    if key not in _catalogs:
        _catalogs[key] = IndCatalog(quiver, q)
    return _catalogs[key]


def decompose(M, catalog=None):
    """Sorted list of catalog ids of the indecomposable summands of M (Fitting splitting)."""
    catalog = catalog or build_catalog(M.quiver, M.q)
    return sorted(catalog.identify(X) for X in indecomposable_summands(M))


def decompose_by_homs(M, catalog=None):
    """Same multiset as :func:`decompose`, from the dimensions ``dim Hom(X_i, M)``."""
    catalog = catalog or build_catalog(M.quiver, M.q)
    homs = [hom_dim(X, M) for X in catalog.reps]
    m = catalog.multiplicities_from_homs(homs)
    return sorted(Counter({i: int(k) for i, k in enumerate(m) if k}).elements())


def module_iso(M, N, catalog=None):
    if M.dim != N.dim:
        return False
    catalog = catalog or build_catalog(M.quiver, M.q)
    same = decompose(M, catalog) == decompose(N, catalog)
    homs = all(hom_dim(M, X) == hom_dim(N, X) for X in catalog.reps)
    if same != homs:
        raise AssertionError("Fitting decomposition and Hom dimensions disagree")
    return same
