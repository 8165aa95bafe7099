import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from periodic_hall.quiverrep import (Quiver, QuiverError, build_catalog, direct_sum, ext1_dim, hom_dim,
                                     projective_presentation)


@pytest.mark.parametrize("name,count", [("A1", 1), ("A2", 3), ("A3", 6), ("A4", 10), ("D4", 12),
                                        ("D5", 20), ("E6", 36), ("E7", 63), ("E8", 120)])
def test_positive_root_counts(name, count):
    assert len(Quiver.from_type(name).positive_roots) == count


@pytest.mark.parametrize("text", [
    "vertices 3\narrow 1 2\narrow 2 3\narrow 3 1\n",   # cycle
    "vertices 2\narrow 1 2\narrow 1 2\n",               # Kronecker
    "vertices 5\narrow 1 2\narrow 1 3\narrow 1 4\narrow 1 5\n",   # affine D4
    "vertices 3\narrow 1 2\n",                          # disconnected
])
def test_rejects_non_dynkin(text):
    with pytest.raises(QuiverError):
        Quiver.from_text(text)


def test_rejects_non_simply_laced_names():
    for name in ("B2", "C3", "G2", "F4", "E9", "D3"):
        with pytest.raises(QuiverError):
            Quiver.from_type(name)


def test_text_roundtrip():
    Q = Quiver.from_text("vertices 4\narrow 2 1\narrow 2 3\narrow 4 2\n")
    assert Q.type == "D4"
    assert Quiver.from_text(Q.to_text()) == Q


@pytest.mark.parametrize("name,q", [("A3", 2), ("A3", 3), ("D4", 2), ("A2", 4)])
def test_catalog_is_indecomposable_and_euler(name, q):
    Q = Quiver.from_type(name)
    cat = build_catalog(Q, q)
    E = Q.euler_matrix
    for M in cat.reps:
        assert hom_dim(M, M) == 1
        assert ext1_dim(M, M) == 0
    for M, N in itertools.product(cat.reps, repeat=2):
        assert hom_dim(M, N) - ext1_dim(M, N) == int(np.array(M.dim) @ E @ np.array(N.dim))


@pytest.mark.parametrize("q", [2, 3])
def test_presentation_dimensions(q):
    Q = Quiver.from_type("A3")
    reach = Q.reach.astype(np.int64)
    for M in build_catalog(Q, q).reps:
        pres = projective_presentation(M)
        dim = sum(reach[v] for v in pres.p0) - sum((reach[v] for v in pres.p1), np.zeros(Q.n, dtype=np.int64))
        assert tuple(dim) == M.dim


@given(st.lists(st.integers(0, 2), min_size=6, max_size=6))
@settings(max_examples=25, deadline=None)
def test_multiplicities_recovered_from_homs(mult):
    Q = Quiver.from_type("A3")
    cat = build_catalog(Q, 3)
    summands = [cat.reps[i] for i, m in enumerate(mult) for _ in range(m)]
    if not summands:
        return
    M = direct_sum(summands, Q, 3)
    homs = [hom_dim(X, M) for X in cat.reps]
    assert list(cat.multiplicities_from_homs(homs)) == mult
