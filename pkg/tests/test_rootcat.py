import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from periodic_hall.quiverrep import ext1_dim, hom_dim
from periodic_hall.rootcat import (IsoLabel, ZERO, cone, identity_map, is_iso, reduce_complex,
                                   zero_map)
from conftest import hall_for


def rc_for(t, q):
    return hall_for(t, q).rc


def labels(rc, max_parts=3):
    ind = rc.indecomposables
    return st.lists(st.sampled_from(ind), min_size=1, max_size=max_parts).map(
        lambda xs: sum(xs[1:], xs[0]))


def random_map(H, draw):
    coeffs = draw(st.lists(st.integers(0, H.F.q - 1), min_size=H.dim, max_size=H.dim))
    return H.element(np.array(coeffs, dtype=np.int64))


@pytest.mark.parametrize("t,q", [("A2", 2), ("A2", 5), ("A3", 3)])
def test_modules_embed(t, q):
    rc = rc_for(t, q)
    mods = rc.catalog.reps
    ind = [IsoLabel(((i, 0),)) for i in range(len(mods))]
    for (i, M), (j, N) in itertools.product(enumerate(mods), repeat=2):
        assert rc.hom_dim(ind[i], ind[j]) == hom_dim(M, N)
        assert rc.hom_dim(ind[i], ind[j].shift()) == ext1_dim(M, N)


def test_a2_hom_matrix():
    rc = rc_for("A2", 3)
    names = [rc.name(X) for X in rc.indecomposables]
    H = {(rc.name(X), rc.name(Y)): rc.hom_dim(X, Y) for X in rc.indecomposables for Y in rc.indecomposables}
    assert names == ["S(0,1)", "S(0,1)[1]", "S(1,0)", "S(1,0)[1]", "P(1,1)", "P(1,1)[1]"]
    # simple projective S(0,1) sits in P(1,1) with cokernel S(1,0)
    assert H["S(0,1)", "P(1,1)"] == 1 and H["P(1,1)", "S(0,1)"] == 0
    assert H["P(1,1)", "S(1,0)"] == 1 and H["S(1,0)", "S(0,1)[1]"] == 1
    assert all(H[n, n] == 1 for n in names)
    assert sum(H.values()) == 6 + 3 * 2 * 1


@pytest.mark.parametrize("q", [2, 3])
def test_hom_enumeration_size(q):
    rc = rc_for("A2", q)
    for X, Y in itertools.product(rc.indecomposables, repeat=2):
        H = rc.hom(X + X, Y)
        assert sum(1 for _ in H.elements()) == q ** H.dim == H.size


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_label_roundtrip_and_shift(data):
    rc = rc_for("A3", 2)
    L = data.draw(labels(rc))
    X = rc.obj(L)
    assert rc.label_of(X) == L
    assert rc.label_of(X.shift()) == L.shift()
    assert L.shift().shift() == L
    assert rc.label_of(X.shift().shift()) == L
    R = reduce_complex(X)
    assert rc.label_of(R) == L
    assert reduce_complex(R).identical(R)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_cone_class_independence(data):
    """Precomposing and postcomposing with automorphisms does not change the cone."""
    rc = rc_for("A2", 3)
    A = data.draw(labels(rc, 2))
    B = data.draw(labels(rc, 2))
    H = rc.hom(A, B)
    f = random_map(H, data.draw)
    a = random_map(rc.hom(A, A), data.draw)
    b = random_map(rc.hom(B, B), data.draw)
    C = rc.label_of(cone(f)[0])
    if is_iso(a) and is_iso(b):
        assert rc.label_of(cone(b.compose(f).compose(a))[0]) == C
    # cone depends only on the homotopy class
    g = f + H.element(np.zeros(H.dim, dtype=np.int64))
    assert rc.label_of(cone(g)[0]) == C


def test_cone_of_zero_and_identity():
    rc = rc_for("A2", 2)
    for X, Y in itertools.product(rc.indecomposables, repeat=2):
        C, _, _ = cone(zero_map(rc.obj(X), rc.obj(Y)))
        assert rc.label_of(C) == Y + X.shift()
        C, _, _ = cone(identity_map(rc.obj(X)))
        assert rc.label_of(C) == ZERO


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_groth_additive_on_cones(data):
    rc = rc_for("A3", 2)
    A = data.draw(labels(rc, 2))
    B = data.draw(labels(rc, 2))
    f = random_map(rc.hom(A, B), data.draw)
    C = rc.label_of(cone(f)[0])
    # triangle A -> B -> C -> A[1]
    assert (rc.groth(C) == rc.groth(B) - rc.groth(A)).all()


@pytest.mark.parametrize("q", [2, 3])
def test_aut_formula_matches_brute(q):
    rc = rc_for("A2", q)
    ind = rc.indecomposables
    for parts in itertools.combinations_with_replacement(ind, 2):
        L = parts[0] + parts[1]
        assert rc.aut_order(L, brute=True) == rc.aut_order(L, brute=False)


def test_known_aut_orders():
    rc = rc_for("A2", 5)
    S = rc.indecomposables[0]
    assert rc.aut_order(S) == 4
    assert rc.aut_order(S + S) == 480            # |GL_2(F_5)|
    assert all(rc.d_value(X) == 1 for X in rc.indecomposables)
    assert rc.aut_order(ZERO) == 1


def test_label_algebra():
    a, b = IsoLabel(((0, 0),)), IsoLabel(((1, 1),))
    assert (a + b) == (b + a)
    assert (a + b).minus(b) == a
    assert a.minus(b) is None
    assert (a + b).shift() == a.shift() + b.shift()
    assert sorted([b, a]) == [a, b]
