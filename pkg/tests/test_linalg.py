import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from periodic_hall.linalg import SUPPORTED_Q, EnumerationTooLarge, field


@st.composite
def matrices(draw, max_side=5):
    q = draw(st.sampled_from(SUPPORTED_Q))
    r = draw(st.integers(1, max_side))
    c = draw(st.integers(1, max_side))
    m = draw(arrays(np.int64, (r, c), elements=st.integers(0, q - 1)))
    return field(q), m


@pytest.mark.parametrize("q", SUPPORTED_Q)
def test_field_axioms(q):
    F = field(q)
    els = range(q)
    for a in els:
        assert F.ADD[a, 0] == a and F.MUL[a, 1] == a
        assert F.ADD[a, F.NEG[a]] == 0
        if a:
            assert F.MUL[a, F.INV[a]] == 1
        for b in els:
            for c in els:
                assert F.MUL[a, F.ADD[b, c]] == F.ADD[F.MUL[a, b], F.MUL[a, c]]
                assert F.MUL[F.MUL[a, b], c] == F.MUL[a, F.MUL[b, c]]
    # multiplicative group is cyclic of order q-1
    orders = []
    for g in range(1, q):
        x, k = g, 1
        while x != 1:
            x, k = F.MUL[x, g], k + 1
        orders.append(k)
    assert max(orders) == q - 1


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rank_nullity(fm):
    F, m = fm
    ns = F.nullspace(m)
    assert F.rank(m) + ns.shape[0] == m.shape[1]
    if ns.shape[0]:
        assert not F.matmul(m, ns.T).any()


@given(matrices(4))
@settings(max_examples=100, deadline=None)
def test_inverse_or_singular(fm):
    F, m = fm
    m = m[: min(m.shape), : min(m.shape)]
    if F.is_invertible(m):
        assert (F.matmul(m, F.inverse(m)) == F.eye(m.shape[0])).all()
    else:
        with pytest.raises(ValueError):
            F.inverse(m)


@given(matrices(), st.data())
@settings(max_examples=100, deadline=None)
def test_solve_affine(fm, data):
    F, a = fm
    x0 = data.draw(arrays(np.int64, a.shape[1], elements=st.integers(0, F.q - 1)))
    b = F.matmul(a, x0.reshape(-1, 1)).reshape(-1)
    x, kernel = F.solve_affine(a, b)
    assert (F.matmul(a, x.reshape(-1, 1)).reshape(-1) == b).all()
    assert kernel.shape[0] == a.shape[1] - F.rank(a)


def test_guard():
    F = field(3)
    assert len(F.coefficient_vectors(4)) == 81
    with pytest.raises(EnumerationTooLarge):
        F.check_guard(20, guard=10**6)
