"""Small hand-checkable values on A2 with arrow 1 -> 2 (S(0,1) simple projective, P(1,1) = P_1)."""

import itertools

import pytest

from periodic_hall import cli
from periodic_hall.arith import residue
from periodic_hall.hall import FormalSum
from periodic_hall.rootcat import ZERO, identity_map, zero_map, zero_object
from conftest import hall_for

QS = [2, 3, 4, 5]


def names(H):
    p = H.rc.parse_label
    return p("S(0,1)"), p("S(1,0)"), p("P(1,1)")


@pytest.mark.parametrize("q", QS)
def test_cone_fibers(q):
    H = hall_for("A2", q)
    S2, S1, P1 = names(H)
    for W in H.rc.indecomposables:
        assert H.cone_fiber_count(ZERO, W, W) == 1
        assert H.cone_fiber_count(W, W, ZERO) == H.aut(W)
    assert H.cone_fiber_count(S2, P1, S1) == q - 1


@pytest.mark.parametrize("q", QS)
def test_g_examples(q):
    H = hall_for("A2", q)
    S2, S1, P1 = names(H)
    for X in H.rc.indecomposables:
        assert H.g(X, ZERO, X) == 1
    assert H.g(S2, S1, P1) == 1


@pytest.mark.parametrize("q", [2, 3])
def test_special_case_precedence(q):
    """With V = 0 the special case U = W + V[1] and the generic formula agree."""
    H = hall_for("A2", q)
    for U in H.rc.indecomposables:
        assert H.g(U, ZERO, U) == H.cone_fiber_count(U, U, ZERO) / H.aut(U) == 1


def test_trivial_triangles():
    H = hall_for("A2", 3)
    rc = H.rc
    for X in rc.indecomposables:
        Xo = rc.obj(X)
        Z = zero_object(rc.quiver, 3)
        assert H.is_triangle(identity_map(Xo), zero_map(Xo, Z), zero_map(Z, Xo.shift()))
        assert H.F_value(X, ZERO, X) == 1
    S2, S1, P1 = (rc.obj(L) for L in names(H))
    # cone of the zero map S2 -> P1 is P1 + S2[1], not S1
    assert not H.is_triangle(zero_map(S2, P1), zero_map(P1, S1), zero_map(S1, S2.shift()))


@pytest.mark.parametrize("q", [2, 3])
def test_orbit_sums_trivial_cases(q):
    H = hall_for("A2", q)
    ind = H.rc.indecomposables
    for Z in ind:
        g, gs, gb, gt = H.orbit_sums(Z, ZERO, Z)
        assert g == gs == gb == gt == 1
    for Z, M in itertools.product(ind, repeat=2):
        for L in H.cone_distribution(Z, M):
            if L == M + Z.shift() or H.rc.hom_dim(Z.shift(), L):
                continue
            g, gs, gb, gt = H.orbit_sums(Z, L, M)
            n = len(H.triangle_orbits(Z, L, M))
            assert g == gs == gb == gt == n


@pytest.mark.parametrize("q", QS)
def test_products(q):
    H = hall_for("A2", q)
    S2, S1, P1 = names(H)
    for X in H.rc.indecomposables:
        assert H.product_u(X, ZERO) == FormalSum.u_of(X)
    a, b = H.product_u(S1, S2), H.product_u(S2, S1)
    assert [p.coeff(P1) for p in (a, b)].count(1) == 1
    assert 0 in [p.coeff(P1) for p in (a, b)]
    rc = H.rc
    for X, Y in itertools.product(rc.indecomposables, repeat=2):
        for L in H.product_u(X, Y).u:
            assert (rc.groth(L) == rc.groth(X) + rc.groth(Y)).all()


@pytest.mark.parametrize("q", [3, 4, 5])
def test_associator_case_1(q):
    H = hall_for("A2", q)
    S2, S1, _ = names(H)
    a = H.associator(S2.shift(), S2, S1, S1)
    assert H.expected_associator(S2.shift(), S2, S1, S1) == (1, -1)
    assert residue(a, q) == -1


def test_theta_rule_2():
    H = hall_for("A2", 3)
    S2 = names(H)[0]
    p = H.theta_product(FormalSum.u_of(S2), FormalSum.u_of(S2.shift()))
    assert p.theta == {S2.shift(): 1}
    for X, Y in itertools.product(H.rc.indecomposables, repeat=2):
        if X != Y.shift():
            assert not H.theta_product(FormalSum.u_of(X), FormalSum.u_of(Y)).theta


def test_cli_examples(tmp_path, capsys):
    assert cli.main(["catalog", "--type", "A2", "--q", "5"]) == 0
    assert "6 indecomposable" in capsys.readouterr().out
    assert cli.main(["hall", "--type", "A2", "--q", "5", "--out", str(tmp_path)]) == 0
    assert "S(0,1),S(1,0),P(1,1),1,1" in (tmp_path / "g.csv").read_text()
    assert cli.main(["verify", "--suite", "associativity", "--type", "A2", "--q", "5"]) == 0
    assert cli.main(["verify", "--suite", "jacobi", "--type", "A2", "--q", "4"]) == 0


def test_a3_hall_table_completes(tmp_path, capsys):
    import json

    assert cli.main(["hall", "--type", "A3", "--q", "2", "--out", str(tmp_path)]) == 0
    assert json.loads((tmp_path / "hall.json").read_text())["skipped"] == []
