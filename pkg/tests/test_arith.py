from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from periodic_hall.arith import (QRational, Residue, VerificationFailure, in_z_inv_q, rational_json,
                                 residue, to_qrational)

QS = st.sampled_from([2, 3, 4, 5, 7, 8, 9])


def test_membership():
    assert in_z_inv_q(Fraction(7, 8), 4)
    assert in_z_inv_q(Fraction(5, 27), 9)
    assert not in_z_inv_q(Fraction(1, 3), 4)
    assert not in_z_inv_q(Fraction(1, 6), 2)


def test_non_member_raises_with_witness():
    with pytest.raises(VerificationFailure) as exc:
        to_qrational(Fraction(1, 3), 2)
    assert exc.value.witness == Fraction(1, 3)


def test_residue_of_power_of_q_is_one():
    for q in (3, 4, 5):
        assert residue(Fraction(1, q**3), q) == 1
        assert residue(q**5, q) == 1


def test_modulus_one_is_zero_ring():
    assert Residue(17, 1) == 0
    assert residue(Fraction(5, 4), 2) == Residue(0, 1)


def test_json():
    assert rational_json(Fraction(-3, 4)) == {"num": "-3", "den": "4"}


@given(QS, st.integers(-10**6, 10**6), st.integers(0, 6), st.integers(-10**6, 10**6), st.integers(0, 6))
def test_residue_is_ring_hom(q, a, i, b, j):
    x, y = Fraction(a, q**i), Fraction(b, q**j)
    assert residue(x + y, q) == residue(x, q) + residue(y, q)
    assert residue(x * y, q) == residue(x, q) * residue(y, q)


@given(QS, st.integers(-10**6, 10**6), st.integers(0, 6))
def test_qrational_roundtrip(q, a, i):
    x = Fraction(a, q**i)
    qr = to_qrational(x, q)
    assert qr.to_fraction() == x
    assert QRational.make(qr.num, qr.qexp, q) == qr
