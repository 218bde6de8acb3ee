import os
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mqg.cyclo import (
    ConductorLimitError,
    CycloNum,
    InvalidConductorError,
    cyclotomic_polynomial,
    euler_phi,
    int_vec_zero_mod_phi,
    mult_order,
    root_of_unity,
)


def test_minimal_polynomial_relations():
    z3 = root_of_unity(3)
    assert CycloNum.one() + z3 + z3**2 == CycloNum.zero()
    z4 = root_of_unity(4)
    assert z4 * z4 == CycloNum.from_rational(-1)
    z5 = root_of_unity(5)
    assert sum((z5**k for k in range(1, 5)), CycloNum.zero()) == \
        CycloNum.from_rational(-1)


def test_rational_embedding():
    half = CycloNum.from_rational(Fraction(1, 2))
    assert half + half == CycloNum.one()
    assert half * 2 == CycloNum.one()
    assert (half - half).is_zero()


def test_inverse():
    z7 = root_of_unity(7)
    x = z7**3 + CycloNum.from_rational(2)
    assert x * x.inverse() == CycloNum.one()
    with pytest.raises(ZeroDivisionError):
        CycloNum.zero().inverse()


def test_division_and_power():
    z8 = root_of_unity(8)
    assert z8**8 == CycloNum.one()
    assert z8**-1 == z8**7
    assert (z8 / z8) == CycloNum.one()
    assert z8**0 == CycloNum.one()


def test_cross_conductor_equality_and_hash():
    a = root_of_unity(4, 2)        # -1 at conductor 4
    b = CycloNum.from_rational(-1)  # -1 at conductor 1
    assert a == b
    assert hash(a) == hash(b)
    c = root_of_unity(6, 3)
    assert c == b and hash(c) == hash(b)


def test_mult_order():
    assert mult_order(root_of_unity(12, 1)) == 12
    assert mult_order(root_of_unity(12, 8)) == 3
    assert mult_order(CycloNum.one()) == 1
    assert mult_order(CycloNum.from_rational(2)) is None
    assert mult_order(CycloNum.zero()) is None


def test_as_root_of_unity():
    k, e = (root_of_unity(9, 6)).as_root_of_unity()
    assert root_of_unity(k, e) == root_of_unity(9, 6)
    assert (k, e) == (3, 2)


def test_json_round_trip():
    x = root_of_unity(5) * Fraction(3, 7) + CycloNum.from_rational(1)
    doc = x.to_json()
    assert set(doc) == {"conductor", "num", "den"}
    assert CycloNum.from_json(doc) == x
    assert CycloNum.from_json(doc).to_json() == doc


def test_invalid_and_capped_conductor(monkeypatch):
    with pytest.raises(InvalidConductorError):
        CycloNum(0, [1])
    with pytest.raises(InvalidConductorError):
        root_of_unity(-3)
    monkeypatch.setenv("MQG_MAX_CONDUCTOR", "10")
    with pytest.raises(ConductorLimitError):
        CycloNum(11, [1] * 3)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    for n in (9, 12, 15, 30):
        assert len(cyclotomic_polynomial(n)) == euler_phi(n) + 1


def test_int_vec_reduction():
    # 1 + z3 + z3^2 = 0 as an integer vector
    assert int_vec_zero_mod_phi([1, 1, 1], 3)
    assert not int_vec_zero_mod_phi([1, 1, 0], 3)
    assert int_vec_zero_mod_phi([0] * 8, 8)


small_rationals = st.fractions(
    min_value=-3, max_value=3, max_denominator=5
)


@st.composite
def cyclo_numbers(draw):
    n = draw(st.sampled_from([1, 2, 3, 4, 6, 8]))
    coeffs = draw(st.lists(small_rationals, min_size=1, max_size=euler_phi(n)))
    return CycloNum(n, coeffs)


@settings(deadline=None, max_examples=60)
@given(cyclo_numbers(), cyclo_numbers(), cyclo_numbers())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@settings(deadline=None, max_examples=60)
@given(cyclo_numbers())
def test_additive_inverse_and_json(a):
    assert (a - a).is_zero()
    assert CycloNum.from_json(a.to_json()) == a


@settings(deadline=None, max_examples=40)
@given(st.sampled_from([2, 3, 4, 5, 6, 8, 12]), st.integers(0, 30))
def test_root_exponent_arithmetic(n, e):
    z = root_of_unity(n)
    assert z**e == root_of_unity(n, e % n)
    assert (z**e) * (z ** (n - e % n)) == CycloNum.one()
