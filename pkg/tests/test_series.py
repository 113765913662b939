from fractions import Fraction

import pytest

from wittzeta.errors import (
    NonUnitConstantTerm,
    PrecisionMismatch,
    RingMismatch,
)
from wittzeta.rings import QQ, ZZ, int_poly_ring
from wittzeta.series import TruncSeries


def S(*coeffs, prec=None):
    prec = len(coeffs) - 1 if prec is None else prec
    return TruncSeries.make(ZZ, coeffs, prec)


def test_precision_counts_stored_terms_minus_one():
    s = S(1, 2, 3)
    assert s.precision == 2
    assert s.coeffs == (1, 2, 3)
    assert TruncSeries.make(ZZ, (1,), 4).coeffs == (1, 0, 0, 0, 0)


def test_constructors():
    assert TruncSeries.one(ZZ, 3).coeffs == (1, 0, 0, 0)
    assert TruncSeries.constant(ZZ, 7, 2).coeffs == (7, 0, 0)
    assert TruncSeries.geometric(ZZ, 3, 4).coeffs == (1, 3, 9, 27, 81)


def test_coefficient_access():
    s = S(1, 5, 7)
    assert s.coefficient(0) == 1
    assert s.coefficient(2) == 7
    # past the stored window the tail reads as zero
    assert s.coefficient(3) == 0


def test_add_sub_mul():
    a = S(1, 2, 3)
    b = S(1, -1, 1)
    assert a.add(b).coeffs == (2, 1, 4)
    assert a.sub(a).coeffs == (0, 0, 0)
    assert a.neg().coeffs == (-1, -2, -3)
    # (1+t)(1-t) = 1 - t^2
    assert S(1, 1, 0).mul(S(1, -1, 0)).coeffs == (1, 0, -1)


def test_mul_truncates():
    a = S(1, 1)  # precision 1
    assert a.mul(a).coeffs == (1, 2)


def test_invert():
    s = S(1, 2, 1)
    inv = s.invert()
    assert inv.coeffs == (1, -2, 3)
    assert s.mul(inv).coeffs == (1, 0, 0)
    assert S(1, -1, 0, 0).invert().coeffs == (1, 1, 1, 1)


def test_invert_requires_unit_constant_term():
    with pytest.raises(NonUnitConstantTerm):
        S(2, 1).invert()
    with pytest.raises(NonUnitConstantTerm):
        S(0, 1).invert()


def test_invert_over_rationals():
    s = TruncSeries.make(QQ, (Fraction(1), Fraction(1, 2)), 2)
    assert s.invert().coeffs == (
        Fraction(1),
        Fraction(-1, 2),
        Fraction(1, 4),
    )


def test_pow_int():
    s = S(1, 1, 0, 0)
    assert s.pow_int(3).coeffs == (1, 3, 3, 1)
    assert s.pow_int(0).coeffs == (1, 0, 0, 0)
    assert s.pow_int(-2).coeffs == (1, -2, 3, -4)


def test_scale_and_stretch_argument():
    s = S(1, 1, 1, 1)
    assert s.scale_argument(2).coeffs == (1, 2, 4, 8)
    assert s.stretch_argument(2).coeffs == (1, 0, 1, 0)


def test_truncate_and_map():
    s = S(1, 2, 3, 4)
    assert s.truncate(1).coeffs == (1, 2)
    doubled = s.map_coefficients(ZZ, lambda c: 2 * c)
    assert doubled.coeffs == (2, 4, 6, 8)


def test_mismatch_errors():
    with pytest.raises(PrecisionMismatch):
        S(1, 1).add(S(1, 1, 1))
    qs = TruncSeries.make(QQ, (Fraction(1), Fraction(1)), 1)
    with pytest.raises(RingMismatch):
        S(1, 1).add(qs)


def test_render():
    assert S(1, 3, 9).render() == "1 + 3*t + 9*t^2 + O(t^3)"
    assert S(1, 0, -2).render() == "1 - 2*t^2 + O(t^3)"
    assert S(0, 0, 0).render() == "0 + O(t^3)"
    assert S(1, -1).render() == "1 - t + O(t^2)"


def test_render_polynomial_coefficients_are_parenthesized():
    R = int_poly_ring("u")
    u = R.variable("u")
    s = TruncSeries.make(R, (R.one, R.add(R.one, u)), 1)
    assert s.render() == "1 + (1 + u)*t + O(t^2)"


def test_render_json_uses_decimal_strings():
    s = S(1, 2, 3)
    assert s.render_json() == {"precision": 2, "coeffs": ["1", "2", "3"]}
