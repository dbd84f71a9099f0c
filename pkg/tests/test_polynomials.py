from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from brauer.polynomials import PoleError, Poly, RationalFunction, gcd

coeffs = st.lists(st.integers(-6, 6), max_size=5)
points = st.fractions(min_value=-20, max_value=20, max_denominator=9)


def test_basic_arithmetic():
    u = Poly([0, 1])
    p = (u + 2) * (u - 1)
    assert p.coeffs == (-2, 1, 1)
    assert str(p) == "u^2 + u - 2"
    q, r = divmod(p, u - 1)
    assert q == u + 2 and r.is_zero()
    assert Poly.from_roots([1, -2], Fraction(1, 2))(3) == 5


def test_gcd_is_monic():
    u = Poly([0, 1])
    a = (u - 1) * (u - 2) * 3
    b = (u - 2) * (u + 5)
    assert gcd(a, b) == u - 2


def test_rational_function_reduces():
    u = RationalFunction.u()
    f = (u * u - 1) / (u - 1)
    assert f.den == Poly.const(1)
    assert f.num == Poly([1, 1])
    g = (2 * u) / (4 * u + 2)
    assert g.den.lead == 1


def test_pole():
    f = 1 / (RationalFunction.u() - 3)
    assert f.has_pole_at(3)
    with pytest.raises(PoleError):
        f(3)
    assert f(4) == 1


@given(coeffs, coeffs, points)
def test_evaluation_is_a_ring_map(a, b, u0):
    p, q = Poly(a), Poly(b)
    assert (p + q)(u0) == p(u0) + q(u0)
    assert (p * q)(u0) == p(u0) * q(u0)
    assert (p - q)(u0) == p(u0) - q(u0)


@given(coeffs, coeffs.filter(lambda c: any(c)))
def test_division_identity(a, b):
    p, q = Poly(a), Poly(b)
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.is_zero() or rem.degree < q.degree


@given(coeffs, coeffs.filter(lambda c: any(c)), points)
def test_rational_evaluation(a, b, u0):
    num, den = Poly(a), Poly(b)
    if den(u0) == 0:
        return
    f = RationalFunction(num, den)
    assert f(u0) == num(u0) / den(u0)
    assert (f * f - f)(u0) == f(u0) ** 2 - f(u0)
