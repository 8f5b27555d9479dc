from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from agol.errors import DomainError, FieldMismatchError
from agol.oracles import cf_iterate, interval_sign
from agol.surd import CFExpansion, Quad, cf_of_quad, cf_of_rational, fold_cf, quad_arith, quad_floor, quad_sign

small = st.integers(-60, 60)
nonzero = st.integers(1, 40)
discs = st.sampled_from([2, 3, 5, 6, 7, 8, 12, 13, 21, 45])


@st.composite
def quads(draw, D=None):
    d = draw(discs) if D is None else D
    return Quad(draw(small), draw(small), draw(nonzero), d)


def test_golden_ratio_identities():
    phi = Quad(1, 1, 2, 5)
    assert phi * phi == phi + 1
    assert phi.inverse() == phi - 1
    assert str(phi) == "(1+√5)/2"


def test_normalization_divides_out_gcd():
    a = Quad(2, 4, 6, 5)
    assert (a.p, a.q, a.r) == (1, 2, 3)
    b = Quad(2, 4, -6, 5)
    assert (b.p, b.q, b.r) == (-1, -2, 3)


def test_rejects_square_discriminant():
    with pytest.raises(DomainError):
        Quad(1, 1, 1, 9)


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        Quad(1, 1, 1, 5) + Quad(1, 1, 1, 2)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        Quad(0, 0, 1, 5).inverse()


def test_quad_arith_dispatch():
    a, b = Quad(1, 1, 2, 5), Quad(3, -1, 1, 5)
    assert quad_arith("add", a, b) == a + b
    assert quad_arith("mul", a, b) == a * b
    assert quad_arith("div", a, b) == a / b
    assert quad_arith("inv", a) == 1 / a


def test_sign_and_floor_near_zero():
    # 99^2 - 70^2 * 2 = 1, so 99 - 70 sqrt 2 is tiny and positive
    a = Quad(99, -70, 1, 2)
    assert quad_sign(a) == 1
    assert quad_floor(a) == 0
    assert quad_floor(-a) == -1


def test_cf_examples():
    assert cf_of_quad(Quad.sqrt(5)) == CFExpansion((2,), (4,))
    assert cf_of_quad(Quad(1, 1, 2, 5)).period == (1,)
    assert cf_of_quad(Quad(1, 1, 2, 3)) == CFExpansion((), (1, 2))
    assert cf_of_rational(10, 7) == CFExpansion((1, 2, 3))
    assert cf_of_rational(1, 2) == CFExpansion((0, 2))


def test_cf_rational_errors():
    for args in ((1, 0), (-1, 2), (4, 6)):
        with pytest.raises(DomainError):
            cf_of_rational(*args)
    with pytest.raises(DomainError):
        cf_of_quad(Quad(3, 0, 2, 5))


@given(quads(), quads(D=5))
def test_field_identities(a, b):
    b = Quad(b.p, b.q, b.r, a.D)
    assert a + b - b == a
    assert (a * b).norm() == a.norm() * b.norm()
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(quads())
def test_sign_matches_interval_shadow(a):
    assert interval_sign(a, prec=300) == quad_sign(a)


@given(quads())
def test_floor_brackets(a):
    n = quad_floor(a)
    assert n <= a < n + 1


@given(quads().filter(lambda a: a.q != 0))
def test_cf_matches_floor_iteration(a):
    cf = cf_of_quad(a)
    assert cf.terms(12) == cf_iterate(a, 12)
    assert all(t >= 1 for t in cf.terms(12)[1:])


@given(st.integers(0, 10**6), st.integers(1, 10**6))
def test_rational_cf_round_trip(num, den):
    f = Fraction(num, den)
    cf = cf_of_rational(f.numerator, f.denominator)
    assert fold_cf(cf.preperiod) == f
