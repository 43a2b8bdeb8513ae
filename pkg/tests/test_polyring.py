import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rampoly import polyring as pr
from rampoly.polyring import IntPoly, InexactDivisionError

from conftest import fraction_divmod

P = IntPoly


def test_canonical_form():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([0, 0]).is_zero()
    assert P().degree == -math.inf
    assert P([5]).degree == 0
    with pytest.raises(TypeError):
        P([1.0])
    with pytest.raises(AttributeError):
        P([1]).coeffs = (2,)


def test_ring_examples():
    assert pr.mul(P([1, -1]), P([1, 1])) == P([1, 0, -1])
    assert pr.mul(P([1, -1]), P([2, 1])) == P([2, -1, -1])
    assert pr.scale(2, P([1, 0, -1])) == P([2, 0, -2])
    assert P([1, 1]) - P([1, 1]) == P()
    assert 3 + P([0, 1]) == P([3, 1])
    assert 1 - P([0, 1]) == P([1, -1])


def test_divide_exact_examples():
    q, r = pr.divide_exact(P([1, 0, -1]), P([1, -1]))
    assert (q, r) == (P([1, 1]), P())
    # Phi_6 divides T_6 = 2 + x + x^2 + 2x^3 + x^4 + x^5
    assert pr.divides(P([1, -1, 1]), P([2, 1, 1, 2, 1, 1]))
    # R_5(-1) = 4 != 0
    assert not pr.divides(P([1, 1]), P([4, -1, -1, -1, -1]))
    with pytest.raises(ZeroDivisionError):
        pr.divide_exact(P([1]), P())


def test_divide_exact_non_monic():
    q, r = pr.divide_exact(P([2, 6, 4]), P([1, 2]))  # (1+2x)(2+2x)
    assert q == P([2, 2]) and r.is_zero()
    with pytest.raises(InexactDivisionError):
        pr.divide_exact(P([1, 0, 1]), P([1, 2]))
    assert not pr.divides(P([1, 2]), P([1, 0, 1]))
    # smaller degree: quotient zero, remainder is the dividend
    assert pr.divide_exact(P([1, 1]), P([0, 0, 1])) == (P(), P([1, 1]))


def test_eval_examples():
    r2 = P([1, -1])
    assert pr.eval_int(r2, 1) == 0
    assert pr.eval_int(r2, -1) == 2
    t12 = P([4, 0, 2, 0, 2, 0, 4, 0, 2, 0, 2])
    assert pr.eval_int(t12, 1) == 16
    assert pr.eval_rational(P([1, 1]), Fraction(1, 2)) == Fraction(3, 2)
    assert pr.eval_rational(P(), Fraction(1, 3)) == 0
    assert P([1, -1, 1])(Fraction(1, 2)) == Fraction(3, 4)


def test_compose_power_examples():
    p = P([2, -1, -1])
    assert pr.compose_power(p, 1) == p
    assert pr.scale(8, pr.compose_power(P([1, -1]), 8)) == P([8, 0, 0, 0, 0, 0, 0, 0, -8])
    expected = P([6, 0, 0, -3, 0, 0, -3])
    assert pr.scale(3, pr.compose_power(p, 3)) == expected
    with pytest.raises(ValueError):
        pr.compose_power(p, 0)


def test_negate_var_examples():
    assert pr.negate_var(P([7])) == P([7])
    assert pr.negate_var(P([2, 1])) == P([2, -1])
    r3 = P([2, -1, -1])
    r6 = P([2, 1, -1, -2, -1, 1])
    assert pr.mul(pr.binomial(3), pr.negate_var(r3)) == r6


def test_geometric_examples():
    assert pr.geometric(5, 5) == P([1])
    assert pr.geometric(1, 3) == P([1, 1, 1])
    g = pr.geometric(2, 6)
    assert g == P([1, 0, 1, 0, 1])
    assert pr.mul(pr.binomial(2), g) == pr.binomial(6)
    with pytest.raises(ValueError):
        pr.geometric(4, 6)
    with pytest.raises(ValueError):
        pr.geometric(0, 6)


def test_derivative_examples():
    assert pr.derivative(P([9])) == P()
    assert pr.derivative(P([-1, 0, 1])) == P([0, 2])
    assert pr.derivative(P([1, 0, 1])) == P([0, 2])


def test_format_and_parse():
    assert pr.format_poly(P([2, -1, -1])) == "2 - x - x^2"
    assert pr.format_poly(P([0, 1, 0, 1])) == "x + x^3"
    assert pr.format_poly(P()) == "0"
    assert pr.format_poly(P([0, -3])) == "-3x"
    assert pr.parse_poly("6 - 3x^{3} - 3x^{6}") == P([6, 0, 0, -3, 0, 0, -3])
    with pytest.raises(ValueError):
        pr.parse_poly("")


small_coeffs = st.integers(-(10**6), 10**6)
polys = st.lists(small_coeffs, max_size=65).map(IntPoly)
sparse_polys = st.dictionaries(st.integers(0, 400), small_coeffs, max_size=6).map(
    lambda d: IntPoly([d.get(i, 0) for i in range(max(d, default=-1) + 1)])
)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a


def _naive_mul(a, b):
    if a.is_zero() or b.is_zero():
        return IntPoly()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return IntPoly(out)


def _dense(elements, lo, hi):
    lead = elements.filter(bool)
    return st.tuples(st.lists(elements, min_size=lo, max_size=hi), lead).map(
        lambda t: IntPoly(t[0] + [t[1]])
    )


@settings(max_examples=60, deadline=None)
@given(_dense(st.integers(-(10**30), 10**30), 40, 200), _dense(st.integers(-5, 5), 40, 200))
def test_kronecker_path_matches_naive(a, b):
    expected = _naive_mul(a, b)
    assert pr._mul_kronecker(a.coeffs, b.coeffs) == list(expected.coeffs)
    assert pr.mul(a, b) == expected


@settings(max_examples=60, deadline=None)
@given(sparse_polys, polys)
def test_sparse_mul_matches_naive(a, b):
    assert pr.mul(a, b) == _naive_mul(a, b)


@settings(max_examples=80, deadline=None)
@given(polys, st.lists(small_coeffs, max_size=20))
def test_division_round_trip_monic(a, low):
    b = IntPoly(list(low) + [1])
    q, r = pr.divide_exact(a, b)
    assert b * q + r == a
    assert r.degree < b.degree


@settings(max_examples=60, deadline=None)
@given(polys, st.lists(st.integers(-4, 4), min_size=1, max_size=6).filter(lambda c: c[-1]))
def test_divides_agrees_with_rational_division(a, b):
    q, r = fraction_divmod(list(a.coeffs), b)
    over_z = not any(r) and all(c.denominator == 1 for c in q)
    assert pr.divides(IntPoly(b), a) == over_z


@settings(max_examples=60, deadline=None)
@given(polys, st.integers(1, 6), st.integers(1, 6))
def test_compose_power_composes(a, m, k):
    assert pr.compose_power(a, m * k) == pr.compose_power(pr.compose_power(a, m), k)


@settings(max_examples=60, deadline=None)
@given(polys, polys, st.integers(-50, 50))
def test_eval_is_a_homomorphism(a, b, t):
    assert pr.eval_int(a * b, t) == pr.eval_int(a, t) * pr.eval_int(b, t)
    assert pr.eval_int(a + b, t) == pr.eval_int(a, t) + pr.eval_int(b, t)


@settings(max_examples=60, deadline=None)
@given(polys, st.fractions(min_value=-3, max_value=3, max_denominator=50))
def test_eval_rational_matches_fraction_horner(a, x0):
    acc = Fraction(0)
    for c in reversed(a.coeffs):
        acc = acc * x0 + c
    assert pr.eval_rational(a, x0) == acc


@settings(max_examples=80, deadline=None)
@given(polys)
def test_text_round_trip(a):
    assert pr.parse_poly(pr.format_poly(a)) == a


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_derivative_product_rule(a, b):
    d = pr.derivative
    assert d(a * b) == d(a) * b + a * d(b)
