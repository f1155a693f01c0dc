import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlie.qarith import (
    DivisionError,
    LaurentPoly,
    QScalar,
    evaluate,
    laurent_sum,
    q_binomial,
    q_factorial,
    q_number,
)

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)
points = st.fractions(min_value=Fraction(1, 7), max_value=7, max_denominator=9)


def _divided_q_number(m: int, length_sq: int = 2) -> LaurentPoly:
    # [m] = (v^{lm} - v^{-lm}) / (v^l - v^{-l}), computed by long division
    num = LaurentPoly.monomial(length_sq * m) - LaurentPoly.monomial(-length_sq * m)
    den = LaurentPoly.monomial(length_sq) - LaurentPoly.monomial(-length_sq)
    quo, rem = num.divmod(den)
    assert rem.is_zero()
    return quo


@pytest.mark.parametrize("length_sq", [1, 2, 4, 6])
@pytest.mark.parametrize("m", range(-12, 13))
def test_q_number_matches_long_division(m, length_sq):
    assert q_number(m, length_sq) == _divided_q_number(m, length_sq)


@pytest.mark.parametrize("m", range(0, 13))
def test_q_number_symmetries(m):
    p = q_number(m)
    assert p.is_bar_invariant()
    assert q_number(-m) == -p
    assert evaluate(p, 1) == m


def test_q_number_text():
    assert q_number(2).to_text() == "q + q^-1"
    assert q_number(3).to_text() == "q^2 + 1 + q^-2"
    assert q_number(2, 1).to_text() == "v + v^-1"
    assert q_number(0).to_text() == "0"


def _pascal(n: int, k: int) -> LaurentPoly:
    # [n, k] = q^{n-k} [n-1, k-1] + q^{-k} [n-1, k]
    table = {(0, 0): LaurentPoly.const(1)}
    for a in range(1, n + 1):
        for b in range(0, a + 1):
            left = table.get((a - 1, b - 1), LaurentPoly())
            right = table.get((a - 1, b), LaurentPoly())
            table[(a, b)] = LaurentPoly.q_power(a - b) * left + LaurentPoly.q_power(-b) * right
    return table[(n, k)]


@pytest.mark.parametrize("n", range(0, 13))
def test_q_binomial_matches_pascal(n):
    for k in range(n + 1):
        b = q_binomial(n, k)
        assert b == _pascal(n, k)
        assert b == q_binomial(n, n - k)
        assert b.is_bar_invariant()
        assert evaluate(b, 1) == math.comb(n, k)


def test_q_binomial_exact_up_to_30():
    for n in range(31):
        for k in range(n + 1):
            assert evaluate(q_binomial(n, k), 1) == math.comb(n, k)


def test_q_binomial_rejects_out_of_range():
    with pytest.raises(ValueError):
        q_binomial(3, 4)
    with pytest.raises(ValueError):
        q_binomial(3, -1)


@pytest.mark.parametrize("n", range(0, 13))
def test_q_factorial(n):
    f = q_factorial(n)
    assert f.is_bar_invariant()
    assert evaluate(f, 1) == math.factorial(n)
    assert f == math.prod((q_number(k) for k in range(1, n + 1)), start=LaurentPoly.const(1))


def test_q_factorial_rejects_negative():
    with pytest.raises(ValueError):
        q_factorial(-1)


@settings(max_examples=200, deadline=None)
@given(polys, polys, points)
def test_ring_ops_commute_with_evaluation(p, r, x):
    assert evaluate(p + r, v=x) == evaluate(p, v=x) + evaluate(r, v=x)
    assert evaluate(p - r, v=x) == evaluate(p, v=x) - evaluate(r, v=x)
    assert evaluate(p * r, v=x) == evaluate(p, v=x) * evaluate(r, v=x)


@settings(max_examples=200, deadline=None)
@given(polys, polys)
def test_divmod_reconstructs(p, d):
    if d.is_zero():
        return
    quo, rem = p.divmod(d)
    assert quo * d + rem == p


@settings(max_examples=200, deadline=None)
@given(polys, polys)
def test_exact_div_of_product(p, d):
    if d.is_zero():
        return
    assert (p * d).exact_div(d) == p


def test_exact_div_raises_on_remainder():
    with pytest.raises(DivisionError):
        q_number(3).exact_div(q_number(2))


@settings(max_examples=200, deadline=None)
@given(polys)
def test_text_round_trip(p):
    assert LaurentPoly.parse(p.to_text()) == p


@settings(max_examples=100, deadline=None)
@given(polys)
def test_bar_is_involution(p):
    assert p.bar().bar() == p
    assert (p + p.bar()).is_bar_invariant()


def test_evaluate_conventions():
    p = q_number(2)
    assert evaluate(p, Fraction(4)) == Fraction(17, 4)
    assert evaluate(p, v=Fraction(2)) == Fraction(17, 4)
    assert evaluate(q_number(2, 1), Fraction(4)) == Fraction(5, 2)  # v = 2
    assert evaluate(p, 2.0) == pytest.approx(2.5)
    z = evaluate(p, 1j)
    assert z == pytest.approx(1j + 1 / 1j)
    with pytest.raises(ZeroDivisionError):
        evaluate(p, 0)


def test_odd_exponent_needs_square_root():
    with pytest.raises(ValueError):
        evaluate(q_number(2, 1), Fraction(2))


@settings(max_examples=100, deadline=None)
@given(polys, polys.filter(lambda d: not d.is_zero()), points)
def test_qscalar_matches_evaluation(p, d, x):
    s = QScalar(p, d)
    dv = evaluate(d, v=x)
    if dv == 0:
        return
    assert evaluate(s.num, v=x) / evaluate(s.den, v=x) == evaluate(p, v=x) / dv
    assert (s * QScalar(d)) == QScalar(p)


def test_qscalar_reduces_to_laurent():
    s = QScalar(q_number(4), q_number(2))
    assert s.is_laurent()
    assert s.as_laurent() == LaurentPoly.q_power(2) + LaurentPoly.q_power(-2)
    assert not QScalar(q_number(3), q_number(2)).is_laurent()


def test_laurent_sum():
    assert laurent_sum(q_number(k) for k in range(1, 4)) == q_number(1) + q_number(2) + q_number(3)
