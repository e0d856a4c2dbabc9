from fractions import Fraction

import pytest

from qtrsk.errors import (
    DivideByZero,
    EqualPoints,
    IncomparablePoints,
    JackLimitUndefined,
    LimitDiverges,
    PoleAtPoint,
)
from qtrsk.exact import (
    ONE,
    ZERO,
    AlphaRational,
    LaurentPoly2,
    QTFactored,
    QTSum,
    binomial,
    monomial,
    parse_alpha,
    parse_qt,
    qt_eval,
    qt_expand,
    qt_from_point_difference,
    qt_jack_limit,
    qt_limit,
    qt_substitute_inverse,
    qt_sum_equals,
    qt_swap,
)

q = monomial(1, 0)
t = monomial(0, 1)


def test_point_difference_orders_points():
    # q - q^2 t = q (1 - q t)
    assert qt_from_point_difference((1, 0), (2, 1)) == q * binomial(1, 1)
    # q^2 t - q = -q (1 - q t)
    assert qt_from_point_difference((2, 1), (1, 0)) == -(q * binomial(1, 1))


def test_point_difference_errors():
    with pytest.raises(EqualPoints):
        qt_from_point_difference((1, 1), (1, 1))
    with pytest.raises(IncomparablePoints):
        qt_from_point_difference((2, 0), (0, 1))


def test_factored_multiplication_cancels():
    x = binomial(1, 1) / binomial(1, 1)
    assert x.is_one()
    assert (q * t / q / t) == ONE
    assert ZERO * q == ZERO


def test_zero_power_rejected():
    with pytest.raises(DivideByZero):
        ZERO ** 0


def test_parse_rewrites_plus_binomials():
    x = parse_qt("(1+q)")
    assert x == binomial(2, 0) / binomial(1, 0)
    assert qt_eval(x, 3, 5) == 4


def test_parse_examples():
    x = parse_qt("q*(1-t)/(1-q*t)")
    assert x == q * binomial(0, 1) / binomial(1, 1)
    assert qt_eval(x, 2, 3) == Fraction(4, 5)
    assert x.pretty() == "q(1-t)/(1-qt)"


def test_eval_poles_and_zeros():
    x = binomial(1, 0) / binomial(0, 1)
    assert qt_eval(x, 1, 2) == 0
    with pytest.raises(PoleAtPoint):
        qt_eval(x, 2, 1)
    with pytest.raises(PoleAtPoint):
        qt_eval(monomial(-1, 0), 0, 2)


def test_limits():
    x = parse_qt("q*(1-t)/(1-q*t)")
    assert qt_limit(x, "t->0") == q
    assert qt_limit(x, "q->0") == ZERO
    # q(1-t)/(1-qt) -> -(1-t)/t as q -> oo
    assert qt_limit(x, "q->inf") == -(binomial(0, 1) / t)
    with pytest.raises(LimitDiverges):
        qt_limit(monomial(0, -1), "t->0")
    with pytest.raises(ValueError):
        qt_limit(x, "q->1")


def test_inverse_and_swap():
    x = parse_qt("q^2*(1-q*t^2)/(1-t)")
    assert qt_substitute_inverse(qt_substitute_inverse(x)) == x
    assert qt_swap(qt_swap(x)) == x
    assert qt_eval(qt_substitute_inverse(x), 2, 3) == qt_eval(x, Fraction(1, 2), Fraction(1, 3))
    assert qt_eval(qt_swap(x), 2, 3) == qt_eval(x, 3, 2)


def test_expand_matches_evaluation():
    x = parse_qt("3*q*t^-1*(1-q^2*t)^2/((1-q)*(1-t^3))")
    num, den = qt_expand(x)
    assert num.evaluate(2, 5) / den.evaluate(2, 5) == qt_eval(x, 2, 5)


def test_laurent_arithmetic():
    a = LaurentPoly2.monomial(1, 0) + LaurentPoly2.constant(1)
    b = LaurentPoly2.monomial(1, 0) - LaurentPoly2.constant(1)
    assert a * b == LaurentPoly2.monomial(2, 0) - LaurentPoly2.constant(1)
    assert (a - a).is_zero()


def test_sum_of_geometric_series():
    # 1 + q + q^2 = (1 - q^3)/(1 - q)
    assert qt_sum_equals([ONE, q, q * q], binomial(3, 0) / binomial(1, 0))
    assert not qt_sum_equals([ONE, q], binomial(3, 0) / binomial(1, 0))


def test_sum_with_different_denominators():
    # t(1-q)/(1-qt) + (1-t)/(1-qt) = 1
    s = QTSum([parse_qt("t*(1-q)/(1-q*t)"), parse_qt("(1-t)/(1-q*t)")])
    assert s.equals(ONE)
    assert s.evaluate(Fraction(1, 3), Fraction(1, 5)) == 1
    assert s.as_factored() is None
    assert s.pretty() == "1"


def test_json_roundtrip():
    x = parse_qt("-2/3*q^-1*t^4*(1-q*t)^3/(1-q^2)")
    assert QTFactored.from_json(x.to_json()) == x
    assert QTFactored.from_json(ZERO.to_json()) == ZERO


def test_jack_limit():
    assert qt_jack_limit(parse_qt("(1-t)/(1-q)")) == AlphaRational(1) / AlphaRational.alpha()
    # (1-q^2 t)/(1-q t^2) -> (2a+1)/(a+2)
    assert qt_jack_limit(parse_qt("(1-q^2*t)/(1-q*t^2)")) == parse_alpha("(2*alpha+1)/(alpha+2)")
    with pytest.raises(JackLimitUndefined):
        qt_jack_limit(binomial(1, 0))


def test_alpha_field():
    a = AlphaRational.alpha()
    x = a / (a + 1)
    assert x + 1 / (a + 1) == 1
    assert (x * (a + 1)) == a
    assert x.evaluate(3) == Fraction(3, 4)
    assert parse_alpha("alpha/(2*(1+alpha)^2)") == a / (2 * (1 + a) ** 2)
    with pytest.raises(DivideByZero):
        x / AlphaRational(0)
    with pytest.raises(PoleAtPoint):
        (1 / (a + 1)).evaluate(-1)


def test_alpha_text_roundtrip():
    for text in ["1/(2*alpha+1)", "alpha/(2*(1+alpha)^2)", "0", "3/2"]:
        x = parse_alpha(text)
        assert parse_alpha(str(x)) == x
    assert str(parse_alpha("alpha/(2*(1+alpha)^2)")) == "alpha/(2*(alpha + 1)^2)"
