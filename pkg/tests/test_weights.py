from fractions import Fraction
from itertools import permutations

import pytest

from qtrsk.errors import NotContained, NotHorizontalStrip, NotVerticalStrip, ParseError, ShapeMismatch
from qtrsk.exact import ONE, parse_qt, qt_eval
from qtrsk.partitions import contains, partitions_of, size
from qtrsk.weights import (
    Tableau,
    conjugate_swap_identity,
    macdonald_P,
    phi,
    phi_star,
    pieri_check,
    psi,
    tableau_weight,
    vertical_strips_below,
)

LAM = (6, 5, 3, 2)
MU = (6, 4, 3, 1)


def test_psi_example():
    exp = parse_qt(
        "(1-t)^2*(1-q^2)^2*(1-q*t^2)*(1-q^3*t)*(1-q^3*t^3)*(1-q^5*t^2)"
        "/((1-q)^2*(1-q*t)^2*(1-q^2*t)*(1-q^2*t^2)*(1-q^4*t^2)*(1-q^4*t^3))"
    )
    assert psi(LAM, MU) == exp


def test_phi_star_example():
    exp = parse_qt(
        "(1-q^2)^2*(1-q*t^2)^2*(1-q^5*t^2)*(1-q^4*t^4)"
        "/((1-q*t)^2*(1-q^2*t)^2*(1-q^4*t^3)*(1-q^5*t^3))"
    )
    assert phi_star(LAM, MU) == exp


def test_trivial_weights():
    for lam in [(), (1,), (3, 2, 2)]:
        assert psi(lam, lam) == ONE
        assert phi_star(lam, lam) == ONE
        assert phi(lam, lam) == ONE


def test_single_cell_phi_relation():
    conv = parse_qt("(1-t)/(1-q)")
    for lam in [(1,), (2, 1), (3, 1, 1), (2, 2)]:
        for mu in partitions_of(size(lam) - 1):
            if contains(mu, lam):
                assert phi(lam, mu) == conv * phi_star(lam, mu)
    assert phi((1,), ()) == conv


def test_strip_errors():
    with pytest.raises(NotHorizontalStrip):
        psi((1, 1), ())
    with pytest.raises(NotVerticalStrip):
        phi_star((2,), ())
    with pytest.raises(NotContained):
        phi((1,), (2,))


def test_tableau_parse_and_chain():
    T = Tableau.parse("1,1;2")
    assert T.shape == (2, 1)
    assert T.chain() == ((), (2,), (2, 1))
    assert T.chain(3) == ((), (2,), (2, 1), (2, 1))
    assert T.content() == (2, 1)
    assert Tableau.from_chain(T.chain()) == T
    assert Tableau.parse("-").shape == ()
    with pytest.raises(ParseError):
        Tableau.parse("1,1;1")
    with pytest.raises(ParseError):
        Tableau.parse("1,1", "dual_ssyt")
    with pytest.raises(ParseError):
        Tableau.parse("1,a")
    with pytest.raises(ShapeMismatch):
        T.chain(1)


def test_tableau_weights_table_pairs():
    # psi_P phi*_Q for one pair of the forward table
    P = Tableau.parse("1,1;2")
    Q = Tableau.parse("1,2;3", "dual_ssyt")
    w = tableau_weight(P) * tableau_weight(Q, "phi_star")
    assert qt_eval(w, Fraction(1, 3), Fraction(1, 4)) > 0


@pytest.mark.parametrize("lam", [(2,), (1, 1), (2, 1), (3, 1), (2, 2), (2, 1, 1)])
def test_macdonald_P_symmetric_and_unitriangular(lam):
    m = len(lam) + 1
    P = macdonald_P(lam, m, ("eval", Fraction(1, 3), Fraction(2, 7)))
    key = tuple(lam) + (0,) * (m - len(lam))
    assert P[key] == 1
    for content, v in P.items():
        for perm in set(permutations(content)):
            assert P.get(perm, 0) == v


def test_macdonald_P_schur_at_q_equals_t():
    # Schur s_{2,1} in 3 variables: coefficient of x1 x2 x3 is 2
    P = macdonald_P((2, 1), 3, ("eval", Fraction(2, 5), Fraction(2, 5)))
    assert P[(1, 1, 1)] == 2


def test_pieri():
    for mu in [(), (1,), (2,), (1, 1), (2, 1)]:
        for r in (1, 2):
            assert pieri_check(mu, r, 3, Fraction(1, 3), Fraction(3, 7))


def test_conjugate_swap():
    for n in range(1, 7):
        for kappa in partitions_of(n):
            for rho in vertical_strips_below(kappa):
                assert conjugate_swap_identity(kappa, rho)
