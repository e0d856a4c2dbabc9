from fractions import Fraction

import pytest

from qtrsk.errors import BoundaryMismatch, ColumnConstraintViolated, ParseError
from qtrsk.exact import ONE, QTSum, parse_alpha, parse_qt
from qtrsk.growth import (
    Distribution,
    Matrix01,
    all_matrices,
    backward_distribution,
    classical_dual_rsk,
    configuration_distribution,
    deterministic_growth,
    enumerate_growths,
    forward_distribution,
    forward_growths,
    growth_insert,
    growth_prob,
    jack_swap_check,
    p_marginal,
    pair_weight,
    qrst_word_distribution,
    qrst_word_insert,
    queue_insert,
    skew_forward_distribution,
    transpose_symmetry_check,
    transpose_tableau,
)
from qtrsk.weights import Tableau


def T(text, flavor="ssyt"):
    return Tableau.parse(text, flavor)


def test_matrix_parse_and_shape():
    A = Matrix01.parse("110;001")
    assert (A.m, A.n) == (2, 3)
    assert A.entry(1, 2) == 1 and A.entry(2, 1) == 0
    assert A.transpose().text() == "10;10;01"
    assert A.column_ones(3) == (2,)
    assert A.row_sums() == (2, 1)
    assert A.swap_columns(2).text() == "101;010"
    assert A.is_word()
    assert not Matrix01.parse("11;10").transpose().is_word()
    with pytest.raises(ParseError):
        Matrix01.parse("12;00")
    with pytest.raises(ParseError):
        Matrix01.parse("11;0")


def test_all_matrices_count():
    assert len(list(all_matrices(2, 3))) == 64


def test_classical_column_insertion():
    A = Matrix01.parse("10001;11010;01100")
    P, Q = classical_dual_rsk(A, "column")
    assert P.text() == "1,1,2,2;2,3;3"
    assert Q.text() == "1,2,4,5;1,3;2"
    G = deterministic_growth(A, "col")
    assert (G.P(), G.Q()) == (P, Q)


def test_row_and_column_rules_match_insertion():
    for A in all_matrices(2, 3):
        for rule, variant in (("row", "row"), ("col", "column")):
            G = deterministic_growth(A, rule)
            assert (G.P(), G.Q()) == classical_dual_rsk(A, variant)
            assert G.is_valid() and G.matrix() == A


def test_growth_count():
    assert len(enumerate_growths(Matrix01.parse("010;101;111"))) == 3
    assert len(enumerate_growths(Matrix01.zeros(2, 2))) == 1


def test_forward_distribution_of_a_table_matrix():
    d = forward_distribution(Matrix01.parse("101;010"))
    assert d.sums_to_one()
    assert d.value_equals((T("1,1;2"), T("1,3;2", "dual_ssyt")), parse_qt("t*(1-q)/(1-q*t)"))
    assert d.value_equals((T("1,1,2"), T("1,2,3", "dual_ssyt")), parse_qt("q*(1-t)/(1-q^2*t)"))


def test_forward_and_backward_probabilities_balance():
    # summing over A, the backward growth probability is the forward one over psi_P phi*_Q
    for A in all_matrices(2, 3):
        for G, p in forward_growths(A):
            assert growth_prob(G) == p
            assert growth_prob(G, "backward") == p / pair_weight(G.P(), G.Q(), 2, 3)


def test_backward_distribution_sums_to_one():
    d = backward_distribution(T("1,1;2"), T("1,2;3", "dual_ssyt"), 2, 3)
    assert d.sums_to_one()
    assert set(A.text() for A in d.support()) <= {"110;001", "101;010", "011;100"}
    j = backward_distribution(T("1,1;2"), T("1,2;3", "dual_ssyt"), 2, 3, "alpha")
    assert j.sums_to_one()


def test_numeric_mode():
    d = forward_distribution(Matrix01.parse("110;001"), "numeric", (Fraction(1, 3), Fraction(1, 4)))
    assert d.total() == 1
    assert d.get((T("1,1;2"), T("1,2;3", "dual_ssyt"))) == Fraction(1, 4) * Fraction(8, 9) / (1 - Fraction(1, 36))


def test_jack_mode():
    d = forward_distribution(Matrix01.parse("110;001"), "alpha")
    assert d.get((T("1,1;2"), T("1,2;3", "dual_ssyt"))) == parse_alpha("2*alpha/(2*alpha+1)")


def test_insertion_outcomes_sum_to_one():
    d = growth_insert(T("1,2;3"), (2, 3))
    assert d.sums_to_one()
    assert len(d.support()) == 4
    q = queue_insert(T("1,2;3"), (2, 3))
    assert q.same_as(d)


def test_deterministic_insertion():
    assert growth_insert(T("1,2;3"), (2,), "col") == queue_insert(T("1,2;3"), (2,), "col")
    assert growth_insert(T(""), (1, 2), "row").text() == "1;2"


def test_word_insertion():
    d = qrst_word_insert(T("1,2;3"), 2)
    assert d.sums_to_one()
    assert len(d.support()) == 4


def test_word_distribution_matches_growths():
    for A in all_matrices(2, 3):
        if not A.is_word():
            with pytest.raises(ColumnConstraintViolated):
                qrst_word_distribution(A)
            continue
        assert qrst_word_distribution(A).same_as(forward_distribution(A))


def test_transpose():
    assert transpose_tableau(T("1,1;2")).text() == "1,2;1"
    for A in all_matrices(2, 2):
        assert transpose_symmetry_check(A)


def test_skew_boundary():
    A = Matrix01.parse("1")
    d = skew_forward_distribution(A, [(), (1,)], [(), ()])
    assert d.sums_to_one()
    with pytest.raises(BoundaryMismatch):
        skew_forward_distribution(A, [(), (1, 1)], [(), ()])
    with pytest.raises(BoundaryMismatch):
        skew_forward_distribution(A, [()], [(), ()])


def test_doubled_column_breaks_swap_invariance():
    A = Matrix01.parse("001;110;001")
    with pytest.raises(ColumnConstraintViolated):
        jack_swap_check(A, 2)
    assert not jack_swap_check(A, 2, require_word=False)
    P = T("1,2;2,3")
    assert p_marginal(A).get(P).is_zero()
    assert p_marginal(A.swap_columns(2)).get(P) == parse_alpha("alpha/(2*(1+alpha)^2)")


def test_word_matrix_swap_invariance():
    assert jack_swap_check(Matrix01.parse("100;010;001"), 1)
    assert jack_swap_check(Matrix01.parse("010;001;100"), 2)


def test_configurations_agree():
    for mu, lam, rho in [((), (), (1,)), ((1,), (2,), (1, 1)), ((1,), (2,), (2,)), ((2, 1), (3, 1), (2, 2))]:
        a = configuration_distribution(mu, lam, rho, "I")
        b = configuration_distribution(mu, lam, rho, "II")
        assert a.sums_to_one() and a.same_as(b)


def test_distribution_json():
    d = Distribution("qt")
    d.add("x", ONE)
    assert d.to_json() == [{"outcome": "x", "value": "1"}]
    assert len(d) == 1
