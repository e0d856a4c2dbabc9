from fractions import Fraction
from itertools import combinations

import pytest

from qtrsk.exact import ONE, ZERO, Monomial, QTSum, parse_qt, qt_limit
from qtrsk.local_rules import (
    alpha_beta_gamma_prob,
    backward_prob,
    corner_frame,
    down_choices,
    f_col,
    f_row,
    forward_prob,
    forward_prob_hall_littlewood,
    forward_prob_qwhittaker,
    interpolation_prob,
    interpolation_prob_limit,
    jack_forward_prob,
    mu_of,
    nu_of,
    rset_of,
    sset_of,
    tau_exponents,
    path_exponents,
    tau_monomial,
    up_choices,
    weight_ratio,
)
from qtrsk.partitions import compatible_pairs
from qtrsk.exact import parse_alpha


def test_frame_points_for_two_one():
    f = corner_frame((2, 1), (2, 1))
    assert f.d == 2
    assert f.S == (Monomial(1, 0), Monomial(2, 1), Monomial(3, 2))
    assert f.R[1:] == (Monomial(2, 0), Monomial(3, 1))
    assert f.I[1:] == (Monomial(1, 1), Monomial(2, 2))
    assert f.chain_holds()


def test_subset_maps_invert():
    f = corner_frame((2, 1), (2, 1))
    assert mu_of(f, (2,)) == (2,)
    assert mu_of(f, (1,)) == (1, 1)
    assert nu_of(f, (0, 2)) == (3, 1, 1)
    for R in [(), (1,), (2,), (1, 2)]:
        assert rset_of(f, mu_of(f, R)) == R
    for S in combinations(range(3), 2):
        assert sset_of(f, nu_of(f, S)) == S


def test_three_probabilities_of_the_two_one_frame():
    f = corner_frame((2, 1), (2, 1))
    assert forward_prob(f, (2,), (0, 1)) == parse_qt("q*(1-t)^2*(1-q)/((1-q^2*t^2)*(1-q*t)*(1-q^2))")
    assert forward_prob(f, (2,), (1, 2)) == parse_qt("t*(1-q)*(1-q^2*t)^2/((1-q*t)*(1-q^2*t^2)*(1-q^2))")
    assert forward_prob(f, (2,), (0, 2)) == parse_qt("(1-t)*(1-q^2*t)*(1-q)/((1-q*t)^2*(1-q^2))")


def test_single_cell_frame():
    f = corner_frame((1,), (1,))
    assert forward_prob(f, (), (1,)) == parse_qt("t*(1-q)/(1-q*t)")
    assert forward_prob(f, (), (0,)) == parse_qt("(1-t)/(1-q*t)")
    assert forward_prob(f, (1,), (0, 1)) == ONE


@pytest.mark.parametrize("lam,rho", compatible_pairs(5))
def test_rows_sum_to_one_and_weights_balance(lam, rho):
    f = corner_frame(lam, rho)
    d = f.d
    for k in range(d + 2):
        for kr in (k - 1, k):
            if not 0 <= kr <= d:
                continue
            for R in combinations(range(1, d + 1), kr):
                assert QTSum(forward_prob(f, R, S) for S in combinations(range(d + 1), k)).equals(ONE)
                for S in combinations(range(d + 1), k):
                    p, pb = forward_prob(f, R, S), backward_prob(f, R, S)
                    assert p * weight_ratio(mu_of(f, R), lam, rho, nu_of(f, S)) == pb
                    assert alpha_beta_gamma_prob(f, R, S) == p
                    assert alpha_beta_gamma_prob(f, R, S, "backward") == pb
                    assert tau_exponents(d, R, S) == path_exponents(d, R, S)
                    if not p.is_zero:
                        assert p.mono == tau_monomial(f, R, S)
        for S in combinations(range(d + 1), k):
            # the backward row runs over both values of the matrix entry
            tot = QTSum(
                backward_prob(f, R, S) for kr in (k - 1, k) if 0 <= kr <= d for R in combinations(range(1, d + 1), kr)
            )
            assert tot.equals(ONE)


def test_tau_exponents_of_a_long_frame():
    got = {k: v for k, v in tau_exponents(8, (1, 4, 8), (2, 4, 5, 7)).items() if v}
    assert got == {
        ("S", 2): 1, ("R", 1): -1, ("S", 4): 1, ("R", 4): -1, ("S", 7): -1, ("R", 8): 1,
        ("O", 0): -1, ("I", 3): 1, ("O", 1): -2, ("I", 2): 2, ("O", 3): -1, ("I", 5): 1,
    }


def test_choices_are_distributions():
    ups = up_choices((2, 1), (2, 1), (2,), 1)
    assert QTSum(p for _, p in ups).equals(ONE)
    downs = down_choices((2, 1), (2, 1), (3, 1, 1), 0) + down_choices((2, 1), (2, 1), (3, 1, 1), 1)
    assert QTSum(p for _, p in downs).equals(ONE)


def test_deterministic_rules():
    # nothing removed: the row rule adds the lowest corner, the column rule the highest
    assert f_row((1,), (1,), 1, (1,)) == (2,)
    assert f_col((1,), (1,), 1, (1,)) == (1, 1)
    # the removed corner moves up a row (row rule) or right a column (column rule)
    assert f_row((1,), (1,), 1, ()) == (1, 1)
    assert f_col((1,), (1,), 1, ()) == (2,)
    assert f_row((), (), 1, ()) == (1,)
    assert f_col((), (), 1, ()) == (1,)


def test_degenerations_match_limits():
    for lam, rho in compatible_pairs(5):
        f = corner_frame(lam, rho)
        for k in range(f.d + 2):
            for R in combinations(range(1, f.d + 1), min(k, f.d)):
                for S in combinations(range(f.d + 1), k):
                    if len(R) not in (k, k - 1):
                        continue
                    p = forward_prob(f, R, S)
                    assert forward_prob_qwhittaker(f, R, S) == qt_limit(p, "t->0")
                    assert forward_prob_hall_littlewood(f, R, S) == qt_limit(p, "q->0")


def test_shift_only_vanishing_counterexample():
    f = corner_frame((1,), (1,))
    p = forward_prob(f, (), (1,))
    assert qt_limit(p, "t->0") == ZERO
    assert forward_prob_qwhittaker(f, (), (1,)) == ZERO
    # the shift test alone misses this zero and returns 1 - q
    assert forward_prob_qwhittaker(f, (), (1,), vanishing="shift") == parse_qt("1-q")
    with pytest.raises(ValueError):
        forward_prob_qwhittaker(f, (), (1,), vanishing="other")


def test_jack_limit_of_a_rule():
    f = corner_frame((1,), (1,))
    assert jack_forward_prob(f, (), (1,)) == parse_alpha("alpha/(alpha+1)")


def test_interpolation_rows_sum_to_one():
    a = [Fraction(1), Fraction(5, 2), Fraction(-3)]
    b = [Fraction(7), Fraction(-1, 3), Fraction(4)]
    for k in (1, 2, 3):
        for R in combinations(range(3), k):
            assert sum(interpolation_prob(R, S, a, b) for S in combinations(range(3), k)) == 1
    # the b_0 -> oo limit also sums to one
    for k in (1, 2):
        for R in combinations(range(3), k):
            assert sum(interpolation_prob_limit(R, S, a, b) for S in combinations(range(3), k)) == 1


def test_row_and_column_maps_on_a_large_pair():
    from qtrsk.local_rules import f_col_indices, f_row_indices

    f = corner_frame((9, 9, 7, 5, 5, 4, 2), (10, 7, 7, 6, 6, 2, 2, 1))
    assert f.d == 2
    # row rule: corner i -> addable i, nothing removed -> addable 0 (lowest)
    assert [f_row_indices(2, 1, R) for R in [(1,), (2,), ()]] == [(1,), (2,), (0,)]
    # column rule: corner i -> addable i - 1, nothing removed -> addable d (left-most)
    assert [f_col_indices(2, 1, R) for R in [(1,), (2,), ()]] == [(0,), (1,), (2,)]
