from fractions import Fraction

import pytest

from qtrsk.errors import ParameterOutOfRange, ShapeMismatch
from qtrsk.exact import parse_qt
from qtrsk.growth import Matrix01, all_matrices, backward_distribution, classical_dual_rsk
from qtrsk.sampling import (
    SplitMix64,
    check_parameter,
    choose,
    sample_backward,
    sample_forward,
    sample_many,
    value_at,
)
from qtrsk.weights import Tableau


def test_splitmix_reference_values():
    # reference outputs of splitmix64 seeded with 0
    rng = SplitMix64(0)
    assert rng.next() == 0xE220A8397B1DCDAF
    assert rng.next() == 0x6E789E6AA1B965F4


def test_choose_respects_zero_weights():
    rng = SplitMix64(1)
    for _ in range(200):
        assert choose(rng, [Fraction(0), Fraction(1, 2), Fraction(0), Fraction(1, 2)]) in (1, 3)


def test_parameter_range():
    assert check_parameter(Fraction(0), "q") == 0
    assert check_parameter(Fraction(3), "q") == 3
    with pytest.raises(ParameterOutOfRange):
        check_parameter(Fraction(1), "q")
    with pytest.raises(ParameterOutOfRange):
        check_parameter(Fraction(-1, 2), "t")


def test_value_at_zero_uses_limits():
    p = parse_qt("t*(1-q)/(1-q*t)")
    assert value_at(p, Fraction(1, 2), Fraction(0)) == 0
    assert value_at(parse_qt("(1-t)/(1-q*t)"), Fraction(0), Fraction(0)) == 1


def test_fixed_seed_is_deterministic():
    A = Matrix01.parse("101;010")
    runs = [sample_many(A, Fraction(1, 3), Fraction(1, 4), 42, 200) for _ in range(2)]
    assert runs[0] == runs[1]
    assert sum(runs[0].values()) == 200
    assert sample_forward(A, Fraction(1, 3), Fraction(1, 4), 9) == sample_forward(A, Fraction(1, 3), Fraction(1, 4), 9)


def test_zero_point_is_row_insertion():
    for A in all_matrices(2, 3):
        assert sample_forward(A, 0, 0, 5) == classical_dual_rsk(A, "row")


def test_backward_sample_lies_in_support():
    P = Tableau.parse("1,1;2")
    Q = Tableau.parse("1,2;3", "dual_ssyt")
    support = set(backward_distribution(P, Q, 2, 3).support())
    for seed in range(20):
        A = sample_backward(P, Q, Fraction(1, 3), Fraction(1, 4), seed, 2, 3)
        assert A in support
    with pytest.raises(ShapeMismatch):
        sample_backward(P, Tableau.parse("1,2", "dual_ssyt"), Fraction(1, 3), Fraction(1, 4), 0)
