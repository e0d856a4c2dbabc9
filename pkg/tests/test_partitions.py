from math import comb

import pytest

from qtrsk.errors import CellOutsideShape, IncompatiblePair, NotContained, ParseError
from qtrsk.exact import ONE, parse_qt, qt_eval
from qtrsk.partitions import (
    Cell,
    D_k,
    U_k,
    addable_outer_corners,
    arm,
    b_ratio,
    cells,
    compatible_pairs,
    conjugate,
    contains,
    format_partition,
    hook,
    hook_lower,
    hook_upper,
    inner_corners,
    intersect,
    is_compatible,
    is_horizontal_strip,
    is_vertical_strip,
    leg,
    parse_cell,
    parse_partition,
    partitions_of,
    removable_inner_corners,
    skew_cell_sets,
    union,
)

FIG_LAM = (9, 9, 7, 5, 5, 4, 2)
FIG_RHO = (10, 7, 7, 6, 6, 2, 2, 1)


def test_parse_and_format():
    assert parse_partition("9,9,7,5,5,4,2") == FIG_LAM
    assert parse_partition("") == ()
    assert parse_partition("-") == ()
    assert format_partition((3, 1)) == "3,1"
    assert parse_cell("(2,1)") == Cell(2, 1)
    with pytest.raises(ParseError):
        parse_partition("1,3")
    with pytest.raises(ParseError):
        parse_partition("2,x")


def test_conjugate():
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((7, 6, 3, 2, 1, 1)) == (6, 4, 3, 2, 2, 2, 1)
    assert conjugate(()) == ()


def test_strips():
    assert is_horizontal_strip((2,), (3, 1))
    assert is_horizontal_strip((1,), (3, 1))
    assert not is_vertical_strip((1,), (3, 1))
    assert is_horizontal_strip((2, 1), (2, 1)) and is_vertical_strip((2, 1), (2, 1))
    assert not is_horizontal_strip((3,), (2, 1))


def test_arm_leg_hook():
    lam = (7, 6, 3, 2, 1, 1)
    c = Cell(2, 1)
    assert (arm(lam, c), leg(lam, c), hook(lam, c)) == (5, 3, 9)
    assert (arm((4,), Cell(4, 1)), leg((4,), Cell(4, 1)), hook((4,), Cell(4, 1))) == (0, 0, 1)
    assert (arm((2, 1), Cell(1, 1)), leg((2, 1), Cell(1, 1)), hook((2, 1), Cell(1, 1))) == (1, 1, 3)
    with pytest.raises(CellOutsideShape):
        arm((2, 1), Cell(2, 2))


def test_qt_hooks():
    c = Cell(1, 1)
    assert hook_lower((2, 1), c) == parse_qt("1-q*t^2")
    assert hook_upper((2, 1), c) == parse_qt("1-q^2*t")
    assert b_ratio((2, 1), c) == parse_qt("(1-q*t^2)/(1-q^2*t)")
    assert hook_lower((2, 1), Cell(3, 3)) == ONE
    assert b_ratio((2, 1), Cell(2, 1)) == parse_qt("(1-t)/(1-q)")


def test_skew_cell_sets():
    s = skew_cell_sets((2,), ())
    assert set(s.r_cells) == {Cell(1, 1), Cell(2, 1)}
    assert set(s.c_cells) == {Cell(1, 1), Cell(2, 1)}
    s = skew_cell_sets((2, 1), (2, 1))
    assert not s.r_cells and not s.c_cells
    with pytest.raises(NotContained):
        skew_cell_sets((1,), (2,))


def test_removable_corners_of_two_shapes():
    assert intersect(FIG_LAM, FIG_RHO) == (9, 7, 7, 5, 5, 2, 2)
    # the corners of the intersection are (9,1), (7,3), (5,5), (2,7); two are removable
    assert removable_inner_corners(FIG_LAM, FIG_RHO) == (Cell(7, 3), Cell(2, 7))
    assert len(addable_outer_corners(FIG_LAM, FIG_RHO)) == 3


def test_corners_small():
    assert removable_inner_corners((2, 1), (2, 1)) == (Cell(2, 1), Cell(1, 2))
    assert addable_outer_corners((2, 1), (2, 1)) == (Cell(3, 1), Cell(2, 2), Cell(1, 3))
    assert removable_inner_corners((4,), (4,)) == (Cell(4, 1),)
    assert addable_outer_corners((), ()) == (Cell(1, 1),)
    with pytest.raises(IncompatiblePair):
        removable_inner_corners((1, 1), ())


def test_set_enumerators():
    assert set(U_k((2, 1), (2, 1), 1)) == {(3, 1), (2, 2), (2, 1, 1)}
    assert set(D_k((2, 1), (2, 1), 1)) == {(1, 1), (2,)}
    assert U_k((2, 1), (2, 1), 0) == [union((2, 1), (2, 1))]
    assert D_k((2, 1), (2, 1), 0) == [(2, 1)]
    assert U_k((2, 1), (2, 1), 4) == []


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_compatible_pair_invariants():
    for lam, rho in compatible_pairs(7):
        d = len(removable_inner_corners(lam, rho))
        assert len(addable_outer_corners(lam, rho)) == d + 1
        for k in range(d + 2):
            assert len(U_k(lam, rho, k)) == comb(d + 1, k)
            assert len(D_k(lam, rho, k)) == comb(d, k)
        assert is_compatible(lam, rho)


def test_shape_invariants():
    for n in range(7):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam
            assert sum(conjugate(lam)) == n
            for c in cells(lam):
                assert (hook(lam, c) == 1) == (c in inner_corners(lam))
                assert qt_eval(b_ratio(lam, c), 3, 3) == 1
            for mu in partitions_of(n - 1) if n else ():
                if contains(mu, lam):
                    assert is_horizontal_strip(mu, lam) == is_vertical_strip(conjugate(mu), conjugate(lam))
