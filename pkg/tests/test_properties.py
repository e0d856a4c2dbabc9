from fractions import Fraction
from itertools import combinations

from hypothesis import assume, given, settings, strategies as st

from qtrsk.exact import ONE, QTFactored, QTSum, parse_qt, qt_eval, qt_jack_limit, qt_limit
from qtrsk.growth import Matrix01, backward_distribution, forward_distribution, transpose_symmetry_check
from qtrsk.local_rules import backward_prob, corner_frame, forward_prob, interpolation_prob, mu_of, nu_of, weight_ratio
from qtrsk.partitions import (
    compatible_pairs,
    conjugate,
    format_partition,
    is_horizontal_strip,
    is_vertical_strip,
    make_partition,
    parse_partition,
)
from qtrsk.weights import Tableau

PAIRS = compatible_pairs(7)

factors = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda k: k != (0, 0)),
    st.integers(-2, 2),
    max_size=4,
)
qtf = st.builds(
    QTFactored,
    st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(lambda c: c != 0),
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
    factors,
)
points = st.tuples(
    st.fractions(min_value=Fraction(1, 50), max_value=Fraction(49, 50), max_denominator=50),
    st.fractions(min_value=Fraction(1, 50), max_value=Fraction(49, 50), max_denominator=50),
)
partitions = st.lists(st.integers(1, 6), max_size=5).map(lambda xs: make_partition(sorted(xs, reverse=True)))
matrices = st.integers(1, 3).flatmap(
    lambda m: st.integers(1, 3).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=m, max_size=m)
    )
).map(lambda rows: Matrix01(tuple(map(tuple, rows))))


def _safe_eval(x, pt):
    try:
        return qt_eval(x, *pt)
    except Exception:
        return None


@given(qtf)
def test_pretty_text_parses_back(x):
    assert parse_qt(x.pretty()) == x


@given(qtf, qtf, points)
def test_evaluation_is_multiplicative(x, y, pt):
    a, b = _safe_eval(x, pt), _safe_eval(y, pt)
    assume(a is not None and b is not None)
    assert qt_eval(x * y, *pt) == a * b
    assert (x * y) / y == x


@given(st.lists(qtf, min_size=1, max_size=5), points)
def test_sum_matches_pointwise_sum(xs, pt):
    vals = [_safe_eval(x, pt) for x in xs]
    assume(all(v is not None for v in vals))
    s = QTSum(xs)
    assert s.evaluate(*pt) == sum(vals)
    s.add_sum(QTSum(xs), -1)
    assert s.is_zero()


@given(qtf)
def test_limits_commute_with_swapping_order_on_monomials(x):
    # t -> 0 then q -> 0 and the reverse agree whenever both exist
    try:
        a = qt_limit(qt_limit(x, "t->0"), "q->0")
        b = qt_limit(qt_limit(x, "q->0"), "t->0")
    except Exception:
        return
    assert a == b


@given(partitions)
def test_partition_text_and_conjugate(lam):
    assert parse_partition(format_partition(lam)) == lam
    assert conjugate(conjugate(lam)) == lam


@given(partitions, partitions)
def test_strip_duality(mu, lam):
    assert is_horizontal_strip(mu, lam) == is_vertical_strip(conjugate(mu), conjugate(lam))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(PAIRS), st.data())
def test_random_frame_rows_sum_to_one(pair, data):
    lam, rho = pair
    f = corner_frame(lam, rho)
    k = data.draw(st.integers(0, f.d + 1))
    kr = data.draw(st.sampled_from([x for x in (k - 1, k) if 0 <= x <= f.d]))
    R = tuple(sorted(data.draw(st.sets(st.integers(1, f.d), min_size=kr, max_size=kr)) if f.d else ()))
    assert QTSum(forward_prob(f, R, S) for S in combinations(range(f.d + 1), k)).equals(ONE)
    for S in combinations(range(f.d + 1), k):
        p = forward_prob(f, R, S)
        assert p * weight_ratio(mu_of(f, R), lam, rho, nu_of(f, S)) == backward_prob(f, R, S)
        if not p.is_zero:
            qt_jack_limit(p)


@settings(max_examples=25, deadline=None)
@given(matrices)
def test_random_matrix_distributions(A):
    d = forward_distribution(A)
    assert d.sums_to_one()
    for P, Q in d.support()[:3]:
        back = backward_distribution(P, Q, A.m, A.n)
        assert back.sums_to_one()
        assert A in back.support()
    if A.m * A.n <= 6:
        assert transpose_symmetry_check(A)


@settings(max_examples=40)
@given(
    st.integers(1, 3).flatmap(
        lambda d: st.lists(
            st.fractions(min_value=-20, max_value=20, max_denominator=9), min_size=2 * d + 2, max_size=2 * d + 2, unique=True
        )
    ),
    st.data(),
)
def test_interpolation_rows_sum_to_one(vals, data):
    d = len(vals) // 2 - 1
    a, b = vals[: d + 1], vals[d + 1 :]
    k = data.draw(st.integers(1, d + 1))
    R = tuple(sorted(data.draw(st.sets(st.integers(0, d), min_size=k, max_size=k))))
    assert sum(interpolation_prob(R, S, a, b) for S in combinations(range(d + 1), k)) == 1


@given(st.sampled_from(["1,1;2", "1,2,2;2,3;4", "1;2;3", "-", "1,1,1,3;2,4"]))
def test_tableau_text_roundtrip(text):
    T = Tableau.parse(text)
    assert Tableau.parse(T.text()) == T
    assert Tableau.from_chain(T.chain()) == T
