import os
import subprocess
import sys
from fractions import Fraction

from hypothesis import given, strategies as st

from qtrsk import _pykernels, kernels

factor = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(1, 3)).filter(lambda f: f[:2] != (0, 0))
poly = st.dictionaries(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
    st.fractions(max_denominator=20).filter(lambda x: x != 0),
    max_size=6,
)


@given(st.lists(factor, max_size=4))
def test_expand_matches_fallback(factors):
    assert kernels.expand_binomials(factors) == _pykernels.expand_binomials(factors)


@given(poly, poly)
def test_mul_matches_fallback(a, b):
    assert kernels.poly_mul(a, b) == _pykernels.poly_mul(a, b)


@given(poly, poly, st.fractions(max_denominator=9), st.integers(-2, 2), st.integers(-2, 2))
def test_add_scaled_matches_fallback(acc, p, c, x, y):
    a1, a2 = dict(acc), dict(acc)
    kernels.add_scaled(a1, p, c, x, y)
    _pykernels.add_scaled(a2, p, c, x, y)
    assert a1 == a2
    assert all(v != 0 for v in a1.values())


def test_expand_single_binomial():
    assert _pykernels.expand_binomials([(1, 0, 2)]) == {(0, 0): 1, (1, 0): -2, (2, 0): 1}


def test_fallback_selected_by_environment():
    env = dict(os.environ, QTRSK_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import qtrsk.kernels as k; print(k.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
