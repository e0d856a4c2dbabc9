"""Seeded sampling of growths at a numeric point (q0, t0).

Uniform draws come from splitmix64. A draw u in [0, 2^64) selects the first
outcome whose cumulative probability c satisfies u < floor(c * 2^64), so each
choice is biased by less than 2^-64 relative to the exact probabilities.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import ParameterOutOfRange, ShapeMismatch
from .exact import QTFactored, qt_eval, qt_limit
from .growth import DualGrowth, Matrix01
from .local_rules import backward_prob, corner_frame, forward_prob, mu_of, nu_of, rset_of, sset_of
from .partitions import Partition
from .weights import Tableau

MASK64 = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator; state advances by the golden-ratio increment."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


def check_parameter(x: Fraction, name: str) -> Fraction:
    x = Fraction(x)
    if x < 0 or x == 1:
        raise ParameterOutOfRange(f"{name} = {x} must lie in [0, 1) or (1, oo)")
    return x


def value_at(p: QTFactored, q0: Fraction, t0: Fraction) -> Fraction:
    """p at (q0, t0); a zero coordinate is reached as the limit t -> 0 first, then q -> 0."""
    # after a limit the variable is gone, so any nonzero value can stand in for it
    if t0 == 0:
        p, t0 = qt_limit(p, "t->0"), Fraction(1)
    if q0 == 0:
        p, q0 = qt_limit(p, "q->0"), Fraction(1)
    return qt_eval(p, q0, t0)


@lru_cache(maxsize=1 << 16)
def _value(direction: str, lam: Partition, rho: Partition, R: tuple, S: tuple, q0: Fraction, t0: Fraction) -> Fraction:
    f = corner_frame(lam, rho)
    p = forward_prob(f, R, S) if direction == "forward" else backward_prob(f, R, S)
    return value_at(p, q0, t0)


def choose(rng: SplitMix64, weights: Sequence[Fraction]) -> int:
    """Index drawn with the given exact probabilities (which sum to 1)."""
    u = rng.next()
    cum = Fraction(0)
    last = max(i for i, w in enumerate(weights) if w)
    for i, w in enumerate(weights):
        if not w:
            continue
        cum += w
        if i == last or u < (cum.numerator << 64) // cum.denominator:
            return i
    raise AssertionError("unreachable")


def sample_forward_growth(A: Matrix01, q0, t0, rng: SplitMix64) -> DualGrowth:
    q0, t0 = check_parameter(q0, "q"), check_parameter(t0, "t")
    m, n = A.m, A.n
    grid: list[list[Partition]] = [[()] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            mu, lam, rho = grid[i - 1][j - 1], grid[i][j - 1], grid[i - 1][j]
            f = corner_frame(lam, rho)
            R = rset_of(f, mu)
            opts = list(combinations(range(f.d + 1), len(R) + A.entry(i, j)))
            w = [_value("forward", lam, rho, R, S, q0, t0) for S in opts]
            grid[i][j] = nu_of(f, opts[choose(rng, w)])
    return DualGrowth(tuple(tuple(r) for r in grid))


def sample_forward(A: Matrix01, q0, t0, seed: int) -> tuple[Tableau, Tableau]:
    G = sample_forward_growth(A, q0, t0, SplitMix64(seed))
    return G.P(), G.Q()


def sample_backward_growth(P: Tableau, Q: Tableau, m: int, n: int, q0, t0, rng: SplitMix64) -> DualGrowth:
    q0, t0 = check_parameter(q0, "q"), check_parameter(t0, "t")
    if P.shape != Q.shape:
        raise ShapeMismatch(f"P has shape {P.shape}, Q has shape {Q.shape}")
    grid: list[list] = [[()] * (n + 1) for _ in range(m + 1)]
    right, bottom = P.chain(m), Q.chain(n)
    for i in range(m + 1):
        grid[i][n] = right[i]
    for j in range(n + 1):
        grid[m][j] = bottom[j]
    for i in range(m, 0, -1):
        for j in range(n, 0, -1):
            lam, rho, nu = grid[i][j - 1], grid[i - 1][j], grid[i][j]
            f = corner_frame(lam, rho)
            S = sset_of(f, nu)
            opts = [R for a in (0, 1) if 0 <= len(S) - a <= f.d for R in combinations(range(1, f.d + 1), len(S) - a)]
            w = [_value("backward", lam, rho, R, S, q0, t0) for R in opts]
            grid[i - 1][j - 1] = mu_of(f, opts[choose(rng, w)])
    return DualGrowth(tuple(tuple(r) for r in grid))


def sample_backward(P: Tableau, Q: Tableau, q0, t0, seed: int, m: int | None = None, n: int | None = None) -> Matrix01:
    m = P.max_entry() if m is None else m
    n = Q.max_entry() if n is None else n
    return sample_backward_growth(P, Q, m, n, q0, t0, SplitMix64(seed)).matrix()


def sample_many(A: Matrix01, q0, t0, seed: int, count: int) -> dict[tuple[Tableau, Tableau], int]:
    """Frequencies of (P, Q) over count draws from one generator stream."""
    rng = SplitMix64(seed)
    out: dict = {}
    for _ in range(count):
        G = sample_forward_growth(A, q0, t0, rng)
        key = (G.P(), G.Q())
        out[key] = out.get(key, 0) + 1
    return out
