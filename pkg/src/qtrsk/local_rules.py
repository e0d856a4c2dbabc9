"""Local probabilistic growth rules for one square (mu, lam, rho, nu).

The corner frame of a compatible pair (lam, rho) attaches lattice points to
the removable inner corners of lam & rho (indices 1..d) and to the addable
outer corners of lam | rho (indices 0..d), both counted bottom to top.
A cell (c, r) in French coordinates has lower-right point (W - c + 1, r - 1)
and upper-left point (W - c, r), with W = (lam | rho)_1 + 1; the point (x, y)
stands for the monomial q^x t^y.

  R_i   lower-right point of removable corner i
  I_i   upper-left point of removable corner i
  S_j   lower-right point of addable corner j  (also called O_j)
  Sbar_j upper-left point of addable corner j
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import EqualPoints, IncomparablePoints, NotDecomposable
from .exact import (
    ONE,
    ZERO,
    AlphaRational,
    Monomial,
    QTFactored,
    qt_jack_limit,
    qt_limit,
    qt_prod,
)
from .partitions import (
    Cell,
    Partition,
    add_cells,
    addable_outer_corners,
    conjugate,
    contains,
    format_partition,
    hook_lower,
    hook_upper,
    b_ratio,
    cells,
    intersect,
    is_horizontal_strip,
    is_vertical_strip,
    remove_cells,
    removable_inner_corners,
    skew_cell_sets,
    skew_cells,
    union,
)
from .weights import omega, omega_bar

Subset = tuple[int, ...]


# --------------------------------------------------------------------------
# Frames


@dataclass(frozen=True)
class CornerFrame:
    lam: Partition
    rho: Partition
    d: int
    R: tuple[Monomial, ...]  # index 0 unused
    Ibar: tuple[Monomial, ...]  # index 0 unused
    S: tuple[Monomial, ...]
    Sbar: tuple[Monomial, ...]
    removable: tuple[Cell, ...]
    addable: tuple[Cell, ...]

    @property
    def I(self) -> tuple[Monomial, ...]:  # noqa: E743
        return self.Ibar

    @property
    def O(self) -> tuple[Monomial, ...]:  # noqa: E743
        return self.S

    def to_json(self) -> dict:
        def pts(seq, start):
            return [[p.eq, p.et] for p in seq[start:]]

        return {
            "lambda": list(self.lam),
            "rho": list(self.rho),
            "d": self.d,
            "R": pts(self.R, 1),
            "I": pts(self.Ibar, 1),
            "Rbar": pts(self.Ibar, 1),
            "S": pts(self.S, 0),
            "O": pts(self.S, 0),
            "Sbar": pts(self.Sbar, 0),
        }

    def chain_holds(self) -> bool:
        """O_0 < I_1 < O_1 < ... < I_d < O_d, also with R for I or Sbar for O."""
        for inner, outer in ((self.Ibar, self.S), (self.R, self.S), (self.Ibar, self.Sbar)):
            pts = [outer[0]]
            for j in range(1, self.d + 1):
                pts += [inner[j], outer[j]]
            if not all(_strictly_below(a, b) for a, b in zip(pts, pts[1:])):
                return False
        return True


def _strictly_below(a: Monomial, b: Monomial) -> bool:
    return a.eq <= b.eq and a.et <= b.et and a != b


@lru_cache(maxsize=None)
def corner_frame(lam: Partition, rho: Partition) -> CornerFrame:
    rem = removable_inner_corners(lam, rho)
    add = addable_outer_corners(lam, rho)
    u = union(lam, rho)
    W = (u[0] if u else 0) + 1

    def lower_right(c: Cell) -> Monomial:
        return Monomial(W - c.x + 1, c.y - 1)

    def upper_left(c: Cell) -> Monomial:
        return Monomial(W - c.x, c.y)

    pad = (Monomial(0, 0),)
    return CornerFrame(
        lam=lam,
        rho=rho,
        d=len(rem),
        R=pad + tuple(lower_right(c) for c in rem),
        Ibar=pad + tuple(upper_left(c) for c in rem),
        S=tuple(lower_right(c) for c in add),
        Sbar=tuple(upper_left(c) for c in add),
        removable=rem,
        addable=add,
    )


def mu_of(f: CornerFrame, Rset: Iterable[int]) -> Partition:
    Rset = tuple(Rset)
    if any(not 1 <= r <= f.d for r in Rset):
        raise NotDecomposable(f"removable index out of range in {Rset}")
    return remove_cells(intersect(f.lam, f.rho), [f.removable[r - 1] for r in Rset])


def nu_of(f: CornerFrame, Sset: Iterable[int]) -> Partition:
    Sset = tuple(Sset)
    if any(not 0 <= s <= f.d for s in Sset):
        raise NotDecomposable(f"addable index out of range in {Sset}")
    return add_cells(union(f.lam, f.rho), [f.addable[s] for s in Sset])


def rset_of(f: CornerFrame, mu: Partition) -> Subset:
    base = intersect(f.lam, f.rho)
    if not contains(mu, base):
        raise NotDecomposable(f"{format_partition(mu)} is not inside {format_partition(base)}")
    idx = {c: i for i, c in enumerate(f.removable, 1)}
    out = []
    for c in skew_cells(base, mu):
        if c not in idx:
            raise NotDecomposable(f"cell {c} is not a removable corner")
        out.append(idx[c])
    return tuple(sorted(out))


def sset_of(f: CornerFrame, nu: Partition) -> Subset:
    base = union(f.lam, f.rho)
    if not contains(base, nu):
        raise NotDecomposable(f"{format_partition(nu)} does not contain {format_partition(base)}")
    idx = {c: j for j, c in enumerate(f.addable)}
    out = []
    for c in skew_cells(nu, base):
        if c not in idx:
            raise NotDecomposable(f"cell {c} is not an addable corner")
        out.append(idx[c])
    return tuple(sorted(out))


def valid_pair(f: CornerFrame, Rset: Subset, Sset: Subset) -> bool:
    return len(Sset) - len(Rset) in (0, 1)


# --------------------------------------------------------------------------
# Probabilities


class _Builder:
    """Accumulates a product of point differences into a QTFactored."""

    __slots__ = ("coeff", "mx", "my", "fac", "zero")

    def __init__(self) -> None:
        self.coeff = 1
        self.mx = 0
        self.my = 0
        self.fac: dict[tuple[int, int], int] = {}
        self.zero = False

    def diff(self, p1: Monomial, p2: Monomial, sign: int) -> None:
        """Multiply by (p1 - p2)^sign."""
        dx = p2[0] - p1[0]
        dy = p2[1] - p1[1]
        if dx >= 0 and dy >= 0:
            if dx == 0 and dy == 0:
                if sign > 0:
                    self.zero = True
                    return
                raise EqualPoints(f"division by {tuple(p1)} - {tuple(p2)}")
            self.mx += sign * p1[0]
            self.my += sign * p1[1]
            key = (dx, dy)
        elif dx <= 0 and dy <= 0:
            self.coeff = -self.coeff
            self.mx += sign * p2[0]
            self.my += sign * p2[1]
            key = (-dx, -dy)
        else:
            raise IncomparablePoints(f"{tuple(p1)} and {tuple(p2)}")
        self.fac[key] = self.fac.get(key, 0) + sign

    def mono(self, p: Monomial, sign: int) -> None:
        self.mx += sign * p[0]
        self.my += sign * p[1]

    def one_minus(self, m: Monomial, sign: int) -> None:
        """Multiply by (1 - m)^sign."""
        self.diff(Monomial(0, 0), m, sign)

    def result(self) -> QTFactored:
        if self.zero:
            return ZERO
        return QTFactored._make(
            Fraction(self.coeff),
            Monomial(self.mx, self.my),
            tuple(sorted((k, e) for k, e in self.fac.items() if e)),
        )


def _p(f: CornerFrame, Rset: Subset, Sset: Subset, Spts, Rpts) -> QTFactored:
    d = f.d
    I, O = f.Ibar, f.S
    Rc = [i for i in range(1, d + 1) if i not in Rset]
    Sc = [j for j in range(d + 1) if j not in Sset]
    b = _Builder()
    for s in Sset:
        for i in Rc:
            b.diff(Spts[s], I[i], 1)
        for j in Sc:
            b.diff(Spts[s], O[j], -1)
    for r in Rset:
        for j in Sc:
            b.diff(Rpts[r], O[j], 1)
        for i in Rc:
            b.diff(Rpts[r], I[i], -1)
    return b.result()


def _check_pair(f: CornerFrame, Rset: Subset, Sset: Subset) -> None:
    if not valid_pair(f, Rset, Sset):
        raise ValueError(f"|S| - |R| must be 0 or 1, got R={Rset}, S={Sset}")
    if any(not 1 <= r <= f.d for r in Rset) or any(not 0 <= s <= f.d for s in Sset):
        raise ValueError(f"index out of range: R={Rset}, S={Sset}, d={f.d}")


@lru_cache(maxsize=1 << 18)
def _forward_cached(lam: Partition, rho: Partition, Rset: Subset, Sset: Subset) -> QTFactored:
    f = corner_frame(lam, rho)
    _check_pair(f, Rset, Sset)
    return _p(f, Rset, Sset, f.S, f.R)


@lru_cache(maxsize=1 << 18)
def _backward_cached(lam: Partition, rho: Partition, Rset: Subset, Sset: Subset) -> QTFactored:
    f = corner_frame(lam, rho)
    _check_pair(f, Rset, Sset)
    return _p(f, Rset, Sset, f.Sbar, f.Ibar)


def forward_prob(f: CornerFrame, Rset: Iterable[int], Sset: Iterable[int]) -> QTFactored:
    """p_{R,S}: probability of mu^(R) -> nu^(S)."""
    return _forward_cached(f.lam, f.rho, tuple(sorted(Rset)), tuple(sorted(Sset)))


def backward_prob(f: CornerFrame, Rset: Iterable[int], Sset: Iterable[int]) -> QTFactored:
    """pbar_{R,S}: probability of mu^(R) <- nu^(S)."""
    return _backward_cached(f.lam, f.rho, tuple(sorted(Rset)), tuple(sorted(Sset)))


def square_forward(mu: Partition, lam: Partition, rho: Partition, nu: Partition) -> QTFactored:
    f = corner_frame(lam, rho)
    return forward_prob(f, rset_of(f, mu), sset_of(f, nu))


def square_backward(mu: Partition, lam: Partition, rho: Partition, nu: Partition) -> QTFactored:
    f = corner_frame(lam, rho)
    return backward_prob(f, rset_of(f, mu), sset_of(f, nu))


@lru_cache(maxsize=1 << 16)
def up_choices(lam: Partition, rho: Partition, mu: Partition, a: int) -> tuple:
    """[(nu, forward probability)] for a square with NW corner mu and entry a."""
    f = corner_frame(lam, rho)
    Rset = rset_of(f, mu)
    k = len(Rset) + a
    out = []
    for Sset in combinations(range(f.d + 1), k):
        p = forward_prob(f, Rset, Sset)
        if not p.is_zero:
            out.append((nu_of(f, Sset), p))
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def down_choices(lam: Partition, rho: Partition, nu: Partition, a: int) -> tuple:
    """[(mu, backward probability)] for a square with SE corner nu and entry a."""
    f = corner_frame(lam, rho)
    Sset = sset_of(f, nu)
    k = len(Sset) - a
    out = []
    if k < 0:
        return ()
    for Rset in combinations(range(1, f.d + 1), k):
        p = backward_prob(f, Rset, Sset)
        if not p.is_zero:
            out.append((mu_of(f, Rset), p))
    return tuple(out)


# --------------------------------------------------------------------------
# tau via lattice paths


def lattice_heights(d: int, Rset: Subset, Sset: Subset) -> tuple[dict[int, int], dict[int, int]]:
    """Heights u_i (start of U_i) and d_j (end of D_j) on the two paths.

    The letters D_0 U_1 D_1 ... U_d D_d are split into the path of
    {U_r : r in R} and {D_s : s in S} and its complement; both paths end at
    height 0.
    """
    word = [("D", 0)]
    for i in range(1, d + 1):
        word += [("U", i), ("D", i)]
    u: dict[int, int] = {}
    dd: dict[int, int] = {}
    for first in (True, False):
        steps = [
            (kind, idx)
            for kind, idx in word
            if ((kind == "U" and idx in Rset) or (kind == "D" and idx in Sset)) == first
        ]
        h = sum(1 if kind == "D" else -1 for kind, _ in steps)  # start so that the end is 0
        for kind, idx in steps:
            if kind == "U":
                u[idx] = h
                h += 1
            else:
                h -= 1
                dd[idx] = h
    return u, dd


def tau_monomial(f: CornerFrame, Rset: Iterable[int], Sset: Iterable[int]) -> Monomial:
    """prod S_s^{d_s} R_r^{-u_r} O_j^{d_j} I_i^{-u_i} from the lattice paths."""
    Rset, Sset = tuple(sorted(Rset)), tuple(sorted(Sset))
    u, dd = lattice_heights(f.d, Rset, Sset)
    x = y = 0
    for j in range(f.d + 1):
        p = f.S[j]  # S_j and O_j coincide for the forward rule
        x += dd[j] * p.eq
        y += dd[j] * p.et
    for i in range(1, f.d + 1):
        p = f.R[i] if i in Rset else f.Ibar[i]
        x -= u[i] * p.eq
        y -= u[i] * p.et
    return Monomial(x, y)


def tau_exponents(d: int, Rset: Subset, Sset: Subset) -> dict[tuple[str, int], int]:
    """Closed-form exponents of S_s, R_r, O_j, I_i in tau (signs dropped)."""
    Rc = [i for i in range(1, d + 1) if i not in Rset]
    Sc = [j for j in range(d + 1) if j not in Sset]
    out = {}
    for s in Sset:
        out[("S", s)] = sum(i > s for i in Rc) - sum(j > s for j in Sc)
    for r in Rset:
        out[("R", r)] = sum(j >= r for j in Sc) - sum(i > r for i in Rc)
    for j in Sc:
        out[("O", j)] = sum(r > j for r in Rset) - sum(s > j for s in Sset)
    for i in Rc:
        out[("I", i)] = sum(s >= i for s in Sset) - sum(r > i for r in Rset)
    return out


def path_exponents(d: int, Rset: Subset, Sset: Subset) -> dict[tuple[str, int], int]:
    """Exponents of S_s, R_r, O_j, I_i in tau read off the lattice paths."""
    u, dd = lattice_heights(d, Rset, Sset)
    out = {}
    for j in range(d + 1):
        out[("S" if j in Sset else "O", j)] = dd[j]
    for i in range(1, d + 1):
        out[("R" if i in Rset else "I", i)] = -u[i]
    return out


# --------------------------------------------------------------------------
# Hook-length oracle



def alpha_beta_gamma_prob(
    f: CornerFrame, Rset: Iterable[int], Sset: Iterable[int], direction: str = "forward"
) -> QTFactored:
    """tau * alpha beta / gamma (forward) or tau * alphabar betabar / gamma."""
    Rset, Sset = tuple(sorted(Rset)), tuple(sorted(Sset))
    lam, rho = f.lam, f.rho
    mu, nu = mu_of(f, Rset), nu_of(f, Sset)
    kap, uni = intersect(lam, rho), union(lam, rho)
    if direction == "forward":
        lo, up = hook_lower, hook_upper
    elif direction == "backward":
        lo, up = hook_upper, hook_lower
    else:
        raise ValueError(f"unknown direction {direction!r}")
    plus = skew_cell_sets(nu, uni)
    minus = skew_cell_sets(kap, mu)
    uni_rho = skew_cell_sets(uni, rho)
    uni_lam = skew_cell_sets(uni, lam)
    lam_kap = skew_cell_sets(lam, kap)
    rho_kap = skew_cell_sets(rho, kap)
    alpha = qt_prod(
        [lo(lam, c) / lo(nu, c) for c in plus.r_cells - uni_rho.c_cells]
        + [up(rho, c) / up(nu, c) for c in plus.c_cells - uni_lam.r_cells]
    )
    beta = qt_prod(
        [lo(rho, c) / lo(mu, c) for c in minus.r_cells - lam_kap.c_cells]
        + [up(lam, c) / up(mu, c) for c in minus.c_cells - rho_kap.r_cells]
    )
    gnum = qt_prod(
        [hook_lower(lam, c) * hook_upper(lam, c) for c in plus.r_cells & minus.c_cells]
        + [hook_lower(rho, c) * hook_upper(rho, c) for c in plus.c_cells & minus.r_cells]
    )
    gden = qt_prod(
        [hook_lower(nu, c) * hook_upper(nu, c) for c in plus.r_cells & plus.c_cells]
        + [hook_lower(mu, c) * hook_upper(mu, c) for c in minus.r_cells & minus.c_cells]
    )
    tau = tau_monomial(f, Rset, Sset)
    return QTFactored(1, tau) * alpha * beta * gden / gnum


# --------------------------------------------------------------------------
# Weight ratios


def weight_ratio_direct(mu: Partition, lam: Partition, rho: Partition, nu: Partition) -> QTFactored:
    return omega(lam, rho, mu) / omega_bar(lam, rho, nu)


def weight_ratio_reorganized(
    mu: Partition, lam: Partition, rho: Partition, nu: Partition
) -> QTFactored:
    """The same ratio as a product over the cells of the four skew pieces."""
    kap, uni = intersect(lam, rho), union(lam, rho)
    minus = skew_cell_sets(kap, mu)
    plus = skew_cell_sets(nu, uni)
    return qt_prod(
        [b_ratio(mu, c) / b_ratio(rho, c) for c in minus.r_cells - skew_cell_sets(lam, kap).c_cells]
        + [b_ratio(lam, c) / b_ratio(mu, c) for c in minus.c_cells - skew_cell_sets(rho, kap).r_cells]
        + [b_ratio(nu, c) / b_ratio(lam, c) for c in plus.r_cells - skew_cell_sets(uni, rho).c_cells]
        + [b_ratio(rho, c) / b_ratio(nu, c) for c in plus.c_cells - skew_cell_sets(uni, lam).r_cells]
    )


def weight_ratio(mu: Partition, lam: Partition, rho: Partition, nu: Partition) -> QTFactored:
    """omega(mu) / omegabar(nu); the direct form is returned."""
    _check_square(mu, lam, rho, nu)
    return weight_ratio_direct(mu, lam, rho, nu)


def _check_square(mu, lam, rho, nu) -> None:
    ok = (
        is_horizontal_strip(mu, lam)
        and is_vertical_strip(mu, rho)
        and is_vertical_strip(lam, nu)
        and is_horizontal_strip(rho, nu)
    )
    if not ok:
        raise ValueError(
            "square must satisfy mu < lam <' nu and mu <' rho < nu: "
            + ", ".join(map(format_partition, (mu, lam, rho, nu)))
        )


def cell_type(mu, lam, rho, nu, c: Cell) -> tuple[frozenset[str], frozenset[str]]:
    """Row and column type of c among the pieces lam, rho, '-', '+'."""
    kap, uni = intersect(lam, rho), union(lam, rho)
    pieces = {
        "lam": skew_cells(lam, kap),
        "rho": skew_cells(rho, kap),
        "-": skew_cells(kap, mu),
        "+": skew_cells(nu, uni),
    }
    rows = frozenset(k for k, cs in pieces.items() if any(x.y == c.y for x in cs))
    cols = frozenset(k for k, cs in pieces.items() if any(x.x == c.x for x in cs))
    return rows, cols


def cell_weight_table(mu, lam, rho, nu, c: Cell) -> QTFactored:
    """Contribution of the cell c to the weight ratio, by its type."""
    rows, cols = cell_type(mu, lam, rho, nu, c)
    if rows == {"rho"} or cols == {"lam"}:
        return ONE
    out = ONE
    if "-" in rows:
        out = out * b_ratio(mu, c) / b_ratio(rho, c)
    if "+" in rows:
        out = out * b_ratio(nu, c) / b_ratio(lam, c)
    if "-" in cols:
        out = out * b_ratio(lam, c) / b_ratio(mu, c)
    if "+" in cols:
        out = out * b_ratio(rho, c) / b_ratio(nu, c)
    return out


def cell_weight_product(mu, lam, rho, nu) -> QTFactored:
    return qt_prod(cell_weight_table(mu, lam, rho, nu, c) for c in cells(nu))


# --------------------------------------------------------------------------
# Deterministic limits


def f_row_indices(d: int, k: int, Rset: Subset) -> Subset:
    if len(Rset) == k:
        return tuple(Rset)
    if len(Rset) == k - 1:
        return tuple(sorted(set(Rset) | {0}))
    raise ValueError(f"|R| must be k or k - 1 (k={k}, R={Rset})")


def f_col_indices(d: int, k: int, Rset: Subset) -> Subset:
    shifted = {r - 1 for r in Rset}
    if len(Rset) == k:
        return tuple(sorted(shifted))
    if len(Rset) == k - 1:
        return tuple(sorted(shifted | {d}))
    raise ValueError(f"|R| must be k or k - 1 (k={k}, R={Rset})")


def f_row(lam: Partition, rho: Partition, k: int, mu: Partition) -> Partition:
    """Dual row insertion: corner i goes to the next addable corner in a row above."""
    f = corner_frame(lam, rho)
    return nu_of(f, f_row_indices(f.d, k, rset_of(f, mu)))


def f_col(lam: Partition, rho: Partition, k: int, mu: Partition) -> Partition:
    """Dual column insertion: corner i goes to the next addable corner to the right."""
    f = corner_frame(lam, rho)
    return nu_of(f, f_col_indices(f.d, k, rset_of(f, mu)))


# --------------------------------------------------------------------------
# Specializations


def shift_set(d: int, A: Iterable[int], B: Iterable[int]) -> set[int]:
    """{i : |A & [i+1, d]| > |B & [i+1, d]|}."""
    A, B = set(A), set(B)
    return {i for i in range(d + 1) if sum(a > i for a in A) > sum(b > i for b in B)}


def _pure_q(m: Monomial) -> bool:
    return m.et == 0


def _pure_t(m: Monomial) -> bool:
    return m.eq == 0


def _check_vanishing(vanishing: str) -> None:
    if vanishing not in ("tau", "shift"):
        raise ValueError(f"unknown vanishing test {vanishing!r}")


def forward_prob_qwhittaker(
    f: CornerFrame, Rset: Iterable[int], Sset: Iterable[int], vanishing: str = "tau"
) -> QTFactored:
    """Closed form of the t = 0 specialization.

    The shift condition alone does not force vanishing (for lam = rho = (1),
    R = {}, S = {1} it holds yet the limit is 0), so by default the t-degree
    of tau decides vanishing; ``vanishing='shift'`` uses only the shift test.
    """
    _check_vanishing(vanishing)
    Rset, Sset = set(Rset), set(Sset)
    d = f.d
    R, I, S, O = f.R, f.Ibar, f.S, f.S
    alpha = {i for i in range(d) if (i + 1) in Rset and _pure_q(R[i + 1] / S[i])}
    sh = shift_set(d, Rset, Sset)
    if not sh <= alpha | {0}:
        return ZERO
    if vanishing == "tau" and tau_monomial(f, Rset, Sset).et > 0:
        return ZERO
    b = _Builder()
    for i in Sset - (Rset | {0}):
        b.one_minus(S[i] / I[i], 1)
    for i in alpha - Sset:
        b.one_minus(R[i + 1] / O[i], 1)
    for i in alpha - (Rset | {0}):
        b.one_minus(R[i + 1] / I[i], -1)
    for i in sh:
        b.mono(R[i + 1], 1)
        b.mono(S[i], -1)
    return qt_limit(b.result(), "t->0")


def forward_prob_hall_littlewood(
    f: CornerFrame, Rset: Iterable[int], Sset: Iterable[int], vanishing: str = "tau"
) -> QTFactored:
    """Closed form of the q = 0 specialization; vanishing as for t = 0."""
    _check_vanishing(vanishing)
    Rset, Sset = set(Rset), set(Sset)
    d = f.d
    R, I, S, O = f.R, f.Ibar, f.S, f.S
    Rc = set(range(1, d + 1)) - Rset
    Sc = set(range(d + 1)) - Sset
    beta = {i for i in range(d) if (i + 1) in Rc and _pure_t(I[i + 1] / O[i])}
    sh = shift_set(d, Rc, Sc)
    if not sh <= beta:
        return ZERO
    if vanishing == "tau" and tau_monomial(f, Rset, Sset).eq > 0:
        return ZERO
    b = _Builder()
    for i in Sset & beta:
        b.one_minus(I[i + 1] / S[i], 1)
    for i in Rset - Sset:
        b.one_minus(O[i] / R[i], 1)
    for i in Rset & beta:
        b.one_minus(I[i + 1] / R[i], -1)
    for i in sh:
        b.mono(I[i + 1], 1)
        b.mono(O[i], -1)
    return qt_limit(b.result(), "q->0")


def jack_forward_prob(f: CornerFrame, Rset: Iterable[int], Sset: Iterable[int]) -> AlphaRational:
    return qt_jack_limit(forward_prob(f, Rset, Sset))


def inversion_partner(mu, lam, rho, nu) -> tuple[Partition, Partition, Partition, Partition]:
    """The conjugated square (mu', rho', lam', nu') used by the inversion symmetry."""
    return conjugate(mu), conjugate(rho), conjugate(lam), conjugate(nu)


# --------------------------------------------------------------------------
# Interpolation


def interpolation_prob(Rset: Sequence[int], Sset: Sequence[int], a: Sequence, b: Sequence) -> Fraction:
    """p'_{R,S}(a, b) for R, S k-subsets of [0, d]."""
    d = len(a) - 1
    val = Fraction(1)
    for i in range(d + 1):
        if i not in Rset:
            for j in Sset:
                val *= a[j] - b[i]
            for j in Rset:
                val /= b[j] - b[i]
        if i not in Sset:
            for j in Rset:
                val *= b[j] - a[i]
            for j in Sset:
                val /= a[j] - a[i]
    return val


def interpolation_prob_limit(
    Rset: Sequence[int], Sset: Sequence[int], a: Sequence, b: Sequence
) -> Fraction:
    """The b_0 -> infinity limit of p'_{R,S}(a, b); b[0] is ignored."""
    d = len(a) - 1
    Rd = [r for r in Rset if r >= 1]
    val = Fraction(1)
    for i in range(1, d + 1):
        if i not in Rset:
            for j in Sset:
                val *= a[j] - b[i]
            for j in Rd:
                val /= b[j] - b[i]
    for i in range(d + 1):
        if i not in Sset:
            for j in Rd:
                val *= b[j] - a[i]
            for j in Sset:
                val /= a[j] - a[i]
    return val
