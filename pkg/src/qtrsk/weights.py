"""Macdonald branching coefficients, tableaux and finite-variable expansions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import combinations, product
from typing import Iterator

from .errors import (
    NotContained,
    NotHorizontalStrip,
    NotVerticalStrip,
    ParseError,
    ShapeMismatch,
)
from .exact import QTFactored, QTSum, qt_eval, qt_prod
from .partitions import (
    Partition,
    b_ratio,
    conjugate,
    contains,
    format_partition,
    is_horizontal_strip,
    is_vertical_strip,
    make_partition,
    part,
    partition_key,
    skew_cell_sets,
)

FLAVORS = ("ssyt", "dual_ssyt", "partial_syt")


# --------------------------------------------------------------------------
# Branching coefficients


@cache
def psi(lam: Partition, mu: Partition) -> QTFactored:
    """prod over R - C of b_mu(c) / b_lam(c) for the horizontal strip lam/mu."""
    if not is_horizontal_strip(mu, lam):
        raise NotHorizontalStrip(f"{format_partition(lam)}/{format_partition(mu)}")
    sets = skew_cell_sets(lam, mu)
    cs = sets.r_cells - sets.c_cells
    return qt_prod(b_ratio(mu, c) / b_ratio(lam, c) for c in cs)


@cache
def phi_star(rho: Partition, mu: Partition) -> QTFactored:
    """prod over C - R of b_rho(c) / b_mu(c) for the vertical strip rho/mu."""
    if not is_vertical_strip(mu, rho):
        raise NotVerticalStrip(f"{format_partition(rho)}/{format_partition(mu)}")
    sets = skew_cell_sets(rho, mu)
    cs = sets.c_cells - sets.r_cells
    return qt_prod(b_ratio(rho, c) / b_ratio(mu, c) for c in cs)


@cache
def phi(lam: Partition, mu: Partition) -> QTFactored:
    """prod over C of b_lam(c) / b_mu(c)."""
    if not contains(mu, lam):
        raise NotContained(f"{format_partition(mu)} is not contained in {format_partition(lam)}")
    sets = skew_cell_sets(lam, mu)
    return qt_prod(b_ratio(lam, c) / b_ratio(mu, c) for c in sets.c_cells)


def omega(lam: Partition, rho: Partition, mu: Partition) -> QTFactored:
    """Down-side weight psi_{lam/mu} phi*_{rho/mu}."""
    return psi(lam, mu) * phi_star(rho, mu)


def omega_bar(lam: Partition, rho: Partition, nu: Partition) -> QTFactored:
    """Up-side weight psi_{nu/rho} phi*_{nu/lam}."""
    return psi(nu, rho) * phi_star(nu, lam)


# --------------------------------------------------------------------------
# Tableaux


@dataclass(frozen=True)
class Tableau:
    """A filling given by its rows, bottom row first."""

    rows: tuple[tuple[int, ...], ...]
    flavor: str = "ssyt"

    def __post_init__(self) -> None:
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        rows = tuple(tuple(r) for r in self.rows if r)
        object.__setattr__(self, "rows", rows)
        make_partition(len(r) for r in rows)
        for r in rows:
            if any(v < 1 for v in r):
                raise ValueError("entries must be positive")
        strict_rows = self.flavor in ("dual_ssyt", "partial_syt")
        strict_cols = self.flavor in ("ssyt", "partial_syt")
        for r in rows:
            for a, b in zip(r, r[1:]):
                if a > b or (strict_rows and a == b):
                    raise ValueError(f"row {r} violates the {self.flavor} condition")
        for y in range(1, len(rows)):
            for x, v in enumerate(rows[y]):
                below = rows[y - 1][x]
                if v < below or (strict_cols and v == below):
                    raise ValueError(f"column {x + 1} violates the {self.flavor} condition")
        if self.flavor == "partial_syt":
            flat = [v for r in rows for v in r]
            if len(set(flat)) != len(flat):
                raise ValueError("partial standard tableaux have distinct entries")

    @classmethod
    def parse(cls, text: str, flavor: str = "ssyt") -> "Tableau":
        s = text.strip()
        if s in ("", "-", "∅"):
            return cls((), flavor)
        rows = []
        pos = 0
        for row in s.split(";"):
            entries = []
            for tok in row.split(","):
                if not tok.strip().isdigit():
                    raise ParseError("expected a positive integer entry", text, pos)
                entries.append(int(tok))
                pos += len(tok) + 1
            rows.append(tuple(entries))
        try:
            return cls(tuple(rows), flavor)
        except ValueError as exc:
            raise ParseError(str(exc), text, 0) from None

    @classmethod
    def from_chain(cls, chain, flavor: str = "ssyt") -> "Tableau":
        """Entry i fills chain[i] / chain[i-1]; chain[0] must be empty."""
        if chain and chain[0]:
            raise ShapeMismatch("a chain starts at the empty partition")
        final = chain[-1] if chain else ()
        rows = [[0] * v for v in final]
        for i in range(1, len(chain)):
            lo, hi = chain[i - 1], chain[i]
            if not contains(lo, hi):
                raise ShapeMismatch(f"chain is not increasing at step {i}")
            for y in range(1, len(hi) + 1):
                for x in range(part(lo, y) + 1, hi[y - 1] + 1):
                    rows[y - 1][x - 1] = i
        return cls(tuple(tuple(r) for r in rows), flavor)

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def max_entry(self) -> int:
        return max((v for r in self.rows for v in r), default=0)

    def chain(self, m: int | None = None) -> tuple[Partition, ...]:
        m = self.max_entry() if m is None else m
        if m < self.max_entry():
            raise ShapeMismatch(f"entries exceed {m}")
        return tuple(
            make_partition(sum(1 for v in r if v <= i) for r in self.rows) for i in range(m + 1)
        )

    def content(self, m: int | None = None) -> tuple[int, ...]:
        m = self.max_entry() if m is None else m
        return tuple(sum(r.count(i) for r in self.rows) for i in range(1, m + 1))

    def text(self) -> str:
        return ";".join(",".join(map(str, r)) for r in self.rows) if self.rows else "-"

    def __str__(self) -> str:
        return self.text()

    def sort_key(self) -> tuple:
        return (partition_key(self.shape), self.rows)


def tableau_weight(T: Tableau, kind: str = "psi", m: int | None = None) -> QTFactored:
    """psi_T, phi*_T or phi_T as the product over the chain of T."""
    chain = T.chain(m)
    if kind == "psi":
        f = psi
    elif kind == "phi_star":
        f = phi_star
    elif kind == "phi":
        f = phi
    else:
        raise ValueError(f"unknown weight kind {kind!r}")
    return qt_prod(f(chain[i], chain[i - 1]) for i in range(1, len(chain)))


# --------------------------------------------------------------------------
# Chains and finite-variable expansions


@cache
def horizontal_strips_below(lam: Partition) -> tuple[Partition, ...]:
    """All mu with lam/mu a horizontal strip."""
    ranges = [range(part(lam, i + 2), lam[i] + 1) for i in range(len(lam))]
    return tuple(sorted((make_partition(p) for p in product(*ranges)), key=partition_key))


@cache
def vertical_strips_below(lam: Partition) -> tuple[Partition, ...]:
    """All mu with lam/mu a vertical strip."""
    out = []
    for p in product(*[(v - 1, v) for v in lam]):
        if all(a >= b for a, b in zip(p, p[1:])):
            out.append(make_partition(p))
    return tuple(sorted(set(out), key=partition_key))


def chains(lam: Partition, m: int, strips: str = "horizontal") -> Iterator[tuple[Partition, ...]]:
    """Chains () = T0 <= ... <= Tm = lam with the given strip type."""
    below = horizontal_strips_below if strips == "horizontal" else vertical_strips_below

    def rec(top: Partition, k: int) -> Iterator[tuple[Partition, ...]]:
        if k == 0:
            if not top:
                yield ((),)
            return
        for mu in below(top):
            for ch in rec(mu, k - 1):
                yield ch + (top,)

    yield from rec(lam, m)


def chain_content(ch) -> tuple[int, ...]:
    return tuple(sum(ch[i]) - sum(ch[i - 1]) for i in range(1, len(ch)))


def macdonald_P(lam: Partition, m: int, mode=("expanded",), kind: str = "psi") -> dict:
    """Monomial coefficients of a Macdonald-type polynomial in m variables.

    ``kind='psi'`` gives P_lam(x; q, t), ``kind='phi'`` gives Q_lam(x; q, t)
    (both over semistandard chains), and ``kind='phi_star'`` gives
    P_{lam'}(x; t, q) over dual chains of shape lam.
    ``mode`` is ``("expanded",)`` for exact sums or ``("eval", q0, t0)``.
    """
    strips = "vertical" if kind == "phi_star" else "horizontal"
    weight = {"psi": psi, "phi": phi, "phi_star": phi_star}[kind]
    out: dict = {}
    for ch in chains(lam, m, strips):
        w = qt_prod(weight(ch[i], ch[i - 1]) for i in range(1, len(ch)))
        key = chain_content(ch)
        if mode[0] == "eval":
            out[key] = out.get(key, Fraction(0)) + qt_eval(w, mode[1], mode[2])
        else:
            out.setdefault(key, QTSum()).add(w)
    return out


def elementary_coefficients(r: int, m: int) -> dict[tuple[int, ...], int]:
    """e_r in m variables."""
    out = {}
    for s in combinations(range(m), r):
        out[tuple(1 if i in s else 0 for i in range(m))] = 1
    return out


def pieri_check(mu: Partition, r: int, m: int, q0, t0) -> bool:
    """P_mu e_r = sum over lam >' mu, |lam/mu| = r of phi*_{lam/mu} P_lam, evaluated."""
    from .partitions import superpartitions

    mode = ("eval", Fraction(q0), Fraction(t0))
    lhs: dict = {}
    p_mu = macdonald_P(mu, m, mode)
    for a, ca in p_mu.items():
        for b in elementary_coefficients(r, m):
            key = tuple(x + y for x, y in zip(a, b))
            lhs[key] = lhs.get(key, Fraction(0)) + ca
    rhs: dict = {}
    for lam in superpartitions(mu, r):
        if not is_vertical_strip(mu, lam):
            continue
        w = qt_eval(phi_star(lam, mu), q0, t0)
        for key, v in macdonald_P(lam, m, mode).items():
            rhs[key] = rhs.get(key, Fraction(0)) + w * v
    keys = set(lhs) | set(rhs)
    return all(lhs.get(k, 0) == rhs.get(k, 0) for k in keys)


def conjugate_swap_identity(kappa: Partition, rho: Partition) -> bool:
    """phi*_{kappa/rho}(q, t) == psi_{kappa'/rho'}(t, q)."""
    from .exact import qt_swap

    return phi_star(kappa, rho) == qt_swap(psi(conjugate(kappa), conjugate(rho)))


