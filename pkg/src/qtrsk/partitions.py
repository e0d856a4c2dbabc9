"""Partitions, French-indexed cells, strips, corners and (q,t)-hooks.

A partition is a plain tuple of positive, weakly decreasing integers; the
empty partition is ``()``. Cell ``(x, y)`` is the x-th cell of the y-th row
counted from the bottom, both starting at 1.
"""

from __future__ import annotations

from functools import cache
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    CellOutsideShape,
    IncompatiblePair,
    NotContained,
    ParseError,
)
from .exact import ONE, QTFactored

Partition = tuple[int, ...]


class Cell(NamedTuple):
    x: int
    y: int

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


class SkewCellSets(NamedTuple):
    r_cells: frozenset[Cell]
    c_cells: frozenset[Cell]


# --------------------------------------------------------------------------
# Construction and text form


def make_partition(parts: Iterable[int]) -> Partition:
    p = tuple(int(v) for v in parts if v)
    if any(v < 0 for v in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"not a partition: {p}")
    return p


def parse_partition(text: str) -> Partition:
    s = text.strip()
    if s in ("", "-", "∅"):
        return ()
    parts = []
    pos = 0
    for tok in s.split(","):
        tok_s = tok.strip()
        if not tok_s.isdigit():
            raise ParseError("expected a nonnegative integer part", text, pos)
        parts.append(int(tok_s))
        pos += len(tok) + 1
    try:
        return make_partition(parts)
    except ValueError as exc:
        raise ParseError(str(exc), text, 0) from None


def format_partition(p: Partition) -> str:
    return ",".join(map(str, p)) if p else "-"


def parse_cell(text: str) -> Cell:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError("expected (x,y)", text, 0)
    try:
        x, y = (int(v) for v in s[1:-1].split(","))
    except ValueError:
        raise ParseError("expected two integers", text, 1) from None
    if x < 1 or y < 1:
        raise ParseError("cell coordinates must be positive", text, 1)
    return Cell(x, y)


def partition_key(p: Partition) -> tuple:
    """Total order used for deterministic enumeration: length, then parts."""
    return (len(p), p)


# --------------------------------------------------------------------------
# Basic geometry


def size(p: Partition) -> int:
    return sum(p)


def part(p: Partition, y: int) -> int:
    """Length of row y (1-based), zero beyond the last row."""
    return p[y - 1] if 0 < y <= len(p) else 0


@cache
def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for v in p if v >= x) for x in range(1, p[0] + 1))


def contains(mu: Partition, lam: Partition) -> bool:
    """mu is a subset of lam."""
    return len(mu) <= len(lam) and all(a <= b for a, b in zip(mu, lam))


def cells(p: Partition) -> list[Cell]:
    return [Cell(x, y) for y, row in enumerate(p, 1) for x in range(1, row + 1)]


def skew_cells(lam: Partition, mu: Partition) -> list[Cell]:
    if not contains(mu, lam):
        raise NotContained(f"{mu} is not contained in {lam}")
    return [Cell(x, y) for y, row in enumerate(lam, 1) for x in range(part(mu, y) + 1, row + 1)]


def in_shape(p: Partition, c: Cell) -> bool:
    return c[0] >= 1 and c[1] >= 1 and c[0] <= part(p, c[1])


def intersect(a: Partition, b: Partition) -> Partition:
    return tuple(min(x, y) for x, y in zip(a, b) if min(x, y))


def union(a: Partition, b: Partition) -> Partition:
    n = max(len(a), len(b))
    return tuple(max(part(a, i), part(b, i)) for i in range(1, n + 1))


def is_horizontal_strip(mu: Partition, lam: Partition) -> bool:
    """lam/mu has at most one cell per column (interlacing)."""
    if len(lam) > len(mu) + 1 or not contains(mu, lam):
        return False
    return all(part(lam, i + 1) <= part(mu, i) for i in range(1, len(lam)))


def is_vertical_strip(mu: Partition, lam: Partition) -> bool:
    """lam/mu has at most one cell per row."""
    if not contains(mu, lam):
        return False
    return all(part(lam, i) - part(mu, i) <= 1 for i in range(1, len(lam) + 1))


def add_cells(p: Partition, cs: Iterable[Cell]) -> Partition:
    rows = list(p)
    for x, y in sorted(cs, key=lambda c: (c[1], c[0])):
        while len(rows) < y:
            rows.append(0)
        if rows[y - 1] != x - 1:
            raise ValueError(f"cannot add cell {(x, y)} to {p}")
        rows[y - 1] = x
    return make_partition(rows)


def remove_cells(p: Partition, cs: Iterable[Cell]) -> Partition:
    rows = list(p)
    for x, y in sorted(cs, key=lambda c: (c[1], -c[0])):
        if part(tuple(rows), y) != x:
            raise ValueError(f"cannot remove cell {(x, y)} from {p}")
        rows[y - 1] = x - 1
    return make_partition(rows)


def inner_corners(p: Partition) -> list[Cell]:
    return [Cell(p[y - 1], y) for y in range(1, len(p) + 1) if p[y - 1] > part(p, y + 1)]


def outer_corners(p: Partition) -> list[Cell]:
    out = [Cell(part(p, y) + 1, y) for y in range(1, len(p) + 1) if y == 1 or p[y - 2] > p[y - 1]]
    out.append(Cell(1, len(p) + 1))
    return out


# --------------------------------------------------------------------------
# Hooks


def _check_cell(lam: Partition, c: Cell) -> None:
    if not in_shape(lam, c):
        raise CellOutsideShape(f"cell {tuple(c)} is not in {lam}")


def arm(lam: Partition, c: Cell) -> int:
    _check_cell(lam, c)
    return part(lam, c[1]) - c[0]


def leg(lam: Partition, c: Cell) -> int:
    _check_cell(lam, c)
    return part(conjugate(lam), c[0]) - c[1]


def hook(lam: Partition, c: Cell) -> int:
    return arm(lam, c) + leg(lam, c) + 1


@cache
def _arm_leg(lam: Partition, x: int, y: int) -> tuple[int, int] | None:
    if not (1 <= y <= len(lam) and 1 <= x <= lam[y - 1]):
        return None
    return lam[y - 1] - x, part(conjugate(lam), x) - y


@cache
def hook_lower(lam: Partition, c: Cell) -> QTFactored:
    """1 - q^a t^(l+1) for c in lam, else 1."""
    al = _arm_leg(lam, c[0], c[1])
    if al is None:
        return ONE
    a, l = al
    return QTFactored(1, (0, 0), {(a, l + 1): 1})


@cache
def hook_upper(lam: Partition, c: Cell) -> QTFactored:
    """1 - q^(a+1) t^l for c in lam, else 1."""
    al = _arm_leg(lam, c[0], c[1])
    if al is None:
        return ONE
    a, l = al
    return QTFactored(1, (0, 0), {(a + 1, l): 1})


@cache
def b_ratio(lam: Partition, c: Cell) -> QTFactored:
    """b_lam(c) = hook_lower / hook_upper, and 1 outside lam."""
    al = _arm_leg(lam, c[0], c[1])
    if al is None:
        return ONE
    a, l = al
    return QTFactored(1, (0, 0), {(a, l + 1): 1, (a + 1, l): -1})


@cache
def skew_cell_sets(lam: Partition, mu: Partition) -> SkewCellSets:
    """Cells of lam sharing a row (r_cells) or a column (c_cells) with lam/mu."""
    sk = skew_cells(lam, mu)
    rows = {c.y for c in sk}
    cols = {c.x for c in sk}
    all_cells = cells(lam)
    return SkewCellSets(
        frozenset(c for c in all_cells if c.y in rows),
        frozenset(c for c in all_cells if c.x in cols),
    )


# --------------------------------------------------------------------------
# Compatible pairs, corners, up and down sets


def is_compatible(lam: Partition, rho: Partition) -> bool:
    """lam/(lam & rho) is a horizontal strip and rho/(lam & rho) a vertical strip."""
    k = intersect(lam, rho)
    return is_horizontal_strip(k, lam) and is_vertical_strip(k, rho)


def _require_compatible(lam: Partition, rho: Partition) -> None:
    if not is_compatible(lam, rho):
        raise IncompatiblePair(f"({format_partition(lam)}, {format_partition(rho)}) is not compatible")


@cache
def removable_inner_corners(lam: Partition, rho: Partition) -> tuple[Cell, ...]:
    """Removable inner corners of lam & rho w.r.t. (lam, rho), bottom to top."""
    _require_compatible(lam, rho)
    k = intersect(lam, rho)
    out = []
    for c in inner_corners(k):
        mu = remove_cells(k, [c])
        if is_horizontal_strip(mu, lam) and is_vertical_strip(mu, rho):
            out.append(c)
    return tuple(out)


@cache
def addable_outer_corners(lam: Partition, rho: Partition) -> tuple[Cell, ...]:
    """Addable outer corners of lam | rho w.r.t. (lam, rho), bottom to top."""
    _require_compatible(lam, rho)
    u = union(lam, rho)
    out = []
    for c in outer_corners(u):
        nu = add_cells(u, [c])
        if is_vertical_strip(lam, nu) and is_horizontal_strip(rho, nu):
            out.append(c)
    return tuple(out)


def D_k(lam: Partition, rho: Partition, k: int) -> list[Partition]:
    """All mu < lam, mu <' rho with |(lam & rho)/mu| = k."""
    corners = removable_inner_corners(lam, rho)
    base = intersect(lam, rho)
    if k < 0 or k > len(corners):
        return []
    out = [remove_cells(base, cs) for cs in combinations(corners, k)]
    return sorted(out, key=partition_key)


def U_k(lam: Partition, rho: Partition, k: int) -> list[Partition]:
    """All nu >' lam, nu > rho with |nu/(lam | rho)| = k."""
    corners = addable_outer_corners(lam, rho)
    base = union(lam, rho)
    if k < 0 or k > len(corners):
        return []
    out = [add_cells(base, cs) for cs in combinations(corners, k)]
    return sorted(out, key=partition_key)


@cache
def subpartitions(p: Partition, n: int) -> tuple[Partition, ...]:
    """All partitions of n contained in p."""
    out: list[Partition] = []

    def rec(i: int, bound: int, remaining: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        if i >= len(p):
            return
        for v in range(min(bound, p[i], remaining), 0, -1):
            acc.append(v)
            rec(i + 1, v, remaining - v, acc)
            acc.pop()

    rec(0, p[0] if p else 0, n, [])
    return tuple(sorted(out, key=partition_key))


@cache
def superpartitions(p: Partition, k: int) -> tuple[Partition, ...]:
    """All partitions nu containing p with |nu/p| = k."""
    out: list[Partition] = []
    width = (p[0] if p else 0) + k

    def rec(i: int, bound: int, remaining: int, acc: list[int]) -> None:
        lo = part(p, i + 1)
        if lo == 0 and remaining == 0:
            out.append(tuple(acc))
            return
        for v in range(min(bound, lo + remaining), lo - 1, -1):
            if v == 0:
                break
            acc.append(v)
            rec(i + 1, v, remaining - (v - lo), acc)
            acc.pop()

    rec(0, width, k, [])
    return tuple(sorted(out, key=partition_key))


def D_kl(lam: Partition, rho: Partition, k: int, l: int) -> list[Partition]:
    """mu < lam, mu < rho (horizontal strips) with |lam/mu| = k, |rho/mu| = l."""
    n = size(lam) - k
    if n < 0 or size(rho) - l != n:
        return []
    base = intersect(lam, rho)
    return [
        mu
        for mu in subpartitions(base, n)
        if is_horizontal_strip(mu, lam) and is_horizontal_strip(mu, rho)
    ]


def U_kl(lam: Partition, rho: Partition, k: int, l: int) -> list[Partition]:
    """nu > lam, nu > rho (horizontal strips) with |nu/rho| = k, |nu/lam| = l."""
    base = union(lam, rho)
    extra = size(rho) + k - size(base)
    if extra < 0 or size(lam) + l != size(rho) + k:
        return []
    return [
        nu
        for nu in superpartitions(base, extra)
        if is_horizontal_strip(rho, nu) and is_horizontal_strip(lam, nu)
    ]


# --------------------------------------------------------------------------
# Enumeration


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out: list[Partition] = []

    def rec(remaining: int, bound: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for v in range(min(bound, remaining), 0, -1):
            acc.append(v)
            rec(remaining - v, v, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(sorted(out, key=partition_key))


def partitions_up_to(n: int) -> Iterator[Partition]:
    for m in range(n + 1):
        yield from partitions_of(m)


def compatible_pairs(max_cells: int) -> list[tuple[Partition, Partition]]:
    """All compatible (lam, rho) with |lam | rho| <= max_cells."""
    out = []
    for u in partitions_up_to(max_cells):
        for lam in _subs_all(u):
            for rho in _subs_all(u):
                if union(lam, rho) == u and is_compatible(lam, rho):
                    out.append((lam, rho))
    return out


@cache
def _subs_all(p: Partition) -> tuple[Partition, ...]:
    return tuple(mu for n in range(size(p) + 1) for mu in subpartitions(p, n))
