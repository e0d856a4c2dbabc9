"""Dual growth diagrams, the probabilistic correspondence, and insertion."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Iterator, Sequence

from .errors import (
    BoundaryMismatch,
    ColumnConstraintViolated,
    ParseError,
    ShapeMismatch,
)
from .exact import (
    ONE,
    AlphaRational,
    QTFactored,
    QTSum,
    qt_eval,
    qt_jack_limit,
    qt_prod,
    qt_substitute_inverse,
    qt_swap,
)
from .local_rules import (
    corner_frame,
    f_col,
    f_row,
    forward_prob,
    backward_prob,
    mu_of,
    nu_of,
    rset_of,
    sset_of,
    square_forward,
)
from .partitions import (
    Cell,
    Partition,
    U_kl,
    conjugate,
    contains,
    intersect,
    is_horizontal_strip,
    is_vertical_strip,
    make_partition,
    size,
    skew_cells,
    union,
)
from .weights import Tableau, psi, phi_star, tableau_weight

MODES = ("qt", "alpha", "numeric")
RULES = ("qt", "row", "col")


# --------------------------------------------------------------------------
# Matrices


@dataclass(frozen=True)
class Matrix01:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix rows must have equal length")
        if any(v not in (0, 1) for r in rows for v in r):
            raise ValueError("matrix entries must be 0 or 1")

    @classmethod
    def parse(cls, text: str) -> "Matrix01":
        s = text.strip()
        if s in ("", "-"):
            return cls(())
        rows = []
        pos = 0
        for chunk in s.split(";"):
            row = []
            for ch in chunk:
                if ch not in "01":
                    raise ParseError("expected 0 or 1", text, pos)
                row.append(int(ch))
                pos += 1
            pos += 1
            rows.append(tuple(row))
        if any(len(r) != len(rows[0]) for r in rows) or not rows[0]:
            raise ParseError("rows must be non-empty and of equal length", text, 0)
        return cls(tuple(rows))

    @classmethod
    def zeros(cls, m: int, n: int) -> "Matrix01":
        return cls(tuple((0,) * n for _ in range(m)))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def entry(self, i: int, j: int) -> int:
        """1-based entry A_{i,j}."""
        return self.rows[i - 1][j - 1]

    def text(self) -> str:
        return ";".join("".join(map(str, r)) for r in self.rows) if self.rows else "-"

    def __str__(self) -> str:
        return self.text()

    def transpose(self) -> "Matrix01":
        return Matrix01(tuple(zip(*self.rows)))

    def column_ones(self, j: int) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.m + 1) if self.entry(i, j))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def column_sums(self) -> tuple[int, ...]:
        return tuple(sum(self.entry(i, j) for i in range(1, self.m + 1)) for j in range(1, self.n + 1))

    def swap_columns(self, k: int) -> "Matrix01":
        """Swap the 1-based columns k and k + 1."""
        if not 1 <= k < self.n:
            raise ValueError(f"column index {k} out of range")
        out = []
        for r in self.rows:
            r = list(r)
            r[k - 1], r[k] = r[k], r[k - 1]
            out.append(tuple(r))
        return Matrix01(tuple(out))

    def is_word(self) -> bool:
        """At most one 1 in each column."""
        return all(len(self.column_ones(j)) <= 1 for j in range(1, self.n + 1))

    def sort_key(self) -> tuple:
        return self.rows


def all_matrices(m: int, n: int) -> Iterator[Matrix01]:
    for bits in product((0, 1), repeat=m * n):
        yield Matrix01(tuple(tuple(bits[i * n : (i + 1) * n]) for i in range(m)))


def transpose_tableau(T: Tableau) -> Tableau:
    """Reflect T in the diagonal; SSYT and dual SSYT swap."""
    shape = conjugate(T.shape)
    rows = tuple(tuple(T.rows[y][x] for y in range(len(T.rows)) if len(T.rows[y]) > x) for x in range(len(shape)))
    flavor = {"ssyt": "dual_ssyt", "dual_ssyt": "ssyt", "partial_syt": "partial_syt"}[T.flavor]
    return Tableau(rows, flavor)


# --------------------------------------------------------------------------
# Growths


@dataclass(frozen=True)
class DualGrowth:
    """Partitions on the vertices (i, j) of an m x n grid, grid[i][j]."""

    grid: tuple[tuple[Partition, ...], ...]

    @property
    def m(self) -> int:
        return len(self.grid) - 1

    @property
    def n(self) -> int:
        return len(self.grid[0]) - 1

    def matrix(self) -> Matrix01:
        g = self.grid
        return Matrix01(
            tuple(
                tuple(
                    size(g[i][j]) - size(g[i - 1][j]) - size(g[i][j - 1]) + size(g[i - 1][j - 1])
                    for j in range(1, self.n + 1)
                )
                for i in range(1, self.m + 1)
            )
        )

    def right_chain(self) -> tuple[Partition, ...]:
        return tuple(self.grid[i][self.n] for i in range(self.m + 1))

    def bottom_chain(self) -> tuple[Partition, ...]:
        return tuple(self.grid[self.m])

    def P(self) -> Tableau:
        return Tableau.from_chain(self.right_chain(), "ssyt")

    def Q(self) -> Tableau:
        return Tableau.from_chain(self.bottom_chain(), "dual_ssyt")

    def squares(self) -> Iterator[tuple[int, int, Partition, Partition, Partition, Partition]]:
        """(i, j, mu, lam, rho, nu) in reading order."""
        g = self.grid
        for i in range(1, self.m + 1):
            for j in range(1, self.n + 1):
                yield i, j, g[i - 1][j - 1], g[i][j - 1], g[i - 1][j], g[i][j]

    def is_valid(self) -> bool:
        g = self.grid
        for i in range(self.m + 1):
            for j in range(self.n + 1):
                if i < self.m and not is_horizontal_strip(g[i][j], g[i + 1][j]):
                    return False
                if j < self.n and not is_vertical_strip(g[i][j], g[i][j + 1]):
                    return False
        A = self.matrix()
        return all(v in (0, 1) for r in A.rows for v in r)

    def transpose(self) -> "DualGrowth":
        return DualGrowth(
            tuple(tuple(conjugate(self.grid[i][j]) for i in range(self.m + 1)) for j in range(self.n + 1))
        )

    def text(self) -> str:
        from .partitions import format_partition

        return " / ".join(" ".join(format_partition(p) for p in row) for row in self.grid)


def _square_k(mu: Partition, lam: Partition, rho: Partition, a: int) -> int:
    return size(intersect(lam, rho)) - size(mu) + a


def _successors(lam: Partition, rho: Partition, mu: Partition, a: int, rule: str, keep_zero: bool):
    """[(nu, probability)] for the square with NW mu, SW lam, NE rho and entry a."""
    if rule == "row":
        return [(f_row(lam, rho, _square_k(mu, lam, rho, a), mu), ONE)]
    if rule == "col":
        return [(f_col(lam, rho, _square_k(mu, lam, rho, a), mu), ONE)]
    from itertools import combinations

    f = corner_frame(lam, rho)
    Rset = rset_of(f, mu)
    out = []
    for Sset in combinations(range(f.d + 1), len(Rset) + a):
        p = forward_prob(f, Rset, Sset)
        if keep_zero or not p.is_zero:
            out.append((nu_of(f, Sset), p))
    return out


def _walk(
    A: Matrix01,
    left: Sequence[Partition],
    top: Sequence[Partition],
    rule: str,
    keep_zero: bool,
) -> Iterator[tuple[list[list[Partition]], QTFactored]]:
    """Depth-first fill of the grid in reading order; yields (grid, probability)."""
    m, n = A.m, A.n
    grid: list[list[Partition | None]] = [[None] * (n + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        grid[i][0] = left[i]
    for j in range(n + 1):
        grid[0][j] = top[j]
    cells = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]

    def rec(idx: int, prob: QTFactored):
        if idx == len(cells):
            yield grid, prob
            return
        i, j = cells[idx]
        mu, lam, rho = grid[i - 1][j - 1], grid[i][j - 1], grid[i - 1][j]
        for nu, p in _successors(lam, rho, mu, A.entry(i, j), rule, keep_zero):
            grid[i][j] = nu
            yield from rec(idx + 1, prob * p)
        grid[i][j] = None

    yield from rec(0, ONE)


def _freeze(grid) -> DualGrowth:
    return DualGrowth(tuple(tuple(r) for r in grid))


def enumerate_growths(A: Matrix01) -> list[DualGrowth]:
    """All dual growths of A (including those of probability zero)."""
    empty = [()] * (max(A.m, A.n) + 1)
    return [_freeze(g) for g, _ in _walk(A, empty[: A.m + 1], empty[: A.n + 1], "qt", True)]


def growth_prob(G: DualGrowth, direction: str = "forward") -> QTFactored:
    """Product of the square probabilities of G."""
    if direction not in ("forward", "backward"):
        raise ValueError(f"unknown direction {direction!r}")
    out = ONE
    for _, _, mu, lam, rho, nu in G.squares():
        f = corner_frame(lam, rho)
        R, S = rset_of(f, mu), sset_of(f, nu)
        out = out * (forward_prob(f, R, S) if direction == "forward" else backward_prob(f, R, S))
    return out


# --------------------------------------------------------------------------
# Distributions


class Distribution:
    """Exact outcome weights in one of the value modes.

    ``qt``: QTSum per outcome; ``alpha``: AlphaRational (Jack limit of each
    growth probability); ``numeric``: Fraction at the point (q0, t0).
    """

    def __init__(self, mode: str = "qt", point: tuple[Fraction, Fraction] | None = None):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        if mode == "numeric" and point is None:
            raise ValueError("numeric mode needs a point (q0, t0)")
        self.mode = mode
        self.point = (Fraction(point[0]), Fraction(point[1])) if point else None
        self.values: dict = {}

    def _zero(self):
        if self.mode == "qt":
            return QTSum()
        if self.mode == "alpha":
            return AlphaRational(0)
        return Fraction(0)

    def convert(self, p: QTFactored):
        if self.mode == "qt":
            return p
        if self.mode == "alpha":
            return AlphaRational(0) if p.is_zero else qt_jack_limit(p)
        return qt_eval(p, *self.point)

    def add(self, outcome, p: QTFactored) -> None:
        self.add_value(outcome, self.convert(p))

    def add_value(self, outcome, v) -> None:
        cur = self.values.get(outcome)
        if cur is None:
            cur = self.values[outcome] = self._zero()
        if self.mode == "qt":
            if isinstance(v, QTSum):
                cur.add_sum(v)
            else:
                cur.add(v)
        else:
            self.values[outcome] = cur + v

    def get(self, outcome):
        return self.values.get(outcome, self._zero())

    def outcomes(self) -> list:
        return sorted(self.values, key=_outcome_key)

    def items(self) -> list:
        return [(o, self.values[o]) for o in self.outcomes()]

    def support(self) -> list:
        return [o for o in self.outcomes() if not _is_zero(self.values[o])]

    def total(self):
        tot = self._zero()
        for v in self.values.values():
            if self.mode == "qt":
                tot.add_sum(v)
            else:
                tot = tot + v
        return tot

    def sums_to_one(self) -> bool:
        tot = self.total()
        if self.mode == "qt":
            return tot.equals(ONE)
        return tot == 1

    def value_equals(self, outcome, expected) -> bool:
        v = self.get(outcome)
        if self.mode == "qt":
            return v.equals(expected)
        return v == expected

    def marginal(self, key: Callable) -> "Distribution":
        out = Distribution(self.mode, self.point)
        for o, v in self.values.items():
            out.add_value(key(o), v.copy() if self.mode == "qt" else v)
        return out

    def same_as(self, other: "Distribution") -> bool:
        keys = set(self.values) | set(other.values)
        for k in keys:
            a, b = self.get(k), other.get(k)
            if self.mode == "qt":
                if not a.equals(b):
                    return False
            elif a != b:
                return False
        return True

    def to_json(self) -> list:
        return [{"outcome": _outcome_text(o), "value": _value_text(v)} for o, v in self.items()]

    def __len__(self) -> int:
        return len(self.values)


def _is_zero(v) -> bool:
    if isinstance(v, QTSum):
        return v.is_zero()
    if isinstance(v, AlphaRational):
        return v.is_zero()
    return v == 0


def _outcome_key(o):
    if isinstance(o, tuple):
        return tuple(_outcome_key(x) for x in o)
    if hasattr(o, "sort_key"):
        return o.sort_key()
    return o


def _outcome_text(o) -> str:
    if isinstance(o, tuple) and o and all(isinstance(x, Tableau) for x in o):
        return " , ".join(x.text() for x in o)
    if isinstance(o, tuple):
        from .partitions import format_partition

        return format_partition(o)
    return str(o)


def _value_text(v) -> str:
    if isinstance(v, QTSum):
        return v.pretty()
    return str(v)


def forward_distribution(A: Matrix01, mode: str = "qt", point=None) -> Distribution:
    """P(A -> P, Q) over pairs (P, Q); outcomes with zero weight are kept."""
    dist = Distribution(mode, point)
    empty_l = [()] * (A.m + 1)
    empty_t = [()] * (A.n + 1)
    for grid, p in _walk(A, empty_l, empty_t, "qt", True):
        G = _freeze(grid)
        dist.add((G.P(), G.Q()), p)
    return dist


def forward_growths(A: Matrix01) -> list[tuple[DualGrowth, QTFactored]]:
    empty_l = [()] * (A.m + 1)
    empty_t = [()] * (A.n + 1)
    return [(_freeze(g), p) for g, p in _walk(A, empty_l, empty_t, "qt", True)]


def _down_options(lam: Partition, rho: Partition, nu: Partition):
    """[(mu, a, backward probability)] for a square with known lam, rho, nu."""
    from itertools import combinations

    f = corner_frame(lam, rho)
    Sset = sset_of(f, nu)
    out = []
    for a in (0, 1):
        k = len(Sset) - a
        if k < 0 or k > f.d:
            continue
        for Rset in combinations(range(1, f.d + 1), k):
            out.append((mu_of(f, Rset), a, backward_prob(f, Rset, Sset)))
    return out


def backward_growths(P: Tableau, Q: Tableau, m: int | None = None, n: int | None = None):
    """All growths with boundary (P, Q), filled from the south-east."""
    if P.shape != Q.shape:
        raise ShapeMismatch(f"P has shape {P.shape}, Q has shape {Q.shape}")
    m = P.max_entry() if m is None else m
    n = Q.max_entry() if n is None else n
    right, bottom = P.chain(m), Q.chain(n)
    grid: list[list] = [[None] * (n + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        grid[i][n] = right[i]
    for j in range(n + 1):
        grid[m][j] = bottom[j]
    cells = [(i, j) for i in range(m, 0, -1) for j in range(n, 0, -1)]
    ones = [[0] * n for _ in range(m)]

    def rec(idx: int, prob: QTFactored):
        if idx == len(cells):
            yield _freeze(grid), prob
            return
        i, j = cells[idx]
        lam, rho, nu = grid[i][j - 1], grid[i - 1][j], grid[i][j]
        for mu, a, p in _down_options(lam, rho, nu):
            if (i == 1 or j == 1) and mu != ():
                continue
            grid[i - 1][j - 1] = mu
            ones[i - 1][j - 1] = a
            yield from rec(idx + 1, prob * p)
        grid[i - 1][j - 1] = None if (i > 1 and j > 1) else grid[i - 1][j - 1]

    # the north and west boundaries are empty
    for i in range(m):
        grid[i][0] = ()
    for j in range(n):
        grid[0][j] = ()
    yield from rec(0, ONE)


def backward_distribution(
    P: Tableau, Q: Tableau, m: int | None = None, n: int | None = None, mode: str = "qt", point=None
) -> Distribution:
    """Pbar(A <- P, Q) over matrices A."""
    dist = Distribution(mode, point)
    for G, p in backward_growths(P, Q, m, n):
        dist.add(G.matrix(), p)
    return dist


def pair_weight(P: Tableau, Q: Tableau, m: int | None = None, n: int | None = None) -> QTFactored:
    """psi_P phi*_Q."""
    return tableau_weight(P, "psi", m) * tableau_weight(Q, "phi_star", n)


# --------------------------------------------------------------------------
# Classical dual RSK


def classical_dual_rsk(A: Matrix01, variant: str = "column") -> tuple[Tableau, Tableau]:
    """Deterministic dual RSK by column insertion or row insertion."""
    if variant not in ("column", "row"):
        raise ValueError(f"unknown variant {variant!r}")
    biword = []
    for j in range(1, A.n + 1):
        ones = A.column_ones(j)
        if variant == "row":
            ones = tuple(reversed(ones))
        biword += [(j, i) for i in ones]
    P: list[list[int]] = []  # rows, bottom row first
    Q: list[list[int]] = []
    for j, i in biword:
        y = _column_insert(P, i) if variant == "column" else _row_insert(P, i)
        if y == len(Q):
            Q.append([])
        Q[y].append(j)
    return Tableau(tuple(map(tuple, P)), "ssyt"), Tableau(tuple(map(tuple, Q)), "dual_ssyt")


def _column_insert(P: list[list[int]], k: int) -> int:
    """Column-insert k into P in place; return the row of the new cell."""
    x = 0
    while True:
        col = [P[y][x] for y in range(len(P)) if len(P[y]) > x]
        pos = next((y for y, v in enumerate(col) if v >= k), None)
        if pos is None:
            y = len(col)
            if y == len(P):
                P.append([])
            P[y].append(k)
            return y
        P[pos][x], k = k, P[pos][x]
        x += 1


def _row_insert(P: list[list[int]], k: int) -> int:
    """Row-insert k into P in place; return the row of the new cell."""
    y = 0
    while True:
        if y == len(P):
            P.append([k])
            return y
        row = P[y]
        pos = next((x for x, v in enumerate(row) if v > k), None)
        if pos is None:
            row.append(k)
            return y
        row[pos], k = k, row[pos]
        y += 1


def deterministic_growth(A: Matrix01, rule: str) -> DualGrowth:
    """The unique growth of A under the rule 'row' or 'col'."""
    if rule not in ("row", "col"):
        raise ValueError(f"unknown deterministic rule {rule!r}")
    (G,) = [_freeze(g) for g, _ in _walk(A, [()] * (A.m + 1), [()] * (A.n + 1), rule, False)]
    return G


# --------------------------------------------------------------------------
# Insertion


def growth_insert(T: Tableau, values: Iterable[int], rule: str = "qt", mode: str = "qt", point=None):
    """Insert the strictly increasing values into T through one growth column.

    For 'row' / 'col' returns a Tableau; for 'qt' a Distribution over tableaux.
    """
    values = tuple(values)
    if any(v < 1 for v in values) or any(a >= b for a, b in zip(values, values[1:])):
        raise ValueError("values must be strictly increasing positive integers")
    if rule not in RULES:
        raise ValueError(f"unknown rule {rule!r}")
    m = max([T.max_entry(), *values])
    A = Matrix01(tuple((1 if i in values else 0,) for i in range(1, m + 1)))
    left = T.chain(m)
    if rule != "qt":
        (P,) = [Tableau.from_chain(tuple(g[i][1] for i in range(m + 1)), "ssyt") for g, _ in _walk(A, left, [()] * 2, rule, False)]
        return P
    dist = Distribution(mode, point)
    for grid, p in _walk(A, left, [()] * 2, "qt", False):
        dist.add(Tableau.from_chain(tuple(grid[i][1] for i in range(m + 1)), "ssyt"), p)
    return dist


def _shape_upto(cells: dict[Cell, int], i: int) -> Partition:
    rows: dict[int, int] = {}
    for c, v in cells.items():
        if v <= i:
            rows[c.y] = rows.get(c.y, 0) + 1
    return make_partition(rows[y] for y in sorted(rows))


def _cells_of(T: Tableau) -> dict[Cell, int]:
    return {Cell(x + 1, y + 1): v for y, r in enumerate(T.rows) for x, v in enumerate(r)}


def _tableau_of(cells: dict[Cell, int]) -> Tableau:
    rows: dict[int, list[tuple[int, int]]] = {}
    for c, v in cells.items():
        rows.setdefault(c.y, []).append((c.x, v))
    return Tableau(tuple(tuple(v for _, v in sorted(rows[y])) for y in sorted(rows)), "ssyt")


def queue_insert(T: Tableau, values: Iterable[int], rule: str = "qt") -> Distribution | Tableau:
    """Insertion-queue form: repeatedly place the smallest queued value, bumping entries."""
    values = tuple(values)
    if rule not in RULES:
        raise ValueError(f"unknown rule {rule!r}")
    T_shape = {i: _shape_upto(_cells_of(T), i) for i in range(0, max([T.max_entry(), *values]) + 1)}
    dist = Distribution("qt")

    def lam_of(i: int) -> Partition:
        return T_shape.get(i, T.shape)

    def rec(cells: dict[Cell, int], queue: Counter, prob: QTFactored):
        if not queue:
            dist.add(_tableau_of(cells), prob)
            return
        i = min(queue)
        k = queue.pop(i)
        lam, mu = lam_of(i), lam_of(i - 1)
        rho = _shape_upto(cells, i - 1)
        a = k - (size(intersect(lam, rho)) - size(mu))
        if a not in (0, 1):
            raise AssertionError("queue multiplicity does not match the square")
        base = union(lam, rho)
        for nu, p in _successors(lam, rho, mu, a, rule, False):
            new = dict(cells)
            q = Counter(queue)
            for c in skew_cells(nu, base):
                if c in new:
                    q[new[c]] += 1
                new[c] = i
            rec(new, q, prob * p)

    rec(_cells_of(T), Counter(values), ONE)
    if rule != "qt":
        (out,) = dist.values
        return out
    return dist


def _qrst_paths(T: Tableau, i: int) -> Iterator[tuple[Tableau, QTFactored]]:
    """(outcome, probability) for every bumping path of the word-restricted rule."""
    if i < 1:
        raise ValueError("letters are positive integers")
    cells0 = _cells_of(T)

    def rec(cells: dict[Cell, int], value: int, prob: QTFactored, first: bool):
        lam = _shape_upto(cells0, value)
        mu = _shape_upto(cells0, value - 1)
        rho = mu if first else _shape_upto(cells, value - 1)
        k = size(lam) - size(mu)
        for nu in U_kl(lam, rho, k + 1 if first else k, 1):
            p = square_forward(mu, lam, rho, nu)
            if p.is_zero:
                continue
            (c,) = skew_cells(nu, lam)
            new = dict(cells)
            bumped = new.get(c)
            new[c] = value
            if bumped is None:
                yield _tableau_of(new), prob * p
            else:
                yield from rec(new, bumped, prob * p, False)

    yield from rec(dict(cells0), i, ONE, True)


def qrst_word_insert(T: Tableau, i: int, mode: str = "qt", point=None) -> Distribution:
    """Insert a single letter i with the word-restricted rule."""
    dist = Distribution(mode, point)
    for T2, p in _qrst_paths(T, i):
        dist.add(T2, p)
    return dist


def qrst_word_distribution(A: Matrix01, mode: str = "qt", point=None) -> Distribution:
    """Compose single-letter insertions column by column; Q records the new cells."""
    if not A.is_word():
        raise ColumnConstraintViolated(f"matrix {A.text()} has a column with several 1s")
    states: list[tuple[Tableau, tuple[tuple[int, ...], ...], QTFactored]] = [(Tableau(()), (), ONE)]
    for j in range(1, A.n + 1):
        ones = A.column_ones(j)
        if not ones:
            continue
        nxt = []
        for T, Q, p in states:
            for T2, f in _qrst_paths(T, ones[0]):
                (c,) = skew_cells(T2.shape, T.shape)
                rows = [list(r) for r in Q] + [[]]
                rows[c.y - 1].append(j)
                nxt.append((T2, tuple(tuple(r) for r in rows if r), p * f))
        states = nxt
    dist = Distribution(mode, point)
    for T, Q, p in states:
        dist.add((Tableau(T.rows, "ssyt"), Tableau(Q, "dual_ssyt")), p)
    return dist


# --------------------------------------------------------------------------
# Skew growths


def skew_forward_distribution(
    A: Matrix01,
    left: Sequence[Partition],
    top: Sequence[Partition],
    mode: str = "qt",
    point=None,
) -> Distribution:
    """Growth distribution with a non-empty north-west boundary.

    ``left`` is the chain on the west edge (horizontal strips, length m + 1),
    ``top`` the chain on the north edge (vertical strips, length n + 1).
    Outcomes are (east chain, south chain).
    """
    left, top = tuple(map(tuple, left)), tuple(map(tuple, top))
    if len(left) != A.m + 1 or len(top) != A.n + 1 or left[0] != top[0]:
        raise BoundaryMismatch("boundary chains must have lengths m + 1, n + 1 and share a corner")
    if not all(is_horizontal_strip(a, b) for a, b in zip(left, left[1:])):
        raise BoundaryMismatch("west boundary must grow by horizontal strips")
    if not all(is_vertical_strip(a, b) for a, b in zip(top, top[1:])):
        raise BoundaryMismatch("north boundary must grow by vertical strips")
    dist = Distribution(mode, point)
    for grid, p in _walk(A, left, top, "qt", False):
        G = _freeze(grid)
        dist.add((G.right_chain(), G.bottom_chain()), p)
    return dist


# --------------------------------------------------------------------------
# Symmetry checks


def transpose_symmetry_check(A: Matrix01) -> bool:
    """P(A^T -> Q', P')[q, t] == P(A -> P, Q)[1/t, 1/q] for every outcome."""
    lhs = forward_distribution(A.transpose())
    rhs = Distribution("qt")
    for G, p in forward_growths(A):
        rhs.add((transpose_tableau(G.Q()), transpose_tableau(G.P())), qt_swap(qt_substitute_inverse(p)))
    return lhs.same_as(rhs)


def p_marginal(A: Matrix01, mode: str = "alpha", point=None) -> Distribution:
    return forward_distribution(A, mode, point).marginal(lambda o: o[0])


def jack_swap_check(A: Matrix01, k: int, require_word: bool = True) -> bool:
    """The Jack-limit P-marginal is unchanged by swapping columns k and k + 1."""
    if require_word and not A.is_word():
        raise ColumnConstraintViolated(f"matrix {A.text()} has a column with several 1s")
    return p_marginal(A).same_as(p_marginal(A.swap_columns(k)))


# --------------------------------------------------------------------------
# Two-square configurations


def configuration_distribution(
    mu: Partition, lam: Partition, rho: Partition, which: str, mode: str = "alpha"
) -> Distribution:
    """Distribution of the south-east corner of two adjacent squares.

    I:  top row mu, rho, rho with entries (0, 1).
    II: top row mu, mu, rho with entries (1, 0).
    The south-west corner is lam in both.
    """
    if which == "I":
        top, entries = (mu, rho, rho), (0, 1)
    elif which == "II":
        top, entries = (mu, mu, rho), (1, 0)
    else:
        raise ValueError(f"unknown configuration {which!r}")
    dist = Distribution(mode)
    for pi, p1 in _successors(lam, top[1], top[0], entries[0], "qt", False):
        for nu, p2 in _successors(pi, top[2], top[1], entries[1], "qt", False):
            dist.add(nu, p1 * p2)
    return dist


def configuration_inputs(max_nu: int) -> Iterator[tuple[Partition, Partition, Partition]]:
    """(mu, lam, rho) with rho = mu plus one cell, lam/mu a horizontal strip, |lam| + 2 <= max_nu."""
    from .partitions import outer_corners, partitions_up_to
    from .weights import horizontal_strips_below

    for lam in partitions_up_to(max_nu - 2):
        for mu in horizontal_strips_below(lam):
            for c in outer_corners(mu):
                rho = make_partition(
                    [v + (1 if y + 1 == c.y else 0) for y, v in enumerate(mu)] + ([1] if c.y == len(mu) + 1 else [])
                )
                yield mu, lam, rho


__all__ = [
    "Matrix01",
    "DualGrowth",
    "Distribution",
    "all_matrices",
    "transpose_tableau",
    "enumerate_growths",
    "growth_prob",
    "forward_distribution",
    "forward_growths",
    "backward_growths",
    "backward_distribution",
    "pair_weight",
    "classical_dual_rsk",
    "deterministic_growth",
    "growth_insert",
    "queue_insert",
    "qrst_word_insert",
    "qrst_word_distribution",
    "skew_forward_distribution",
    "transpose_symmetry_check",
    "p_marginal",
    "jack_swap_check",
    "configuration_distribution",
    "configuration_inputs",
]
