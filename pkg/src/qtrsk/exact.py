"""Exact arithmetic in Q(q, t) and Q(alpha).

Three representations are used:

* ``LaurentPoly2``: sparse Laurent polynomial in q, t with rational coefficients.
* ``QTFactored``: ``coeff * q^x t^y * prod (1 - q^a t^b)^e``. Closed under
  multiplication and division, never under addition.
* ``QTSum``: an accumulator for sums of ``QTFactored`` values. It keeps the
  denominator as a product of binomials (the least common multiple in the
  binomial basis) and the numerator as an expanded polynomial, so equality
  checks need no polynomial GCD.

``AlphaRational`` holds Jack limits as reduced univariate rational functions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, NamedTuple

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from . import kernels
from .errors import (
    DivideByZero,
    EqualPoints,
    IncomparablePoints,
    JackLimitUndefined,
    LimitDiverges,
    PoleAtPoint,
)

__all__ = [
    "Monomial",
    "LaurentPoly2",
    "QTFactored",
    "QTSum",
    "AlphaRational",
    "ONE",
    "ZERO",
    "qt_from_point_difference",
    "qt_mul",
    "qt_div",
    "qt_inv",
    "qt_expand",
    "qt_sum_equals",
    "qt_eval",
    "qt_substitute_inverse",
    "qt_swap",
    "qt_limit",
    "qt_jack_limit",
    "binomial",
    "monomial",
    "parse_qt",
    "parse_alpha",
]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def _norm_coeff(c):
    """Store integral Fractions as int to keep dict arithmetic cheap."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Monomial(NamedTuple):
    """The monomial q^eq t^et, also used as a lattice point (eq, et)."""

    eq: int
    et: int

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        return Monomial(self.eq + other.eq, self.et + other.et)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.eq - other.eq, self.et - other.et)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(self.eq * k, self.et * k)

    def leq(self, other: "Monomial") -> bool:
        """Product order on lattice points."""
        return self.eq <= other.eq and self.et <= other.et

    def __str__(self) -> str:
        return f"q^{self.eq} t^{self.et}"


MONO_ONE = Monomial(0, 0)


# --------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly2:
    """Sparse Laurent polynomial in q, t. Immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {k: _norm_coeff(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly2":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, c) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, eq: int, et: int, c=1) -> "LaurentPoly2":
        return cls({(eq, et): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        out = dict(self.terms)
        return LaurentPoly2._raw(kernels.add_scaled(out, other.terms, 1, 0, 0))

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        out = dict(self.terms)
        return LaurentPoly2._raw(kernels.add_scaled(out, other.terms, -1, 0, 0))

    def __mul__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        return LaurentPoly2._raw(kernels.poly_mul(self.terms, other.terms))

    def scale(self, c, eq: int = 0, et: int = 0) -> "LaurentPoly2":
        if not c:
            return LaurentPoly2()
        return LaurentPoly2._raw(kernels.add_scaled({}, self.terms, c, eq, et))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[tuple[int, int], Fraction | int]]:
        return sorted(self.terms.items())

    def evaluate(self, q0, t0) -> Fraction:
        q0, t0 = _as_fraction(q0), _as_fraction(t0)
        total = Fraction(0)
        for (x, y), c in self.terms.items():
            if (q0 == 0 and x < 0) or (t0 == 0 and y < 0):
                raise PoleAtPoint(f"negative power at zero in {self}")
            total += c * q0**x * t0**y
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (x, y), c in self.sorted_terms():
            parts.append(f"{c}*q^{x}*t^{y}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


@lru_cache(maxsize=1 << 16)
def _expand_cached(factors: tuple) -> dict:
    return kernels.expand_binomials(factors)


def expand_factors(factors: Iterable[tuple[int, int, int]]) -> dict:
    """Expanded product of (1 - q^a t^b)^e; the result must not be mutated."""
    return _expand_cached(tuple(sorted(factors)))


# --------------------------------------------------------------------------
# Factored rational functions


class QTFactored:
    """coeff * q^x t^y * prod (1 - q^a t^b)^e, or the dedicated zero."""

    __slots__ = ("is_zero", "coeff", "mono", "factors", "_hash")

    def __init__(self, coeff=1, mono: tuple[int, int] = (0, 0), factors=None):
        coeff = _as_fraction(coeff)
        self._hash = None
        if coeff == 0:
            self.is_zero = True
            self.coeff = Fraction(0)
            self.mono = MONO_ONE
            self.factors = ()
            return
        fac: dict[tuple[int, int], int] = {}
        items = factors.items() if isinstance(factors, dict) else (factors or ())
        for item in items:
            if len(item) == 2:
                (a, b), e = item
            else:
                a, b, e = item
            if a < 0 or b < 0:
                raise ValueError(f"factor exponents must be nonnegative: {(a, b)}")
            if a == 0 and b == 0:
                raise ValueError("factor (1 - q^0 t^0) vanishes identically")
            fac[(a, b)] = fac.get((a, b), 0) + e
        self.is_zero = False
        self.coeff = coeff
        self.mono = Monomial(*mono)
        self.factors = tuple(sorted((k, e) for k, e in fac.items() if e))

    @classmethod
    def _make(cls, coeff: Fraction, mono: Monomial, factors: tuple) -> "QTFactored":
        obj = cls.__new__(cls)
        obj.is_zero = False
        obj.coeff = coeff
        obj.mono = mono
        obj.factors = factors
        obj._hash = None
        return obj

    @property
    def factor_map(self) -> dict[tuple[int, int], int]:
        return dict(self.factors)

    def numerator_factors(self) -> list[tuple[int, int, int]]:
        return [(a, b, e) for (a, b), e in self.factors if e > 0]

    def denominator_factors(self) -> list[tuple[int, int, int]]:
        return [(a, b, -e) for (a, b), e in self.factors if e < 0]

    def __mul__(self, other: "QTFactored") -> "QTFactored":
        return qt_mul(self, other)

    def __truediv__(self, other: "QTFactored") -> "QTFactored":
        return qt_div(self, other)

    def __neg__(self) -> "QTFactored":
        if self.is_zero:
            return self
        return QTFactored._make(-self.coeff, self.mono, self.factors)

    def __pow__(self, k: int) -> "QTFactored":
        if self.is_zero:
            if k <= 0:
                raise DivideByZero("zero to a nonpositive power")
            return self
        return QTFactored._make(
            self.coeff**k,
            self.mono**k,
            tuple((key, e * k) for key, e in self.factors) if k else (),
        )

    def __eq__(self, other: object) -> bool:
        """Structural equality, which is equality of functions in this basis."""
        if not isinstance(other, QTFactored):
            return NotImplemented
        return (
            self.is_zero == other.is_zero
            and self.coeff == other.coeff
            and self.mono == other.mono
            and self.factors == other.factors
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.is_zero, self.coeff, self.mono, self.factors))
        return self._hash

    def is_one(self) -> bool:
        return not self.is_zero and self.coeff == 1 and self.mono == MONO_ONE and not self.factors

    def render(self) -> str:
        """Text form ``c * q^x t^y * (1-q^a t^b)^e * ...``."""
        if self.is_zero:
            return "0"
        parts = [str(self.coeff), f"q^{self.mono.eq} t^{self.mono.et}"]
        parts += [f"(1-q^{a} t^{b})^{e}" for (a, b), e in self.factors]
        return " * ".join(parts)

    def to_json(self) -> dict:
        if self.is_zero:
            return {"coeff": "0", "mono": [0, 0], "factors": []}
        return {
            "coeff": str(self.coeff),
            "mono": [self.mono.eq, self.mono.et],
            "factors": [[a, b, e] for (a, b), e in self.factors],
        }

    @classmethod
    def from_json(cls, data: dict) -> "QTFactored":
        return cls(Fraction(data["coeff"]), tuple(data["mono"]), [tuple(f) for f in data["factors"]])

    def pretty(self) -> str:
        """Compact human form such as ``q(1-t)^2/(1-qt)``."""
        if self.is_zero:
            return "0"

        def mono_str(a: int, b: int) -> str:
            s = ""
            if a:
                s += "q" if a == 1 else f"q^{a}"
            if b:
                s += "t" if b == 1 else f"t^{b}"
            return s

        def group(facs: list[tuple[int, int, int]]) -> str:
            out = ""
            for a, b, e in facs:
                out += f"(1-{mono_str(a, b)})" + (f"^{e}" if e > 1 else "")
            return out

        num = group(self.numerator_factors())
        c = self.coeff
        x, y = self.mono
        pos_mono = mono_str(max(x, 0), max(y, 0))
        neg_mono = mono_str(max(-x, 0), max(-y, 0))
        head = ""
        cn = c.numerator
        if cn == -1:
            head = "-"
        elif cn != 1:
            head = f"{cn}" + ("*" if pos_mono or num else "")
        body = head + pos_mono + num
        if body in ("", "-"):
            body += "1"
        # count atoms so that a product such as qt is parenthesized after '/'
        den_facs = self.denominator_factors()
        atoms = len(den_facs) + (x < 0) + (y < 0) + (c.denominator != 1)
        den = neg_mono + group(den_facs)
        if c.denominator != 1:
            den = f"{c.denominator}" + ("*" if den else "") + den
        if atoms > 1:
            den = f"({den})"
        return f"{body}/{den}" if den else body

    def __repr__(self) -> str:
        return f"QTFactored({self.pretty()})"

    __str__ = pretty

    def to_sympy(self):
        import sympy as sp

        q, t = sp.symbols("q t")
        if self.is_zero:
            return sp.Integer(0)
        expr = sp.Rational(self.coeff.numerator, self.coeff.denominator)
        expr *= q**self.mono.eq * t**self.mono.et
        for (a, b), e in self.factors:
            expr *= (1 - q**a * t**b) ** e
        return expr


ONE = QTFactored()
ZERO = QTFactored(0)


def monomial(eq: int, et: int, coeff=1) -> QTFactored:
    return QTFactored(coeff, (eq, et))


def binomial(a: int, b: int, e: int = 1) -> QTFactored:
    """The factor (1 - q^a t^b)^e."""
    return QTFactored(1, (0, 0), {(a, b): e})


def _merge(f1: tuple, f2: tuple, sign: int) -> tuple:
    if not f2:
        return f1
    fac = dict(f1)
    for key, e in f2:
        v = fac.get(key, 0) + sign * e
        if v:
            fac[key] = v
        else:
            del fac[key]
    return tuple(sorted(fac.items()))


def qt_mul(x: QTFactored, y: QTFactored) -> QTFactored:
    if x.is_zero or y.is_zero:
        return ZERO
    return QTFactored._make(x.coeff * y.coeff, x.mono * y.mono, _merge(x.factors, y.factors, 1))


def qt_div(x: QTFactored, y: QTFactored) -> QTFactored:
    if y.is_zero:
        raise DivideByZero("division by the zero rational function")
    if x.is_zero:
        return ZERO
    return QTFactored._make(x.coeff / y.coeff, x.mono / y.mono, _merge(x.factors, y.factors, -1))


def qt_inv(x: QTFactored) -> QTFactored:
    return qt_div(ONE, x)


def qt_prod(xs: Iterable[QTFactored]) -> QTFactored:
    coeff = Fraction(1)
    mx = my = 0
    fac: dict = {}
    for x in xs:
        if x.is_zero:
            return ZERO
        coeff *= x.coeff
        mx += x.mono.eq
        my += x.mono.et
        for key, e in x.factors:
            fac[key] = fac.get(key, 0) + e
    return QTFactored._make(
        coeff, Monomial(mx, my), tuple(sorted((k, e) for k, e in fac.items() if e))
    )


def qt_from_point_difference(p1, p2) -> QTFactored:
    """The exact value of p1 - p2 for comparable points (monomials)."""
    x1, y1 = p1
    x2, y2 = p2
    dx, dy = x2 - x1, y2 - y1
    if dx == 0 and dy == 0:
        raise EqualPoints(f"points coincide: {tuple(p1)}")
    if dx >= 0 and dy >= 0:
        return QTFactored._make(Fraction(1), Monomial(x1, y1), (((dx, dy), 1),))
    if dx <= 0 and dy <= 0:
        return QTFactored._make(Fraction(-1), Monomial(x2, y2), (((-dx, -dy), 1),))
    raise IncomparablePoints(f"points {tuple(p1)} and {tuple(p2)} are incomparable")


def qt_expand(x: QTFactored) -> tuple[LaurentPoly2, LaurentPoly2]:
    if x.is_zero:
        return LaurentPoly2(), LaurentPoly2.constant(1)
    num = LaurentPoly2._raw(
        kernels.add_scaled({}, expand_factors(x.numerator_factors()), x.coeff, *x.mono)
    )
    den = LaurentPoly2._raw(dict(expand_factors(x.denominator_factors())))
    return num, den


def qt_eval(x: QTFactored, q0, t0) -> Fraction:
    q0, t0 = _as_fraction(q0), _as_fraction(t0)
    if x.is_zero:
        return Fraction(0)
    ex, ey = x.mono
    if (q0 == 0 and ex < 0) or (t0 == 0 and ey < 0):
        raise PoleAtPoint(f"{x} has a pole at ({q0}, {t0})")
    val = x.coeff * q0**ex * t0**ey
    for (a, b), e in x.factors:
        f = 1 - q0**a * t0**b
        if f == 0:
            if e < 0:
                raise PoleAtPoint(f"{x} has a pole at ({q0}, {t0})")
            return Fraction(0)
        val *= f**e
    return val


def qt_substitute_inverse(x: QTFactored) -> QTFactored:
    """q -> 1/q, t -> 1/t, using 1 - q^-a t^-b = -q^-a t^-b (1 - q^a t^b)."""
    if x.is_zero:
        return x
    sign = 1
    mx, my = -x.mono.eq, -x.mono.et
    for (a, b), e in x.factors:
        if e % 2:
            sign = -sign
        mx -= a * e
        my -= b * e
    return QTFactored._make(x.coeff * sign, Monomial(mx, my), x.factors)


def qt_swap(x: QTFactored) -> QTFactored:
    """Interchange q and t."""
    if x.is_zero:
        return x
    return QTFactored._make(
        x.coeff,
        Monomial(x.mono.et, x.mono.eq),
        tuple(sorted(((b, a), e) for (a, b), e in x.factors)),
    )


def _limit_zero(x: QTFactored, var: str) -> QTFactored:
    if x.is_zero:
        return x
    idx = 1 if var == "t" else 0
    power = x.mono[idx]
    keep = tuple((key, e) for key, e in x.factors if key[idx] == 0)
    if power > 0:
        return ZERO
    if power < 0:
        raise LimitDiverges(f"{x} diverges as {var} -> 0")
    return QTFactored._make(x.coeff, x.mono, keep)


def qt_limit(x: QTFactored, which: str) -> QTFactored:
    """Limit as one variable tends to 0 or infinity.

    ``which`` is one of ``t->0``, ``q->0``, ``t->inf``, ``q->inf``.
    The result is a function of the remaining variable.
    """
    w = which.replace(" ", "").replace("→", "->").replace("∞", "inf")
    if w in ("t->0", "q->0"):
        return _limit_zero(x, w[0])
    if w in ("t->inf", "q->inf"):
        return qt_substitute_inverse(_limit_zero(qt_substitute_inverse(x), w[0]))
    raise ValueError(f"unknown limit {which!r}")


# --------------------------------------------------------------------------
# Sums


class QTSum:
    """Accumulator for a sum of QTFactored values.

    Value is ``num / prod (1 - q^a t^b)^den[a, b]``.
    """

    __slots__ = ("num", "den")

    def __init__(self, terms: Iterable[QTFactored] = ()):
        self.num: dict = {}
        self.den: dict[tuple[int, int], int] = {}
        for x in terms:
            self.add(x)

    def copy(self) -> "QTSum":
        out = QTSum()
        out.num = dict(self.num)
        out.den = dict(self.den)
        return out

    def _raise_den(self, den: dict) -> None:
        extra = []
        for key, e in den.items():
            cur = self.den.get(key, 0)
            if e > cur:
                extra.append((key[0], key[1], e - cur))
                self.den[key] = e
        if extra and self.num:
            self.num = kernels.poly_mul(self.num, expand_factors(extra))

    def add(self, x: QTFactored, sign: int = 1) -> "QTSum":
        if x.is_zero:
            return self
        xden = {key: -e for key, e in x.factors if e < 0}
        self._raise_den(xden)
        facs = [(a, b, e) for (a, b), e in x.factors if e > 0]
        for key, e in self.den.items():
            diff = e - xden.get(key, 0)
            if diff:
                facs.append((key[0], key[1], diff))
        poly = expand_factors(facs)
        kernels.add_scaled(self.num, poly, sign * x.coeff, x.mono.eq, x.mono.et)
        return self

    def add_sum(self, other: "QTSum", sign: int = 1) -> "QTSum":
        self._raise_den(other.den)
        facs = [(a, b, e - other.den.get((a, b), 0)) for (a, b), e in self.den.items()]
        poly = kernels.poly_mul(other.num, expand_factors([f for f in facs if f[2]]))
        kernels.add_scaled(self.num, poly, sign, 0, 0)
        return self

    def mul(self, x: QTFactored) -> "QTSum":
        """In place multiplication by a factored value."""
        if x.is_zero:
            self.num = {}
            return self
        facs = []
        for (a, b), e in x.factors:
            if e > 0:
                cur = self.den.get((a, b), 0)
                cancel = min(cur, e)
                if cancel:
                    self.den[(a, b)] = cur - cancel
                    if not self.den[(a, b)]:
                        del self.den[(a, b)]
                if e > cancel:
                    facs.append((a, b, e - cancel))
            else:
                self.den[(a, b)] = self.den.get((a, b), 0) - e
        poly = kernels.poly_mul(self.num, expand_factors(facs)) if facs else self.num
        self.num = kernels.add_scaled({}, poly, x.coeff, x.mono.eq, x.mono.et)
        return self

    def is_zero(self) -> bool:
        return not self.num

    def equals(self, other) -> bool:
        diff = self.copy()
        if isinstance(other, QTSum):
            diff.add_sum(other, -1)
        else:
            diff.add(other, -1)
        return diff.is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (QTSum, QTFactored)):
            return NotImplemented
        return self.equals(other)

    __hash__ = None  # type: ignore[assignment]

    def numerator(self) -> LaurentPoly2:
        return LaurentPoly2(self.num)

    def denominator(self) -> LaurentPoly2:
        return LaurentPoly2(dict(expand_factors([(a, b, e) for (a, b), e in self.den.items()])))

    def evaluate(self, q0, t0) -> Fraction:
        q0, t0 = _as_fraction(q0), _as_fraction(t0)
        den = Fraction(1)
        for (a, b), e in self.den.items():
            den *= (1 - q0**a * t0**b) ** e
        if den == 0:
            raise PoleAtPoint(f"sum has a pole at ({q0}, {t0})")
        return LaurentPoly2._raw(self.num).evaluate(q0, t0) / den

    def render(self) -> str:
        den = " * ".join(f"(1-q^{a} t^{b})^{e}" for (a, b), e in sorted(self.den.items()))
        num = str(LaurentPoly2._raw(self.num))
        return f"({num}) / ({den or '1'})"

    def to_json(self) -> dict:
        return {
            "num": [[x, y, str(c)] for (x, y), c in sorted(self.num.items())],
            "den": [[a, b, e] for (a, b), e in sorted(self.den.items())],
        }

    def pretty(self) -> str:
        """Display form: factored over the (1 - q^a t^b) basis when possible."""
        f = self.as_factored()
        if f is not None:
            return f.pretty()
        import sympy as sp

        q, t = sp.symbols("q t")
        num = sum(sp.Rational(c.numerator, c.denominator) * q**x * t**y for (x, y), c in self.num.items())
        den = sp.Mul(*[(1 - q**a * t**b) ** e for (a, b), e in self.den.items()])
        expr = sp.factor(num / den)
        try:
            return from_sympy(expr).pretty()
        except ValueError:
            return str(expr).replace("**", "^")

    def as_factored(self) -> QTFactored | None:
        """Return the sum as a single QTFactored when it is one term."""
        if not self.num:
            return ZERO
        if len(self.num) == 1:
            ((x, y), c), = self.num.items()
            return QTFactored(c, (x, y), {k: -e for k, e in self.den.items()})
        return None

    def __repr__(self) -> str:
        return f"QTSum({self.render()})"


def qt_sum_equals(xs: Iterable[QTFactored], target: QTFactored) -> bool:
    acc = QTSum(xs)
    acc.add(target, -1)
    return acc.is_zero()


# --------------------------------------------------------------------------
# Jack parameter

_ALPHA_RING, _ALPHA = ring("alpha", QQ)


class AlphaRational:
    """Reduced rational function in alpha with monic-sign denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1, _reduced: bool = False):
        num = _ALPHA_RING(num) if not hasattr(num, "ring") else num
        den = _ALPHA_RING(den) if not hasattr(den, "ring") else den
        if not den:
            raise DivideByZero("zero denominator in Q(alpha)")
        if not _reduced:
            _, num, den = num.cofactors(den)
            lc = den.LC
            if lc != 1:
                num = num.quo_ground(lc)
                den = den.quo_ground(lc)
        if not num:
            den = _ALPHA_RING(1)
        self.num = num
        self.den = den

    @classmethod
    def alpha(cls) -> "AlphaRational":
        return cls(_ALPHA)

    @classmethod
    def linear(cls, a: int, b: int) -> "AlphaRational":
        """The polynomial a*alpha + b."""
        return cls(a * _ALPHA + b)

    def is_zero(self) -> bool:
        return not self.num

    def __add__(self, other) -> "AlphaRational":
        other = _alpha(other)
        if self.den == other.den:
            return AlphaRational(self.num + other.num, self.den)
        return AlphaRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "AlphaRational":
        return AlphaRational(-self.num, self.den, _reduced=True)

    def __sub__(self, other) -> "AlphaRational":
        return self + (-_alpha(other))

    def __rsub__(self, other) -> "AlphaRational":
        return _alpha(other) - self

    def __mul__(self, other) -> "AlphaRational":
        other = _alpha(other)
        return AlphaRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "AlphaRational":
        other = _alpha(other)
        if other.is_zero():
            raise DivideByZero("division by zero in Q(alpha)")
        return AlphaRational(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "AlphaRational":
        return _alpha(other) / self

    def __pow__(self, k: int) -> "AlphaRational":
        if k >= 0:
            return AlphaRational(self.num**k, self.den**k, _reduced=True)
        return AlphaRational(1) / (self ** (-k))

    def __eq__(self, other: object) -> bool:
        try:
            other = _alpha(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((str(self.num), str(self.den)))

    def evaluate(self, a0) -> Fraction:
        a0 = _as_fraction(a0)
        n = self.num.evaluate(_ALPHA, QQ(a0.numerator, a0.denominator))
        d = self.den.evaluate(_ALPHA, QQ(a0.numerator, a0.denominator))
        if not d:
            raise PoleAtPoint(f"{self} has a pole at alpha = {a0}")
        return Fraction(int(n.numerator), int(n.denominator)) / Fraction(int(d.numerator), int(d.denominator))

    def __str__(self) -> str:
        import sympy as sp

        # factored with integer coefficients, e.g. alpha/(2*(alpha + 1)^2)
        return str(sp.factor(self.num.as_expr() / self.den.as_expr())).replace("**", "^")

    __repr__ = __str__


def _alpha(x) -> AlphaRational:
    if isinstance(x, AlphaRational):
        return x
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return AlphaRational(QQ(x.numerator, x.denominator))
    raise TypeError(f"cannot convert {x!r} to AlphaRational")


def qt_jack_limit(x: QTFactored) -> AlphaRational:
    """Limit under q = t^alpha, t -> 1; (1 - q^a t^b) contributes (a alpha + b)."""
    if x.is_zero:
        return AlphaRational(0)
    balance = sum(e for _, e in x.factors)
    if balance:
        raise JackLimitUndefined(
            f"{x} has {balance:+d} more numerator than denominator binomials"
        )
    num = _ALPHA_RING(QQ(x.coeff.numerator, x.coeff.denominator))
    den = _ALPHA_RING(1)
    for (a, b), e in x.factors:
        lin = a * _ALPHA + b
        if e > 0:
            num *= lin**e
        else:
            den *= lin ** (-e)
    return AlphaRational(num, den)


# --------------------------------------------------------------------------
# Text input


def parse_qt(text: str) -> QTFactored:
    """Parse a product/quotient of monomials and binomials 1 - q^a t^b or 1 + q^a t^b.

    ``1 + m`` is rewritten as ``(1 - m^2) / (1 - m)``. Example:
    ``"q*(1-t)^2/((1-q^2*t^2)*(1+q))"``.
    """
    import sympy as sp
    from sympy.parsing.sympy_parser import (
        convert_xor,
        implicit_multiplication_application,
        parse_expr,
        standard_transformations,
    )

    q, t = sp.symbols("q t")
    transformations = standard_transformations + (convert_xor, implicit_multiplication_application)
    expr = parse_expr(text.replace("−", "-"), local_dict={"q": q, "t": t}, transformations=transformations)
    return from_sympy(expr)


def from_sympy(expr) -> QTFactored:
    import sympy as sp

    q, t = sp.symbols("q t")

    def mono_of(term) -> tuple[Fraction, int, int]:
        coeff, rest = term.as_coeff_Mul()
        powers = rest.as_powers_dict()
        extra = set(powers) - {q, t, sp.Integer(1)}
        if extra:
            raise ValueError(f"not a monomial: {term}")
        return Fraction(int(coeff.p), int(coeff.q)), int(powers.get(q, 0)), int(powers.get(t, 0))

    def conv(e) -> QTFactored:
        if e.is_Mul:
            return qt_prod(conv(a) for a in e.args)
        if e.is_Pow:
            base, exp = e.args
            if not exp.is_Integer:
                raise ValueError(f"non-integer exponent in {e}")
            k = int(exp)
            b = conv(base)
            return b**k
        if e.is_Add:
            # sympy distributes 2*(1 - t) into 2 - 2*t; take the content back out
            content, prim = e.as_content_primitive()
            if content != 1:
                return QTFactored(Fraction(int(content.p), int(content.q))) * conv(prim)
            terms = e.as_ordered_terms()
            if len(terms) != 2:
                raise ValueError(f"only binomials 1 +- q^a t^b are supported: {e}")
            consts = [x for x in terms if x.is_number]
            others = [x for x in terms if not x.is_number]
            if len(consts) != 1 or consts[0] not in (1, -1):
                raise ValueError(f"unsupported binomial {e}")
            c0 = int(consts[0])
            c, a, b = mono_of(others[0])
            if a < 0 or b < 0:
                raise ValueError(f"unsupported binomial {e}")
            if c == -c0:  # c0 (1 - q^a t^b)
                return QTFactored(c0, (0, 0), {(a, b): 1})
            if c == c0:  # c0 (1 + q^a t^b)
                return QTFactored(c0, (0, 0), {(2 * a, 2 * b): 1, (a, b): -1})
            raise ValueError(f"unsupported binomial {e}")
        c, a, b = mono_of(e)
        return QTFactored(c, (a, b))

    return conv(sp.sympify(expr))


def parse_alpha(text: str) -> AlphaRational:
    """Parse a rational expression in alpha, e.g. ``"2*alpha/(2*alpha+1)"``."""
    import sympy as sp
    from sympy.parsing.sympy_parser import (
        convert_xor,
        implicit_multiplication_application,
        parse_expr,
        standard_transformations,
    )

    a = sp.Symbol("alpha")
    transformations = standard_transformations + (convert_xor, implicit_multiplication_application)
    expr = parse_expr(text.replace("α", "alpha"), local_dict={"alpha": a}, transformations=transformations)
    num, den = sp.fraction(sp.together(expr))
    if (sp.Poly(num, a).free_symbols | sp.Poly(den, a).free_symbols) - {a}:
        raise ValueError(f"expression in alpha expected: {text}")
    return AlphaRational(_ALPHA_RING(sp.expand(num)), _ALPHA_RING(sp.expand(den)))
