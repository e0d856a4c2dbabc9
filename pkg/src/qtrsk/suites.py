"""Verification suites: worked examples, tables and exhaustive identity sweeps."""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .errors import BoundaryMismatch, ColumnConstraintViolated, UnknownSuite
from .exact import (
    ONE,
    ZERO,
    AlphaRational,
    LaurentPoly2,
    QTSum,
    parse_alpha,
    parse_qt,
    qt_eval,
    qt_jack_limit,
    qt_limit,
    qt_substitute_inverse,
    qt_swap,
)
from .growth import (
    Distribution,
    Matrix01,
    all_matrices,
    backward_distribution,
    backward_growths,
    classical_dual_rsk,
    configuration_distribution,
    configuration_inputs,
    deterministic_growth,
    enumerate_growths,
    forward_distribution,
    forward_growths,
    growth_insert,
    growth_prob,
    jack_swap_check,
    p_marginal,
    pair_weight,
    qrst_word_distribution,
    qrst_word_insert,
    queue_insert,
    skew_forward_distribution,
    transpose_symmetry_check,
)
from .local_rules import (
    alpha_beta_gamma_prob,
    backward_prob,
    cell_weight_product,
    corner_frame,
    f_col_indices,
    f_row_indices,
    forward_prob,
    forward_prob_hall_littlewood,
    forward_prob_qwhittaker,
    interpolation_prob,
    inversion_partner,
    mu_of,
    nu_of,
    path_exponents,
    square_forward,
    tau_exponents,
    tau_monomial,
    weight_ratio,
    weight_ratio_reorganized,
)
from .partitions import (
    Cell,
    D_k,
    D_kl,
    U_k,
    U_kl,
    addable_outer_corners,
    compatible_pairs,
    contains,
    format_partition,
    intersect,
    is_horizontal_strip,
    outer_corners,
    is_vertical_strip,
    partitions_up_to,
    size,
    skew_cells,
    subpartitions,
    superpartitions,
    union,
)
from .weights import (
    Tableau,
    chain_content,
    chains,
    omega,
    omega_bar,
    phi,
    phi_star,
    pieri_check,
    psi,
    tableau_weight,
)

THREADS_ENV = "QTRSK_THREADS"


@dataclass
class Options:
    max_cells: int | None = None
    rows: int | None = None
    cols: int | None = None
    seed: int = 2024
    eval_point: tuple[Fraction, Fraction] | None = None


@dataclass
class VerificationReport:
    suite: str
    instances: int = 0
    failures: list[dict] = field(default_factory=list)
    wall_time: float = 0.0
    bounds: dict = field(default_factory=dict)

    def check(self, ok: bool, item: str, expected="", actual="") -> bool:
        """Count one instance; values are rendered only when the check fails."""
        self.instances += 1
        if not ok:
            self.failures.append({"input": item, "expected": _pretty(expected), "actual": _pretty(actual)})
        return ok

    def merge(self, count: int, failures: list[dict]) -> None:
        self.instances += count
        self.failures.extend(failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        # wall time is left out so repeated runs give identical output
        return {
            "suite": self.suite,
            "bounds": self.bounds,
            "instances": self.instances,
            "failures": sorted(self.failures, key=lambda f: f["input"]),
            "ok": self.ok,
        }

    def text(self) -> str:
        status = "ok" if self.ok else "FAIL"
        bounds = " ".join(f"{k}={v}" for k, v in self.bounds.items())
        lines = [f"{self.suite:<20} {status:<4} {self.instances:>7} instances {len(self.failures):>5} failures  {self.wall_time:7.2f}s  {bounds}".rstrip()]
        for f in sorted(self.failures, key=lambda f: f["input"])[:20]:
            lines.append(f"  {f['input']}: expected {f['expected']}, got {f['actual']}")
        if len(self.failures) > 20:
            lines.append(f"  ... {len(self.failures) - 20} more")
        return "\n".join(lines)


# --------------------------------------------------------------------------
# Helpers


def threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _pmap(fn: Callable, items: list) -> list:
    n = threads()
    if n <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=n) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * n))))


def _pt(p) -> str:
    return format_partition(p) or "-"


def _case(lam, rho, R=None, S=None) -> str:
    s = f"lam={_pt(lam)} rho={_pt(rho)}"
    if R is not None:
        s += f" R={set(R) or '{}'}"
    if S is not None:
        s += f" S={set(S) or '{}'}"
    return s


def frame_cases(lam, rho) -> Iterator[tuple]:
    """(frame, k, R, S) for every admissible subset pair of the frame."""
    f = corner_frame(lam, rho)
    d = f.d
    for k in range(d + 2):
        for kr in (k - 1, k):
            if 0 <= kr <= d:
                for R in combinations(range(1, d + 1), kr):
                    for S in combinations(range(d + 1), k):
                        yield f, k, R, S


def _run_pairs(report: VerificationReport, worker: Callable, max_cells: int) -> None:
    for count, fails in _pmap(worker, compatible_pairs(max_cells)):
        report.merge(count, fails)


def _fail(item, expected, actual) -> dict:
    return {"input": item, "expected": str(expected), "actual": str(actual)}


def _pretty(x) -> str:
    if hasattr(x, "pretty"):
        return x.pretty()
    return str(x)


def _points(opts: Options, count: int = 3) -> list[tuple[Fraction, Fraction]]:
    if opts.eval_point is not None:
        return [opts.eval_point]
    rng = random.Random(opts.seed)
    out = []
    while len(out) < count:
        q0 = Fraction(rng.randint(1, 97), rng.randint(2, 97))
        t0 = Fraction(rng.randint(1, 97), rng.randint(2, 97))
        if q0 != 1 and t0 != 1:
            out.append((q0, t0))
    return out


def _T(text: str, flavor: str = "ssyt") -> Tableau:
    return Tableau.parse(text, flavor)


# --------------------------------------------------------------------------
# Tables


GOLDEN_MATRICES = ("110;001", "101;010", "011;100")
GOLDEN_PAIRS = (("1,1;2", "1,2;3"), ("1,1;2", "1,3;2"), ("1,1,2", "1,2,3"))
FORWARD_GOLDENS = {
    "110;001": ("t*(1-q^2)/(1-q^2*t)", "0", "(1-t)/(1-q^2*t)"),
    "101;010": ("(1-q)*(1-t)/((1-q*t)*(1-q^2*t))", "t*(1-q)/(1-q*t)", "q*(1-t)/(1-q^2*t)"),
    "011;100": ("q*(1-q)*(1-t)/((1-q*t)*(1-q^2*t))", "(1-q)/(1-q*t)", "q^2*(1-t)/(1-q^2*t)"),
}
PAIR_WEIGHTS = (
    "(1-q^2)*(1-q*t^2)/((1-q*t)*(1-q^2*t))",
    "(1-q)*(1-t^2)/((1-t)*(1-q*t))",
    "(1-t)*(1-q^3)/((1-q)*(1-q^2*t))",
)
JACK_GOLDENS = {
    "110;001": ("2*alpha/(2*alpha+1)", "0", "1/(2*alpha+1)"),
    "101;010": ("alpha/((alpha+1)*(2*alpha+1))", "alpha/(alpha+1)", "1/(2*alpha+1)"),
    "011;100": ("alpha/((alpha+1)*(2*alpha+1))", "alpha/(alpha+1)", "1/(2*alpha+1)"),
}


def _pair(P: str, Q: str) -> tuple[Tableau, Tableau]:
    return _T(P), _T(Q, "dual_ssyt")


def suite_table1(opts: Options, rep: VerificationReport) -> None:
    for a in GOLDEN_MATRICES:
        dist = forward_distribution(Matrix01.parse(a))
        for (P, Q), golden in zip(GOLDEN_PAIRS, FORWARD_GOLDENS[a]):
            exp = ZERO if golden == "0" else parse_qt(golden)
            got = dist.get(_pair(P, Q))
            rep.check(got.equals(exp), f"A={a} P={P} Q={Q}", golden, got)
        rep.check(dist.sums_to_one(), f"A={a} row sum", 1, dist.total())
    for (P, Q), golden in zip(GOLDEN_PAIRS, PAIR_WEIGHTS):
        Pt, Qt = _pair(P, Q)
        col = QTSum()
        for a in GOLDEN_MATRICES:
            col.add_sum(forward_distribution(Matrix01.parse(a)).get((Pt, Qt)))
        w = pair_weight(Pt, Qt, 2, 3)
        rep.check(w == parse_qt(golden), f"weight P={P} Q={Q}", golden, w.pretty())
        rep.check(col.equals(w), f"column sum P={P} Q={Q}", golden, col)


def suite_table2_jack(opts: Options, rep: VerificationReport) -> None:
    for a in GOLDEN_MATRICES:
        dist = forward_distribution(Matrix01.parse(a), "alpha")
        for (P, Q), golden in zip(GOLDEN_PAIRS, JACK_GOLDENS[a]):
            exp = parse_alpha(golden)
            got = dist.get(_pair(P, Q))
            rep.check(got == exp, f"A={a} P={P} Q={Q}", golden, got)
        rep.check(dist.sums_to_one(), f"A={a} row sum", 1, dist.total())


# --------------------------------------------------------------------------
# Worked examples


def suite_example_4_2(opts: Options, rep: VerificationReport) -> None:
    f = corner_frame((2, 1), (2, 1))
    goldens = {
        (0, 1): "q*(1-t)^2*(1-q)/((1-q^2*t^2)*(1-q*t)*(1-q^2))",
        (1, 2): "t*(1-q)*(1-q^2*t)^2/((1-q*t)*(1-q^2*t^2)*(1-q^2))",
        (0, 2): "(1-t)*(1-q^2*t)*(1-q)/((1-q*t)^2*(1-q^2))",
    }
    for S, golden in goldens.items():
        p = forward_prob(f, (2,), S)
        rep.check(p == parse_qt(golden), _case((2, 1), (2, 1), (2,), S), golden, p.pretty())
    tot = QTSum(forward_prob(f, (2,), S) for S in goldens)
    rep.check(tot.equals(ONE), "three probabilities sum to 1", 1, tot)


def almost_rectangular_weights(h: int, v: int):
    """(down weights, up weights, expected down, expected up) for the two-parameter family."""
    lam = (h,) * v + (1,)
    rho = (h + 1,) + (h,) * (v - 1)
    down = {mu: omega(lam, rho, mu) for mu in D_k(lam, rho, 1) + D_k(lam, rho, 0)}
    up = {nu: omega_bar(lam, rho, nu) for nu in U_k(lam, rho, 1)}
    exp_down = [
        ONE,
        parse_qt(f"(1-t^{v - 1})*(1-q^{h - 1})/((1-q*t^{v - 2})*(1-q^{h - 2}*t))"),
    ]
    exp_up = [
        parse_qt(f"(1-t^{v - 1})*(1-q^{h}*t^{v - 2})/((1-q*t^{v - 2})*(1-q^{h - 1}*t^{v - 1}))"),
        parse_qt(f"(1-q^{h - 2}*t^{v})*(1-q^{h - 1})/((1-q^{h - 2}*t)*(1-q^{h - 1}*t^{v - 1}))"),
    ]
    return lam, rho, down, up, exp_down, exp_up


def suite_example_3_5(opts: Options, rep: VerificationReport) -> None:
    params = [(8, 4)] + [(h, v) for h in range(3, 7) for v in range(2, 5)]
    for h, v in params:
        lam, rho, down, up, exp_down, exp_up = almost_rectangular_weights(h, v)
        kap = intersect(lam, rho)
        got_down = sorted(down.values(), key=lambda x: x.pretty())
        rep.check(down.get(kap) == ONE, f"h={h} v={v} weight of lam&rho", 1, down.get(kap))
        rep.check(
            sorted(exp_down, key=lambda x: x.pretty()) == got_down,
            f"h={h} v={v} down weights",
            [x.pretty() for x in exp_down],
            [x.pretty() for x in got_down],
        )
        got_up = sorted(up.values(), key=lambda x: x.pretty())
        rep.check(
            sorted(exp_up, key=lambda x: x.pretty()) == got_up,
            f"h={h} v={v} up weights",
            [x.pretty() for x in exp_up],
            [x.pretty() for x in got_up],
        )
        lhs, rhs = QTSum(down.values()), QTSum(up.values())
        rep.check(lhs.equals(rhs), f"h={h} v={v} commutation", lhs, rhs)


MULTISET_INSERT_GOLDENS = {
    "1,2,2;3,3": "(1-q*t)/(1-q^2*t)",
    "1,2,3;2,3": "q^2*t*(1-q)^2*(1-t)^2/((1-q*t)*(1-q^2)*(1-q^2*t)*(1-q^2*t^2))",
    "1,2;2,3;3": "q*t^2*(1-q)^2*(1-q^2*t)/((1-q*t)*(1-q^2)*(1-q^2*t^2))",
    "1,2,3;2;3": "q*t*(1-q)^2*(1-t)/((1-q^2)*(1-q*t)^2)",
}
WORD_INSERT_GOLDENS = {
    "1,1,2,3;2,2": "q*t*(1-q)/(1-q^2*t)",
    "1,1,2,2,3;2": "q*(1-q^3*t^2)^2/((1+q*t)*(1-q^3*t)*(1-q^4*t^2))",
    "1,1,2,2;2,3": "(1-q)*(1-t)*(1-q^3*t^2)/((1-q^2*t)*(1-q^2*t^2)*(1-q^3*t))",
    "1,1,2,2;2;3": "t*(1-q)^2/((1-q^2*t^2)*(1-q^4*t^2))",
}


def _check_dist(rep: VerificationReport, name: str, dist: Distribution, goldens: dict) -> None:
    support = sorted(o.text() for o in dist.support())
    rep.check(support == sorted(goldens), f"{name} support", sorted(goldens), support)
    for text, golden in goldens.items():
        got = dist.get(_T(text))
        rep.check(got.equals(parse_qt(golden)), f"{name} -> {text}", golden, got)
    rep.check(dist.sums_to_one(), f"{name} sum", 1, dist.total())


def suite_example_4_14(opts: Options, rep: VerificationReport) -> None:
    T = _T("1,2;3")
    dist = growth_insert(T, (2, 3), "qt")
    _check_dist(rep, "insert 2,3 into 1,2;3", dist, MULTISET_INSERT_GOLDENS)
    rep.check(dist.same_as(queue_insert(T, (2, 3), "qt")), "insertion queue agrees with the growth column")


def _ssyt_up_to(max_cells: int, max_entry: int) -> Iterator[Tableau]:
    for lam in partitions_up_to(max_cells):
        for ch in chains(lam, max_entry):
            yield Tableau.from_chain(ch, "ssyt")


def suite_example_words(opts: Options, rep: VerificationReport) -> None:
    dist = qrst_word_insert(_T("1,1,2,3;2"), 2)
    _check_dist(rep, "insert 2 into 1,1,2,3;2", dist, WORD_INSERT_GOLDENS)
    d0 = qrst_word_insert(Tableau(()), 1)
    rep.check(len(d0) == 1 and d0.get(_T("1")).equals(ONE), "insert 1 into the empty tableau")
    cells = opts.max_cells if opts.max_cells is not None else 6
    letters = opts.rows if opts.rows is not None else 5
    for T in _ssyt_up_to(cells, letters):
        for i in range(1, letters + 1):
            d = qrst_word_insert(T, i)
            rep.check(d.sums_to_one(), f"insert {i} into {T.text()}", 1, d.total())
    m = min(letters, 3)
    n = opts.cols if opts.cols is not None else 3
    for A in all_matrices(m, n):
        if A.is_word():
            rep.check(
                forward_distribution(A).same_as(qrst_word_distribution(A)),
                f"A={A.text()} growth vs word insertion",
            )


COLUMN_INSERT_MATRIX = "10001;11010;01100"
COLUMN_INSERT_STEPS = ("1", "1;2", "1,2;2", "1,2;2;3", "1,2;2,3;3", "1,2,2;2,3;3", "1,1,2,2;2,3;3")


def suite_dual_rsk_ex_2_1(opts: Options, rep: VerificationReport) -> None:
    A = Matrix01.parse(COLUMN_INSERT_MATRIX)
    P, Q = classical_dual_rsk(A, "column")
    rep.check(P.text() == "1,1,2,2;2,3;3", "column insertion P", "1,1,2,2;2,3;3", P.text())
    rep.check(Q.text() == "1,2,4,5;1,3;2", "column insertion Q", "1,2,4,5;1,3;2", Q.text())
    # replay the insertion sequence letter by letter
    steps = []
    T = Tableau(())
    for j in range(1, A.n + 1):
        for i in A.column_ones(j):
            T = growth_insert(T, (i,), "col")
            steps.append(T.text())
    rep.check(tuple(steps) == COLUMN_INSERT_STEPS, "column insertion steps", COLUMN_INSERT_STEPS, tuple(steps))
    G = deterministic_growth(A, "col")
    rep.check((G.P(), G.Q()) == (P, Q), "column growth diagram", (P.text(), Q.text()), (G.P().text(), G.Q().text()))
    ex25 = Matrix01.parse("010;101;111")
    k = len(enumerate_growths(ex25))
    rep.check(k == 3, "growths of 010;101;111", 3, k)
    rep.check(len(enumerate_growths(Matrix01.zeros(2, 2))) == 1, "growths of the zero matrix")
    m = opts.rows if opts.rows is not None else 3
    n = opts.cols if opts.cols is not None else 3
    for A in all_matrices(m, n):
        for rule, variant in (("row", "row"), ("col", "column")):
            G = deterministic_growth(A, rule)
            exp = classical_dual_rsk(A, variant)
            rep.check((G.P(), G.Q()) == exp, f"A={A.text()} {variant} insertion vs growth", exp, (G.P(), G.Q()))
    # simultaneous insertion agrees with sequential insertion
    for T in _ssyt_up_to(4, 3):
        for r in range(1, 4):
            for values in combinations(range(1, 5), r):
                col = growth_insert(T, values, "col")
                seq = T
                for v in values:
                    seq = growth_insert(seq, (v,), "col")
                rep.check(col == seq, f"T={T.text()} values={values} column traceable", seq.text(), col.text())
                row = growth_insert(T, values, "row")
                seq = T
                for v in reversed(values):
                    seq = growth_insert(seq, (v,), "row")
                rep.check(row == seq, f"T={T.text()} values={values} row traceable", seq.text(), row.text())
                for rule in ("row", "col"):
                    rep.check(
                        queue_insert(T, values, rule) == growth_insert(T, values, rule),
                        f"T={T.text()} values={values} {rule} queue",
                    )


# --------------------------------------------------------------------------
# Local-rule sweeps


def _w_sum_to_one(pair) -> tuple[int, list]:
    lam, rho = pair
    f = corner_frame(lam, rho)
    d = f.d
    count, fails = 0, []
    for k in range(d + 2):
        for kr in (k - 1, k):
            if not 0 <= kr <= d:
                continue
            for R in combinations(range(1, d + 1), kr):
                acc = QTSum(forward_prob(f, R, S) for S in combinations(range(d + 1), k))
                count += 1
                if not acc.equals(ONE):
                    fails.append(_fail(_case(lam, rho, R) + f" k={k} forward", 1, _pretty(acc)))
        if k > d + 1:
            continue
        for S in combinations(range(d + 1), k):
            acc = QTSum(
                backward_prob(f, R, S)
                for kr in (k - 1, k)
                if 0 <= kr <= d
                for R in combinations(range(1, d + 1), kr)
            )
            count += 1
            if not acc.equals(ONE):
                fails.append(_fail(_case(lam, rho, None, S) + f" k={k} backward", 1, _pretty(acc)))
    return count, fails


def suite_sum_to_one(opts: Options, rep: VerificationReport) -> None:
    _run_pairs(rep, _w_sum_to_one, opts.max_cells if opts.max_cells is not None else 8)


def _w_compatibility(pair) -> tuple[int, list]:
    lam, rho = pair
    count, fails = 0, []
    for f, k, R, S in frame_cases(lam, rho):
        mu, nu = mu_of(f, R), nu_of(f, S)
        lhs = omega(lam, rho, mu) * forward_prob(f, R, S)
        rhs = backward_prob(f, R, S) * omega_bar(lam, rho, nu)
        count += 1
        if lhs != rhs:
            fails.append(_fail(_case(lam, rho, R, S), lhs.pretty(), rhs.pretty()))
    return count, fails


def suite_compatibility(opts: Options, rep: VerificationReport) -> None:
    _run_pairs(rep, _w_compatibility, opts.max_cells if opts.max_cells is not None else 8)


def _w_commutation(pair) -> tuple[int, list]:
    lam, rho = pair
    d = len(addable_outer_corners(lam, rho)) - 1
    count, fails = 0, []
    for k in range(d + 2):
        lhs = QTSum(omega(lam, rho, mu) for mu in D_k(lam, rho, k) + D_k(lam, rho, k - 1))
        rhs = QTSum(omega_bar(lam, rho, nu) for nu in U_k(lam, rho, k))
        count += 1
        if not lhs.equals(rhs):
            fails.append(_fail(_case(lam, rho) + f" k={k}", _pretty(lhs), _pretty(rhs)))
    return count, fails


def suite_commutation(opts: Options, rep: VerificationReport) -> None:
    _run_pairs(rep, _w_commutation, opts.max_cells if opts.max_cells is not None else 8)


def _word_pairs(max_cells: int) -> list:
    out = []
    for u in partitions_up_to(max_cells):
        subs = [p for n in range(size(u) + 1) for p in subpartitions(u, n)]
        for lam in subs:
            for rho in subs:
                if union(lam, rho) == u and size(lam) >= size(rho):
                    out.append((lam, rho))
    return out


_CONVERT = parse_qt("(1-t)/(1-q)")


def _w_commutation_words(pair) -> tuple[int, list]:
    lam, rho = pair
    k = size(lam) - size(rho)
    lhs = QTSum(psi(nu, rho) * phi(nu, lam) for nu in U_kl(lam, rho, k + 1, 1))
    rhs = QTSum(psi(lam, mu) * phi(rho, mu) for mu in D_kl(lam, rho, k + 1, 1))
    for mu in D_kl(lam, rho, k, 0):
        rhs.add(_CONVERT * psi(lam, mu) * phi(rho, mu))
    if lhs.is_zero() and rhs.is_zero():
        return 0, []
    ok = lhs.equals(rhs)
    return 1, [] if ok else [_fail(_case(lam, rho) + f" k={k}", _pretty(lhs), _pretty(rhs))]


def suite_commutation_words(opts: Options, rep: VerificationReport) -> None:
    for count, fails in _pmap(_w_commutation_words, _word_pairs(opts.max_cells if opts.max_cells is not None else 8)):
        rep.merge(count, fails)


def _w_tau(pair) -> tuple[int, list]:
    lam, rho = pair
    count, fails = 0, []
    for f, k, R, S in frame_cases(lam, rho):
        p = forward_prob(f, R, S)
        count += 1
        if tau_exponents(f.d, R, S) != path_exponents(f.d, R, S):
            fails.append(_fail(_case(lam, rho, R, S) + " path exponents", tau_exponents(f.d, R, S), path_exponents(f.d, R, S)))
        if not p.is_zero and (p.coeff != 1 or p.mono != tau_monomial(f, R, S)):
            fails.append(_fail(_case(lam, rho, R, S) + " monomial part", tau_monomial(f, R, S), p.pretty()))
    return count, fails


LONG_FRAME_TAU = {
    ("S", 2): 1, ("R", 1): -1, ("S", 4): 1, ("R", 4): -1, ("S", 7): -1, ("R", 8): 1,
    ("O", 0): -1, ("I", 3): 1, ("O", 1): -2, ("I", 2): 2, ("O", 3): -1, ("I", 5): 1,
}


def suite_tau_paths(opts: Options, rep: VerificationReport) -> None:
    got = {k: v for k, v in tau_exponents(8, (1, 4, 8), (2, 4, 5, 7)).items() if v}
    rep.check(got == LONG_FRAME_TAU, "d=8 R={1,4,8} S={2,4,5,7}", LONG_FRAME_TAU, got)
    _run_pairs(rep, _w_tau, opts.max_cells if opts.max_cells is not None else 8)


def _w_abc(pair) -> tuple[int, list]:
    lam, rho = pair
    count, fails = 0, []
    for f, k, R, S in frame_cases(lam, rho):
        for direction, p in (("forward", forward_prob(f, R, S)), ("backward", backward_prob(f, R, S))):
            got = alpha_beta_gamma_prob(f, R, S, direction)
            count += 1
            if got != p:
                fails.append(_fail(_case(lam, rho, R, S) + f" {direction}", p.pretty(), got.pretty()))
    return count, fails


def suite_abc_oracle(opts: Options, rep: VerificationReport) -> None:
    _run_pairs(rep, _w_abc, opts.max_cells if opts.max_cells is not None else 8)


def _w_cells(pair) -> tuple[int, list]:
    lam, rho = pair
    count, fails = 0, []
    for f, k, R, S in frame_cases(lam, rho):
        mu, nu = mu_of(f, R), nu_of(f, S)
        direct = weight_ratio(mu, lam, rho, nu)
        for name, got in (("cell table", cell_weight_product(mu, lam, rho, nu)), ("cell pieces", weight_ratio_reorganized(mu, lam, rho, nu))):
            count += 1
            if got != direct:
                fails.append(_fail(_case(lam, rho, R, S) + f" {name}", direct.pretty(), got.pretty()))
    return count, fails


def suite_cell_weights(opts: Options, rep: VerificationReport) -> None:
    _run_pairs(rep, _w_cells, opts.max_cells if opts.max_cells is not None else 8)


def _w_special(pair) -> tuple[int, list]:
    lam, rho = pair
    count, fails = 0, []
    for f, k, R, S in frame_cases(lam, rho):
        p = forward_prob(f, R, S)
        for name, lim, closed in (("t=0", "t->0", forward_prob_qwhittaker), ("q=0", "q->0", forward_prob_hall_littlewood)):
            a, b = qt_limit(p, lim), closed(f, R, S)
            count += 1
            if a != b:
                fails.append(_fail(_case(lam, rho, R, S) + f" {name}", a.pretty(), b.pretty()))
    return count, fails


def suite_specializations(opts: Options, rep: VerificationReport) -> None:
    _run_pairs(rep, _w_special, opts.max_cells if opts.max_cells is not None else 8)


def _w_limits(pair) -> tuple[int, list]:
    lam, rho = pair
    count, fails = 0, []
    for f, k, R, S in frame_cases(lam, rho):
        p = forward_prob(f, R, S)
        for name, a, b, idx in (
            ("q,t->0", "t->0", "q->0", f_row_indices(f.d, k, R)),
            ("q,t->inf", "t->inf", "q->inf", f_col_indices(f.d, k, R)),
        ):
            got = qt_limit(qt_limit(p, a), b)
            exp = ONE if tuple(S) == tuple(idx) else ZERO
            count += 1
            if got != exp:
                fails.append(_fail(_case(lam, rho, R, S) + f" {name}", exp.pretty(), got.pretty()))
    return count, fails


def suite_limits_rsk(opts: Options, rep: VerificationReport) -> None:
    _run_pairs(rep, _w_limits, opts.max_cells if opts.max_cells is not None else 8)
    m = opts.rows if opts.rows is not None else 3
    n = opts.cols if opts.cols is not None else 3
    for A in all_matrices(m, n):
        for rule, variant in (("row", "row"), ("col", "column")):
            G = deterministic_growth(A, rule)
            exp = classical_dual_rsk(A, variant)
            rep.check((G.P(), G.Q()) == exp, f"A={A.text()} {variant} insertion vs growth", exp, (G.P(), G.Q()))


def _w_inversion(pair) -> tuple[int, list]:
    lam, rho = pair
    count, fails = 0, []
    for f, k, R, S in frame_cases(lam, rho):
        p = forward_prob(f, R, S)
        m2, l2, r2, n2 = inversion_partner(mu_of(f, R), lam, rho, nu_of(f, S))
        other = qt_swap(square_forward(m2, l2, r2, n2))
        count += 1
        if qt_substitute_inverse(p) != other:
            fails.append(_fail(_case(lam, rho, R, S), qt_substitute_inverse(p).pretty(), other.pretty()))
    return count, fails


def suite_inversion_symmetry(opts: Options, rep: VerificationReport) -> None:
    _run_pairs(rep, _w_inversion, opts.max_cells if opts.max_cells is not None else 8)


def _interp_params(rng: random.Random, d: int) -> tuple[list[Fraction], list[Fraction]]:
    while True:
        vals = [Fraction(rng.randint(-999, 999), rng.randint(1, 99)) for _ in range(2 * d + 2)]
        if len(set(vals)) == len(vals):
            return vals[: d + 1], vals[d + 1 :]


def suite_interpolation(opts: Options, rep: VerificationReport) -> None:
    rng = random.Random(opts.seed)
    max_d = opts.max_cells if opts.max_cells is not None else 4
    for d in range(1, max_d + 1):
        for trial in range(50):
            a, b = _interp_params(rng, d)
            for k in range(1, d + 2):
                for R in combinations(range(d + 1), k):
                    tot = sum(interpolation_prob(R, S, a, b) for S in combinations(range(d + 1), k))
                    rep.check(tot == 1, f"d={d} trial={trial} R={set(R)}", 1, tot)


# --------------------------------------------------------------------------
# Growth sweeps


def _box(opts: Options, m: int, n: int) -> list[tuple[int, int]]:
    m = opts.rows if opts.rows is not None else m
    n = opts.cols if opts.cols is not None else n
    return [(a, b) for a in range(1, m + 1) for b in range(1, n + 1)]


def _cauchy_box(args) -> tuple[int, list]:
    m, n, points = args
    count, fails = 0, []
    totals: dict = {}
    for A in all_matrices(m, n):
        dist = Distribution("qt")
        for G, p in forward_growths(A):
            key = (G.P(), G.Q())
            dist.add(key, p)
            totals.setdefault(key, QTSum()).add(p)
            pb = growth_prob(G, "backward")
            w = pair_weight(G.P(), G.Q(), m, n)
            count += 1
            if p != pb * w:
                fails.append(_fail(f"{m}x{n} A={A.text()} growth {G.text()}", p.pretty(), (pb * w).pretty()))
        count += 1
        if not dist.sums_to_one():
            fails.append(_fail(f"{m}x{n} A={A.text()} forward sum", 1, _pretty(dist.total())))
    # every pair of tableaux of one shape, enumerated independently of the growths
    pairs = []
    for lam in partitions_up_to(m * n):
        if len(lam) > m or (lam and lam[0] > n):
            continue
        ps = [Tableau.from_chain(c, "ssyt") for c in chains(lam, m)]
        qs = [Tableau.from_chain(c, "dual_ssyt") for c in chains(lam, n, "vertical")]
        pairs += [(P, Q) for P in ps for Q in qs]
    per_matrix: dict = {}
    for P, Q in pairs:
        w = pair_weight(P, Q, m, n)
        got = totals.get((P, Q), QTSum())
        count += 1
        if not got.equals(QTSum([w])):
            fails.append(_fail(f"{m}x{n} P={P.text()} Q={Q.text()} sum over A", w.pretty(), _pretty(got)))
        back = backward_distribution(P, Q, m, n)
        for A, v in back.items():
            per_matrix.setdefault(A, QTSum()).add_sum(v.copy().mul(w))
        count += 1
        if not back.sums_to_one():
            fails.append(_fail(f"{m}x{n} P={P.text()} Q={Q.text()} backward sum", 1, _pretty(back.total())))
    for A in all_matrices(m, n):
        got = per_matrix.get(A, QTSum())
        count += 1
        if not got.equals(QTSum([ONE])):
            fails.append(_fail(f"{m}x{n} A={A.text()} weighted backward sum", 1, _pretty(got)))
    count += 1
    if set(totals) - set(pairs):
        fails.append(_fail(f"{m}x{n} outcomes", "tableau pairs", "unexpected outcome"))
    # coefficientwise dual Cauchy identity
    for q0, t0 in points:
        lhs: dict = {}
        for A in all_matrices(m, n):
            key = (A.row_sums(), A.column_sums())
            lhs[key] = lhs.get(key, 0) + 1
        rhs: dict = {}
        for P, Q in pairs:
            key = (P.content(m), Q.content(n))
            rhs[key] = rhs.get(key, Fraction(0)) + qt_eval(pair_weight(P, Q, m, n), q0, t0)
        for key in sorted(set(lhs) | set(rhs)):
            count += 1
            if lhs.get(key, 0) != rhs.get(key, 0):
                fails.append(_fail(f"{m}x{n} content {key} at q={q0} t={t0}", lhs.get(key, 0), rhs.get(key, 0)))
    return count, fails


def suite_cauchy(opts: Options, rep: VerificationReport) -> None:
    points = _points(opts)
    jobs = [(m, n, points) for m, n in _box(opts, 3, 3)]
    for count, fails in _pmap(_cauchy_box, jobs):
        rep.merge(count, fails)


def suite_pieri(opts: Options, rep: VerificationReport) -> None:
    points = _points(opts)
    max_mu = opts.max_cells if opts.max_cells is not None else 5
    for mu in partitions_up_to(max_mu):
        for r in range(0, 4):
            for m in range(1, 4):
                for q0, t0 in points:
                    rep.check(pieri_check(mu, r, m, q0, t0), f"mu={_pt(mu)} r={r} m={m} at q={q0} t={t0}")
    # one growth column whose west edge is a tableau T of shape mu:
    # sum over T and A of psi_T P(T, A -> T') equals psi_T' phi*_{lam/mu}
    max_skew = min(max_mu, 4)
    for mu in partitions_up_to(max_skew):
        for m in range(max(1, len(mu)), 4):
            totals: dict = {}
            reached: dict[int, set] = {r: set() for r in range(m + 1)}
            for ch in chains(mu, m):
                wT = _chain_weight(ch, psi)
                for A in all_matrices(m, 1):
                    r = sum(A.row_sums())
                    dist = skew_forward_distribution(A, ch, [(), ()])
                    item = f"T={Tableau.from_chain(ch).text()} A={A.text()}"
                    rep.check(dist.sums_to_one(), f"{item} sum", 1, dist.total())
                    shapes = {o[1][-1] for o in dist.support()}
                    rep.check(
                        all(size(lam) == size(mu) + r and is_vertical_strip(mu, lam) for lam in shapes),
                        f"{item} support inside the vertical strips",
                        r,
                        sorted(shapes),
                    )
                    reached[r] |= shapes
                    for (right, _), v in dist.items():
                        totals.setdefault(right, QTSum()).add_sum(v.copy().mul(wT))
            for r, shapes in reached.items():
                exp = sorted(
                    lam for lam in superpartitions(mu, r) if is_vertical_strip(mu, lam) and len(lam) <= m
                )
                rep.check(sorted(shapes) == exp, f"mu={_pt(mu)} m={m} r={r} support", exp, sorted(shapes))
            for right, got in totals.items():
                w = QTSum([_chain_weight(right, psi) * phi_star(right[-1], mu)])
                item = f"mu={_pt(mu)} m={m} T'={Tableau.from_chain(right).text()}"
                rep.check(got.equals(w), item, w, got)
    try:
        skew_forward_distribution(Matrix01.parse("1"), [(1,), (2,)], [(), (1,)])
        rep.check(False, "mismatched boundary corner", "BoundaryMismatch", "accepted")
    except BoundaryMismatch:
        rep.check(True, "mismatched boundary corner")


def _chain_weight(chain, fn):
    out = ONE
    for a, b in zip(chain, chain[1:]):
        out = out * fn(b, a)
    return out


def suite_transpose_symmetry(opts: Options, rep: VerificationReport) -> None:
    for m, n in _box(opts, 2, 3):
        for A in all_matrices(m, n):
            rep.check(transpose_symmetry_check(A), f"A={A.text()}")


COUNTEREXAMPLE = "001;110;001"


def suite_jack_swap(opts: Options, rep: VerificationReport) -> None:
    for m, n in _box(opts, 3, 3):
        if n < 2:
            continue
        for A in all_matrices(m, n):
            if not A.is_word():
                continue
            base = p_marginal(A)
            for k in range(1, n):
                other = p_marginal(A.swap_columns(k))
                rep.check(base.same_as(other), f"A={A.text()} k={k}")
    # the Jack marginal of P = 1,1;2 agrees across the three golden matrices
    margs = [p_marginal(Matrix01.parse(a)).get(_T("1,1;2")) for a in GOLDEN_MATRICES]
    rep.check(margs[0] == parse_alpha("2*alpha/(2*alpha+1)"), "P=1,1;2 marginal of 110;001", "2α/(2α+1)", margs[0])
    rep.check(margs[0] == margs[1] == margs[2], "P=1,1;2 marginal across the golden matrices", margs[0], margs[1:])
    # a doubled column breaks the invariance
    A = Matrix01.parse(COUNTEREXAMPLE)
    B = A.swap_columns(2)
    T = _T("1,2;2,3")
    a_val, b_val = p_marginal(A).get(T), p_marginal(B).get(T)
    rep.check(a_val.is_zero(), f"A={COUNTEREXAMPLE} P=1,2;2,3", 0, a_val)
    exp = parse_alpha("alpha/(2*(1+alpha)^2)")
    rep.check(b_val == exp, f"A={B.text()} P=1,2;2,3", exp, b_val)
    growths = [(G, p) for G, p in forward_growths(B) if G.P() == T]
    probs = sorted(p.pretty() for _, p in growths)
    exp_probs = sorted(
        parse_qt(s).pretty()
        for s in ("q^3*t*(1-q)*(1-t)^2/((1+q)*(1-q*t)^3)", "(1-q)^2*(1-t)/((1+t)*(1-q*t)^3)")
    )
    rep.check(probs == exp_probs, f"A={B.text()} growths to P=1,2;2,3", exp_probs, probs)
    rep.check(not jack_swap_check(A, 2, require_word=False), f"A={COUNTEREXAMPLE} swap 2 changes the marginal")
    try:
        jack_swap_check(A, 2)
        rep.check(False, "doubled column rejected", "ColumnConstraintViolated", "accepted")
    except ColumnConstraintViolated:
        rep.check(True, "doubled column rejected")


# --------------------------------------------------------------------------
# Two-square configurations


def _point_poly(mono) -> LaurentPoly2:
    return LaurentPoly2.monomial(mono.eq, mono.et)


def corner_ratio_check(mu, lam, rho, nu) -> bool | None:
    """Check P_I / P_II == (t S1 - q S2) / (S1 (1 - q + q t) - q S2).

    Returns None unless lam & rho == mu, nu adds two outer corners of lam and
    the cell rho/mu has both neighbours addable (the generic case).
    """
    if intersect(lam, rho) != mu or size(nu) - size(lam) != 2 or not contains(lam, nu):
        return None
    cells = skew_cells(nu, lam)
    if not all(c in outer_corners(lam) for c in cells):
        return None
    (x,) = skew_cells(rho, mu)
    corners = addable_outer_corners(union(lam, rho), rho)
    if Cell(x.x, x.y + 1) not in corners or Cell(x.x + 1, x.y) not in corners:
        return None
    f = corner_frame(lam, mu)
    adds = f.addable
    s1 = adds.index(x)
    (c2,) = [c for c in cells if c != x]
    s2 = adds.index(c2)
    S1, S2 = _point_poly(f.S[s1]), _point_poly(f.S[s2])
    q, t = LaurentPoly2.monomial(1, 0), LaurentPoly2.monomial(0, 1)
    one = LaurentPoly2.constant(1)
    num = t * S1 - q * S2
    den = S1 * (one - q + q * t) - q * S2
    p1 = configuration_distribution(mu, lam, rho, "I", "qt").get(nu)
    p2 = configuration_distribution(mu, lam, rho, "II", "qt").get(nu)
    lhs = p1.numerator() * p2.denominator() * den
    rhs = p2.numerator() * p1.denominator() * num
    return lhs == rhs


def _w_appendix(item) -> tuple[int, list]:
    mu, lam, rho = item
    a = configuration_distribution(mu, lam, rho, "I")
    b = configuration_distribution(mu, lam, rho, "II")
    fails = []
    if not a.same_as(b):
        fails.append(_fail(f"mu={_pt(mu)} lam={_pt(lam)} rho={_pt(rho)}", a.to_json(), b.to_json()))
    count = 1
    if intersect(lam, rho) == mu:
        for nu in a.support():
            r = corner_ratio_check(mu, lam, rho, nu)
            if r is None:
                continue
            count += 1
            if not r:
                fails.append(_fail(f"mu={_pt(mu)} lam={_pt(lam)} rho={_pt(rho)} nu={_pt(nu)} ratio", "(tS1-qS2)/(S1(1-q+qt)-qS2)", "different"))
    return count, fails


def suite_appendix(opts: Options, rep: VerificationReport) -> None:
    max_nu = opts.max_cells if opts.max_cells is not None else 9
    items = [x for x in configuration_inputs(max_nu) if intersect(x[1], x[2]) == x[0] or contains(x[2], x[1])]
    for count, fails in _pmap(_w_appendix, items):
        rep.merge(count, fails)


# --------------------------------------------------------------------------
# Registry


SUITES: dict[str, Callable[[Options, VerificationReport], None]] = {
    "table1": suite_table1,
    "table2-jack": suite_table2_jack,
    "example-4-2": suite_example_4_2,
    "example-3-5": suite_example_3_5,
    "example-4-14": suite_example_4_14,
    "example-words": suite_example_words,
    "dual-rsk-ex-2-1": suite_dual_rsk_ex_2_1,
    "sum-to-one": suite_sum_to_one,
    "compatibility": suite_compatibility,
    "commutation": suite_commutation,
    "commutation-words": suite_commutation_words,
    "cauchy": suite_cauchy,
    "pieri": suite_pieri,
    "interpolation": suite_interpolation,
    "tau-paths": suite_tau_paths,
    "abc-oracle": suite_abc_oracle,
    "cell-weights": suite_cell_weights,
    "specializations": suite_specializations,
    "limits-rsk": suite_limits_rsk,
    "inversion-symmetry": suite_inversion_symmetry,
    "transpose-symmetry": suite_transpose_symmetry,
    "jack-swap": suite_jack_swap,
    "appendix": suite_appendix,
}


def run_suite(name: str, opts: Options | None = None) -> VerificationReport:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    opts = opts or Options()
    rep = VerificationReport(name)
    rep.bounds = {
        k: v
        for k, v in (("max_cells", opts.max_cells), ("rows", opts.rows), ("cols", opts.cols), ("seed", opts.seed))
        if v is not None
    }
    if opts.eval_point is not None:
        rep.bounds["eval"] = [str(opts.eval_point[0]), str(opts.eval_point[1])]
    start = time.perf_counter()
    SUITES[name](opts, rep)
    rep.wall_time = time.perf_counter() - start
    return rep
