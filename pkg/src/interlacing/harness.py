"""Instance checkers for the structural identities and interlacing results,
the counterexample scanner for the three-polynomial family, and the random
input generators they run on.

Every check returns a :class:`CheckReport`.  Identity checks compare exact
rational windows entrywise; interlacing checks return the TP verdict that
failed, if any.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import DegenerateFamily, InvalidParameter, PreconditionFailed
from .interlace import (default_window, interlaces_roots, interlaces_tp,
                        is_fully_interlacing, is_pairwise_interlacing,
                        is_pairwise_interlacing_roots)
from .series import Series, as_rat, scale, shift, veronese_section
from .subdivision import HFamily, check_prop_app, derivative_chain_family
from .tp import DEFAULT_ORDER, RatMatrix, TpVerdict, det_exact
from .windows import (SeriesMatrix, WindowSpec, flip_rat_window, flip_series_matrix,
                      flip_window_spec, lace_entry, lace_product_windows, lace_window,
                      series_matrix_product, veronese_col_index, veronese_matrix,
                      veronese_matrix_flip, veronese_row_index)


# ---------------------------------------------------------------- reports

@dataclass
class CheckReport:
    statement: str
    digest: str
    regime: dict
    result: str = "verified"
    detail: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.result == "verified"

    def to_json(self) -> dict:
        return {"statement": self.statement, "inputs": self.digest, "regime": self.regime,
                "result": self.result, "detail": self.detail,
                "elapsed": round(self.elapsed, 6)}


def digest(*objs) -> str:
    def enc(o):
        if hasattr(o, "to_json"):
            return o.to_json()
        if isinstance(o, Fraction):
            return str(o)
        if isinstance(o, (list, tuple)):
            return [enc(x) for x in o]
        return o
    blob = json.dumps([enc(o) for o in objs], sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _report(statement, inputs, regime, body: Callable[[], tuple]) -> CheckReport:
    t0 = time.perf_counter()
    rep = CheckReport(statement, digest(*inputs), regime)
    rep.result, rep.detail = body()
    rep.elapsed = time.perf_counter() - t0
    return rep


def compare_windows(lhs: RatMatrix, rhs_at: Callable[[int, int], Fraction]):
    """First entry where ``lhs`` differs from ``rhs_at(u, v)``, as a detail dict."""
    for a, row in enumerate(lhs.data):
        for b, x in enumerate(row):
            u, v = lhs.row_lo + a, lhs.col_lo + b
            y = rhs_at(u, v)
            if x != y:
                return "identity_violated", {"position": [u, v], "lhs": str(x), "rhs": str(y)}
    return "verified", {}


def _tp_result(verdict: TpVerdict, label: str = ""):
    if verdict.passed:
        return None
    d = {"witness": verdict.witness.to_json()}
    if label:
        d["where"] = label
    return "tp_fail", d


# ---------------------------------------------------------------- identities

def check_flip_identity(A: SeriesMatrix, window_size: int | None = None) -> CheckReport:
    """Lace of the flipped matrix against the flipped Lace window."""
    W = window_size or default_window(*A.all_entries())
    F = flip_series_matrix(A)

    def body():
        w = WindowSpec.blocks(F.p, F.q, W)
        src = flip_window_spec(w)
        lhs = lace_window(F, w)
        rhs = flip_rat_window(lace_window(A, src), w)
        return compare_windows(lhs, rhs.at)

    return _report("flip", [A], {"window": W}, body)


def check_product_identity(A: SeriesMatrix, B: SeriesMatrix,
                           window_size: int | None = None) -> CheckReport:
    """Lace of a product against the product of Lace windows."""
    W = window_size or default_window(*A.all_entries(), *B.all_entries())

    def body():
        C = series_matrix_product(A, B)
        w = WindowSpec.blocks(C.p, C.q, W)
        left, right = lace_product_windows(A, B, w)
        prod = left @ right
        return compare_windows(lace_window(C, w), prod.at)

    return _report("product", [A, B], {"window": W}, body)


def check_veronese_submatrix(A: SeriesMatrix, r: int,
                             window_size: int | None = None) -> CheckReport:
    """Lace of the section blocks against rows / columns of Lace(A).

    Side by side blocks pick the rows of Lace(A) congruent to ``0..p-1`` mod
    ``rp``.  Stacked blocks pick the columns congruent to ``0..q-1`` mod
    ``rq``, read from rows translated up by ``(r-1)p``.
    """
    W = window_size or max(1, (default_window(*A.all_entries()) + r - 1) // r)
    p, q = A.p, A.q

    def body():
        S = veronese_matrix(A, r)
        res = compare_windows(lace_window(S, WindowSpec.blocks(S.p, S.q, W)),
                              lambda u, v: lace_entry(A, veronese_row_index(u, p, r), v))
        if res[0] != "verified":
            res[1]["variant"] = "side-by-side"
            return res
        T = veronese_matrix_flip(A, r)
        res = compare_windows(
            lace_window(T, WindowSpec.blocks(T.p, T.q, W)),
            lambda u, v: lace_entry(A, u - (r - 1) * p, veronese_col_index(v, q, r)))
        if res[0] != "verified":
            res[1]["variant"] = "stacked"
        return res

    return _report("veronese", [A, r], {"window": W, "r": r}, body)


# ---------------------------------------------------------------- interlacing

def section_sequence(P: Series, Q: Series, r: int) -> SeriesMatrix:
    """``(S_{r-1}P, S_{r-1}Q, ..., S_0P, S_0Q)^T``: the flip of the row
    ``(S_0Q, S_0P, ..., S_{r-1}Q, S_{r-1}P)``."""
    row = []
    for k in range(r):
        row += [veronese_section(Q, r, k), veronese_section(P, r, k)]
    col = flip_series_matrix(SeriesMatrix.row(row))
    if col != veronese_matrix_flip(SeriesMatrix.column([P, Q]), r):
        raise AssertionError("flip of the section row disagrees with the stacked sections")
    return col


def check_cor_main(P: Series, Q: Series, r: int, window_size: int | None = None,
                   order: int = DEFAULT_ORDER) -> CheckReport:
    """For ``P < Q``: the interleaved section sequence is fully interlacing and
    ``S_k P < S_k Q`` for every ``k`` by the root oracle."""
    if not interlaces_roots(P, Q):
        raise PreconditionFailed("P does not interlace Q")

    def body():
        seq = section_sequence(P, Q, r)
        v = is_fully_interlacing(seq, window_size, order)
        if not v.passed:
            return _tp_result(v, "section sequence")
        for k in range(r):
            if not interlaces_roots(veronese_section(P, r, k), veronese_section(Q, r, k)):
                return "roots_fail", {"k": k}
        return "verified", {}

    return _report("sections", [P, Q, r], {"window": window_size, "order": order, "r": r}, body)


def check_lambda_corollary(A: Series, B: Series, r: int, lambdas: Sequence,
                           window_size: int | None = None,
                           order: int = DEFAULT_ORDER) -> CheckReport:
    """``sum_k l_k S_k A < sum_k l_k S_k B`` for nonnegative weights."""
    lambdas = [as_rat(x) for x in lambdas]
    if len(lambdas) != r or any(x < 0 for x in lambdas):
        raise InvalidParameter("need r nonnegative weights")
    if not interlaces_tp(A, B, window_size, order).passed:
        raise PreconditionFailed("A does not interlace B")

    def body():
        left = sum((scale(l, veronese_section(A, r, k)) for k, l in enumerate(lambdas)),
                   Series.zero())
        right = sum((scale(l, veronese_section(B, r, k)) for k, l in enumerate(lambdas)),
                    Series.zero())
        v = interlaces_tp(left, right, window_size, order)
        return _tp_result(v) or ("verified", {})

    return _report("lambda", [A, B, r, lambdas], {"window": window_size, "order": order}, body)


def qn_pn(n: int) -> tuple[Series, Series]:
    base = Series.poly([1, 1]) ** n
    return veronese_section(base, 2, 0), veronese_section(base, 2, 1)


def qn_pn_matrices(n: int) -> tuple[SeriesMatrix, SeriesMatrix]:
    Qn, Pn = qn_pn(n)
    Qm, Pm = qn_pn(n + 1)
    square = SeriesMatrix(((Qn, Pn), (Qm, Pm)))
    column = SeriesMatrix.column([Pn, Pm, Qn, Qm])
    return square, column


def check_qn_pn(n: int, window_size: int = 6, order: int = DEFAULT_ORDER) -> CheckReport:
    def body():
        square, column = qn_pn_matrices(n)
        for label, M in (("square", square), ("column", column)):
            res = _tp_result(is_fully_interlacing(M, window_size, order), label)
            if res:
                return res
        return "verified", {}

    return _report("qn-pn", [n], {"window": window_size, "order": order}, body)


def convexity_triple(seq: Sequence[Series], lambdas: Sequence) -> SeriesMatrix:
    combo = sum((scale(l, A) for l, A in zip(lambdas, seq)), Series.zero())
    return SeriesMatrix.column([seq[0], combo, seq[-1]])


def check_convexity(seq: Sequence[Series], lambdas: Sequence, window_size: int | None = None,
                    order: int = DEFAULT_ORDER) -> CheckReport:
    """``A_0 < sum l_i A_i < A_{p-1}``, as a fully interlacing triple."""
    lambdas = [as_rat(x) for x in lambdas]
    if any(x < 0 for x in lambdas):
        raise InvalidParameter("weights must be nonnegative")
    col = SeriesMatrix.column(seq)
    if not is_fully_interlacing(col, window_size, order).passed:
        raise PreconditionFailed("input sequence is not certified fully interlacing")

    def body():
        triple = convexity_triple(seq, lambdas)
        res = _tp_result(is_fully_interlacing(triple, window_size, order), "triple")
        if res:
            return res
        a, mid, b = (e[0] for e in triple.entries)
        for label, (x, y) in (("left", (a, mid)), ("right", (mid, b))):
            res = _tp_result(interlaces_tp(x, y, None, order), label)
            if res:
                return res
        return "verified", {}

    return _report("convexity", [seq, lambdas], {"window": window_size, "order": order}, body)


def shifted_sequence(seq: Sequence[Series]) -> list[Series]:
    return list(seq[1:]) + [shift(seq[0], 1)]


def check_shift(seq: Sequence[Series], window_size: int | None = None,
                order: int = DEFAULT_ORDER) -> CheckReport:
    """``(A_1, ..., A_{p-1}, x A_0)^T`` passes one block smaller than ``(A_0..A_{p-1})^T``."""
    W = window_size or default_window(*seq)
    col = SeriesMatrix.column(seq)
    if not is_fully_interlacing(col, W, order).passed:
        raise PreconditionFailed("input sequence is not certified fully interlacing")

    def body():
        if W < 2:
            return "verified", {"note": "reduced window is empty"}
        v = is_fully_interlacing(SeriesMatrix.column(shifted_sequence(seq)), W - 1, order)
        return _tp_result(v, "shifted") or ("verified", {})

    return _report("shift", [seq], {"window": W, "order": order}, body)


def check_heredity(A: SeriesMatrix, rows: Sequence[int], cols: Sequence[int],
                   window_size: int | None = None, order: int = DEFAULT_ORDER) -> CheckReport:
    W = window_size or default_window(*A.all_entries())
    if not is_fully_interlacing(A, W, order).passed:
        raise PreconditionFailed("input matrix is not certified fully interlacing")

    def body():
        sub = SeriesMatrix(tuple(tuple(A[i, j] for j in cols) for i in rows))
        return _tp_result(is_fully_interlacing(sub, W, order), "submatrix") or ("verified", {})

    return _report("heredity", [A, list(rows), list(cols)], {"window": W, "order": order}, body)


# ---------------------------------------------------------------- the 3-term family

@dataclass
class ScanPoint:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    t: Fraction
    pairwise: bool
    pairwise_tp: bool
    fully: TpVerdict
    minor: Fraction

    def row(self) -> list:
        det = self.fully.witness.det if self.fully.witness else ""
        return [str(self.a), str(self.b), str(self.c), str(self.d), str(self.t),
                str(self.pairwise).lower(), self.fully.status, str(det)]


CSV_HEADER = ["a", "b", "c", "d", "t", "pairwise", "fully_status", "witness_det"]


def three_term_family(a, b, c, d, t) -> tuple[Series, Series, Series]:
    """``(t + x, (b + x)(d + x), (a + x)(c + x))``."""
    a, b, c, d, t = map(as_rat, (a, b, c, d, t))
    return (Series.poly([t, 1]), Series.poly([b * d, b + d, 1]),
            Series.poly([a * c, a + c, 1]))


def family_minor(a, b, c, d, t) -> Fraction:
    """The 3 x 3 minor on rows and columns ``0..2`` of the family's Lace matrix."""
    a, b, c, d, t = map(as_rat, (a, b, c, d, t))
    return det_exact([[t, 1, 0], [b * d, b + d, 1], [a * c, a + c, 1]])


def scan_point(a, b, c, d, t, window_size: int | None = None,
               order: int = DEFAULT_ORDER) -> ScanPoint:
    a, b, c, d, t = map(as_rat, (a, b, c, d, t))
    if min(a, b, c, d, t) <= 0 or a > c or b > d:
        raise InvalidParameter("need positive a, b, c, d, t with a <= c and b <= d")
    if b + d - a - c == 0:
        raise DegenerateFamily("b + d - a - c = 0: threshold undefined")
    seq = three_term_family(a, b, c, d, t)
    col = SeriesMatrix.column(seq)
    fully = is_fully_interlacing(col, window_size, order)
    lace = lace_window(col, WindowSpec(0, 2, 0, 2))
    minor = det_exact(lace)
    expected = t * (b + d - a - c) - (b * d - a * c)
    if minor != expected:
        raise AssertionError(f"family minor {minor} differs from {expected}")
    pairwise = is_pairwise_interlacing_roots(seq)
    pairwise_tp = is_pairwise_interlacing(seq, None, order)
    analytic = a <= b <= t <= c <= d
    if pairwise != analytic or pairwise_tp != analytic:
        raise AssertionError(f"pairwise classification off at {(a, b, c, d, t)}")
    return ScanPoint(a, b, c, d, t, pairwise, pairwise_tp, fully, minor)


def scan_counterexamples(grid: Iterable[tuple], window_size: int | None = None,
                         order: int = DEFAULT_ORDER, skip_invalid: bool = True) -> list[ScanPoint]:
    out = []
    for params in grid:
        try:
            out.append(scan_point(*params, window_size=window_size, order=order))
        except (DegenerateFamily, InvalidParameter):
            if not skip_invalid:
                raise
    return out


def scan_csv(points: Sequence[ScanPoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for pt in points:
        w.writerow(pt.row())
    return buf.getvalue()


# ---------------------------------------------------------------- generators

def _rat(rng: random.Random, lo: int = 1, hi: int = 9, den: int = 3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def poly_from_roots(neg_roots: Sequence, lead=1) -> Series:
    """``lead * prod (x + r)``: roots at ``-r``."""
    out = Series.poly([as_rat(lead)])
    for r in neg_roots:
        out = out * Series.poly([as_rat(r), 1])
    return out


def random_aesw_poly(rng: random.Random, max_deg: int, min_deg: int = 0) -> Series:
    n = rng.randint(min_deg, max_deg)
    return poly_from_roots([_rat(rng, 0, 9) for _ in range(n)], _rat(rng))


def random_interlacing_pair(rng: random.Random, max_deg: int) -> tuple[Series, Series]:
    """Exact ``P < Q`` with ``deg Q <= max_deg``, ties allowed."""
    n = rng.randint(0, max_deg)
    theta = sorted((_rat(rng, 0, 12) for _ in range(n)), reverse=False)  # -root, ascending
    m = n if n == 0 else rng.choice([n - 1, n])
    eta = []
    for i in range(m):
        lo = theta[i]
        hi = theta[i + 1] if i + 1 < n else lo + rng.randint(0, 4)
        if rng.random() < 0.15:
            eta.append(rng.choice([lo, hi]))
        else:
            eta.append(lo + (hi - lo) * Fraction(rng.randint(0, 6), 6))
    return poly_from_roots(eta, _rat(rng)), poly_from_roots(theta, _rat(rng))


def random_aesw_pair(rng: random.Random, max_deg: int) -> tuple[Series, Series]:
    """Half the time an interlacing pair, otherwise independent random roots."""
    if rng.random() < 0.5:
        return random_interlacing_pair(rng, max_deg)
    n = rng.randint(0, max_deg)
    m = n if n == 0 else rng.choice([n - 1, n])
    P = poly_from_roots([_rat(rng, 0, 12) for _ in range(m)], _rat(rng))
    Q = poly_from_roots([_rat(rng, 0, 12) for _ in range(n)], _rat(rng))
    return P, Q


def random_poly(rng: random.Random, max_deg: int, lo: int = -5, hi: int = 5) -> Series:
    n = rng.randint(0, max_deg)
    return Series.poly([Fraction(rng.randint(lo, hi), rng.randint(1, 3)) for _ in range(n + 1)])


def random_series_matrix(rng: random.Random, p: int, q: int, max_deg: int) -> SeriesMatrix:
    return SeriesMatrix(tuple(tuple(random_poly(rng, max_deg) for _ in range(q))
                              for _ in range(p)))


def random_tp_matrix(rng: random.Random, n: int) -> list[list[Fraction]]:
    """A product of nonnegative bidiagonal factors and a positive diagonal;
    every such product is totally nonnegative."""
    M = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(rng.randint(0, 2 * n)):
        if n < 2:
            break
        k = rng.randrange(n - 1)
        e = Fraction(rng.randint(0, 3), rng.randint(1, 2))
        if rng.random() < 0.5:
            # M <- M (I + e E_{k,k+1}): column k+1 += e * column k
            for i in range(n):
                M[i][k + 1] += e * M[i][k]
        else:
            # M <- M (I + e E_{k+1,k}): column k += e * column k+1
            for i in range(n):
                M[i][k] += e * M[i][k + 1]
    d = [Fraction(rng.randint(1, 3)) for _ in range(n)]
    return [[M[i][j] * d[j] for j in range(n)] for i in range(n)]


def random_fully_interlacing(p: int, q: int, max_deg: int, seed: int) -> SeriesMatrix:
    """A p x q polynomial matrix that is fully interlacing by construction.

    Stacked sections of a real-rooted F give a fully interlacing column,
    side-by-side sections of a real-rooted G a fully interlacing row; their
    product is fully interlacing and stays so after multiplying by totally
    nonnegative constant matrices on either side.  Entry degrees stay at or
    below ``max_deg``.
    """
    if p < 1 or q < 1 or max_deg < 0:
        raise InvalidParameter("need p, q >= 1 and max_deg >= 0")
    rng = random.Random(seed)
    d1 = rng.randint(0, max_deg)
    d2 = max_deg - d1
    F = poly_from_roots([_rat(rng, 1, 9) for _ in range(rng.randint(0, p * (d1 + 1) - 1))], _rat(rng))
    G = poly_from_roots([_rat(rng, 1, 9) for _ in range(rng.randint(0, q * (d2 + 1) - 1))], _rat(rng))
    col = veronese_matrix_flip(SeriesMatrix(((F,),)), p)
    row = veronese_matrix(SeriesMatrix(((G,),)), q)
    M = series_matrix_product(col, row)
    M = series_matrix_product(SeriesMatrix.constant(random_tp_matrix(rng, p)), M)
    M = series_matrix_product(M, SeriesMatrix.constant(random_tp_matrix(rng, q)))
    return M


def random_hfamily(rng: random.Random, n: int, max_coef: int = 5) -> HFamily:
    simplex = tuple(random_poly(rng, max(m, 0), -max_coef, max_coef) for m in range(n + 1))
    boundary = tuple(random_poly(rng, max(m, 0), -max_coef, max_coef) for m in range(n + 1))
    return HFamily(n, simplex, boundary)


def random_derivative_family(rng: random.Random, n: int) -> HFamily:
    G = poly_from_roots([_rat(rng, 1, 9) for _ in range(n)], 1)
    scales = [Fraction(rng.randint(1, 4), rng.randint(1, 4)) for _ in range(3)]
    zero = [m for m in range(2, n + 1) if rng.random() < 0.25]
    return derivative_chain_family(G, scales, zero)


# ---------------------------------------------------------------- batch runs

def _random_flip(rng, i):
    return check_flip_identity(random_series_matrix(rng, rng.randint(1, 3), rng.randint(1, 3), 4))


def _random_product(rng, i):
    p, t, q = (rng.randint(1, 3) for _ in range(3))
    return check_product_identity(random_series_matrix(rng, p, t, 4),
                                  random_series_matrix(rng, t, q, 4))


def _random_veronese(rng, i):
    A = random_series_matrix(rng, rng.randint(1, 3), rng.randint(1, 3), 4)
    return check_veronese_submatrix(A, rng.choice([2, 3, 4]))


def _random_sections(rng, i):
    P, Q = random_interlacing_pair(rng, 8)
    return check_cor_main(P, Q, rng.choice([2, 3, 4, 5]))


def _random_lambda(rng, i):
    P, Q = random_interlacing_pair(rng, 6)
    r = rng.choice([2, 3])
    return check_lambda_corollary(P, Q, r, [Fraction(rng.randint(0, 4), rng.randint(1, 3))
                                            for _ in range(r)])


def _random_qn_pn(rng, i):
    return check_qn_pn(i % 9)


def _random_sequence(rng, seed):
    M = random_fully_interlacing(rng.randint(2, 4), 1, 2, seed)
    return [e[0] for e in M.entries]


def _random_convexity(rng, i):
    seq = _random_sequence(rng, rng.randrange(2 ** 32))
    return check_convexity(seq, [Fraction(rng.randint(0, 4), rng.randint(1, 3)) for _ in seq])


def _random_shift(rng, i):
    return check_shift(_random_sequence(rng, rng.randrange(2 ** 32)))


def _random_esd2(rng, i):
    fam = random_derivative_family(rng, rng.randint(2, 5))
    rep = check_prop_app(fam)
    return CheckReport("esd2", digest(fam), {}, "verified" if rep.ok else "prop_fail",
                       {} if rep.ok else rep.to_json())


STATEMENTS: dict[str, Callable] = {
    "flip": _random_flip,
    "product": _random_product,
    "veronese": _random_veronese,
    "sections": _random_sections,
    "lambda": _random_lambda,
    "qn-pn": _random_qn_pn,
    "convexity": _random_convexity,
    "shift": _random_shift,
    "esd2": _random_esd2,
}


def run_statement(name: str, count: int = 200, seed: int = 0) -> list[CheckReport]:
    if name not in STATEMENTS:
        raise InvalidParameter(f"unknown statement {name!r}; choose from {sorted(STATEMENTS)}")
    rng = random.Random(seed)
    return [STATEMENTS[name](rng, i) for i in range(count)]
