"""Exact determinants and total-positivity certificates for rational windows.

A window is a finite piece of a Z x Z matrix, so :class:`RatMatrix` carries
the Z-offset (``row_lo``, ``col_lo``) of its top-left entry.  Verdicts report
witnesses in those absolute indices.

``is_tp`` enumerates every square minor up to a given order.  Minors are
built bottom-up by Laplace expansion along the last selected row, one array
of all ``k x k`` minors at a time, so the sweep is a handful of vectorized
gathers per order instead of one determinant per minor.  Arithmetic is done
on integers after clearing denominators (a positive rescaling, so signs are
unchanged); ``int64`` is used only when a factorial bound proves it cannot
overflow, Python integers otherwise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

import numpy as np

from .errors import IndexOutOfRange, NotSquare, SizeMismatch
from .series import as_rat

DEFAULT_ORDER = 5


@dataclass(frozen=True)
class RatMatrix:
    data: tuple
    row_lo: int = 0
    col_lo: int = 0

    def __post_init__(self):
        rows = tuple(tuple(as_rat(x) for x in row) for row in self.data)
        if rows and len({len(r) for r in rows}) != 1:
            raise SizeMismatch("ragged matrix")
        object.__setattr__(self, "data", rows)

    @classmethod
    def from_rows(cls, rows, row_lo: int = 0, col_lo: int = 0) -> "RatMatrix":
        return cls(tuple(tuple(r) for r in rows), row_lo, col_lo)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0]) if self.data else 0

    @property
    def row_hi(self) -> int:
        return self.row_lo + self.rows - 1

    @property
    def col_hi(self) -> int:
        return self.col_lo + self.cols - 1

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.data[i][j]

    def at(self, u: int, v: int) -> Fraction:
        """Entry at absolute Z-indices ``(u, v)``."""
        return self.data[u - self.row_lo][v - self.col_lo]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RatMatrix":
        return RatMatrix(tuple(tuple(self.data[i][j] for j in cols) for i in rows))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise SizeMismatch(f"cannot multiply {self.rows}x{self.cols} by "
                               f"{other.rows}x{other.cols}")
        out = [[sum((a * other.data[k][j] for k, a in enumerate(row)), Fraction(0))
                for j in range(other.cols)] for row in self.data]
        return RatMatrix.from_rows(out, self.row_lo, other.col_lo)

    def to_json(self) -> dict:
        return {"rows": [self.row_lo, self.row_hi], "cols": [self.col_lo, self.col_hi],
                "data": [[str(x) for x in r] for r in self.data]}

    @classmethod
    def from_json(cls, obj) -> "RatMatrix":
        if isinstance(obj, list):
            return cls.from_rows(obj)
        row_lo = obj.get("rows", [0])[0]
        col_lo = obj.get("cols", [0])[0]
        return cls.from_rows(obj["data"], row_lo, col_lo)


def _rows_of(M) -> list:
    if isinstance(M, RatMatrix):
        return [list(r) for r in M.data]
    return [[as_rat(x) for x in r] for r in M]


def det_exact(M) -> Fraction:
    """Exact determinant of a square rational matrix.

    Orders up to 3 use cofactor formulas; larger matrices are scaled to
    integers and reduced with Bareiss' fraction-free elimination.
    """
    a = _rows_of(M)
    n = len(a)
    if any(len(r) != n for r in a):
        raise NotSquare(f"determinant of a non-square {n}x{len(a[0]) if a else 0} matrix")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if n == 3:
        return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))
    return _bareiss(a)


def _bareiss(a: list) -> Fraction:
    n = len(a)
    scale = 1
    m = []
    for row in a:
        d = math.lcm(*(x.denominator for x in row))
        scale *= d
        m.append([int(x * d) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return Fraction(0)
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        mkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * mkk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = mkk
    return Fraction(sign * m[n - 1][n - 1], scale)


def det_leibniz(M) -> Fraction:
    """Permutation-expansion determinant; slow, used as an independent oracle."""
    a = _rows_of(M)
    n = len(a)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = Fraction(1)
        for i, p in enumerate(perm):
            prod *= a[i][p]
            if not prod:
                break
        total += -prod if inv % 2 else prod
    return total


def minor(M: RatMatrix, rows: Sequence[int], cols: Sequence[int]) -> Fraction:
    """Determinant of the submatrix on local row/column indices."""
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise SizeMismatch(f"{len(rows)} rows but {len(cols)} columns selected")
    for i in rows:
        if not 0 <= i < M.rows:
            raise IndexOutOfRange(f"row {i} outside 0..{M.rows - 1}")
    for j in cols:
        if not 0 <= j < M.cols:
            raise IndexOutOfRange(f"column {j} outside 0..{M.cols - 1}")
    return det_exact(M.submatrix(rows, cols))


@dataclass(frozen=True)
class Witness:
    rows: tuple
    cols: tuple
    det: Fraction

    def to_json(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols), "det": str(self.det)}


@dataclass(frozen=True)
class TpVerdict:
    status: str
    checked_order: int
    witness: Witness | None = None
    window: tuple = field(default=(), compare=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        out = {"status": self.status, "checked_order": self.checked_order,
               "witness": self.witness.to_json() if self.witness else None}
        if self.window:
            out["window"] = {"rows": list(self.window[:2]), "cols": list(self.window[2:])}
        return out


def _combo_tables(n: int, k: int, prev_index: dict):
    """Combinations of size k of range(n), with Laplace bookkeeping.

    Returns (combos, index, dropped, members) where ``dropped[c, j]`` is the
    index (among size k-1 combos) of combo c with its j-th element removed
    and ``members[c, j]`` is that j-th element.
    """
    combos = list(combinations(range(n), k))
    index = {c: i for i, c in enumerate(combos)}
    dropped = np.empty((len(combos), k), dtype=np.intp)
    members = np.asarray(combos, dtype=np.intp).reshape(len(combos), k)
    for ci, c in enumerate(combos):
        for j in range(k):
            dropped[ci, j] = prev_index[c[:j] + c[j + 1:]]
    return combos, index, dropped, members


def _scaled_integers(rows: list) -> list:
    """Integer matrix whose minors have the signs of the rational minors.

    Each row is cleared of denominators and divided by its content, then each
    column by its content; positive line scalings never change a minor's sign.
    """
    out = []
    for r in rows:
        d = math.lcm(*(x.denominator for x in r))
        ir = [int(x * d) for x in r]
        g = math.gcd(*ir) or 1
        out.append([x // g for x in ir])
    for j in range(len(out[0])):
        g = math.gcd(*(r[j] for r in out)) or 1
        if g > 1:
            for r in out:
                r[j] //= g
    return out


_U = 2.0 ** -53


def _laplace(Z_last, prev_sub, c_members, c_dropped, k):
    cur = None
    for j in range(k):
        term = Z_last.take(c_members[:, j], axis=1) * prev_sub.take(c_dropped[:, j], axis=1)
        if (k - 1 + j) % 2:
            term = -term
        cur = term if cur is None else cur + term
    return cur


def _laplace_filtered(Z_last, prev_sub, err_sub, c_members, c_dropped, k):
    """Float Laplace step returning values and a bound on their absolute error.

    With |p~ - p| <= e for each cofactor, the computed sum of k products
    differs from the true minor by at most sum |z| e (inherited) plus
    gamma_{k+1} * sum |z p~| (rounding, including entry conversion), where
    gamma_n = n u / (1 - n u).  The bound is inflated slightly to absorb the
    rounding of the bound itself.
    """
    shape = (Z_last.shape[0], c_members.shape[0])
    cur, mag, inh = np.zeros(shape), np.zeros(shape), np.zeros(shape)
    track = bool(err_sub.any())
    for j in range(k):
        z = Z_last.take(c_members[:, j], axis=1)
        term = z * prev_sub.take(c_dropped[:, j], axis=1)
        if (k - 1 + j) % 2:
            cur -= term
        else:
            cur += term
        mag += np.abs(term, out=term)
        if track:
            np.abs(z, out=z)
            z *= err_sub.take(c_dropped[:, j], axis=1)
            inh += z
    gamma = (k + 1) * _U / (1 - (k + 1) * _U)
    err = (inh + gamma * mag) * (1 + 4 * (k + 2) * _U)
    return cur, err


def _int_det(a: list) -> int:
    """Fraction-free Bareiss elimination on a small integer matrix."""
    a = [list(r) for r in a]
    n, sign, prev = len(a), 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_tp(M: RatMatrix, max_order: int = DEFAULT_ORDER) -> TpVerdict:
    """Check that every square minor of order <= ``max_order`` is nonnegative.

    On failure the witness is the first negative minor in the order
    (size, row set, column set), reported in absolute Z-indices.
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    window = (M.row_lo, M.row_hi, M.col_lo, M.col_hi)
    kmax = min(max_order, M.rows, M.cols)
    if kmax == 0:
        return TpVerdict("pass", 0, None, window)

    # A minor through an all-zero row or column vanishes, so those lines are
    # dropped; the relabeling is monotone and preserves witness order.
    keep_r = [i for i in range(M.rows) if any(M.data[i])]
    keep_c = [j for j in range(M.cols) if any(M.data[i][j] for i in range(M.rows))]
    kmax_eff = min(kmax, len(keep_r), len(keep_c))
    if kmax_eff == 0:
        return TpVerdict("pass", kmax, None, window)

    ints = _scaled_integers([[M.data[i][j] for j in keep_c] for i in keep_r])
    Z = np.array(ints, dtype=object)
    row_l1 = max(sum(abs(x) for x in r) for r in ints)
    m, n = Z.shape

    def fail(k, rsel, csel):
        rows = tuple(keep_r[i] for i in rsel)
        cols = tuple(keep_c[j] for j in csel)
        value = det_exact(M.submatrix(rows, cols))
        assert value < 0, "integer and rational minors disagree"
        w = Witness(tuple(M.row_lo + i for i in rows), tuple(M.col_lo + j for j in cols), value)
        return TpVerdict("fail", k, w, window)

    neg = np.argwhere(Z < 0)
    if len(neg):
        i, j = neg[0]
        return fail(1, (int(i),), (int(j),))

    # Order k minors come from order k-1 by Laplace expansion along the last
    # selected row.  While the magnitudes fit, this is exact int64 arithmetic.
    # Past that, minors are carried as float64 with a forward error bound and
    # only those whose sign the bound cannot settle are recomputed exactly.
    exact, prev, err = True, Z, None
    r_index = {(i,): i for i in range(m)}
    c_index = {(j,): j for j in range(n)}
    floats_ok = math.log2(max(row_l1, 2)) * kmax_eff < 900
    for k in range(2, kmax_eff + 1):
        r_combos, r_index_k, _, r_members = _combo_tables(m, k, r_index)
        c_combos, c_index_k, c_dropped, c_members = _combo_tables(n, k, c_index)
        r_sub = np.array([r_index[c[:-1]] for c in r_combos], dtype=np.intp)
        last = r_members[:, -1]
        if exact and row_l1 * int(np.abs(prev).max()) < 2 ** 62:
            cur = _laplace(Z.astype(np.int64)[last], prev.astype(np.int64)[r_sub],
                           c_members, c_dropped, k)
            bad = np.flatnonzero(cur < 0)
        elif exact and not floats_ok:
            cur = _laplace(Z[last], prev.astype(object)[r_sub], c_members, c_dropped, k)
            bad = np.flatnonzero(cur < 0)
        else:
            if exact:
                prev, err = prev.astype(np.float64), np.zeros(prev.shape)
                exact = False
            cur, err = _laplace_filtered(Z.astype(np.float64)[last], prev[r_sub], err[r_sub],
                                         c_members, c_dropped, k)
            unsure = np.flatnonzero((np.abs(cur) <= err) & (err > 0))
            for idx in unsure:
                ri, ci = divmod(int(idx), len(c_combos))
                value = _int_det([[ints[i][j] for j in c_combos[ci]] for i in r_combos[ri]])
                cur.flat[idx] = float(value)
                err.flat[idx] = abs(float(value)) * _U if value else 0.0
                if value < 0:
                    # make sure the float carries the sign even after rounding
                    cur.flat[idx] = min(cur.flat[idx], -np.finfo(float).tiny)
            bad = np.flatnonzero(cur < -err)
        if len(bad):
            ri, ci = divmod(int(bad[0]), len(c_combos))
            return fail(k, r_combos[ri], c_combos[ci])
        prev, r_index, c_index = cur, r_index_k, c_index_k
    return TpVerdict("pass", kmax, None, window)
