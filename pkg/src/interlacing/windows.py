"""Finite windows of Toeplitz, Hurwitz and Lace matrices, plus the matrix
operations (flip, product, Veronese blocks) that act on series matrices.

All Z x Z matrices here are indexed with rows ``u`` and columns ``v``.  For a
p x q series matrix, ``u = p*u' + i`` and ``v = q*v' + j`` with remainders in
``[0, p)`` and ``[0, q)``; Python's ``divmod`` already floors, so negative
indices decompose correctly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (CoefficientBeyondTruncation, DimensionMismatch, InvalidParameter,
                     RangeMismatch, WindowExceedsTruncation)
from .series import Series, add, coeff, mul, veronese_section
from .tp import RatMatrix


@dataclass(frozen=True)
class WindowSpec:
    row_lo: int
    row_hi: int
    col_lo: int
    col_hi: int

    def __post_init__(self):
        if self.row_lo > self.row_hi or self.col_lo > self.col_hi:
            raise InvalidParameter(f"empty window {self}")

    @classmethod
    def square(cls, n: int, lo: int = 0) -> "WindowSpec":
        return cls(lo, lo + n - 1, lo, lo + n - 1)

    @classmethod
    def blocks(cls, p: int, q: int, size: int) -> "WindowSpec":
        """Rows ``0..p*size-1`` and columns ``0..q*size-1``."""
        return cls(0, p * size - 1, 0, q * size - 1)

    @property
    def rows(self) -> range:
        return range(self.row_lo, self.row_hi + 1)

    @property
    def cols(self) -> range:
        return range(self.col_lo, self.col_hi + 1)

    def to_json(self) -> dict:
        return {"rows": [self.row_lo, self.row_hi], "cols": [self.col_lo, self.col_hi]}

    @classmethod
    def from_json(cls, obj) -> "WindowSpec":
        return cls(int(obj["rows"][0]), int(obj["rows"][1]),
                   int(obj["cols"][0]), int(obj["cols"][1]))


@dataclass(frozen=True)
class SeriesMatrix:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(e if isinstance(e, Series) else Series.poly([e]) for e in r)
                     for r in self.entries)
        if not rows or not rows[0]:
            raise DimensionMismatch("series matrix must be at least 1x1")
        if len({len(r) for r in rows}) != 1:
            raise DimensionMismatch("ragged series matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def column(cls, seq: Sequence[Series]) -> "SeriesMatrix":
        return cls(tuple((s,) for s in seq))

    @classmethod
    def row(cls, seq: Sequence[Series]) -> "SeriesMatrix":
        return cls((tuple(seq),))

    @classmethod
    def constant(cls, rows) -> "SeriesMatrix":
        return cls(tuple(tuple(Series.poly([x]) for x in r) for r in rows))

    @property
    def p(self) -> int:
        return len(self.entries)

    @property
    def q(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, ij) -> Series:
        i, j = ij
        return self.entries[i][j]

    def all_entries(self):
        return [e for r in self.entries for e in r]

    @property
    def exact(self) -> bool:
        return all(e.exact for e in self.all_entries())

    @property
    def trunc(self) -> int:
        """Common truncation: the smallest inexact truncation, or the top degree
        when every entry is a polynomial."""
        inexact = [e.trunc for e in self.all_entries() if not e.exact]
        return min(inexact) if inexact else max(e.trunc for e in self.all_entries())

    @property
    def limit(self) -> float:
        return math.inf if self.exact else self.trunc

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q,
                "entries": [[e.to_json() for e in r] for r in self.entries]}

    @classmethod
    def from_json(cls, obj) -> "SeriesMatrix":
        if "entries" not in obj:
            return cls(((Series.from_json(obj),),))
        m = cls(tuple(tuple(Series.from_json(e) for e in r) for r in obj["entries"]))
        if ("p" in obj and obj["p"] != m.p) or ("q" in obj and obj["q"] != m.q):
            raise DimensionMismatch("declared p/q disagree with the entries")
        return m


def _as_matrix(A) -> SeriesMatrix:
    return SeriesMatrix(((A,),)) if isinstance(A, Series) else A


def _check_lace_window(A: SeriesMatrix, w: WindowSpec):
    if A.exact:
        return
    span = w.col_hi // A.q - w.row_lo // A.p
    if span > A.trunc:
        raise WindowExceedsTruncation(
            f"window needs coefficient {span} but the matrix is truncated at {A.trunc}")


def lace_entry(A: SeriesMatrix, u: int, v: int) -> Fraction:
    A = _as_matrix(A)
    u1, i = divmod(u, A.p)
    v1, j = divmod(v, A.q)
    try:
        return coeff(A.entries[i][j], v1 - u1)
    except CoefficientBeyondTruncation as exc:
        raise WindowExceedsTruncation(str(exc)) from None


def lace_window(A: SeriesMatrix, w: WindowSpec) -> RatMatrix:
    A = _as_matrix(A)
    _check_lace_window(A, w)
    data = [[lace_entry(A, u, v) for v in w.cols] for u in w.rows]
    return RatMatrix.from_rows(data, w.row_lo, w.col_lo)


def toeplitz_window(A: Series, w: WindowSpec) -> RatMatrix:
    return lace_window(SeriesMatrix(((A,),)), w)


def hurwitz_window(C: Series, w: WindowSpec) -> RatMatrix:
    if not C.exact and 2 * w.col_hi - w.row_lo > C.trunc:
        raise WindowExceedsTruncation(
            f"window needs coefficient {2 * w.col_hi - w.row_lo} but C is truncated at {C.trunc}")
    data = [[coeff(C, 2 * v - u) for v in w.cols] for u in w.rows]
    return RatMatrix.from_rows(data, w.row_lo, w.col_lo)


def flip_series_matrix(A: SeriesMatrix) -> SeriesMatrix:
    """Reflect across the reverse diagonal: a p x q matrix becomes q x p."""
    A = _as_matrix(A)
    p, q = A.p, A.q
    return SeriesMatrix(tuple(tuple(A.entries[p - 1 - b][q - 1 - a] for b in range(p))
                              for a in range(q)))


def flip_window_spec(w: WindowSpec) -> WindowSpec:
    """The window that the Z x Z flip maps ``w`` onto."""
    return WindowSpec(-1 - w.col_hi, -1 - w.col_lo, -1 - w.row_hi, -1 - w.row_lo)


def flip_rat_window(M: RatMatrix, target: WindowSpec | None = None) -> RatMatrix:
    """Z x Z flip restricted to a window: ``flipped[v, u] = M[-1-u, -1-v]``.

    ``target``, when given, is the window the caller expects the result to
    occupy; it must be the exact image of ``M``'s window.
    """
    src = WindowSpec(M.row_lo, M.row_hi, M.col_lo, M.col_hi)
    image = flip_window_spec(src)
    if target is not None and target != image:
        raise RangeMismatch(f"flip of {src} lands on {image}, not {target}")
    R, C = M.rows, M.cols
    data = [[M.data[R - 1 - b][C - 1 - a] for b in range(R)] for a in range(C)]
    return RatMatrix.from_rows(data, image.row_lo, image.col_lo)


def series_matrix_product(A: SeriesMatrix, B: SeriesMatrix) -> SeriesMatrix:
    A, B = _as_matrix(A), _as_matrix(B)
    if A.q != B.p:
        raise DimensionMismatch(f"cannot multiply {A.p}x{A.q} by {B.p}x{B.q}")
    out = []
    for i in range(A.p):
        row = []
        for j in range(B.q):
            acc = Series.zero()
            for k in range(A.q):
                acc = add(acc, mul(A.entries[i][k], B.entries[k][j]))
            row.append(acc)
        out.append(tuple(row))
    return SeriesMatrix(tuple(out))


def section_matrix(A: SeriesMatrix, r: int, k: int) -> SeriesMatrix:
    A = _as_matrix(A)
    return SeriesMatrix(tuple(tuple(veronese_section(e, r, k) for e in row)
                              for row in A.entries))


def veronese_matrix(A: SeriesMatrix, r: int) -> SeriesMatrix:
    """Blocks ``S_0 A, S_1 A, ..., S_{r-1} A`` side by side (p x rq)."""
    A = _as_matrix(A)
    blocks = [section_matrix(A, r, k) for k in range(r)]
    return SeriesMatrix(tuple(tuple(e for b in blocks for e in b.entries[i])
                              for i in range(A.p)))


def veronese_matrix_flip(A: SeriesMatrix, r: int) -> SeriesMatrix:
    """Blocks ``S_{r-1} A`` down to ``S_0 A`` stacked vertically (rp x q)."""
    A = _as_matrix(A)
    rows = []
    for k in reversed(range(r)):
        rows.extend(section_matrix(A, r, k).entries)
    return SeriesMatrix(tuple(rows))


def product_inner_range(p: int, t: int, q: int, w: WindowSpec) -> tuple[int, int]:
    """Inner indices ``w`` contributing to ``(Lace(A) Lace(B))[u, v]`` on window ``w``.

    ``Lace(A)[u, w]`` vanishes unless ``w' >= u'`` and ``Lace(B)[w, v]``
    vanishes unless ``w' <= v'``, so only block indices between the smallest
    row block and the largest column block can contribute.
    """
    lo = t * (w.row_lo // p)
    hi = t * (w.col_hi // q) + t - 1
    return lo, hi


def lace_product_windows(A: SeriesMatrix, B: SeriesMatrix, w: WindowSpec):
    """Return ``(Lace(A) window, Lace(B) window)`` whose product covers ``w``."""
    A, B = _as_matrix(A), _as_matrix(B)
    if A.q != B.p:
        raise DimensionMismatch(f"cannot multiply {A.p}x{A.q} by {B.p}x{B.q}")
    lo, hi = product_inner_range(A.p, A.q, B.q, w)
    left = lace_window(A, WindowSpec(w.row_lo, w.row_hi, lo, hi))
    right = lace_window(B, WindowSpec(lo, hi, w.col_lo, w.col_hi))
    return left, right


def veronese_row_index(u: int, p: int, r: int) -> int:
    """Row of Lace(A) that row ``u`` of Lace(S^(r) A) is taken from."""
    u1, i = divmod(u, p)
    return r * p * u1 + i


def veronese_col_index(v: int, q: int, r: int) -> int:
    """Column of Lace(A) that column ``v`` of Lace of the stacked blocks is taken from."""
    v1, j = divmod(v, q)
    return r * q * v1 + j
