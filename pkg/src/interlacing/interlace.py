"""Interlacing predicates.

Two independent routes are offered.  The root route (``is_aesw_poly``,
``interlaces_roots``) works on exact polynomials through Sturm isolation.
The total-positivity route (``interlaces_tp``, ``is_fully_interlacing``,
``is_hurwitz_window``) checks minors of a finite window and therefore
certifies only "nonnegative up to order k on window W"; that regime travels
with every verdict.
"""
from __future__ import annotations

from typing import Sequence

from .errors import InvalidParameter, ZeroPolynomial
from .roots import RootIsolation, isolate_real_roots, joint_roots
from .series import Series, add, shift, substitute_power
from .tp import DEFAULT_ORDER, TpVerdict, is_tp
from .windows import SeriesMatrix, WindowSpec, hurwitz_window, lace_window


def isolate(P: Series) -> RootIsolation:
    if P.is_zero:
        raise ZeroPolynomial("the zero polynomial has no finite root list")
    return isolate_real_roots(P)


def is_real_rooted(P: Series) -> bool:
    """True for the zero polynomial and for polynomials with only real roots."""
    if P.is_zero:
        return True
    return isolate_real_roots(P).total_count == P.degree


def has_nonnegative_coeffs(P: Series) -> bool:
    return all(c >= 0 for c in P.coeffs)


def is_aesw_poly(P: Series) -> bool:
    if not P.exact:
        raise InvalidParameter("is_aesw_poly needs an exact polynomial")
    return has_nonnegative_coeffs(P) and is_real_rooted(P)


def interlaces_roots(P: Series, Q: Series) -> bool:
    """Classical interlacing ``P < Q``: roots of P alternate to the left of Q's.

    Both must be real-rooted with nonnegative coefficients.  The zero
    polynomial interlaces, and is interlaced by, every such polynomial.
    """
    if not (is_aesw_poly(P) and is_aesw_poly(Q)):
        return False
    if P.is_zero or Q.is_zero:
        return True
    m, n = P.degree, Q.degree
    if not n - 1 <= m <= n:
        return False
    # distinct roots in descending order, labelled by rank; equal rank = equal root
    joint = list(reversed(joint_roots([P, Q])))
    eta = [rank for rank, (_, (mp, _)) in enumerate(joint) for _ in range(mp)]
    theta = [rank for rank, (_, (_, mq)) in enumerate(joint) for _ in range(mq)]
    # theta_1 >= eta_1 >= theta_2 >= eta_2 >= ...  (larger root = smaller rank)
    for i, e in enumerate(eta):
        if theta[i] > e:
            return False
        if i + 1 < len(theta) and e > theta[i + 1]:
            return False
    return True


def hurwitz_combination(A: Series, B: Series) -> Series:
    """``B(x^2) + x A(x^2)``."""
    return add(substitute_power(B, 2), shift(substitute_power(A, 2), 1))


def _top_index(*series: Series) -> int:
    inexact = [s.trunc for s in series if not s.exact]
    if inexact:
        return min(inexact)
    return max(s.trunc for s in series)


def default_window(*series: Series) -> int:
    return _top_index(*series) + 1


def default_pair_window(A: Series, B: Series) -> int:
    """Window matching the Hurwitz matrix of ``B(x^2) + x A(x^2)``.

    For exact inputs this is ``deg(B(x^2) + x A(x^2)) + 1``; for truncated
    inputs it is the largest window whose entries are all known.
    """
    if A.exact and B.exact:
        return 2 * _top_index(A, B) + 2
    return _top_index(A, B) + 1


def is_hurwitz_window(C: Series, window_size: int, order: int = DEFAULT_ORDER) -> TpVerdict:
    return is_tp(hurwitz_window(C, WindowSpec.square(window_size)), order)


def pair_windows(A: Series, B: Series, window_size: int):
    """The Lace window of ``(A B)^T`` on rows ``1..W``, columns ``0..W-1``, and
    the Hurwitz window of ``B(x^2) + x A(x^2)`` on rows/columns ``0..W-1``.

    The Z x Z matrices agree after a one-row shift, so these windows hold
    identical entries.
    """
    lace = lace_window(SeriesMatrix.column([A, B]),
                       WindowSpec(1, window_size, 0, window_size - 1))
    hur = hurwitz_window(hurwitz_combination(A, B), WindowSpec.square(window_size))
    return lace, hur


def interlaces_tp(A: Series, B: Series, window_size: int | None = None,
                  order: int = DEFAULT_ORDER) -> TpVerdict:
    """``A < B`` certified by nonnegativity of the interlacing-matrix minors.

    Both constructions of the window are built and must coincide entrywise.
    """
    if window_size is None:
        window_size = default_pair_window(A, B)
    lace, hur = pair_windows(A, B, window_size)
    if lace.data != hur.data:
        raise AssertionError("Lace and Hurwitz windows disagree")
    return is_tp(lace, order)


def is_fully_interlacing(A: SeriesMatrix, window_size: int | None = None,
                         order: int = DEFAULT_ORDER) -> TpVerdict:
    """TP verdict for Lace(A) on rows ``0..p*W-1`` and columns ``0..q*W-1``."""
    if isinstance(A, Series):
        A = SeriesMatrix(((A,),))
    if window_size is None:
        window_size = default_window(*A.all_entries())
    return is_tp(lace_window(A, WindowSpec.blocks(A.p, A.q, window_size)), order)


def is_pairwise_interlacing(seq: Sequence[Series], window_size: int | None = None,
                            order: int = DEFAULT_ORDER) -> bool:
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            w = window_size if window_size is not None else default_pair_window(seq[i], seq[j])
            if not interlaces_tp(seq[i], seq[j], w, order).passed:
                return False
    return True


def is_pairwise_interlacing_roots(seq: Sequence[Series]) -> bool:
    return all(interlaces_roots(seq[i], seq[j])
               for i in range(len(seq)) for j in range(i + 1, len(seq)))
