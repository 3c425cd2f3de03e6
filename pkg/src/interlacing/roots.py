"""Exact real-root isolation for rational polynomials (Sturm sequences).

Polynomials are plain lists of Fractions, lowest degree first.  Everything
is exact: roots are located in half-open intervals ``(lo, hi]`` with
rational endpoints, each containing exactly one distinct root.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ZeroPolynomial
from .series import Series


def trim(f: list) -> list:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def deg(f: list) -> int:
    return len(trim(f)) - 1


def monic(f: list) -> list:
    f = trim(f)
    return [c / f[-1] for c in f] if f else f


def deriv(f: list) -> list:
    return trim([i * c for i, c in enumerate(f)][1:])


def evaluate(f: list, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def poly_divmod(f: list, g: list) -> tuple[list, list]:
    f, g = trim(f), trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    quo = [Fraction(0)] * max(len(f) - len(g) + 1, 1)
    rem = list(f)
    lead = g[-1]
    while len(rem) >= len(g) and rem:
        shift = len(rem) - len(g)
        c = rem[-1] / lead
        quo[shift] = c
        for i, gc in enumerate(g):
            rem[shift + i] -= c * gc
        rem.pop()
        rem = trim(rem)
    return trim(quo), rem


def poly_mul(f: list, g: list) -> list:
    if not f or not g:
        return []
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return trim(out)


def gcd(f: list, g: list) -> list:
    f, g = trim(f), trim(g)
    while g:
        f, g = g, poly_divmod(f, g)[1]
    return monic(f)


def squarefree_factors(f: list) -> list[list]:
    """Yun's algorithm: ``[F_1, F_2, ...]`` with ``f = c * prod F_k^k``."""
    f = trim(f)
    fp = deriv(f)
    a = gcd(f, fp)
    b = poly_divmod(f, a)[0]
    c = poly_divmod(fp, a)[0]
    d = [x - y for x, y in _pad(c, deriv(b))]
    out = []
    while deg(b) > 0:
        a = gcd(b, d)
        out.append(monic(a))
        b = poly_divmod(b, a)[0]
        c = poly_divmod(d, a)[0]
        d = [x - y for x, y in _pad(c, deriv(b))]
    return out


def _pad(f, g):
    n = max(len(f), len(g))
    f = list(f) + [Fraction(0)] * (n - len(f))
    g = list(g) + [Fraction(0)] * (n - len(g))
    return zip(f, g)


def sturm_sequence(f: list) -> list[list]:
    seq = [trim(f), deriv(f)]
    while seq[-1]:
        r = poly_divmod(seq[-2], seq[-1])[1]
        seq.append([-c for c in r])
    return seq[:-1]


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq: list[list], lo: Fraction, hi: Fraction) -> int:
    """Distinct roots in ``(lo, hi]`` of the squarefree head of a Sturm sequence."""
    return (_sign_changes([evaluate(p, lo) for p in seq])
            - _sign_changes([evaluate(p, hi) for p in seq]))


def root_bound(f: list) -> Fraction:
    f = trim(f)
    lead = abs(f[-1])
    return 1 + max((abs(c) / lead for c in f[:-1]), default=Fraction(0))


@dataclass
class RootInterval:
    lo: Fraction
    hi: Fraction
    multiplicity: int

    def contains(self, x: Fraction) -> bool:
        return self.lo < x <= self.hi


@dataclass
class RootIsolation:
    intervals: list
    squarefree: list = field(repr=False, default_factory=list)

    @property
    def total_count(self) -> int:
        return sum(iv.multiplicity for iv in self.intervals)

    @property
    def distinct(self) -> int:
        return len(self.intervals)

    def refine(self, width) -> "RootIsolation":
        """Shrink every interval to width at most ``width`` (in place)."""
        width = Fraction(width)
        seq = sturm_sequence(self.squarefree) if self.intervals else []
        for iv in self.intervals:
            while iv.hi - iv.lo > width:
                mid = (iv.lo + iv.hi) / 2
                if count_roots(seq, iv.lo, mid):
                    iv.hi = mid
                else:
                    iv.lo = mid
        return self


def _isolate(f: list) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the distinct real roots of squarefree ``f``, ascending."""
    if deg(f) < 1:
        return []
    seq = sturm_sequence(f)
    B = root_bound(f)
    out = []
    stack = [(-B, B)]
    while stack:
        lo, hi = stack.pop()
        n = count_roots(seq, lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort()
    return out


def _poly_of(P) -> list:
    if isinstance(P, Series):
        if not P.exact:
            raise ValueError("root isolation needs an exact polynomial")
        return trim(list(P.coeffs))
    return trim([Fraction(c) for c in P])


def joint_roots(polys: list) -> list[tuple[RootInterval, tuple]]:
    """Distinct real roots of a product of nonzero polynomials, ascending,
    each with its multiplicity in every factor.

    Returned as ``(interval, (m_0, m_1, ...))``.  Common roots are detected
    exactly, so no comparison ever needs infinite refinement.
    """
    fs = [_poly_of(P) for P in polys]
    if any(not f for f in fs):
        raise ZeroPolynomial("joint root isolation of a zero polynomial")
    factors = [squarefree_factors(f) for f in fs]
    radical = [Fraction(1)]
    for fac in factors:
        for F in fac:
            radical = poly_mul(radical, F)
    radical = poly_divmod(radical, gcd(radical, deriv(radical)))[0] if deg(radical) > 0 else radical
    seqs = [[sturm_sequence(F) for F in fac] for fac in factors]
    out = []
    for lo, hi in _isolate(radical):
        mults = []
        for fac_seqs in seqs:
            m = 0
            for k, seq in enumerate(fac_seqs, start=1):
                if deg(seq[0]) > 0 and count_roots(seq, lo, hi):
                    m = k
                    break
            mults.append(m)
        out.append((RootInterval(lo, hi, sum(mults)), tuple(mults)))
    return out


def isolate_real_roots(P) -> RootIsolation:
    """Isolate the real roots of an exact nonzero polynomial, with multiplicities."""
    f = _poly_of(P)
    if not f:
        raise ZeroPolynomial("cannot isolate the roots of the zero polynomial")
    sqf = poly_divmod(f, gcd(f, deriv(f)))[0] if deg(f) > 0 else [Fraction(1)]
    intervals = [RootInterval(iv.lo, iv.hi, m[0]) for iv, m in joint_roots([f])]
    return RootIsolation(intervals, sqf)
