"""Exact truncated power series over the rationals.

A :class:`Series` stores the coefficients ``c_0 .. c_N`` of a formal power
series together with its truncation order ``N``.  When ``exact`` is set the
series is a polynomial and every coefficient past ``N`` is genuinely zero;
otherwise coefficients past ``N`` are unknown and asking for them raises
:class:`CoefficientBeyondTruncation`.

Truncation bookkeeping follows one rule: an operation keeps exactly the
coefficients it can compute from known inputs.  Exact operands never limit
the result, inexact operands limit it to the smallest truncation among them.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CoefficientBeyondTruncation, InvalidParameter, InvalidSection

Rat = Fraction

_RAT_RE = re.compile(r"^\s*-?\d+(\s*/\s*\d+)?\s*$")


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: nothing in this package is ever rounded.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RAT_RE.match(value):
            raise InvalidParameter(f"not a rational literal: {value!r}")
        r = Fraction(value.replace(" ", ""))
        return r
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def rat_str(r: Fraction) -> str:
    return str(r)


@dataclass(frozen=True)
class Series:
    coeffs: tuple
    trunc: int
    exact: bool = False

    def __post_init__(self):
        cs = tuple(as_rat(c) for c in self.coeffs)
        if self.trunc < 0:
            raise InvalidParameter("truncation order must be nonnegative")
        if len(cs) != self.trunc + 1:
            raise InvalidParameter(
                f"expected {self.trunc + 1} coefficients, got {len(cs)}")
        if self.exact:
            # canonical form: no trailing zeros, zero polynomial is (0,)
            n = len(cs)
            while n > 1 and cs[n - 1] == 0:
                n -= 1
            cs = cs[:n]
            object.__setattr__(self, "trunc", n - 1)
        object.__setattr__(self, "coeffs", cs)

    # construction helpers -------------------------------------------------

    @classmethod
    def poly(cls, coeffs: Iterable) -> "Series":
        cs = list(coeffs) or [0]
        return cls(tuple(cs), len(cs) - 1, True)

    @classmethod
    def truncated(cls, coeffs: Iterable, trunc: int | None = None) -> "Series":
        cs = list(coeffs)
        if trunc is None:
            trunc = len(cs) - 1
        cs = (cs + [0] * (trunc + 1))[: trunc + 1]
        return cls(tuple(cs), trunc, False)

    @classmethod
    def zero(cls) -> "Series":
        return cls((0,), 0, True)

    @classmethod
    def one(cls) -> "Series":
        return cls((1,), 0, True)

    @classmethod
    def x(cls) -> "Series":
        return cls((0, 1), 1, True)

    # inspection -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.exact and self.coeffs == (0,)

    @property
    def degree(self) -> int | None:
        """Degree of an exact polynomial; ``None`` for the zero polynomial."""
        if not self.exact:
            raise InvalidParameter("degree is only defined for exact series")
        return None if self.is_zero else self.trunc

    @property
    def limit(self) -> float:
        """Largest index with a known coefficient (``inf`` when exact)."""
        return math.inf if self.exact else self.trunc

    def __getitem__(self, n: int) -> Fraction:
        return coeff(self, n)

    def __repr__(self):
        terms = " + ".join(f"({c})x^{i}" for i, c in enumerate(self.coeffs) if c)
        tail = "" if self.exact else f" + O(x^{self.trunc + 1})"
        return f"Series({terms or '0'}{tail})"

    # arithmetic sugar -----------------------------------------------------

    def __add__(self, other):
        return add(self, _lift(other))

    __radd__ = __add__

    def __neg__(self):
        return scale(-1, self)

    def __sub__(self, other):
        return add(self, scale(-1, _lift(other)))

    def __rsub__(self, other):
        return add(_lift(other), scale(-1, self))

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        return scale(other, self)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Series.one()
        for _ in range(n):
            out = mul(out, self)
        return out

    # serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {"coeffs": [rat_str(c) for c in self.coeffs],
                "trunc": self.trunc, "exact": self.exact}

    @classmethod
    def from_json(cls, obj) -> "Series":
        if isinstance(obj, list):
            return cls.poly(obj)
        cs = list(obj["coeffs"])
        exact = bool(obj.get("exact", False))
        trunc = obj.get("trunc", len(cs) - 1)
        return cls(tuple(cs), int(trunc), exact)


def _lift(value) -> Series:
    if isinstance(value, Series):
        return value
    return Series.poly([as_rat(value)])


def _known_limit(*series: Series):
    """Common truncation of a result computed from ``series``, or None if exact."""
    lims = [s.trunc for s in series if not s.exact]
    return min(lims) if lims else None


def coeff(A: Series, n: int) -> Fraction:
    """``[x^n] A``, with the convention that negative indices give zero."""
    if n < 0:
        return Fraction(0)
    if n <= A.trunc:
        return A.coeffs[n]
    if A.exact:
        return Fraction(0)
    raise CoefficientBeyondTruncation(
        f"coefficient {n} requested from a series truncated at {A.trunc}")


def _build(coeffs: list, limit) -> Series:
    if limit is None:
        return Series.poly(coeffs)
    coeffs = (coeffs + [Fraction(0)] * (limit + 1))[: limit + 1]
    return Series(tuple(coeffs), limit, False)


def add(A: Series, B: Series) -> Series:
    limit = _known_limit(A, B)
    n = (max(A.trunc, B.trunc) if limit is None else limit) + 1
    return _build([coeff(A, i) + coeff(B, i) for i in range(n)], limit)


def scale(lam, A: Series) -> Series:
    lam = as_rat(lam)
    if lam == 0:
        return Series.zero()
    return Series(tuple(lam * c for c in A.coeffs), A.trunc, A.exact)


def mul(A: Series, B: Series) -> Series:
    """Cauchy product."""
    if A.is_zero or B.is_zero:
        return Series.zero()
    limit = _known_limit(A, B)
    n = A.trunc + B.trunc + 1 if limit is None else limit + 1
    out = [Fraction(0)] * n
    for i, a in enumerate(A.coeffs[:n]):
        if not a:
            continue
        for j, b in enumerate(B.coeffs[: n - i]):
            out[i + j] += a * b
    return _build(out, limit)


def shift(A: Series, k: int = 1) -> Series:
    """``x^k A(x)``; unlike ``mul`` this keeps the extra ``k`` known coefficients."""
    if k < 0:
        raise InvalidParameter("shift must be nonnegative")
    if A.is_zero:
        return A
    return Series((0,) * k + A.coeffs, A.trunc + k, A.exact)


def substitute_power(A: Series, r: int) -> Series:
    """``A(x^r)``."""
    if r < 1:
        raise InvalidParameter("power must be positive")
    n = r * A.trunc + 1 if A.exact else r * (A.trunc + 1)
    out = [Fraction(0)] * n
    for i, c in enumerate(A.coeffs):
        out[r * i] = c
    return Series(tuple(out), n - 1, A.exact)


def derivative(A: Series) -> Series:
    if A.trunc == 0:
        if A.exact:
            return Series.zero()
        raise CoefficientBeyondTruncation(
            "derivative of a series truncated at order 0 is unknown")
    return Series(tuple(i * c for i, c in enumerate(A.coeffs) if i), A.trunc - 1, A.exact)


def aesw_series(c, n: int, gamma, alphas: Sequence = (), betas: Sequence = (),
                trunc: int = 10) -> Series:
    """``c x^n exp(gamma x) prod(1 + a x) / prod(1 - b x)`` truncated at ``trunc``.

    The result is exact (a polynomial) when ``gamma`` is zero and there are no
    ``betas``; in that case ``trunc`` is ignored.
    """
    c, gamma = as_rat(c), as_rat(gamma)
    alphas = [as_rat(a) for a in alphas]
    betas = [as_rat(b) for b in betas]
    if n < 0:
        raise InvalidParameter("monomial exponent must be nonnegative")
    for name, val in [("c", c), ("gamma", gamma)] + [("alpha", a) for a in alphas] \
            + [("beta", b) for b in betas]:
        if val < 0:
            raise InvalidParameter(f"{name} must be nonnegative, got {val}")
    out = Series.poly([c])
    for a in alphas:
        out = mul(out, Series.poly([1, a]))
    out = shift(out, n)
    if gamma == 0 and not betas:
        return out
    if trunc < 0:
        raise InvalidParameter("truncation order must be nonnegative")
    tail = Series.truncated([gamma ** k / math.factorial(k) for k in range(trunc + 1)], trunc)
    for b in betas:
        tail = mul(tail, Series.truncated([b ** k for k in range(trunc + 1)], trunc))
    return mul(out, tail)


def veronese_section(A: Series, r: int, k: int) -> Series:
    """The series ``sum_n a_{k + r n} x^n``."""
    if r < 1:
        raise InvalidSection(f"section modulus must be positive, got r={r}")
    if not 0 <= k < r:
        raise InvalidSection(f"need 0 <= k < r, got k={k}, r={r}")
    if A.exact:
        picked = list(A.coeffs[k::r])
        return Series.poly(picked or [0])
    top = (A.trunc - k) // r
    if top < 0:
        raise CoefficientBeyondTruncation(
            f"section {k} mod {r} of a series truncated at {A.trunc} has no known coefficient")
    return Series(A.coeffs[k::r][: top + 1], top, False)
