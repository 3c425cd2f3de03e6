"""h-polynomial transforms under 2-fold edgewise subdivision.

An :class:`HFamily` of size ``n`` holds, for ``m = 0..n``, the h-polynomial
of the uniformly triangulated ``(m-1)``-simplex and of its boundary.  The
boundary polynomials are input data; nothing here derives them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import IndexOutOfRange, InvalidParameter, PreconditionFailed
from .interlace import has_nonnegative_coeffs, interlaces_roots, is_real_rooted
from .series import Series, shift, veronese_section

ONE_PLUS_X = Series.poly([1, 1])


@dataclass(frozen=True)
class HFamily:
    n: int
    simplex_h: tuple
    boundary_h: tuple

    def __post_init__(self):
        s = tuple(_exact(h) for h in self.simplex_h)
        b = tuple(_exact(h) for h in self.boundary_h)
        if len(s) != self.n + 1 or len(b) != self.n + 1:
            raise InvalidParameter(f"size-{self.n} family needs {self.n + 1} polynomials per list")
        object.__setattr__(self, "simplex_h", s)
        object.__setattr__(self, "boundary_h", b)

    def __add__(self, other: "HFamily") -> "HFamily":
        if self.n != other.n:
            raise InvalidParameter("families of different sizes")
        return HFamily(self.n, tuple(a + b for a, b in zip(self.simplex_h, other.simplex_h)),
                       tuple(a + b for a, b in zip(self.boundary_h, other.boundary_h)))

    def to_json(self) -> dict:
        return {"n": self.n, "simplex_h": [h.to_json() for h in self.simplex_h],
                "boundary_h": [h.to_json() for h in self.boundary_h]}

    @classmethod
    def from_json(cls, obj) -> "HFamily":
        return cls(int(obj["n"]), tuple(Series.from_json(h) for h in obj["simplex_h"]),
                   tuple(Series.from_json(h) for h in obj["boundary_h"]))


def _exact(h) -> Series:
    h = h if isinstance(h, Series) else Series.poly(h)
    if not h.exact:
        raise InvalidParameter("h-polynomials must be exact")
    return h


def _index(fam: HFamily, m: int, lo: int = 0):
    if not lo <= m <= fam.n:
        raise IndexOutOfRange(f"m={m} outside {lo}..{fam.n}")


def theta(fam: HFamily, m: int) -> Series:
    _index(fam, m)
    return fam.simplex_h[m] - fam.boundary_h[m]


def esd2_h(h: Series, n: int) -> Series:
    """Even part of ``(1+x)^n h(x)``."""
    if n < 0:
        raise InvalidParameter("n must be nonnegative")
    return veronese_section(ONE_PLUS_X ** n * h, 2, 0)


def esd2_theta_summands(fam: HFamily, m: int) -> tuple[Series, Series]:
    hm = fam.simplex_h[m]
    even = veronese_section(ONE_PLUS_X ** (m - 1) * theta(fam, m), 2, 0)
    odd = shift(veronese_section(ONE_PLUS_X ** (m - 1) * hm, 2, 1), 1)
    return even, odd


def esd2_theta(fam: HFamily, m: int) -> Series:
    """theta of the subdivided family at ``m``, via the even/odd split.

    The split is checked against the direct difference of subdivided
    h-polynomials before returning.
    """
    if m < 1:
        raise IndexOutOfRange(f"m={m} outside 1..{fam.n}")
    _index(fam, m, 1)
    even, odd = esd2_theta_summands(fam, m)
    value = even + odd
    direct = esd2_h(fam.simplex_h[m], m) - esd2_h(fam.boundary_h[m], m - 1)
    if value != direct:
        raise AssertionError(f"even/odd split disagrees with the direct difference at m={m}")
    return value


def esd2_family(fam: HFamily) -> HFamily:
    simplex = tuple(esd2_h(h, m) for m, h in enumerate(fam.simplex_h))
    boundary = tuple(esd2_h(h, max(m - 1, 0)) for m, h in enumerate(fam.boundary_h))
    return HFamily(fam.n, simplex, boundary)


@dataclass
class StrongInterlacingReport:
    ok: bool
    real_rooted: dict = field(default_factory=dict)
    theta_ok: dict = field(default_factory=dict)
    nonnegative: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"ok": self.ok,
                "real_rooted": {str(k): v for k, v in self.real_rooted.items()},
                "theta": {str(k): v for k, v in self.theta_ok.items()},
                "simplex_h_nonnegative": {str(k): v for k, v in self.nonnegative.items()},
                "failures": self.failures}


def _theta_condition(fam: HFamily, m: int) -> tuple[bool, str]:
    th = theta(fam, m)
    if th.is_zero:
        return True, ""
    if th.degree != m - 1:
        return False, f"theta has degree {th.degree}, expected {m - 1}"
    if not has_nonnegative_coeffs(th):
        return False, "theta has a negative coefficient"
    if not is_real_rooted(th):
        return False, "theta is not real-rooted"
    if not interlaces_roots(fam.simplex_h[m - 1], th):
        return False, "theta is not interlaced by the previous simplex polynomial"
    return True, ""


def check_strong_interlacing(fam: HFamily) -> StrongInterlacingReport:
    rep = StrongInterlacingReport(ok=True)
    for m in range(fam.n + 1):
        rep.nonnegative[m] = has_nonnegative_coeffs(fam.simplex_h[m])
    for m in range(2, fam.n):
        rr = is_real_rooted(fam.simplex_h[m])
        rep.real_rooted[m] = rr
        if not rr:
            rep.failures.append(f"(i) m={m}: simplex polynomial is not real-rooted")
    for m in range(2, fam.n + 1):
        ok, why = _theta_condition(fam, m)
        rep.theta_ok[m] = ok
        if not ok:
            rep.failures.append(f"(ii) m={m}: {why}")
    rep.ok = not rep.failures
    return rep


@dataclass
class PropReport:
    ok: bool
    subdivided: HFamily
    strong: StrongInterlacingReport
    chain: dict = field(default_factory=dict)
    degree_bookkeeping: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"ok": self.ok, "family": self.subdivided.to_json(),
                "strong_interlacing": self.strong.to_json(),
                "chain": {str(k): v for k, v in self.chain.items()},
                "degree_bookkeeping": {str(k): v for k, v in self.degree_bookkeeping.items()}}


def check_prop_app(fam: HFamily) -> PropReport:
    """Subdivide a family with the strong interlacing property and verify that
    the result has it too, together with the interlacing chain

        S_1((1+x)^{m-1} h(sigma_m)) < h'(sigma_{m-1}) < S_0((1+x)^{m-1} theta(sigma_m))

    for ``2 <= m <= n``, where ``h'`` is the subdivided family.
    """
    pre = check_strong_interlacing(fam)
    if not pre.ok:
        raise PreconditionFailed("family lacks the strong interlacing property: "
                                 + "; ".join(pre.failures))
    G = esd2_family(fam)
    strong = check_strong_interlacing(G)
    chain, books = {}, {}
    for m in range(2, fam.n + 1):
        lifted = ONE_PLUS_X ** (m - 1)
        left = veronese_section(lifted * fam.simplex_h[m], 2, 1)
        mid = G.simplex_h[m - 1]
        right = veronese_section(lifted * theta(fam, m), 2, 0)
        chain[m] = interlaces_roots(left, mid) and interlaces_roots(mid, right)
        tg = theta(G, m)
        if tg != esd2_theta(fam, m):
            raise AssertionError(f"theta of the subdivided family is off at m={m}")
        tf = theta(fam, m)
        if tf.is_zero or (tf.degree == m - 1 and has_nonnegative_coeffs(tf)):
            books[m] = has_nonnegative_coeffs(tg) and (tg.is_zero or tg.degree == m - 1)
    ok = strong.ok and all(chain.values()) and all(books.values())
    return PropReport(ok, G, strong, chain, books)


def derivative_chain_family(G: Series, scales: Sequence, zero_theta: Sequence[int] = ()) -> HFamily:
    """A family built from the derivatives of one real-rooted polynomial.

    With ``n = deg G``, ``h(sigma_m)`` is the ``(n-m+1)``-th derivative of
    ``G`` (degree ``m-1``), normalized to constant term 1, and
    ``theta(sigma_m) = c_m * x * h(sigma_m)'`` (or zero for ``m`` in
    ``zero_theta``).  Since ``f' < f`` and ``f < x f`` for real-rooted ``f``
    with nonnegative coefficients, such a family has the strong interlacing
    property whenever ``G`` does not vanish at 0.
    """
    from .series import derivative, scale

    n = G.degree
    ders = [G]
    for _ in range(n):
        ders.append(derivative(ders[-1]))
    simplex = [Series.one()]
    for m in range(1, n + 1):
        h = ders[n - m + 1]
        simplex.append(scale(1 / h.coeffs[0], h) if h.coeffs[0] else h)
    boundary = []
    for m, h in enumerate(simplex):
        if m < 2 or m in zero_theta:
            boundary.append(h)
            continue
        th = scale(scales[m % len(scales)], shift(derivative(h), 1))
        boundary.append(h - th)
    return HFamily(n, tuple(simplex), tuple(boundary))
