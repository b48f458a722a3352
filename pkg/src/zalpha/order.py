"""Certified sign, comparison and integer rounding for elements of Z[alpha] viewed as reals.

Every answer is exact.  The default path refines a dyadic enclosure of alpha
and evaluates the element with integer interval arithmetic until the
enclosure decides; it is capped by an a priori denominator beyond which
evaluating at a single rational approximation of alpha is provably enough.
``method="threshold"`` skips straight to that cap.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from . import poly
from .arith import _same_field, inverse, mul
from .errors import DivisionByZero
from .field import AlgebraicInt, FieldDescriptor, opc

PROGRESSIVE = "progressive"
THRESHOLD = "threshold"


@dataclass(frozen=True)
class AlphaApprox:
    """u/d <= alpha <= v/d with u = floor(alpha*d), v = ceil(alpha*d)."""

    d: int
    u: int
    v: int


class _AlphaCache:
    """Per-field dyadic refinement of alpha: floor(alpha * 2**k) for the deepest k seen.

    Entries only ever get deeper; concurrent refinements may duplicate work
    but always agree, so the lock only guards the dict update.
    """

    def __init__(self):
        self._levels: dict[FieldDescriptor, tuple[int, int]] = {}
        self._exact: dict[FieldDescriptor, Fraction] = {}
        self._lock = threading.Lock()

    def exact(self, F: FieldDescriptor) -> Fraction | None:
        if F.alpha_exact is not None:
            return F.alpha_exact
        return self._exact.get(F)

    def compare(self, F: FieldDescriptor, t: Fraction) -> int:
        """sign(alpha - t)."""
        ex = self.exact(F)
        if ex is not None:
            return (ex > t) - (ex < t)
        lo, hi = F.interval
        if t <= lo:
            return 1
        if t >= hi:
            return -1
        s = poly.eval_sign_at(F.f_full, t)
        if s == 0:
            with self._lock:
                self._exact[F] = t
            return 0
        return -1 if s != F.sign_f_lo else 1

    def floor_scaled(self, F: FieldDescriptor, k: int) -> int:
        """floor(alpha * 2**k)."""
        ex = self.exact(F)
        if ex is not None:
            return math.floor(ex * 2**k)
        got = self._levels.get(F)
        if got is not None and got[0] >= k:
            level, U = got
            return U >> (level - k)
        if got is None:
            level, U = 0, self._floor_alpha(F)
        else:
            level, U = got
        while level < k:
            mid = Fraction(2 * U + 1, 2 ** (level + 1))
            U = 2 * U + 1 if self.compare(F, mid) >= 0 else 2 * U
            level += 1
        with self._lock:
            cur = self._levels.get(F)
            if cur is None or cur[0] < level:
                self._levels[F] = (level, U)
        return U

    def _floor_alpha(self, F: FieldDescriptor) -> int:
        lo, hi = F.interval
        a, b = math.floor(lo), math.ceil(hi)  # alpha in [a, b]
        while b - a > 1:
            c = (a + b) // 2
            if self.compare(F, Fraction(c)) >= 0:
                a = c
            else:
                b = c
        return b if self.compare(F, Fraction(b)) >= 0 else a

    def clear(self):
        with self._lock:
            self._levels.clear()
            self._exact.clear()


_cache = _AlphaCache()


def clear_cache() -> None:
    _cache.clear()


def refine_alpha(F: FieldDescriptor, d: int) -> AlphaApprox:
    """(floor(alpha*d), ceil(alpha*d)) by bisection with exact sign tests on f."""
    if d < 1:
        raise ValueError("d must be positive")
    k = d.bit_length() + 1
    U = _cache.floor_scaled(F, k)
    u = ((U + 1) * d) >> k
    if _cache.compare(F, Fraction(u, d)) < 0:
        u -= 1
    v = u if _cache.compare(F, Fraction(u, d)) == 0 else u + 1
    return AlphaApprox(d, u, v)


def alpha_bounds(F: FieldDescriptor, k: int) -> tuple[Fraction, Fraction]:
    """Dyadic enclosure [U/2^k, (U+1)/2^k] of alpha."""
    U = _cache.floor_scaled(F, k)
    return Fraction(U, 2**k), Fraction(U + 1, 2**k)


def _enclosure(a: AlgebraicInt, k: int) -> tuple[int, int]:
    """Integers lo <= 2**(k*(m-1)) * a <= hi from interval Horner on alpha's enclosure."""
    c = a.coeffs
    m = len(c)
    U = _cache.floor_scaled(a.field, k)
    V = U + 1
    lo = hi = c[-1]
    for i in range(m - 2, -1, -1):
        p = (lo * U, lo * V, hi * U, hi * V)
        t = c[i] << (k * (m - 1 - i))
        lo, hi = min(p) + t, max(p) + t
    return lo, hi


def _numerator_at(a: AlgebraicInt, w: int, d: int) -> int:
    """d**(m-1) * g(w/d) by the recurrence r_{k+1} = r_k w + a_{m-k-1} d^k."""
    c = a.coeffs
    m = len(c)
    r = 0
    dk = 1
    for k in range(m):
        r = r * w + c[m - k - 1] * dk
        dk *= d
    return r


def sign_threshold(a: AlgebraicInt) -> int:
    """Denominator beyond which evaluating at floor/ceil(alpha d)/d gives sign(a)."""
    F = a.field
    m = F.degree
    return (m - 1) * (1 + opc(a) ** m * F.const_P * F.const_S**2)


def round_threshold(a: AlgebraicInt, s: int) -> int:
    """Denominator beyond which evaluating at a rational approximation gives floor(a/s)."""
    F = a.field
    m = F.degree
    o = max(opc(a), abs(s))
    return (m - 1) * (1 + o**m * F.const_P * F.const_S ** (m + 1))


def _start_level(a: AlgebraicInt) -> int:
    return max(32, opc(a).bit_length() + 16)


def _exact_value(a: AlgebraicInt, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def sign(a: AlgebraicInt, *, method: str = PROGRESSIVE) -> int:
    """Sign of the real number a, certified."""
    if not a:
        return 0
    if a.is_integer():
        return _sgn(a.coeffs[0])
    F = a.field
    ex = _cache.exact(F)
    if ex is not None:
        return _sgn(_exact_value(a, ex))
    dstar = sign_threshold(a)
    if method == PROGRESSIVE:
        k = _start_level(a)
        while 2**k < dstar:
            lo, hi = _enclosure(a, k)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            k *= 2
    elif method != THRESHOLD:
        raise ValueError(f"unknown method {method!r}")
    return _sign_at_threshold(a, dstar)


def _sign_at_threshold(a: AlgebraicInt, d: int) -> int:
    ap = refine_alpha(a.field, d)
    signs = {_sgn(_numerator_at(a, w, d)) for w in (ap.u, ap.v)}
    if len(signs) != 1 or 0 in signs:
        raise AssertionError(f"threshold evaluation inconsistent for {a}: {signs}")
    return signs.pop()


def cmp(a: AlgebraicInt, b: AlgebraicInt, *, method: str = PROGRESSIVE) -> int:
    """-1, 0 or 1 as a <, ==, > b."""
    _same_field(a, b)
    return sign(a - b, method=method)


def floor_div_int(a: AlgebraicInt, s: int, *, method: str = PROGRESSIVE) -> int:
    """floor(a / s) for a nonzero integer s."""
    if s == 0:
        raise DivisionByZero("division by zero")
    if s < 0:
        a, s = -a, -s
    if a.is_integer():
        return a.coeffs[0] // s
    F = a.field
    ex = _cache.exact(F)
    if ex is not None:
        return math.floor(_exact_value(a, ex) / s)
    dstar = round_threshold(a, s)
    if method == PROGRESSIVE:
        m = F.degree
        k = _start_level(a) + s.bit_length()
        while 2**k < dstar:
            lo, hi = _enclosure(a, k)
            den = s << (k * (m - 1))
            q = lo // den
            if hi // den == q:
                return q
            k *= 2
    elif method != THRESHOLD:
        raise ValueError(f"unknown method {method!r}")
    return _floor_at_threshold(a, s, dstar)


def _floor_at_threshold(a: AlgebraicInt, s: int, d: int) -> int:
    ap = refine_alpha(a.field, d)
    den = s * d ** (a.field.degree - 1)
    qs = {_numerator_at(a, w, d) // den for w in (ap.u, ap.v)}
    if len(qs) != 1:
        raise AssertionError(f"threshold rounding inconsistent for {a}/{s}: {qs}")
    return qs.pop()


def ceil_div_int(a: AlgebraicInt, s: int, *, method: str = PROGRESSIVE) -> int:
    return -floor_div_int(-a, s, method=method)


def round_div_int(a: AlgebraicInt, s: int, *, method: str = PROGRESSIVE) -> int:
    """Nearest integer to a / s, halves rounded up."""
    if s == 0:
        raise DivisionByZero("division by zero")
    if s < 0:
        a, s = -a, -s
    return floor_div_int(2 * a + s, 2 * s, method=method)


def _as_int_quotient(a: AlgebraicInt, b: AlgebraicInt) -> tuple[AlgebraicInt, int]:
    _same_field(a, b)
    if not b:
        raise DivisionByZero("division by zero")
    if b.is_integer():
        return a, b.coeffs[0]
    inv = inverse(b)
    return mul(a, inv.num), inv.den


def floor_div(a: AlgebraicInt, b: AlgebraicInt, *, method: str = PROGRESSIVE) -> int:
    """floor(a / b), computed as floor(a * num / den) with 1/b = num/den."""
    return floor_div_int(*_as_int_quotient(a, b), method=method)


def ceil_div(a: AlgebraicInt, b: AlgebraicInt, *, method: str = PROGRESSIVE) -> int:
    return ceil_div_int(*_as_int_quotient(a, b), method=method)


def round_div(a: AlgebraicInt, b: AlgebraicInt, *, method: str = PROGRESSIVE) -> int:
    return round_div_int(*_as_int_quotient(a, b), method=method)


def approx_log2(a: AlgebraicInt, rel_bits: int = 40) -> float:
    """log2 |a| to about ``rel_bits`` relative bits; reporting only, never used to decide."""
    if not a:
        return float("-inf")
    if a.is_integer():
        return math.log2(abs(a.coeffs[0]))
    m = a.field.degree
    k = _start_level(a)
    while True:
        lo, hi = _enclosure(a, k)
        if lo > 0 or hi < 0:
            lo, hi = sorted((abs(lo), abs(hi)))
            if (hi - lo) << rel_bits <= lo:
                shift = max(0, lo.bit_length() - 60)
                return math.log2(lo >> shift) + shift - k * (m - 1)
        k *= 2
