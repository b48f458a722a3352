"""Real algebraic number fields Q(alpha) and the ring Z[alpha].

A field is fixed by the monic integer minimal polynomial f of alpha and a
rational interval isolating the real root alpha.  Elements of Z[alpha] are
stored as length-m integer vectors a_0..a_{m-1}, a = sum a_i alpha^i.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from . import poly
from .errors import IntervalNotIsolating, NotMonic, NotSquarefree


def _ceil_sqrt(n: int) -> int:
    r = isqrt(n)
    return r if r * r == n else r + 1


def reduction_table(f: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Coefficients r[k][l] with alpha^(m+k) = sum_l r[k][l] alpha^l, 0 <= k <= m-2.

    ``f`` holds the m non-leading coefficients of the monic minimal polynomial.
    """
    m = len(f)
    if m < 2:
        return ()
    rows = [[-c for c in f]]
    for _ in range(m - 2):
        prev = rows[-1]
        top = prev[m - 1]
        rows.append([(prev[l - 1] if l > 0 else 0) - f[l] * top for l in range(m)])
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class FieldDescriptor:
    """Immutable description of Q(alpha).

    The constants ``const_M``, ``const_P``, ``const_Q`` and ``const_S`` are
    integer upper bounds for the multiplication, inverse, norm and magnitude
    growth factors of the field, with |alpha| replaced by 1 + ||f||_inf.
    """

    min_poly: tuple[int, ...]
    interval: tuple[Fraction, Fraction]
    degree: int = dc_field(compare=False)
    reduction_table: tuple[tuple[int, ...], ...] = dc_field(compare=False, repr=False)
    f_inf_norm: int = dc_field(compare=False, repr=False)
    f_2_bound: int = dc_field(compare=False, repr=False)
    const_M: int = dc_field(compare=False, repr=False)
    const_P: int = dc_field(compare=False, repr=False)
    const_Q: int = dc_field(compare=False, repr=False)
    const_S: int = dc_field(compare=False, repr=False)
    # alpha itself when it is rational (m == 1, or reducible f with a rational root)
    alpha_exact: Fraction | None = dc_field(compare=False, repr=False, default=None)
    sign_f_lo: int = dc_field(compare=False, repr=False, default=0)

    @property
    def f_full(self) -> list[int]:
        """Coefficients of f including the leading 1, lowest degree first."""
        return list(self.min_poly) + [1]

    def element(self, coeffs: Iterable[int]) -> "AlgebraicInt":
        c = tuple(int(x) for x in coeffs)
        if len(c) > self.degree:
            raise ValueError(f"expected at most {self.degree} coefficients, got {len(c)}")
        return AlgebraicInt(self, c + (0,) * (self.degree - len(c)))

    def from_int(self, s: int) -> "AlgebraicInt":
        return AlgebraicInt(self, (int(s),) + (0,) * (self.degree - 1))

    @property
    def zero(self) -> "AlgebraicInt":
        return self.from_int(0)

    @property
    def one(self) -> "AlgebraicInt":
        return self.from_int(1)

    @property
    def alpha(self) -> "AlgebraicInt":
        if self.degree == 1:
            return self.from_int(-self.min_poly[0])
        return self.element([0, 1])

    def __str__(self) -> str:
        def mono(i):
            return "" if i == 0 else "x" if i == 1 else f"x^{i}"

        terms = [mono(self.degree)]
        for i in range(self.degree - 1, -1, -1):
            c = self.min_poly[i]
            if c:
                mag = str(abs(c)) if abs(c) != 1 or i == 0 else ""
                terms.append(("- " if c < 0 else "+ ") + mag + ("*" if mag and i else "") + mono(i))
        lo, hi = self.interval
        return f"Q(alpha), alpha root of {' '.join(terms)} in [{lo}, {hi}]"


def _constants(m: int, f_inf: int) -> dict[str, int]:
    base = 1 + f_inf
    const_M = m * base ** (m - 1)
    # ||f||_2 <= sqrt(m+1) * ||f||_inf whenever ||f||_inf >= 1; ||f||_2 >= 1 always
    f2 = max(1, _ceil_sqrt((m + 1) * f_inf * f_inf))
    const_Q = _ceil_sqrt(m**m * f2 ** (2 * (m - 1)))
    const_P = m * f2 ** (m - 1) * (const_M + _ceil_sqrt(m)) ** (m - 1)
    const_S = m * max(1, base) ** (m - 1)
    return dict(f_2_bound=f2, const_M=const_M, const_P=const_P, const_Q=const_Q, const_S=const_S)


def field_new(
    f_coeffs: Sequence[int],
    interval: tuple,
    *,
    leading: int = 1,
) -> FieldDescriptor:
    """Build and validate Q(alpha).

    ``f_coeffs`` are f_0..f_{m-1}; the leading coefficient is implicit and
    must be 1.  ``interval`` is a pair of rationals (anything ``Fraction``
    accepts) that must contain exactly one real root of f.
    """
    if leading != 1:
        raise NotMonic(f"leading coefficient must be 1, got {leading}")
    f = tuple(int(c) for c in f_coeffs)
    m = len(f)
    if m < 1:
        raise ValueError("degree must be at least 1")
    lo, hi = (Fraction(x) for x in interval)
    if not lo < hi:
        raise IntervalNotIsolating(f"empty interval [{lo}, {hi}]")
    full = list(f) + [1]
    if poly.gcd_degree(full, poly.derivative(full)) > 0:
        raise NotSquarefree(f"{full} has a repeated factor")
    count = poly.count_roots_closed(full, lo, hi)
    if count != 1:
        raise IntervalNotIsolating(f"[{lo}, {hi}] contains {count} roots of f, expected 1")

    s_lo = poly.eval_sign_at(full, lo)
    s_hi = poly.eval_sign_at(full, hi)
    exact = lo if s_lo == 0 else hi if s_hi == 0 else None
    if exact is None and m == 1:
        exact = Fraction(-f[0])

    f_inf = max(abs(c) for c in f)
    return FieldDescriptor(
        min_poly=f,
        interval=(lo, hi),
        degree=m,
        reduction_table=reduction_table(f),
        f_inf_norm=f_inf,
        alpha_exact=exact,
        sign_f_lo=s_lo,
        **_constants(m, f_inf),
    )


def field_from_polynomial(coeffs: Sequence[int], interval: tuple) -> FieldDescriptor:
    """Like :func:`field_new` but takes the full coefficient list, leading term last."""
    coeffs = poly.trim([int(c) for c in coeffs])
    if len(coeffs) < 2:
        raise ValueError("polynomial must have degree >= 1")
    return field_new(coeffs[:-1], interval, leading=coeffs[-1])


@dataclass(frozen=True)
class AlgebraicInt:
    """An element of Z[alpha]; a value type with the usual ring operators."""

    field: FieldDescriptor = dc_field(repr=False)
    coeffs: tuple[int, ...]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def __add__(self, other):
        return _arith.add(self, _coerce(self, other))

    __radd__ = __add__

    def __sub__(self, other):
        return _arith.sub(self, _coerce(self, other))

    def __rsub__(self, other):
        return _arith.sub(_coerce(self, other), self)

    def __neg__(self):
        return _arith.neg(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return _arith.scalar_mul(other, self)
        return _arith.mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return _arith.scalar_mul(other, self)
        return NotImplemented

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mon = "" if i == 0 else "a" if i == 1 else f"a^{i}"
            if mon and abs(c) == 1:
                term = mon
            else:
                term = f"{abs(c)}{'*' + mon if mon else ''}"
            parts.append((" - " if c < 0 else " + ") + term)
        s = "".join(parts)
        return s[3:] if s.startswith(" + ") else "-" + s[3:]


@dataclass(frozen=True)
class InverseRep:
    """1/b written as num/den with num in Z[alpha] and den a nonzero integer."""

    num: AlgebraicInt
    den: int


def _coerce(a: AlgebraicInt, other) -> AlgebraicInt:
    if isinstance(other, int):
        return a.field.from_int(other)
    return other


def opc(a: AlgebraicInt) -> int:
    """Coefficient norm: the largest absolute coefficient."""
    return max(abs(c) for c in a.coeffs)


from . import arith as _arith  # noqa: E402  (operators dispatch to arith)


def integer_field() -> FieldDescriptor:
    """Q itself as a degree-1 field (alpha = 0); elements are plain integers."""
    return _Z


_Z = field_new([0], (-1, 1))
