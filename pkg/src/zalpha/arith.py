"""Ring arithmetic in Z[alpha], exact inverses and norms."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import gcd

from . import poly
from .errors import DivisionByZero, FieldMismatch, InexactDivision, ZeroDivisor
from .field import AlgebraicInt, FieldDescriptor, InverseRep


def _same_field(a: AlgebraicInt, b: AlgebraicInt) -> FieldDescriptor:
    if a.field is not b.field and a.field != b.field:
        raise FieldMismatch("operands belong to different fields")
    return a.field


def add(a: AlgebraicInt, b: AlgebraicInt) -> AlgebraicInt:
    F = _same_field(a, b)
    return AlgebraicInt(F, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def sub(a: AlgebraicInt, b: AlgebraicInt) -> AlgebraicInt:
    F = _same_field(a, b)
    return AlgebraicInt(F, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def neg(a: AlgebraicInt) -> AlgebraicInt:
    return AlgebraicInt(a.field, tuple(-x for x in a.coeffs))


def scalar_mul(s: int, a: AlgebraicInt) -> AlgebraicInt:
    return AlgebraicInt(a.field, tuple(s * x for x in a.coeffs))


def reduce_mod_f(F: FieldDescriptor, d: list[int]) -> tuple[int, ...]:
    """Reduce a polynomial of degree <= 2m-2 modulo f using the alpha-power table."""
    m = F.degree
    c = list(d[:m]) + [0] * (m - len(d[:m]))
    for k, top in enumerate(d[m:]):
        if top:
            row = F.reduction_table[k]
            for l in range(m):
                c[l] += top * row[l]
    return tuple(c)


def mul(a: AlgebraicInt, b: AlgebraicInt) -> AlgebraicInt:
    """Schoolbook product followed by reduction modulo f."""
    F = _same_field(a, b)
    m = F.degree
    if m == 1:
        return AlgebraicInt(F, (a.coeffs[0] * b.coeffs[0],))
    d = [0] * (2 * m - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                d[i + j] += x * y
    return AlgebraicInt(F, reduce_mod_f(F, d))


def dot(u, v) -> AlgebraicInt:
    """Inner product of two equal-length vectors over Z[alpha]."""
    acc = None
    for x, y in zip(u, v):
        t = mul(x, y)
        acc = t if acc is None else add(acc, t)
    return acc


@dataclass
class SubresultantTrace:
    degree_sequence: list[int] = dc_field(default_factory=list)
    coefficient_bit_peaks: list[int] = dc_field(default_factory=list)


def _bits(p) -> int:
    return max((abs(c).bit_length() for c in p), default=0)


def _exact_int_div(p: list[int], b: int) -> list[int]:
    out = []
    for c in p:
        q, r = divmod(c, b)
        if r:
            raise InexactDivision(f"{c} is not divisible by {b}")
        out.append(q)
    return out


def subresultant_inverse(F: FieldDescriptor, g: list[int]) -> tuple[list[int], int, SubresultantTrace]:
    """Extended subresultant PRS of (f, g).

    Returns (t, N, trace) with t(x) g(x) = N (mod f) and N a nonzero integer.
    Degree drops larger than one are handled by the usual psi/beta
    recurrences, so abnormal sequences need no special casing.
    """
    g = poly.trim(g)
    if not g:
        raise DivisionByZero("inverse of zero")
    r_prev, r_cur = F.f_full, g
    t_prev, t_cur = [], [1]
    trace = SubresultantTrace([poly.degree(r_prev), poly.degree(r_cur)], [_bits(r_prev), _bits(r_cur)])

    delta = poly.degree(r_prev) - poly.degree(r_cur)
    beta = (-1) ** (delta + 1)
    psi = -1
    while poly.degree(r_cur) > 0:
        gamma = r_cur[-1]
        quo, rem = poly.pseudo_divmod(r_prev, r_cur)
        if not rem:
            raise ZeroDivisor("element shares a factor with the defining polynomial")
        r_next = _exact_int_div(rem, beta)
        scaled = poly.scale(t_prev, gamma ** (delta + 1))
        t_next = _exact_int_div(poly.sub(scaled, poly.mul(quo, t_cur)), beta)

        trace.degree_sequence.append(poly.degree(r_next))
        trace.coefficient_bit_peaks.append(max(_bits(r_next), _bits(t_next)))

        # advance psi/beta for the next step
        d_next = poly.degree(r_cur) - poly.degree(r_next)
        if delta == 1:
            psi = -gamma
        else:
            num = (-gamma) ** delta
            den = psi ** (delta - 1)
            psi, rr = divmod(num, den)
            if rr:
                raise InexactDivision("subresultant psi update is not exact")
        beta = -gamma * psi**d_next
        delta = d_next
        r_prev, r_cur = r_cur, r_next
        t_prev, t_cur = t_cur, t_next

    return t_cur, r_cur[0], trace


def _normalize(F: FieldDescriptor, t: list[int], N: int) -> InverseRep:
    g = gcd(poly.content(t), N)
    if N < 0:
        g = -g
    num = [c // g for c in t]
    if len(num) > F.degree:
        raise AssertionError("cofactor degree exceeds m - 1")
    return InverseRep(F.element(num), N // g)


def inverse_with_trace(b: AlgebraicInt) -> tuple[InverseRep, SubresultantTrace]:
    F = b.field
    if not b:
        raise DivisionByZero("inverse of zero")
    t, N, trace = subresultant_inverse(F, list(b.coeffs))
    return _normalize(F, t, N), trace


@lru_cache(maxsize=8192)
def inverse(b: AlgebraicInt) -> InverseRep:
    """Exact 1/b = num/den, reduced so that gcd(content(num), den) = 1 and den > 0."""
    return inverse_with_trace(b)[0]


def exact_div(a: AlgebraicInt, b: AlgebraicInt) -> AlgebraicInt:
    """Quotient a / b for b dividing a in Z[alpha]; InexactDivision otherwise."""
    F = _same_field(a, b)
    if not b:
        raise DivisionByZero("division by zero")
    if b.is_integer():
        return AlgebraicInt(F, tuple(_exact_int_div(list(a.coeffs), b.coeffs[0])))
    inv = inverse(b)
    q = mul(a, inv.num)
    return AlgebraicInt(F, tuple(_exact_int_div(list(q.coeffs), inv.den)))


class _ZxPoly:
    """Minimal Z[x] element for the fraction-free Sylvester determinant."""

    __slots__ = ("c",)

    def __init__(self, c):
        self.c = poly.trim(c)

    def __bool__(self):
        return bool(self.c)

    def __add__(self, o):
        return _ZxPoly(poly.add(self.c, o.c))

    def __sub__(self, o):
        return _ZxPoly(poly.sub(self.c, o.c))

    def __neg__(self):
        return _ZxPoly([-x for x in self.c])

    def __mul__(self, o):
        return _ZxPoly(poly.mul(self.c, o.c))


def _zx_exact_div(a: _ZxPoly, b: _ZxPoly) -> _ZxPoly:
    try:
        return _ZxPoly(poly.exact_quo(a.c, b.c))
    except ArithmeticError as e:
        raise InexactDivision(str(e)) from None


def sylvester_rows(F: FieldDescriptor, b: AlgebraicInt) -> list[list[_ZxPoly]]:
    """Sylvester matrix of f(y) and x - g(y) (formal degree m-1 in y) over Z[x]."""
    m = F.degree
    size = 2 * m - 1
    f_desc = list(reversed(F.f_full))  # y^m .. y^0
    p_desc = [_ZxPoly([-c]) for c in reversed(b.coeffs[1:])] + [_ZxPoly([-b.coeffs[0], 1])]
    rows = []
    for i in range(m - 1):
        row = [_ZxPoly([])] * size
        for j, c in enumerate(f_desc):
            row[i + j] = _ZxPoly([c])
        rows.append(row)
    for i in range(m):
        row = [_ZxPoly([])] * size
        for j, c in enumerate(p_desc):
            row[i + j] = c
        rows.append(row)
    return rows


def char_poly(b: AlgebraicInt) -> list[int]:
    """Characteristic polynomial h(x) = res_y(f(y), x - g(y)) as h_0..h_{m-1}.

    h is monic of degree m, so only the non-leading coefficients are returned.
    """
    from .bareiss import fraction_free_det

    F = b.field
    h = fraction_free_det(sylvester_rows(F, b), _zx_exact_div).c
    h = h + [0] * (F.degree + 1 - len(h))
    if h[-1] != 1:
        raise AssertionError(f"characteristic polynomial is not monic: {h}")
    return h[:-1]


def norm(b: AlgebraicInt) -> int:
    """N(b), the product of the conjugates of b.

    Equal to (-1)^m h_0 for the characteristic polynomial h; b * inverse(b).num
    equals inverse(b).den, and inverse(b).den divides N(b).
    """
    if not b:
        return 0
    m = b.field.degree
    return (-1) ** m * char_poly(b)[0]
