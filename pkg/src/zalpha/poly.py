"""Dense univariate polynomials over Z (and Q) as coefficient lists, lowest degree first.

Only what the field kernel needs: pseudo-division, evaluation at rationals,
Sturm sequences and root counting.  The zero polynomial is the empty list.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Poly = list  # list[int] or list[Fraction], lowest degree first


def trim(p: Sequence) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence) -> int:
    """Degree of a trimmed polynomial; -1 for zero."""
    return len(p) - 1


def add(p: Sequence, q: Sequence) -> list:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def sub(p: Sequence, q: Sequence) -> list:
    out = list(p) + [0] * max(0, len(q) - len(p))
    for i, c in enumerate(q):
        out[i] -= c
    return trim(out)


def scale(p: Sequence, s) -> list:
    if s == 0:
        return []
    return [s * c for c in p]


def mul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def derivative(p: Sequence) -> list:
    return trim([i * c for i, c in enumerate(p)][1:])


def content(p: Sequence[int]) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def pseudo_divmod(p: Sequence[int], q: Sequence[int]) -> tuple[list, list]:
    """Return (Q, R) with lc(q)**(deg p - deg q + 1) * p = Q*q + R over Z.

    Requires q nonzero and deg p >= deg q.
    """
    p = trim(p)
    q = trim(q)
    dq = degree(q)
    delta = degree(p) - dq
    if dq < 0:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    if delta < 0:
        raise ValueError("deg p < deg q")
    lc = q[-1]
    rem = list(p)
    quo = [0] * (delta + 1)
    for e in range(delta, -1, -1):
        # invariant: lc**(delta - e) * p = quo*q + rem, deg rem <= dq + e
        top = rem[dq + e] if len(rem) > dq + e else 0
        rem = [lc * c for c in rem]
        quo = [lc * c for c in quo]
        if top:
            quo[e] += top
            for i, c in enumerate(q):
                rem[i + e] -= top * c
        rem = trim(rem)
    return trim(quo), rem


def divmod_q(p: Sequence, q: Sequence) -> tuple[list, list]:
    """Euclidean division over Q (Fraction coefficients)."""
    p = [Fraction(c) for c in trim(p)]
    q = [Fraction(c) for c in trim(q)]
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    dq = degree(q)
    quo = [Fraction(0)] * max(0, degree(p) - dq + 1)
    rem = p
    while degree(rem) >= dq:
        shift = degree(rem) - dq
        c = rem[-1] / q[-1]
        quo[shift] = c
        for i, qc in enumerate(q):
            rem[i + shift] -= c * qc
        rem = trim(rem)
    return trim(quo), rem


def exact_quo(p: Sequence[int], q: Sequence[int]) -> list:
    """Exact quotient p / q in Z[x]; raises ArithmeticError on a remainder."""
    rem = trim(p)
    q = trim(q)
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    dq = degree(q)
    lc = q[-1]
    quo = [0] * max(0, degree(rem) - dq + 1)
    while rem:
        shift = degree(rem) - dq
        c, r = divmod(rem[-1], lc)
        if shift < 0 or r:
            raise ArithmeticError("polynomial division is not exact")
        quo[shift] = c
        for i, qc in enumerate(q):
            rem[i + shift] -= c * qc
        rem = trim(rem)
    return trim(quo)


def eval_sign_at(p: Sequence[int], t: Fraction) -> int:
    """Sign of p(t) for an integer polynomial and rational t, in integer arithmetic."""
    num, den = t.numerator, t.denominator
    acc = 0
    dpow = 1
    for c in reversed(p):
        acc = acc * num + c * dpow
        dpow *= den
    # acc = den**deg * p(t) and den > 0
    return (acc > 0) - (acc < 0)


def eval_q(p: Sequence, t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * t + c
    return acc


def sturm_sequence(p: Sequence[int]) -> list[list[Fraction]]:
    seq = [[Fraction(c) for c in trim(p)], [Fraction(c) for c in derivative(p)]]
    while seq[-1] and degree(seq[-1]) > 0:
        _, r = divmod_q(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return [s for s in seq if s]


def _variations(seq: Sequence[Sequence[Fraction]], t: Fraction) -> int:
    signs = []
    for s in seq:
        v = eval_q(s, t)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_closed(p: Sequence[int], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in [lo, hi] (Sturm)."""
    seq = sturm_sequence(p)
    n = _variations(seq, lo) - _variations(seq, hi)
    if eval_q(seq[0], lo) == 0:
        n += 1
    return n


def gcd_degree(p: Sequence[int], q: Sequence[int]) -> int:
    a = [Fraction(c) for c in trim(p)]
    b = [Fraction(c) for c in trim(q)]
    while b:
        _, r = divmod_q(a, b)
        a, b = b, r
    return degree(a)
