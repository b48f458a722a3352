"""Independent second opinions for the exact kernel.

Nothing here is used by the main code paths.  The interval evaluator has its
own bisection of alpha in plain ``Fraction`` arithmetic; the inverse comes
from the characteristic polynomial instead of the subresultant PRS; the
determinant is a cofactor expansion; the textbook LLL works with rational
Gram-Schmidt data.
"""

from __future__ import annotations

import csv
import io
import itertools
import random
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import floor, ceil
from typing import Sequence

from . import arith, poly
from .bareiss import MatrixZA, determinant
from .errors import DivisionByZero, NotSquare, ZeroDivisor
from .field import AlgebraicInt, FieldDescriptor, InverseRep, opc
from .order import cmp


@dataclass(frozen=True)
class RealInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("lo > hi")

    def __contains__(self, x) -> bool:
        if isinstance(x, RealInterval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def sign(self) -> int | None:
        """Sign of every point in the interval, or None when it straddles 0."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def abs_hi(self) -> Fraction:
        return max(abs(self.lo), abs(self.hi))

    def abs_lo(self) -> Fraction:
        if self.lo <= 0 <= self.hi:
            return Fraction(0)
        return min(abs(self.lo), abs(self.hi))

    def __float__(self) -> float:
        return float((self.lo + self.hi) / 2)


_alpha_lock = threading.Lock()
_alpha_boxes: dict[FieldDescriptor, tuple[Fraction, Fraction]] = {}


def _alpha_box(F: FieldDescriptor, width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect the isolating interval with Fraction evaluations of f until narrower than ``width``."""
    if F.alpha_exact is not None:
        return F.alpha_exact, F.alpha_exact
    f = F.f_full
    lo, hi = _alpha_boxes.get(F, F.interval)
    s_lo = poly.eval_q(f, lo)
    if s_lo == 0:
        return lo, lo
    while hi - lo > width:
        mid = (lo + hi) / 2
        v = poly.eval_q(f, mid)
        if v == 0:
            lo = hi = mid
            break
        if (v > 0) == (s_lo > 0):
            lo = mid
        else:
            hi = mid
    with _alpha_lock:
        cur = _alpha_boxes.get(F)
        if cur is None or cur[1] - cur[0] > hi - lo:
            _alpha_boxes[F] = (lo, hi)
    return lo, hi


def _imul(a: tuple, b: tuple) -> tuple:
    p = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(p), max(p)


def interval_eval(a: AlgebraicInt, precision_bits: int = 256) -> RealInterval:
    """Certified enclosure of the real value of ``a``.

    Powers of alpha's enclosure are summed directly (no Horner), and the
    result is rounded outward to the grid 2**-(precision_bits + 2), so a
    higher-precision result always nests inside a lower-precision one.
    """
    F = a.field
    m = F.degree
    guard = opc(a).bit_length() + m * ((1 + F.f_inf_norm).bit_length() + 1) + 4
    lo, hi = _alpha_box(F, Fraction(1, 2 ** (precision_bits + guard)))
    x = (lo, hi)
    acc = (Fraction(0), Fraction(0))
    power = (Fraction(1), Fraction(1))
    for i, c in enumerate(a.coeffs):
        if i:
            power = _imul(power, x)
        if c:
            term = (c * power[0], c * power[1]) if c > 0 else (c * power[1], c * power[0])
            acc = (acc[0] + term[0], acc[1] + term[1])
    g = 2 ** (precision_bits + 2)
    return RealInterval(Fraction(floor(acc[0] * g), g), Fraction(ceil(acc[1] * g), g))


def oracle_sign(a: AlgebraicInt, precision_bits: int = 256) -> int | None:
    """Sign from the interval oracle, or None if it cannot decide at this precision."""
    if not a:
        return 0
    s = interval_eval(a, precision_bits).sign()
    return None if s == 0 else s


def naive_inverse(b: AlgebraicInt) -> InverseRep:
    """1/b from the characteristic polynomial h of b, unnormalized: den = h_0."""
    if not b:
        raise DivisionByZero("inverse of zero")
    F = b.field
    h = arith.char_poly(b)
    m = F.degree
    if h[0] == 0:
        raise ZeroDivisor("characteristic polynomial has zero constant term")
    full = h + [1]
    acc = F.one
    for k in range(m - 1):
        acc = acc * b + full[m - k - 1]
    return InverseRep(-acc, h[0])


def same_inverse(x: InverseRep, y: InverseRep) -> bool:
    """x.num / x.den == y.num / y.den, compared cross-multiplied."""
    return x.num * y.den == y.num * x.den


def brute_det(M: MatrixZA) -> AlgebraicInt:
    """Cofactor expansion along the first row."""
    n = M.n_rows
    if n != M.n_cols:
        raise NotSquare(f"expected a square matrix, got {n} x {M.n_cols}")
    if n > 6:
        raise ValueError("brute_det is limited to n <= 6")

    def rec(rows):
        if len(rows) == 1:
            return rows[0][0]
        acc = None
        for j, x in enumerate(rows[0]):
            if not x:
                continue
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            t = x * rec(minor)
            if j % 2:
                t = -t
            acc = t if acc is None else acc + t
        return acc if acc is not None else rows[0][0] - rows[0][0]

    if n == 0:
        return M.field.one
    return rec([list(r) for r in M.rows])


@dataclass
class ShortestVector:
    vector: list[AlgebraicInt]
    coefficients: tuple[int, ...]
    norm2: AlgebraicInt
    interval: RealInterval
    certified: bool


def shortest_vector_enum(basis: MatrixZA, coeff_bound: int) -> ShortestVector:
    """Exhaustive search over integer combinations with |c_i| <= coeff_bound.

    Squared norms are compared exactly.  ``certified`` is True when the box
    provably contains a shortest lattice vector, i.e. when for every i
    coeff_bound^2 * det(G) >= L * cof_ii(G) for the Gram matrix G and the
    found squared norm L; then ``norm2`` is the exact L_0.
    """
    n = basis.n_rows
    if n > 3 or coeff_bound > 5:
        raise ValueError("enumeration limited to n <= 3 and coeff_bound <= 5")
    rows = [list(r) for r in basis.rows]
    best = None
    rng = range(-coeff_bound, coeff_bound + 1)
    for cs in itertools.product(rng, repeat=n):
        if not any(cs):
            continue
        # skip the negated half
        if next(c for c in cs if c) < 0:
            continue
        v = [sum((c * r[i] for c, r in zip(cs, rows) if c), basis.field.zero) for i in range(basis.n_cols)]
        L = arith.dot(v, v)
        if best is None or cmp(L, best[2]) < 0:
            best = (v, cs, L)
    v, cs, L = best
    return ShortestVector(v, cs, L, interval_eval(L, 64), _box_certified(basis, coeff_bound, L))


def _box_certified(basis: MatrixZA, R: int, L: AlgebraicInt) -> bool:
    from .lll import gram_matrix

    G = gram_matrix(basis)
    n = G.n_rows
    detG = determinant(G)
    for i in range(n):
        if n == 1:
            cof = G.field.one
        else:
            minor = tuple(
                tuple(x for j, x in enumerate(r) if j != i) for k, r in enumerate(G.rows) if k != i
            )
            cof = determinant(MatrixZA(G.field, minor))
        if cmp(R * R * detG, L * cof) < 0:
            return False
    return True


def minkowski_holds(d: Sequence[AlgebraicInt], L0: AlgebraicInt) -> bool:
    """d_j >= (L_0 / j)^j for every j, i.e. j^j d_j >= L_0^j, compared exactly."""
    power = L0.field.one
    for j, dj in enumerate(d, start=1):
        power = power * L0
        if cmp(j**j * dj, power) < 0:
            return False
    return True


def textbook_lll(rows: Sequence[Sequence[int]], delta=Fraction(3, 4)) -> list[list[int]]:
    """Classical LLL over Z with rational Gram-Schmidt data; halves round up."""
    b = [list(map(int, r)) for r in rows]
    n = len(b)
    delta = Fraction(delta)

    def ip(u, v):
        return sum(x * y for x, y in zip(u, v))

    def gso():
        bstar, mu, B = [], [[Fraction(0)] * n for _ in range(n)], []
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = Fraction(ip(b[i], bstar[j])) / B[j]
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            bstar.append(v)
            B.append(ip(v, v))
        return mu, B

    k = 1
    while k < n:
        mu, _ = gso()
        c = floor(mu[k][k - 1] + Fraction(1, 2))
        if c:
            b[k] = [x - c * y for x, y in zip(b[k], b[k - 1])]
        mu, B = gso()
        if B[k] + mu[k][k - 1] ** 2 * B[k - 1] < delta * B[k - 1]:
            b[k], b[k - 1] = b[k - 1], b[k]
            k = max(k - 1, 1)
        else:
            for j in range(k - 2, -1, -1):
                mu, _ = gso()
                c = floor(mu[k][j] + Fraction(1, 2))
                if c:
                    b[k] = [x - c * y for x, y in zip(b[k], b[j])]
            k += 1
    return b


def random_element(F: FieldDescriptor, rng: random.Random, bits: int, *, nonzero: bool = False) -> AlgebraicInt:
    """Coefficients uniform in [-2^bits, 2^bits], each width drawn at random so small values occur."""
    while True:
        coeffs = []
        for _ in range(F.degree):
            w = rng.randint(0, bits)
            coeffs.append(rng.randint(-(2**w), 2**w))
        a = F.element(coeffs)
        if a or not nonzero:
            return a


@dataclass
class CheckRecord:
    check: str
    samples: int = 0
    failures: int = 0
    worst_ratio: float = 0.0

    def observe(self, ok: bool, ratio: Fraction | float | None = None):
        self.samples += 1
        if not ok:
            self.failures += 1
        if ratio is not None:
            self.worst_ratio = max(self.worst_ratio, float(ratio))


def check_growth_bounds(
    F: FieldDescriptor,
    samples: int,
    rng: random.Random | None = None,
    bits: int = 64,
    *,
    magnitudes: bool = True,
    inverse_bounds: bool = True,
) -> list[CheckRecord]:
    """Draw random pairs and test the coefficient growth inequalities with the stored constants."""
    rng = rng or random.Random(0)
    m = F.degree
    recs = {name: CheckRecord(name) for name in (
        "add", "sub", "scalar_mul", "mul", "inverse", "norm", "magnitude_upper", "magnitude_lower")}
    for _ in range(samples):
        a = random_element(F, rng, bits)
        b = random_element(F, rng, bits, nonzero=True)
        s = rng.randint(-(2**bits), 2**bits)
        oa, ob = opc(a), opc(b)
        for name, r in (("add", a + b), ("sub", a - b)):
            bound = oa + ob
            recs[name].observe(opc(r) <= bound, Fraction(opc(r), bound) if bound else 0)
        sa = opc(s * a)
        recs["scalar_mul"].observe(sa == abs(s) * oa, Fraction(sa, abs(s) * oa) if s and oa else None)
        bound = F.const_M * oa * ob
        pm = opc(a * b)
        recs["mul"].observe(pm <= bound, Fraction(pm, bound) if bound else None)
        if inverse_bounds:
            inv = arith.inverse(b)
            bound = F.const_P * ob ** (m - 1)
            recs["inverse"].observe(opc(inv.num) <= bound, Fraction(opc(inv.num), bound))
            N = arith.norm(b)
            bound = F.const_Q * ob**m
            recs["norm"].observe(abs(N) <= bound and N != 0, Fraction(abs(N), bound))
        if magnitudes and a:
            iv = interval_eval(a, 64 + 2 * m * bits)
            up = F.const_S * oa
            recs["magnitude_upper"].observe(iv.abs_hi() <= up, iv.abs_hi() / up)
            low = Fraction(1, F.const_P * F.const_S * oa ** (m - 1))
            lo_abs = iv.abs_lo()
            recs["magnitude_lower"].observe(lo_abs >= low, low / lo_abs if lo_abs else None)
    return [r for r in recs.values() if r.samples]


def report_csv(records: Sequence[CheckRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["check", "samples", "failures", "worst_ratio"])
    for r in records:
        w.writerow([r.check, r.samples, r.failures, f"{r.worst_ratio:.6g}"])
    return buf.getvalue()
