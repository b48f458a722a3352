"""Randomized verification suites shared by ``zalpha check`` and the test-suite.

Each suite returns a list of :class:`~zalpha.oracles.CheckRecord`; a suite
passes when every record has zero failures.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import floor

from . import arith, order
from .bareiss import MatrixZA, determinant, size_bound, triangularize
from .errors import DependentBasis, InexactDivision
from .field import AlgebraicInt, FieldDescriptor, integer_field
from .lll import lll_init, lll_reduce, verify_reduced
from .oracles import (
    CheckRecord,
    brute_det,
    check_growth_bounds,
    naive_inverse,
    oracle_sign,
    random_element,
    same_inverse,
)

SUITES = ("growth", "order", "inverse", "bareiss", "lll")


def decided_oracle_sign(a: AlgebraicInt, start_bits: int = 256) -> int:
    """Oracle sign, raising the precision until the enclosure excludes zero."""
    bits = start_bits
    while True:
        s = oracle_sign(a, bits)
        if s is not None:
            return s
        bits *= 2
        if bits > 1 << 16:
            raise AssertionError(f"oracle cannot decide the sign of {a}")


def alpha_convergents(F: FieldDescriptor, max_den: int) -> list[tuple[int, int]]:
    """Continued-fraction convergents p/q of alpha with q <= max_den."""
    bits = 2 * max_den.bit_length() + 16
    lo, hi = order.alpha_bounds(F, bits)
    out = []
    h0, h1, k0, k1 = 0, 1, 1, 0
    while True:
        a_lo, a_hi = floor(lo), floor(hi)
        if a_lo != a_hi:
            break
        h0, h1 = h1, a_lo * h1 + h0
        k0, k1 = k1, a_lo * k1 + k0
        if k1 > max_den:
            break
        out.append((h1, k1))
        if lo == a_lo or hi == a_hi:
            break
        lo, hi = 1 / (hi - a_hi), 1 / (lo - a_lo)
    return out


def adversarial_elements(F: FieldDescriptor, scale: int = 10**40) -> list[AlgebraicInt]:
    """p - q*alpha for the convergents of alpha: tiny nonzero reals with huge coefficients."""
    if F.degree < 2:
        return []
    out = []
    for p, q in alpha_convergents(F, scale):
        e = F.element([p, -q])
        out += [e, -e, 3 * e + 1, e - 1]
    return out


def _sign_checks(a: AlgebraicInt, recs: dict, start_bits: int = 256) -> None:
    s = order.sign(a)
    o = oracle_sign(a, start_bits)
    if o is None:
        recs["sign_undecided_at_256"].observe(True)
        o = decided_oracle_sign(a, start_bits * 2)
    recs["sign_vs_oracle"].observe(s == o)


def _floor_checks(a: AlgebraicInt, s: int, recs: dict) -> None:
    q = order.floor_div_int(a, s)
    c = order.ceil_div_int(a, s)
    r = order.round_div_int(a, s)
    a_, s_ = (a, s) if s > 0 else (-a, -s)
    ok = order.sign(a_ - s_ * q) >= 0 and order.sign(a_ - s_ * (q + 1)) < 0
    recs["floor_contract"].observe(ok)
    exact = a.is_integer() and a.coeffs[0] % s == 0
    recs["ceil_coherence"].observe(c == (q if exact else q + 1))
    # round half up: (2r - 1) s <= 2a < (2r + 1) s for s > 0
    ok = r in (q, c) and order.sign(2 * a_ - (2 * r - 1) * s_) >= 0 and order.sign(2 * a_ - (2 * r + 1) * s_) < 0
    recs["round_contract"].observe(ok)


def _floor_div_checks(a: AlgebraicInt, b: AlgebraicInt, recs: dict) -> None:
    q = order.floor_div(a, b)
    sb = order.sign(b)
    lo, hi = order.sign(a - q * b), order.sign(a - (q + 1) * b)
    ok = (lo >= 0 and hi < 0) if sb > 0 else (lo <= 0 and hi > 0)
    recs["floor_div_contract"].observe(ok)


def order_suite(F: FieldDescriptor, samples: int, rng: random.Random, bits: int = 64) -> list[CheckRecord]:
    names = ("sign_vs_oracle", "sign_undecided_at_256", "floor_contract", "ceil_coherence",
             "round_contract", "floor_div_contract", "adversarial_sign")
    recs = {n: CheckRecord(n) for n in names}
    for _ in range(samples):
        a = random_element(F, rng, bits)
        _sign_checks(a, recs)
        s = rng.choice([1, -1]) * rng.randint(1, 2 ** rng.randint(1, bits))
        _floor_checks(a, s, recs)
    for _ in range(max(1, samples // 10)):
        a = random_element(F, rng, bits // 2)
        b = random_element(F, rng, bits // 4, nonzero=True)
        _floor_div_checks(a, b, recs)
    for e in adversarial_elements(F):
        s = order.sign(e)
        recs["adversarial_sign"].observe(s == decided_oracle_sign(e))
        _floor_checks(e, 7, recs)
    return [r for r in recs.values() if r.samples]


def fallback_suite(F: FieldDescriptor, samples: int, rng: random.Random, bits: int = 16) -> list[CheckRecord]:
    """Progressive refinement and the direct a-priori threshold must agree exactly."""
    P, T = order.PROGRESSIVE, order.THRESHOLD
    recs = {n: CheckRecord(n) for n in ("sign", "cmp", "floor_int", "ceil_int", "round_int", "floor_div", "round_div")}
    for _ in range(samples):
        a = random_element(F, rng, bits)
        b = random_element(F, rng, bits, nonzero=True)
        s = rng.choice([1, -1]) * rng.randint(1, 2**bits)
        recs["sign"].observe(order.sign(a, method=P) == order.sign(a, method=T))
        recs["cmp"].observe(order.cmp(a, b, method=P) == order.cmp(a, b, method=T))
        for name, fn in (("floor_int", order.floor_div_int), ("ceil_int", order.ceil_div_int),
                         ("round_int", order.round_div_int)):
            recs[name].observe(fn(a, s, method=P) == fn(a, s, method=T))
        for name, fn in (("floor_div", order.floor_div), ("round_div", order.round_div)):
            recs[name].observe(fn(a, b, method=P) == fn(a, b, method=T))
    return list(recs.values())


def inverse_suite(F: FieldDescriptor, samples: int, rng: random.Random, bits: int = 64) -> list[CheckRecord]:
    recs = {n: CheckRecord(n) for n in ("b_times_inverse", "matches_char_poly_inverse", "norm_consistent")}
    for _ in range(samples):
        b = random_element(F, rng, bits, nonzero=True)
        inv = arith.inverse(b)
        recs["b_times_inverse"].observe(b * inv.num == F.from_int(inv.den) and inv.den > 0)
        naive = naive_inverse(b)
        recs["matches_char_poly_inverse"].observe(
            same_inverse(inv, naive) and b * naive.num == F.from_int(naive.den))
        N = arith.norm(b)
        recs["norm_consistent"].observe(N != 0 and N % inv.den == 0 and N == (-1) ** F.degree * naive.den)
    return list(recs.values())


def random_matrix(F: FieldDescriptor, n: int, rng: random.Random, bits: int, zero_prob: float = 0.25) -> MatrixZA:
    rows = []
    for _ in range(n):
        rows.append(tuple(F.zero if rng.random() < zero_prob else random_element(F, rng, bits) for _ in range(n)))
    if n >= 2 and rng.random() < 0.1:
        rows[-1] = rows[0]
    return MatrixZA(F, tuple(rows))


def bareiss_suite(F: FieldDescriptor, samples: int, rng: random.Random, bits: int = 8) -> list[CheckRecord]:
    recs = {n: CheckRecord(n) for n in ("det_vs_cofactor", "exact_divisions", "size_bound", "multiplicative")}
    for i in range(samples):
        n = 1 + i % 5
        M = random_matrix(F, n, rng, bits)
        try:
            upper, trace = triangularize(M)
        except InexactDivision:
            recs["exact_divisions"].observe(False)
            continue
        recs["exact_divisions"].observe(True)
        recs["det_vs_cofactor"].observe(determinant(M) == brute_det(M))
        bound = size_bound(M)
        recs["size_bound"].observe(trace.max_opc <= bound, Fraction(trace.max_opc, bound) if bound else None)
        if i % 10 == 0:
            A = random_matrix(F, 3, rng, bits)
            B = random_matrix(F, 3, rng, bits)
            recs["multiplicative"].observe(determinant(A @ B) == determinant(A) * determinant(B))
    return [r for r in recs.values() if r.samples]


def random_basis(F: FieldDescriptor, n: int, rng: random.Random, bits: int = 16) -> MatrixZA:
    while True:
        M = MatrixZA(F, tuple(tuple(random_element(F, rng, bits) for _ in range(n)) for _ in range(n)))
        try:
            lll_init(M)
        except DependentBasis:
            continue
        return M


def apply_transform(U: list[list[int]], M: MatrixZA) -> MatrixZA:
    F = M.field
    out = []
    for row in U:
        acc = [F.zero] * M.n_cols
        for c, r in zip(row, M.rows):
            if c:
                acc = [x + c * y for x, y in zip(acc, r)]
        out.append(tuple(acc))
    return MatrixZA(F, tuple(out))


def check_lll_run(M: MatrixZA, delta, recs: dict, *, check_potential: str = "ratio") -> None:
    n = M.n_rows
    R, U, st = lll_reduce(M, delta, check_potential=check_potential, record=False)
    recs["verify_reduced"].observe(verify_reduced(R, delta))
    Z = integer_field()
    detU = determinant(MatrixZA.from_ints(Z, U)).coeffs[0]
    recs["unimodular"].observe(abs(detU) == 1)
    recs["U_times_input"].observe(apply_transform(U, M) == R)
    recs["gram_det_conserved"].observe(lll_init(R).d[n] == lll_init(M).d[n])
    recs["iteration_count"].observe(st.iterations == 2 * st.swaps + n - 1)
    recs["potential_decrease"].samples += st.potential_checks
    recs["potential_decrease"].failures += st.potential_violations


LLL_CHECKS = ("verify_reduced", "unimodular", "U_times_input", "gram_det_conserved",
              "iteration_count", "potential_decrease")


def lll_suite(
    F: FieldDescriptor,
    samples: int,
    rng: random.Random,
    bits: int = 16,
    deltas=(Fraction(3, 4), Fraction(9, 10)),
    max_n: int = 5,
) -> list[CheckRecord]:
    recs = {n: CheckRecord(n) for n in LLL_CHECKS}
    for i in range(samples):
        n = 2 + i % (max_n - 1)
        M = random_basis(F, n, rng, bits)
        for delta in deltas:
            check_lll_run(M, delta, recs)
    return list(recs.values())


def run_suite(name: str, F: FieldDescriptor, samples: int, seed: int = 0) -> list[CheckRecord]:
    rng = random.Random(seed)
    if name == "growth":
        return check_growth_bounds(F, samples, rng)
    if name == "order":
        return order_suite(F, samples, rng)
    if name == "inverse":
        return inverse_suite(F, samples, rng)
    if name == "bareiss":
        return bareiss_suite(F, samples, rng)
    if name == "lll":
        return lll_suite(F, samples, rng)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
