"""Integral LLL reduction over Z[alpha].

The state keeps lambda_ij and d_j (both in Z[alpha]) instead of the
Gram-Schmidt quantities mu_ij = lambda_ij / d_j and |b_j*|^2 = d_j / d_{j-1}.
Indices in the public functions are 1-based to match the usual statement of
the algorithm; the lists themselves are 0-based.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

from .arith import dot, exact_div
from .bareiss import MatrixZA, determinant
from .errors import DependentBasis, FieldMismatch
from .field import AlgebraicInt, FieldDescriptor, opc
from .order import PROGRESSIVE, approx_log2, cmp, round_div, sign

DEFAULT_DELTA = Fraction(3, 4)


@dataclass
class StatRow:
    iteration: int
    kind: str
    k: int
    log2_D: float
    max_opc_bits: int


@dataclass
class LLLStats:
    iterations: int = 0
    swaps: int = 0
    reductions: int = 0
    size_reductions: int = 0
    swap_log2_D: list[float] = dc_field(default_factory=list)
    max_opc_bits: int = 0
    potential_checks: int = 0
    potential_violations: int = 0
    wall_time: float = 0.0
    rows: list[StatRow] = dc_field(default_factory=list)


@dataclass
class LLLState:
    field: FieldDescriptor
    basis: list[list[AlgebraicInt]]
    lam: list[list[AlgebraicInt]]  # lam[i][j] = lambda_{i+1, j+1}, j < i
    d: list[AlgebraicInt]  # d[0] = 1, d[j] = d_j
    U: list[list[int]]
    k: int = 2
    stats: LLLStats = dc_field(default_factory=LLLStats)

    @property
    def n(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> MatrixZA:
        return MatrixZA(self.field, tuple(tuple(r) for r in self.basis))


def _as_rows(basis) -> tuple[FieldDescriptor, list[list[AlgebraicInt]]]:
    if isinstance(basis, MatrixZA):
        return basis.field, [list(r) for r in basis.rows]
    rows = [list(r) for r in basis]
    if not rows or not rows[0]:
        raise ValueError("empty basis")
    F = rows[0][0].field
    for r in rows:
        if len(r) != len(rows[0]):
            raise ValueError("basis vectors must have equal length")
        for x in r:
            if x.field is not F and x.field != F:
                raise FieldMismatch("basis entries from different fields")
    return F, rows


def gram_schmidt(F: FieldDescriptor, rows: Sequence[Sequence[AlgebraicInt]]):
    """Integral Gram-Schmidt: (lam, d) with every division exact in Z[alpha]."""
    n = len(rows)
    one = F.one
    d = [one] + [None] * n
    lam = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            u = dot(rows[i], rows[j])
            for l in range(j):
                u = exact_div(d[l + 1] * u - lam[i][l] * lam[j][l], d[l])
            if j < i:
                lam[i][j] = u
            else:
                if not u:
                    raise DependentBasis(f"vectors 1..{i + 1} are linearly dependent")
                if sign(u) != 1:
                    raise AssertionError(f"Gram determinant d_{i + 1} is not positive")
                d[i + 1] = u
    return [row[:i] for i, row in enumerate(lam)], d


def lll_init(basis) -> LLLState:
    F, rows = _as_rows(basis)
    lam, d = gram_schmidt(F, rows)
    n = len(rows)
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    return LLLState(F, rows, lam, d, U)


def _parse_delta(delta) -> Fraction:
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise ValueError(f"delta must lie in (1/4, 1), got {delta}")
    return delta


def lovasz_test(state: LLLState, k: int, delta=DEFAULT_DELTA, *, method: str = PROGRESSIVE) -> bool:
    """True when b_{k-1}, b_k must be swapped.

    Fraction-free form of the Lovasz condition:
    q (d_k d_{k-2} + lambda_{k,k-1}^2) < p d_{k-1}^2 with delta = p/q.
    """
    delta = _parse_delta(delta)
    p, q = delta.numerator, delta.denominator
    d = state.d
    lam = state.lam[k - 1][k - 2]
    lhs = q * (d[k] * d[k - 2] + lam * lam)
    rhs = p * (d[k - 1] * d[k - 1])
    return cmp(lhs, rhs, method=method) < 0


def size_reduce(state: LLLState, k: int, l: int, *, method: str = PROGRESSIVE) -> int:
    """b_k -= round(mu_kl) b_l, keeping lam consistent.  Returns the multiplier."""
    lam = state.lam
    c = round_div(lam[k - 1][l - 1], state.d[l], method=method)
    if c == 0:
        return 0
    bk, bl = state.basis[k - 1], state.basis[l - 1]
    state.basis[k - 1] = [x - c * y for x, y in zip(bk, bl)]
    Uk, Ul = state.U[k - 1], state.U[l - 1]
    state.U[k - 1] = [x - c * y for x, y in zip(Uk, Ul)]
    for j in range(l - 1):
        lam[k - 1][j] = lam[k - 1][j] - c * lam[l - 1][j]
    lam[k - 1][l - 1] = lam[k - 1][l - 1] - c * state.d[l]
    state.stats.size_reductions += 1
    return c


def swap_step(state: LLLState, k: int) -> None:
    """Exchange b_{k-1} and b_k and update lam, d; then k := k - 1."""
    n = state.n
    b, lam, d = state.basis, state.lam, state.d
    i0, i1 = k - 2, k - 1  # 0-based positions of b_{k-1}, b_k
    b[i0], b[i1] = b[i1], b[i0]
    state.U[i0], state.U[i1] = state.U[i1], state.U[i0]
    for j in range(k - 2):
        lam[i0][j], lam[i1][j] = lam[i1][j], lam[i0][j]
    mu = lam[i1][i0]  # lambda_{k,k-1}, unchanged by the swap
    dk2, dk1, dk = d[k - 2], d[k - 1], d[k]
    for i in range(k, n):
        li_k1, li_k = lam[i][i0], lam[i][i1]
        lam[i][i0] = exact_div(dk2 * li_k + mu * li_k1, dk1)
        lam[i][i1] = exact_div(dk * li_k1 - mu * li_k, dk1)
    d[k - 1] = exact_div(dk * dk2 + mu * mu, dk1)
    state.k = k - 1


def _max_opc_bits(state: LLLState) -> int:
    m = 0
    for r in state.basis:
        for x in r:
            m = max(m, opc(x))
    for r in state.lam:
        for x in r:
            m = max(m, opc(x))
    for x in state.d:
        m = max(m, opc(x))
    return m.bit_length()


def potential(state: LLLState) -> AlgebraicInt:
    """D = d_1 * ... * d_n, exactly."""
    D = state.field.one
    for x in state.d[1:]:
        D = D * x
    return D


def lll_reduce(
    basis,
    delta=DEFAULT_DELTA,
    *,
    method: str = PROGRESSIVE,
    record: bool = True,
    check_potential: str | None = "ratio",
):
    """LLL-reduce ``basis``; returns (reduced MatrixZA, U, LLLStats) with reduced = U * basis.

    ``check_potential`` certifies D_new < delta * D_old at every swap:
    ``"ratio"`` compares the single changed factor d_{k-1}, ``"full"`` the
    whole product D; ``None`` disables the check.
    """
    delta = _parse_delta(delta)
    p, q = delta.numerator, delta.denominator
    t0 = time.perf_counter()
    state = lll_init(basis)
    st = state.stats
    n = state.n
    log2_d = [0.0] + [approx_log2(x) for x in state.d[1:]] if record else None

    def log_row(kind, k):
        bits = _max_opc_bits(state)
        st.max_opc_bits = max(st.max_opc_bits, bits)
        if record:
            st.rows.append(StatRow(st.iterations, kind, k, sum(log2_d), bits))

    if record:
        st.max_opc_bits = _max_opc_bits(state)
    state.k = 2
    while state.k <= n:
        k = state.k
        st.iterations += 1
        if k >= 2:
            size_reduce(state, k, k - 1, method=method)
            if lovasz_test(state, k, delta, method=method):
                old_dk1 = state.d[k - 1]
                old_D = potential(state) if check_potential == "full" else None
                swap_step(state, k)
                st.swaps += 1
                if check_potential == "ratio":
                    st.potential_checks += 1
                    if cmp(q * state.d[k - 1], p * old_dk1, method=method) >= 0:
                        st.potential_violations += 1
                elif check_potential == "full":
                    st.potential_checks += 1
                    if cmp(q * potential(state), p * old_D, method=method) >= 0:
                        st.potential_violations += 1
                if record:
                    log2_d[k - 1] = approx_log2(state.d[k - 1])
                    st.swap_log2_D.append(sum(log2_d))
                log_row("swap", k)
                continue
        for l in range(k - 2, 0, -1):
            size_reduce(state, k, l, method=method)
        st.reductions += 1
        state.k = k + 1
        log_row("reduce", k)
    st.wall_time = time.perf_counter() - t0
    return state.basis_matrix(), state.U, st


def verify_reduced(basis, delta=DEFAULT_DELTA, *, method: str = PROGRESSIVE) -> bool:
    """Recompute lam, d from scratch and check size-reduction and the Lovasz condition exactly."""
    state = lll_init(basis)
    n = state.n
    for i in range(1, n):
        for j in range(i):
            two_lam = 2 * state.lam[i][j]
            dj = state.d[j + 1]
            if cmp(two_lam, dj, method=method) > 0 or cmp(-two_lam, dj, method=method) > 0:
                return False
    return not any(lovasz_test(state, k, delta, method=method) for k in range(2, n + 1))


def same_state(a: LLLState, b: LLLState) -> bool:
    return a.basis == b.basis and a.lam == b.lam and a.d == b.d


def gram_matrix(basis) -> MatrixZA:
    F, rows = _as_rows(basis)
    return MatrixZA(F, tuple(tuple(dot(r, s) for s in rows) for r in rows))


def gram_determinants(basis) -> list[AlgebraicInt]:
    """d_1..d_n as leading principal minors of the Gram matrix (Bareiss)."""
    G = gram_matrix(basis)
    out = []
    for j in range(1, G.n_rows + 1):
        sub = MatrixZA(G.field, tuple(r[:j] for r in G.rows[:j]))
        out.append(determinant(sub))
    return out
