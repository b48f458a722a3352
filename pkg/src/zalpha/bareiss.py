"""Fraction-free (Bareiss) elimination over Z[alpha]."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import factorial
from typing import Callable, Sequence

from .arith import exact_div
from .errors import FieldMismatch, NotSquare
from .field import AlgebraicInt, FieldDescriptor, opc


@dataclass(frozen=True)
class MatrixZA:
    """Dense matrix over Z[alpha], stored row-major."""

    field: FieldDescriptor
    rows: tuple[tuple[AlgebraicInt, ...], ...]

    def __post_init__(self):
        width = {len(r) for r in self.rows}
        if len(width) > 1:
            raise ValueError("ragged matrix")
        for r in self.rows:
            for x in r:
                if x.field is not self.field and x.field != self.field:
                    raise FieldMismatch("matrix entries from different fields")

    @classmethod
    def from_ints(cls, F: FieldDescriptor, rows) -> "MatrixZA":
        """Build from nested lists whose entries are ints or coefficient lists."""
        def conv(x):
            if isinstance(x, AlgebraicInt):
                return x
            if isinstance(x, int):
                return F.from_int(x)
            return F.element(x)

        return cls(F, tuple(tuple(conv(x) for x in r) for r in rows))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __matmul__(self, other: "MatrixZA") -> "MatrixZA":
        from .arith import dot

        cols = list(zip(*other.rows))
        return MatrixZA(self.field, tuple(tuple(dot(r, c) for c in cols) for r in self.rows))


@dataclass
class EliminationTrace:
    pivot_rows: list[int] = dc_field(default_factory=list)
    stage_bits: list[int] = dc_field(default_factory=list)
    swaps: int = 0
    max_opc: int = 0
    singular: bool = False

    @property
    def sign(self) -> int:
        return -1 if self.swaps % 2 else 1


def fraction_free_det(
    rows: Sequence[Sequence],
    divide: Callable,
    trace: EliminationTrace | None = None,
    size: Callable | None = None,
):
    """Determinant by one-step Bareiss elimination over any exact-division ring.

    ``rows`` holds ring elements supporting ``*``, ``-``, unary ``-`` and
    truthiness; ``divide(x, y)`` must return the exact quotient.  The matrix
    is eliminated in place on a copy; the last pivot carries the determinant
    up to the row-swap sign, which is folded in here.
    """
    a, trace = _eliminate(rows, divide, trace, size)
    if not a:
        raise ValueError("empty matrix")
    det = a[-1][-1]
    if trace.singular:
        return det - det
    return -det if trace.swaps % 2 else det


def _eliminate(rows, divide, trace=None, size=None):
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NotSquare(f"expected a square matrix, got {n} x {len(rows[0]) if rows else 0}")
    a = [list(r) for r in rows]
    trace = trace if trace is not None else EliminationTrace()
    if size is not None and n:
        trace.max_opc = max(size(x) for r in a for x in r)
        trace.stage_bits.append(trace.max_opc.bit_length())
    prev = None  # a_{k-1,k-1}^{(k-1)}; None stands for 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            # zero column below the diagonal: determinant is 0, stop early
            trace.singular = True
            return a, trace
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            trace.swaps += 1
        trace.pivot_rows.append(piv)
        akk = a[k][k]
        stage_max = 0
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                v = akk * a[i][j] - aik * a[k][j]
                a[i][j] = v if prev is None else divide(v, prev)
                if size is not None:
                    stage_max = max(stage_max, size(a[i][j]))
            a[i][k] = aik - aik
        if size is not None:
            trace.max_opc = max(trace.max_opc, stage_max)
            trace.stage_bits.append(stage_max.bit_length())
        prev = akk
    if n:
        trace.pivot_rows.append(n - 1)
    return a, trace


def triangularize(M: MatrixZA) -> tuple[MatrixZA, EliminationTrace]:
    """Upper-triangular Bareiss form of a square matrix and its elimination trace.

    The final diagonal entry equals det(M) times ``trace.sign``.
    """
    if M.n_rows != M.n_cols:
        raise NotSquare(f"expected a square matrix, got {M.n_rows} x {M.n_cols}")
    a, trace = _eliminate(M.rows, exact_div, size=opc)
    return MatrixZA(M.field, tuple(tuple(r) for r in a)), trace


def determinant(M: MatrixZA) -> AlgebraicInt:
    if M.n_rows != M.n_cols:
        raise NotSquare(f"expected a square matrix, got {M.n_rows} x {M.n_cols}")
    if M.n_rows == 0:
        return M.field.one
    upper, trace = triangularize(M)
    if trace.singular:
        return M.field.zero
    d = upper.rows[-1][-1]
    return -d if trace.swaps % 2 else d


def size_bound(M: MatrixZA) -> int:
    """n! * const_M^(n-1) * C^n, a bound on every intermediate coefficient norm."""
    n = M.n_rows
    C = max((opc(x) for r in M.rows for x in r), default=0)
    return factorial(n) * M.field.const_M ** max(n - 1, 0) * C**n
