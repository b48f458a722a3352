"""Acceptance gate: one test per criterion, each printed as a PASS/FAIL line in the summary."""

import random
import time
from fractions import Fraction

import pytest

from zalpha.bareiss import MatrixZA, determinant
from zalpha.lll import lll_init, lll_reduce, verify_reduced
from zalpha.oracles import check_growth_bounds, minkowski_holds, shortest_vector_enum, textbook_lll
from zalpha.suites import (
    LLL_CHECKS,
    apply_transform,
    bareiss_suite,
    check_lll_run,
    fallback_suite,
    inverse_suite,
    order_suite,
    random_basis,
)
from zalpha.oracles import CheckRecord

from helpers import FIELDS, SQRT2, Z

pytestmark = pytest.mark.acceptance

SEED = 20240601


def _summary(records_by_field):
    total = sum(r.samples for recs in records_by_field.values() for r in recs)
    failures = {
        f"{name}/{r.check}": r.failures for name, recs in records_by_field.items() for r in recs if r.failures
    }
    return total, failures


def _finish(record, number, description, ok, elapsed, budget, detail=""):
    in_time = elapsed < budget
    passed = ok and in_time
    line = f"{description}; {elapsed:.1f}s (budget {budget}s){'; ' + detail if detail else ''}"
    record(number, line, passed)
    print(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {line}")
    assert ok, detail
    assert in_time, f"took {elapsed:.1f}s, budget {budget}s"


def test_criterion_1_growth_bounds(acceptance_record):
    t0 = time.perf_counter()
    recs = {}
    for name, F in FIELDS.items():
        # add/sub, scalar_mul, mul, inverse and norm; the magnitude bounds live in the property tests
        recs[name] = check_growth_bounds(F, 10_000, random.Random(SEED), bits=64, magnitudes=False)
    total, failures = _summary(recs)
    worst_mul = max(r.worst_ratio for rs in recs.values() for r in rs if r.check == "mul")
    _finish(acceptance_record, 1, f"growth bounds, {total} checks over 4 fields, worst mul ratio {worst_mul:.3g}",
            not failures, time.perf_counter() - t0, 60, str(failures) if failures else "")


def test_criterion_2_inverse(acceptance_record):
    t0 = time.perf_counter()
    recs = {name: inverse_suite(F, 1_000, random.Random(SEED)) for name, F in FIELDS.items()}
    total, failures = _summary(recs)
    _finish(acceptance_record, 2, f"inverse vs norm and char-poly inverse, {total} checks",
            not failures, time.perf_counter() - t0, 60, str(failures) if failures else "")


def test_criterion_3_certified_order(acceptance_record):
    t0 = time.perf_counter()
    recs = {name: order_suite(F, 10_000, random.Random(SEED)) for name, F in FIELDS.items()}
    total, failures = _summary(recs)
    adversaries = sum(r.samples for rs in recs.values() for r in rs if r.check == "adversarial_sign")
    n_sign = sum(r.samples for rs in recs.values() for r in rs if r.check == "sign_vs_oracle")
    ok = not failures and n_sign == 4 * 10_000 and adversaries > 0
    undecided = sum(r.samples for rs in recs.values() for r in rs if r.check == "sign_undecided_at_256")
    _finish(acceptance_record, 3,
            f"sign/floor/ceil/round, {total} checks incl. {adversaries} convergent adversaries "
            f"({undecided} needed >256 oracle bits)",
            ok, time.perf_counter() - t0, 120, str(failures) if failures else "")


def test_criterion_4_fallback_equivalence(acceptance_record):
    t0 = time.perf_counter()
    small = {name: F for name, F in FIELDS.items() if F.degree <= 3}
    recs = {name: fallback_suite(F, 100, random.Random(SEED), bits=16) for name, F in small.items()}
    total, failures = _summary(recs)
    _finish(acceptance_record, 4, f"threshold path == progressive path, {total} checks over {len(small)} fields",
            not failures, time.perf_counter() - t0, 120, str(failures) if failures else "")


def test_criterion_5_bareiss(acceptance_record):
    t0 = time.perf_counter()
    recs = {name: bareiss_suite(F, 100, random.Random(SEED)) for name, F in FIELDS.items()}
    total, failures = _summary(recs)
    worst = max(r.worst_ratio for rs in recs.values() for r in rs if r.check == "size_bound")
    _finish(acceptance_record, 5, f"det vs cofactor, exact divisions, size bound (worst ratio {worst:.3g}), "
            f"{total} checks", not failures, time.perf_counter() - t0, 60, str(failures) if failures else "")


@pytest.fixture(scope="module")
def lll_runs():
    t0 = time.perf_counter()
    recs = {}
    for name, F in FIELDS.items():
        rng = random.Random(SEED)
        rs = {c: CheckRecord(c) for c in LLL_CHECKS}
        for i in range(50):
            n = 2 + i % 4
            M = random_basis(F, n, rng, 16)
            for delta in (Fraction(3, 4), Fraction(9, 10)):
                check_lll_run(M, delta, rs)
        recs[name] = list(rs.values())
    return recs, time.perf_counter() - t0


def test_criterion_6_lll_reducedness(acceptance_record, lll_runs):
    recs, elapsed = lll_runs
    recs6 = {name: [r for r in rs if r.check != "potential_decrease"] for name, rs in recs.items()}
    total, failures = _summary(recs6)
    runs = sum(r.samples for rs in recs.values() for r in rs if r.check == "verify_reduced")
    _finish(acceptance_record, 6, f"{runs} LLL runs: reduced, unimodular U, U*input == output, "
            f"Gram det conserved, t = 2s+n-1", not failures and runs == 400, elapsed, 600,
            str(failures) if failures else "")


def test_criterion_7_potential(acceptance_record, lll_runs):
    recs, elapsed = lll_runs
    pot = [r for rs in recs.values() for r in rs if r.check == "potential_decrease"]
    swaps = sum(r.samples for r in pot)
    violations = sum(r.failures for r in pot)
    _finish(acceptance_record, 7, f"D_new < delta*D_old at all {swaps} swaps, {violations} violations",
            violations == 0 and swaps > 0, elapsed, 600)


def _canonical(vectors):
    return sorted(max(tuple(v), tuple(-x for x in v)) for v in vectors)


def test_criterion_8_integer_regression(acceptance_record):
    t0 = time.perf_counter()
    rows = [[1, 1, 1], [-1, 0, 2], [3, 5, 6]]
    basis = MatrixZA.from_ints(Z, rows)
    R, U, st = lll_reduce(basis, Fraction(3, 4))
    got = [[x.coeffs[0] for x in r] for r in R.rows]
    ref = textbook_lll(rows, Fraction(3, 4))
    same_up_to_sign_order = _canonical(got) == _canonical(ref)
    unimodular = abs(determinant(MatrixZA.from_ints(Z, U)).coeffs[0]) == 1
    ok = verify_reduced(R) and unimodular and apply_transform(U, basis) == R and same_up_to_sign_order
    _finish(acceptance_record, 8, f"integer basis -> {got}, textbook LLL agrees", ok, time.perf_counter() - t0, 1)


def _certified_shortest(R):
    for bound in range(2, 6):
        sv = shortest_vector_enum(R, bound)
        if sv.certified:
            return sv
    return None


def test_criterion_9_minkowski(acceptance_record):
    t0 = time.perf_counter()
    checked = violated = uncertified = 0
    rng = random.Random(SEED)
    for F in (Z, SQRT2):
        for i in range(30):
            n = 1 + i % 3
            R, _, _ = lll_reduce(random_basis(F, n, rng, 8))
            sv = _certified_shortest(R)
            if sv is None:
                uncertified += 1
                continue
            checked += 1
            if not minkowski_holds(lll_init(R).d[1:], sv.norm2):
                violated += 1
    _finish(acceptance_record, 9, f"d_j >= (L0/j)^j on {checked} reduced bases ({uncertified} not box-certified)",
            violated == 0 and checked >= 50, time.perf_counter() - t0, 60)
