"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from pathlib import Path

from . import serialize as ser
from .bareiss import MatrixZA, determinant, triangularize
from .errors import ZAlphaError
from .field import FieldDescriptor
from .lll import DEFAULT_DELTA, _parse_delta, lll_reduce, verify_reduced
from .oracles import brute_det, report_csv
from .suites import SUITES, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_INPUT = 0, 1, 2

# errors that mean "bad input" rather than "wrong answer"
INPUT_ERRORS = (ValueError, TypeError, KeyError, OSError, ZAlphaError, ArithmeticError)


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    field: str | None = None
    input: str | None = None
    delta: Fraction = DEFAULT_DELTA
    output: str | None = None
    stats: str | None = None
    oracle: bool = False
    verify: bool = False
    suite: str | None = None
    samples: int = 1000
    seed: int = 0

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        delta = DEFAULT_DELTA
        if getattr(ns, "delta", None) is not None:
            delta = _parse_delta(ser.parse_rational(ns.delta))
        suite = getattr(ns, "suite_pos", None) or getattr(ns, "suite", None)
        return cls(
            command=ns.command,
            field=getattr(ns, "field", None),
            input=getattr(ns, "input", None),
            delta=delta,
            output=getattr(ns, "output", None),
            stats=getattr(ns, "stats", None),
            oracle=getattr(ns, "oracle", False),
            verify=getattr(ns, "verify", False),
            suite=suite,
            samples=getattr(ns, "samples", 1000),
            seed=getattr(ns, "seed", 0),
        )


def _load_field(path: str | None) -> FieldDescriptor | None:
    if path is None:
        return None
    p = Path(path)
    return ser.field_from_json(ser.load_json(p), p.parent)


def _load_matrix_obj(cfg: RunConfig):
    if cfg.input is None:
        raise InputError("--input is required")
    p = Path(cfg.input)
    return ser.load_json(p), p.parent


def _load_matrix(cfg: RunConfig) -> MatrixZA:
    obj, base = _load_matrix_obj(cfg)
    return ser.matrix_from_json(obj, base, _load_field(cfg.field))


def _load_basis_cleared(cfg: RunConfig) -> tuple[MatrixZA, int]:
    """Basis with rational denominators cleared by a common multiple; returns (basis, multiplier)."""
    obj, base = _load_matrix_obj(cfg)
    F, rows = ser.rational_rows_from_json(obj, base, _load_field(cfg.field))
    L = 1
    for r in rows:
        for vals in r:
            for v in vals:
                L = lcm(L, v.denominator)
    M = MatrixZA(F, tuple(tuple(F.element(int(v * L) for v in vals) for vals in r) for r in rows))
    return M, L


def _emit(cfg: RunConfig, obj) -> None:
    text = ser.dump_json(obj, cfg.output)
    if cfg.output is None:
        print(text)


def cmd_field_info(cfg: RunConfig) -> int:
    F = _load_field(cfg.field)
    if F is None:
        raise InputError("--field is required")
    print(f"field: {F}")
    print(f"m: {F.degree}")
    print(f"f_inf_norm: {F.f_inf_norm}")
    print(f"interval: [{F.interval[0]}, {F.interval[1]}]")
    for k, row in enumerate(F.reduction_table):
        print(f"r[{k}]: {' '.join(str(c) for c in row)}")
    for name in ("const_M", "const_P", "const_Q", "const_S"):
        print(f"{name}: {getattr(F, name)}")
    return EXIT_OK


def cmd_det(cfg: RunConfig) -> int:
    M = _load_matrix(cfg)
    if M.n_rows != M.n_cols:
        raise InputError(f"matrix is {M.n_rows}x{M.n_cols}, not square")
    _, trace = triangularize(M)
    det = determinant(M)
    print(f"det: {det}")
    print(f"coeffs: {json.dumps(ser.element_to_json(det))}")
    print(f"row_swaps: {trace.swaps}")
    print(f"max_opc_bits: {trace.max_opc.bit_length()}")
    if cfg.oracle:
        if M.n_rows > 6:
            print("oracle: skipped (n > 6)")
        elif brute_det(M) == det:
            print("oracle: ok")
        else:
            print("oracle: MISMATCH", file=sys.stderr)
            return EXIT_VERIFY
    return EXIT_OK


def _write_stats(path: str, stats) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["iteration", "kind", "k", "log2_D", "max_opc_bits"])
        for r in stats.rows:
            w.writerow([r.iteration, r.kind, r.k, f"{r.log2_D:.6f}", r.max_opc_bits])


def cmd_lll(cfg: RunConfig) -> int:
    M, L = _load_basis_cleared(cfg)
    R, U, st = lll_reduce(M, cfg.delta, record=cfg.stats is not None)
    out = ser.matrix_to_json(R)
    out["U"] = [[str(x) for x in row] for row in U]
    out["denominator"] = str(L)
    out["delta"] = f"{cfg.delta.numerator}/{cfg.delta.denominator}"
    out["stats"] = {
        "iterations": st.iterations,
        "swaps": st.swaps,
        "reductions": st.reductions,
        "max_opc_bits": st.max_opc_bits,
        "potential_violations": st.potential_violations,
        "wall_time": round(st.wall_time, 6),
    }
    _emit(cfg, out)
    if cfg.stats:
        _write_stats(cfg.stats, st)
    if st.potential_violations:
        print(f"potential check failed at {st.potential_violations} swaps", file=sys.stderr)
        return EXIT_VERIFY
    if cfg.verify:
        if not verify_reduced(R, cfg.delta):
            print("verify: output is NOT reduced", file=sys.stderr)
            return EXIT_VERIFY
        print("verify: ok", file=sys.stderr)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    M, _ = _load_basis_cleared(cfg)
    ok = verify_reduced(M, cfg.delta)
    print(f"reduced (delta={cfg.delta}): {'yes' if ok else 'no'}")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_check(cfg: RunConfig) -> int:
    if cfg.suite is None:
        raise InputError(f"a suite is required: {', '.join(SUITES)}")
    if cfg.suite not in SUITES:
        raise InputError(f"unknown suite {cfg.suite!r}; choose from {', '.join(SUITES)}")
    F = _load_field(cfg.field)
    if F is None:
        raise InputError("--field is required")
    if cfg.samples < 1:
        raise InputError("--samples must be positive")
    records = run_suite(cfg.suite, F, cfg.samples, cfg.seed)
    text = report_csv(records)
    if cfg.output:
        Path(cfg.output).write_text(text)
    sys.stdout.write(text)
    return EXIT_VERIFY if any(r.failures for r in records) else EXIT_OK


COMMANDS = {
    "field-info": cmd_field_info,
    "det": cmd_det,
    "lll": cmd_lll,
    "verify": cmd_verify,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zalpha", description="Exact arithmetic, determinants and LLL over Z[alpha].")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, need_input=True):
        sp.add_argument("--field", help="field JSON (overrides the field inside --input)")
        if need_input:
            sp.add_argument("--input", help="matrix / basis JSON")
        sp.add_argument("--output", help="write the result here instead of stdout")

    sp = sub.add_parser("field-info", help="print the field descriptor and growth constants")
    sp.add_argument("--field", required=False)

    sp = sub.add_parser("det", help="exact determinant by fraction-free elimination")
    common(sp)
    sp.add_argument("--oracle", action="store_true", help="re-check with cofactor expansion (n <= 6)")

    for name, helptext in (("lll", "integral LLL reduction"), ("verify", "check that a basis is LLL-reduced")):
        sp = sub.add_parser(name, help=helptext)
        common(sp)
        sp.add_argument("--delta", default=None, help="reduction parameter p/q in (1/4, 1), default 3/4")
        if name == "lll":
            sp.add_argument("--stats", help="write per-iteration CSV here")
            sp.add_argument("--verify", action="store_true", help="verify the output independently")

    sp = sub.add_parser("check", help="run a randomized oracle suite and print a CSV report")
    sp.add_argument("suite_pos", nargs="?", metavar="SUITE", help=f"one of {', '.join(SUITES)}")
    sp.add_argument("--suite", help="same as the positional SUITE")
    sp.add_argument("--field")
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--output", help="also write the CSV report here")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        cfg = RunConfig.from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except json.JSONDecodeError as e:
        print(f"error: malformed JSON: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, *INPUT_ERRORS) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
