"""Batch front door: verification suites, character tables, dimension grids.

Reports are JSON lines, one check per line, in deterministic order; identical
configurations produce byte-identical output.  Exit codes: 0 all checks
passed / output written, 2 configuration error, 3 at least one check failed,
4 Fock-backed request for a type outside A/D/E, 5 unknown suite or table
name.  The environment variable TOROIDAL_THREADS caps the worker threads
used to evaluate independent checks (default 1; results are collected in
submission order either way).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence

from .garland import garland_coeffs, garland_inverse_check, garland_to_symfun
from .rootsys import RootSystem, RootSystemError, build_root_system
from .series import Series, series_to_json
from .symfun import (
    complete,
    eh_alternating_check,
    elementary,
    expand_E_minus,
    expand_H_partition_sum,
    newton_e_check,
    newton_h_check,
)
from .fock.lattice import LatticeError
from .fock.space import FockSpace
from .weylmod.characters import (
    CharTable,
    character_suite,
    closed_form_product,
    fock_slice_char,
    l_zero_char,
    spanning_character,
)
from .weylmod.dictionary import VModule
from .weylmod.suites import (
    Check,
    automorphism_suite,
    bracket_fidelity_suite,
    garland_suite,
    highest_weight_suite,
    lemma_action_suite,
    presentation_suite,
    zhat_suite,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_FAILED = 3
EXIT_NOT_ADE = 4
EXIT_UNKNOWN = 5

SUITES = (
    "brackets",
    "presentation",
    "highest-weight",
    "lemma-action",
    "zhat",
    "garland",
    "characters",
    "automorphism",
    "symfun",
    "all",
)
TABLES = ("L0", "Vfock", "Wloc-spanning", "closed-form")


def _thread_cap() -> int:
    raw = os.environ.get("TOROIDAL_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_checks(jobs: Sequence[Callable[[], List[Check]]]) -> List[Check]:
    """Evaluate independent check producers, deterministically ordered."""
    cap = _thread_cap()
    if cap == 1 or len(jobs) <= 1:
        out: List[Check] = []
        for job in jobs:
            out.extend(job())
        return out
    with ThreadPoolExecutor(max_workers=min(cap, len(jobs))) as pool:
        futures = [pool.submit(job) for job in jobs]
        out = []
        for future in futures:
            out.extend(future.result())
        return out


def symfun_checks(order: int = 10, nvars: int = 12) -> List[Check]:
    """The symmetric-function identity suite (generating functions and Newton)."""
    checks = [
        Check(f"symfun/e-newton/n={n}", newton_e_check(n, nvars)) for n in range(1, order + 1)
    ]
    checks += [
        Check(f"symfun/h-newton/n={n}", newton_h_check(n, nvars)) for n in range(1, order + 1)
    ]
    checks += [
        Check(f"symfun/eh-alternating/n={n}", eh_alternating_check(n, nvars))
        for n in range(1, order + 1)
    ]
    small = min(6, order)
    em = expand_E_minus(small, nvars)
    for n in range(small + 1):
        expected = elementary(n, nvars)
        if n % 2:
            expected = -expected
        checks.append(Check(f"symfun/E-partition-sum/n={n}", em[n] == expected))
    hs = expand_H_partition_sum(small, nvars)
    for n in range(small + 1):
        checks.append(Check(f"symfun/H-partition-sum/n={n}", hs[n] == complete(n, nvars)))
    return checks


def garland_checks(s_max: int = 8, nvars: Optional[int] = None) -> List[Check]:
    if nvars is None:
        nvars = s_max + 1
    ps = garland_coeffs(s_max)
    checks = [Check("garland/inverse", garland_inverse_check(s_max))]
    for s, p in enumerate(ps):
        checks.append(Check(f"garland/grade/s={s}", p.is_homogeneous(s)))
        expected = elementary(s, nvars)
        if s % 2:
            expected = -expected
        checks.append(
            Check(f"garland/elementary-bridge/s={s}", garland_to_symfun(p, nvars) == expected)
        )
        checks.append(
            Check(
                f"garland/complete-bridge/s={s}",
                garland_to_symfun(p, nvars, negate=True) == complete(s, nvars),
            )
        )
    return checks


def _root_system(args) -> RootSystem:
    return build_root_system(args.type, args.rank)


def _mwindow(args, nvars: int):
    lo, hi = args.mwindow
    return [(lo, hi)] * (nvars - 1)


def cmd_verify(args) -> int:
    try:
        rs = _root_system(args)
    except RootSystemError as err:
        print(f"config error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    if args.suite not in SUITES:
        print(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_UNKNOWN
    jobs: List[Callable[[], List[Check]]] = []
    fock_needed = args.suite in (
        "brackets", "presentation", "highest-weight", "lemma-action",
        "zhat", "garland", "characters", "automorphism", "all",
    )
    if fock_needed and not rs.is_simply_laced():
        print(f"type {rs.label}{rs.rank} is not simply laced; Fock-backed suites refuse it",
              file=sys.stderr)
        return EXIT_NOT_ADE

    def vmodule() -> VModule:
        return VModule(rs, args.nvars)

    name = args.suite
    if name in ("brackets", "all"):
        jobs.append(lambda: bracket_fidelity_suite(
            rs, args.nvars, args.emax, _mwindow(args, args.nvars),
            n_pairs=args.pairs, seed=args.seed))
    if name in ("presentation", "all"):
        jobs.append(lambda: presentation_suite(
            vmodule(), args.emax, _mwindow(args, args.nvars), seed=args.seed))
    if name in ("highest-weight", "all"):
        jobs.append(lambda: highest_weight_suite(vmodule()))
    if name in ("lemma-action", "all"):
        jobs.append(lambda: lemma_action_suite(vmodule(), r_max=args.rmax, k_max=3))
    if name in ("zhat", "all"):
        jobs.append(lambda: zhat_suite(vmodule(), seed=args.seed))
    if name in ("garland", "all"):
        jobs.append(lambda: garland_suite(vmodule(), r_max=min(args.rmax, 3)))
        jobs.append(lambda: garland_checks(s_max=8))
    if name in ("characters", "all"):
        jobs.append(lambda: character_suite(rs, args.nvars, args.order))
    if name in ("automorphism", "all"):
        jobs.append(lambda: automorphism_suite(rs, args.nvars, seed=args.seed))
    if name in ("symfun", "all"):
        jobs.append(lambda: symfun_checks())

    checks = run_checks(jobs)
    stream = open(args.out, "w") if args.out else sys.stdout
    try:
        for check in checks:
            stream.write(json.dumps(check.as_dict(), sort_keys=True) + "\n")
    finally:
        if args.out:
            stream.close()
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAILED


def _char_table(args, rs: RootSystem) -> CharTable:
    which = args.which
    if which == "L0":
        return l_zero_char(rs, args.order, var="q1")
    if which == "Vfock":
        space = FockSpace(rs, args.nvars)
        return fock_slice_char(space, args.order, (0,) * (args.nvars - 1), var="q1")
    if which == "Wloc-spanning":
        return spanning_character(rs, args.nvars, args.order)
    if which == "closed-form":
        return closed_form_product(rs, args.nvars, args.order)
    raise KeyError(which)


def _series_csv(series: Series) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    variables = list(series.window)
    writer.writerow(["weight"] + variables + ["coefficient"])
    items = sorted(
        series.terms.items(),
        key=lambda kv: tuple(kv[0].exponent(v) for v in variables) + (kv[0].weight or ()),
    )
    for mono, c in items:
        weight = "" if mono.weight is None else ";".join(map(str, mono.weight))
        writer.writerow([weight] + [mono.exponent(v) for v in variables] + [str(c)])
    return buf.getvalue()


def cmd_char(args) -> int:
    try:
        rs = _root_system(args)
    except RootSystemError as err:
        print(f"config error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    if args.which not in TABLES:
        print(f"unknown table {args.which!r}; choose from {', '.join(TABLES)}", file=sys.stderr)
        return EXIT_UNKNOWN
    try:
        table = _char_table(args, rs)
    except (LatticeError, ValueError) as err:
        print(f"not available: {err}", file=sys.stderr)
        return EXIT_NOT_ADE
    payload = (
        series_to_json(table.series) + "\n"
        if args.format == "json"
        else _series_csv(table.series)
    )
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def cmd_fock_dims(args) -> int:
    try:
        rs = _root_system(args)
        space = FockSpace(rs, args.nvars)
    except RootSystemError as err:
        print(f"config error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    except LatticeError as err:
        print(f"not available: {err}", file=sys.stderr)
        return EXIT_NOT_ADE
    window = _mwindow(args, args.nvars)
    table = space.dimension_table(args.emax, window)
    mbars = sorted({mbar for _, mbar in table})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["energy"] + [";".join(map(str, m)) for m in mbars])
    for energy in range(args.emax + 1):
        writer.writerow([energy] + [table.get((energy, m), 0) for m in mbars])
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    if args.char_out:
        series = space.graded_character(args.emax, window)
        with open(args.char_out, "w") as handle:
            handle.write(series_to_json(series) + "\n")
    return EXIT_OK


def cmd_symfun_check(args) -> int:
    checks = symfun_checks(order=args.order, nvars=args.nvars)
    for check in checks:
        print(f"{'pass' if check.passed else 'FAIL'}  {check.name}")
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torofock",
        description="Exact verification suites and graded character tables "
        "for toroidal current algebras on a lattice Fock space.",
        epilog="Exit codes: 0 ok; 2 config error; 3 check failed; "
        "4 non-simply-laced request for a Fock-backed computation; 5 unknown name.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, emax_default=6):
        p.add_argument("--type", default="A", help="simple type label A..G")
        p.add_argument("--rank", type=int, default=1)
        p.add_argument("--nvars", type=int, default=2, help="number of torus variables n >= 2")
        p.add_argument("--emax", type=int, default=emax_default)
        p.add_argument("--order", type=int, default=6, help="series truncation order")
        p.add_argument("--mwindow", type=int, nargs=2, default=(-2, 2), metavar=("LO", "HI"))
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p_verify = sub.add_parser("verify", help="run a verification suite, JSON-lines report")
    common(p_verify)
    p_verify.add_argument("--suite", required=True)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--pairs", type=int, default=200, help="sampled pairs for brackets")
    p_verify.add_argument("--rmax", type=int, default=6)
    p_verify.set_defaults(func=cmd_verify)

    p_char = sub.add_parser("char", help="emit a character table")
    common(p_char)
    p_char.add_argument("which")
    p_char.add_argument("--format", choices=("json", "csv"), default="csv")
    p_char.set_defaults(func=cmd_char)

    p_dims = sub.add_parser("fock-dims", help="dimension grid of the Fock module")
    common(p_dims)
    p_dims.add_argument("--char-out", default=None, help="also write the character JSON here")
    p_dims.set_defaults(func=cmd_fock_dims)

    p_sym = sub.add_parser("symfun-check", help="symmetric-function identity suite")
    p_sym.add_argument("--order", type=int, default=10)
    p_sym.add_argument("--nvars", type=int, default=12)
    p_sym.set_defaults(func=cmd_symfun_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        return int(exc.code or 0)
    if getattr(args, "nvars", 2) < 2 or getattr(args, "emax", 0) < 0:
        print("config error: need nvars >= 2 and emax >= 0", file=sys.stderr)
        return EXIT_CONFIG
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
