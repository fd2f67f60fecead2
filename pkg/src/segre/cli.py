"""Command-line surface: calculators, witness generators, verifiers.

Exit codes: 0 success, 1 a verification or witness check failed, 2 bad
flags or malformed input.  All randomized commands take --seed and print
byte-identical JSON for identical invocations.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .brillnoether import (
    BNReport,
    bn_dim_lower_bound,
    bn_nonempty_t,
    bn_report,
    rho,
    stratum_min_sections,
    weak_bn_check,
)
from .errors import CounterexampleError, InvalidParameterError, RetryExhausted
from .fields import PrimeField
from .harness import (
    verify_formula_ext1,
    verify_formula_fiber,
    verify_lemma_tool,
    verify_stratum_dim,
    verify_weak_bn,
)
from .plane import h0_ideal, h1_ideal, zero_cycle_from_json
from .rng import RngState
from .strata import (
    ChernData,
    admissible_invariants,
    moduli_dim,
    normalize_chern,
    stratum_dim_branch,
)
from .witness import DEFAULT_PRIME, DEFAULT_RETRIES, below_boundary_probe, bn_witness, stratum_witness

FORMATS = ("table", "json", "csv")


def _default_prime() -> int:
    env = os.environ.get("SEGRE_PRIME")
    return int(env) if env else DEFAULT_PRIME


def _emit_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit_csv(headers, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue()


def _emit_table(headers, rows) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = []
    for idx, row in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if idx == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _print_rows(fmt: str, headers, rows, json_obj) -> None:
    if fmt == "json":
        sys.stdout.write(_emit_json(json_obj))
    elif fmt == "csv":
        sys.stdout.write(_emit_csv(headers, rows))
    else:
        sys.stdout.write(_emit_table(headers, rows))


def cmd_strata(args) -> int:
    c = ChernData(args.c1, args.c2)
    reports = admissible_invariants(c)
    headers = ["s", "k", "dim", "open", "branch"]
    rows = [
        [r.s, r.k, r.dim, "yes" if r.is_open else "", stratum_dim_branch(c, r.s)]
        for r in reports
    ]
    obj = {
        "c1": c.c1,
        "c2": c.c2,
        "moduli_dim": moduli_dim(c),
        "strata": [
            {
                "s": r.s,
                "k": r.k,
                "dim": r.dim,
                "is_open": r.is_open,
                "branch": stratum_dim_branch(c, r.s),
            }
            for r in reports
        ],
    }
    _print_rows(args.format, headers, rows, obj)
    return 0


def _bn_full(args, c: ChernData) -> int:
    even, r, _ = normalize_chern(c)
    parity = "even" if even else "odd"
    strata = admissible_invariants(c)
    stratum_rows = []
    for rep in strata:
        t_min = stratum_min_sections(r, rep.k, parity)
        try:
            t_ne = bn_nonempty_t(r, rep.k, parity, c.c2)
        except InvalidParameterError:
            t_ne = None
        try:
            bound = bn_dim_lower_bound(r, rep.k, c.c2, parity) if t_ne is not None else None
        except InvalidParameterError:
            bound = None
        stratum_rows.append((rep, t_min, t_ne, bound))
    try:
        weak = weak_bn_check(c.c1)[0] == c.c2
    except InvalidParameterError:
        weak = False
    t_span = [0, 1, 2, 3, 4, 5]
    for _, t_min, t_ne, _ in stratum_rows:
        for t in (t_min, t_ne):
            if t is not None and t not in t_span:
                t_span.append(t)
    t_span.sort()
    rho_rows = [[t, rho(c, t)] for t in t_span]

    obj = {
        "c1": c.c1,
        "c2": c.c2,
        "moduli_dim": moduli_dim(c),
        "weak_brill_noether": weak,
        "rho": [{"t": t, "rho": v} for t, v in rho_rows],
        "strata": [
            {
                "s": rep.s,
                "k": rep.k,
                "dim": rep.dim,
                "guaranteed_sections": t_min,
                "certified_nonempty_t": t_ne,
                "dim_lower_bound": bound,
            }
            for rep, t_min, t_ne, bound in stratum_rows
        ],
    }
    if args.format == "json":
        sys.stdout.write(_emit_json(obj))
        return 0
    if args.format == "csv":
        sys.stdout.write(_emit_csv(["t", "rho"], rho_rows))
        return 0
    out = [f"moduli_dim = {moduli_dim(c)}", f"weak_brill_noether = {'yes' if weak else 'no'}"]
    sys.stdout.write("\n".join(out) + "\n\n")
    sys.stdout.write(_emit_table(["t", "rho"], rho_rows))
    sys.stdout.write("\n")
    sys.stdout.write(
        _emit_table(
            ["s", "k", "dim", "t_guaranteed", "t_nonempty", "dim_lower_bound"],
            [
                [rep.s, rep.k, rep.dim, t_min, t_ne if t_ne is not None else "-",
                 bound if bound is not None else "-"]
                for rep, t_min, t_ne, bound in stratum_rows
            ],
        )
    )
    return 0


def cmd_bn(args) -> int:
    c = ChernData(args.c1, args.c2)
    if args.t is None:
        return _bn_full(args, c)
    report: BNReport = bn_report(c, args.t)
    obj = {
        "c1": c.c1,
        "c2": c.c2,
        "t": report.t,
        "rho": report.rho,
        "lower_bound": report.lower_bound,
        "nonempty_certified": report.nonempty_certified,
    }
    rows = [[report.t, report.rho,
             report.lower_bound if report.lower_bound is not None else "-",
             "yes" if report.nonempty_certified else "no"]]
    _print_rows(args.format, ["t", "rho", "lower_bound", "certified"], rows, obj)
    return 0


def cmd_witness(args) -> int:
    field = PrimeField(args.prime)
    rng = RngState(args.seed)
    if args.kind == "stratum":
        report = stratum_witness(
            ChernData(args.c1, args.c2), args.s, rng, max_retries=args.retries, field=field
        )
    else:
        report = bn_witness(
            args.r, args.k, args.c2, args.parity, rng, max_retries=args.retries, field=field
        )
    payload = _emit_json(report.to_json())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    if args.format == "json" and not args.out:
        sys.stdout.write(payload)
    else:
        rows = [[key, report.checks[key]] for key in sorted(report.checks)]
        rows.append(["retries_used", report.retries_used])
        rows.append(["bundle", f"a={report.bundle.a} b={report.bundle.b} l={len(report.bundle.cycle)}"])
        if args.out:
            rows.append(["written", args.out])
        sys.stdout.write(_emit_table(["check", "value"], rows))
    return 0


def cmd_verify(args) -> int:
    field = PrimeField(args.prime)
    rng = RngState(args.seed)
    if args.suite == "dims":
        report = verify_stratum_dim(
            ChernData(args.c1, args.c2), args.s, args.trials, rng, field=field
        )
    elif args.suite == "ext1":
        report = verify_formula_ext1(args.k, args.c2, args.trials, rng, field=field)
    elif args.suite == "fiber":
        report = verify_formula_fiber(args.k, args.c2, args.trials, rng, field=field)
    elif args.suite == "lemma-tool":
        report = verify_lemma_tool(args.trials, rng, field=field)
    elif args.suite == "weak-bn":
        even = args.c1 % 2 == 0
        r = args.c1 // 2 if even else (args.c1 + 1) // 2
        report = verify_weak_bn(r, "even" if even else "odd", args.trials, rng, field=field)
    else:  # boundary
        probe = below_boundary_probe(
            ChernData(args.c1, args.c2), args.s, args.trials, rng, field=field
        )
        if args.format == "json":
            sys.stdout.write(_emit_json(probe.to_json()))
        else:
            sys.stdout.write(
                _emit_table(
                    ["c1", "c2", "s", "trials", "max_segre"],
                    [[probe.c1, probe.c2, probe.s, probe.trials, probe.max_segre]],
                )
            )
        return 0
    if args.format == "json":
        sys.stdout.write(_emit_json(report.to_json()))
    else:
        rows = [
            ["operation", report.operation],
            ["parameters", json.dumps(report.parameters, sort_keys=True)],
            ["trials", report.trials],
            ["closed_form", report.closed_form_value],
            ["oracle_values", " ".join(str(v) for v in report.oracle_values)],
            ["resamples", report.resamples],
            ["agree", "yes" if report.agree else "NO"],
            ["elapsed_s", f"{report.elapsed:.3f}"],
        ]
        sys.stdout.write(_emit_table(["field", "value"], rows))
    return 0 if report.agree else 1


def cmd_h0(args) -> int:
    try:
        with open(args.points, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read points file: {exc}", file=sys.stderr)
        return 2
    cycle = zero_cycle_from_json(obj)
    h0 = h0_ideal(args.d, cycle)
    h1 = h1_ideal(args.d, cycle)
    obj = {"d": args.d, "length": len(cycle), "h0": h0, "h1": h1}
    rows = [[args.d, len(cycle), h0, h1]]
    _print_rows(args.format, ["d", "length", "h0", "h1"], rows, obj)
    return 0


def _add_common(parser, *, seeded: bool, retries: bool = False, trials: bool = False):
    parser.add_argument("--format", choices=FORMATS, default="table")
    if seeded:
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--prime", type=int, default=_default_prime())
    if retries:
        parser.add_argument("--retries", type=int, default=DEFAULT_RETRIES)
    if trials:
        parser.add_argument("--trials", type=int, default=10)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="segre",
        description=(
            "Exact calculators, randomized witnesses, and cross-verifiers for the "
            "Segre stratification and Brill-Noether loci of rank-2 bundles on the "
            "projective plane.  SEGRE_PRIME overrides the default working prime."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("strata", help="admissible Segre invariants and stratum dimensions")
    p.add_argument("--c1", type=int, required=True)
    p.add_argument("--c2", type=int, required=True)
    _add_common(p, seeded=False)
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("bn", help="Brill-Noether numbers, thresholds, and bounds")
    p.add_argument("--c1", type=int, required=True)
    p.add_argument("--c2", type=int, required=True)
    p.add_argument("--t", type=int, default=None)
    _add_common(p, seeded=False)
    p.set_defaults(func=cmd_bn)

    p = sub.add_parser("witness", help="generate a verified witness bundle")
    kinds = p.add_subparsers(dest="kind", required=True)

    ps = kinds.add_parser("stratum", help="bundle with prescribed Segre invariant")
    ps.add_argument("--c1", type=int, required=True)
    ps.add_argument("--c2", type=int, required=True)
    ps.add_argument("--s", type=int, required=True)
    ps.add_argument("--out", type=str, default=None)
    _add_common(ps, seeded=True, retries=True)
    ps.set_defaults(func=cmd_witness)

    pb = kinds.add_parser("bn", help="section-rich bundle certifying a nonempty locus")
    pb.add_argument("--r", type=int, required=True)
    pb.add_argument("--k", type=int, required=True)
    pb.add_argument("--c2", type=int, required=True)
    pb.add_argument("--parity", choices=("even", "odd"), default="even")
    pb.add_argument("--out", type=str, default=None)
    _add_common(pb, seeded=True, retries=True)
    pb.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="oracle cross-validation sweeps")
    suites = p.add_subparsers(dest="suite", required=True)

    for name, flags in (
        ("dims", ("c1", "c2", "s")),
        ("ext1", ("k", "c2")),
        ("fiber", ("k", "c2")),
        ("lemma-tool", ()),
        ("weak-bn", ("c1",)),
        ("boundary", ("c1", "c2", "s")),
    ):
        pv = suites.add_parser(name)
        for flag in flags:
            pv.add_argument(f"--{flag}", type=int, required=True)
        _add_common(pv, seeded=True, trials=True)
        pv.set_defaults(func=cmd_verify)

    p = sub.add_parser("h0", help="cohomology counts of a zero-cycle file")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--points", type=str, required=True)
    _add_common(p, seeded=False)
    p.set_defaults(func=cmd_h0)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RetryExhausted, CounterexampleError) as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
