"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a counterexample (or failed
eigenform check) is found, 2 for usage, hypothesis or budget errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import congruences as cg
from .generators import b_series, c_series, das_series, tcore_series
from .modular import (
    CharacterSpec,
    EtaQuotient,
    admissibility_check,
    character_of,
    eigen_check,
    eta_expansion,
    hecke_Tp,
    is_prime,
)
from .series import EXACT, Mod, euler_product

SCHEMA_VERSION = "1.0"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
_INT64 = 1 << 63


class UsageError(Exception):
    pass


# -- serialization -------------------------------------------------------------


def num(v):
    """JSON-safe integer: plain when it fits in 64 bits, decimal string otherwise."""
    v = int(v)
    return v if -_INT64 <= v < _INT64 else str(v)


def rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def document(command, parameters, results, passed=0, failed=0, errors=0):
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "results": results,
        "summary": {"pass_count": passed, "fail_count": failed, "error_count": errors},
    }


def entry_to_dict(entry: cg.SuiteEntry, timings=False) -> dict:
    inst = entry.instance
    out = {"instance": inst.label(), "family": inst.id, "params": inst.params(), "status": entry.status}
    if entry.report is None:
        out["error"] = entry.error
        return out
    rep = entry.report
    out.update(
        n_checked=rep.n_checked,
        requested=rep.requested,
        failures=rep.failures,
        claims=[{"kind": c.kind, "statement": str(c)} for c in rep.claims],
        counterexamples=[
            {"claim": ce.claim, "n": ce.n, "lhs": num(ce.lhs), "rhs": num(ce.rhs)}
            for ce in rep.counterexamples
        ],
        backends=dict(sorted(rep.backends.items())),
    )
    if timings:
        out["wall_time_ms"] = int(rep.wall_time * 1000)
    return out


def write_csv(rows, header):
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


# -- helpers -------------------------------------------------------------------


def _ring(mod):
    if mod is None:
        return EXACT
    if mod < 2:
        raise UsageError(f"--mod must be >= 2, got {mod}")
    return Mod(mod)


def _budget(args) -> cg.Budget:
    raw = args.budget if args.budget is not None else os.environ.get("TCORE_BUDGET")
    if raw is None:
        return cg.Budget()
    try:
        limit = int(raw)
    except ValueError:
        raise UsageError(f"budget must be an integer, got {raw!r}") from None
    if limit < 1:
        raise UsageError("budget must be positive")
    return cg.Budget.uniform(limit)


def _check_length(length, ring, budget):
    limit = budget.limit(ring)
    if length - 1 > limit:
        raise UsageError(f"length {length} exceeds the budget (largest index {limit})")
    if length < 1:
        raise UsageError("length must be positive")


def _parse_range(text):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"range must look like A..B, got {text!r}") from None
    if lo < 0 or hi <= lo:
        raise UsageError(f"empty or negative range {text!r}")
    return lo, hi


def _parse_exps(items, level):
    exps = {}
    for item in items or []:
        try:
            d, r = item.split(":")
            d, r = int(d), int(r)
        except ValueError:
            raise UsageError(f"--exp expects DELTA:R, got {item!r}") from None
        if d < 1 or level % d:
            raise UsageError(f"{d} does not divide the level {level}")
        exps[d] = exps.get(d, 0) + r
    if not exps:
        raise UsageError("at least one --exp DELTA:R is required")
    try:
        return EtaQuotient(level, exps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit_series(args, command, params, values, start=0):
    if args.json:
        rows = [{"n": start + i, "value": num(v)} for i, v in enumerate(values)]
        sys.stdout.write(dumps(document(command, params, rows)))
    else:
        write_csv(((start + i, v) for i, v in enumerate(values)), ("n", "value"))


# -- subcommands -----------------------------------------------------------------


def cmd_atn(args):
    if args.t < 2:
        raise UsageError(f"t must be >= 2, got {args.t}")
    ring = _ring(args.mod)
    if args.n is not None:
        if args.n < 0:
            raise UsageError("n must be non-negative")
        lo, hi = args.n, args.n + 1
    elif args.range is not None:
        lo, hi = _parse_range(args.range)
    else:
        raise UsageError("give --n or --range")
    _check_length(hi, ring, _budget(args))
    series = tcore_series(args.t, hi, ring)
    params = {"t": args.t, "from": lo, "to": hi, "ring": str(ring)}
    _emit_series(args, "atn", params, series.data.tolist()[lo:hi], start=lo)
    return EXIT_OK


def _instance_from_args(args):
    primes = []
    for chunk in args.primes or []:
        primes += [int(x) for x in chunk.split(",") if x]
    if args.nmax is None:
        raise UsageError("--nmax is required for a single family")
    return cg.FamilyInstance(
        args.family,
        args.nmax,
        tuple(primes),
        j=args.j,
        k=args.k,
        r=args.r,
        delta_rule=args.delta_rule,
    )


def cmd_verify(args):
    budget = _budget(args)
    if args.family.lower() == "suite":
        instances = cg.default_suite(budget)
    else:
        try:
            inst = _instance_from_args(args)
            cg.compile(inst)
        except (ValueError, cg.HypothesisError) as exc:
            raise UsageError(str(exc)) from None
        instances = [inst]
    entries = cg.verify_many(instances, budget, jobs=args.jobs)
    counts = {"pass": 0, "fail": 0, "error": 0}
    for e in entries:
        counts[e.status] += 1
    if args.csv:
        write_csv(
            (
                (e.instance.label(), e.status, e.report.n_checked if e.report else 0,
                 e.report.failures if e.report else 0)
                for e in entries
            ),
            ("instance", "status", "n_checked", "failures"),
        )
    else:
        params = {"family": args.family, "budget": {"mod2": budget.mod2, "exact": budget.exact}}
        if len(instances) == 1 and args.family.lower() != "suite":
            params.update(instances[0].params())
        results = [entry_to_dict(e, args.timings) for e in entries]
        doc = document("verify", params, results, counts["pass"], counts["fail"], counts["error"])
        sys.stdout.write(dumps(doc))
    for e in entries:
        if e.status == "error":
            print(f"error: {e.instance.label()}: {e.error}", file=sys.stderr)
    if counts["error"]:
        return EXIT_USAGE
    return EXIT_FAIL if counts["fail"] else EXIT_OK


def cmd_eta(args):
    if args.level < 1:
        raise UsageError("level must be >= 1")
    eq = _parse_exps(args.exp, args.level)
    res = admissibility_check(eq)
    chi = res.character
    body = {
        "eta_quotient": str(eq),
        "level": eq.level,
        "exponents": {str(d): r for d, r in eq.exponents.items()},
        "weight": rational(res.weight),
        "weight_integral": res.weight_integral,
        "sum_delta_r": res.sum_at_infinity,
        "sum_N_over_delta_r": res.sum_at_zero,
        "cond_A": res.cond_A,
        "cond_B": res.cond_B,
        "s": rational(chi.s),
        "character_discriminant": None if chi.discriminant is None else num(chi.discriminant),
        "cusp_orders": {str(d): rational(q) for d, q in res.cusp_orders.items()},
        "min_cusp_order": rational(res.min_cusp_order),
        "holomorphic_at_cusps": res.holomorphic_at_cusps,
        "modular": res.modular,
    }
    if args.text:
        for key in sorted(body):
            print(f"{key}: {body[key]}")
    else:
        sys.stdout.write(dumps(document("eta", {"level": eq.level, "exp": args.exp}, [body])))
    return EXIT_OK


def _hecke_target(args, ring):
    if args.exp:
        eq = _parse_exps(args.exp, args.level or 1)
        res = admissibility_check(eq)
        if not res.weight_integral:
            raise UsageError(f"{eq} has half-integral weight {res.weight}")
        try:
            f = eta_expansion(eq, args.length, ring)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return f, int(res.weight), res.character
    if args.series == "b":
        return b_series(args.length, ring).data, 1, CharacterSpec.from_discriminant(-128)
    raise UsageError(f"series {args.series!r} is not a modular form of integral weight")


def cmd_hecke(args):
    if not is_prime(args.p):
        raise UsageError(f"{args.p} is not prime")
    ring = _ring(args.mod)
    budget = _budget(args)
    _check_length(args.length, ring, budget)
    f, k, chi = _hecke_target(args, ring)
    params = {"p": args.p, "series": args.series, "length": args.length, "ring": str(ring)}
    if args.check_eigen:
        try:
            res = eigen_check(f, args.p, k, chi)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        body = {
            "p": args.p,
            "eigenvalue": num(res.eigenvalue),
            "verified_range": res.verified_range,
            "ok": res.ok,
            "first_failure": res.first_failure,
        }
        sys.stdout.write(dumps(document("hecke", params, [body], int(res.ok), int(not res.ok))))
        return EXIT_OK if res.ok else EXIT_FAIL
    image = hecke_Tp(f, args.p, k, chi)
    _emit_series(args, "hecke", params, image.tolist())
    return EXIT_OK


def cmd_expand(args):
    ring = _ring(args.mod)
    _check_length(args.length, ring, _budget(args))
    n = args.length
    if args.series == "euler":
        data = euler_product(args.step, args.power, n, ring)
    elif args.series == "tcore":
        if args.t is None or args.t < 2:
            raise UsageError("--series tcore needs --t >= 2")
        data = tcore_series(args.t, n, ring).data
    else:
        data = {"b": b_series, "c": c_series, "das": das_series}[args.series](n, ring).data
    params = {"series": args.series, "length": n, "ring": str(ring)}
    if args.series == "euler":
        params.update(step=args.step, power=args.power)
    if args.series == "tcore":
        params["t"] = args.t
    _emit_series(args, "expand", params, data.tolist())
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tcore", description=__doc__.splitlines()[0])
    parser.add_argument("--budget", type=int, help="largest coefficient index any series may reach")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("atn", help="number of t-core partitions a_t(n)")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--range", help="half-open range A..B")
    p.add_argument("--mod", type=int, help="reduce mod m (default: exact)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_atn)

    p = sub.add_parser("verify", help="sweep a congruence family, or 'suite'")
    p.add_argument("family", help="family id (case-insensitive) or 'suite'")
    p.add_argument("--primes", "--p", action="append", help="comma-separated primes")
    p.add_argument("--j", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--delta-rule", choices=cg.DELTA_RULES, default="neg-inverse")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report (default)")
    fmt.add_argument("--csv", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="include wall times (breaks byte-determinism)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eta", help="admissibility and cusp orders of an eta quotient")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--exp", action="append", help="DELTA:R, repeatable")
    p.add_argument("--text", action="store_true")
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("hecke", help="apply T_p or test the eigenform property")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--series", default="b")
    p.add_argument("--level", type=int, help="level for an eta quotient given by --exp")
    p.add_argument("--exp", action="append")
    p.add_argument("--length", type=int, default=2000)
    p.add_argument("--mod", type=int)
    p.add_argument("--check-eigen", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hecke)

    p = sub.add_parser("expand", help="dump an Euler product or named series")
    p.add_argument("--series", choices=("euler", "tcore", "b", "c", "das"), default="euler")
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--t", type=int)
    p.add_argument("--length", type=int, default=20)
    p.add_argument("--mod", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_expand)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError, cg.BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
