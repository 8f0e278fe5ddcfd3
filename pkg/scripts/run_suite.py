#!/usr/bin/env python3
"""Run the default verification suite and print a one-line summary per instance.

Example:
    python scripts/run_suite.py --jobs 4 --out suite.json
"""

import argparse
import json
import time

from tcore.cli import document, dumps, entry_to_dict
from tcore.congruences import Budget, default_suite, verify_many


def parse_args():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--mod2-budget", type=int, default=Budget.mod2)
    ap.add_argument("--exact-budget", type=int, default=Budget.exact)
    ap.add_argument("--family", action="append", help="restrict to these family ids")
    ap.add_argument("--out", help="also write the JSON report here")
    return ap.parse_args()


def main():
    args = parse_args()
    budget = Budget(args.mod2_budget, args.exact_budget)
    suite = default_suite(budget)
    if args.family:
        wanted = {f.lower() for f in args.family}
        suite = [inst for inst in suite if inst.id.lower() in wanted]

    start = time.perf_counter()
    entries = verify_many(suite, budget, jobs=args.jobs)
    elapsed = time.perf_counter() - start

    counts = {"pass": 0, "fail": 0, "error": 0}
    for e in entries:
        counts[e.status] += 1
        detail = ""
        if e.report is not None and e.report.counterexamples:
            first = e.report.counterexamples[0]
            detail = f"  failures={e.report.failures} first n={first.n}"
        elif e.error:
            detail = f"  {e.error}"
        print(f"{e.status:5s} {e.instance.label()}{detail}")
    print(f"\n{counts['pass']} pass, {counts['fail']} fail, {counts['error']} error in {elapsed:.1f}s")

    if args.out:
        params = {"family": "suite", "budget": {"mod2": budget.mod2, "exact": budget.exact}}
        doc = document(
            "verify", params, [entry_to_dict(e) for e in entries],
            counts["pass"], counts["fail"], counts["error"],
        )
        with open(args.out, "w") as fh:
            fh.write(dumps(doc))
        json.loads(dumps(doc))  # sanity: the file is valid JSON


if __name__ == "__main__":
    main()
