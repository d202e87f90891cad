"""Command-line entry point.

    coinwords factorize 2113
    coinwords involute 112
    coinwords verify coin --multiset 1:2,2:1,3:1
    coinwords verify witt --vars 3 --degree 6 --json --out witt.json

Exit codes: 0 all identities hold, 1 a counterexample was found, 2 bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import enumeration as en
from . import involution as inv
from . import lyndon as ly
from . import permutations as pm
from . import witt
from .words import WordError, format_word, parse_multiset, parse_word

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

SUITES = ("coin", "involution", "witt", "cauchy", "stirling")


class UsageError(Exception):
    pass


def _or(value, default):
    return default if value is None else value


def make_report(command, inputs, result, ok=True):
    return {"command": command, "inputs": inputs, "result": result,
            "status": "ok" if ok else "failed"}


def cmd_factorize(text):
    w = parse_word(text)
    factors = ly.cfl_factorization(w)
    result = {
        "word": format_word(w),
        "factors": [format_word(f) for f in factors],
        "lyndon": len(factors) == 1,
    }
    if len(w) >= 2 and result["lyndon"]:
        r, s = ly.standard_factorization(w)
        result["standard_factorization"] = [format_word(r), format_word(s)]
    try:
        t = ly.lyndon_tuple(w)
    except ly.NonDistinctFactors:
        result["tuple"] = "NonDistinctFactors"
    else:
        index = len(w) - t.k
        result.update(tuple=str(t), index=index, parity=ly.Parity.of(index).value)
    return make_report("factorize", {"word": text}, result)


def cmd_involute(text):
    w = parse_word(text)
    image, case = inv.toggle_with_case(w)
    back = inv.toggle(image)
    result = {
        "word": format_word(w),
        "tuple": str(ly.lyndon_tuple(w)),
        "parity": ly.parity(w).value,
        "image": format_word(image),
        "image_tuple": str(ly.lyndon_tuple(image)),
        "image_parity": ly.parity(image).value,
        "case": case,
        "round_trip": format_word(back),
    }
    return make_report("involute", {"word": text}, result, ok=back == w)


def _multisets(args, min_n=2):
    if args.multiset:
        M = parse_multiset(args.multiset)
        if M.cardinality < min_n:
            raise UsageError(f"multiset must have N >= {min_n}")
        return [M], False
    letters = _or(args.vars, 3)
    max_n = _or(args.n, 8)
    if letters < 1 or max_n < min_n:
        raise UsageError(f"need --vars >= 1 and --n >= {min_n}")
    return list(en.multisets_up_to(letters, max_n, min_n)), True


def verify_coin(args):
    multisets, sweep = _multisets(args)
    rows, failures = [], []
    for M in multisets:
        census = en.parity_census(M, threads=args.threads)
        row = en.census_json(M, census)
        if census.even != census.odd or census.alternating_sum != 0:
            failures.append({"multiset": row["multiset"], "even": census.even, "odd": census.odd,
                             "alternating_sum": census.alternating_sum})
        if M.cardinality <= 7:
            oracle = {str(k): en.b_count_oracle(M, k) for k in range(1, M.cardinality + 1)}
            oracle = {k: v for k, v in oracle.items() if v}
            row["oracle_by_k"] = oracle
            if oracle != row["by_k"]:
                failures.append({"multiset": row["multiset"], "by_k": row["by_k"], "oracle_by_k": oracle})
        rows.append(row)
    result = {"multisets": rows, "failures": failures} if sweep else dict(rows[0], failures=failures)
    return result, not failures, rows


def verify_involution(args):
    multisets, sweep = _multisets(args)
    reports = [inv.verify_involution(M, threads=args.threads).to_json() for M in multisets]
    failures = [f for r in reports for f in r["failures"]]
    if sweep:
        result = {"multisets": reports, "checked": sum(r["checked"] for r in reports),
                  "failures": failures}
    else:
        result = reports[0]
    return result, not failures, reports


def verify_witt(args):
    k = _or(args.vars, 3)
    D = _or(args.degree, 6)
    if k < 1 or D < 1:
        raise UsageError("need --vars >= 1 and --degree >= 1")
    report = witt.verify_witt(k, D)
    return report.to_json(), report.equal, report


def verify_cauchy(args):
    n = _or(args.n, 7)
    if n < 1:
        raise UsageError("need --n >= 1")
    checked, failures = pm.cauchy_check(n)
    even, odd = pm.even_odd_counts(n)
    balanced = n < 2 or even == odd
    if not balanced:
        failures.append(f"even={even} odd={odd}")
    return {"n": n, "checked": checked, "even": even, "odd": odd, "failures": failures}, not failures, None


def verify_stirling(args):
    n_max = _or(args.n, 7)
    if n_max < 1:
        raise UsageError("need --n >= 1")
    table, failures = [], []
    for n in range(0, n_max + 1):
        table.append([en.stirling_cycle(n, k) for k in range(n + 1)])
    for n in range(1, n_max + 1):
        census = en.parity_census(en.MultisetSpec((1,) * n), threads=args.threads)
        ks = [args.k] if args.k is not None else range(1, n + 1)
        for k in ks:
            if not 1 <= k <= n:
                continue
            b = census.by_k.get(k, 0)
            if b != table[n][k]:
                failures.append({"n": n, "k": k, "b": b, "stirling": table[n][k]})
    return {"n": n_max, "table": table, "failures": failures}, not failures, table


VERIFY = {
    "coin": verify_coin,
    "involution": verify_involution,
    "witt": verify_witt,
    "cauchy": verify_cauchy,
    "stirling": verify_stirling,
}


def cmd_verify(args):
    result, ok, extra = VERIFY[args.suite](args)
    inputs = {k: getattr(args, k) for k in ("multiset", "n", "k", "vars", "degree") if getattr(args, k) is not None}
    report = make_report(f"verify {args.suite}", inputs, result, ok)
    if args.figure:
        _render(args.suite, result, extra, args.figure)
    return report


def _render(suite, result, extra, path):
    from . import plotting

    if suite == "coin":
        if len(extra) == 1:
            plotting.plot_by_k(extra[0]["by_k"], path, title=f"M = {extra[0]['multiset']}")
        else:
            plotting.plot_census(extra, path)
    elif suite == "involution":
        plotting.plot_census([{"multiset": r["multiset"], "even": r["splits"], "odd": r["merges"]}
                              for r in extra], path, title="split vs merge cases")
    elif suite == "witt":
        plotting.plot_witt(extra, path)
    elif suite == "stirling":
        plotting.plot_stirling(extra, path)
    else:
        raise UsageError(f"no figure for suite {suite}")


def format_text(report):
    lines = [f"command: {report['command']}"]
    result = report["result"]
    rows = result.get("multisets") if isinstance(result, dict) else None
    if rows:
        cols = [c for c in rows[0] if not isinstance(rows[0][c], (dict, list))]
        lines.append("\t".join(cols))
        for r in rows:
            lines.append("\t".join(str(r[c]) for c in cols))
    for key, value in result.items():
        if key in ("multisets", "lhs_terms", "rhs_terms"):
            continue
        if key == "table":
            for n, row in enumerate(value):
                lines.append(f"c({n},k): " + " ".join(map(str, row)))
            continue
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {value}")
    lines.append(f"status: {report['status']}")
    return "\n".join(lines)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="as_json", action="store_true", help="print the JSON report")
    fmt.add_argument("--text", dest="as_json", action="store_false", help="print plain text (default)")
    common.add_argument("--out", type=Path, help="also write the JSON report to this file")

    parser = argparse.ArgumentParser(prog="coinwords", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factorize", parents=[common], help="Lyndon factorization, tuple and parity of a word")
    p.add_argument("word")

    p = sub.add_parser("involute", parents=[common], help="apply the even/odd involution to a word")
    p.add_argument("word")

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--multiset", help='single multiset, e.g. "1:2,2:1,3:1"')
    p.add_argument("--n", type=int, help="max N (coin/involution sweep) or n (cauchy/stirling)")
    p.add_argument("--k", type=int, help="restrict the stirling check to one k")
    p.add_argument("--vars", type=int, help="alphabet size / number of variables")
    p.add_argument("--degree", type=int, help="truncation degree for witt")
    p.add_argument("--threads", type=int, default=1, help="worker processes for enumeration")
    p.add_argument("--figure", type=Path, help="render a figure for the report to this file")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "factorize":
            report = cmd_factorize(args.word)
        elif args.command == "involute":
            report = cmd_involute(args.word)
        else:
            report = cmd_verify(args)
    except (WordError, UsageError, ValueError) as e:
        print(f"coinwords: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    payload = json.dumps(report, sort_keys=True, indent=2)
    if args.out:
        args.out.write_text(payload + "\n")
    print(payload if args.as_json else format_text(report))
    return EXIT_OK if report["status"] == "ok" else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
