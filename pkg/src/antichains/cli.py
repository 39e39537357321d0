"""Command-line front end.

Verbs: poly, mpoly, scan, check, interlace, peck, dot, tableaux.
Exit codes: 0 success (all pass), 1 refutation or failed check vector,
2 usage or parse error, 3 resource guard (ideal cap or wall-clock budget).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .catalog import catalan, ideal_product_formula
from .corpus import parse_corpus_file
from .errors import ExplosionError, PosetParseError
from .expressions import build_text, parse_poset_expr, recognize_minuscule
from .ideals import DEFAULT_MAX_IDEALS, ideal_poly_direct
from .polynomials import IntPoly
from .posets import chain, poset_from_hasse_text, product, to_dot
from .reports import CSV_COLUMNS, csv_row, property_report, report_lines
from .roots import (InterleaverStatus, common_interleaver_check, interlaces,
                    is_real_rooted, obreschkoff_combination_test)
from .sperner import (is_peck, is_rank_symmetric, is_rank_unimodal, is_sperner,
                      is_strongly_sperner, max_antichain_size)
from .tableaux import f_direct, f_recursive
from .transfer import (antichain_poly_k, interleaving_relation_pair,
                       iter_antichain_polys, two_row_ideal_polys)


class ResourceBudget:
    """Coarse wall-clock guard checked between scan instances."""

    def __init__(self, seconds: float):
        self.deadline = time.monotonic() + seconds

    def check(self):
        if time.monotonic() > self.deadline:
            raise ExplosionError("wall-clock budget (seconds)", 0)


def _load_poset(args):
    if getattr(args, "hasse", None):
        with open(args.hasse, encoding="utf-8") as handle:
            return args.hasse, poset_from_hasse_text(handle.read())
    if not args.expr:
        raise PosetParseError("an expression or --hasse file is required", 0)
    return args.expr, build_text(args.expr, args.max_ideals)


def _emit(args, payload: dict, text: list[str], rows: list[list[str]] | None = None,
          columns=CSV_COLUMNS) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif getattr(args, "csv", False) and rows is not None:
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(columns)
        writer.writerows(rows)
        sys.stdout.write(out.getvalue())
    else:
        print("\n".join(text))


# -- poly / mpoly -----------------------------------------------------------------


def cmd_poly(args) -> int:
    name, poset = _load_poset(args)
    poly = antichain_poly_k(poset, args.k, args.max_ideals)
    report = property_report(poly)
    payload = {"command": "poly", "expr": name, "k": args.k, "report": report}
    text = [f"N[{args.k} x ({name})] = {poly.pretty()}"] + report_lines(report)[1:]
    _emit(args, payload, text, [csv_row(name, args.k, report)])
    return 0


def cmd_mpoly(args) -> int:
    name, poset = _load_poset(args)
    direct = ideal_poly_direct(product(chain(args.k), poset), args.max_ideals)
    formula = None
    agree = None
    try:
        expr = parse_poset_expr(name)
    except PosetParseError:
        expr = None
    if expr is not None and recognize_minuscule(expr) is not None:
        formula = ideal_product_formula(poset, args.k)
        agree = formula == direct
    payload = {
        "command": "mpoly",
        "expr": name,
        "k": args.k,
        "direct": list(direct.coeffs),
        "formula": list(formula.coeffs) if formula is not None else None,
        "agree": agree,
        "evaluation_at_1": direct(1),
    }
    text = [f"M[{args.k} x ({name})] = {direct.pretty()}",
            f"  M(1) = {direct(1)}"]
    if formula is not None:
        text.append(f"  rank product formula: {formula.pretty()}")
        text.append(f"  agreement: {agree}")
    report = property_report(direct)
    _emit(args, payload, text, [csv_row(name, args.k, report)])
    return 0


# -- scan --------------------------------------------------------------------------


def _scan_instances(args, budget: ResourceBudget) -> list[dict]:
    instances: list[dict] = []
    if args.family == "gamma-table":
        for n in range(1, args.n_max + 1):
            budget.check()
            poly = antichain_poly_k(product(chain(2), chain(n)), n + 1,
                                    args.max_ideals)
            report = property_report(poly)
            identity = poly(1) == (2 * n + 1) * catalan(n) * catalan(n + 1)
            ok = (report["palindromic"] and report["monic"]
                  and report["degree"] == 2 * n and report["real_rooted"]
                  and report["gamma_positive"] and identity)
            instances.append({
                "instance": f"two-row grid n={n}", "k": n + 1, "report": report,
                "verdicts": [{"name": "palindromic-real-rooted-family",
                              "status": "verified" if ok else "refuted"}],
            })
    elif args.family == "real-rooted-two-row":
        for n in range(1, args.n_max + 1):
            grid = product(chain(2), chain(n))
            for k, poly in iter_antichain_polys(grid, args.k_max, args.max_ideals):
                budget.check()
                report = property_report(poly)
                status = "verified" if report["real_rooted"] else "refuted"
                instances.append({
                    "instance": f"two-row grid n={n}", "k": k, "report": report,
                    "verdicts": [{"name": "real-rooted-family", "status": status}],
                })
    elif args.family == "interleaver-two-row":
        for n in range(1, args.n_max + 1):
            for k in range(1, args.k_max + 1):
                budget.check()
                polys = two_row_ideal_polys(n, k)
                for s in range(n):
                    first, second = interleaving_relation_pair(polys, n, s)
                    status = "unknown"
                    if (first and second and is_real_rooted(first)
                            and is_real_rooted(second)):
                        result = common_interleaver_check(first, second, args.grid)
                        status = result.status.value
                        if result.status is InterleaverStatus.CERTIFIED:
                            status = "verified"
                    else:
                        status = "refuted"  # both sides must be real-rooted
                    instances.append({
                        "instance": f"two-row grid n={n} s={s}", "k": k,
                        "report": None,
                        "verdicts": [{"name": "common-interleaver",
                                      "status": status}],
                    })
    else:
        entries = []
        if args.corpus:
            import os
            with open(args.corpus, encoding="utf-8") as handle:
                entries = parse_corpus_file(handle.read(),
                                            os.path.dirname(args.corpus))
        elif args.expr:
            entries = [(args.expr, build_text(args.expr, args.max_ideals))]
        else:
            raise PosetParseError("scan needs --family, --expr or --corpus", 0)
        for name, poset in entries:
            try:
                expr = parse_poset_expr(name)
            except PosetParseError:
                expr = None
            minuscule = expr is not None and recognize_minuscule(expr) is not None
            for k, poly in iter_antichain_polys(poset, args.k_max, args.max_ideals):
                budget.check()
                if k < args.k_min:
                    continue
                report = property_report(poly)
                verdicts = []
                if minuscule and report["palindromic"]:
                    status = "verified" if report["gamma_positive"] else "refuted"
                    verdicts.append({"name": "palindromic-implies-gamma-positive",
                                     "status": status})
                if poset.n * k <= args.peck_cap:
                    big = product(chain(k), poset)
                    if big.is_connected() and is_peck(big):
                        status = ("verified" if report["log_concave"]
                                  else "refuted")
                        verdicts.append({"name": "peck-log-concave",
                                         "status": status})
                instances.append({"instance": name, "k": k, "report": report,
                                  "verdicts": verdicts})
    return instances


def cmd_scan(args) -> int:
    budget = ResourceBudget(args.timeout)
    instances = _scan_instances(args, budget)
    counts = {"verified": 0, "refuted": 0, "unknown": 0}
    for inst in instances:
        for verdict in inst["verdicts"]:
            counts[verdict["status"]] += 1
    payload = {"command": "scan", "family": args.family, "instances": instances,
               "counts": counts}
    text = []
    rows = []
    for inst in instances:
        verdict_text = ";".join(f"{v['name']}={v['status']}"
                                for v in inst["verdicts"]) or "-"
        if inst["report"] is not None:
            gamma = inst["report"]["gamma"]
            text.append(f"{inst['instance']} k={inst['k']}: "
                        f"{inst['report']['pretty']}  [{verdict_text}]"
                        + (f"  gamma={gamma}" if gamma is not None else ""))
            rows.append(csv_row(inst["instance"], inst["k"], inst["report"],
                                verdict_text))
        else:
            text.append(f"{inst['instance']} k={inst['k']}: [{verdict_text}]")
            rows.append([inst["instance"], str(inst["k"])] + [""] * 11
                        + [verdict_text])
    text.append(f"verified={counts['verified']} refuted={counts['refuted']} "
                f"unknown={counts['unknown']}")
    _emit(args, payload, text, rows)
    return 1 if counts["refuted"] else 0


# -- check -------------------------------------------------------------------------


def cmd_check(args) -> int:
    from .checks import builtin_vectors, run_vector
    budget = ResourceBudget(args.timeout)
    results = []
    for vector in builtin_vectors():
        budget.check()
        results.append(run_vector(vector))
    all_ok = all(r.ok for r in results)
    payload = {
        "command": "check",
        "vectors": [{"name": r.name, "ok": r.ok, "seconds": round(r.seconds, 6)}
                    for r in results],
        "all_ok": all_ok,
    }
    text = [f"{'PASS' if r.ok else 'FAIL'}  {r.name:36s} {r.seconds*1000:9.1f} ms"
            for r in results]
    text.append(f"{sum(r.ok for r in results)}/{len(results)} vectors passed")
    _emit(args, payload, text,
          [[r.name, str(r.ok), f"{r.seconds:.6f}"] for r in results],
          columns=("name", "ok", "seconds"))
    return 0 if all_ok else 1


# -- interlace -----------------------------------------------------------------------


def cmd_interlace(args) -> int:
    if args.f and args.g:
        f = IntPoly.from_csv(args.f)
        g = IntPoly.from_csv(args.g)
        verdict = interlaces(f, g)
        battery = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (1, -1), (-1, 2)]
        battery_ok = obreschkoff_combination_test(f, g, battery)
        payload = {"command": "interlace", "f": list(f.coeffs),
                   "g": list(g.coeffs), "verdict": verdict.value,
                   "combination_battery": battery_ok}
        _emit(args, payload,
              [f"f = {f.pretty()}", f"g = {g.pretty()}",
               f"verdict: {verdict.value}",
               f"combination battery: {battery_ok}"])
        return 0
    if not args.expr:
        raise PosetParseError("interlace needs --f/--g or --expr", 0)
    expr = parse_poset_expr(args.expr)
    match = recognize_minuscule(expr)
    if match is None or match.kind != "grid" or match.params[0] != 2:
        raise PosetParseError(
            "relation mode needs a two-row grid expression like C(2) x C(4)", 0)
    n = match.params[1]
    polys = two_row_ideal_polys(n, args.k)
    results = []
    refuted = 0
    for s in range(n):
        first, second = interleaving_relation_pair(polys, n, s)
        result = common_interleaver_check(first, second, args.grid)
        status = ("verified" if result.status is InterleaverStatus.CERTIFIED
                  else result.status.value)
        refuted += result.status is InterleaverStatus.REFUTED
        results.append({"s": s, "status": status,
                        "first": list(first.coeffs),
                        "second": list(second.coeffs)})
    payload = {"command": "interlace", "expr": args.expr, "k": args.k,
               "relations": results}
    _emit(args, payload,
          [f"s={r['s']}: {r['status']}" for r in results])
    return 1 if refuted else 0


# -- peck / dot / tableaux --------------------------------------------------------------


def cmd_peck(args) -> int:
    name, poset = _load_poset(args)
    verdicts = {
        "elements": poset.n,
        "connected": poset.is_connected(),
        "graded": poset.is_graded(),
    }
    if verdicts["graded"]:
        verdicts.update({
            "rank_levels": poset.rank_levels(),
            "max_antichain": max_antichain_size(poset),
            "sperner": is_sperner(poset),
            "strongly_sperner": is_strongly_sperner(poset),
            "rank_symmetric": is_rank_symmetric(poset),
            "rank_unimodal": is_rank_unimodal(poset),
            "peck": is_peck(poset),
        })
    payload = {"command": "peck", "expr": name, "verdicts": verdicts}
    _emit(args, payload, [f"{key}: {value}" for key, value in verdicts.items()])
    return 0


def cmd_dot(args) -> int:
    name, poset = _load_poset(args)
    sys.stdout.write(to_dot(poset))
    return 0


def cmd_tableaux(args) -> int:
    m = args.n if args.m is None else args.m
    if args.recursive:
        if m != args.n:
            raise PosetParseError("--recursive applies to equal row lengths", 0)
        poly = f_recursive(args.n, args.k)
    else:
        poly = f_direct(args.n, m, args.k)
    payload = {"command": "tableaux", "n": args.n, "m": m, "k": args.k,
               "recursive": bool(args.recursive),
               "coefficients": list(poly.coeffs),
               "fillings": poly(1)}
    _emit(args, payload,
          [f"f(n={args.n}, m={m}, k={args.k}) = {poly.pretty()}",
           f"  fillings: {poly(1)}"])
    return 0


# -- argument surface ---------------------------------------------------------------


def _add_common(sub, poset_input=True):
    sub.add_argument("--json", action="store_true", help="emit a JSON document")
    sub.add_argument("--csv", action="store_true", help="emit CSV")
    sub.add_argument("--max-ideals", type=int, default=DEFAULT_MAX_IDEALS,
                     help="resource cap on ideal/antichain enumeration")
    sub.add_argument("--timeout", type=float, default=600.0,
                     help="wall-clock budget in seconds")
    if poset_input:
        sub.add_argument("expr", nargs="?", help="poset expression")
        sub.add_argument("--hasse", help="read the poset from a Hasse cover file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antichains",
        description="Exact antichain generating polynomials of graded posets")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("poly", help="antichain polynomial of a k-chain product")
    _add_common(p)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(fn=cmd_poly)

    p = subs.add_parser("mpoly", help="ideal polynomial, direct and by product formula")
    _add_common(p)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(fn=cmd_mpoly)

    p = subs.add_parser("scan", help="family sweeps with conjecture verdicts")
    _add_common(p)
    p.add_argument("--family",
                   choices=("gamma-table", "real-rooted-two-row",
                            "interleaver-two-row"),
                   help="built-in sweep; otherwise use --expr/--corpus")
    p.add_argument("--corpus", help="file of poset expressions, one per line")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--k-max", type=int, default=5)
    p.add_argument("--grid", type=int, default=16,
                   help="density of the interleaver refutation grid")
    p.add_argument("--peck-cap", type=int, default=40,
                   help="largest product size for Peck verdicts in sweeps")
    p.set_defaults(fn=cmd_scan)

    p = subs.add_parser("check", help="run the built-in reference vector suite")
    _add_common(p, poset_input=False)
    p.set_defaults(fn=cmd_check)

    p = subs.add_parser("interlace", help="interlacing and common interleavers")
    _add_common(p)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--f", help="comma-separated coefficients, constant first")
    p.add_argument("--g", help="comma-separated coefficients, constant first")
    p.add_argument("--grid", type=int, default=16)
    p.set_defaults(fn=cmd_interlace)

    p = subs.add_parser("peck", help="Sperner and Peck property report")
    _add_common(p)
    p.set_defaults(fn=cmd_peck)

    p = subs.add_parser("dot", help="DOT rendering of the Hasse diagram")
    _add_common(p)
    p.set_defaults(fn=cmd_dot)

    p = subs.add_parser("tableaux", help="two-row weighted tableau polynomials")
    _add_common(p, poset_input=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--recursive", action="store_true",
                   help="use the level recursion instead of the column DP")
    p.set_defaults(fn=cmd_tableaux)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except PosetParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ExplosionError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
