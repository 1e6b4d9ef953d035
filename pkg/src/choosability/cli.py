"""Command-line front end: construct, solve, bounds, exact, probe, verify.

Exit codes: 0 success (and "colorable" for solve), 1 not colorable (solve
only), 2 usage or validation errors, including refused oracle searches.
Primary output is byte-deterministic for identical flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds as bounds_mod
from . import construction, formats, oracle, solver
from .bounds import AdmissibilityViolated
from .formats import FormatError
from .gf import NotPrimePower, OrderUnavailable
from .oracle import SearchTooLarge

EXIT_OK = 0
EXIT_NOT_COLORABLE = 1
EXIT_ERROR = 2


def _search_cap() -> int:
    raw = os.environ.get("CHOOSABILITY_SEARCH_CAP")
    if raw is None:
        return oracle.DEFAULT_SEARCH_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"CHOOSABILITY_SEARCH_CAP must be an integer, got {raw!r}")


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        formats.write_atomic(out_path, text)


def _read(path: str) -> str:
    with open(path, "r") as handle:
        return handle.read()


# -- construct -------------------------------------------------------------

def cmd_construct(args) -> int:
    assignment = construction.hard_instance(args.q, args.c)
    if args.format == "json":
        text = formats.dumps_instance(assignment)
    else:
        text = formats.instance_to_text(assignment)
    _emit(text, args.out)
    return EXIT_OK


# -- solve -----------------------------------------------------------------

def cmd_solve(args) -> int:
    assignment = formats.loads_instance(_read(args.instance))
    result = solver.colorable(assignment)
    if result.colorable and not solver.verify_coloring(assignment, result.coloring):
        raise AssertionError("solver produced a coloring that fails verification")
    _emit(formats.dumps_certificate(result), args.out)
    return EXIT_OK if result.colorable else EXIT_NOT_COLORABLE


# -- bounds ----------------------------------------------------------------

def _parse_range(text: str) -> tuple[int, int]:
    lo_hi = text.split("..")
    if len(lo_hi) != 2:
        raise ValueError(f"range must look like 10..15, got {text!r}")
    try:
        lo, hi = int(lo_hi[0]), int(lo_hi[1])
    except ValueError:
        raise ValueError(f"range endpoints must be integers, got {text!r}")
    if lo < 1 or hi < lo:
        raise ValueError(f"invalid range {text!r}: need 1 <= lo <= hi")
    return lo, hi


def _bounds_row(n: int, c: int) -> dict:
    report = bounds_mod.bounds_report(n, c)
    ktv_lo, ktv_hi = bounds_mod.ktv_reference_bounds(n, c)
    return {
        "n": report.n,
        "c": report.c,
        "lower": report.lower,
        "lower_provenance": report.lower_provenance,
        "upper": report.upper,
        "upper_provenance": report.upper_provenance,
        "exact": report.exact,
        "ktv": [ktv_lo, ktv_hi],
    }


def cmd_bounds(args) -> int:
    if args.range is not None:
        lo, hi = _parse_range(args.range)
    else:
        if args.n < 1:
            raise ValueError(f"need n >= 1, got {args.n}")
        lo = hi = args.n
    rows = [_bounds_row(n, args.c) for n in range(lo, hi + 1)]
    if args.json:
        sys.stdout.write(json.dumps(rows, separators=(",", ":")) + "\n")
        return EXIT_OK
    header = (f"{'n':>6}  {'c':>3}  {'lower':>5}  {'provenance':<12}  "
              f"{'upper':>5}  {'provenance':<14}  {'exact':>5}  "
              f"{'ktv-low':>9}  {'ktv-high':>9}")
    lines = [header]
    for row in rows:
        exact = str(row["exact"]) if row["exact"] is not None else "-"
        lines.append(
            f"{row['n']:>6}  {row['c']:>3}  {row['lower']:>5}  "
            f"{row['lower_provenance']:<12}  {row['upper']:>5}  "
            f"{row['upper_provenance']:<14}  {exact:>5}  "
            f"{row['ktv'][0]:>9.3f}  {row['ktv'][1]:>9.3f}"
        )
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


# -- exact -----------------------------------------------------------------

def cmd_exact(args) -> int:
    result = oracle.chi_l_complete_search(args.n, args.c, cap=_search_cap())
    defeated = ([list(lst) for lst in result.defeated_by]
                if result.defeated_by is not None else None)
    if args.json:
        payload = {
            "n": result.n,
            "c": result.c,
            "chi_l": result.chi_l,
            "defeated_by": defeated,
            "assignments_checked": result.assignments_checked,
        }
        sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(f"chi_l(K_{result.n}, c={result.c}) = {result.chi_l}\n")
        sys.stdout.write(f"assignments checked: {result.assignments_checked}\n")
        if defeated is not None:
            shown = " ".join(str(lst) for lst in defeated)
            sys.stdout.write(f"list size {result.chi_l - 1} defeated by: {shown}\n")
    return EXIT_OK


# -- probe -----------------------------------------------------------------

def cmd_probe(args) -> int:
    report = oracle.conjecture_probe(args.nmax, args.c, cap=_search_cap())
    if args.json:
        counterexample = None
        if report.counterexample is not None:
            graph, assignment = report.counterexample
            counterexample = {
                "n": graph.n,
                "edges": [list(edge) for edge in graph.edges],
                "assignment": [list(lst) for lst in assignment],
            }
        payload = {
            "n_max": report.n_max,
            "c": report.c,
            "complete_values": {str(n): k for n, k in sorted(report.complete_values.items())},
            "counterexample": counterexample,
            "graphs_checked": report.graphs_checked,
            "assignments_checked": report.assignments_checked,
        }
        sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")
        return EXIT_OK
    if report.counterexample is None:
        sys.stdout.write(
            f"no counterexample among all labeled graphs with up to "
            f"{report.n_max} vertices (c={report.c})\n"
        )
    else:
        graph, assignment = report.counterexample
        sys.stdout.write(
            f"COUNTEREXAMPLE: graph on {graph.n} vertices, edges {list(graph.edges)}, "
            f"assignment {[list(lst) for lst in assignment]}\n"
        )
    values = " ".join(f"K_{n}={k}" for n, k in sorted(report.complete_values.items()))
    sys.stdout.write(f"complete-graph values: {values}\n")
    sys.stdout.write(
        f"graphs checked: {report.graphs_checked}, "
        f"assignments checked: {report.assignments_checked}\n"
    )
    return EXIT_OK


# -- verify ----------------------------------------------------------------

def _certificate_consistent(assignment, certificate) -> tuple[bool, str]:
    if certificate.colorable:
        if solver.verify_coloring(assignment, certificate.coloring):
            return True, "coloring is proper and drawn from the lists"
        return False, "coloring is not a proper coloring of the instance"
    violator_s, claimed_neighborhood = certificate.violator
    if not violator_s:
        return False, "violator set is empty"
    if len(set(violator_s)) != len(violator_s) or not all(
            0 <= v < assignment.n for v in violator_s):
        return False, "violator set references vertices outside the instance"
    actual: set[int] = set()
    for v in violator_s:
        actual.update(assignment.lists[v])
    if tuple(sorted(actual)) != tuple(sorted(claimed_neighborhood)):
        return False, "claimed neighborhood differs from the recounted one"
    if len(actual) >= len(violator_s):
        return False, "claimed violator does not violate Hall's condition"
    return True, "violator recount confirms |N(S)| < |S|"


def cmd_verify(args) -> int:
    assignment = formats.loads_instance(_read(args.instance))
    report = solver.validate_assignment(assignment, assignment.k, assignment.c)
    cert_ok = None
    cert_note = None
    if args.certificate is not None:
        certificate = formats.loads_certificate(_read(args.certificate))
        cert_ok, cert_note = _certificate_consistent(assignment, certificate)
    if args.json:
        payload = {
            "valid": report.valid,
            "bad_vertex": report.bad_vertex,
            "bad_pair": list(report.bad_pair) if report.bad_pair else None,
            "overlap": report.overlap,
            "certificate_consistent": cert_ok,
        }
        sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")
    else:
        if report.valid:
            sys.stdout.write(
                f"valid ({assignment.k},{assignment.c})-assignment: "
                f"n={assignment.n} num_colors={assignment.num_colors}\n"
            )
        elif report.bad_vertex is not None:
            sys.stdout.write(
                f"invalid: lists[{report.bad_vertex}] has size "
                f"{len(assignment.lists[report.bad_vertex])}, expected {assignment.k}\n"
            )
        else:
            u, v = report.bad_pair
            sys.stdout.write(
                f"invalid: lists[{u}] and lists[{v}] overlap in "
                f"{report.overlap} > {assignment.c} colors\n"
            )
        if cert_ok is not None:
            status = "consistent" if cert_ok else "INCONSISTENT"
            sys.stdout.write(f"certificate {status}: {cert_note}\n")
    ok = report.valid and (cert_ok is not False)
    return EXIT_OK if ok else EXIT_ERROR


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="choosability",
        description="Extremal list assignments on complete graphs: "
                    "construct hard instances, decide colorability with "
                    "certificates, and tabulate bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="write the finite-field hard instance for (q, c)")
    p.add_argument("--q", type=int, required=True, help="prime power")
    p.add_argument("--c", type=int, required=True, help="pairwise intersection cap")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("solve", help="decide colorability of an instance file")
    p.add_argument("instance", help="instance JSON path")
    p.add_argument("--out", help="certificate path (default: stdout)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bounds", help="lower/upper/exact bound table")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="single n")
    group.add_argument("--range", help="inclusive range, e.g. 10..15")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("exact", help="exhaustive exact value for K_n (desk scale)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("probe", help="exhaustive check that no small graph "
                                     "needs larger lists than K_n")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("verify", help="validate an instance file and optionally "
                                      "a certificate against it")
    p.add_argument("instance", help="instance JSON path")
    p.add_argument("certificate", nargs="?", help="certificate JSON path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except (FormatError, AdmissibilityViolated, SearchTooLarge, OrderUnavailable,
            NotPrimePower, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
