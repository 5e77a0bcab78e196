"""Command-line interface.

Exit status: 0 on success, 1 when a verification or bound check fails,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bounds import BoundReport, check_all_bounds
from .enumeration import PROPOSITIONS, rank_trees, verify_proposition
from .errors import EcIndexError
from .families import FAMILY_PARAMS, FamilySpec, build_family, closed_form_xi
from .formats import MAX_GRAPH6_VERTICES, read_document, write_edgelist, write_graph6
from .invariants import eccentric_connectivity_index, invariant_report
from .transforms import find_lemma1_sites, find_lemma2_sites, lemma1_apply, lemma2_apply

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _num(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    return value


def _g6(g) -> str:
    return write_graph6(g) if g.n <= MAX_GRAPH6_VERTICES else "-"


def _table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [["-" if c is None else str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def _emit(out, text: str) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _load(args):
    return read_document(args.source, args.format).graphs


class _GraphFailure(EcIndexError):
    pass


def _per_graph(graphs, fn):
    results = []
    for i, g in enumerate(graphs):
        try:
            results.append(fn(g))
        except EcIndexError as exc:
            raise _GraphFailure(f"graph {i}: {exc}") from None
    return results


REPORT_FIELDS = ["n", "m", "xi", "wiener", "degree_distance", "zagreb1",
                 "min_degree", "max_degree", "radius", "diameter"]


def cmd_compute(args, out) -> int:
    graphs = _load(args)
    reports = _per_graph(graphs, invariant_report)
    if args.json:
        for i, (g, r) in enumerate(zip(graphs, reports)):
            _emit(out, json.dumps({"graph": i, "graph6": _g6(g), **r.as_dict()}))
    else:
        rows = [[i, _g6(g)] + [getattr(r, f) for f in REPORT_FIELDS] for i, (g, r) in enumerate(zip(graphs, reports))]
        _emit(out, _table(["graph", "graph6"] + REPORT_FIELDS, rows))
    return EXIT_OK


def _bound_record(i: int, r: BoundReport) -> dict:
    return {
        "graph": i,
        "bound": r.bound.value,
        "applicable": r.applicable,
        "bound_value": _num(r.bound_value),
        "xi_value": r.xi_value,
        "holds": r.holds,
        "tight": r.tight,
        "extremal_class_member": r.extremal_class_member,
        "status": r.status,
        "notes": r.notes,
    }


def _member_cell(r: BoundReport) -> str:
    if r.extremal_class_member is None:
        return "n/a"
    if r.extremal_class_member:
        return r.notes or "yes"
    return "no"


def cmd_bounds(args, out) -> int:
    graphs = _load(args)
    all_reports = _per_graph(graphs, check_all_bounds)
    status = EXIT_OK
    for i, (g, reports) in enumerate(zip(graphs, all_reports)):
        if any(r.applicable and not r.holds for r in reports):
            status = EXIT_FAIL
        if args.json:
            for r in reports:
                _emit(out, json.dumps(_bound_record(i, r)))
            continue
        rows = [[r.bound.value, _num(r.bound_value), r.xi_value, r.status, _member_cell(r)] for r in reports]
        _emit(out, f"# graph {i}: {_g6(g)} (n={g.n}, m={g.m})")
        _emit(out, _table(["bound", "bound_value", "value", "status", "class"], rows))
    return status


def _spec(args) -> FamilySpec:
    return FamilySpec(args.tag, tuple(args.params))


def cmd_family(args, out) -> int:
    g = build_family(_spec(args))
    _emit(out, write_edgelist(g) if args.edgelist else write_graph6(g))
    return EXIT_OK


def cmd_closed_form(args, out) -> int:
    _emit(out, str(closed_form_xi(_spec(args))))
    return EXIT_OK


def cmd_rank(args, out) -> int:
    ranked = rank_trees(args.n, args.order, diameter=args.diameter, pendents=args.pendents, top=args.top)
    if args.json:
        for k, (code, t, xi) in enumerate(ranked.entries, start=1):
            _emit(out, json.dumps({"rank": k, "xi": xi, "graph6": write_graph6(t), "code": str(code)}))
        return EXIT_OK
    _emit(out, f"# {ranked.scope}, order={ranked.order}")
    rows = [[k, xi, write_graph6(t)] for k, (_, t, xi) in enumerate(ranked.entries, start=1)]
    _emit(out, _table(["rank", "xi", "graph6"], rows))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    verdict = verify_proposition(args.prop, args.n_max, n_min=args.n_min, variant=args.variant)
    if args.json:
        for w in verdict.witnesses:
            _emit(out, json.dumps({"proposition": verdict.proposition, **w.params, "value": w.value,
                                   "expected_value": w.expected_value, "classes": len(w.found),
                                   "expected_classes": len(w.expected), "ok": w.ok}))
    else:
        keys = list(verdict.witnesses[0].params) if verdict.witnesses else []
        rows = [[*(w.params[k] for k in keys), w.value, w.expected_value, len(w.found), len(w.expected),
                 "ok" if w.ok else "MISMATCH"] for w in verdict.witnesses]
        _emit(out, f"# {verdict.proposition} {verdict.parameter_range}")
        _emit(out, _table(keys + ["value", "expected", "classes", "expected_classes", "verdict"], rows))
        for line in verdict.mismatches:
            _emit(out, f"mismatch: {line}")
        _emit(out, "PASSED" if verdict.passed else "FAILED")
    return EXIT_OK if verdict.passed else EXIT_FAIL


def _describe_site(site) -> str:
    if hasattr(site, "a"):
        return f"u={site.u} v={site.v} a={site.a}"
    return f"x={site.x} y={site.y} path={list(site.path)} M={list(site.m_neighbors)} N={site.n_branch_root}"


def cmd_transform(args, out) -> int:
    graphs = _load(args)
    if not graphs:
        raise EcIndexError(f"{args.source}: no graphs found")
    finder, apply = ((find_lemma1_sites, lemma1_apply) if args.lemma == "lemma1"
                     else (find_lemma2_sites, lemma2_apply))
    for i, g in enumerate(graphs):
        try:
            sites = finder(g)
        except EcIndexError as exc:
            raise _GraphFailure(f"graph {i}: {exc}") from None
        if args.site is None:
            _emit(out, f"# graph {i}: {write_graph6(g)} has {len(sites)} {args.lemma} sites")
            for k, site in enumerate(sites):
                _emit(out, f"{k}  {_describe_site(site)}")
            continue
        if not 0 <= args.site < len(sites):
            raise _GraphFailure(f"graph {i}: site index {args.site} out of range (0..{len(sites) - 1})")
        site = sites[args.site]
        result = apply(site)
        before, after = eccentric_connectivity_index(g), eccentric_connectivity_index(result)
        _emit(out, f"{write_graph6(result)}  xi {before} -> {after}  ({_describe_site(site)})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ecindex", description="Eccentric connectivity index toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p):
        p.add_argument("source", help="graph file, '-' for stdin, or g6:<graph6 string>")
        p.add_argument("--format", choices=["auto", "graph6", "edgelist"], default="auto")

    p = sub.add_parser("compute", help="invariant report per graph")
    add_source(p)
    p.add_argument("--json", action="store_true", help="line-delimited JSON records")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("bounds", help="evaluate every bound per graph")
    add_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    tags = sorted(FAMILY_PARAMS)
    p = sub.add_parser("family", help="emit a family member")
    p.add_argument("tag", choices=tags)
    p.add_argument("params", nargs="*", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--g6", action="store_true", help="graph6 output (default)")
    fmt.add_argument("--edgelist", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("closed-form", help="formula value of the index for a family member")
    p.add_argument("tag", choices=tags)
    p.add_argument("params", nargs="*", type=int)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("rank", help="rank all trees on n vertices by the index")
    p.add_argument("--n", type=int, required=True)
    constraint = p.add_mutually_exclusive_group()
    constraint.add_argument("--diameter", type=int)
    constraint.add_argument("--pendents", type=int)
    p.add_argument("--order", choices=["min", "max"], default="min")
    p.add_argument("--top", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("verify", help="exhaustively verify an extremal result")
    p.add_argument("prop", choices=PROPOSITIONS)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int)
    p.add_argument("--variant", choices=["ceil", "floor"], default="ceil",
                   help="P6 only: pendent-term rounding of the formula")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transform", help="list or apply tree transformation sites")
    p.add_argument("lemma", choices=["lemma1", "lemma2"])
    add_source(p)
    p.add_argument("--site", type=int, help="apply the site with this index (omit to list sites)")
    p.set_defaults(func=cmd_transform)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except EcIndexError as exc:
        print(f"ecindex {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
