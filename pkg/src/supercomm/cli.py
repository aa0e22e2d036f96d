"""Command-line front end.

    supercomm group --family dihedral --n 3
    supercomm graph --family u6n --n 2 --relation conjugacy --format json
    supercomm verify --family all --relation all --max-order 400 --out report.csv
    supercomm check-graph tests/fixtures/k15_k3.edges

Exit codes: 0 success, 1 a verification or inequality check failed,
2 bad input or I/O failure, 3 no catalog entry when ``--expect-catalog`` is set.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import BudgetExceeded, InvalidParams, NotCliqueJoin, OrderMismatch, PresentationSyntaxError, UnknownGenerator
from .graph import parse_edge_list, super_commuting_graph, to_dot, to_edge_list
from .group import center, conjugacy_partition, enumerate_group, order_partition
from .presentation import Family, FamilySpec, family_presentation, parse_presentation
from .structure import RELATIONS, predicted_form, recognize_form, render_form
from .verify import PARTITIONS, records_to_csv, records_to_json, run_sweep, summarize
from .zagreb import hansen_check

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CATALOG = 0, 1, 2, 3

_INPUT_ERRORS = (InvalidParams, PresentationSyntaxError, UnknownGenerator, BudgetExceeded, OrderMismatch)


class _InputError(Exception):
    pass


def _spec_from_args(args):
    try:
        return FamilySpec.of(args.family, n=args.n, m=args.m)
    except InvalidParams as exc:
        raise _InputError(f"InvalidParams: {exc}") from None


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise _InputError(f"cannot write {path}: {exc}") from None


def _dumps(obj):
    return json.dumps(obj, indent=2) + "\n"


def cmd_group(args):
    if args.present is not None:
        try:
            G = enumerate_group(parse_presentation(args.present))
        except _INPUT_ERRORS as exc:
            raise _InputError(f"{type(exc).__name__}: {exc}") from None
        source = args.present
    else:
        if args.family is None:
            raise _InputError("give --family (with --n/--m) or --present")
        spec = _spec_from_args(args)
        try:
            G = enumerate_group(family_presentation(spec), spec.expected_order())
        except _INPUT_ERRORS as exc:
            raise _InputError(f"{type(exc).__name__}: {exc}") from None
        source = str(spec)
    info = {
        "group": source,
        "order": G.size,
        "center": len(center(G)),
        "conjugacy_classes": conjugacy_partition(G).block_sizes(),
        "order_classes": order_partition(G).block_sizes(),
    }
    if args.format == "json":
        text = _dumps(info)
    else:
        text = "".join(f"{k.replace('_', ' ')}: {v}\n" for k, v in info.items())
    _emit(text, args.out)
    return EXIT_OK


def cmd_graph(args):
    spec = _spec_from_args(args)
    relation = args.relation
    if args.expect_catalog:
        try:
            predicted_form(spec, relation)
        except LookupError as exc:
            print(f"not in catalog: {exc}", file=sys.stderr)
            return EXIT_CATALOG
    try:
        G = enumerate_group(family_presentation(spec), spec.expected_order())
    except _INPUT_ERRORS as exc:
        raise _InputError(f"{type(exc).__name__}: {exc}") from None
    g = super_commuting_graph(G, PARTITIONS[relation](G))
    if args.format == "dot":
        text = to_dot(g, name=f"{spec.family.value}_{relation}")
    elif args.format == "edges":
        text = to_edge_list(g)
    else:
        try:
            form = render_form(recognize_form(g))
        except NotCliqueJoin:
            form = None
        text = _dumps({
            "family": spec.family.value,
            "params": spec.label,
            "relation": relation,
            "n_vertices": g.n_vertices,
            "n_edges": g.n_edges,
            "form": form,
            "zagreb": hansen_check(g).to_json(),
            "edges": [list(e) for e in g.edges()],
        })
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args):
    if args.max_order < 6:
        raise _InputError("--max-order must be at least 6")
    family = None if args.family == "all" else Family.parse(args.family)
    relations = RELATIONS if args.relation == "all" else (args.relation,)
    records = run_sweep(family, relations, args.max_order)
    if args.format == "json":
        text = _dumps(records_to_json(records, args.max_order))
    else:
        text = records_to_csv(records)
    _emit(text, args.out)
    summary = summarize(records)
    print(
        "records={records} skipped={skipped} forms_mismatch={forms_mismatch} "
        "values_mismatch={values_mismatch} conjecture_fail={conjecture_fail}".format(**summary),
        file=sys.stderr,
    )
    return EXIT_OK if summary["ok"] else EXIT_FAIL


def cmd_check_graph(args):
    try:
        with open(args.path, encoding="utf-8") as fh:
            g = parse_edge_list(fh.read())
    except (OSError, UnicodeDecodeError, ValueError) as exc:
        raise _InputError(f"cannot read edge list {args.path}: {exc}") from None
    if g.n_vertices == 0:
        raise _InputError("the inequality needs at least one vertex")
    report = hansen_check(g)
    if args.format == "json":
        text = _dumps(report.to_json())
    else:
        verdict = "vacuous (no edges)" if report.vacuous else ("holds" if report.holds else "fails")
        text = (
            f"vertices: {report.n_vertices}\nedges: {report.n_edges}\n"
            f"M1: {report.m1}\nM2: {report.m2}\n"
            f"margin (M2*|V| - M1*|E|): {report.margin_numerator}\n"
            f"inequality: {verdict}\n"
        )
    _emit(text, args.out)
    return EXIT_OK if report.holds else EXIT_FAIL


def _add_family_args(p, allow_all=False):
    choices = [f.value for f in Family] + (["all"] if allow_all else [])
    p.add_argument("--family", choices=choices, default="all" if allow_all else None)
    if not allow_all:
        p.add_argument("--n", type=int)
        p.add_argument("--m", type=int)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="supercomm",
        description="Super commuting graphs of finite groups and their Zagreb indices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="enumerate a group and print its class data")
    _add_family_args(p)
    p.add_argument("--present", help='presentation text, e.g. "<a,b | a^3=b^2=1, b*a*b^-1=a^-1>"')
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("graph", help="emit a super commuting graph")
    _add_family_args(p)
    p.add_argument("--relation", choices=list(RELATIONS), default="equality")
    p.add_argument("--format", choices=["dot", "edges", "json"], default="json")
    p.add_argument("--expect-catalog", action="store_true",
                   help="exit 3 if no structure is catalogued for this family and relation")
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="sweep every catalogued family up to a group order")
    _add_family_args(p, allow_all=True)
    p.add_argument("--relation", choices=list(RELATIONS) + ["all"], default="all")
    p.add_argument("--max-order", type=int, default=400)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-graph", help="test the Zagreb inequality on an edge-list file")
    p.add_argument("path")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check_graph)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, matching the bad-input code
        return int(exc.code or 0)
    if getattr(args, "family", None) is None and args.command == "graph":
        print("error: graph needs --family", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
