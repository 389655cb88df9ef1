"""Command-line interface: ``twconj <command> ...``.

Exit codes: 0 on success, 1 when a verification or formula check fails,
2 on usage errors (bad arguments, unreadable or invalid input).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from .errors import TwconjError
from .finite_group import FiniteGroup, center, conjugacy_classes, parse_group_spec
from .hom_engine import enumerate_automorphisms, hom_from_generator_images, identity_hom, inner_automorphism
from .product_matrix import endo_from_spec, hom_from_spec, product_of
from .reports import _jsonable
from .twisted import reidemeister_number, reidemeister_partition, reidemeister_spectrum, twisted_stabilizer
from .verify import DEFAULT_SEED, SUITES, Options, run_suite

FORMATS = ("json", "csv", "table")


class UsageError(Exception):
    pass


# -- output -------------------------------------------------------------------

def _render(payload: dict, rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_jsonable(payload), indent=2, sort_keys=True)
    rows = [{k: _cell(v) for k, v in row.items()} for row in rows]
    if not rows:
        return ""
    header = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    widths = [max(len(h), *(len(r[h]) for r in rows)) for h in header]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)),
             "  ".join("-" * w for w in widths)]
    lines += ["  ".join(r[h].ljust(w) for h, w in zip(header, widths)) for r in rows]
    return "\n".join(lines)


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return " ".join(map(str, v))
    return str(v)


# -- input --------------------------------------------------------------------

def _load_json_arg(text: str):
    """Inline JSON (starting with ``{`` or ``[``) or a path to a JSON file."""
    if text.lstrip()[:1] in "{[":
        return json.loads(text)
    return json.loads(Path(text).read_text())


def _group(spec: str) -> FiniteGroup:
    return parse_group_spec(spec)


def _single_endo(G: FiniteGroup, spec):
    """Endomorphism of one group from ``map``/``images``/``inner``/``identity`` specs."""
    if not isinstance(spec, dict):
        return hom_from_spec(spec, G, G)
    kind = spec.get("kind", "map")
    if kind == "map":
        return hom_from_spec({k: v for k, v in spec.items() if k != "kind"}, G, G)
    if kind == "images":
        return hom_from_generator_images(G, G, spec["images"])
    if kind == "inner":
        return inner_automorphism(G, int(spec["element"]))
    if kind == "identity":
        return identity_hom(G)
    raise UsageError(f"unknown endomorphism kind {kind!r} for a single group")


# -- commands -----------------------------------------------------------------

def cmd_group_info(args) -> tuple[int, dict, list]:
    G = _group(args.group)
    classes = conjugacy_classes(G)
    orders = {}
    for o in G.element_orders.tolist():
        orders[o] = orders.get(o, 0) + 1
    payload = {"group": G.label or args.group, "order": G.order, "abelian": G.is_abelian,
               "exponent": G.exponent, "generators": list(G.generators),
               "center_order": center(G).order, "conjugacy_classes": len(classes),
               "element_orders": {str(k): v for k, v in sorted(orders.items())}}
    if args.aut:
        payload["automorphisms"] = len(enumerate_automorphisms(G))
    rows = [{"property": k, "value": v} for k, v in payload.items() if k != "element_orders"]
    rows += [{"property": f"elements of order {k}", "value": v} for k, v in sorted(orders.items())]
    return 0, payload, rows


def cmd_spectrum(args) -> tuple[int, dict, list]:
    G = _group(args.group)
    auts = enumerate_automorphisms(G)
    spec = reidemeister_spectrum(G, auts)
    counts: dict = {}
    for phi in auts:
        r = reidemeister_number(G, phi)
        counts[r] = counts.get(r, 0) + 1
    payload = {"group": G.label or args.group, "order": G.order, "automorphisms": len(auts),
               "spectrum": spec, "multiplicities": {str(r): counts[r] for r in spec}}
    rows = [{"reidemeister_number": str(r), "automorphisms": counts[r]} for r in spec]
    return 0, payload, rows


def cmd_reidemeister(args) -> tuple[int, dict, list]:
    spec = _load_json_arg(args.endo)
    if isinstance(spec, dict) and spec.get("kind") in ("diag", "perm", "wreath", "matrix"):
        if "*" not in args.group:
            raise UsageError(f"kind {spec['kind']!r} needs a product group such as S3*S3")
        args.groups = args.group.split("*")
        return cmd_product(args)
    G = _group(args.group)
    phi = _single_endo(G, spec)
    part = reidemeister_partition(G, phi)
    payload = {"group": G.label or args.group, "order": G.order, **part.to_json()}
    if args.stabilizer is not None:
        payload["stabilizer"] = list(twisted_stabilizer(G, phi, args.stabilizer).elements)
    rows = [{"class": i, "representative": c[0], "size": len(c), "elements": list(c)}
            for i, c in enumerate(part.classes)]
    return 0, payload, rows


def cmd_product(args) -> tuple[int, dict, list]:
    factors = tuple(_group(g) for g in args.groups)
    P = product_of(factors)
    spec = _load_json_arg(args.endo)
    parsed = endo_from_spec(P, spec)
    brute = reidemeister_number(P.group, parsed.endo)
    agrees = parsed.formula is None or parsed.formula == brute
    payload = {"factors": [F.label for F in factors], "order": P.group.order, "kind": parsed.kind,
               "reidemeister_number": brute, "formula": parsed.formula, "formula_agrees": agrees,
               "matrix": parsed.matrix}
    rows = [{"kind": parsed.kind, "order": P.group.order, "brute_force": brute,
             "formula": "-" if parsed.formula is None else parsed.formula, "agrees": agrees}]
    return (0 if agrees else 1), payload, rows


def cmd_verify(args) -> tuple[int, dict, list]:
    if args.samples is not None and args.samples < 1:
        raise UsageError("--samples must be positive")
    if args.max_order is not None and args.max_order < 1:
        raise UsageError("--max-order must be positive")
    opts = Options(exhaustive=args.exhaustive, samples=args.samples or 200,
                   seed=args.seed, max_order=args.max_order)
    res = run_suite(args.lemma, opts)
    payload = {**res.to_json(), "mode": "exhaustive" if args.exhaustive else "sampled",
               "seed": args.seed, "samples": None if args.exhaustive else opts.samples,
               "max_order": args.max_order}
    rows = [{"lemma": res.lemma, "passed": res.passed, "cases": res.cases,
             "failures": res.failures, "skipped": res.skipped}]
    return (0 if res.passed else 1), payload, rows


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS,
                        help="output format (default json)")

    parser = argparse.ArgumentParser(prog="twconj", parents=[common],
                                     description="Twisted conjugacy classes and Reidemeister spectra "
                                                 "of finite groups and their direct products.")
    sub = parser.add_subparsers(dest="command", required=True)

    group = sub.add_parser("group", help="group utilities")
    gsub = group.add_subparsers(dest="group_command", required=True)
    info = gsub.add_parser("info", parents=[common], help="basic invariants of a group")
    info.add_argument("group", help="preset (cyclic:3, S3, Q8, ...), JSON file or A*B product")
    info.add_argument("--aut", action="store_true", help="also count automorphisms")
    info.set_defaults(func=cmd_group_info)

    spec = sub.add_parser("spectrum", parents=[common], help="Reidemeister spectrum of a group")
    spec.add_argument("group")
    spec.set_defaults(func=cmd_spectrum)

    reid = sub.add_parser("reidemeister", parents=[common], help="twisted classes of one endomorphism")
    reid.add_argument("group")
    reid.add_argument("--endo", required=True, help="endomorphism spec: JSON file or inline JSON")
    reid.add_argument("--stabilizer", type=int, default=None, metavar="A",
                      help="also report the twisted stabilizer of element A")
    reid.set_defaults(func=cmd_reidemeister)

    prod = sub.add_parser("product", parents=[common], help="endomorphism of a direct product")
    prod.add_argument("groups", nargs="+")
    prod.add_argument("--endo", required=True, help="diag/perm/wreath/matrix spec: JSON file or inline JSON")
    prod.set_defaults(func=cmd_product)

    ver = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    ver.add_argument("lemma", choices=sorted(SUITES))
    mode = ver.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int, default=None)
    ver.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ver.add_argument("--max-order", type=int, default=None)
    ver.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, payload, rows = args.func(args)
    except (UsageError, TwconjError, ValueError, KeyError, OSError) as exc:
        # GroupTableError and the other input errors derive from these
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 2
    fmt = getattr(args, "format", "json")
    print(_render(payload, rows, fmt), file=stdout)
    if code == 1 and fmt != "json":
        print(json.dumps(_jsonable({"counterexample": payload.get("counterexample", payload)}),
                         sort_keys=True), file=stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
