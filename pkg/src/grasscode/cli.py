"""Command line front end: ``grasscode <count|enumerate|verify|equiv|aut> [flags]``.

Exit codes: 0 success/verified, 1 verified false or violations found,
2 usage error, 3 resource guard hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import codespace as cs
from .automorphism import automorphism_group_order
from .codegraph import build_graph, check_graph_params
from .equiv import MODES, are_equivalent, is_automorphism, monomial_image
from .errors import GrasscodeError, SearchSpaceTooLarge
from .gf import make_field
from .verify import VERIFIERS, analyze_sections, separation_sweep

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(GrasscodeError):
    pass


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("GRASSCODE_THREADS")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        raise UsageError(f"GRASSCODE_THREADS must be an integer, got {env!r}") from None


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        if args.no_meta:
            payload.pop("elapsed_ms", None)
        print(json.dumps(payload))
    else:
        print(text)


def _params(args) -> dict:
    return {"n": args.n, "k": args.k, "q": args.q}


def _require_nkq(args) -> None:
    if args.n is None or args.k is None or args.q is None:
        raise UsageError("--n, --k and --q are required")


def cmd_count(args) -> int:
    _require_nkq(args)
    make_field(args.q)
    if not 1 <= args.k <= args.n:
        raise UsageError("need 1 <= k <= n")
    t0 = time.perf_counter()
    formula = cs.count_nondegenerate(args.n, args.k, args.q)
    enumerated = sum(1 for _ in cs.enumerate_codes(args.n, args.k, args.q))
    match = formula == enumerated
    payload = {
        "schema": 1,
        "command": "count",
        "params": _params(args),
        "gaussian": cs.gaussian(args.n, args.k, args.q),
        "formula": formula,
        "enumerated": enumerated,
        "match": match,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3),
    }
    text = f"C({args.n},{args.k})_{args.q}: {formula} (inclusion-exclusion), {enumerated} (enumeration) " + (
        "cross-check OK" if match else "MISMATCH")
    _emit(args, payload, text)
    return EXIT_OK if match else EXIT_FALSE


def cmd_enumerate(args) -> int:
    _require_nkq(args)
    make_field(args.q)
    if not 1 <= args.k <= args.n:
        raise UsageError("need 1 <= k <= n")
    source = cs.enumerate_grassmannian if args.all else cs.enumerate_codes
    codes = list(source(args.n, args.k, args.q))
    payload = {
        "schema": 1,
        "command": "enumerate",
        "params": _params(args),
        "nondegenerate_only": not args.all,
        "count": len(codes),
        "codes": [[list(r) for r in S.gen] for S in codes],
    }
    text = "\n".join(cs.format_matrix(S.gen) for S in codes).rstrip("\n")
    _emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    lemma = args.lemma
    if args.matrix is not None:
        if lemma != "top-sections":
            raise UsageError("--matrix is only supported with --lemma top-sections")
        if args.q is None:
            raise UsageError("--q is required")
        rows = cs.read_matrix(args.matrix, args.q)
        report = analyze_sections(rows, args.q)
    elif lemma == "separation" and args.sweep:
        report = separation_sweep()
    else:
        _require_nkq(args)
        check_graph_params(args.n, args.k, args.q)
        fn = VERIFIERS[lemma]
        kwargs = {"workers": _threads(args)} if lemma in ("star-size", "top-bounds", "top-sections") else {}
        report = fn(args.n, args.k, args.q, **kwargs)
    payload = report.to_dict(meta=not args.no_meta)
    status = "OK" if report.ok else f"{len(report.violations)} violation(s)"
    extra = ""
    if "distinct_sections" in report.details:
        extra = f", {report.details['distinct_sections']} distinct sections, top size {report.details['top_size']}"
    text = f"{lemma} {report.params}: checked {report.checked_count}{extra}: {status}"
    _emit(args, payload, text)
    return EXIT_OK if report.ok else EXIT_FALSE


def cmd_equiv(args) -> int:
    F = make_field(args.q)
    A = cs.canonicalize(F, cs.read_matrix(args.a, args.q))
    B = cs.canonicalize(F, cs.read_matrix(args.b, args.q))
    if (A.n, A.k) != (B.n, B.k):
        payload = {"schema": 1, "command": "equiv", "mode": args.mode, "equivalent": False,
                   "reason": "different (n, k)"}
        _emit(args, payload, "inequivalent")
        return EXIT_FALSE
    witness = are_equivalent(A, B, args.mode, max_n=args.max_n)
    payload = {"schema": 1, "command": "equiv", "mode": args.mode, "equivalent": witness is not None,
               "witness": witness.to_json() if witness is not None else None}
    _emit(args, payload, json.dumps(witness.to_json()) if witness is not None else "inequivalent")
    return EXIT_OK if witness is not None else EXIT_FALSE


def cmd_aut(args) -> int:
    _require_nkq(args)
    check_graph_params(args.n, args.k, args.q)
    if cs.count_nondegenerate(args.n, args.k, args.q) > args.max_vertices:
        raise SearchSpaceTooLarge(
            f"{cs.count_nondegenerate(args.n, args.k, args.q)} vertices exceed the guard {args.max_vertices}")
    t0 = time.perf_counter()
    G = build_graph(args.n, args.k, args.q)
    order = automorphism_group_order(G, max_vertices=args.max_vertices)
    images = {mode: monomial_image(G, mode) for mode in MODES}
    induced_ok = all(is_automorphism(G.adj, p) for p in images["generalized"])
    image_order = len(images[args.mode])
    match = induced_ok and image_order == order
    payload = {
        "schema": 1,
        "command": "aut",
        "params": _params(args),
        "vertices": len(G),
        "automorphism_order": order,
        "mode": args.mode,
        "monomial_image_order": image_order,
        "monomial_image_orders": {mode: len(p) for mode, p in images.items()},
        "induced_maps_are_automorphisms": induced_ok,
        "match": match,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3),
    }
    text = (f"|Aut(Gamma({args.n},{args.k})_{args.q})| = {order}; {args.mode} monomial image = {image_order}: "
            + ("match" if match else "MISMATCH"))
    _emit(args, payload, text)
    return EXIT_OK if match else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grasscode", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--no-meta", action="store_true", help="omit timing fields from JSON output")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes for sweeps (default: $GRASSCODE_THREADS or 1)")
    nkq = argparse.ArgumentParser(add_help=False)
    nkq.add_argument("--n", type=int)
    nkq.add_argument("--k", type=int)
    nkq.add_argument("--q", type=int)

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("count", parents=[common, nkq], help="inclusion-exclusion count with enumeration cross-check")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", parents=[common, nkq], help="list canonical generator matrices")
    p.add_argument("--all", action="store_true", help="include degenerate subspaces")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common, nkq], help="run an exhaustive verifier")
    p.add_argument("--lemma", required=True, choices=sorted(VERIFIERS))
    p.add_argument("--matrix", help="generator matrix file (top-sections only)")
    p.add_argument("--sweep", action="store_true", help="separation: q in 2..5, n in 4..12")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("equiv", parents=[common], help="decide monomial equivalence of two codes")
    p.add_argument("--a", required=True, metavar="MATRIX_A")
    p.add_argument("--b", required=True, metavar="MATRIX_B")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default="strict")
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("aut", parents=[common, nkq], help="automorphism group order vs monomial image")
    p.add_argument("--mode", choices=MODES, default="strict")
    p.add_argument("--max-vertices", type=int, default=64)
    p.set_defaults(func=cmd_aut)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SearchSpaceTooLarge as exc:
        print(f"error: SearchSpaceTooLarge: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (GrasscodeError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
