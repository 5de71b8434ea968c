"""Command-line interface: ``hsbranch describe | branch | verify``.

Exit codes: 0 success, 1 verification failure or path mismatch, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .branching import (
    BranchingResult,
    branch_closed_form,
    branch_weyl_sum,
    make_parameter,
    parse_lambda,
)
from .errors import DomainError, HSBranchError, UnsupportedError, UsageError
from .hermitian import GRAMMAR_HINT, build_pair, catalog, centralizer_subsystem, format_vector, parse_pair
from .kstriple import (
    ks_data,
    render_signed_young_diagram,
    render_vogan_diagram,
    signed_young_diagram,
    vogan_diagram,
)
from .oracle import branch_oracle

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

PATH_CHOICES = {"closed": "closed_form", "weyl": "weyl_sum", "oracle": "oracle"}


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS lets the same flag appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON on standard output")
    p.add_argument("--cap", type=int, default=argparse.SUPPRESS, help="largest parameter m to report")
    p.add_argument("--path", choices=[*PATH_CHOICES, "all"], default=argparse.SUPPRESS,
                   help="branching path (default: closed)")
    p.add_argument("--fw", action="store_true", default=argparse.SUPPRESS,
                   help="read lambda as coefficients of the fundamental weights")
    p.add_argument("--max-rank", type=int, default=argparse.SUPPRESS, help="rank bound for verify --all")
    return p


def build_parser() -> argparse.ArgumentParser:
    flags = _global_flags()
    parser = argparse.ArgumentParser(
        prog="hsbranch",
        parents=[flags],
        description="Branching of holomorphic discrete series to the distinguished SL(2) subgroup.",
        epilog=GRAMMAR_HINT,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("describe", parents=[flags], help="Harish-Chandra set, Z0, constants and diagrams")
    d.add_argument("pair", help="pair, e.g. CI:n=3 (or 'list' for the catalog)")

    b = sub.add_parser("branch", parents=[flags], help="branching law of one holomorphic discrete series")
    b.add_argument("pair")
    b.add_argument("lam", metavar="lambda", nargs="?", default="rho",
                   help="comma-separated rationals in the ambient coordinates, or 'rho' (default)")

    v = sub.add_parser("verify", parents=[flags], help="run the invariant suites")
    v.add_argument("pair", nargs="?")
    v.add_argument("--all", action="store_true", help="every pair up to --max-rank plus EIII and EVII")
    return parser


def _opt(args, name, default):
    return getattr(args, name, default)


def _out(text=""):
    print(text)


def _err(text):
    print(text, file=sys.stderr)


def cmd_describe(args) -> int:
    as_json = _opt(args, "json", False)
    if args.pair == "list":
        rows = [{"family": t.family, "grammar": t.grammar, "constraint": t.constraint,
                 "real_form": t.real_form, "compact": t.compact, "example": str(t.example)} for t in catalog()]
        if as_json:
            _out(json.dumps(rows, indent=2))
        else:
            for r in rows:
                _out(f"{r['family']:5} {r['grammar']:28} {r['real_form']:9} K={r['compact']:14} ({r['constraint']})")
        return EXIT_OK
    pair = build_pair(parse_pair(args.pair))
    data = ks_data(pair)
    if as_json:
        _out(json.dumps(data.to_json(), indent=2))
        return EXIT_OK
    names = pair.coordinate_names
    _out(f"{pair.spec}  ({pair.spec.algebra_name})")
    _out(f"  Harish-Chandra set S: {', '.join(pair.format_root(g) for g in data.S)}")
    _out(f"  Z0 = {format_vector(data.Z0, names)}   coordinates ({', '.join(str(x) for x in data.Z0)})")
    if pair.spec.family not in ("EIII", "EVII"):
        _out(f"  Z0 as a diagonal matrix: diag({', '.join(str(x) for x in pair.diagonal_form(data.Z0))})")
    _out(f"  simple weights beta_j(Z0): {list(data.simple_weights)}  (noncompact node {data.noncompact_index + 1})")
    _out(f"  real rank {data.real_rank}; a = {data.a}, c = {data.c}, d+1 = {data.d_plus_1}; "
         f"{'tube' if data.tube else 'non-tube'}")
    kz = centralizer_subsystem(pair, data.Z0)
    _out(f"  K_z semisimple type: {kz.semisimple_type or 'none (torus)'}")
    _out("")
    _out("Weighted Vogan diagram:")
    _out(render_vogan_diagram(vogan_diagram(pair, data)))
    try:
        syd = signed_young_diagram(pair)
    except UnsupportedError:
        pass
    else:
        _out("")
        _out("Signed Young diagram of E0:")
        _out(render_signed_young_diagram(syd))
    return EXIT_OK


def _parameter(args):
    pair = build_pair(parse_pair(args.pair))
    text = args.lam.strip()
    if text == "rho":
        return make_parameter(pair)
    values = parse_lambda(text)
    if _opt(args, "fw", False):
        return make_parameter(pair, fundamental=values)
    return make_parameter(pair, values)


_RUNNERS = {"closed_form": branch_closed_form, "weyl_sum": branch_weyl_sum, "oracle": branch_oracle}


def cmd_branch(args) -> int:
    param = _parameter(args)
    cap = _opt(args, "cap", None)
    if cap is None:
        cap = math.floor(param.value_on_z0) + 10
    choice = _opt(args, "path", "closed")
    paths = list(_RUNNERS) if choice == "all" else [PATH_CHOICES[choice]]
    results: list[BranchingResult] = []
    skipped = {}
    for path in paths:
        try:
            results.append(_RUNNERS[path](param, cap))
        except UnsupportedError as exc:
            if choice != "all":
                raise
            skipped[path] = str(exc)
    agree = all(r.same_map(results[0]) for r in results[1:])
    if _opt(args, "json", False):
        if choice == "all":
            _out(json.dumps({"results": [r.to_json() for r in results], "skipped": skipped, "agree": agree}, indent=2))
        else:
            _out(json.dumps(results[0].to_json(), indent=2))
    else:
        _out(f"{param.pair.spec}  lambda = {param}  lambda(Z0) = {param.value_on_z0}  cap = {cap}")
        for r in results:
            body = r.format_entries() or f"(empty: {r.note})"
            _out(f"  {r.path:12} {body}")
        for path, why in skipped.items():
            _out(f"  {path:12} skipped: {why}")
        if choice == "all":
            _out("PASS" if agree else "FAIL: paths disagree")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_verify(args) -> int:
    from . import verify

    if args.all == bool(args.pair):
        raise UsageError("verify takes either a pair or --all")
    if args.all:
        checks = verify.run(max_rank=_opt(args, "max_rank", 5))
    else:
        checks = verify.run([parse_pair(args.pair)], include_rootsys=False)
    failed = [c for c in checks if not c.passed]
    if _opt(args, "json", False):
        _out(json.dumps({"passed": not failed, "total": len(checks), "failed": len(failed),
                         "checks": [c.to_json() for c in checks]}, indent=2))
    else:
        for c in failed:
            _out(f"FAIL {c.id}: {c.witness}")
        _out(f"{'PASS' if not failed else 'FAIL'}: {len(checks) - len(failed)}/{len(checks)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {"describe": cmd_describe, "branch": cmd_branch, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except DomainError as exc:
        condition = f" [{exc.condition}]" if exc.condition else ""
        _err(f"hsbranch: invalid lambda{condition}: {exc}")
        return EXIT_USAGE
    except (UsageError, UnsupportedError) as exc:
        _err(f"hsbranch: {exc}")
        return EXIT_USAGE
    except HSBranchError as exc:
        _err(f"hsbranch: internal check failed: {exc}")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
