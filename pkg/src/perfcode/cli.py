"""Command-line front end: ``perfcode check | verify | group-info``.

Exit codes: 0 success, 2 parse error or unknown suite, 3 semantic error
(e.g. a generator outside the group), 4 bound exceeded, 5 counterexample.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import __version__
from .errors import (
    BoundExceededError,
    DegreeMismatchError,
    HypothesisError,
    NotInGroupError,
    ParseError,
)
from .groupspec import GroupSpec
from .oracle import DEFAULT_INDEX_BOUND, DEFAULT_SMALL_GROUP, find_admissible_connection_set
from .perfectcode import basic_criterion, every_subgroup_is_perfect_code, is_perfect_code
from .permgroup import (
    Permutation,
    PermutationGroup,
    cyclic_subgroups,
    format_cycles,
    generated_subgroup,
    is_abelian,
    is_cyclic,
    is_dihedral,
    is_elementary_abelian,
    parse_cycles,
    sylow,
    two_part,
)
from .psl2 import PslCase, psl2, theorem_psl_classify
from .suites import SUITES, run_suite, subgroup_label

SCHEMA_VERSION = 1

EXIT_OK, EXIT_PARSE, EXIT_SEMANTIC, EXIT_BOUND, EXIT_COUNTEREXAMPLE = 0, 2, 3, 4, 5

log = logging.getLogger("perfcode")


def parse_subgroup_generators(text: str, G: PermutationGroup) -> list[Permutation]:
    gens = []
    for part in (t.strip() for t in text.split(";")):
        if not part:
            continue
        p = parse_cycles(part)
        if p.degree > G.degree:
            raise NotInGroupError(f"{part} moves points beyond degree {G.degree}")
        gens.append(parse_cycles(part, G.degree))
    return gens


def _psl_q(spec: GroupSpec) -> int | None:
    return spec.param if spec.family == "psl2" else None


def _report_fields(report) -> dict:
    return {
        "is_perfect_code": report.is_perfect_code,
        "path": report.path.value,
        "reduction_trace": [[label, order] for label, order in report.reduction_trace],
    }


def cmd_check(args) -> tuple[dict, int]:
    spec = GroupSpec.parse(args.group)
    G = spec.build(args.max_order)
    doc: dict = {
        "schema": SCHEMA_VERSION,
        "command": "check",
        "input": {"group": spec.format(), "subgroup": args.subgroup},
        "group_order": G.order,
    }
    if args.subgroup_order_sample:
        doc["rows"] = _cyclic_sweep(spec, G)
        doc["all_agree"] = all(row.get("agrees", True) for row in doc["rows"])
        return doc, EXIT_OK
    if args.subgroup is None:
        raise ParseError("check needs --subgroup or --subgroup-order-sample")
    H = generated_subgroup(G, parse_subgroup_generators(args.subgroup, G))
    report = is_perfect_code(G, H)
    doc["subgroup_order"] = H.order
    doc.update(_report_fields(report))
    doc["witness"] = None
    doc["oracle_witness"] = None
    within_oracle = G.order // H.order <= args.oracle_bound or G.order <= DEFAULT_SMALL_GROUP
    if args.witness:
        if report.witness is not None:
            doc["witness"] = format_cycles(report.witness)
        elif within_oracle:
            S = find_admissible_connection_set(G, H, index_bound=args.oracle_bound)
            doc["oracle_witness"] = None if S is None else S.to_strings()
    if args.cross_check:
        basic = basic_criterion(G, H).is_perfect_code
        oracle = None
        if within_oracle:
            oracle = find_admissible_connection_set(G, H, index_bound=args.oracle_bound) is not None
        agree = basic == report.is_perfect_code and oracle in (None, basic)
        doc["cross_check"] = {"basic_criterion": basic, "oracle": oracle, "agree": agree}
    return doc, EXIT_OK


def _cyclic_sweep(spec: GroupSpec, G: PermutationGroup) -> list[dict]:
    q = _psl_q(spec)
    Gq = psl2(q) if q is not None and q % 8 in (1, 7) else None
    rows = []
    for C in cyclic_subgroups(G):
        report = is_perfect_code(G, C)
        row = {
            "subgroup": subgroup_label(C),
            "order": C.order,
            "is_perfect_code": report.is_perfect_code,
            "path": report.path.value,
        }
        if Gq is not None:
            case, predicted = theorem_psl_classify(Gq, C)
            row["psl_case"] = case.value
            row["agrees"] = predicted == report.is_perfect_code
        rows.append(row)
    return rows


def cmd_group_info(args) -> tuple[dict, int]:
    spec = GroupSpec.parse(args.group)
    G = spec.build(args.max_order)
    P = sylow(G, 2)
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "group-info",
        "input": {"group": spec.format()},
        "order": G.order,
        "degree": G.degree,
        "two_part": two_part(G.order),
        "sylow2": {
            "order": P.order,
            "generators": [format_cycles(g) for g in P.generators],
            "cyclic": is_cyclic(P),
            "abelian": is_abelian(P),
            "dihedral": is_dihedral(P),
            "elementary_abelian": is_elementary_abelian(P),
        },
        "every_subgroup_is_perfect_code": every_subgroup_is_perfect_code(G),
    }
    q = _psl_q(spec)
    if q is not None:
        Gq = psl2(q)
        doc["field"] = {"p": Gq.field.p, "k": Gq.field.k, "modulus": list(Gq.field.modulus)}
    return doc, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [
        run_suite(name, max_order=args.max_order, oracle_bound=args.oracle_bound, seed=args.seed)
        for name in names
    ]
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "verify",
        "input": {"suite": args.suite, "max_order": args.max_order,
                  "oracle_bound": args.oracle_bound, "seed": args.seed},
        "suites": [r.summary() | {"tested": [list(t) for t in r.tested]} for r in results],
        "ok": all(r.ok for r in results),
    }
    return doc, EXIT_OK if doc["ok"] else EXIT_COUNTEREXAMPLE


def render_text(doc: dict) -> str:
    lines = []
    if doc["command"] == "verify":
        for s in doc["suites"]:
            status = "PASS" if s["ok"] else "FAIL"
            lines.append(f"{status} {s['suite']}: {s['pairs_tested']} pairs, "
                         f"{s['checks']} checks, {len(s['failures'])} counterexamples")
            for f in s["failures"]:
                lines.append("  counterexample: " + json.dumps(f, sort_keys=True))
        return "\n".join(lines)
    for key, value in doc.items():
        if key in ("schema", "rows"):
            continue
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {value}")
    for row in doc.get("rows", []):
        extra = f"  {row['psl_case']:<15} agrees={row['agrees']}" if "psl_case" in row else ""
        lines.append(f"  {row['subgroup']:<30} order={row['order']:<5} "
                     f"perfect_code={row['is_perfect_code']!s:<5} {row['path']}{extra}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="perfcode", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--oracle-bound", type=int, default=DEFAULT_INDEX_BOUND,
                       help="largest index the connection-set search accepts")

    check = sub.add_parser("check", help="decide whether a subgroup is a perfect code")
    check.add_argument("--group", required=True, help="e.g. sym:6, psl2:7, gens:4:(1 2 3 4)")
    check.add_argument("--subgroup", help='semicolon-separated generators, e.g. "(1 2)(3 5);(3 4 5)"')
    check.add_argument("--subgroup-order-sample", choices=("cyclic",),
                       help="sweep every cyclic subgroup instead of a single one")
    check.add_argument("--witness", action="store_true")
    check.add_argument("--cross-check", action="store_true")
    check.add_argument("--max-order", type=int, help="closure cap for building the group")
    common(check)
    check.set_defaults(func=cmd_check)

    info = sub.add_parser("group-info", help="order, Sylow 2-subgroup structure and global verdict")
    info.add_argument("--group", required=True)
    info.add_argument("--max-order", type=int, help="closure cap for building the group")
    common(info)
    info.set_defaults(func=cmd_group_info)

    verify = sub.add_parser("verify", help="run a verification suite over the built-in corpus")
    verify.add_argument("suite", choices=list(SUITES) + ["all"])
    verify.add_argument("--max-order", type=int, help="largest corpus group order to include")
    verify.add_argument("--seed", type=int, help="seed for sampled PSL(2,17) subgroups")
    common(verify)
    verify.set_defaults(func=cmd_verify, oracle_bound=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    start = time.perf_counter()
    try:
        doc, code = args.func(args)
    except (ParseError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotInGroupError, HypothesisError, DegreeMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    doc["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    if args.format == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(render_text(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
