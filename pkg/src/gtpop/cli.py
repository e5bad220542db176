"""Command-line front end: every operation as a subcommand, JSON out.

Sequences on flags are comma-separated integers; nested structures are
inline JSON strings or ``@path`` references to JSON files.  Exactly one
JSON document is emitted per invocation.  Exit codes: 0 success, 1
contract violation (the diagnostic carries a machine-readable
"constraint" field), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .errors import ContractViolation
from .maxarea import max_area_pattern
from .partition import BreakResult, ColoredPartition, Partition, break_multi, break_multi_inv
from .pattern import GTPattern, diagnose, enumerate_patterns
from .pop import (
    CLEntry,
    CLIndex,
    POP,
    diagnose_overlay,
    enumerate_pops,
    from_cl_index,
    graded_character,
    render_cl_monomial,
    to_cl_index,
    top_grade_profile,
)
from .seqcore import norm_sq
from .stability import (
    AONP,
    complement_pop,
    cp_to_pop,
    embed,
    phi,
    stable_range,
    xi,
    xi_inv,
)
from .verify import SUITES


def _parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(tok) for tok in text.split(","))


def _load_json(text: str):
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    return json.loads(text)


def _pattern_from_json(doc) -> GTPattern:
    if isinstance(doc, dict):
        doc = doc["rows"]
    return GTPattern(doc)


def _pop_from_json(doc) -> POP:
    rows = doc["pattern"]
    overlay = [[Partition(parts) for parts in row] for row in doc["overlay"]]
    return POP(GTPattern(rows), overlay)


def _pop_to_json(pop: POP) -> dict:
    return {
        "pattern": [list(row) for row in pop.pattern.rows],
        "overlay": [[list(p.parts) for p in row] for row in pop.overlay],
    }


def _aonp_to_json(aonp: AONP) -> dict:
    return {
        "pattern": [list(row) for row in aonp.rows],
        "overlay": [[list(p.parts) for p in row] for row in aonp.overlay],
        "near": True,
    }


def _index_from_json(doc) -> CLIndex:
    entries = tuple(
        tuple(CLEntry(int(e["ell"]), tuple(int(v) for v in e["s"])) for e in row)
        for row in doc
    )
    return CLIndex(entries)


def _index_to_json(index: CLIndex) -> list:
    return [
        [{"ell": e.ell, "s": list(e.s)} for e in row] for row in index.entries
    ]


def _colored_from_json(doc) -> ColoredPartition:
    return ColoredPartition(tuple(Partition(parts) for parts in doc))


def _apply_normalize(bounding, weight=None):
    base = bounding[-1]
    bounding = tuple(v - base for v in bounding)
    if weight is not None:
        weight = tuple(v - base for v in weight)
    return bounding, weight


def _cmd_maxarea(args) -> tuple[dict, int]:
    bounding = _parse_ints(args.bounding)
    weight = _parse_ints(args.weight)
    if args.normalize_dominant:
        bounding, weight = _apply_normalize(bounding, weight)
    pat = max_area_pattern(bounding, weight)
    gap = norm_sq(bounding) - norm_sq(weight)
    return (
        {
            "rows": [list(row) for row in pat.rows],
            "area": pat.area,
            "norm_gap_half": gap // 2,
        },
        0,
    )


def _cmd_pattern_weight(args) -> tuple[dict, int]:
    pat = _pattern_from_json(_load_json(args.rows))
    return {"weight": list(pat.weight)}, 0


def _cmd_pattern_area(args) -> tuple[dict, int]:
    pat = _pattern_from_json(_load_json(args.rows))
    return {"area": pat.area, "traparea": pat.traparea}, 0


def _cmd_pattern_validate(args) -> tuple[dict, int]:
    rows = _load_json(args.rows)
    if isinstance(rows, dict):
        rows = rows["rows"]
    rows = tuple(tuple(int(v) for v in row) for row in rows)
    problem = diagnose(rows)
    if problem is None:
        return {"ok": True}, 0
    return {"ok": False, "diagnostic": problem}, 0


def _cmd_pattern_enumerate(args) -> tuple[dict, int]:
    bounding = _parse_ints(args.bounding)
    weight = _parse_ints(args.weight) if args.weight is not None else None
    if args.normalize_dominant:
        bounding, weight = _apply_normalize(bounding, weight)
    pats = list(enumerate_patterns(bounding, weight))
    doc = {"count": len(pats)}
    if not args.count_only:
        doc["patterns"] = [[list(row) for row in p.rows] for p in pats]
    return doc, 0


def _cmd_pop_validate(args) -> tuple[dict, int]:
    doc = _load_json(args.pop)
    rows = tuple(tuple(int(v) for v in row) for row in doc["pattern"])
    problem = diagnose(rows)
    if problem is None:
        overlay = tuple(
            tuple(Partition(parts) for parts in row) for row in doc["overlay"]
        )
        problem = diagnose_overlay(rows, overlay)
    if problem is None:
        return {"ok": True}, 0
    return {"ok": False, "diagnostic": problem}, 0


def _cmd_pop_enumerate(args) -> tuple[dict, int]:
    bounding = _parse_ints(args.bounding)
    weight = _parse_ints(args.weight) if args.weight is not None else None
    if args.normalize_dominant:
        bounding, weight = _apply_normalize(bounding, weight)
    pops = list(
        enumerate_pops(bounding, weight=weight, boxes=args.boxes, depth=args.depth)
    )
    doc = {"count": len(pops)}
    if not args.count_only:
        doc["pops"] = [_pop_to_json(p) for p in pops]
    return doc, 0


def _cmd_pop_char(args) -> tuple[dict, int]:
    bounding = _parse_ints(args.bounding)
    if args.normalize_dominant:
        bounding, _ = _apply_normalize(bounding)
    char = graded_character(bounding)
    return (
        {
            "character": [
                {"weight": list(w), "coeffs": list(cs)} for w, cs in char.items()
            ]
        },
        0,
    )


def _cmd_pop_top_grade(args) -> tuple[dict, int]:
    bounding = _parse_ints(args.bounding)
    weight = _parse_ints(args.weight)
    if args.normalize_dominant:
        bounding, weight = _apply_normalize(bounding, weight)
    profile = top_grade_profile(bounding, weight)
    if not profile.present:
        return {"weight_absent": True, "norm_gap_half": profile.norm_gap_half}, 0
    return (
        {
            "max_boxes": profile.max_boxes,
            "count": profile.count,
            "norm_gap_half": profile.norm_gap_half,
            "consistent": profile.consistent,
        },
        0,
    )


def _cmd_pop_to_cl(args) -> tuple[dict, int]:
    pop = _pop_from_json(_load_json(args.pop))
    return {"index": _index_to_json(to_cl_index(pop))}, 0


def _cmd_pop_from_cl(args) -> tuple[dict, int]:
    bounding = _parse_ints(args.bounding)
    index = _index_from_json(_load_json(args.index))
    return _pop_to_json(from_cl_index(bounding, index)), 0


def _cmd_pop_monomial(args) -> tuple[dict, int]:
    pop = _pop_from_json(_load_json(args.pop))
    return {"monomial": render_cl_monomial(pop)}, 0


def _cmd_bij_break(args) -> tuple[dict, int]:
    c_seq = _parse_ints(args.c)
    p = Partition(_parse_ints(args.partition))
    res = break_multi(c_seq, p)
    return (
        {
            "a_seq": list(res.a_seq),
            "b_seq": list(res.b_seq),
            "pieces": [list(q.parts) for q in res.pieces],
        },
        0,
    )


def _cmd_bij_unbreak(args) -> tuple[dict, int]:
    a_seq = _parse_ints(args.a)
    b_seq = _parse_ints(args.b)
    pieces = tuple(Partition(parts) for parts in _load_json(args.pieces))
    c_seq, p = break_multi_inv(BreakResult(a_seq, b_seq, pieces))
    return {"c": list(c_seq), "partition": list(p.parts)}, 0


def _cmd_bij_xi(args) -> tuple[dict, int]:
    eta = _parse_ints(args.eta)
    p = Partition(_parse_ints(args.partition))
    eta2, pieces = xi(eta, args.mu, p)
    return {"eta2": list(eta2), "pieces": [list(q.parts) for q in pieces]}, 0


def _cmd_bij_xi_inv(args) -> tuple[dict, int]:
    eta = _parse_ints(args.eta)
    eta2 = _parse_ints(args.eta2)
    pieces = tuple(Partition(parts) for parts in _load_json(args.pieces))
    mu, p = xi_inv(eta, eta2, pieces)
    return {"mu": mu, "partition": list(p.parts)}, 0


def _cmd_bij_phi(args) -> tuple[dict, int]:
    bounding = _parse_ints(args.bounding)
    mus = _parse_ints(args.mus)
    cp = _colored_from_json(_load_json(args.colored))
    return _aonp_to_json(phi(bounding, mus, cp)), 0


def _cmd_bij_to_pop(args) -> tuple[dict, int]:
    bounding = _parse_ints(args.bounding)
    mus = _parse_ints(args.mus)
    cp = _colored_from_json(_load_json(args.colored))
    return _pop_to_json(cp_to_pop(bounding, mus, args.k, cp)), 0


def _cmd_bij_complement(args) -> tuple[dict, int]:
    pop = _pop_from_json(_load_json(args.pop))
    return _pop_to_json(complement_pop(pop)), 0


def _cmd_bij_embed(args) -> tuple[dict, int]:
    pop = _pop_from_json(_load_json(args.pop))
    return _pop_to_json(embed(pop, args.j)), 0


def _cmd_stab_range(args) -> tuple[dict, int]:
    lam = _parse_ints(args.lam)
    pop = _pop_from_json(_load_json(args.pop))
    report = stable_range(lam, args.k, pop)
    return {"ell": report.ell, "depth": report.depth, "stable": report.stable}, 0


def _cmd_verify(args) -> tuple[dict, int]:
    suite = args.suite
    if suite not in SUITES:
        raise _MalformedInput(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    kwargs = {}
    if suite in ("maxarea", "areas"):
        kwargs = {"max_entry": args.max_entry, "max_len": args.max_len}
    elif suite == "bijection":
        kwargs = {"cases": args.cases, "seed": args.seed, "exhaustive": args.exhaustive}
    elif suite == "counting":
        kwargs = {"r": args.r, "d": args.d, "k": args.k, "max_m": args.max_m}
    elif suite == "stability":
        kwargs = {"r": args.r, "d": args.d, "k": args.k, "cases": args.cases,
                  "seed": args.seed}
    elif suite == "clindex":
        kwargs = {"bounding": _parse_ints(args.bounding)}
    report = SUITES[suite](**kwargs)
    return report, 0 if report["ok"] else 1


class _MalformedInput(ValueError):
    pass


def _add_bounding_flags(p, weight_required=False, weight=True):
    p.add_argument("--bounding", required=True, help="comma-separated bounding row")
    if weight:
        p.add_argument(
            "--weight",
            required=weight_required,
            default=None,
            help="comma-separated weight tuple",
        )
    p.add_argument(
        "--normalize-dominant",
        action="store_true",
        help="subtract the last bounding entry from the bounding row (and weight)",
    )


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="gtpop",
        description="Exact combinatorics of patterns and partition overlays",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("maxarea", help="construct the area-maximizing pattern")
    _add_bounding_flags(p, weight_required=True)
    p.set_defaults(func=_cmd_maxarea)

    pat = sub.add_parser("pattern", help="pattern operations")
    pat_sub = pat.add_subparsers(dest="subcommand", required=True)
    for name, func, needs_rows in (
        ("weight", _cmd_pattern_weight, True),
        ("area", _cmd_pattern_area, True),
        ("validate", _cmd_pattern_validate, True),
    ):
        q = pat_sub.add_parser(name)
        q.add_argument("--rows", required=True, help="pattern rows as JSON (or @file)")
        q.set_defaults(func=func)
    q = pat_sub.add_parser("enumerate")
    _add_bounding_flags(q)
    q.add_argument("--count-only", action="store_true")
    q.set_defaults(func=_cmd_pattern_enumerate)

    pop = sub.add_parser("pop", help="partition-overlaid pattern operations")
    pop_sub = pop.add_subparsers(dest="subcommand", required=True)
    q = pop_sub.add_parser("enumerate")
    _add_bounding_flags(q)
    q.add_argument("--boxes", type=int, default=None)
    q.add_argument("--depth", type=int, default=None)
    q.add_argument("--count-only", action="store_true")
    q.set_defaults(func=_cmd_pop_enumerate)
    q = pop_sub.add_parser("char")
    _add_bounding_flags(q, weight=False)
    q.set_defaults(func=_cmd_pop_char)
    q = pop_sub.add_parser("top-grade")
    _add_bounding_flags(q, weight_required=True)
    q.set_defaults(func=_cmd_pop_top_grade)
    q = pop_sub.add_parser("validate")
    q.add_argument("--pop", required=True, help="POP as JSON (or @file)")
    q.set_defaults(func=_cmd_pop_validate)
    q = pop_sub.add_parser("to-cl")
    q.add_argument("--pop", required=True)
    q.set_defaults(func=_cmd_pop_to_cl)
    q = pop_sub.add_parser("from-cl")
    q.add_argument("--bounding", required=True)
    q.add_argument("--index", required=True, help="index entries as JSON (or @file)")
    q.set_defaults(func=_cmd_pop_from_cl)
    q = pop_sub.add_parser("monomial")
    q.add_argument("--pop", required=True)
    q.set_defaults(func=_cmd_pop_monomial)

    bij = sub.add_parser("bij", help="breakup and bijection operations")
    bij_sub = bij.add_subparsers(dest="subcommand", required=True)
    q = bij_sub.add_parser("break")
    q.add_argument("--c", required=True, help="comma-separated non-decreasing offsets")
    q.add_argument("--partition", required=True, help="comma-separated parts")
    q.set_defaults(func=_cmd_bij_break)
    q = bij_sub.add_parser("unbreak")
    q.add_argument("--a", required=True)
    q.add_argument("--b", required=True)
    q.add_argument("--pieces", required=True, help="JSON array of part arrays")
    q.set_defaults(func=_cmd_bij_unbreak)
    q = bij_sub.add_parser("xi")
    q.add_argument("--eta", required=True)
    q.add_argument("--mu", type=int, required=True)
    q.add_argument("--partition", required=True)
    q.set_defaults(func=_cmd_bij_xi)
    q = bij_sub.add_parser("xi-inv")
    q.add_argument("--eta", required=True)
    q.add_argument("--eta2", required=True)
    q.add_argument("--pieces", required=True)
    q.set_defaults(func=_cmd_bij_xi_inv)
    q = bij_sub.add_parser("phi")
    q.add_argument("--bounding", required=True)
    q.add_argument("--mus", required=True, help="weight entries 2..r+1")
    q.add_argument("--colored", required=True, help="JSON array of part arrays")
    q.set_defaults(func=_cmd_bij_phi)
    q = bij_sub.add_parser("to-pop")
    q.add_argument("--bounding", required=True)
    q.add_argument("--mus", required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--colored", required=True)
    q.set_defaults(func=_cmd_bij_to_pop)
    q = bij_sub.add_parser("complement")
    q.add_argument("--pop", required=True)
    q.set_defaults(func=_cmd_bij_complement)
    q = bij_sub.add_parser("embed")
    q.add_argument("--pop", required=True)
    q.add_argument("--j", type=int, required=True)
    q.set_defaults(func=_cmd_bij_embed)

    stab = sub.add_parser("stab", help="stability range")
    stab_sub = stab.add_subparsers(dest="subcommand", required=True)
    q = stab_sub.add_parser("range")
    q.add_argument("--lambda", dest="lam", required=True, help="dominant tuple")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--pop", required=True)
    q.set_defaults(func=_cmd_stab_range)

    q = sub.add_parser("verify", help="run an invariant suite against oracles")
    q.add_argument("--suite", required=True)
    q.add_argument("--max-entry", type=int, default=3)
    q.add_argument("--max-len", type=int, default=3)
    q.add_argument("--cases", type=int, default=200)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--exhaustive", type=int, default=8)
    q.add_argument("--r", type=int, default=2)
    q.add_argument("--d", type=int, default=3)
    q.add_argument("--k", type=int, default=None)
    q.add_argument("--max-m", type=int, default=10)
    q.add_argument("--bounding", default="3,1,0")
    q.set_defaults(func=_cmd_verify)

    return top


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        doc, code = args.func(args)
    except ContractViolation as exc:
        print(
            json.dumps(
                {
                    "error": "contract_violation",
                    "constraint": exc.constraint,
                    "message": str(exc),
                }
            )
        )
        return 1
    except (_MalformedInput, json.JSONDecodeError, ValueError, KeyError, TypeError, OSError) as exc:
        print(json.dumps({"error": "malformed_input", "message": str(exc)}))
        return 2
    print(json.dumps(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
