"""Command line interface.

    gamma-top analyze <file> [--format text|machine]
    gamma-top verify (<file> | --enumerate N --ops MODES) [--claims LIST]
    gamma-top mine --n N --ops MODES --predicate NAME
    gamma-top audit --example {3.2,3.5,3.16,3.17}

Exit codes: 0 success / all safe claims pass, 1 a safe claim failed,
2 input error.  GAMMA_TOP_THREADS caps worker processes for the
enumeration commands (default 1).
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import os
import sys

from . import documents, theoremlab
from .finspace import FinSpaceError
from .gamma_core import GammaError
from .gamma_sets import (
    FLAG_NAMES,
    classify_subset,
    gamma_open_family,
    is_extremally_disconnected,
    regular_open_family,
    theta_families,
)
from .gamma_core import is_open_operation, is_regular_operation
from .theoremlab import (
    CLAIM_IDS,
    CLAIMS,
    CONDITIONED_CLAIMS,
    SAFE_CLAIMS,
    UnknownClaim,
    UnknownExample,
    UnknownPredicate,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INPUT = 2


def _threads() -> int:
    raw = os.environ.get("GAMMA_TOP_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise FinSpaceError(f"GAMMA_TOP_THREADS must be an integer, got {raw!r}")
    return max(1, value)


def _emit(payload: dict, text: str, fmt: str):
    if fmt == "machine":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return documents.parse_space(fh.read())


def _fam(sp, masks) -> str:
    return " ".join(sp.ground.format(m) for m in masks) or "-"


# -- analyze -----------------------------------------------------------------

def _analyze_payload(sp) -> dict:
    theta_closed, theta_open = theta_families(sp)
    table = [classify_subset(sp, m) for m in sp.ground.subsets()]
    return {
        "space": documents.space_to_document(sp),
        "flags": {
            "extremally_disconnected": is_extremally_disconnected(sp),
            "regular_operation": is_regular_operation(sp),
            "open_operation": is_open_operation(sp),
        },
        "families": {
            "opens": [list(sp.ground.labels_of(m)) for m in sp.top.opens_sorted],
            "gamma_open": [list(sp.ground.labels_of(m)) for m in gamma_open_family(sp)],
            "regular_open": [list(sp.ground.labels_of(m)) for m in regular_open_family(sp)],
            "theta_open": [list(sp.ground.labels_of(m)) for m in theta_open],
            "theta_closed": [list(sp.ground.labels_of(m)) for m in theta_closed],
        },
        "classification": [
            {
                "subset": list(sp.ground.labels_of(c.subset)),
                "flags": c.flags,
                "witnesses": c.witnesses,
            }
            for c in table
        ],
    }


def _analyze_text(sp, payload: dict) -> str:
    lines = []
    lines.append(f"points: {', '.join(sp.ground.labels)}")
    lines.append(f"opens:        {_fam(sp, sp.top.opens_sorted)}")
    lines.append(f"gamma-open:   {_fam(sp, gamma_open_family(sp))}")
    lines.append(f"regular-open: {_fam(sp, regular_open_family(sp))}")
    theta_closed, theta_open = theta_families(sp)
    lines.append(f"theta-open:   {_fam(sp, theta_open)}")
    lines.append(f"theta-closed: {_fam(sp, theta_closed)}")
    for name, value in payload["flags"].items():
        lines.append(f"{name}: {'yes' if value else 'no'}")
    lines.append("")
    width = max(12, sp.ground.n * 2 + 3)
    lines.append("subset".ljust(width) + " ".join(f.rjust(len(f)) for f in FLAG_NAMES))
    for row in payload["classification"]:
        cell = "{" + ",".join(row["subset"]) + "}"
        marks = " ".join(
            ("yes" if row["flags"][f] else "no").rjust(len(f)) for f in FLAG_NAMES
        )
        lines.append(cell.ljust(width) + marks)
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    sp = _load(args.file)
    payload = _analyze_payload(sp)
    _emit(payload, _analyze_text(sp, payload), args.format)
    return EXIT_OK


# -- verify -------------------------------------------------------------------

def _parse_claims(raw: str | None, enumerating: bool) -> tuple:
    if raw is None:
        return SAFE_CLAIMS if enumerating else CLAIM_IDS
    keywords = {"safe": SAFE_CLAIMS, "conditioned": CONDITIONED_CLAIMS, "all": CLAIM_IDS}
    if raw in keywords:
        return keywords[raw]
    ids = tuple(part.strip() for part in raw.split(",") if part.strip())
    for cid in ids:
        if cid not in CLAIMS:
            raise UnknownClaim(f"unknown claim {cid!r}")
    return ids


def _sweep_worker(args):
    n, modes, claims, lo, hi = args
    claim_report, _ = theoremlab.full_sweep(n, modes, claims, invariants=False,
                                            topo_range=(lo, hi))
    return claim_report


def _chunk_ranges(total: int, workers: int):
    span = (total + workers - 1) // workers
    return [(lo, min(lo + span, total)) for lo in range(0, total, span)]


def _verify_enumeration(args, claims) -> tuple[dict, str, int]:
    n = args.enumerate
    modes = theoremlab.parse_modes(args.ops)
    threads = _threads()
    total = sum(1 for _ in theoremlab.enumerate_topologies(n))
    if threads > 1 and total > 1:
        jobs = [(n, modes, claims, lo, hi) for lo, hi in _chunk_ranges(total, threads)]
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(min(threads, len(jobs))) as pool:
            parts = pool.map(_sweep_worker, jobs)
        report = parts[0]
        for part in parts[1:]:
            report.spaces += part.spaces
            report.topologies += part.topologies
            report.failures.extend(part.failures)
            for cid in claims:
                for k in report.tallies[cid]:
                    report.tallies[cid][k] += part.tallies[cid][k]
    else:
        report, _ = theoremlab.full_sweep(n, modes, claims, invariants=False)
    payload = report.to_dict()
    lines = [f"enumeration: n={n} modes={','.join(modes)} "
             f"topologies={report.topologies} spaces={report.spaces}"]
    for cid in claims:
        t = report.tallies[cid]
        lines.append(
            f"{cid:14} holds={t['holds']:<6} fails={t['fails']:<6} "
            f"hypotheses_not_met={t['hypotheses_not_met']}"
        )
    for v in report.failures[:10]:
        lines.append(f"counterexample {v.claim_id}: {json.dumps(v.witness, sort_keys=True)}")
    if len(report.failures) > 10:
        lines.append(f"... {len(report.failures) - 10} more counterexamples")
    safe_fails = sum(report.tallies[cid]["fails"] for cid in claims if cid in SAFE_CLAIMS)
    return payload, "\n".join(lines) + "\n", EXIT_COUNTEREXAMPLE if safe_fails else EXIT_OK


def _verify_file(args, claims) -> tuple[dict, str, int]:
    sp = _load(args.file)
    report = theoremlab.run_suite(sp, claims)
    payload = report.to_dict()
    lines = []
    for v in report.verdicts:
        line = f"{v.claim_id:14} {v.status}"
        if v.status == "fails":
            line += f"  witness {json.dumps(v.witness, sort_keys=True)}"
        elif v.status == "hypotheses_not_met":
            line += f"  (needs {', '.join(v.notes.get('unmet', ()))})"
        lines.append(line)
    for d in report.discrepancies:
        lines.append(f"measured {d['kind']}: {json.dumps({k: v for k, v in d.items() if k != 'kind'}, sort_keys=True)}")
    safe_fails = [v for v in report.verdicts if v.status == "fails" and v.claim_id in SAFE_CLAIMS]
    return payload, "\n".join(lines) + "\n", EXIT_COUNTEREXAMPLE if safe_fails else EXIT_OK


def cmd_verify(args) -> int:
    if (args.file is None) == (args.enumerate is None):
        raise FinSpaceError("verify needs a space file or --enumerate N, not both")
    claims = _parse_claims(args.claims, enumerating=args.enumerate is not None)
    if args.enumerate is not None:
        if args.ops is None:
            raise FinSpaceError("--enumerate requires --ops")
        payload, text, code = _verify_enumeration(args, claims)
    else:
        payload, text, code = _verify_file(args, claims)
    _emit(payload, text, args.format)
    return code


# -- mine ----------------------------------------------------------------------

def _mine_worker(args):
    n, modes, predicate, lo, hi = args
    return [w.to_dict() for w in theoremlab.mine(n, modes, predicate, topo_range=(lo, hi))]


def cmd_mine(args) -> int:
    modes = theoremlab.parse_modes(args.ops)
    threads = _threads()
    if threads > 1:
        total = sum(1 for _ in theoremlab.enumerate_topologies(args.n))
        jobs = [(args.n, modes, args.predicate, lo, hi)
                for lo, hi in _chunk_ranges(total, threads)]
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(min(threads, len(jobs))) as pool:
            found = [w for part in pool.map(_mine_worker, jobs) for w in part]
    else:
        found = [w.to_dict() for w in theoremlab.mine(args.n, modes, args.predicate)]
    payload = {
        "predicate": args.predicate,
        "n": args.n,
        "modes": list(modes),
        "count": len(found),
        "witnesses": found,
    }
    lines = [f"predicate {args.predicate}: {len(found)} witnesses "
             f"(n={args.n}, modes={','.join(modes)})"]
    for w in found[:20]:
        lines.append(
            f"topology {w['topology_index']:>4} operation {w['operation_index']:>4} "
            f"witness {json.dumps(w['witness'], sort_keys=True)}"
        )
    if len(found) > 20:
        lines.append(f"... {len(found) - 20} more")
    _emit(payload, "\n".join(lines) + "\n", args.format)
    return EXIT_OK


# -- audit ----------------------------------------------------------------------

def cmd_audit(args) -> int:
    audit = theoremlab.audit_example(args.example)
    payload = audit.to_dict()
    lines = [f"example {audit.example}"]
    for diff in audit.families:
        status = "match" if diff.match else "MISMATCH"
        lines.append(f"family {diff.name}: {status}")
        lines.append(f"  printed:    {[','.join(t) or 'empty' for t in diff.printed]}")
        lines.append(f"  recomputed: {[','.join(t) or 'empty' for t in diff.recomputed]}")
        if diff.missing_from_printed:
            lines.append(f"  missing from printed: {diff.missing_from_printed}")
        if diff.spurious_in_printed:
            lines.append(f"  spurious in printed:  {diff.spurious_in_printed}")
    q = audit.qualitative
    lines.append(f"separation {q['separation']}: printed witness {q['printed_witness']} "
                 f"{'valid' if q['printed_witness_valid'] else 'INVALID'} under recomputation")
    lines.append(f"  witnesses in this space: {q['recomputed_witnesses'] or 'none'}")
    for name, value in audit.flags.items():
        lines.append(f"{name}: {'yes' if value else 'no'}")
    _emit(payload, "\n".join(lines) + "\n", args.format)
    return EXIT_OK


# -- wiring ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gamma-top",
        description="analyze, verify, mine and audit expansive operations on finite topologies",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="families, flags and the full classification table")
    p.add_argument("file", help="space document (JSON)")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run the claim suite on one space or an enumeration")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--enumerate", type=int, default=None, metavar="N")
    p.add_argument("--ops", default=None, help="comma list of builtins,pivots,all_tables")
    p.add_argument("--claims", default=None,
                   help="comma list of claim ids, or safe|conditioned|all "
                        "(default: all for a file, safe for an enumeration)")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mine", help="search an enumeration for separations or claim failures")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ops", required=True)
    p.add_argument("--predicate", required=True,
                   help=f"one of {', '.join(theoremlab.PREDICATE_NAMES[:5])}, ... or fails:<claim>")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("audit", help="diff a bundled example against recomputation")
    p.add_argument("--example", required=True, choices=("3.2", "3.5", "3.16", "3.17"))
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_audit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (documents.DocumentError, FinSpaceError, GammaError,
            UnknownClaim, UnknownExample, UnknownPredicate, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
