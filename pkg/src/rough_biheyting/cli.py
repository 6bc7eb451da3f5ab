"""Command-line front end.

    rough-bh enumerate --space spaces/s6.json
    rough-bh table --space S4 --op impl --format csv
    rough-bh eval --space S6 --world x1,x2,x3,x5 --formula "[x1,x3,x5] <- [x1]"
    rough-bh check --space S6 --suite algebraic --shard 1/4

Exit codes: 0 success, 1 suite failure, 2 input error, 3 size cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import biheyting as bh
from .errors import RoughSetError, SizeLimitExceeded
from .fixtures import check_fixture, fixtures_for, split_errata
from .logic import (
    classify,
    eval_formula,
    formal_check,
    format_conformance,
    kripke_check,
    parse_formula,
    to_text,
    truth_pair,
    world_valuation,
)
from .praba import check_praba, state_join, state_meet
from .report import PropertyReport
from .space import (
    BUILTIN_SPACES,
    DEFAULT_CAP,
    ApproximationSpace,
    canonicalize,
    describe,
    element_pair,
    enumerate_T,
    format_set,
    load_space,
    random_space,
    representative,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

BINARY_OPS = {
    "join": lambda s, a, b: state_join(a, b),
    "meet": lambda s, a, b: state_meet(a, b),
    "impl": bh.rel_pseudocomplement,
    "coimpl": bh.dual_rel_pseudocomplement,
}
UNARY_OPS = {"pseudo": bh.pseudocomplement, "dualpseudo": bh.dual_pseudocomplement}
OP_SYMBOLS = {"join": "Δ", "meet": "∇", "impl": "→", "coimpl": "←", "pseudo": "*", "dualpseudo": "⁺"}

# suites that take a (k, n) shard of the triple space
_SHARDED = {
    "lattice": bh.check_lattice,
    "residuation": bh.check_residuation,
    "algebraic": bh.check_algebraic_axioms,
}
_PLAIN = {
    "stone": bh.check_stone,
    "dualstone": bh.check_dual_stone,
    "boundary": bh.check_boundary,
    "identities": bh.check_operator_identities,
    "oracle": bh.check_oracle,
    "setforms": bh.check_set_formulas,
}
_ALIASES = {"remark4": "identities"}
SUITES = sorted([*_SHARDED, *_PLAIN, *_ALIASES, "praba", "fixtures", "formal", "kripke"])


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    space: ApproximationSpace | None
    command: str
    format: str
    seed: int
    cap: int
    out: Path | None


# -- input helpers -------------------------------------------------------------

def resolve_space(arg: str | None) -> ApproximationSpace | None:
    if arg is None:
        return None
    if arg.upper() in BUILTIN_SPACES and not Path(arg).exists():
        return BUILTIN_SPACES[arg.upper()]()
    try:
        return load_space(arg)
    except json.JSONDecodeError as exc:
        raise InputError(f"{arg}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise InputError(f"cannot read space file: {exc}") from None


def parse_shard(text: str) -> tuple[int, int]:
    """``k/n`` with 1 <= k <= n, returned 0-based."""
    try:
        k, n = (int(p) for p in text.split("/"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"shard must look like k/n, got {text!r}") from None
    if not 1 <= k <= n:
        raise argparse.ArgumentTypeError(f"shard index must satisfy 1 <= k <= n, got {text!r}")
    return k - 1, n


def parse_world(space: ApproximationSpace, text: str):
    text = text.strip()
    if text in ("", "∅", "EMPTY", "{}"):
        atoms = []
    elif text in ("U", "UNIV"):
        atoms = list(space.atoms)
    else:
        atoms = [t.strip() for t in text.strip("{}").split(",") if t.strip()]
    return canonicalize(space, atoms)


def _need_space(cfg: RunConfig) -> ApproximationSpace:
    if cfg.space is None:
        raise InputError("--space is required for this command")
    return cfg.space


def _rep(space, e) -> str:
    return format_set(space, representative(space, e))


def class_note(space: ApproximationSpace) -> str:
    parts = [f"X{i + 1} = {format_set(space, c)}" for i, c in enumerate(space.class_sets)]
    return "cells are canonical representatives; classes: " + ", ".join(parts)


# -- rendering -------------------------------------------------------------------

def _md_table(header: list[str], rows: list[list[str]]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(r) + " |" for r in rows]
    return "\n".join(lines)


def _csv_table(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def emit(cfg: RunConfig, text: str):
    if cfg.out is not None:
        cfg.out.write_text(text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")


# -- commands ------------------------------------------------------------------------

def cmd_enumerate(cfg: RunConfig, args) -> int:
    space = _need_space(cfg)
    T = enumerate_T(space, cfg.cap)
    rows = []
    for i, e in enumerate(T):
        p = element_pair(space, e)
        rows.append([str(i), _rep(space, e), format_set(space, p.lower), format_set(space, p.upper), describe(space, e)])
    header = ["index", "representative", "lower", "upper", "classes"]
    if cfg.format == "json":
        emit(cfg, _json({"space": space.name, "size": len(T),
                         "elements": [dict(zip(header, r)) for r in rows]}))
    elif cfg.format == "csv":
        emit(cfg, _csv_table(header, rows))
    else:
        emit(cfg, f"T over {space.name or 'space'}: {len(T)} elements\n\n" + _md_table(header, rows))
    return EXIT_OK


def cmd_table(cfg: RunConfig, args) -> int:
    space = _need_space(cfg)
    T = enumerate_T(space, cfg.cap)
    op, sym = args.op, OP_SYMBOLS[args.op]
    cols = [_rep(space, e) for e in T]
    if op in UNARY_OPS:
        f = UNARY_OPS[op]
        pairs = [(_rep(space, a), _rep(space, f(space, a))) for a in T]
        if cfg.format == "json":
            emit(cfg, _json({"space": space.name, "op": op, "rows": [{"input": a, "output": b} for a, b in pairs]}))
        elif cfg.format == "csv":
            emit(cfg, _csv_table(["input", "output"], [list(p) for p in pairs]))
        else:
            emit(cfg, f"{op} ({sym}) on {space.name or 'space'}\n{class_note(space)}\n\n"
                      + _md_table(["a", f"a{sym}"], [list(p) for p in pairs]))
        return EXIT_OK
    f = BINARY_OPS[op]
    grid = [[_rep(space, f(space, a, b)) for b in T] for a in T]
    if cfg.format == "json":
        emit(cfg, _json({"space": space.name, "op": op, "columns": cols,
                         "rows": [{"row": r, "cells": g} for r, g in zip(cols, grid)]}))
    elif cfg.format == "csv":
        emit(cfg, _csv_table([op] + cols, [[r] + g for r, g in zip(cols, grid)]))
    else:
        emit(cfg, f"{op} ({sym}) on {space.name or 'space'}: row {sym} column\n{class_note(space)}\n\n"
                  + _md_table([sym] + cols, [[r] + g for r, g in zip(cols, grid)]))
    return EXIT_OK


def cmd_eval(cfg: RunConfig, args) -> int:
    space = _need_space(cfg)
    if not args.formula or len(args.formula) != 1:
        raise InputError("eval takes exactly one --formula")
    if args.world is None:
        raise InputError("eval needs --world")
    world = parse_world(space, args.world)
    f = parse_formula(args.formula[0])
    value = eval_formula(space, f)
    pair = truth_pair(space, world_valuation(space, world), value)
    out = {
        "world": _rep(space, world),
        "world_classes": describe(space, world),
        "formula": to_text(f),
        "value": _rep(space, value),
        "value_classes": describe(space, value),
        "pair": str(pair),
        "class": classify(pair).value,
    }
    if cfg.format == "json":
        emit(cfg, _json(out))
    elif cfg.format == "csv":
        emit(cfg, _csv_table(list(out), [list(out.values())]))
    else:
        emit(cfg, "\n".join([
            f"world    {out['world']}  ({out['world_classes']})",
            f"formula  {out['formula']}",
            f"value    {out['value']}  ({out['value_classes']})",
            f"pair     {out['pair']}",
            f"class    {out['class']}",
        ]))
    return EXIT_OK


def _render_reports(cfg: RunConfig, reports: list[PropertyReport], extra: dict | None = None) -> str:
    if cfg.format == "json":
        body = {"reports": [r.to_dict() for r in reports], "passed": all(r.passed for r in reports)}
        body.update(extra or {})
        return _json(body)
    header = ["suite", "space", "property", "inputs", "expected", "actual", "note"]
    rows = [[r.suite, r.space_id, f.prop, "; ".join(f.inputs), f.expected, f.actual, f.note]
            for r in reports for f in r.failures]
    if cfg.format == "csv":
        return _csv_table(header, rows)
    lines = [r.summary() for r in reports]
    if extra:
        lines += [f"{k}: {v}" for k, v in extra.items()]
    if rows:
        lines += ["", _md_table(header, rows)]
    return "\n".join(lines)


def _conformance(cfg: RunConfig, args, space, suite) -> int:
    if not args.formula or len(args.formula) != 2:
        raise InputError(f"{suite} needs two --formula arguments (phi and psi)")
    phi, psi = (parse_formula(t) for t in args.formula)
    worlds = [parse_world(space, args.world)] if args.world is not None else enumerate_T(space, cfg.cap)
    run = formal_check if suite == "formal" else (lambda *a: kripke_check(*a, cap=cfg.cap))
    reports = [run(space, w, phi, psi) for w in worlds]
    bad = sum(1 for r in reports if not r.passed)
    tail = f"{len(reports)} worlds checked, {bad} with clause violations (diagnostic, not fatal)"
    if cfg.format == "json":
        emit(cfg, _json({"suite": suite, "space": space.name, "phi": to_text(phi), "psi": to_text(psi),
                         "reports": [r.to_dict() for r in reports], "summary": tail}))
    elif cfg.format == "csv":
        header = ["world", "clause", "subject", "lhs", "rhs", "holds"]
        rows = [[r.world, str(v.clause), v.subject, str(v.lhs), str(v.rhs), str(v.holds)]
                for r in reports for v in r.clauses + r.atom_clauses]
        emit(cfg, _csv_table(header, rows))
    else:
        emit(cfg, "\n\n".join([format_conformance(r) for r in reports] + [tail]))
    return EXIT_OK


def _fixtures(space: ApproximationSpace):
    matches = [n for n, make in BUILTIN_SPACES.items() if make() == space]
    if not matches:
        raise InputError("digitised tables exist only for the S4 and S6 spaces")
    builtin = BUILTIN_SPACES[matches[0]]()
    reports, known = [], []
    for fx in fixtures_for(builtin.name):
        rep = check_fixture(space, fx)
        errata, other = split_errata(space, fx, rep)
        known += [f"table {fx['table']}: {'; '.join(f.inputs)} printed {f.expected}, "
                  f"computed {f.actual} ({f.note})" for f in errata]
        rep.failures = other
        reports.append(rep)
    return reports, known


def cmd_check(cfg: RunConfig, args) -> int:
    suite = _ALIASES.get(args.suite, args.suite)
    if args.random:
        spaces = [random_space(cfg.seed + i) for i in range(args.random)]
    else:
        spaces = [_need_space(cfg)]
    if suite in ("formal", "kripke"):
        if len(spaces) != 1:
            raise InputError(f"{suite} runs on a single space")
        return _conformance(cfg, args, spaces[0], suite)
    reports, extra = [], {}
    for space in spaces:
        if suite in _SHARDED:
            k, n = args.shard
            print(f"running {suite} on {space.name or 'space'}: {space.size_T ** 3} triples, "
                  f"shard {k + 1}/{n}", file=sys.stderr)
            reports.append(_SHARDED[suite](space, cfg.cap, shard=args.shard))
        elif suite in _PLAIN:
            reports.append(_PLAIN[suite](space, cfg.cap))
        elif suite == "praba":
            reports.append(check_praba(space))
        elif suite == "fixtures":
            reps, known = _fixtures(space)
            reports += reps
            if known:
                extra["known errata"] = len(known)
                extra.update({f"erratum {i + 1}": k for i, k in enumerate(known)})
    emit(cfg, _render_reports(cfg, reports, extra))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


COMMANDS = {"enumerate": cmd_enumerate, "table": cmd_table, "eval": cmd_eval, "check": cmd_check}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--space", help="space file (JSON) or a builtin name: S4, S6")
    common.add_argument("--format", choices=["md", "csv", "json"], default="md")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest |T| to enumerate")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", type=Path, help="write output here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="rough-bh",
        description="Rough-set bi-Heyting algebra: tables, formula evaluation and property checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("enumerate", parents=[common], help="list the elements of T")
    p = sub.add_parser("table", parents=[common], help="operation table over T")
    p.add_argument("--op", required=True, choices=[*BINARY_OPS, *UNARY_OPS])
    p = sub.add_parser("eval", parents=[common], help="evaluate a formula at a world")
    p.add_argument("--world", help="comma-separated atoms; empty or EMPTY for the empty world")
    p.add_argument("--formula", action="append")
    p = sub.add_parser("check", parents=[common], help="run a property suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--shard", type=parse_shard, default=(0, 1), help="k/n slice of the triple space")
    p.add_argument("--random", type=int, metavar="N", help="run on N seeded random spaces instead")
    p.add_argument("--world", help="world for formal/kripke (default: every world)")
    p.add_argument("--formula", action="append", help="phi then psi for formal/kripke")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(resolve_space(args.space), args.command, args.format, args.seed, args.cap, args.out)
        return COMMANDS[args.command](cfg, args)
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, RoughSetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
