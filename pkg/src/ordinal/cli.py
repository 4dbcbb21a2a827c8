"""Command-line surface. Exit codes: 0 all audits pass, 1 violations found,
2 input or usage errors. Output is deterministic for identical inputs."""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import NotQuantifiable, NotSynchronized, OrdinalError
from .information import mutual_information, partition_entropy
from .partitions import Partition
from .poset import (boolean_lattice, divisor_lattice, partition_lattice,
                    verify_consistency_relations)
from .serialize import (dumps_canonical, load_atom_values, load_distribution,
                        load_poset, load_scene, load_valuation, poset_to_dot)
from .spacetime import (causal_grid_poset, check_synchronized, interval_pair,
                        project)
from .valuation import (BiValuation, Valuation, bivaluation_from_valuation,
                        check_bivaluation_sum_rule, check_chain_rule,
                        check_context_product_rule, check_diamond_lemma,
                        check_monotone, check_sum_rule,
                        derive_valuation_from_atoms)

RULE_CHECKS = ("sum", "bisum", "chain", "diamond", "context", "monotone")
DEFAULT_RULES = "sum,bisum,chain,diamond,context"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ordinal",
                                     description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    top = parser.add_subparsers(dest="group", required=True)

    def io_flags(sub):
        sub.add_argument("--format", choices=("json", "text"), default="json")
        sub.add_argument("--output", default=None, help="write here instead of stdout")

    poset = top.add_parser("poset", help="build, validate, and export posets")
    poset_sub = poset.add_subparsers(dest="command", required=True)
    check = poset_sub.add_parser("check", help="validate and certify a poset file")
    check.add_argument("--input", required=True)
    io_flags(check)
    dot = poset_sub.add_parser("export-dot", help="emit a DOT cover diagram")
    dot.add_argument("--input", required=True)
    dot.add_argument("--output", default=None)
    gen = poset_sub.add_parser("gen", help="emit a generated poset as JSON")
    gen.add_argument("kind", choices=("boolean", "partition", "divisors", "grid"))
    gen.add_argument("--atoms", default=None, help="comma-separated atom tokens")
    gen.add_argument("--n", type=int, default=None)
    gen.add_argument("--output", default=None)

    rules = top.add_parser("rules", help="audit valuation constraint rules")
    rules_sub = rules.add_subparsers(dest="command", required=True)
    audit = rules_sub.add_parser("audit", help="run rule audits over a valuation")
    audit.add_argument("--poset", default=None)
    audit.add_argument("--atoms", default=None, help="atom-weight JSON file")
    audit.add_argument("--values", default=None, help="total-valuation JSON file")
    audit.add_argument("--valuation", default=None,
                       help="self-contained valuation document")
    audit.add_argument("--rules", default=DEFAULT_RULES)
    audit.add_argument("--tol", type=float, default=1e-9)
    io_flags(audit)

    info = top.add_parser("info", help="partition entropy and mutual information")
    info_sub = info.add_subparsers(dest="command", required=True)
    entropy = info_sub.add_parser("entropy")
    entropy.add_argument("--dist", required=True)
    entropy.add_argument("--partition", required=True)
    io_flags(entropy)
    mutual = info_sub.add_parser("mutual")
    mutual.add_argument("--dist", required=True)
    mutual.add_argument("--a", required=True)
    mutual.add_argument("--b", required=True)
    io_flags(mutual)

    st = top.add_parser("spacetime", help="projections, synchronization, intervals")
    st_sub = st.add_subparsers(dest="command", required=True)
    proj = st_sub.add_parser("project")
    proj.add_argument("--scene", required=True)
    proj.add_argument("--event", required=True)
    proj.add_argument("--chain", required=True)
    io_flags(proj)
    sync = st_sub.add_parser("sync")
    sync.add_argument("--scene", required=True)
    sync.add_argument("--chains", required=True, help="two chain ids, comma-separated")
    sync.add_argument("--range", required=True, help="lo,hi inclusive index window")
    io_flags(sync)
    interval = st_sub.add_parser("interval")
    interval.add_argument("--scene", required=True)
    interval.add_argument("--events", required=True, help="two event ids")
    interval.add_argument("--frames", default=None, help="frame ids from the scene")
    interval.add_argument("--chains", default=None, help="two chain ids")
    io_flags(interval)

    return parser


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_payload(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        _emit(args, dumps_canonical(payload))
    else:
        _emit(args, "\n".join(text_lines) + "\n")


def _cmd_poset_check(args) -> int:
    p = load_poset(args.input)
    cert = p.is_lattice()
    payload = {"elements": len(p), "covers": len(p.covers),
               "certificate": cert.to_dict()}
    lines = [f"elements: {len(p)}", f"covers: {len(p.covers)}",
             f"lattice: {'yes' if cert.is_lattice else 'no'}"]
    code = 0
    if cert.is_lattice:
        report = verify_consistency_relations(p)
        payload["consistency"] = report.to_dict()
        lines += report.text_lines()
        code = 0 if report.passed else 1
    else:
        lines.append(f"witness: {cert.witness[0]}, {cert.witness[1]}")
        code = 1
    _emit_payload(args, payload, lines)
    return code


def _cmd_poset_dot(args) -> int:
    _emit(args, poset_to_dot(load_poset(args.input)))
    return 0


def _cmd_poset_gen(args) -> int:
    if args.kind in ("boolean", "partition"):
        if not args.atoms:
            raise OrdinalError(f"gen {args.kind} requires --atoms")
        atoms = [a for a in args.atoms.split(",") if a]
        p = boolean_lattice(atoms) if args.kind == "boolean" else partition_lattice(atoms)
    elif args.kind == "divisors":
        if args.n is None:
            raise OrdinalError("gen divisors requires --n")
        p = divisor_lattice(args.n)
    else:
        if args.n is None:
            raise OrdinalError("gen grid requires --n")
        p = causal_grid_poset(args.n)
    _emit(args, dumps_canonical(p.to_dict()))
    return 0


def _load_audit_valuation(args) -> Valuation:
    if args.valuation:
        return load_valuation(args.valuation)
    if not args.poset:
        raise OrdinalError("rules audit needs --valuation, or --poset with "
                           "--atoms or --values")
    p = load_poset(args.poset)
    if args.atoms:
        return derive_valuation_from_atoms(p, load_atom_values(args.atoms))
    if args.values:
        return Valuation(p, load_atom_values(args.values))
    raise OrdinalError("rules audit needs --atoms or --values alongside --poset")


def _cmd_rules_audit(args) -> int:
    v = _load_audit_valuation(args)
    requested = [r for r in args.rules.split(",") if r]
    unknown = [r for r in requested if r not in RULE_CHECKS]
    if unknown:
        raise OrdinalError(f"unknown rules {unknown}; choose from {RULE_CHECKS}")
    tol = args.tol

    w: BiValuation | None = None
    if any(r in requested for r in ("bisum", "chain", "diamond", "context")):
        w = bivaluation_from_valuation(v, tol, validate=False)

    reports = []
    for rule in requested:
        if rule == "sum":
            reports.append(check_sum_rule(v, tol))
        elif rule == "monotone":
            reports.append(check_monotone(v))
        elif rule == "bisum":
            reports.append(check_bivaluation_sum_rule(w, tol))
        elif rule == "chain":
            reports.append(check_chain_rule(w, tol))
        elif rule == "diamond":
            reports.append(check_diamond_lemma(w, tol))
        elif rule == "context":
            reports.append(check_context_product_rule(w, tol))
    passed = all(r.passed for r in reports)
    payload = {"tolerance": tol, "passed": passed,
               "reports": [r.to_dict() for r in reports]}
    lines = []
    for r in reports:
        lines += r.text_lines()
    lines.append(f"overall: {'PASS' if passed else 'FAIL'}")
    _emit_payload(args, payload, lines)
    return 0 if passed else 1


def _cmd_info_entropy(args) -> int:
    d = load_distribution(args.dist)
    part = Partition.parse(args.partition)
    h = partition_entropy(part, d)
    payload = {"partition": part.literal(), "entropy_bits": h}
    _emit_payload(args, payload, [f"H({part.literal()}) = {h} bits"])
    return 0


def _cmd_info_mutual(args) -> int:
    d = load_distribution(args.dist)
    a, b = Partition.parse(args.a), Partition.parse(args.b)
    rep = mutual_information(a, b, d)
    payload = {"a": a.literal(), "b": b.literal(), **rep.to_dict()}
    lines = [f"H(A) = {rep.h_a} bits", f"H(B) = {rep.h_b} bits",
             f"H(joint) = {rep.h_joint} bits", f"I(A;B) = {rep.mi} bits"]
    _emit_payload(args, payload, lines)
    return 0


def _cmd_st_project(args) -> int:
    scene = load_scene(args.scene)
    e = scene.event(args.event)
    c = scene.chain(args.chain)
    try:
        index = project(e, c)
    except NotQuantifiable as exc:
        payload = {"event": args.event, "chain": args.chain,
                   "quantifiable": False, "reason": str(exc)}
        _emit_payload(args, payload, [f"not quantifiable: {exc}"])
        return 1
    payload = {"event": args.event, "chain": args.chain,
               "quantifiable": True, "index": index,
               "label": str(c.label_of(index))}
    _emit_payload(args, payload,
                  [f"{args.event} -> {args.chain}[{index}] (label {c.label_of(index)})"])
    return 0


def _cmd_st_sync(args) -> int:
    scene = load_scene(args.scene)
    names = [s for s in args.chains.split(",") if s]
    if len(names) != 2:
        raise OrdinalError("--chains needs exactly two chain ids")
    lo, hi = (int(part) for part in args.range.split(","))
    ok = check_synchronized(scene.chain(names[0]), scene.chain(names[1]), (lo, hi))
    payload = {"chains": names, "range": [lo, hi], "synchronized": ok}
    _emit_payload(args, payload,
                  [f"{names[0]} and {names[1]} over [{lo}, {hi}]: "
                   f"{'synchronized' if ok else 'NOT synchronized'}"])
    return 0 if ok else 1


def _cmd_st_interval(args) -> int:
    scene = load_scene(args.scene)
    names = [s for s in args.events.split(",") if s]
    if len(names) != 2:
        raise OrdinalError("--events needs exactly two event ids")
    e1, e2 = scene.event(names[0]), scene.event(names[1])

    if args.frames:
        frames = [(f, *scene.frame(f)) for f in args.frames.split(",") if f]
    elif args.chains:
        pair = [s for s in args.chains.split(",") if s]
        if len(pair) != 2:
            raise OrdinalError("--chains needs exactly two chain ids")
        frames = [("-".join(pair), scene.chain(pair[0]), scene.chain(pair[1]))]
    else:
        raise OrdinalError("interval needs --frames or --chains")

    rows = []
    code = 0
    for name, p, q in frames:
        try:
            ip = interval_pair(e1, e2, p, q)
        except NotSynchronized as exc:
            rows.append({"frame": name, "error": str(exc)})
            code = 1
            continue
        rows.append({"frame": name, **ip.to_dict()})
    scalars = {row["ds2"] for row in rows if "ds2" in row}
    invariant = len(scalars) == 1 and code == 0
    payload = {"events": names, "rows": rows, "invariant": invariant}
    if not invariant:
        code = max(code, 1)

    header = ("frame", "dp", "dq", "dt", "dx", "ds2")
    cells = []
    for row in rows:
        if "error" in row:
            cells.append([row["frame"], "error: " + row["error"], "", "", "", ""])
        else:
            cells.append([row[col] for col in header])
    widths = [max(len(str(c[i])) for c in [header] + cells) for i in range(len(header))]
    lines = ["  ".join(str(col).ljust(widths[i]) for i, col in enumerate(header))]
    lines += ["  ".join(str(row[i]).ljust(widths[i]) for i in range(len(header)))
              for row in cells]
    lines.append(f"invariant: {'yes' if invariant else 'no'}")
    _emit_payload(args, payload, lines)
    return code


COMMANDS = {
    ("poset", "check"): _cmd_poset_check,
    ("poset", "export-dot"): _cmd_poset_dot,
    ("poset", "gen"): _cmd_poset_gen,
    ("rules", "audit"): _cmd_rules_audit,
    ("info", "entropy"): _cmd_info_entropy,
    ("info", "mutual"): _cmd_info_mutual,
    ("spacetime", "project"): _cmd_st_project,
    ("spacetime", "sync"): _cmd_st_sync,
    ("spacetime", "interval"): _cmd_st_interval,
}


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return COMMANDS[(args.group, args.command)](args)
    except (OrdinalError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"ordinal: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
