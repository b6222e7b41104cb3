"""Command-line front end.

Subcommands: info, pair, reduce, wall classify, wall slice, moduli report,
oracle cases, atlas.  Every subcommand accepts --json and emits a stable
schema ({"schema": 1, ...}); exit status 2 for flag errors, 3 for violated
preconditions (named on stderr), 0 on success.
"""

import argparse
import csv
import json
import sys
from fractions import Fraction

from bielliptic.errors import PreconditionError
from bielliptic.lattice import (
    DivisorClass,
    MukaiVector,
    l_invariant,
    mukai_pairing,
    square,
)
from bielliptic.moduli import bridgeland_nonempty, gieseker_report, singularity_report
from bielliptic.oracle import enumerate_equality_cases
from bielliptic.stability import EVERYWHERE, NOWHERE, locus_samples, wall_in_slice
from bielliptic.surfaces import surface_invariants
from bielliptic.transforms import matches_reduced_form, reduce_to_table
from bielliptic.walls import classify_wall, saturate_lattice

SCHEMA = 1


def _frac_str(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _parse_divisor(text: str) -> DivisorClass:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected a,b with two entries, got {text!r}")
    return DivisorClass(int(parts[0]), int(parts[1]))


def _emit(payload: dict, as_json: bool, lines: list[str]):
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _cmd_info(args) -> int:
    d = surface_invariants(args.type)
    row = {
        "type": args.type,
        "ord_k": d.ord_k,
        "lambda": d.lam,
        "g_order": d.g_order,
        "multiplicities": list(d.multiplicities),
    }
    if args.json:
        row["schema"] = SCHEMA
    print(json.dumps(row, sort_keys=True))
    return 0


def _cmd_pair(args) -> int:
    v = MukaiVector.parse(args.v)
    w = MukaiVector.parse(args.w)
    surface_invariants(args.type)
    payload = {
        "schema": SCHEMA,
        "type": args.type,
        "v": v.text(),
        "w": w.text(),
        "pairing": mukai_pairing(v, w),
        "v_square": square(v),
        "w_square": square(w),
    }
    if v.is_primitive():
        payload["l_v"] = l_invariant(args.type, v)
    if w.is_primitive():
        payload["l_w"] = l_invariant(args.type, w)
    _emit(
        payload,
        args.json,
        [
            f"<v, w> = {payload['pairing']}",
            f"v^2 = {payload['v_square']}, w^2 = {payload['w_square']}",
        ],
    )
    return 0


def _cmd_reduce(args) -> int:
    v = MukaiVector.parse(args.vector)
    v0, log = reduce_to_table(args.type, v)
    payload = {
        "schema": SCHEMA,
        "type": args.type,
        "input": v.text(),
        "reduced": v0.text(),
        "log": log.to_json(),
        "square": square(v0),
        "in_table": matches_reduced_form(args.type, v0),
    }
    _emit(
        payload,
        args.json,
        [f"{v.text()} -> {v0.text()}  (square {payload['square']}, {len(log)} steps)"],
    )
    return 0


def _classification_payload(t: int, v: MukaiVector, w: MukaiVector, max_parts: int) -> dict:
    H = saturate_lattice(t, v, w)
    c = classify_wall(H, max_parts=max_parts)
    return {
        "schema": SCHEMA,
        "type": t,
        "v": v.text(),
        "w": w.text(),
        "totally_semistable": c.totally_semistable,
        "witness": c.tss_witness.text() if c.tss_witness else None,
        "labels": sorted(c.labels),
        "witnesses": {
            label: [u.text() for u in us] for label, us in sorted(c.witnesses.items())
        },
        "codim_bound": c.codim_bound,
    }


def _cmd_wall_classify(args) -> int:
    payload = _classification_payload(
        args.type,
        MukaiVector.parse(args.v),
        MukaiVector.parse(args.w),
        args.max_parts,
    )
    codim = payload["codim_bound"]
    _emit(
        payload,
        args.json,
        [
            f"labels: {', '.join(payload['labels'])}",
            f"totally semistable: {payload['totally_semistable']}"
            + (f" (witness {payload['witness']})" if payload["witness"] else ""),
            f"codim bound: {'+inf' if codim is None else codim}",
        ],
    )
    return 0


def _cmd_wall_slice(args) -> int:
    v = MukaiVector.parse(args.v)
    w = MukaiVector.parse(args.w)
    H0 = _parse_divisor(args.H0)
    locus = wall_in_slice(args.type, v, w, H0)
    if locus is EVERYWHERE:
        locus_json: dict | str = "everywhere"
        text = "locus: everywhere"
    elif locus is NOWHERE:
        locus_json = "nowhere"
        text = "locus: nowhere"
    else:
        locus_json = {"alpha": locus.alpha, "beta": locus.beta, "gamma": locus.gamma}
        text = (
            f"locus: {locus.alpha}(x^2+y^2) + {locus.beta}x + {locus.gamma} = 0"
        )
    payload = {
        "schema": SCHEMA,
        "type": args.type,
        "v": v.text(),
        "w": w.text(),
        "H0": f"{H0.a},{H0.b}",
        "locus": locus_json,
    }
    lines = [text]
    if args.emit_samples:
        samples = locus_samples(locus, args.emit_samples)
        payload["samples"] = [[_frac_str(x), _frac_str(y)] for x, y in samples]
        lines += [f"sample: x={_frac_str(x)} y={_frac_str(y)}" for x, y in samples]
    _emit(payload, args.json, lines)
    return 0


def _cmd_moduli_report(args) -> int:
    v = MukaiVector.parse(args.vector)
    t = args.type
    rep = gieseker_report(t, v)
    payload = {
        "schema": SCHEMA,
        "type": t,
        "vector": v.text(),
        "muss_nonempty": rep.muss_nonempty,
        "mus_nonempty": rep.mus_nonempty,
        "stable_dimension": rep.stable_dimension,
        "exceptional": rep.exceptional.value if rep.exceptional else None,
        "notes": list(rep.notes),
        "bridgeland_nonempty": bridgeland_nonempty(t, v),
    }
    lines = [
        f"slope-semistable nonempty: {rep.muss_nonempty}",
        f"slope-stable nonempty: {rep.mus_nonempty}"
        + (f" (dimension {rep.stable_dimension})" if rep.stable_dimension is not None else ""),
        f"Bridgeland nonempty: {payload['bridgeland_nonempty']}",
    ]
    if v.is_primitive() and square(v) >= 0:
        sing = singularity_report(t, v, generic_surface=args.generic_surface)
        payload["singularities"] = {
            "sing_dim_bound": _frac_str(sing.sing_dim_bound),
            "cases": [
                {"condition": c.condition, "class": c.klass.value} for c in sing.cases
            ],
        }
        lines += [
            f"singular locus dimension bound: {_frac_str(sing.sing_dim_bound)}"
        ] + [f"  [{c.klass.value}] {c.condition}" for c in sing.cases]
    _emit(payload, args.json, lines)
    return 0


def _cmd_oracle_cases(args) -> int:
    cases = enumerate_equality_cases(args.m, args.target, bound=args.bound)
    payload = {
        "schema": SCHEMA,
        "m": args.m,
        "target": args.target,
        "bound": args.bound,
        "cases": [
            {"l1": c.l1, "l2": c.l2, "q": c.q, "b1": c.b1, "b2": c.b2} for c in cases
        ],
    }
    _emit(
        payload,
        args.json,
        [
            f"l1={c.l1} l2={c.l2} q={c.q} b1={c.b1} b2={c.b2}"
            for c in cases
        ],
    )
    return 0


def _cmd_atlas(args) -> int:
    bounds = [int(x) for x in args.bounds.split(",")]
    if len(bounds) != 4 or any(b < 0 for b in bounds):
        raise PreconditionError(f"--bounds wants R,A,B,S nonnegative, got {args.bounds}")
    generators = [MukaiVector.parse(w) for w in args.w]
    rb, ab, bb, sb = bounds
    rows = []
    for r in range(-rb, rb + 1):
        for a in range(-ab, ab + 1):
            for b in range(-bb, bb + 1):
                for s in range(-sb, sb + 1):
                    v = MukaiVector.of(r, a, b, s)
                    if square(v) <= 0:
                        continue
                    for w in generators:
                        try:
                            payload = _classification_payload(
                                args.type, v, w, args.max_parts
                            )
                        except PreconditionError:
                            continue
                        codim = payload["codim_bound"]
                        rows.append(
                            (
                                args.type,
                                v.text(),
                                w.text(),
                                str(payload["totally_semistable"]).lower(),
                                ";".join(payload["labels"]),
                                "inf" if codim is None else str(codim),
                            )
                        )
    rows.sort()
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(["type", "v", "w", "tss", "labels", "codim_bound"])
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bielliptic",
        description="Exact Mukai-lattice calculator for the seven bielliptic families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_type(p):
        p.add_argument("--type", type=int, required=True, help="surface type 1..7")

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit versioned JSON")

    p = sub.add_parser("info", help="invariants of one of the seven families")
    add_type(p)
    add_json(p)
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("pair", help="Mukai pairing and squares")
    add_type(p)
    p.add_argument("--v", required=True, help="vector r,a,b,s")
    p.add_argument("--w", required=True, help="vector r,a,b,s")
    add_json(p)
    p.set_defaults(func=_cmd_pair)

    p = sub.add_parser("reduce", help="reduce a primitive vector to a row pattern")
    add_type(p)
    p.add_argument("--vector", required=True, help="vector r,a,b,s")
    add_json(p)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("wall", help="wall-lattice computations")
    wall_sub = p.add_subparsers(dest="wall_command", required=True)

    q = wall_sub.add_parser("classify", help="classify the wall spanned by v, w")
    add_type(q)
    q.add_argument("--v", required=True)
    q.add_argument("--w", required=True)
    q.add_argument("--max-parts", type=int, default=4, dest="max_parts")
    add_json(q)
    q.set_defaults(func=_cmd_wall_classify)

    q = wall_sub.add_parser("slice", help="wall locus in the (x, y) slice")
    add_type(q)
    q.add_argument("--v", required=True)
    q.add_argument("--w", required=True)
    q.add_argument("--H0", required=True, help="ample divisor a,b")
    q.add_argument("--emit-samples", type=int, default=0, dest="emit_samples")
    add_json(q)
    q.set_defaults(func=_cmd_wall_slice)

    p = sub.add_parser("moduli", help="moduli reports")
    moduli_sub = p.add_subparsers(dest="moduli_command", required=True)
    q = moduli_sub.add_parser("report", help="non-emptiness / dimension / singularities")
    add_type(q)
    q.add_argument("--vector", required=True)
    q.add_argument("--generic-surface", action="store_true", dest="generic_surface")
    add_json(q)
    q.set_defaults(func=_cmd_moduli_report)

    p = sub.add_parser("oracle", help="brute-force case enumerations")
    oracle_sub = p.add_subparsers(dest="oracle_command", required=True)
    q = oracle_sub.add_parser("cases", help="equality-case families")
    q.add_argument("--m", type=int, required=True, choices=(2, 3, 4, 6))
    q.add_argument("--target", type=int, required=True, choices=(0, 1))
    q.add_argument("--bound", type=int, default=8)
    add_json(q)
    q.set_defaults(func=_cmd_oracle_cases)

    p = sub.add_parser("atlas", help="sweep and classify a box of vectors (CSV)")
    add_type(p)
    p.add_argument("--bounds", required=True, help="R,A,B,S box bounds")
    p.add_argument("--w", action="append", required=True, help="generator (repeatable)")
    p.add_argument("--max-parts", type=int, default=4, dest="max_parts")
    p.add_argument("--out", default=None, help="CSV output path (default stdout)")
    p.set_defaults(func=_cmd_atlas)

    return parser


def run_command(argv: list[str]) -> int:
    """Parse and run; returns the exit status (2 flags, 3 preconditions)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except PreconditionError as e:
        print(f"precondition violated: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"bad flag value: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
