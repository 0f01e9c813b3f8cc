"""Command-line interface.

Commands: circuits, chordality, closure, adicity, verify.  Reports go to
stdout as text or JSON; diagnostics go to stderr.  Exit codes: 0 success,
1 a verification check failed, 2 malformed input, 3 ground set over the cap.

JSON reports are byte-identical for a fixed instance, command and seed, so
wall-clock timing appears only in the text rendering.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .bitsets import elements, format_word, size
from .chordality import chordality_report, is_l_chordal
from .closure import circuits_covered, delta_closure, delta_prime_closure
from .errors import GroundTooLargeError, InputError
from .ideal import is_l_adic
from .instances import resolve_instance
from .matroid import DEFAULT_MAX_ELEMENTS, is_binary
from .verify import full_battery, instance_battery

SIGN_NOTE = ("boundary convention: signs alternate starting positive on the "
             "smallest element, matching the graded Leibniz rule")


def _labels(word):
    return list(elements(word))


def build_parser():
    top = argparse.ArgumentParser(
        prog="osadic",
        description="quadraticity and l-adicity of Orlik-Solomon algebras of "
                    "simple matroids, decided combinatorially and by exact "
                    "ideal membership")
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, instance_required=True):
        if instance_required:
            p.add_argument("instance",
                           help="fig1, fano, K<k>, C<k>, W<k>, or "
                                "circuits:PATH, matrix:PATH, graph:PATH")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_ELEMENTS,
                       help="largest allowed ground set")
        p.add_argument("--seed", type=int, default=0,
                       help="seed echoed in reports and used by randomized checks")

    p = sub.add_parser("circuits", help="list the circuits and the rank")
    common(p)

    p = sub.add_parser("chordality", help="chord witnesses and chordality index")
    common(p)
    p.add_argument("--l", type=int, default=None,
                   help="test l-chordality only (l >= 4)")

    p = sub.add_parser("closure", help="closure of the small circuits")
    common(p)
    p.add_argument("--operator", choices=("delta", "delta-prime"),
                   default="delta")
    p.add_argument("--l", type=int, default=3,
                   help="generator cutoff: circuits of at most l elements")

    p = sub.add_parser("adicity", help="is the ideal generated in low degree")
    common(p)
    p.add_argument("--l", type=int, default=2,
                   help="adicity level (2 = quadraticity)")
    p.add_argument("--slow-verify", action="store_true",
                   help="also compare the two ideals degree by degree")
    p.add_argument("--char", type=int, default=None,
                   help="experiment: decide membership over GF(p) instead of "
                        "the rationals")

    p = sub.add_parser("verify", help="cross-validation battery")
    common(p, instance_required=False)
    p.add_argument("instance", nargs="?", default=None,
                   help="run instance checks instead of the full battery")
    p.add_argument("--slow-verify", action="store_true",
                   help="adicity checks also compare ideals degree by degree")
    return top


def cmd_circuits(args, label, family):
    by_size = {}
    for c in family.circuits:
        by_size[size(c)] = by_size.get(size(c), 0) + 1
    binary, _ = is_binary(family)
    result = {
        "count": len(family.circuits),
        "rank": family.rank(),
        "by_size": {str(k): v for k, v in sorted(by_size.items())},
        "binary_pair_test": binary,
    }
    lines = [f"rank {result['rank']}, {result['count']} circuits, "
             f"binary pair test: {binary}"]
    for c in family.circuits:
        lines.append("  " + format_word(c))
    return result, lines, True


def cmd_chordality(args, label, family):
    report = chordality_report(family)
    result = {
        "chordality_index": report.chordality_index,
        "is_chordal": report.is_chordal,
        "per_circuit": [
            {
                "circuit": _labels(i.circuit),
                "size": size(i.circuit),
                "has_chord": i.has_chord,
                "witness": None if i.witness is None else {
                    "chord": i.witness.chord,
                    "c1": _labels(i.witness.c1),
                    "c2": _labels(i.witness.c2),
                },
            }
            for i in report.per_circuit
        ],
    }
    lines = [f"chordality index {report.chordality_index} "
             f"({'chordal' if report.is_chordal else 'not chordal'})"]
    for i in report.per_circuit:
        if i.witness is not None:
            w = i.witness
            lines.append(f"  {format_word(i.circuit)}: chord {w.chord} splits "
                         f"into {format_word(w.c1)} and {format_word(w.c2)}")
        else:
            lines.append(f"  {format_word(i.circuit)}: no chord")
    if args.l is not None:
        ok, first = is_l_chordal(family, args.l)
        result["l"] = args.l
        result["is_l_chordal"] = ok
        result["first_chordless"] = None if first is None else _labels(first)
        lines.insert(1, f"{args.l}-chordal: {ok}"
                     + ("" if first is None
                        else f" (chordless: {format_word(first)})"))
    return result, lines, True


def cmd_closure(args, label, family):
    gens = family.circuits_up_to(args.l)
    op = delta_closure if args.operator == "delta" else delta_prime_closure
    system = op(gens, family.ground, args.max_n)
    covered, missing = circuits_covered(family, system)
    minimal = system.minimal_members()
    result = {
        "operator": args.operator,
        "cutoff": args.l,
        "generators": [_labels(g) for g in gens],
        "member_count": len(system),
        "minimal_members": [_labels(m) for m in minimal],
        "covers_circuits": covered,
        "missing_circuits": [_labels(c) for c in missing],
    }
    lines = [f"{args.operator} closure of the {len(gens)} circuits with at "
             f"most {args.l} elements: {len(system)} members",
             "minimal members: "
             + (", ".join(format_word(m) for m in minimal) or "none"),
             f"covers all circuits: {covered}"]
    if missing:
        lines.append("missing circuits: "
                     + ", ".join(format_word(c) for c in missing))
    return result, lines, True


def cmd_adicity(args, label, family):
    report = is_l_adic(family, args.l, slow=args.slow_verify,
                       modulus=args.char, max_n=args.max_n)
    result = {
        "l": args.l,
        "is_l_adic": report.is_l_adic,
        "method": report.method,
        "modulus": args.char,
        "verdicts": [
            {"circuit": _labels(v.circuit), "size": v.circuit_size,
             "member": v.member}
            for v in report.verdicts
        ],
    }
    lines = [f"{args.l}-adic: {report.is_l_adic} (method: {report.method}"
             + (f", over GF({args.char})" if args.char else "")
             + ")"]
    for v in report.verdicts:
        tag = "generator" if v.circuit_size <= args.l + 1 else \
            ("member" if v.member else "outside")
        lines.append(f"  {format_word(v.circuit)}: {tag}")
    lines.append(SIGN_NOTE)
    return result, lines, True


def cmd_verify(args, label, family):
    if family is None:
        checks = full_battery(seed=args.seed, max_n=args.max_n)
    else:
        checks = instance_battery(label, family, seed=args.seed,
                                  slow=args.slow_verify, max_n=args.max_n)
    all_passed = all(c.passed for c in checks)
    result = {
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                   for c in checks],
        "all_passed": all_passed,
    }
    lines = [("PASS " if c.passed else "FAIL ") + c.name + ": " + c.detail
             for c in checks]
    lines.append(("all checks passed" if all_passed else "SOME CHECKS FAILED"))
    return result, lines, all_passed


def main(argv=None):
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        label = None
        family = None
        if getattr(args, "instance", None) is not None:
            label, family = resolve_instance(args.instance, args.max_n)
        handler = {
            "circuits": cmd_circuits,
            "chordality": cmd_chordality,
            "closure": cmd_closure,
            "adicity": cmd_adicity,
            "verify": cmd_verify,
        }[args.command]
        result, lines, ok = handler(args, label, family)
    except GroundTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InputError, OSError, ValueError) as exc:
        # ValueError here is always a rejected flag value (--l, --char)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        payload = {
            "schema": 1,
            "version": __version__,
            "command": args.command,
            "seed": args.seed,
            "instance": None if family is None else {
                "label": label,
                "ground": family.ground.n,
                "circuits": [_labels(c) for c in family.circuits],
            },
            "result": result,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        if family is not None:
            print(f"instance {label}: ground {{1..{family.ground.n}}}, "
                  f"{len(family.circuits)} circuits")
        for line in lines:
            print(line)
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        print(f"elapsed: {elapsed_ms:.1f} ms")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
