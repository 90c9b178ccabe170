"""Command line front end.

Exit codes: 0 ok / 1 discrepancy found / 2 invalid structure / 3 parse
error / 4 usage error.
"""

import argparse
import sys
from pathlib import Path

from .core import StructureError
from .formats import (
    ParseError,
    parse_structure,
    render_analyze,
    render_check,
    render_discrepancy_file,
)
from .generate import ENUM_MAX_ORDER, enumerate_ordered_semigroups
from .theorems import DEFAULT_VARIANTS, THEOREMS, equivalence_sweep, evaluate

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_INVALID = 2
EXIT_PARSE = 3
EXIT_USAGE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser():
    parser = _Parser(prog="ordsem", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a structure file")
    p.add_argument("path")

    p = sub.add_parser("analyze", help="ideals, classes, Green's relations")
    p.add_argument("path")

    p = sub.add_parser("check", help="evaluate one theorem's conditions")
    p.add_argument("path")
    p.add_argument("theorem", choices=THEOREMS)
    p.add_argument(
        "--variant",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="condition reading, e.g. thm33-reading=separate",
    )

    p = sub.add_parser("sweep", help="exhaustive equivalence sweep")
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--theorems", default="all")
    p.add_argument("--dedup", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None)
    p.add_argument(
        "--variant", action="append", default=[], metavar="KEY=VALUE"
    )
    return parser


def _parse_variants(items):
    variants = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or key not in DEFAULT_VARIANTS:
            raise UsageError(f"bad variant {item!r}")
        variants[key] = value
    return variants


def _load(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(0, f"cannot read {path}: {exc}") from None
    return parse_structure(text)


def cmd_validate(args):
    _load(args.path)
    print("ok")
    return EXIT_OK


def cmd_analyze(args):
    S = _load(args.path)
    sys.stdout.write(render_analyze(S))
    return EXIT_OK


def cmd_check(args):
    S = _load(args.path)
    report = evaluate(S, args.theorem, _parse_variants(args.variant))
    sys.stdout.write(render_check(S, report))
    return EXIT_OK if report.equivalent else EXIT_DISCREPANCY


def cmd_sweep(args):
    if not 1 <= args.max_order <= ENUM_MAX_ORDER:
        raise UsageError(f"--max-order must be between 1 and {ENUM_MAX_ORDER}")
    if args.theorems == "all":
        theorems = THEOREMS
    else:
        theorems = tuple(t.strip() for t in args.theorems.split(","))
        unknown = [t for t in theorems if t not in THEOREMS]
        if unknown:
            raise UsageError(f"unknown theorems {unknown}")
    variants = _parse_variants(args.variant)
    out_dir = Path(args.out) if args.out else None
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)

    print("theorems: " + " ".join(theorems))
    total = 0
    all_discrepancies = []
    for n in range(1, args.max_order + 1):
        structures = list(enumerate_ordered_semigroups(n, dedup=args.dedup))
        sweep = equivalence_sweep(
            structures, theorems, variants=variants or None, jobs=args.jobs
        )
        total += sweep.total
        all_discrepancies.extend(sweep.discrepancies)
        print(
            f"order {n}: {sweep.total} structures, "
            f"{len(sweep.discrepancies)} discrepancies"
        )
    print(f"total: {total} structures, {len(all_discrepancies)} discrepancies")

    for idx, disc in enumerate(all_discrepancies, start=1):
        restores = " ".join(disc.restoring) if disc.restoring else "none"
        conds = ",".join(
            f"{k}:{str(v).lower()}" for k, v in disc.report.conditions
        )
        print(
            f"discrepancy {idx}: theorem={disc.theorem} "
            f"conditions={conds} equivalent-under={restores}"
        )
        if out_dir is not None:
            name = f"{idx:04d}-thm{disc.theorem}.txt"
            (out_dir / name).write_text(render_discrepancy_file(disc))
            print(f"written: {out_dir / name}")
    return EXIT_OK if not all_discrepancies else EXIT_DISCREPANCY


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {
            "validate": cmd_validate,
            "analyze": cmd_analyze,
            "check": cmd_check,
            "sweep": cmd_sweep,
        }[args.command]
        return handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except StructureError as exc:
        print(f"invalid structure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


def run():
    raise SystemExit(main())
