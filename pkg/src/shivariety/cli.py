"""Command-line front end: ``shivariety <subcommand> --type B2 ...``.

Exit codes: 0 success (or a valid tuple), 1 invalid tuple, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

import sympy

from .affine_weyl import affine_weyl_group, format_signs, shi_document
from .characterization import first_coroot_violation, first_norm_violation
from .root_system import RootSystem, RootSystemError, root_system
from .variety import (
    HUGE_FAMILIES,
    NotAdmissibleError,
    NotAdmittedError,
    ResourceGuardError,
    act_on_component,
    enumerate_admitted,
    lambda_vector,
)

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- argument parsing helpers ----------------------------------------------------


def parse_word(text: str, rank: int) -> List[int]:
    """Digits for rank <= 9 (``"121"``); whitespace-separated integers otherwise."""
    text = text.strip()
    if not text:
        return []
    if rank <= 9 and text.isdigit():
        tokens = list(text)
    else:
        tokens = text.replace(",", " ").split()
    try:
        word = [int(t) for t in tokens]
    except ValueError:
        raise UsageError(f"bad word {text!r}: expected generator indices 0..{rank}")
    bad = [g for g in word if not 0 <= g <= rank]
    if bad:
        raise UsageError(f"bad word {text!r}: generator {bad[0]} outside 0..{rank}")
    return word


def parse_tuple(text: str, rs: RootSystem) -> List[int]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"tuple is not a JSON array: {exc.msg}")
    if not isinstance(data, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in data
    ):
        raise UsageError("tuple must be a JSON array of integers")
    if len(data) != rs.num_positive:
        raise UsageError(
            f"{rs.label} has {rs.num_positive} positive roots; tuple has {len(data)} entries"
        )
    return data


def _component_index(rs: RootSystem, lam) -> Optional[int]:
    if (rs.family, rs.rank) in HUGE_FAMILIES:
        return None
    return enumerate_admitted(rs).vectors.index(tuple(lam))


def _factor(n: int) -> str:
    return " * ".join(
        f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(sympy.factorint(n).items())
    )


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        try:
            with open(output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {output}: {exc.strerror}")
    else:
        sys.stdout.write(text)


# -- subcommands ----------------------------------------------------------------------


def cmd_element(args, rs: RootSystem) -> int:
    group = affine_weyl_group(rs)
    word = parse_word(args.word, rs.rank)
    w = group.from_word(word)
    k = group.shi_vector(w)
    lam = lambda_vector(group, w).values
    report = {
        "word": word,
        "shi_vector": shi_document(rs, k),
        "length": group.length(w),
        "sign_vector": list(group.sign_vector(w)),
        "lambda": list(lam),
        "component": _component_index(rs, lam),
        "translation": list(w.translation),
    }
    if args.format == "json":
        _emit(json.dumps(report) + "\n", args.output)
    else:
        lines = [
            f"type        {rs.label}",
            f"word        {' '.join(map(str, word)) or '(empty)'}",
            f"shi vector  {tuple(k)}",
            f"length      {report['length']}",
            f"signs       {format_signs(report['sign_vector'])}",
            f"lambda      {tuple(lam)}",
            f"component   {report['component']}",
        ]
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_validate(args, rs: RootSystem) -> int:
    t = parse_tuple(args.tuple, rs)
    checks = {"coroot": [first_coroot_violation], "norm": [first_norm_violation]}
    checks["both"] = checks["coroot"] + checks["norm"]
    violation = None
    for check in checks[args.criterion]:
        violation = check(rs, t)
        if violation is not None:
            break
    valid = violation is None
    if args.format == "json":
        out = {"type": rs.label, "tuple": t, "criterion": args.criterion, "valid": valid}
        out["violation"] = None if valid else violation.to_dict()
        _emit(json.dumps(out) + "\n", args.output)
    else:
        _emit(("valid" if valid else f"invalid: {violation}") + "\n", args.output)
    return EXIT_OK if valid else EXIT_INVALID


def cmd_components(args, rs: RootSystem) -> int:
    formula = rs.component_count()
    if args.formula_only:
        if args.format == "json":
            text = json.dumps({"type": rs.label, "formula_count": formula,
                               "factorization": _factor(formula)}) + "\n"
        else:
            text = f"{rs.label}: {formula} = {_factor(formula)}\n"
        _emit(text, args.output)
        return EXIT_OK
    table = enumerate_admitted(
        rs, allow_huge=args.allow_huge, with_representatives=not args.no_representatives
    )
    if args.format == "json":
        text = table.to_json(indent=1) + "\n"
    elif args.format == "csv":
        text = table.to_csv()
    else:
        rows = [f"{rs.label}: {table.count} components (formula {formula} = {_factor(formula)})"]
        for i, c in enumerate(table.components):
            rows.append(f"{i:>6}  {c.vector}")
        text = "\n".join(rows) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_plot(args, rs: RootSystem) -> int:
    from .plot import PlotError, render, to_string

    try:
        svg = render(rs, radius=args.radius)
    except PlotError as exc:
        raise UsageError(str(exc))
    _emit(to_string(svg) + "\n", args.output)
    return EXIT_OK


def cmd_act(args, rs: RootSystem) -> int:
    group = affine_weyl_group(rs)
    word = parse_word(args.word, rs.rank)
    lam = parse_tuple(args.tuple, rs)
    try:
        image = act_on_component(group, group.from_word(word), lam).values
    except (NotAdmissibleError, NotAdmittedError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    if args.format == "json":
        _emit(json.dumps({"type": rs.label, "word": word, "lambda": lam,
                          "image": list(image)}) + "\n", args.output)
    else:
        _emit(f"{tuple(lam)} -> {image}\n", args.output)
    return EXIT_OK


def cmd_info(args, rs: RootSystem) -> int:
    data = rs.to_dict()
    data["weyl_group_order"] = rs.weyl_group_order
    data["component_count"] = rs.component_count()
    if args.format == "json":
        _emit(json.dumps(data) + "\n", args.output)
        return EXIT_OK
    lines = [
        f"{rs.label}: |W| = {rs.weyl_group_order}, f = {rs.index_of_connection}, "
        f"components = {rs.component_count()}",
        f"cartan      {[list(r) for r in rs.cartan]}",
        f"highest     {rs.highest_root}   highest short {rs.highest_short_root}",
        "   #  root            |r|^2  coroot",
    ]
    for i, (r, q, d) in enumerate(zip(rs.positive_roots, rs.norms_sq, rs.coroot_coords)):
        lines.append(f"{i:>4}  {str(r):<15} {str(q):<6} {d}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


COMMANDS = {
    "element": cmd_element,
    "validate": cmd_validate,
    "components": cmd_components,
    "plot": cmd_plot,
    "act": cmd_act,
    "info": cmd_info,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shivariety",
        description="Affine Weyl groups, Shi coefficients and Shi-variety components.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, fmt=("text", "json")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--type", required=True, help="root system, e.g. A2, B3, G2, E6")
        p.add_argument("--format", choices=fmt, default=fmt[0])
        p.add_argument("--output", "-o", help="write to this file instead of stdout")
        return p

    p = add("element", "Shi vector, length, signs and component of a word")
    p.add_argument("--word", required=True, help="generator digits (e.g. 121) or space-separated")

    p = add("validate", "check whether a tuple is the Shi vector of an alcove")
    p.add_argument("--tuple", required=True, help="JSON array in canonical root order")
    p.add_argument("--criterion", choices=("coroot", "norm", "both"), default="coroot")

    p = add("components", "table of admitted vectors", fmt=("text", "json", "csv"))
    p.add_argument("--formula-only", action="store_true", help="print n! prod c_i only")
    p.add_argument("--allow-huge", action="store_true", help="permit E7/E8 enumeration")
    p.add_argument("--no-representatives", action="store_true",
                   help="skip the finite Weyl group partition")

    p = add("plot", "SVG of rank-2 alcoves coloured by component", fmt=("svg",))
    p.add_argument("--radius", type=int, default=6, help="maximal alcove length drawn")

    p = add("act", "act by a word on an admitted vector")
    p.add_argument("--word", required=True)
    p.add_argument("--tuple", required=True, help="admitted vector as a JSON array")

    add("info", "dump the root system")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        rs = root_system(args.type)
        return COMMANDS[args.command](args, rs)
    except (UsageError, RootSystemError, ResourceGuardError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
