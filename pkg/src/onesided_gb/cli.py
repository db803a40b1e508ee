"""Command-line front end.

Exit codes: 0 success, 2 completion bound exceeded, 3 parse error,
4 truncated enumeration where a finite answer was required, 5 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from .completion import CompletionLimits, complete
from .green import (
    LEFT,
    RIGHT,
    GreenContext,
    IncompletePresentationError,
    classify,
    describe_classes,
    format_basis_table,
    ideal_basis,
    render_eggbox,
)
from .poly import PolyParseError, TagMismatchError, format_poly, parse_poly
from .presentation import PresentationError, load_presentation, relations_to_polynomials
from .reduction import MixedSystem, normal_form
from .words import AlphabetError, Tag

EXIT_OK = 0
EXIT_BOUND = 2
EXIT_PARSE = 3
EXIT_TRUNCATED = 4
EXIT_USAGE = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="presentation file")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    defaults = CompletionLimits()
    common.add_argument("--max-passes", type=_positive, default=defaults.max_passes)
    common.add_argument("--max-term-length", type=_positive, default=defaults.max_term_length)
    common.add_argument("--max-basis-size", type=_positive, default=defaults.max_basis_size)

    parser = _Parser(prog="onesided-gb", description="One-sided ideals and Green's relations via tagged Groebner bases.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("complete", parents=[common], help="complete the system in FILE")
    p.add_argument("--trace", action="store_true", help="list every match processed")

    p = sub.add_parser("reduce", parents=[common], help="normal form of a polynomial")
    p.add_argument("--poly", required=True, help="polynomial expression")
    p.add_argument("--trace", action="store_true", help="print each reduction step")
    p.add_argument("--seed", type=int, help="use a random strategy with this seed")
    p.add_argument("--complete", action="store_true", help="complete the system before reducing")

    for name, helptext in (("ideal", "Groebner basis of a one-sided ideal"),
                           ("member", "one-sided ideal membership")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--side", required=True, choices=(RIGHT, LEFT))
        p.add_argument("--gen", required=True, action="append", help="generator word (repeatable)")
        if name == "member":
            p.add_argument("--elem", required=True, help="word or untagged polynomial to test")

    p = sub.add_parser("green", parents=[common], help="Green's relations and eggbox diagram")
    p.add_argument("--max-length", type=_positive, default=8, help="word length bound for elements")
    p.add_argument("--require-finite", action="store_true", help="fail with exit 4 if the element list is truncated")
    p.add_argument("--workers", type=_positive, default=1)
    return parser


def _limits(args) -> CompletionLimits:
    return CompletionLimits(args.max_passes, args.max_term_length, args.max_basis_size)


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    elif text:
        print(text)


def _file_system(pres, tag_side: Tag) -> MixedSystem:
    polys = relations_to_polynomials(pres) + list(pres.tagged_polynomials)
    return MixedSystem.build(polys, pres.order, tag_side)


def _tag_side(pres, extra=()) -> Tag:
    tags = {p.tag for p in list(pres.tagged_polynomials) + list(extra) if p.is_tagged}
    if len(tags) > 1:
        raise UsageError("left-tagged and right-tagged polynomials cannot be mixed")
    return tags.pop() if tags else Tag.LEFT


def cmd_complete(args, pres) -> int:
    system = _file_system(pres, _tag_side(pres))
    res = complete(system, _limits(args), record=args.trace)
    basis = res.basis.format()
    data = {"status": res.status, "passes": res.passes_used, "spolys_added": res.spolys_added,
            "basis": basis}
    lines = []
    if args.trace:
        data["log"] = res.log
        lines += [json.dumps(rec, sort_keys=True) for rec in res.log]
    lines += [f"status: {res.status}", f"passes: {res.passes_used}"] + basis
    _emit(args, data, "\n".join(lines))
    return EXIT_OK if res.complete else EXIT_BOUND


def cmd_reduce(args, pres) -> int:
    f = parse_poly(args.poly, pres.alphabet)
    system = _file_system(pres, _tag_side(pres, [f]))
    status = "given"
    if args.complete:
        res = complete(system, _limits(args))
        system, status = res.basis, res.status
        if not res.complete:
            print(f"warning: completion stopped ({res.status}); reducing by the partial basis", file=sys.stderr)
    rng = random.Random(args.seed) if args.seed is not None else None
    nf, steps = normal_form(f, system, rng=rng)
    text_nf = format_poly(nf, pres.order)
    data = {"input": format_poly(f, pres.order), "normal_form": text_nf, "system": system.format(),
            "system_status": status}
    lines = []
    if args.trace:
        data["trace"] = [s.to_json() for s in steps]
        for n, s in enumerate(steps, 1):
            j = s.to_json()
            lines.append(f"step {n}: rule {j['rule']} ({system.format()[j['rule']]}), "
                         f"k = {j['k']}, u = {j['u'] or '1'}, v = {j['v'] or '1'}")
    lines.append(text_nf)
    _emit(args, data, "\n".join(lines))
    return EXIT_BOUND if status not in ("given", "complete") else EXIT_OK


def _gens(args, pres) -> list:
    return [pres.parse_word(g) for g in args.gen]


def cmd_ideal(args, pres) -> int:
    ctx = GreenContext.build(pres, _limits(args))
    basis = ideal_basis(ctx, args.side, _gens(args, pres))
    data = basis.to_json()
    lines = [f"status: {basis.status}", "tagged:"]
    lines += ["  " + t for t in data["tagged"]] or ["  0"]
    lines.append("untagged:")
    lines += ["  " + t for t in data["untagged"]]
    _emit(args, data, "\n".join(lines))
    return EXIT_OK if basis.complete else EXIT_BOUND


def cmd_member(args, pres) -> int:
    candidate = parse_poly(args.elem, pres.alphabet)
    if candidate.is_tagged:
        raise UsageError("--elem must be untagged")
    ctx = GreenContext.build(pres, _limits(args))
    basis = ideal_basis(ctx, args.side, _gens(args, pres))
    member = basis.contains(candidate)
    # reducing to zero proves membership even under a partial basis
    decided = member or basis.complete
    data = {"member": member if decided else None, "status": basis.status,
            "elem": format_poly(candidate, pres.order), "side": args.side}
    answer = "yes" if member else ("no" if decided else "unknown")
    _emit(args, data, answer)
    return EXIT_OK if decided else EXIT_BOUND


def cmd_green(args, pres) -> int:
    gc = classify(pres, _limits(args), args.max_length, workers=args.workers)
    text = "\n\n".join([format_basis_table(gc), describe_classes(gc), render_eggbox(gc).rstrip()])
    data = gc.to_json()
    data["eggbox"] = render_eggbox(gc)
    _emit(args, data, text)
    if args.require_finite and gc.elements.truncated:
        print(f"error: element list truncated at length {args.max_length}", file=sys.stderr)
        return EXIT_TRUNCATED
    return EXIT_OK


COMMANDS = {
    "complete": cmd_complete,
    "reduce": cmd_reduce,
    "ideal": cmd_ideal,
    "member": cmd_member,
    "green": cmd_green,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        pres = load_presentation(args.file)
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    except PresentationError as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return COMMANDS[args.command](args, pres)
    except (PolyParseError, AlphabetError, PresentationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IncompletePresentationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (UsageError, TagMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
