"""Command line interface: ``fibrometer <subcommand> <input.grp | --braid SPEC> [flags]``."""

from __future__ import annotations

import argparse
import json
import sys

from .alexander import alexander_polynomial, twisted_via_cover, untwisted_rep
from .errors import FibrometerError, InputError, LimitError
from .presentation import braid_to_presentation, format_presentation, parse_braid_spec, parse_presentation
from .quotients import MAX_DEGREE, kernel_key, search_homs
from .verdict import SearchLimits, fibering_search, rank_profile, report

EXIT_OK, EXIT_INPUT, EXIT_LIMITS = 0, 2, 3


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="presentation file (.grp)")
    common.add_argument("--braid", help='braid spec, e.g. "strands=3;word=1,-2,1,-2"')
    common.add_argument("--max-cover-n", type=int, default=8)
    common.add_argument("--max-sym-degree", type=int, default=4)
    common.add_argument("--max-image-order", type=int, default=24)
    common.add_argument("--search-budget", type=int, default=10 ** 6)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--aspherical", action="store_true",
                        help="tag the input as the group of an aspherical 3-manifold")
    parser = argparse.ArgumentParser(prog="fibrometer", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("alexander", "untwisted Alexander polynomial"),
        ("twisted", "twisted Alexander polynomials over quotients to S_k"),
        ("profile", "rank/Betti profile of cyclic covers"),
        ("verdict", "fibering obstruction search"),
        ("convert", "print the presentation in .grp form"),
    ]:
        sub.add_parser(name, parents=[common], help=help_)
    return parser


def _load(args):
    if (args.input is None) == (args.braid is None):
        raise InputError("give exactly one of an input file or --braid")
    if args.braid is not None:
        p, phi = braid_to_presentation(parse_braid_spec(args.braid))
        return p, phi, True
    try:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from None
    p, phi = parse_presentation(text)
    return p, phi, args.aspherical


def _emit(obj, text: str, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")
    else:
        sys.stdout.write(text)


def _run(args) -> None:
    p, phi, aspherical = _load(args)
    if args.command == "convert":
        sys.stdout.write(format_presentation(p, phi))
        return
    if args.command == "alexander":
        res = alexander_polynomial(p, untwisted_rep(p, phi))
        obj = {"polynomial": str(res.polynomial), "monic": res.monic, "zero": res.zero}
        _emit(obj, f"{res.polynomial}\nmonic: {str(res.monic).lower()}\n", args.format)
        return
    if args.command == "profile":
        prof = rank_profile(p, phi, args.max_cover_n)
        obj = [{"n": e.n, "rank_upper": e.rank_upper, "b1_lower": e.b1_lower, "torsion": list(e.torsion)}
               for e in prof.entries]
        lines = ["   n  rank<=  b1>=  torsion"]
        for e in prof.entries:
            lines.append(f"  {e.n:2d}  {e.rank_upper:6d}  {e.b1_lower:4d}  {' '.join(map(str, e.torsion)) or '-'}")
        lines.append(f"gradient estimate: {prof.gradient_estimate}")
        _emit(obj, "\n".join(lines) + "\n", args.format)
        return
    if args.command == "twisted":
        if args.max_sym_degree > MAX_DEGREE:
            raise LimitError(f"symmetric degree {args.max_sym_degree} exceeds cap {MAX_DEGREE}")
        rows, spent, seen = [], 0, set()
        for k in range(1, args.max_sym_degree + 1):
            result = search_homs(p, k, args.search_budget - spent)
            spent += result.nodes
            for hom in result.homs:
                if hom.image_order > args.max_image_order or kernel_key(hom) in seen:
                    continue
                seen.add(kernel_key(hom))
                res = twisted_via_cover(p, hom, phi)
                rows.append({
                    "hom": hom.to_json(),
                    "polynomial": str(res.polynomial),
                    "monic": res.monic,
                    "zero": res.zero,
                    "divisibility": res.divisibility,
                    "substituted": None if res.substituted is None else str(res.substituted),
                })
        lines = []
        for r in rows:
            h = r["hom"]
            imgs = " ".join("[" + ",".join(map(str, x)) + "]" for x in h["images"])
            flag = "zero" if r["zero"] else ("monic" if r["monic"] else "non-monic")
            lines.append(f"S{h['degree']} |G|={h['image_order']} {imgs}: {r['polynomial']} ({flag})")
        _emit(rows, "\n".join(lines) + "\n", args.format)
        return
    if args.command == "verdict":
        limits = SearchLimits(args.max_sym_degree, args.max_image_order, args.search_budget, args.max_cover_n)
        v = fibering_search(p, phi, limits, aspherical=aspherical)
        sys.stdout.buffer.write(report(v, args.format))
        sys.stdout.flush()
        return
    raise InputError(f"unknown command {args.command}")


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        _run(args)
    except InputError as exc:
        print(f"fibrometer: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LimitError as exc:
        print(f"fibrometer: limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMITS
    except FibrometerError as exc:
        print(f"fibrometer: {exc}", file=sys.stderr)
        return 1
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
