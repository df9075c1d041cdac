"""Command-line front end.

    foldedodd construct {odd,double-odd,folded} --k K [--format json|edge-list]
    foldedodd spectrum  {odd,double-odd,folded} --k K [--format json|md]
    foldedodd verify    [all | C1 ... C9] --k A..B [--out DIR] [--no-allowlist]

Exit codes: 0 success, 1 claim refuted (or non-integral spectrum), 2 usage,
3 capacity.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import claims
from .exact import integral_spectrum
from .graphs import build_family
from .serialize import graph_to_edge_list, graph_to_json

FAMILIES = ("odd", "double-odd", "folded")
EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


def parse_k_range(text: str) -> range:
    """'3' or 'a..b' (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range a..b, got {text!r}") from None
    if lo < 2:
        raise argparse.ArgumentTypeError("k must be >= 2")
    return range(lo, hi + 1)


def parse_k(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if k < 2:
        raise argparse.ArgumentTypeError("k must be >= 2")
    return k


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="foldedodd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a graph")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--k", type=parse_k, required=True)
    p.add_argument("--format", choices=("json", "edge-list"), default="json")
    p.add_argument("--out", type=Path)

    p = sub.add_parser("spectrum", help="exact integer spectrum of a graph")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--k", type=parse_k, required=True)
    p.add_argument("--format", choices=("json", "md"), default="md")
    p.add_argument("--out", type=Path)
    p.add_argument("--max-k", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("verify", help="check claims over a range of k")
    p.add_argument("claims", nargs="*", default=["all"], metavar="CLAIM")
    p.add_argument("--k", "--k-range", dest="k", type=parse_k_range, required=True)
    p.add_argument("--format", choices=("json", "md"), default="md")
    p.add_argument("--out", type=Path, help="directory for claims.json and claims.md")
    p.add_argument("--max-k", type=int, default=claims.HarnessConfig.max_k)
    p.add_argument("--max-aut-n", type=int, default=claims.HarnessConfig.max_aut_n)
    p.add_argument("--no-allowlist", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="include runtime_ms (breaks byte-identical output)")
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def cmd_construct(args) -> int:
    g = build_family(args.family, args.k)
    text = graph_to_json(g) if args.format == "json" else graph_to_edge_list(g)
    _emit(text, args.out)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    if args.k > args.max_k:
        print(f"k={args.k} exceeds --max-k {args.max_k}; each extra k multiplies the elimination cost",
              file=sys.stderr)
        return EXIT_CAPACITY
    spec = integral_spectrum(build_family(args.family, args.k), jobs=args.jobs)
    if args.format == "json":
        text = json.dumps(spec.to_json(), sort_keys=True) + "\n"
    else:
        lines = [f"spectrum of {args.family} k={args.k}", "", "| eigenvalue | multiplicity |", "|---|---|"]
        lines += [f"| {ev} | {m} |" for ev, m in spec.pairs]
        lines += ["", f"residual: {spec.residual}"]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if spec.residual == 0 else EXIT_REFUTED


def cmd_verify(args, parser) -> int:
    ids = [c.upper() for c in args.claims]
    if ids == ["ALL"]:
        ids = list(claims.CLAIM_IDS)
    unknown = [c for c in ids if c not in claims.CLAIM_IDS]
    if unknown:
        parser.error(f"unknown claim id(s): {', '.join(unknown)}")
    allowlist = frozenset() if args.no_allowlist else claims.KNOWN_DISCREPANCIES
    cfg = claims.HarnessConfig(max_k=args.max_k, max_aut_n=args.max_aut_n, allowlist=allowlist)
    reports = claims.run_all(args.k, ids, cfg, jobs=args.jobs)
    as_json = claims.reports_to_json(reports, timings=args.timings)
    as_md = claims.reports_to_markdown(reports, allowlist)
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        (args.out / "claims.json").write_text(as_json)
        (args.out / "claims.md").write_text(as_md)
    sys.stdout.write(as_json if args.format == "json" else as_md)
    return claims.exit_status(reports, allowlist)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "construct":
        return cmd_construct(args)
    if args.command == "spectrum":
        return cmd_spectrum(args)
    return cmd_verify(args, parser)


if __name__ == "__main__":
    sys.exit(main())
