"""Command-line front end.

Exit codes: 0 on success, 1 on usage or parse errors, 2 when a
comparison or verification run uncovers a disagreement between the
independent implementations.
"""

import argparse
import json
import sys

from .elements import enumerate_elements, parse_one_line, rank
from .length import coinversions, length_breakdown
from .oracle import left_span, meet_dim, oracle_length, right_span
from .order import covers_of, deodhar_leq, deodhar_leq_gamma, ppr_leq
from .poset import build_hasse, export_dot, export_json, verify

USAGE_ERROR = 1
MISMATCH_ERROR = 2
_DEFAULT_SAMPLE_COUNT = 100_000


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rookorder",
        description="Rook-monoid order calculator and verification harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("len", help="length breakdown of one element")
    p.add_argument("element", help="one-line form, e.g. 4,0,2,3")

    p = sub.add_parser("cmp", help="compare two elements under every order implementation")
    p.add_argument("x")
    p.add_argument("y")

    p = sub.add_parser("covers", help="list the elements covering one element")
    p.add_argument("element")

    p = sub.add_parser("oracle", help="orbit dimensions from the exact linear-algebra oracle")
    p.add_argument("element")

    p = sub.add_parser("hasse", help="emit the full order diagram of R_n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("dot", "json"), default="dot")

    p = sub.add_parser("verify", help="cross-check all implementations over R_n")
    p.add_argument("n", type=int)
    p.add_argument("--sampled", type=int, metavar="K",
                   help="check K seeded random pairs instead of all pairs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="print the report as JSON")

    p = sub.add_parser("enum", help="list all elements of R_n, one per line")
    p.add_argument("n", type=int)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else USAGE_ERROR
    try:
        return _dispatch(args)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def _dispatch(args: argparse.Namespace) -> int:
    handler = {
        "len": _cmd_len,
        "cmp": _cmd_cmp,
        "covers": _cmd_covers,
        "oracle": _cmd_oracle,
        "hasse": _cmd_hasse,
        "verify": _cmd_verify,
        "enum": _cmd_enum,
    }[args.command]
    return handler(args)


def _cmd_len(args) -> int:
    x = parse_one_line(args.element)
    b = length_breakdown(x)
    pairs = coinversions(x)
    print(f"element: {x}")
    print(f"n: {x.n}")
    print(f"rank: {rank(x)}")
    print(f"star_weights: {','.join(map(str, b.star_weights))}")
    print(f"star_sum: {b.star_sum}")
    print(f"coinv: {b.coinv}")
    print(f"coinversion_pairs: {' '.join(f'({i},{j})' for i, j in pairs) or '-'}")
    print(f"length: {b.length}")
    print(f"dim_bx: {b.dim_bx}")
    print(f"dim_xb: {b.dim_xb}")
    print(f"dim_meet: {b.dim_meet}")
    return 0


def _cmd_cmp(args) -> int:
    x = parse_one_line(args.x)
    y = parse_one_line(args.y)
    d = deodhar_leq(x, y)
    g = deodhar_leq_gamma(x, y)
    p = ppr_leq(x, y)
    print(f"x: {x}")
    print(f"y: {y}")
    print(f"deodhar: {_verdict(d)}")
    print(f"gamma: {_verdict(g)}")
    print(f"ppr: {_verdict(p)}")
    print(f"length_x: {length_breakdown(x).length}")
    print(f"length_y: {length_breakdown(y).length}")
    if not d == g == p:
        print("implementations disagree", file=sys.stderr)
        return MISMATCH_ERROR
    return 0


def _cmd_covers(args) -> int:
    x = parse_one_line(args.element)
    for y in covers_of(x):
        print(y)
    return 0


def _cmd_oracle(args) -> int:
    x = parse_one_line(args.element)
    left = left_span(x)
    right = right_span(x)
    print(f"element: {x}")
    print(f"left_rank: {left.rank}")
    print(f"right_rank: {right.rank}")
    print(f"meet_dim: {meet_dim(left, right)}")
    print(f"oracle_length: {oracle_length(x)}")
    return 0


def _cmd_hasse(args) -> int:
    h = build_hasse(args.n)
    text = export_dot(h) if args.format == "dot" else export_json(h)
    print(text, end="")
    return 0


def _cmd_verify(args) -> int:
    if args.sampled is not None:
        mode, count = "sampled", args.sampled
    elif args.n >= 5:
        mode, count = "sampled", _DEFAULT_SAMPLE_COUNT
    else:
        mode, count = "exhaustive", _DEFAULT_SAMPLE_COUNT
    report = verify(args.n, mode, sample_count=count, seed=args.seed)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        print(f"n: {report.n}")
        print(f"mode: {report.mode}")
        if report.mode == "sampled":
            print(f"seed: {report.seed}")
        print(f"pairs_checked: {report.pairs_checked}")
        print(f"order_mismatches: {len(report.mismatches)}")
        for x, y, d, p in report.mismatches:
            print(f"  pair {x} vs {y}: containment={_verdict(d)} moves={_verdict(p)}")
        print(f"cover_mismatches: {len(report.cover_mismatches)}")
        for x, predicate, brute in report.cover_mismatches:
            print(f"  element {x}: predicate={predicate} brute={brute}")
        print(f"oracle_mismatches: {len(report.oracle_mismatches)}")
        for x, formula, oracle in report.oracle_mismatches:
            print(f"  element {x}: formula={formula} oracle={oracle}")
        print(f"elapsed_s: {report.elapsed:.3f}")
        print(f"result: {'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else MISMATCH_ERROR


def _cmd_enum(args) -> int:
    for e in enumerate_elements(args.n):
        print(e)
    return 0


def _verdict(flag: bool) -> str:
    return "true" if flag else "false"


if __name__ == "__main__":
    raise SystemExit(main())
