#!/usr/bin/env python3
"""Print how the elements of R_n distribute over the length grading.

One table per size: a row per length value with its element count, a
total row, and the longest-chain height n*n implied by the grading.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from rookorder import build_hasse, rank_sizes
from rookorder.poset import HASSE_MAX_N


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=4,
                        help=f"largest size to tabulate (default 4, cap {HASSE_MAX_N})")
    args = parser.parse_args(argv)
    if not 1 <= args.max_n <= HASSE_MAX_N:
        parser.error(f"--max-n must lie in 1..{HASSE_MAX_N}")

    for n in range(1, args.max_n + 1):
        h = build_hasse(n)
        sizes = rank_sizes(h)
        print(f"R_{n}: {len(h.nodes)} elements, {len(h.edges)} covering pairs")
        print("  length  count")
        for ln, count in enumerate(sizes):
            print(f"  {ln:6d}  {count:5d}")
        widest = max(range(len(sizes)), key=sizes.__getitem__)
        print(f"  widest rank: length {widest} with {sizes[widest]} elements")
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
