#!/usr/bin/env python3
"""Run the cross-verification campaign over a range of monoid sizes.

Exhaustive below the pair-count wall, sampled above it; any mismatch
anywhere exits nonzero so the script can gate a CI job.
"""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from rookorder import verify
from rookorder.poset import EXHAUSTIVE_MAX_N, SAMPLED_MAX_N


@dataclass(frozen=True)
class CampaignConfig:
    max_n: int
    sample_count: int
    seed: int

    def mode_for(self, n: int) -> str:
        return "exhaustive" if n <= EXHAUSTIVE_MAX_N else "sampled"


def parse_config(argv=None) -> CampaignConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5,
                        help="largest monoid size to check (default 5)")
    parser.add_argument("--sample-count", type=int, default=100_000,
                        help="pairs per sampled run (default 100000)")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    if not 1 <= args.max_n <= SAMPLED_MAX_N:
        parser.error(f"--max-n must lie in 1..{SAMPLED_MAX_N}")
    return CampaignConfig(args.max_n, args.sample_count, args.seed)


def main(argv=None) -> int:
    config = parse_config(argv)
    failures = 0
    for n in range(1, config.max_n + 1):
        mode = config.mode_for(n)
        report = verify(n, mode, sample_count=config.sample_count, seed=config.seed)
        verdict = "PASS" if report.passed else "FAIL"
        print(
            f"n={n} mode={report.mode} pairs={report.pairs_checked} "
            f"order_mismatches={len(report.mismatches)} "
            f"cover_mismatches={len(report.cover_mismatches)} "
            f"oracle_mismatches={len(report.oracle_mismatches)} "
            f"elapsed={report.elapsed:.2f}s {verdict}"
        )
        if not report.passed:
            failures += 1
            for x, y, d, p in report.mismatches[:10]:
                print(f"  order: {x} vs {y} containment={d} moves={p}")
            for x, predicate, brute in report.cover_mismatches[:10]:
                print(f"  covers of {x}: predicate={predicate} brute={brute}")
            for x, formula, oracle in report.oracle_mismatches[:10]:
                print(f"  length of {x}: formula={formula} oracle={oracle}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
