#!/usr/bin/env python3
"""Synthetic bandit benchmark: LinRel selection against a uniform-random
policy on the noisy linear environment, several seeds per setting.

Prints one row per (sigma grouping, horizon) plus the leading/trailing
window means that show learning within a run.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from parkbandit.simulate import SyntheticConfig, run_benchmark


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=50)
    ap.add_argument("--horizons", type=int, nargs="+", default=[200, 500])
    ap.add_argument("--arms", type=int, default=20)
    ap.add_argument("--noise", type=float, default=0.1)
    args = ap.parse_args()

    header = (f"{'grouping':<8} {'T':>5} {'linrel':>10} {'uniform':>10} "
              f"{'gain':>7} {'lead':>7} {'trail':>7}")
    print(header)
    print("-" * len(header))
    for grouping in ("ruled", "scaled"):
        for horizon in args.horizons:
            out = run_benchmark(
                SyntheticConfig(k=args.arms, horizon=horizon,
                                noise=args.noise, sigma_grouping=grouping),
                seeds=args.seeds,
            )
            print(f"{grouping:<8} {horizon:>5} "
                  f"{out['linrel_cumulative_mean']:>10.2f} "
                  f"{out['uniform_cumulative_mean']:>10.2f} "
                  f"{out['improvement']:>6.1%} "
                  f"{out['leading_window_mean']:>7.3f} "
                  f"{out['trailing_window_mean']:>7.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
