#!/usr/bin/env python3
"""Closed-loop run over the archived fixture corpus: simulated assessors
judge the bandit's keyword picks for six iterations, the reports land as
CSVs, and the precision series is printed per seed.

The interesting outputs are out/<seed>/precision.csv (does the curve
climb?), weights.csv (do title/anchors weights move toward the simulated
judges' preference?) and kappa.csv.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from parkbandit.corpus import build_corpus
from parkbandit.experiment import ExperimentConfig, precision_series, run_experiment
from parkbandit.reports import write_report_csvs

DEFAULT_CORPUS = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "corpus"


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--corpus", default=str(DEFAULT_CORPUS))
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--iterations", type=int, default=6)
    ap.add_argument("--assessors", type=int, default=5)
    ap.add_argument("--m", type=int, default=5)
    ap.add_argument("--out", default="experiment-out")
    args = ap.parse_args()

    model = build_corpus(args.corpus)
    print(f"corpus: {len(model.domains)} usable domains, "
          f"{len(model.skipped)} skipped")
    config = ExperimentConfig(iterations=args.iterations,
                              assessors=args.assessors, m=args.m)
    improved = 0
    for seed in args.seeds:
        reports = run_experiment(model, config, seed=seed)
        series = precision_series(reports)
        out_dir = Path(args.out) / str(seed)
        write_report_csvs(reports, out_dir)
        arrow = "up" if series[-1] > series[0] else "down"
        improved += series[-1] > series[0]
        print(f"seed {seed}: " + " ".join(f"{p:.3f}" for p in series)
              + f"  [{arrow}]")
    print(f"{improved}/{len(args.seeds)} seeds improved; CSVs in {args.out}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
