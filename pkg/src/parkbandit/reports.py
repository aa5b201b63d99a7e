"""CSV emission for iteration report series.

Three files: precision per iteration, weight evolution per feature, and
agreement statistics. Column layouts are part of the external contract.
"""

import csv
from pathlib import Path

from .features import FEATURE_LABELS


def write_precision_csv(reports: list[dict], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["iteration", "precision"])
        for report in reports:
            writer.writerow([report["iteration"], repr(report["precision"])])


def write_weights_csv(reports: list[dict], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["iteration", "feature", "weight"])
        for report in reports:
            for label in FEATURE_LABELS:
                writer.writerow(
                    [report["iteration"], label, repr(report["weights"][label])]
                )


def write_kappa_csv(reports: list[dict], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["iteration", "cohen_kappa_mean", "fleiss_kappa"])
        for report in reports:
            agreement = report["agreement"] or {}
            cohen = agreement.get("cohen_mean")
            fleiss = agreement.get("fleiss")
            writer.writerow([
                report["iteration"],
                "" if cohen is None else repr(cohen),
                "" if fleiss is None else repr(fleiss),
            ])


def write_report_csvs(reports: list[dict], out_dir: str | Path) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = [
        out / "precision.csv",
        out / "weights.csv",
        out / "kappa.csv",
    ]
    write_precision_csv(reports, paths[0])
    write_weights_csv(reports, paths[1])
    write_kappa_csv(reports, paths[2])
    return paths
