"""Inter-assessor agreement: Cohen's kappa (pairwise) and Fleiss' kappa.

The category space is fixed at the six judgment scores {0..5} regardless of
which scores actually occur, so chance agreement stays comparable across
iterations. Fleiss requires a constant rater count per item; ragged counts
are handled upstream by deterministic subsampling (lowest assessor ids).
"""

from dataclasses import dataclass

from .errors import DegenerateMarginals, NotEnoughOverlap, UnequalRaterCounts

N_CATEGORIES = 6
CATEGORIES = tuple(range(N_CATEGORIES))


@dataclass(frozen=True)
class AgreementStats:
    cohen_mean: float | None
    cohen_pairs: int
    fleiss: float | None
    n_items: int
    n_categories: int = N_CATEGORIES


def cohen_kappa(a, b) -> float:
    """kappa = (p_o - p_e) / (1 - p_e) over the items both raters scored.

    `a` and `b` are lists of (item, score) pairs; scores are integers 0-5.
    Raises NotEnoughOverlap with fewer than 2 common items.
    """
    scores_a = dict(a)
    scores_b = dict(b)
    common = [item for item in scores_a if item in scores_b]
    n = len(common)
    if n < 2:
        raise NotEnoughOverlap(f"{n} common items, need >= 2")
    agree = sum(1 for item in common if scores_a[item] == scores_b[item])
    p_o = agree / n
    p_e = 0.0
    for c in CATEGORIES:
        marginal_a = sum(1 for item in common if scores_a[item] == c) / n
        marginal_b = sum(1 for item in common if scores_b[item] == c) / n
        p_e += marginal_a * marginal_b
    if p_e >= 1.0:
        if p_o == 1.0:
            return 1.0
        raise DegenerateMarginals("chance agreement is 1")
    return (p_o - p_e) / (1.0 - p_e)


def fleiss_kappa(matrix, n_raters_per_item: int) -> float:
    """Standard Fleiss computation over an item x category count matrix.

    Every row must sum to `n_raters_per_item` (>= 2); raises
    UnequalRaterCounts otherwise, DegenerateMarginals when every rating
    lands in one category.
    """
    if n_raters_per_item < 2:
        raise UnequalRaterCounts(f"need >= 2 raters per item, got {n_raters_per_item}")
    rows = [list(row) for row in matrix]
    if not rows:
        raise NotEnoughOverlap("empty rating matrix")
    for i, row in enumerate(rows):
        if sum(row) != n_raters_per_item:
            raise UnequalRaterCounts(
                f"row {i} sums to {sum(row)}, expected {n_raters_per_item}"
            )
    n_items = len(rows)
    n = n_raters_per_item
    p_bar = sum(
        (sum(v * v for v in row) - n) / (n * (n - 1)) for row in rows
    ) / n_items
    total = n_items * n
    p_e = sum(
        (sum(row[c] for row in rows) / total) ** 2
        for c in range(len(rows[0]))
    )
    if p_e >= 1.0:
        raise DegenerateMarginals("single category used everywhere")
    return (p_bar - p_e) / (1.0 - p_e)


def kappa_label(kappa: float) -> str:
    """Verbal strength-of-agreement band; 0.2 sits at the bottom of "fair"."""
    if kappa < 0.0:
        return "poor"
    if kappa < 0.2:
        return "slight"
    if kappa < 0.4:
        return "fair"
    if kappa < 0.6:
        return "moderate"
    if kappa < 0.8:
        return "substantial"
    return "almost perfect"


def iteration_agreement(judgments) -> AgreementStats:
    """Agreement over one iteration's non-trap judgments.

    Pairwise Cohen's kappa is averaged over assessor pairs sharing >= 2
    items; Fleiss' kappa subsamples every item down to the minimum common
    rater count, keeping the lowest assessor ids.
    """
    usable = [j for j in judgments if not j.is_trap]
    by_assessor: dict[str, dict] = {}
    by_item: dict[tuple, dict] = {}
    for j in usable:
        item = (j.domain_id, j.phrase)
        by_assessor.setdefault(j.assessor_id, {})[item] = j.score
        by_item.setdefault(item, {})[j.assessor_id] = j.score

    kappas = []
    assessors = sorted(by_assessor)
    for i, first in enumerate(assessors):
        for second in assessors[i + 1:]:
            a = list(by_assessor[first].items())
            b = list(by_assessor[second].items())
            try:
                kappas.append(cohen_kappa(a, b))
            except (NotEnoughOverlap, DegenerateMarginals):
                continue
    cohen_mean = sum(kappas) / len(kappas) if kappas else None

    fleiss = None
    if by_item:
        n_min = min(len(raters) for raters in by_item.values())
        if n_min >= 2:
            rows = []
            for item in sorted(by_item):
                raters = by_item[item]
                keep = sorted(raters)[:n_min]
                row = [0] * N_CATEGORIES
                for assessor in keep:
                    row[raters[assessor]] += 1
                rows.append(row)
            try:
                fleiss = fleiss_kappa(rows, n_min)
            except (DegenerateMarginals, UnequalRaterCounts, NotEnoughOverlap):
                fleiss = None

    return AgreementStats(
        cohen_mean=cohen_mean,
        cohen_pairs=len(kappas),
        fleiss=fleiss,
        n_items=len(by_item),
    )
