"""Binomial proportions and exact 2x2 inference."""

from elicit.stats.contingency import (
    CrossTab2x2,
    DegenerateTable,
    ExactAssociation,
    degenerate_association,
    exact_association,
    exact_or_ci,
    fisher_exact_two_sided,
    log_comb,
    log_factorial,
    noncentral_tail,
    odds_ratio,
    odds_ratio_exact,
)
from elicit.stats.proportion import DomainError, Proportion, critical_value, wilson_ci

__all__ = [
    "CrossTab2x2",
    "DegenerateTable",
    "DomainError",
    "ExactAssociation",
    "Proportion",
    "critical_value",
    "degenerate_association",
    "exact_association",
    "exact_or_ci",
    "fisher_exact_two_sided",
    "log_comb",
    "log_factorial",
    "noncentral_tail",
    "odds_ratio",
    "odds_ratio_exact",
    "wilson_ci",
]
