from __future__ import annotations

import math
from dataclasses import dataclass
from statistics import NormalDist


class DomainError(ValueError):
    pass


def critical_value(confidence: float) -> float:
    """Two-sided standard normal critical value for ``confidence``."""
    if not 0.0 < confidence < 1.0:
        raise DomainError(f"confidence must be in (0, 1), got {confidence}")
    return NormalDist().inv_cdf(0.5 + confidence / 2.0)


@dataclass(frozen=True)
class Proportion:
    k: int
    n: int
    p_hat: float
    ci_low: float
    ci_high: float
    confidence: float = 0.95


def wilson_ci(k: int, n: int, confidence: float = 0.95) -> Proportion:
    """k/n with its Wilson score interval.

    The endpoints are the roots in p of (p_hat - p)^2 = z^2 p (1 - p) / n.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not 0 <= k <= n:
        raise DomainError(f"k must lie in [0, n], got k={k}, n={n}")
    z = critical_value(confidence)
    z2 = z * z
    # Center/half-width in count units keep wilson(k) and wilson(n-k) mirrored.
    denom = n + z2
    center = (k + z2 / 2.0) / denom
    half = z * math.sqrt(k * (n - k) / n + z2 / 4.0) / denom
    low = 0.0 if k == 0 else max(0.0, center - half)
    high = 1.0 if k == n else min(1.0, center + half)
    return Proportion(k, n, k / n, low, high, confidence)
