"""Exact inference for a single 2x2 table.

Rows are gate present / absent, columns are outcome / not outcome::

            outcome   not outcome
    gate       a           b
    no gate    c           d

All probabilities are computed from the hypergeometric (central or Fisher
noncentral) distribution of ``a`` given the table margins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

# Tables whose probability is within this relative slack of the observed
# one count as "no more probable" (guards against float ties).
TIE_SLACK = 1e-7


class DegenerateTable(ValueError):
    """A row or column total is zero; every test has p = 1."""


@dataclass(frozen=True)
class CrossTab2x2:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c, self.d) < 0:
            raise ValueError("cell counts must be non-negative")
        if self.total < 1:
            raise ValueError("table must contain at least one observation")

    @property
    def total(self) -> int:
        return self.a + self.b + self.c + self.d

    @property
    def margins(self) -> tuple[int, int, int, int]:
        """(row 1, row 2, column 1, column 2) totals."""
        return self.a + self.b, self.c + self.d, self.a + self.c, self.b + self.d

    def is_degenerate(self) -> bool:
        return 0 in self.margins

    def support(self) -> range:
        """Values ``a`` can take with the margins held fixed."""
        row1, row2, col1, _ = self.margins
        return range(max(0, col1 - row2), min(col1, row1) + 1)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d


@dataclass(frozen=True)
class ExactAssociation:
    sample_or: float  # inf for a positive numerator over zero, nan for 0/0
    or_ci_low: float
    or_ci_high: float
    p_two_sided: float
    confidence: float = 0.95
    degenerate: bool = False


@lru_cache(maxsize=4096)
def log_factorial(n: int) -> float:
    if n < 0:
        raise ValueError("log_factorial of a negative number")
    return math.lgamma(n + 1)


def log_comb(n: int, k: int) -> float:
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k)


def _log_weights(t: CrossTab2x2) -> tuple[range, list[float]]:
    row1, row2, col1, _ = t.margins
    xs = t.support()
    return xs, [log_comb(row1, x) + log_comb(row2, col1 - x) for x in xs]


def _require_margins(t: CrossTab2x2) -> None:
    if t.is_degenerate():
        raise DegenerateTable(f"zero margin in table {t.as_tuple()}")


def fisher_exact_two_sided(t: CrossTab2x2) -> float:
    """Two-sided p: total probability of tables no more likely than ``t``."""
    _require_margins(t)
    xs, logw = _log_weights(t)
    row1, row2, col1, _ = t.margins
    log_norm = log_comb(row1 + row2, col1)
    log_obs = logw[t.a - xs.start]
    cutoff = log_obs + math.log1p(TIE_SLACK)
    p = math.fsum(math.exp(lw - log_norm) for lw in logw if lw <= cutoff)
    return min(1.0, p)


def odds_ratio_exact(t: CrossTab2x2) -> Fraction | None:
    """a*d / (b*c) as a fraction; None when the denominator is zero."""
    den = t.b * t.c
    return Fraction(t.a * t.d, den) if den else None


def odds_ratio(t: CrossTab2x2) -> float:
    exact = odds_ratio_exact(t)
    if exact is not None:
        return float(exact)
    return math.inf if t.a * t.d > 0 else math.nan


def _logsumexp(values: list[float]) -> float:
    top = max(values)
    if top == -math.inf:
        return top
    return top + math.log(math.fsum(math.exp(v - top) for v in values))


def _tail(xs: range, logw: list[float], a: int, log_psi: float, upper: bool) -> float:
    terms = [lw + x * log_psi for x, lw in zip(xs, logw)]
    idx = a - xs.start
    part = terms[idx:] if upper else terms[: idx + 1]
    return math.exp(_logsumexp(part) - _logsumexp(terms))


def noncentral_tail(t: CrossTab2x2, psi: float, upper: bool) -> float:
    """P(X >= a) (``upper``) or P(X <= a) under odds ratio ``psi``.

    X follows Fisher's noncentral hypergeometric distribution with the
    margins of ``t``.
    """
    xs, logw = _log_weights(t)
    if psi == 0.0:
        return 1.0 if (not upper or t.a == xs.start) else 0.0
    if math.isinf(psi):
        return 1.0 if (upper or t.a == xs.stop - 1) else 0.0
    return _tail(xs, logw, t.a, math.log(psi), upper)


def _solve_log_psi(f, target: float, increasing: bool, rtol: float) -> float:
    lo, hi = -1.0, 1.0

    def below(x: float) -> bool:
        return (f(x) < target) == increasing

    step = 2.0
    while not below(lo):
        lo -= step
        step *= 2.0
    step = 2.0
    while below(hi):
        hi += step
        step *= 2.0
    width = math.log1p(rtol)
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if below(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def exact_or_ci(
    t: CrossTab2x2, confidence: float = 0.95, rtol: float = 1e-8
) -> tuple[float, float]:
    """Conditional exact (Cornfield) interval for the odds ratio.

    The lower limit is the odds ratio whose upper tail at the observed ``a``
    equals (1 - confidence) / 2, the upper limit likewise for the lower tail.
    """
    _require_margins(t)
    if not 0.0 < confidence < 1.0:
        raise ValueError("confidence must be in (0, 1)")
    alpha_half = (1.0 - confidence) / 2.0
    xs, logw = _log_weights(t)

    def tail(log_psi: float, upper: bool) -> float:
        return _tail(xs, logw, t.a, log_psi, upper)

    if t.a == xs.start:
        low = 0.0
    else:
        low = math.exp(_solve_log_psi(lambda u: tail(u, True), alpha_half, True, rtol))
    if t.a == xs.stop - 1:
        high = math.inf
    else:
        high = math.exp(_solve_log_psi(lambda u: tail(u, False), alpha_half, False, rtol))
    return low, high


def exact_association(t: CrossTab2x2, confidence: float = 0.95) -> ExactAssociation:
    """Sample odds ratio, exact interval and Fisher p for one table."""
    low, high = exact_or_ci(t, confidence)
    return ExactAssociation(
        sample_or=odds_ratio(t),
        or_ci_low=low,
        or_ci_high=high,
        p_two_sided=fisher_exact_two_sided(t),
        confidence=confidence,
    )


def degenerate_association(t: CrossTab2x2, confidence: float = 0.95) -> ExactAssociation:
    return ExactAssociation(
        sample_or=odds_ratio(t),
        or_ci_low=0.0,
        or_ci_high=math.inf,
        p_two_sided=1.0,
        confidence=confidence,
        degenerate=True,
    )
