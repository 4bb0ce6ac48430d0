import math
import random

import pytest
from hypothesis import given, strategies as st

from elicit.stats import (
    CrossTab2x2,
    DegenerateTable,
    DomainError,
    critical_value,
    exact_association,
    exact_or_ci,
    fisher_exact_two_sided,
    log_factorial,
    noncentral_tail,
    odds_ratio,
    odds_ratio_exact,
    wilson_ci,
)

from oracles import (
    conditional_mle,
    fisher_enumeration,
    hypergeom_prob,
    noncentral_tail_reference,
    tables_with_margins,
    wilson_reference,
    z_critical,
)


# -- Wilson -------------------------------------------------------------------


def test_z_accuracy():
    assert abs(critical_value(0.95) - float(z_critical(0.95))) < 1e-10
    assert abs(critical_value(0.99) - float(z_critical(0.99))) < 1e-10


@pytest.mark.parametrize("k, n", [(35, 43), (44, 119), (32, 58), (43, 195), (41, 44), (1, 2), (3, 200)])
def test_wilson_against_high_precision(k, n):
    low, high = wilson_reference(k, n)
    p = wilson_ci(k, n)
    assert abs(p.ci_low - float(low)) <= 1e-12
    assert abs(p.ci_high - float(high)) <= 1e-12


def test_wilson_published_rows():
    p = wilson_ci(35, 43)
    assert (p.ci_low, p.ci_high) == pytest.approx((0.6738, 0.9026), abs=5e-5)
    p = wilson_ci(44, 119)
    assert (round(100 * p.ci_low), round(100 * p.ci_high)) == (29, 46)


def test_wilson_32_of_58():
    # Frozen from the 50-digit reference; the published lower bound is 43.
    p = wilson_ci(32, 58)
    assert p.ci_low == pytest.approx(0.424520831258446, abs=1e-12)
    assert p.ci_high == pytest.approx(0.672501459522188, abs=1e-12)


def test_wilson_zero_successes():
    p = wilson_ci(0, 10)
    assert p.ci_low == 0.0 and p.p_hat == 0.0 and p.ci_high > 0
    assert wilson_ci(10, 10).ci_high == 1.0


@pytest.mark.parametrize("k, n", [(0, 0), (5, 4), (-1, 3)])
def test_wilson_domain(k, n):
    with pytest.raises(DomainError):
        wilson_ci(k, n)


@pytest.mark.parametrize("confidence", [0.0, 1.0, 1.5])
def test_wilson_confidence_domain(confidence):
    with pytest.raises(DomainError):
        wilson_ci(1, 2, confidence)


@given(st.integers(1, 500).flatmap(lambda n: st.tuples(st.integers(0, n), st.just(n))),
       st.floats(0.5, 0.999))
def test_wilson_brackets_estimate(kn, confidence):
    k, n = kn
    p = wilson_ci(k, n, confidence)
    assert 0.0 <= p.ci_low <= p.p_hat <= p.ci_high <= 1.0


@given(st.integers(1, 300).flatmap(lambda n: st.tuples(st.integers(0, n), st.just(n))))
def test_wilson_widens_with_confidence(kn):
    k, n = kn
    narrow, wide = wilson_ci(k, n, 0.9), wilson_ci(k, n, 0.99)
    assert wide.ci_low <= narrow.ci_low and narrow.ci_high <= wide.ci_high


# -- Fisher -------------------------------------------------------------------


def test_fisher_all_tables_qualify():
    assert fisher_exact_two_sided(CrossTab2x2(1, 1, 1, 1)) == pytest.approx(1.0, rel=1e-12)


def test_fisher_extreme_table():
    # Only a=0 and a=5 are as unlikely as observed: 2 / C(10, 5).
    p = fisher_exact_two_sided(CrossTab2x2(0, 5, 5, 0))
    assert p == pytest.approx(2 / 252, rel=1e-12)
    assert p == pytest.approx(fisher_enumeration(0, 5, 5, 0), rel=1e-12)


def test_fisher_published_table():
    p = fisher_exact_two_sided(CrossTab2x2(41, 3, 22, 53))
    assert p < 1e-4
    assert p == pytest.approx(fisher_enumeration(41, 3, 22, 53), rel=1e-12)


@pytest.mark.parametrize("cells", [(0, 0, 3, 4), (3, 0, 4, 0), (0, 0, 0, 1)])
def test_fisher_degenerate(cells):
    with pytest.raises(DegenerateTable):
        fisher_exact_two_sided(CrossTab2x2(*cells))


def test_crosstab_validation():
    with pytest.raises(ValueError):
        CrossTab2x2(-1, 2, 3, 4)
    with pytest.raises(ValueError):
        CrossTab2x2(0, 0, 0, 0)


def test_log_factorial_table():
    for n in range(0, 200):
        assert log_factorial(n) == pytest.approx(math.log(math.factorial(n)), rel=1e-14, abs=1e-14)


# -- odds ratio -----------------------------------------------------------------


def test_odds_ratio_examples():
    t = CrossTab2x2(41, 3, 22, 53)
    assert odds_ratio_exact(t).as_integer_ratio() == (2173, 66)
    assert odds_ratio(t) == pytest.approx(2173 / 66, rel=1e-15)
    assert odds_ratio(CrossTab2x2(1, 1, 1, 1)) == 1.0
    assert odds_ratio(CrossTab2x2(2, 0, 1, 5)) == math.inf
    assert math.isnan(odds_ratio(CrossTab2x2(0, 0, 1, 5)))
    assert odds_ratio(CrossTab2x2(0, 1, 1, 5)) == 0.0


@given(*(st.integers(1, 50) for _ in range(4)))
def test_odds_ratio_row_swap_inverts(a, b, c, d):
    assert odds_ratio(CrossTab2x2(a, b, c, d)) * odds_ratio(CrossTab2x2(c, d, a, b)) == pytest.approx(1.0, rel=1e-14)


# -- exact OR interval ------------------------------------------------------------


def test_or_ci_symmetric_table_contains_one():
    low, high = exact_or_ci(CrossTab2x2(1, 1, 1, 1))
    assert low < 1.0 < high


def test_or_ci_support_minimum():
    low, high = exact_or_ci(CrossTab2x2(0, 5, 5, 5))
    assert low == 0.0 and math.isfinite(high)


def test_or_ci_support_maximum():
    low, high = exact_or_ci(CrossTab2x2(5, 0, 5, 5))
    assert high == math.inf and low > 0


def test_or_ci_published_table_contains_mle():
    t = CrossTab2x2(41, 3, 22, 53)
    low, high = exact_or_ci(t)
    mle = conditional_mle(41, 3, 22, 53)
    assert low < mle < high
    # Cross-check the tail conditions against the 50-digit reference.
    assert noncentral_tail_reference(41, 3, 22, 53, low, True) == pytest.approx(0.025, abs=1e-6)
    assert noncentral_tail_reference(41, 3, 22, 53, high, False) == pytest.approx(0.025, abs=1e-6)


def test_or_ci_degenerate():
    with pytest.raises(DegenerateTable):
        exact_or_ci(CrossTab2x2(0, 0, 2, 3))


def test_noncentral_tail_matches_reference():
    rng = random.Random(5)
    for _ in range(30):
        cells = [rng.randint(0, 12) for _ in range(4)]
        t = CrossTab2x2(*cells) if sum(cells) else CrossTab2x2(1, 0, 0, 0)
        psi = math.exp(rng.uniform(-4, 4))
        for upper in (True, False):
            got = noncentral_tail(t, psi, upper)
            assert got == pytest.approx(noncentral_tail_reference(*t.as_tuple(), psi, upper), abs=1e-13)


def test_noncentral_tail_at_one_is_central():
    t = CrossTab2x2(3, 4, 5, 2)
    upper = sum(hypergeom_prob(u) for u in tables_with_margins(3, 4, 5, 2) if u[0] >= 3)
    assert noncentral_tail(t, 1.0, True) == pytest.approx(float(upper), rel=1e-13)


def test_association_bundle():
    assoc = exact_association(CrossTab2x2(41, 3, 22, 53))
    assert assoc.or_ci_low <= assoc.sample_or <= assoc.or_ci_high
    assert 0 < assoc.p_two_sided <= 1
    assert not assoc.degenerate
