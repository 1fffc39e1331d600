import math
from decimal import Decimal
from fractions import Fraction as F
from itertools import product
from statistics import NormalDist

import pytest
from hypothesis import given, strategies as st

from almostbalanced import constraints as cs
from almostbalanced.bounds import (
    _index_to_word,
    density_F,
    density_F_pb,
    density_F_pb_bruteforce,
    limit_density,
    limit_ratio,
    table_bounds,
    verify_containment,
    zscore_sanity,
)

PAPER_TABLE = [
    (2, "0.335", "0.34"),
    (3, "0.215", "0.22"),
    (4, "0.155", "0.16"),
    (5, "0.125", "0.13"),
    (6, "0.105", "0.11"),
    (7, "0.09", "0.095"),
]


def test_density_n8():
    r = density_F(8, 1)
    assert r.count == 28 + 56 + 70 + 56 + 28 == 238
    assert r.fraction == Decimal("0.9296875")
    brute = sum(cs.in_C(x, cs.BalanceSpec(8, 2, 1)) for x in product((0, 1), repeat=8))
    assert brute == 238


def test_density_n4_is_one():
    assert density_F(4, 1).fraction == 1


@pytest.mark.parametrize("alpha_sq", [F(1, 9), F(289, 2500), F(1), F(1, 100)])
def test_log_path_matches_exact(alpha_sq):
    exact = density_F(10_000, alpha_sq)
    approx = density_F(10_000, alpha_sq, exact_limit=0)
    assert exact.exact and not approx.exact and approx.count is None
    assert abs(approx.fraction - exact.fraction) <= Decimal("1e-9") * exact.fraction


def test_log_path_matches_exact_above_limit():
    n = 20_001
    alpha_sq = F(289, 2500)
    exact = density_F(n, alpha_sq, exact_limit=n)
    approx = density_F(n, alpha_sq)
    assert not approx.exact
    assert abs(approx.fraction - exact.fraction) <= Decimal("1e-9") * exact.fraction


@given(st.integers(1, 300), st.fractions(F(1, 100), F(4), max_denominator=100), st.fractions(F(1, 100), F(4), max_denominator=100))
def test_density_monotone_in_alpha(n, a, b):
    lo, hi = sorted((a, b))
    assert density_F(n, lo).count <= density_F(n, hi).count


@given(st.integers(1, 300), st.fractions(F(1, 100), F(4), max_denominator=100))
def test_band_symmetric(n, alpha_sq):
    limits = cs.band_limits(n, 2, alpha_sq)
    if limits is not None:
        assert limits[0] + limits[1] == n
        r = density_F(n, alpha_sq)
        assert r.count == sum(math.comb(n, n - w) for w in range(limits[0], limits[1] + 1))


@pytest.mark.parametrize("q", [2, 4, 6])
@pytest.mark.parametrize("n", [1, 3, 5, 6])
def test_polarity_density_brute_force(q, n):
    brute = density_F_pb_bruteforce(n, q, 1)
    assert brute.fraction == density_F_pb(n, q, 1).fraction
    # count relation: each binary pattern stands for (q/2)^n words
    assert brute.count == density_F(n, 1).count * (q // 2) ** n


def test_polarity_density_odd_q_rejected():
    with pytest.raises(ValueError):
        density_F_pb(4, 3, 1)


def test_table_reproduces_rows():
    table = table_bounds(range(2, 8), "0.005")
    assert [(r.q, r.lower_alpha, r.upper_alpha) for r in table.rows] == [
        (q, Decimal(lo), Decimal(hi)) for q, lo, hi in PAPER_TABLE
    ]
    assert table.records()[5] == {"q": 7, "lower": "0.09", "upper": "0.095"}


@pytest.mark.parametrize("q", range(2, 12))
def test_table_brackets_normal_quantile(q):
    # alpha* solves 2 Phi(2 alpha) - 1 = 1/q
    alpha_star = NormalDist().inv_cdf((1 + 1 / q) / 2) / 2
    (row,) = table_bounds([q], "0.005").rows
    assert float(row.lower_alpha) < alpha_star <= float(row.upper_alpha)
    assert row.upper_alpha - row.lower_alpha == Decimal("0.005")


def test_table_finite_check_columns():
    (row,) = table_bounds([2], "0.005", check_n=10**6).rows
    assert row.finite_lower < Decimal("0.5") <= row.finite_upper
    assert "F(n,lower)" in table_bounds([2], "0.005", check_n=1000).to_text()


def test_table_rejects_bad_step():
    with pytest.raises(ValueError):
        table_bounds([2], "0")


def test_limit_density_matches_normal_dist():
    for alpha in (0.0, 0.1, 0.34, 1.0):
        expected = 2 * NormalDist().cdf(2 * alpha) - 1
        assert limit_density(alpha) == pytest.approx(expected, abs=1e-12)


def test_zscore_values():
    r = zscore_sanity()
    assert r.phi_068 == pytest.approx(0.7517, abs=1e-4)
    assert r.phi_067 == pytest.approx(0.7486, abs=1e-4)
    assert r.mass_068 == pytest.approx(0.5035, abs=1e-4)
    assert r.mass_067 == pytest.approx(0.4971, abs=1e-4)
    assert r.ok
    assert limit_density(0.0) == 0.0


def test_limit_ratio_large_n():
    assert limit_ratio(10**6, 1.0) == pytest.approx(math.exp(2) / 4, rel=0.01)


def test_limit_ratio_feasibility_boundary():
    assert limit_ratio(10**10, math.sqrt(math.log(2))) == pytest.approx(1.0, abs=1e-3)


def test_limit_ratio_small_n_direct():
    # direct float evaluation of the same product
    n, alpha = 8, 1.0
    d = alpha / math.sqrt(n) + 1 / n
    a = alpha * math.sqrt(n)
    direct = 2 ** (n - 2) * (0.5 - d) ** (n / 2 - a) * (0.5 + d) ** (n / 2 + a)
    assert limit_ratio(n, alpha) == pytest.approx(direct, rel=1e-12)
    assert direct == pytest.approx(0.6123, abs=1e-4)


def test_limit_ratio_rejects_p_above_one():
    with pytest.raises(ValueError):
        limit_ratio(5, 1.0)


@pytest.mark.parametrize("n", [1, 4, 8])
def test_containment_holds(n):
    r = verify_containment(n, 1)
    assert r.holds and r.counterexample is None and r.checked == 4**n


def test_containment_range():
    with pytest.raises(ValueError):
        verify_containment(11, 1)


def test_index_to_word():
    assert _index_to_word(0, 3, 4) == (0, 0, 0)
    assert _index_to_word(4**3 - 1, 3, 4) == (3, 3, 3)
    assert _index_to_word(6, 3, 4) == (0, 1, 2)
