import math
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rulemeasures.stats import (
    hypergeom_cdf,
    poisson_cdf,
    poisson_sf,
    std_normal_cdf,
    std_normal_quantile,
    std_normal_sf,
)


def _poisson_sf_by_summation(lam: float, k: int) -> float:
    """Independent oracle: direct stable summation of the upper tail."""
    if k == 0:
        return 1.0
    if lam == 0.0:
        return 0.0
    log_term = k * math.log(lam) - lam - math.lgamma(k + 1)
    term = math.exp(log_term)
    total = 0.0
    i = k
    while term > total * 1e-19 or i < lam + 10 * math.sqrt(lam) + 10:
        total += term
        i += 1
        term *= lam / i
        if i > k + 10_000:
            break
    return total


@pytest.mark.parametrize("lam", [0.1, 1.0, 3.0, 10.0, 100.0])
def test_poisson_sf_against_summation_oracle(lam):
    for k in range(0, 201):
        got = poisson_sf(lam, k)
        want = _poisson_sf_by_summation(lam, k)
        if want > 1e-300:
            # Below the normal double range relative precision is physically
            # unavailable, so the contract is checked above it.
            assert abs(got - want) <= 1e-10 * want, (lam, k, got, want)
        else:
            assert got <= 1e-280


def test_poisson_sf_large_lambda():
    # Median-ish point of a large Poisson stays accurate and monotone.
    lam = 1e4
    assert 0.49 < poisson_sf(lam, 10_000) < 0.51
    values = [poisson_sf(lam, k) for k in range(9_900, 10_101, 10)]
    assert values == sorted(values, reverse=True)


def test_poisson_edge_cases():
    assert poisson_sf(0.0, 0) == 1.0
    assert poisson_sf(0.0, 5) == 0.0
    assert poisson_sf(2.5, 0) == 1.0
    assert poisson_cdf(2.5, -1) == 0.0
    assert math.isclose(poisson_cdf(2.5, 3) + poisson_sf(2.5, 4), 1.0)
    with pytest.raises(ValueError):
        poisson_sf(-1.0, 2)
    with pytest.raises(ValueError):
        poisson_sf(1.0, -2)


def test_normal_cdf_reference_values():
    # Classical table values, accurate to 1e-12.
    assert abs(std_normal_cdf(0.0) - 0.5) <= 1e-12
    assert abs(std_normal_cdf(1.0) - 0.8413447460685429) <= 1e-12
    assert abs(std_normal_cdf(-1.96) - 0.024997895148220435) <= 1e-12
    assert abs(std_normal_cdf(3.0) - 0.9986501019683699) <= 1e-12


@given(st.floats(-6.0, 6.0))
def test_normal_cdf_sf_complement(z):
    assert abs(std_normal_cdf(z) + std_normal_sf(z) - 1.0) <= 1e-12


def test_normal_quantile_round_trip():
    for i in range(-60, 61):
        z = i / 10.0
        p = std_normal_cdf(z)
        assert abs(std_normal_quantile(p) - z) <= 1e-8, z


def test_normal_quantile_domain():
    with pytest.raises(ValueError):
        std_normal_quantile(0.0)
    with pytest.raises(ValueError):
        std_normal_quantile(1.0)


def _hypergeom_cdf_brute(population, successes, draws, k):
    """Oracle: enumerate every draw of the given size."""
    items = list(range(population))
    marked = set(range(successes))
    hits = 0
    total = 0
    for combo in combinations(items, draws):
        total += 1
        if len(marked.intersection(combo)) <= k:
            hits += 1
    return hits / total


def test_hypergeom_cdf_matches_brute_force_exactly():
    for population in (5, 8, 11, 12):
        for successes in range(0, population + 1, 3):
            for draws in range(0, population + 1, 4):
                for k in range(-1, draws + 1):
                    got = hypergeom_cdf(population, successes, draws, k)
                    want = _hypergeom_cdf_brute(population, successes, draws, k)
                    assert got == want, (population, successes, draws, k)


def test_hypergeom_cdf_bounds():
    assert hypergeom_cdf(100, 40, 50, -1) == 0.0
    assert hypergeom_cdf(100, 40, 50, 40) == 1.0
    with pytest.raises(ValueError):
        hypergeom_cdf(10, 11, 5, 2)
