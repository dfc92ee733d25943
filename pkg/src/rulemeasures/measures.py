"""The 61 objective interestingness measures and their registry.

Each measure maps a 2x2 contingency table to an extended-real value:
a finite float, ``math.inf`` / ``-math.inf``, or ``None`` for undefined.
The shared division convention is x/0 -> signed infinity for x != 0 and
0/0 -> undefined; entropy-style terms use 0 * log(0) := 0.

Evaluators are written against raw counts (a, b, c, d) =
(n_xy, n_xny, n_nxy, n_nxny) for speed: the property-verification engine
calls them millions of times.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .contingency import ContingencyTable
from .stats import (
    hypergeom_cdf,
    poisson_sf,
    std_normal_quantile,
    std_normal_sf,
)

Value = Optional[float]
_INF = math.inf


@dataclass(frozen=True)
class MeasureParams:
    """Tunable parameters shared by a handful of measures."""

    sigma_c: float = 0.5      # confidence threshold of the Fukuda criterion
    k_weight: int = 2         # lift exponent of the weighted dependency
    m_weight: int = 2         # support exponent of the weighted dependency


DEFAULT_PARAMS = MeasureParams()


class RuleContext:
    """A population of rules used by measures that standardize against it.

    The discriminant probabilistic index centers and reduces the implication
    intensity over the context's tables, so it needs the population's mean
    and standard deviation.
    """

    def __init__(self, tables: Sequence[ContingencyTable]):
        if not tables:
            raise ValueError("a rule context needs at least one table")
        self.tables = list(tables)
        self._moments: tuple[float, float] | None = None

    def ii_moments(self) -> tuple[float, float]:
        """Population mean and standard deviation of implication intensity."""
        if self._moments is None:
            values = []
            for t in self.tables:
                v = _implication_intensity(*t.cells())
                if v is not None and math.isfinite(v):
                    values.append(v)
            if not values:
                raise ValueError("no defined implication-intensity values in context")
            mean = sum(values) / len(values)
            var = sum((v - mean) ** 2 for v in values) / len(values)
            self._moments = (mean, math.sqrt(var))
        return self._moments


# -- shared helpers ----------------------------------------------------------


def _div(num: float, den: float) -> Value:
    """Extended-real division: x/0 -> +-inf for x != 0, 0/0 -> undefined."""
    if den == 0:
        if num == 0:
            return None
        return _INF if num > 0 else -_INF
    return num / den


_LOG2 = math.log(2.0)


def _xlog2x(p: float) -> float:
    """p * log2(p) with the 0*log(0) := 0 convention."""
    if p <= 0.0:
        return 0.0
    return p * math.log(p) / _LOG2


def _binary_entropy(u: float) -> float:
    """Entropy of a Bernoulli(u) in bits."""
    return -_xlog2x(u) - _xlog2x(1.0 - u)


def _entropic_factor(a: int, b: int, c: int, d: int) -> Value:
    """Shared modulation term of the entropy-adjusted implication family.

    Uses the one-sided entropies of counter-examples within the premise and
    within the negated conclusion; each entropy saturates to 1 once the
    counter-example share reaches one half.
    """
    n = a + b + c + d
    x = a + b
    ny = b + d
    if x == 0 or ny == 0:
        return None
    u = b / x
    h1 = 1.0 if u >= 0.5 else _binary_entropy(u)
    v = b / ny
    h2 = 1.0 if v >= 0.5 else _binary_entropy(v)
    return (1.0 - h1 * h1) * (1.0 - h2 * h2)


_POISSON_CACHE: dict[tuple[int, int, int], float] = {}


def _poisson_sf_counts(lam_num: int, n: int, k: int) -> float:
    """Memoized P[Poisson(lam_num / n) >= k]; keys are exact integers."""
    key = (lam_num, n, k)
    value = _POISSON_CACHE.get(key)
    if value is None:
        value = poisson_sf(lam_num / n, k)
        _POISSON_CACHE[key] = value
    return value


def _implication_intensity(a: int, b: int, c: int, d: int) -> Value:
    """P[Poisson(n p(X) p(not-Y)) >= n_xny]."""
    n = a + b + c + d
    if n == 0:
        return None
    return _poisson_sf_counts((a + b) * (b + d), n, b)


_HYPERGEOM_CACHE: dict[tuple[int, int, int], float] = {}


def _vt100_probability(a: int, b: int, c: int, d: int) -> Value:
    """Hypergeometric CDF of the rule projected onto 100 baskets."""
    n = a + b + c + d
    if n == 0:
        return None
    successes = round(100 * (a + c) / n)
    draws = round(100 * (a + b) / n)
    k = round(100 * a / n)
    key = (successes, draws, k)
    value = _HYPERGEOM_CACHE.get(key)
    if value is None:
        value = hypergeom_cdf(100, successes, draws, k)
        _HYPERGEOM_CACHE[key] = value
    return value


# -- the 61 evaluators -------------------------------------------------------
# Signature: (a, b, c, d, params) -> Value with (a, b, c, d) the counts
# (n_xy, n_xny, n_nxy, n_nxny).  Products of counts keep the arithmetic exact
# until the final division.


def _m01_correlation(a, b, c, d, params):
    n = a + b + c + d
    x, y = a + b, a + c
    den = x * y * (n - x) * (n - y)
    return _div(a * n - x * y, math.sqrt(den))


def _m02_cohen(a, b, c, d, params):
    n = a + b + c + d
    x, y = a + b, a + c
    return _div(2 * (a * n - x * y), n * (x + y) - 2 * x * y)


def _m03_confidence(a, b, c, d, params):
    return _div(a, a + b)


def _m04_causal_confidence(a, b, c, d, params):
    n = a + b + c + d
    x, ny = a + b, b + d
    if x == 0 or ny == 0:
        return None
    return 1.0 - 0.5 * b * (1.0 / x + 1.0 / ny)


def _m05_pavillon(a, b, c, d, params):
    n = a + b + c + d
    x = a + b
    if x == 0:
        return None
    return a / x - (a + c) / n


def _m06_ganascia(a, b, c, d, params):
    x = a + b
    if x == 0:
        return None
    return 1.0 - 2.0 * b / x


def _m07_causal_confirmed_confidence(a, b, c, d, params):
    x, ny = a + b, b + d
    if x == 0 or ny == 0:
        return None
    return 1.0 - 0.5 * b * (3.0 / x + 1.0 / ny)


def _m08_causal_confirmation(a, b, c, d, params):
    n = a + b + c + d
    return ((a + b) + (b + d) - 4 * b) / n if n else None


def _m09_descriptive_confirmation(a, b, c, d, params):
    n = a + b + c + d
    return (a - b) / n if n else None


def _m10_conviction(a, b, c, d, params):
    n = a + b + c + d
    return _div((a + b) * (b + d), n * b)


def _m11_cosine(a, b, c, d, params):
    return _div(a, math.sqrt((a + b) * (a + c)))


def _m12_coverage(a, b, c, d, params):
    n = a + b + c + d
    return (a + b) / n if n else None


def _m13_czekanowski_dice(a, b, c, d, params):
    return _div(2 * a, (a + b) + (a + c))


def _m14_dependency(a, b, c, d, params):
    n = a + b + c + d
    x = a + b
    if x == 0:
        return None
    return abs((b + d) / n - b / x)


def _m15_putative_causal_dependency(a, b, c, d, params):
    n = a + b + c + d
    x, y, ny = a + b, a + c, b + d
    if x == 0 or ny == 0:
        return None
    return 1.5 + 2.0 * x / n - 1.5 * y / n - (1.5 / x + 2.0 / ny) * b


def _m16_weighted_dependency(a, b, c, d, params):
    n = a + b + c + d
    x, y = a + b, a + c
    lift = _div(a * n, x * y)
    if lift is None:
        return None
    return (lift ** params.k_weight - 1.0) * (a / n) ** params.m_weight


def _m17_bayes_factor(a, b, c, d, params):
    return _div(a * (b + d), b * (a + c))


def _m18_certainty_factor(a, b, c, d, params):
    n = a + b + c + d
    x, y = a + b, a + c
    return _div(a * n - x * y, x * (n - y))


def _m19_negative_reliability(a, b, c, d, params):
    return _div(d, b + d)


def _m20_collective_strength(a, b, c, d, params):
    n = a + b + c + d
    if n == 0:
        return None
    x, y = a + b, a + c
    observed = a + d
    expected = (x * y + (n - x) * (n - y)) / n
    return _div(observed * (n - expected), expected * (n - observed))


def _m21_fukuda(a, b, c, d, params):
    return a - params.sigma_c * (a + b)


def _m22_informational_gain(a, b, c, d, params):
    n = a + b + c + d
    lift = _div(a * n, (a + b) * (a + c))
    if lift is None:
        return None
    if lift == 0.0:
        return -_INF
    if lift == _INF:
        return _INF
    return math.log(lift) / _LOG2


def _m23_gini(a, b, c, d, params):
    n = a + b + c + d
    x, y = a + b, a + c
    if x == 0 or x == n:
        return None
    return ((a * a + b * b) / (n * x)
            + (c * c + d * d) / (n * (n - x))
            - (y * y + (n - y) * (n - y)) / (n * n))


def _m24_goodman(a, b, c, d, params):
    n = a + b + c + d
    x, y = a + b, a + c
    gamma = _div(a * d - b * c, a * d + b * c)
    if gamma is None:
        return None
    num = max(a, b) + max(c, d) + max(a, c) + max(b, d) - max(x, n - x) - max(y, n - y)
    den = 2 * n - max(x, n - x) - max(y, n - y)
    lam = _div(num, den)
    if lam is None:
        return None
    return lam * gamma


def _m25_implication_index(a, b, c, d, params):
    n = a + b + c + d
    expected = (a + b) * (b + d)
    return _div(b * n - expected, math.sqrt(n * expected))


def _m26_ipee(a, b, c, d, params):
    x = a + b
    if x == 0:
        return None
    return std_normal_sf((b - a) / math.sqrt(x))


def _m27_ip3e(a, b, c, d, params):
    factor = _entropic_factor(a, b, c, d)
    if factor is None:
        return None
    ipee = _m26_ipee(a, b, c, d, params)
    if ipee is None:
        return None
    return math.sqrt(0.5 * (factor ** 0.25 + 1.0)) * math.sqrt(ipee)


def _m28_pdi(a, b, c, d, params, moments=None):
    if moments is None:
        return None
    mean, std = moments
    if std == 0.0:
        return None
    ii = _implication_intensity(a, b, c, d)
    if ii is None:
        return None
    return std_normal_sf((ii - mean) / std)


def _m29_mutual_information(a, b, c, d, params):
    n = a + b + c + d
    if n == 0:
        return None
    x = a + b
    vs = _m59_two_way_support_variation(a, b, c, d, params)
    h_x = _binary_entropy(x / n)
    return _div(vs, h_x)


def _m30_implication_intensity(a, b, c, d, params):
    return _implication_intensity(a, b, c, d)


def _m31_eii(a, b, c, d, params):
    factor = _entropic_factor(a, b, c, d)
    if factor is None:
        return None
    ii = _implication_intensity(a, b, c, d)
    if ii is None:
        return None
    return math.sqrt(factor ** 0.25 * ii)


def _m32_reii(a, b, c, d, params):
    factor = _entropic_factor(a, b, c, d)
    if factor is None:
        return None
    ii = _implication_intensity(a, b, c, d)
    if ii is None:
        return None
    return math.sqrt(factor ** 0.25) * math.sqrt(max(2.0 * ii - 1.0, 0.0))


def _m33_likelihood_index(a, b, c, d, params):
    n = a + b + c + d
    if n == 0:
        return None
    if a == 0:
        return 0.0
    return 1.0 - _poisson_sf_counts((a + b) * (a + c), n, a)


def _m34_interest(a, b, c, d, params):
    n = a + b + c + d
    return _div(a * n, (a + b) * (a + c))


def _m35_jaccard(a, b, c, d, params):
    return _div(a, b + (a + c))


def _m36_j_measure(a, b, c, d, params):
    n = a + b + c + d
    if n == 0:
        return None
    x, y = a + b, a + c
    total = 0.0
    if a > 0:
        total += (a / n) * math.log(a * n / (x * y))
    if b > 0:
        total += (b / n) * math.log(b * n / (x * (n - y)))
    return total


def _m37_klosgen(a, b, c, d, params):
    n = a + b + c + d
    x = a + b
    if x == 0:
        return None
    return math.sqrt(a / n) * (a / x - (a + c) / n)


def _m38_kulczynski(a, b, c, d, params):
    return _div(a, b + c)


def _m39_laplace(a, b, c, d, params):
    return (a + 1.0) / ((a + b) + 2.0)


def _m40_leverage(a, b, c, d, params):
    n = a + b + c + d
    x, y = a + b, a + c
    if x == 0:
        return None
    return a / x - x * y / (n * n)


def _m41_mgk(a, b, c, d, params):
    n = a + b + c + d
    x, y = a + b, a + c
    if x == 0:
        return None
    conf = a / x
    q = y / n
    if q == 0.0 and conf == 0.0:
        # 0/0 in the repulsion branch; mirrors the undefined attraction
        # branch at q == conf == 1 under conclusion negation
        return None
    if conf >= q:
        return _div(conf - q, 1.0 - q)
    return _div(conf - q, q)


def _m42_least_contradiction(a, b, c, d, params):
    return _div(a - b, a + c)


def _m43_novelty(a, b, c, d, params):
    n = a + b + c + d
    if n == 0:
        return None
    return a / n - (a + b) * (a + c) / (n * n)


def _m44_pearl(a, b, c, d, params):
    # p(X)|p(Y|X) - p(Y)| multiplied through: |p(XY) - p(X)p(Y)|.
    n = a + b + c + d
    if n == 0:
        return None
    return abs(a - (a + b) * (a + c) / n) / n


def _m45_piatetsky_shapiro(a, b, c, d, params):
    n = a + b + c + d
    if n == 0:
        return None
    return a - (a + b) * (a + c) / n


def _m46_accuracy(a, b, c, d, params):
    n = a + b + c + d
    return (a + d) / n if n else None


def _m47_prevalence(a, b, c, d, params):
    n = a + b + c + d
    return (a + c) / n if n else None


def _m48_yule_q(a, b, c, d, params):
    return _div(a * d - b * c, a * d + b * c)


def _m49_recall(a, b, c, d, params):
    return _div(a, a + c)


def _m50_odds_ratio(a, b, c, d, params):
    return _div(a * d, b * c)


def _m51_relative_risk(a, b, c, d, params):
    n = a + b + c + d
    x = a + b
    if x == 0 or x == n:
        return None
    return _div(a * (n - x), c * x)


def _m52_sebag(a, b, c, d, params):
    return _div(a, b)


def _m53_specificity(a, b, c, d, params):
    return _div(d, c + d)


def _m54_support(a, b, c, d, params):
    n = a + b + c + d
    return a / n if n else None


def _m55_one_way_support(a, b, c, d, params):
    n = a + b + c + d
    x = a + b
    if x == 0:
        return None
    if a == 0:
        return 0.0
    return (a / x) * math.log(a * n / (x * (a + c))) / _LOG2


def _m56_two_way_support(a, b, c, d, params):
    n = a + b + c + d
    if n == 0:
        return None
    if a == 0:
        return 0.0
    return (a / n) * math.log(a * n / ((a + b) * (a + c))) / _LOG2


def _m57_examples_rate(a, b, c, d, params):
    return _div(a - b, a)


def _m58_vt100(a, b, c, d, params):
    p = _vt100_probability(a, b, c, d)
    if p is None:
        return None
    p = min(max(p, 1e-12), 1.0 - 1e-12)
    return std_normal_quantile(p)


def _m59_two_way_support_variation(a, b, c, d, params):
    n = a + b + c + d
    if n == 0:
        return None
    x, y = a + b, a + c
    total = 0.0
    if a > 0:
        total += (a / n) * math.log(a * n / (x * y))
    if b > 0:
        total += (b / n) * math.log(b * n / (x * (n - y)))
    if c > 0:
        total += (c / n) * math.log(c * n / ((n - x) * y))
    if d > 0:
        total += (d / n) * math.log(d * n / ((n - x) * (n - y)))
    return total / _LOG2


def _m60_yule_y(a, b, c, d, params):
    sa = math.sqrt(a * d)
    sb = math.sqrt(b * c)
    return _div(sa - sb, sa + sb)


def _m61_zhang(a, b, c, d, params):
    n = a + b + c + d
    x, y = a + b, a + c
    return _div(a * n - x * y, max(a * (n - y), y * b))


# -- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class MeasureDescriptor:
    id: int
    name: str
    func: Callable
    symmetric: bool
    aliases: tuple[str, ...] = ()
    probabilistic_model: bool = False     # declared verdict for property P17
    p19_override: Optional[int] = None    # declared verdict for property P19
    uses_counts: bool = False             # exempt from scale-invariance checks
    codomain: Optional[tuple[float, float]] = None
    needs_context: bool = False
    note: str = ""


_SYMMETRIC_IDS = {1, 2, 11, 13, 20, 22, 24, 33, 34, 35, 38, 43, 44, 45, 46,
                  48, 50, 54, 56, 58, 59, 60}

_DESCRIPTORS: list[MeasureDescriptor] = [
    MeasureDescriptor(1, "Correlation coefficient", _m01_correlation, True,
                      ("Phi coefficient",), codomain=(-1.0, 1.0)),
    MeasureDescriptor(2, "Cohen", _m02_cohen, True, ("Kappa", "Cohen's kappa"),
                      codomain=(-1.0, 1.0)),
    MeasureDescriptor(3, "Confidence", _m03_confidence, False, ("Precision",),
                      codomain=(0.0, 1.0)),
    MeasureDescriptor(4, "Causal confidence", _m04_causal_confidence, False),
    MeasureDescriptor(5, "Pavillon", _m05_pavillon, False,
                      ("Centred confidence", "Centered confidence", "Added value",
                       "Pavilion"),
                      codomain=(-1.0, 1.0),
                      note="centered confidence P(Y|X) - P(Y)"),
    MeasureDescriptor(6, "Ganascia", _m06_ganascia, False,
                      ("Descriptive-confirmed confidence",
                       "Descriptive confirmed confidence"),
                      codomain=(-1.0, 1.0)),
    MeasureDescriptor(7, "Causal confirmed confidence",
                      _m07_causal_confirmed_confidence, False,
                      ("Causal-confirm confidence",)),
    MeasureDescriptor(8, "Causal confirmation", _m08_causal_confirmation, False,
                      ("Causal confirm",)),
    MeasureDescriptor(9, "Descriptive confirmation", _m09_descriptive_confirmation,
                      False, ("Descriptive confirm",), codomain=(-1.0, 1.0)),
    MeasureDescriptor(10, "Conviction", _m10_conviction, False),
    MeasureDescriptor(11, "Cosine", _m11_cosine, True, ("Ochiai",),
                      codomain=(0.0, 1.0), p19_override=1),
    MeasureDescriptor(12, "Coverage", _m12_coverage, False, codomain=(0.0, 1.0)),
    MeasureDescriptor(13, "Czekanowski-Dice", _m13_czekanowski_dice, True,
                      ("F-measure", "Czekanowski"), codomain=(0.0, 1.0),
                      p19_override=1),
    MeasureDescriptor(14, "Dependency", _m14_dependency, False,
                      codomain=(0.0, 1.0),
                      note="absolute deviation |P(not-Y) - P(not-Y|X)|"),
    MeasureDescriptor(15, "Putative causal dependency",
                      _m15_putative_causal_dependency, False,
                      ("Causal dependency",)),
    MeasureDescriptor(16, "Weighted dependency", _m16_weighted_dependency, False,
                      ("Gray and Orlowska", "Interestingness weighting dependency"),
                      note="lift/support trade-off with exponents k and m"),
    MeasureDescriptor(17, "Bayes factor", _m17_bayes_factor, False,
                      ("Odd multiplier", "Odds multiplier", "Bayesian factor")),
    MeasureDescriptor(18, "Certainty factor", _m18_certainty_factor, False,
                      ("Loevinger", "Satisfaction", "Factor of certainty")),
    MeasureDescriptor(19, "Negative reliability", _m19_negative_reliability, False,
                      codomain=(0.0, 1.0)),
    MeasureDescriptor(20, "Collective strength", _m20_collective_strength, True,
                      note="observed agreement over expected agreement, "
                           "times the complementary ratio"),
    MeasureDescriptor(21, "Fukuda", _m21_fukuda, False, uses_counts=True,
                      note="count excess over the confidence-threshold baseline"),
    MeasureDescriptor(22, "Informational gain", _m22_informational_gain, True,
                      ("Information gain",)),
    MeasureDescriptor(23, "Gini", _m23_gini, False, ("Gini index",)),
    MeasureDescriptor(24, "Goodman", _m24_goodman, True,
                      ("Goodman-Kruskal", "Goodman and Kruskal"),
                      codomain=(-1.0, 1.0), p19_override=1,
                      note="predictive-association factor times the "
                           "odds-balance factor, as printed in the source"),
    MeasureDescriptor(25, "Implication index", _m25_implication_index, False,
                      uses_counts=True),
    MeasureDescriptor(26, "IPEE", _m26_ipee, False,
                      ("Probabilistic index of deviation from equilibrium",),
                      probabilistic_model=True, uses_counts=True,
                      codomain=(0.0, 1.0)),
    MeasureDescriptor(27, "IP3E", _m27_ip3e, False,
                      ("Entropic probabilistic index of deviation from equilibrium",),
                      probabilistic_model=True, uses_counts=True,
                      codomain=(0.0, 1.0)),
    MeasureDescriptor(28, "PDI", _m28_pdi, False,
                      ("Probabilistic discriminant index",),
                      probabilistic_model=True, uses_counts=True,
                      codomain=(0.0, 1.0), needs_context=True),
    MeasureDescriptor(29, "Mutual information", _m29_mutual_information, False),
    MeasureDescriptor(30, "II", _m30_implication_intensity, False,
                      ("Implication intensity", "Intensity of implication"),
                      probabilistic_model=True, uses_counts=True,
                      codomain=(0.0, 1.0)),
    MeasureDescriptor(31, "EII", _m31_eii, False,
                      ("Entropic intensity of implication", "IIE"),
                      probabilistic_model=True, uses_counts=True,
                      codomain=(0.0, 1.0)),
    MeasureDescriptor(32, "REII", _m32_reii, False,
                      ("Revised entropic intensity of implication", "IIER"),
                      probabilistic_model=True, uses_counts=True,
                      codomain=(0.0, 1.0)),
    MeasureDescriptor(33, "Likelihood index", _m33_likelihood_index, True,
                      ("Likelihood link index",),
                      probabilistic_model=True, uses_counts=True,
                      codomain=(0.0, 1.0)),
    MeasureDescriptor(34, "Interest", _m34_interest, True, ("Lift",)),
    MeasureDescriptor(35, "Jaccard", _m35_jaccard, True, codomain=(0.0, 1.0),
                      p19_override=1),
    MeasureDescriptor(36, "J-measure", _m36_j_measure, False),
    MeasureDescriptor(37, "Klosgen", _m37_klosgen, False),
    MeasureDescriptor(38, "Kulczynski", _m38_kulczynski, True,
                      ("Agreement and disagreement index",), p19_override=1),
    MeasureDescriptor(39, "Laplace", _m39_laplace, False, uses_counts=True,
                      codomain=(0.0, 1.0)),
    MeasureDescriptor(40, "Leverage", _m40_leverage, False),
    MeasureDescriptor(41, "MGK", _m41_mgk, False, codomain=(-1.0, 1.0),
                      p19_override=1),
    MeasureDescriptor(42, "Least contradiction", _m42_least_contradiction, False,
                      ("Surprise",)),
    MeasureDescriptor(43, "Novelty", _m43_novelty, True, ("Levier",),
                      codomain=(-0.25, 0.25)),
    MeasureDescriptor(44, "Pearl", _m44_pearl, True),
    MeasureDescriptor(45, "Piatetsky-Shapiro", _m45_piatetsky_shapiro, True,
                      ("Rule interest",), uses_counts=True),
    MeasureDescriptor(46, "Accuracy", _m46_accuracy, True, ("Causal support",),
                      codomain=(0.0, 1.0)),
    MeasureDescriptor(47, "Prevalence", _m47_prevalence, False,
                      codomain=(0.0, 1.0)),
    MeasureDescriptor(48, "Yule's Q", _m48_yule_q, True, ("Yule Q",),
                      codomain=(-1.0, 1.0), p19_override=1),
    MeasureDescriptor(49, "Recall", _m49_recall, False, ("Sensitivity",),
                      codomain=(0.0, 1.0), p19_override=1),
    MeasureDescriptor(50, "Odds ratio", _m50_odds_ratio, True),
    MeasureDescriptor(51, "Relative risk", _m51_relative_risk, False),
    MeasureDescriptor(52, "Sebag-Schoenauer", _m52_sebag, False, ("Sebag",)),
    MeasureDescriptor(53, "Specificity", _m53_specificity, False,
                      codomain=(0.0, 1.0)),
    MeasureDescriptor(54, "Support", _m54_support, True,
                      ("Russel and Rao index", "Russell and Rao"),
                      codomain=(0.0, 1.0), p19_override=1),
    MeasureDescriptor(55, "One-way support", _m55_one_way_support, False,
                      ("Yao and Liu's one-way support",)),
    MeasureDescriptor(56, "Two-way support", _m56_two_way_support, True,
                      ("Yao and Liu's two-way support",)),
    MeasureDescriptor(57, "Examples rate", _m57_examples_rate, False,
                      ("Examples and counter-examples rate",)),
    MeasureDescriptor(58, "VT100", _m58_vt100, True, ("Test value VT100",),
                      probabilistic_model=True, uses_counts=True),
    MeasureDescriptor(59, "Two-way support variation", _m59_two_way_support_variation,
                      True, ("Support variation", "Two-way variation support")),
    MeasureDescriptor(60, "Yule's Y", _m60_yule_y, True, ("Yule Y",),
                      codomain=(-1.0, 1.0), p19_override=1),
    MeasureDescriptor(61, "Zhang", _m61_zhang, False, codomain=(-1.0, 1.0),
                      p19_override=1),
]

_BY_ID = {d.id: d for d in _DESCRIPTORS}
assert len(_BY_ID) == 61
assert all((_BY_ID[i].symmetric == (i in _SYMMETRIC_IDS)) for i in _BY_ID)


def _normalize(name: str) -> str:
    return "".join(ch for ch in name.casefold() if ch.isalnum())


_BY_NAME: dict[str, MeasureDescriptor] = {}
for _d in _DESCRIPTORS:
    for _n in (_d.name, *_d.aliases):
        key = _normalize(_n)
        existing = _BY_NAME.get(key)
        if existing is not None and existing.id != _d.id:
            raise RuntimeError(f"alias clash: {_n!r}")
        _BY_NAME[key] = _d


def registry() -> list[MeasureDescriptor]:
    """All 61 descriptors in id order."""
    return list(_DESCRIPTORS)


def resolve(name_or_id: str | int) -> MeasureDescriptor:
    """Look a measure up by id, canonical name, or any alias."""
    if isinstance(name_or_id, int):
        try:
            return _BY_ID[name_or_id]
        except KeyError:
            raise KeyError(f"no measure with id {name_or_id}") from None
    text = str(name_or_id).strip()
    if text.isdigit():
        return resolve(int(text))
    try:
        return _BY_NAME[_normalize(text)]
    except KeyError:
        raise KeyError(f"unknown measure {name_or_id!r}") from None


def evaluate(
    measure: str | int | MeasureDescriptor,
    table: ContingencyTable,
    params: MeasureParams = DEFAULT_PARAMS,
    context: RuleContext | None = None,
) -> Value:
    """Evaluate one measure on one table.

    Returns a finite float, a signed infinity, or ``None`` when the value is
    undefined on the table.  Measures that standardize against a rule
    population (the discriminant probabilistic index) require ``context``.
    """
    desc = measure if isinstance(measure, MeasureDescriptor) else resolve(measure)
    a, b, c, d = table.cells()
    if desc.needs_context:
        if context is None:
            raise ValueError(f"{desc.name} requires a rule context")
        return desc.func(a, b, c, d, params, context.ii_moments())
    return desc.func(a, b, c, d, params)


def evaluate_all(
    table: ContingencyTable,
    params: MeasureParams = DEFAULT_PARAMS,
    context: RuleContext | None = None,
) -> dict[int, Value]:
    """Evaluate every measure on one table; context-needing measures are
    skipped when no context is supplied."""
    out: dict[int, Value] = {}
    for desc in _DESCRIPTORS:
        if desc.needs_context and context is None:
            continue
        out[desc.id] = evaluate(desc, table, params, context)
    return out
