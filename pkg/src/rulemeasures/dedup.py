"""Collapsing the measure catalog.

Two reduction passes:

* extensional deduplication — the literature names several measures twice
  under different formulas (e.g. Ganascia vs descriptive-confirmed
  confidence).  A catalog of the original variant formulas is evaluated on
  every table in the bound; entries whose value vectors agree everywhere
  (including on which tables they are undefined) form one group.
* identical property rows — measures whose 19 verdicts coincide carry no
  extra information for categorization and are represented by the lowest id.

Published groupings the computed matrix does not reproduce are reported as
discrepancies, never forced.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .measures import DEFAULT_PARAMS, registry, resolve
from .properties import EvaluationConfig, PropertyMatrix, PROPERTY_NAMES, _engine


def _div(num: float, den: float) -> float:
    if den == 0.0:
        if num == 0.0:
            return float("nan")
        return math.inf if num > 0 else -math.inf
    return num / den


# -- variant formulas as printed in the source literature ---------------------
# name -> (canonical id, formula over raw counts); each is the *other*
# printed form of an alias set, kept verbatim so extensional equality is a
# real check and not a tautology.

def _phi_coefficient(a, b, c, d):
    den = (a + b) * (a + c) * (c + d) * (b + d)
    if den == 0:
        return float("nan")
    return (a * d - b * c) / math.sqrt(den)


def _kappa(a, b, c, d):
    n = a + b + c + d
    if n == 0:
        return float("nan")
    observed = (a + d) / n
    expected = ((a + b) * (a + c) + (c + d) * (b + d)) / (n * n)
    return _div(observed - expected, 1.0 - expected)


def _centred_confidence(a, b, c, d):
    n = a + b + c + d
    return _div(a * n - (a + b) * (a + c), (a + b) * n)


def _added_value(a, b, c, d):
    n = a + b + c + d
    if a + b == 0 or n == 0:
        return float("nan")
    return a / (a + b) - (a + c) / n


def _descriptive_confirmed_confidence(a, b, c, d):
    return _div(a - b, a + b)


def _ochiai(a, b, c, d):
    den = math.sqrt((a + b) * (a + c))
    return _div(a, den)


def _f_measure(a, b, c, d):
    return _div(2 * a, (a + b) + (a + c))


def _odd_multiplier(a, b, c, d):
    n = a + b + c + d
    return _div(a * (n - (a + c)), (a + c) * b)


def _satisfaction(a, b, c, d):
    n = a + b + c + d
    x, y = a + b, a + c
    if x == 0:
        return float("nan")
    return _div((n - y) / n - b / x, (n - y) / n)


def _loevinger(a, b, c, d):
    n = a + b + c + d
    x, y = a + b, a + c
    if x == 0:
        return float("nan")
    return _div(a / x - y / n, 1.0 - y / n)


def _agreement_disagreement(a, b, c, d):
    n = a + b + c + d
    if n == 0:
        return float("nan")
    return _div(a / n, b / n + c / n)


def _russel_rao(a, b, c, d):
    n = a + b + c + d
    return _div(a, n)


def _causal_support(a, b, c, d):
    n = a + b + c + d
    if n == 0:
        return float("nan")
    return a / n + d / n


VARIANT_FORMULAS: dict[str, tuple[int, Callable]] = {
    "Phi-coefficient": (1, _phi_coefficient),
    "Kappa": (2, _kappa),
    "Centred confidence": (5, _centred_confidence),
    "Added value": (5, _added_value),
    "Descriptive-confirmed confidence": (6, _descriptive_confirmed_confidence),
    "Ochiai": (11, _ochiai),
    "F-measure": (13, _f_measure),
    "Odd multiplier": (17, _odd_multiplier),
    "Satisfaction": (18, _satisfaction),
    "Loevinger": (18, _loevinger),
    "Agreement and disagreement index": (38, _agreement_disagreement),
    "Russel and Rao index": (54, _russel_rao),
    "Causal support": (46, _causal_support),
}

# The alias sets as the literature prints them (canonical name first).
PUBLISHED_ALIAS_SETS: tuple[frozenset[str], ...] = tuple(
    frozenset(s) for s in (
        {"Correlation coefficient", "Phi-coefficient"},
        {"Cohen", "Kappa"},
        {"Pavillon", "Centred confidence", "Added value"},
        {"Ganascia", "Descriptive-confirmed confidence"},
        {"Cosine", "Ochiai"},
        {"Czekanowski-Dice", "F-measure"},
        {"Bayes factor", "Odd multiplier"},
        {"Certainty factor", "Satisfaction", "Loevinger"},
        {"Kulczynski", "Agreement and disagreement index"},
        {"Support", "Russel and Rao index"},
        {"Accuracy", "Causal support"},
    ))

# The published identical-property-row groups (ids).
PUBLISHED_PROPERTY_GROUPS: tuple[tuple[int, ...], ...] = (
    (1, 43),       # correlation coefficient, novelty
    (4, 7, 19),    # causal confidence, causal-confirm confidence, neg. reliability
    (11, 13),      # cosine, czekanowski-dice
    (15, 40, 53),  # putative causal dependency, leverage, specificity
    (20, 50),      # collective strength, odds ratio
    (23, 29),      # gini, mutual information
    (35, 38),      # jaccard, kulczynski
)


@dataclass(frozen=True)
class EquivalenceGrouping:
    """Disjoint groups with a designated representative (lowest id)."""

    kind: str                                  # "extensional" | "property-vector"
    groups: tuple[tuple, ...]                  # tuples of names or ids
    representatives: tuple

    def to_json(self) -> str:
        return json.dumps({
            "kind": self.kind,
            "groups": [list(g) for g in self.groups],
            "representatives": list(self.representatives),
        }, indent=2, sort_keys=True)


def _vectors_agree(u: np.ndarray, v: np.ndarray, tol: float) -> bool:
    with np.errstate(invalid="ignore"):
        same = (u == v) | (np.abs(u - v) <= tol) | (np.isnan(u) & np.isnan(v))
    return bool(same.all())


def extensional_duplicates(
    cfg: EvaluationConfig = EvaluationConfig(),
) -> EquivalenceGrouping:
    """Group catalog entries (61 canonical measures + the printed variant
    formulas) that agree on every table in the bound.  Entries undefined on
    different table sets are never grouped."""
    eng = _engine(cfg.n_max)
    names: list[str] = []
    ids: list[int] = []
    vectors: list[np.ndarray] = []
    for desc in registry():
        names.append(desc.name)
        ids.append(desc.id)
        vectors.append(eng.vector(desc, cfg.params))
    for name, (mid, func) in VARIANT_FORMULAS.items():
        names.append(name)
        ids.append(mid)
        vectors.append(np.fromiter(
            (func(a, b, c, d) for a, b, c, d in eng.cells),
            np.float64, len(eng.cells)))

    parent = list(range(len(names)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            if find(i) != find(j) and _vectors_agree(vectors[i], vectors[j],
                                                     cfg.tol):
                parent[find(j)] = find(i)

    buckets: dict[int, list[int]] = {}
    for i in range(len(names)):
        buckets.setdefault(find(i), []).append(i)
    groups = []
    reps = []
    n_canonical = len(registry())
    for members in buckets.values():
        # representative: lowest id, canonical catalog name before variants
        members.sort(key=lambda i: (ids[i], i >= n_canonical, names[i]))
        groups.append(tuple(names[i] for i in members))
        reps.append(names[members[0]])
    order = sorted(range(len(groups)), key=lambda g: resolve(reps[g]).id)
    return EquivalenceGrouping(
        "extensional",
        tuple(groups[g] for g in order),
        tuple(reps[g] for g in order))


def identical_property_groups(matrix: PropertyMatrix) -> EquivalenceGrouping:
    """Group measures whose 19 verdicts are identical."""
    buckets: dict[tuple, list[int]] = {}
    for mid in matrix.measure_ids():
        key = tuple(matrix.values[mid][p] for p in PROPERTY_NAMES)
        buckets.setdefault(key, []).append(mid)
    groups = tuple(sorted(
        (tuple(sorted(members)) for members in buckets.values()),
        key=lambda g: g[0]))
    return EquivalenceGrouping(
        "property-vector", groups, tuple(g[0] for g in groups))


def reduce_matrix(matrix: PropertyMatrix,
                  grouping: EquivalenceGrouping) -> PropertyMatrix:
    """Keep one row per property-vector group (the representative)."""
    keep = set(grouping.representatives)
    return PropertyMatrix({mid: dict(row) for mid, row in matrix.values.items()
                           if mid in keep})


def absorbed_members(grouping: EquivalenceGrouping) -> dict[int, int]:
    """Map of dropped measure id -> its representative."""
    out: dict[int, int] = {}
    for group, rep in zip(grouping.groups, grouping.representatives):
        for mid in group:
            if mid != rep:
                out[mid] = rep
    return out


def redundant_properties(matrix: PropertyMatrix) -> list[tuple[str, str]]:
    """Property column pairs valued identically across all rows."""
    ids = matrix.measure_ids()
    columns = {p: tuple(matrix.values[mid][p] for mid in ids)
               for p in PROPERTY_NAMES}
    out = []
    for i, p in enumerate(PROPERTY_NAMES):
        for q in PROPERTY_NAMES[i + 1:]:
            if columns[p] == columns[q]:
                out.append((p, q))
    return out


@dataclass(frozen=True)
class GroupDiscrepancy:
    published: tuple[int, ...]
    computed_blocks: tuple[tuple[int, ...], ...]   # how the search splits it


def published_group_discrepancies(
    grouping: EquivalenceGrouping,
) -> list[GroupDiscrepancy]:
    """Published identical-row groups the computed grouping does not keep
    whole; each is reported with the computed sub-blocks."""
    block_of: dict[int, tuple[int, ...]] = {}
    for group in grouping.groups:
        for mid in group:
            block_of[mid] = group
    out = []
    for published in PUBLISHED_PROPERTY_GROUPS:
        blocks = sorted({tuple(m for m in block_of[mid] if m in published)
                         for mid in published})
        if len(blocks) > 1:
            out.append(GroupDiscrepancy(published, tuple(blocks)))
    return out
