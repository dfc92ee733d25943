"""Frequent-itemset mining and rule scoring over basket databases.

Plain-text input: one basket per line, whitespace-separated item tokens,
duplicate tokens within a line collapsed, empty lines skipped.  Mining is the
classic level-wise Apriori with the downward-closure prune; rule generation
enumerates every non-trivial premise/conclusion split of each frequent
itemset and attaches the exact 2x2 contingency table counted over baskets.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

from .contingency import ContingencyTable
from .measures import (DEFAULT_PARAMS, MeasureDescriptor, MeasureParams,
                       RuleContext, Value, evaluate, resolve)

# refuse unbounded mining on wide databases unless the caller overrides
GUARD_ITEM_LIMIT = 24


@dataclass(frozen=True)
class TransactionDb:
    items: tuple[str, ...]                 # dense id -> token, sorted
    baskets: tuple[frozenset[int], ...]    # sets of item ids

    @property
    def n_baskets(self) -> int:
        return len(self.baskets)

    def tokens(self, ids: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.items[i] for i in sorted(ids))


def load_transactions(source: Union[str, Path, io.TextIOBase]) -> TransactionDb:
    """Parse a basket file: one basket per line, whitespace-separated tokens."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    else:
        lines = source.readlines()
    raw_baskets = [set(line.split()) for line in lines if line.split()]
    if not raw_baskets:
        raise ValueError("no usable baskets in input")
    items = tuple(sorted(set().union(*raw_baskets)))
    index = {tok: i for i, tok in enumerate(items)}
    baskets = tuple(frozenset(index[tok] for tok in b) for b in raw_baskets)
    return TransactionDb(items, baskets)


def apriori(db: TransactionDb, minsupp: float,
            override_guard: bool = False) -> dict[frozenset[int], Fraction]:
    """Frequent itemsets with exact supports, keyed by item-id sets.

    Output iteration order is deterministic: itemset size, then the sorted
    item-id tuple lexicographically.
    """
    if not 0.0 <= minsupp <= 1.0:
        raise ValueError("minsupp must lie in [0, 1]")
    n = db.n_baskets
    if n < 1:
        raise ValueError("mining needs at least one basket")
    if (len(db.items) > GUARD_ITEM_LIMIT and minsupp < 1.0 / n
            and not override_guard):
        raise ValueError(
            f"minsupp {minsupp} is below 1/{n} with more than "
            f"{GUARD_ITEM_LIMIT} items; pass override_guard to mine anyway")

    threshold = minsupp * n  # count threshold; support >= minsupp
    counts: dict[frozenset[int], int] = {}
    singles = {}
    for item in range(len(db.items)):
        c = sum(1 for b in db.baskets if item in b)
        if c >= threshold:
            singles[frozenset((item,))] = c
    counts.update(singles)
    level = list(singles)
    k = 1
    while level:
        k += 1
        prefix_groups: dict[tuple[int, ...], list[int]] = {}
        frequent_level = set(level)
        for s in level:
            t = tuple(sorted(s))
            prefix_groups.setdefault(t[:-1], []).append(t[-1])
        candidates = []
        for prefix, lasts in prefix_groups.items():
            lasts.sort()
            for i, j in combinations(lasts, 2):
                cand = frozenset(prefix + (i, j))
                if all(cand - {e} in frequent_level for e in cand):
                    candidates.append(cand)
        next_level = []
        for cand in candidates:
            c = sum(1 for b in db.baskets if cand <= b)
            if c >= threshold:
                counts[cand] = c
                next_level.append(cand)
        level = next_level
    ordered = sorted(counts, key=lambda s: (len(s), tuple(sorted(s))))
    return {s: Fraction(counts[s], n) for s in ordered}


@dataclass
class MinedRule:
    premise: tuple[str, ...]
    conclusion: tuple[str, ...]
    contingency: ContingencyTable
    scores: dict[int, Value] = field(default_factory=dict)

    @property
    def support(self) -> Fraction:
        return Fraction(self.contingency.n_xy, self.contingency.n)

    @property
    def confidence(self) -> Fraction:
        return Fraction(self.contingency.n_xy, self.contingency.n_x)

    def key(self) -> tuple:
        return (self.premise, self.conclusion)


def _count(db: TransactionDb, ids: frozenset[int]) -> int:
    return sum(1 for b in db.baskets if ids <= b)


def generate_rules(frequents: dict[frozenset[int], Fraction],
                   db: TransactionDb, minconf: float) -> list[MinedRule]:
    """Every non-trivial premise/conclusion split with confidence >= minconf."""
    if not 0.0 <= minconf <= 1.0:
        raise ValueError("minconf must lie in [0, 1]")
    n = db.n_baskets
    rules = []
    for itemset in frequents:
        if len(itemset) < 2:
            continue
        joint = _count(db, itemset)
        elems = sorted(itemset)
        for r in range(1, len(elems)):
            for prem in combinations(elems, r):
                premise = frozenset(prem)
                conclusion = itemset - premise
                n_x = _count(db, premise)
                if joint < minconf * n_x:
                    continue
                n_y = _count(db, conclusion)
                table = ContingencyTable(joint, n_x - joint, n_y - joint,
                                         n - n_x - n_y + joint)
                rules.append(MinedRule(db.tokens(premise),
                                       db.tokens(conclusion), table))
    rules.sort(key=MinedRule.key)
    return rules


def mine(db: TransactionDb, minsupp: float, minconf: float,
         override_guard: bool = False) -> list[MinedRule]:
    return generate_rules(apriori(db, minsupp, override_guard), db, minconf)


def score_rules(rules: Sequence[MinedRule],
                measures: Sequence[Union[str, int, MeasureDescriptor]],
                params: MeasureParams = DEFAULT_PARAMS,
                rank_by: Union[str, int, MeasureDescriptor, None] = None,
                use_context: bool = True) -> list[MinedRule]:
    """Score each rule on the selected measures and rank.

    Context-standardized measures draw their rule population from the mined
    set itself when ``use_context`` is on; otherwise selecting one raises.
    Ranking is by the primary measure descending, undefined values last,
    ties broken by rule lexicographic order.
    """
    if not measures:
        raise ValueError("measure selection must be non-empty")
    descs = [resolve(m) if not isinstance(m, MeasureDescriptor) else m
             for m in measures]
    ctx: Optional[RuleContext] = None
    if any(d.needs_context for d in descs):
        if not use_context:
            raise ValueError(
                "context-standardized measures need the mined rule set as "
                "their population; enable use_context")
        ctx = RuleContext([r.contingency for r in rules])
    scored = list(rules)
    for rule in scored:
        for d in descs:
            rule.scores[d.id] = evaluate(d, rule.contingency, params, ctx)
    if rank_by is not None:
        primary = (rank_by if isinstance(rank_by, MeasureDescriptor)
                   else resolve(rank_by))
        if primary.id not in {d.id for d in descs}:
            raise ValueError(f"rank measure {primary.name} is not in the "
                             f"selection")

        def sort_key(rule: MinedRule):
            v = rule.scores[primary.id]
            return (v is None, -v if v is not None else 0.0, rule.key())

        scored.sort(key=sort_key)
    return scored


def report_csv(rules: Sequence[MinedRule],
               measures: Sequence[Union[str, int, MeasureDescriptor]],
               path) -> None:
    descs = [resolve(m) if not isinstance(m, MeasureDescriptor) else m
             for m in measures]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["premise", "conclusion", "n_xy", "n_xny", "n_nxy",
                         "n_nxny", *(d.name for d in descs)])
        for r in rules:
            a, b, c, d_ = r.contingency.cells()
            writer.writerow([
                "&".join(r.premise), "&".join(r.conclusion), a, b, c, d_,
                *("" if r.scores.get(m.id) is None else repr(r.scores[m.id])
                  for m in descs)])


def report_json(rules: Sequence[MinedRule],
                measures: Sequence[Union[str, int, MeasureDescriptor]]) -> str:
    descs = [resolve(m) if not isinstance(m, MeasureDescriptor) else m
             for m in measures]
    payload = []
    for r in rules:
        a, b, c, d_ = r.contingency.cells()
        scores = {}
        for m in descs:
            v = r.scores.get(m.id)
            if v is None:
                scores[m.name] = None
            elif v == float("inf"):
                scores[m.name] = "inf"
            elif v == float("-inf"):
                scores[m.name] = "-inf"
            else:
                scores[m.name] = v
        payload.append({
            "premise": list(r.premise), "conclusion": list(r.conclusion),
            "n_xy": a, "n_xny": b, "n_nxy": c, "n_nxny": d_,
            "scores": scores})
    return json.dumps(payload, indent=2)
