import io
import json
from fractions import Fraction
from itertools import combinations

import pytest

from rulemeasures.measures import evaluate
from rulemeasures.miner import (GUARD_ITEM_LIMIT, MinedRule, TransactionDb,
                                apriori, generate_rules, load_transactions,
                                mine, report_csv, report_json, score_rules)
from rulemeasures.clustering import SplitMix64


FIXTURE = "a b\na b\na c\n"


def _db(text):
    return load_transactions(io.StringIO(text))


# ---------------------------------------------------------------- loading

def test_load_transactions_basic():
    db = _db("a b c\na c\n")
    assert db.n_baskets == 2
    assert db.items == ("a", "b", "c")


def test_load_duplicates_collapse_and_blank_lines_skip():
    db = _db("a a b\n\n   \nb\n")
    assert db.n_baskets == 2
    assert db.tokens(db.baskets[0]) == ("a", "b")


def test_load_rejects_empty_input():
    with pytest.raises(ValueError):
        _db("\n  \n")


def test_load_from_path(tmp_path):
    p = tmp_path / "baskets.txt"
    p.write_text(FIXTURE)
    assert load_transactions(p).n_baskets == 3


# ---------------------------------------------------------------- apriori

def test_apriori_fixture_hand_counts():
    db = _db(FIXTURE)
    fr = {db.tokens(s): v for s, v in apriori(db, 2 / 3).items()}
    assert fr == {("a",): Fraction(1), ("b",): Fraction(2, 3),
                  ("a", "b"): Fraction(2, 3)}


def test_apriori_minsupp_one():
    db = _db(FIXTURE)
    fr = {db.tokens(s) for s in apriori(db, 1.0)}
    assert fr == {("a",)}


def test_apriori_deterministic_order():
    db = _db("c b a\nb a\nc a\n")
    keys = [db.tokens(s) for s in apriori(db, 1 / 3)]
    assert keys == sorted(keys, key=lambda t: (len(t), t))


def test_apriori_guard():
    lines = "\n".join(f"i{k:02d}" for k in range(GUARD_ITEM_LIMIT + 1))
    db = _db(lines)
    minsupp = 0.5 / db.n_baskets
    with pytest.raises(ValueError):
        apriori(db, minsupp)
    assert apriori(db, minsupp, override_guard=True)
    # guard is inert at or below the item limit
    small = _db("a b\nc d\n")
    assert apriori(small, 0.0)


def test_apriori_minsupp_domain():
    db = _db(FIXTURE)
    with pytest.raises(ValueError):
        apriori(db, -0.1)
    with pytest.raises(ValueError):
        apriori(db, 1.1)


def _brute_force(db, minsupp):
    items = range(len(db.items))
    out = {}
    for r in range(1, len(db.items) + 1):
        for combo in combinations(items, r):
            s = frozenset(combo)
            c = sum(1 for b in db.baskets if s <= b)
            if c >= minsupp * db.n_baskets:
                out[s] = Fraction(c, db.n_baskets)
    return out


def test_apriori_matches_powerset_oracle_on_random_dbs():
    rng = SplitMix64(0xA11CE)
    for trial in range(50):
        n_items = 2 + rng.below(11)          # <= 12 items
        n_baskets = 1 + rng.below(64)        # <= 64 baskets
        lines = []
        for _ in range(n_baskets):
            basket = [f"x{i}" for i in range(n_items) if rng.below(3) == 0]
            lines.append(" ".join(basket))
        text = "\n".join(lines)
        try:
            db = _db(text)
        except ValueError:
            continue                          # all baskets empty
        minsupp = rng.below(n_baskets + 1) / n_baskets
        assert apriori(db, minsupp) == _brute_force(db, minsupp), \
            f"trial {trial}: minsupp={minsupp}\n{text}"


# ---------------------------------------------------------------- rules

def test_generate_rules_fixture():
    db = _db(FIXTURE)
    rules = generate_rules(apriori(db, 2 / 3), db, 0.5)
    by_key = {(r.premise, r.conclusion): r for r in rules}
    ab = by_key[(("a",), ("b",))]
    assert ab.contingency.cells() == (2, 1, 0, 0)
    assert ab.support == Fraction(2, 3)
    assert ab.confidence == Fraction(2, 3)


def test_generate_rules_minconf_one_is_implication_only():
    db = _db(FIXTURE)
    rules = generate_rules(apriori(db, 1 / 3), db, 1.0)
    assert rules
    assert all(r.contingency.n_xny == 0 for r in rules)


def test_generate_rules_all_splits():
    db = _db("a b c\na b c\n")
    rules = generate_rules(apriori(db, 1.0), db, 0.0)
    triple = [r for r in rules if len(r.premise) + len(r.conclusion) == 3]
    # 2^3 - 2 = 6 non-trivial splits of {a,b,c}
    assert len(triple) == 6
    assert any(r.premise == ("a", "b") and r.conclusion == ("c",)
               for r in triple)


def test_rule_support_confidence_identities():
    db = _db("a b\nb c\na b c\nc\na\n")
    for r in mine(db, 0.2, 0.0):
        t = r.contingency
        assert t.n == db.n_baskets
        assert r.support == Fraction(t.n_xy, t.n)
        assert r.confidence == Fraction(t.n_xy, t.n_x)


# ---------------------------------------------------------------- scoring

def test_rank_by_confidence():
    db = _db(FIXTURE)
    rules = mine(db, 1 / 3, 0.0)
    ranked = score_rules(rules, ["Confidence"], rank_by="Confidence")
    keys = [(r.premise, r.conclusion) for r in ranked]
    assert keys.index((("a",), ("b",))) < keys.index((("a",), ("c",)))


def test_rank_ties_lexicographic_and_undefined_sink():
    db = _db("a b\nb c\nc a\n")
    rules = mine(db, 1 / 3, 0.0)
    ranked = score_rules(rules, ["Support", "Certainty factor"],
                         rank_by="Certainty factor")
    defined = [r for r in ranked if r.scores[18] is not None]
    tail = ranked[len(defined):]
    assert all(r.scores[18] is None for r in tail)
    # equal-score runs come out in rule lexicographic order
    supp_ranked = score_rules(rules, ["Support"], rank_by="Support")
    runs = {}
    for r in supp_ranked:
        runs.setdefault(r.scores[54], []).append(r.key())
    for keys in runs.values():
        assert keys == sorted(keys)


def test_pdi_requires_context_policy():
    db = _db(FIXTURE)
    rules = mine(db, 1 / 3, 0.4)
    with pytest.raises(ValueError):
        score_rules(rules, ["PDI"], use_context=False)
    scored = score_rules(rules, ["PDI"])
    assert any(v is not None for r in scored for v in r.scores.values())


def test_selection_must_be_nonempty_and_known():
    db = _db(FIXTURE)
    rules = mine(db, 1 / 3, 0.4)
    with pytest.raises(ValueError):
        score_rules(rules, [])
    with pytest.raises(KeyError):
        score_rules(rules, ["No Such Measure"])
    with pytest.raises(ValueError):
        score_rules(rules, ["Support"], rank_by="Confidence")


def test_scores_match_direct_evaluation():
    db = _db("a b\nb c\na b c\nc\n")
    rules = score_rules(mine(db, 0.25, 0.0), ["Lift", "Jaccard"])
    for r in rules:
        assert r.scores[34] == evaluate("Lift", r.contingency)
        assert r.scores[35] == evaluate("Jaccard", r.contingency)


# ---------------------------------------------------------------- reports

def test_report_csv_layout(tmp_path):
    db = _db(FIXTURE)
    rules = score_rules(mine(db, 1 / 3, 0.4), ["Support", "Confidence"],
                        rank_by="Confidence")
    path = tmp_path / "report.csv"
    report_csv(rules, ["Support", "Confidence"], path)
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "premise,conclusion,n_xy,n_xny,n_nxy,n_nxny,Support,Confidence"
    assert len(lines) == 1 + len(rules)
    assert lines[1].startswith("b,a,2,")     # confidence 1 ranks first
    assert any(line.startswith("a,b,2,1,0,0,") for line in lines[2:])


def test_report_itemsets_joined_by_ampersand(tmp_path):
    db = _db("a b c\na b c\n")
    rules = score_rules(generate_rules(apriori(db, 1.0), db, 0.0),
                        ["Support"])
    path = tmp_path / "report.csv"
    report_csv(rules, ["Support"], path)
    assert "a&b,c" in path.read_text()


def test_report_json_mirrors_csv():
    db = _db(FIXTURE)
    rules = score_rules(mine(db, 1 / 3, 0.4), ["Support"])
    payload = json.loads(report_json(rules, ["Support"]))
    assert len(payload) == len(rules)
    assert payload[0]["n_xy"] == rules[0].contingency.n_xy
    assert payload[0]["scores"]["Support"] == rules[0].scores[54]


def test_mining_determinism():
    db1 = _db(FIXTURE)
    db2 = _db(FIXTURE)
    r1 = score_rules(mine(db1, 1 / 3, 0.0), ["Confidence"], rank_by="Confidence")
    r2 = score_rules(mine(db2, 1 / 3, 0.0), ["Confidence"], rank_by="Confidence")
    assert [(r.key(), r.scores) for r in r1] == [(r.key(), r.scores) for r in r2]
