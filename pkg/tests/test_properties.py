"""Tests of the bounded property-verification engine.

Small bounds keep the suite fast; verdict oracles below were derived by hand
from the measure formulas (monotonicity, fixed values, invariances) and frozen.
"""

import math

import pytest

from rulemeasures.contingency import ContingencyTable
from rulemeasures.measures import evaluate, resolve
from rulemeasures.properties import (
    PROPERTY_NAMES,
    EvaluationConfig,
    PropertyMatrix,
    Verdict,
    build_matrix,
    evaluate_measure,
    evaluate_property,
    _engine,
)
from rulemeasures.reference import (
    compare_to_reference,
    completed_matrix,
    load_waivers,
    reference_cells,
    unexplained,
)

CFG = EvaluationConfig(n_max=12)


def test_config_validation():
    with pytest.raises(ValueError):
        EvaluationConfig(n_max=2)
    with pytest.raises(ValueError):
        EvaluationConfig(tol=0.0)
    with pytest.raises(ValueError):
        EvaluationConfig(min_conf=1.5)
    with pytest.raises(ValueError):
        EvaluationConfig(k_max=1)


def test_engine_enumeration_and_transform_maps():
    eng = _engine(8)
    assert len(eng.cells) == sum(math.comb(n + 3, 3) for n in range(1, 9))
    # each transform index map must send a table to its transformed cells
    for i in range(0, len(eng.cells), 37):
        a, b, c, d = eng.cells[i]
        assert eng.cells[eng.swap_idx[i]] == (a, c, b, d)
        assert eng.cells[eng.negc_idx[i]] == (b, a, d, c)
        assert eng.cells[eng.negp_idx[i]] == (c, d, a, b)
        assert eng.cells[eng.bothneg_idx[i]] == (d, c, b, a)
        assert eng.cells[eng.contra_idx[i]] == (d, b, c, a)


def test_state_masks_partition():
    eng = _engine(8)
    total = eng.independence.sum() + eng.attraction.sum() + eng.repulsion.sum()
    assert total == len(eng.cells)


# -- hand-derived verdict oracles ---------------------------------------------

def test_support_row():
    row = {p: v.value for p, v in evaluate_measure("Support", CFG).items()}
    # a/n: symmetric, strictly increasing in a at fixed margins, linear,
    # scale-invariant, no fixed independence/implication value
    assert row["P1"] == 0
    assert row["P4"] == 1
    assert row["P5"] == 0
    assert row["P7"] == 0 and row["P8"] == 0 and row["P9"] == 0
    assert row["P12"] == 1
    assert row["P13"] == 0 and row["P18"] == 0


def test_confidence_row():
    row = {p: v.value for p, v in evaluate_measure("Confidence", CFG).items()}
    assert row["P1"] == 1          # a/(a+b) is orientation-sensitive
    assert row["P8"] == 1          # equals 1 whenever n_XnotY = 0
    assert row["P9"] == 1          # equals 1/2 at equilibrium
    assert row["P12"] == 1         # linear in n_XY
    assert row["P15"] == 0         # conf(X->notY) = 1 - conf, not -conf
    assert row["P18"] == 0


def test_fixed_value_landmarks():
    assert evaluate_property("Interest", "P7", CFG).landmark == pytest.approx(1.0)
    assert evaluate_property("Piatetsky-Shapiro", "P7", CFG).landmark == \
        pytest.approx(0.0)
    assert evaluate_property("Certainty factor", "P8", CFG).landmark == \
        pytest.approx(1.0)
    assert evaluate_property("Confidence", "P9", CFG).landmark == \
        pytest.approx(0.5)


def test_odds_ratio_family_scale_invariance():
    for name in ("Odds ratio", "Yule's Q", "Yule's Y"):
        assert evaluate_property(name, "P13", CFG).value == 1
        assert evaluate_property(name, "P18", CFG).value == 0


def test_declared_properties():
    v = evaluate_property("II", "P17", CFG)
    assert (v.value, v.method) == (1, "declared")
    v = evaluate_property("Confidence", "P17", CFG)
    assert (v.value, v.method) == (0, "declared")
    v = evaluate_property("Jaccard", "P19", CFG)
    assert (v.value, v.method) == (1, "declared")


def test_statistical_measures_vary_under_scaling():
    assert evaluate_property("II", "P18", CFG).value == 1


def test_p12_ternary_values():
    # log(lift) is strictly concave in n_XY; Jaccard a/(a+b+c... ) at fixed
    # margins is a convex hyperbola segment; confidence is linear
    assert evaluate_property("Informational gain", "P12", CFG).value == 2
    assert evaluate_property("Jaccard", "P12", CFG).value == 0
    assert evaluate_property("Confidence", "P12", CFG).value == 1


def test_witnesses_are_genuine_counterexamples():
    """Every refuting witness pair must actually violate the claimed identity
    or monotonicity when re-evaluated through the public measure API."""
    for mid in (3, 12, 34, 35, 54, 61):
        desc = resolve(mid)
        for prop in ("P1", "P2", "P14", "P15", "P16"):
            v = evaluate_property(desc, prop, CFG)
            if v.witness is None:
                continue
            t, u = v.witness
            mv, mu = evaluate(desc, t), evaluate(desc, u)
            if prop in ("P14", "P15"):
                assert mv is None or mu is None or \
                    abs(mu - (-mv)) > CFG.tol
            else:
                assert mv is None or mu is None or abs(mv - mu) > CFG.tol


def test_monotonicity_witness_orientation():
    # support = a/n strictly decreases as the unrelated cell d grows
    v = evaluate_property("Support", "P5", CFG)
    assert v.value == 0
    t, u = v.witness
    assert evaluate("Support", t) > evaluate("Support", u) + CFG.tol


def test_p13_witness_is_scaled_table():
    v = evaluate_property("Zhang", "P13", CFG)
    assert v.value == 0
    base, scaled = v.witness
    # the scaled witness preserves one margin direction of proportions
    assert scaled.n > base.n
    assert abs(evaluate("Zhang", base) - evaluate("Zhang", scaled)) > CFG.tol


def test_matrix_build_subset_and_csv_roundtrip(tmp_path):
    m = build_matrix(CFG, measures=["Support", "Confidence", "Jaccard"])
    assert sorted(m.measure_ids()) == sorted(
        resolve(n).id for n in ("Support", "Confidence", "Jaccard"))
    path = tmp_path / "matrix.csv"
    m.to_csv(path)
    again = PropertyMatrix.from_csv(path)
    assert again.values == m.values


def test_parallel_build_matches_serial():
    names = ["Support", "Confidence", "Interest"]
    serial = build_matrix(CFG, jobs=1, measures=names)
    parallel = build_matrix(CFG, jobs=2, measures=names)
    assert serial.values == parallel.values


# -- published reference cells ------------------------------------------------

@pytest.fixture(scope="module")
def full_small_matrix():
    return build_matrix(EvaluationConfig(n_max=16))


def test_reference_cells_shape():
    cells = reference_cells()
    assert sum(1 for (_, p) in cells if p == "P1") == 61
    assert len(cells) == 61 + 11 * 18  # P1 column + 11 full rows sans P1 overlap


def test_waivers_well_formed():
    waivers = load_waivers()
    assert len(waivers) == 11
    for (mid, prop), w in waivers.items():
        assert prop in PROPERTY_NAMES
        assert w.published != w.computed
        assert len(w.justification) > 40


def test_reference_comparison_only_waived_cells(full_small_matrix):
    diffs = compare_to_reference(full_small_matrix)
    assert all(d.waived for d in diffs)
    assert {(d.measure_id, d.prop) for d in diffs} == set(load_waivers())
    assert unexplained(full_small_matrix) == []


def test_completed_matrix_applies_overrides(full_small_matrix):
    completed = completed_matrix(full_small_matrix)
    for (mid, prop), published in reference_cells().items():
        assert completed.values[mid][prop] == published
    # non-reference cells keep the computed verdicts
    assert completed.values[34]["P13"] == full_small_matrix.values[34]["P13"]
