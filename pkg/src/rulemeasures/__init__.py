"""Association-rule interestingness measures and their property-based
categorization: evaluation of 61 measures on 2x2 contingency tables,
bounded verification of 19 formal properties, duplicate detection,
clustering of the property matrix, curve tracing, and a small frequent
itemset miner."""

from .contingency import (
    ContingencyTable,
    EnumerationConfig,
    RuleState,
    TransformKind,
    both_negated,
    classify_state,
    col_scale,
    contrapositive,
    enumerate_tables,
    negate_conclusion,
    negate_premise,
    row_scale,
    swap,
    transform,
    uniform_scale,
)
from .measures import (
    DEFAULT_PARAMS,
    MeasureDescriptor,
    MeasureParams,
    RuleContext,
    evaluate,
    evaluate_all,
    registry,
    resolve,
)
from .properties import (
    EvaluationConfig,
    PropertyMatrix,
    Verdict,
    build_matrix,
    evaluate_measure,
    evaluate_property,
)
from .dedup import (
    EquivalenceGrouping,
    extensional_duplicates,
    identical_property_groups,
    reduce_matrix,
)
from .clustering import (
    Dendrogram,
    EncodedMatrix,
    Partition,
    ahc_ward,
    consensus,
    cut,
    disjunctive_encode,
    kmeans,
    rand_scores,
)
from .analysis import (
    CurveSeries,
    class_profile,
    curve,
    landmark_values,
    shape_probe,
)
from .miner import (
    MinedRule,
    TransactionDb,
    apriori,
    generate_rules,
    load_transactions,
    score_rules,
)

__version__ = "0.1.0"

__all__ = [
    "ContingencyTable",
    "EnumerationConfig",
    "RuleState",
    "TransformKind",
    "both_negated",
    "classify_state",
    "col_scale",
    "contrapositive",
    "enumerate_tables",
    "negate_conclusion",
    "negate_premise",
    "row_scale",
    "swap",
    "transform",
    "uniform_scale",
    "DEFAULT_PARAMS",
    "MeasureDescriptor",
    "MeasureParams",
    "RuleContext",
    "evaluate",
    "evaluate_all",
    "registry",
    "resolve",
    "EvaluationConfig",
    "PropertyMatrix",
    "Verdict",
    "build_matrix",
    "evaluate_measure",
    "evaluate_property",
    "EquivalenceGrouping",
    "extensional_duplicates",
    "identical_property_groups",
    "reduce_matrix",
    "Dendrogram",
    "EncodedMatrix",
    "Partition",
    "ahc_ward",
    "consensus",
    "cut",
    "disjunctive_encode",
    "kmeans",
    "rand_scores",
    "CurveSeries",
    "class_profile",
    "curve",
    "landmark_values",
    "shape_probe",
    "MinedRule",
    "TransactionDb",
    "apriori",
    "generate_rules",
    "load_transactions",
    "score_rules",
]
