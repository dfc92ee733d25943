"""Published property values and the comparison against computed verdicts.

The literature documents the symmetry column (P1) for every measure plus
complete 19-property rows for eleven representative measures.  Computed
verdicts are checked against these cells; a small set of documented waiver
cells is tolerated (each carries an analytic justification in
``data/waivers.csv``), anything else counts as an unexplained discrepancy.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources

from .measures import registry, resolve
from .properties import PROPERTY_NAMES, PropertyMatrix

# The published 8-cluster hierarchical partition, extended to the full
# measure set by giving each absorbed duplicate its representative's cluster.
PUBLISHED_AHC_CLUSTERS: dict[int, tuple[int, ...]] = {
    1: (30, 33),
    2: (26, 27, 28, 31, 32),
    3: (44, 59),
    4: (12, 14, 16, 21, 23, 25, 29, 36, 47),
    5: (4, 7, 8, 11, 13, 15, 19, 35, 38, 40, 46, 49, 53, 54, 58),
    6: (3, 6, 9, 39, 42, 52, 57),
    7: (1, 24, 41, 43, 45, 48, 60, 61),
    8: (2, 5, 10, 17, 18, 20, 22, 34, 37, 50, 51, 55, 56),
}


def published_partition():
    from .clustering import Partition

    return Partition({mid: label
                      for label, members in PUBLISHED_AHC_CLUSTERS.items()
                      for mid in members})


def reference_cells() -> dict[tuple[int, str], int]:
    """Every published (measure, property) cell: the symmetry column (P1) for
    all measures plus eleven complete rows, shipped as package data."""
    cells: dict[tuple[int, str], int] = {}
    path = resources.files("rulemeasures.data") / "reference_matrix.csv"
    with path.open(newline="") as fh:
        for row in csv.DictReader(fh):
            desc = resolve(row["measure"])
            cells[(desc.id, row["property"])] = int(row["value"])
    return cells


@dataclass(frozen=True)
class Waiver:
    measure_id: int
    prop: str
    published: int
    computed: int
    justification: str


def load_waivers() -> dict[tuple[int, str], Waiver]:
    """The documented cells where a faithful implementation of the printed
    formulas provably disagrees with the printed property value."""
    waivers: dict[tuple[int, str], Waiver] = {}
    path = resources.files("rulemeasures.data") / "waivers.csv"
    with path.open(newline="") as fh:
        for row in csv.DictReader(fh):
            desc = resolve(row["measure"])
            w = Waiver(desc.id, row["property"], int(row["published"]),
                       int(row["computed"]), row["justification"])
            waivers[(w.measure_id, w.prop)] = w
    return waivers


@dataclass
class Discrepancy:
    measure_id: int
    prop: str
    published: int
    computed: int | None
    waived: bool
    justification: str | None = None


def compare_to_reference(matrix: PropertyMatrix) -> list[Discrepancy]:
    """All computed-vs-published differences, flagged waived or unexplained."""
    waivers = load_waivers()
    out: list[Discrepancy] = []
    for (mid, prop), published in sorted(reference_cells().items()):
        if mid not in matrix.values:
            continue
        computed = matrix.values[mid][prop]
        if computed == published:
            continue
        waiver = waivers.get((mid, prop))
        waived = (waiver is not None and waiver.published == published
                  and waiver.computed == computed)
        out.append(Discrepancy(mid, prop, published, computed, waived,
                               waiver.justification if waived else None))
    return out


def unexplained(matrix: PropertyMatrix) -> list[Discrepancy]:
    return [d for d in compare_to_reference(matrix) if not d.waived]


def completed_matrix(matrix: PropertyMatrix) -> PropertyMatrix:
    """Computed matrix with every published cell overriding the search result;
    this is the canonical input of the categorization pipeline."""
    values = {mid: dict(row) for mid, row in matrix.values.items()}
    for (mid, prop), published in reference_cells().items():
        if mid in values:
            values[mid][prop] = published
    return PropertyMatrix(values)
