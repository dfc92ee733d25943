"""2x2 contingency tables for association rules X -> Y.

A table stores the four joint counts of a rule over a dataset of n baskets:

    n_xy    baskets containing both premise X and conclusion Y (examples)
    n_xny   baskets containing X but not Y (counter-examples)
    n_nxy   baskets containing Y but not X
    n_nxny  baskets containing neither

Everything downstream (measure evaluation, property search, curve tracing)
works on these integer counts; derived probabilities are exposed as plain
floats.  State classification (independence, equilibrium, ...) is done with
exact integer arithmetic so no tolerance is involved.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator


@dataclass(frozen=True)
class ContingencyTable:
    """Immutable 2x2 table of non-negative integer counts."""

    n_xy: int
    n_xny: int
    n_nxy: int
    n_nxny: int

    def __post_init__(self) -> None:
        for name in ("n_xy", "n_xny", "n_nxy", "n_nxny"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"{name} must be an int, got {value!r}")
            if value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")

    # -- totals and margins -------------------------------------------------

    @property
    def n(self) -> int:
        return self.n_xy + self.n_xny + self.n_nxy + self.n_nxny

    @property
    def n_x(self) -> int:
        """Number of baskets containing the premise X."""
        return self.n_xy + self.n_xny

    @property
    def n_y(self) -> int:
        """Number of baskets containing the conclusion Y."""
        return self.n_xy + self.n_nxy

    @property
    def n_nx(self) -> int:
        return self.n - self.n_x

    @property
    def n_ny(self) -> int:
        return self.n - self.n_y

    def cells(self) -> tuple[int, int, int, int]:
        return (self.n_xy, self.n_xny, self.n_nxy, self.n_nxny)

    # -- probabilities ------------------------------------------------------

    def _p(self, count: int) -> float:
        if self.n == 0:
            raise ValueError("probabilities are undefined for an empty table")
        return count / self.n

    @property
    def p_xy(self) -> float:
        return self._p(self.n_xy)

    @property
    def p_xny(self) -> float:
        return self._p(self.n_xny)

    @property
    def p_nxy(self) -> float:
        return self._p(self.n_nxy)

    @property
    def p_nxny(self) -> float:
        return self._p(self.n_nxny)

    @property
    def p_x(self) -> float:
        return self._p(self.n_x)

    @property
    def p_y(self) -> float:
        return self._p(self.n_y)

    # -- text round-trip ----------------------------------------------------

    @classmethod
    def from_text(cls, text: str) -> "ContingencyTable":
        """Parse ``"n_xy,n_xny,n_nxy,n_nxny"``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected 4 comma-separated counts, got {text!r}")
        return cls(*(int(p) for p in parts))

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.cells())


# -- transforms --------------------------------------------------------------


def swap(t: ContingencyTable) -> ContingencyTable:
    """Exchange premise and conclusion: X -> Y becomes Y -> X."""
    return ContingencyTable(t.n_xy, t.n_nxy, t.n_xny, t.n_nxny)


def negate_conclusion(t: ContingencyTable) -> ContingencyTable:
    """X -> Y becomes X -> not-Y."""
    return ContingencyTable(t.n_xny, t.n_xy, t.n_nxny, t.n_nxy)


def negate_premise(t: ContingencyTable) -> ContingencyTable:
    """X -> Y becomes not-X -> Y."""
    return ContingencyTable(t.n_nxy, t.n_nxny, t.n_xy, t.n_xny)


def both_negated(t: ContingencyTable) -> ContingencyTable:
    """X -> Y becomes not-X -> not-Y."""
    return ContingencyTable(t.n_nxny, t.n_nxy, t.n_xny, t.n_xy)


def contrapositive(t: ContingencyTable) -> ContingencyTable:
    """X -> Y becomes not-Y -> not-X."""
    return ContingencyTable(t.n_nxny, t.n_xny, t.n_nxy, t.n_xy)


def uniform_scale(t: ContingencyTable, k: int) -> ContingencyTable:
    """Multiply every cell by a positive integer factor."""
    _check_factor(k)
    return ContingencyTable(k * t.n_xy, k * t.n_xny, k * t.n_nxy, k * t.n_nxny)


def row_scale(t: ContingencyTable, k1: int, k2: int) -> ContingencyTable:
    """Scale the X row by k1 and the not-X row by k2."""
    _check_factor(k1)
    _check_factor(k2)
    return ContingencyTable(k1 * t.n_xy, k1 * t.n_xny, k2 * t.n_nxy, k2 * t.n_nxny)


def col_scale(t: ContingencyTable, k1: int, k2: int) -> ContingencyTable:
    """Scale the Y column by k1 and the not-Y column by k2."""
    _check_factor(k1)
    _check_factor(k2)
    return ContingencyTable(k1 * t.n_xy, k2 * t.n_xny, k1 * t.n_nxy, k2 * t.n_nxny)


def _check_factor(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"scale factor must be a positive integer, got {k!r}")


class TransformKind(Enum):
    SWAP = "swap"
    NEGATE_CONCLUSION = "negate_conclusion"
    NEGATE_PREMISE = "negate_premise"
    BOTH_NEGATED = "both_negated"
    CONTRAPOSITIVE = "contrapositive"
    UNIFORM_SCALE = "uniform_scale"
    ROW_SCALE = "row_scale"
    COL_SCALE = "col_scale"


def transform(t: ContingencyTable, kind: TransformKind, *factors: int) -> ContingencyTable:
    """Apply a named transform; scale kinds take 1 or 2 integer factors."""
    simple = {
        TransformKind.SWAP: swap,
        TransformKind.NEGATE_CONCLUSION: negate_conclusion,
        TransformKind.NEGATE_PREMISE: negate_premise,
        TransformKind.BOTH_NEGATED: both_negated,
        TransformKind.CONTRAPOSITIVE: contrapositive,
    }
    if kind in simple:
        if factors:
            raise ValueError(f"{kind.value} takes no factors")
        return simple[kind](t)
    if kind is TransformKind.UNIFORM_SCALE:
        (k,) = factors
        return uniform_scale(t, k)
    if kind is TransformKind.ROW_SCALE:
        k1, k2 = factors
        return row_scale(t, k1, k2)
    if kind is TransformKind.COL_SCALE:
        k1, k2 = factors
        return col_scale(t, k1, k2)
    raise ValueError(f"unknown transform {kind!r}")


# -- rule states -------------------------------------------------------------


@dataclass(frozen=True)
class RuleState:
    """Exact logical relationships a table can exhibit.

    * independence:         n_xy * n == n_x * n_y
    * attraction:           n_xy * n >  n_x * n_y
    * repulsion:            n_xy * n <  n_x * n_y
    * equilibrium:          2 * n_xy == n_x (P(Y|X) = 1/2), requires n_x >= 1
    * incompatibility:      n_xy == 0
    * logical_implication:  n_xny == 0, requires n_x >= 1
    """

    independence: bool
    attraction: bool
    repulsion: bool
    equilibrium: bool
    incompatibility: bool
    logical_implication: bool


def classify_state(t: ContingencyTable) -> RuleState:
    """Classify with exact integer arithmetic (no floating point)."""
    cross = t.n_xy * t.n
    expected = t.n_x * t.n_y
    return RuleState(
        independence=cross == expected,
        attraction=cross > expected,
        repulsion=cross < expected,
        equilibrium=(t.n_x >= 1 and 2 * t.n_xy == t.n_x),
        incompatibility=t.n_xy == 0,
        logical_implication=(t.n_x >= 1 and t.n_xny == 0),
    )


# -- bounded enumeration -----------------------------------------------------


@dataclass(frozen=True)
class EnumerationConfig:
    n_max: int = 40

    def __post_init__(self) -> None:
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")


def enumerate_tables(config: EnumerationConfig) -> Iterator[ContingencyTable]:
    """Yield every table with 1 <= n <= n_max.

    Order is ascending in n, then lexicographic over (n_xy, n_xny, n_nxy,
    n_nxny), so the first table satisfying a predicate is a stable witness.
    For each n there are C(n+3, 3) tables.
    """
    for n in range(1, config.n_max + 1):
        for a in range(n + 1):
            for b in range(n - a + 1):
                for c in range(n - a - b + 1):
                    yield ContingencyTable(a, b, c, n - a - b - c)
