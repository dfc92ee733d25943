"""Evolution curves, landmark values, and class profiles.

A curve traces one measure over every feasible joint count n_XY with the
margins (n_X, n_Y, n) held fixed, annotated with the characteristic rule
states along the way (incompatibility, independence, equilibrium, logical
implication).  Class profiles summarize a cluster's property values with the
majority notation: a plain value when unanimous, "v?" when all members but
one agree on v (classes of three or more), "?" otherwise.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from typing import Optional

from .contingency import ContingencyTable
from .measures import (DEFAULT_PARAMS, MeasureParams, RuleContext, Value,
                       evaluate, resolve)
from .properties import PROPERTY_NAMES, PropertyMatrix


@dataclass(frozen=True)
class Landmark:
    state: str          # incompatibility | independence | equilibrium | implication
    n_xy: int
    exact: bool         # False on a bracketing integer of a non-integral point


@dataclass(frozen=True)
class CurveSeries:
    measure_id: int
    n_x: int
    n_y: int
    n: int
    points: tuple[tuple[int, Value], ...]
    landmarks: tuple[Landmark, ...]

    def value_at(self, n_xy: int) -> Value:
        for a, v in self.points:
            if a == n_xy:
                return v
        raise KeyError(f"n_xy={n_xy} outside the feasible range")

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["n_xy", "value"])
            for a, v in self.points:
                writer.writerow([a, "" if v is None else repr(v)])

    def landmarks_json(self) -> str:
        return json.dumps([{
            "state": lm.state, "n_xy": lm.n_xy, "exact": lm.exact,
        } for lm in self.landmarks], indent=2)


def _table(n_xy: int, n_x: int, n_y: int, n: int) -> ContingencyTable:
    return ContingencyTable(n_xy, n_x - n_xy, n_y - n_xy,
                            n - n_x - n_y + n_xy)


def _feasible_range(n_x: int, n_y: int, n: int) -> range:
    return range(max(0, n_x + n_y - n), min(n_x, n_y) + 1)


def _check_margins(n_x: int, n_y: int, n: int) -> None:
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 <= n_x <= n_y <= n:
        raise ValueError("margins must satisfy 0 <= n_X <= n_Y <= n")


def _curve_landmarks(n_x: int, n_y: int, n: int) -> tuple[Landmark, ...]:
    feasible = _feasible_range(n_x, n_y, n)
    out: list[Landmark] = []
    if 0 in feasible:
        out.append(Landmark("incompatibility", 0, True))
    indep_num = n_x * n_y
    if indep_num % n == 0:
        pos = indep_num // n
        if pos in feasible:
            out.append(Landmark("independence", pos, True))
    else:
        # non-integral independence point: report the bracketing integers
        lo = indep_num // n
        for pos in (lo, lo + 1):
            if pos in feasible:
                out.append(Landmark("independence", pos, False))
    if n_x >= 1 and n_x % 2 == 0 and n_x // 2 in feasible:
        out.append(Landmark("equilibrium", n_x // 2, True))
    if n_x >= 1 and n_x in feasible:
        out.append(Landmark("implication", n_x, True))
    return tuple(out)


def curve(measure, n_x: int, n_y: int, n: int,
          params: MeasureParams = DEFAULT_PARAMS,
          context: Optional[RuleContext] = None) -> CurveSeries:
    """One point per feasible n_XY with the margins fixed."""
    _check_margins(n_x, n_y, n)
    desc = resolve(measure)
    points = tuple(
        (a, evaluate(desc, _table(a, n_x, n_y, n), params, context))
        for a in _feasible_range(n_x, n_y, n))
    return CurveSeries(desc.id, n_x, n_y, n, points,
                       _curve_landmarks(n_x, n_y, n))


def landmark_values(measure, n_x: int, n_y: int, n: int,
                    params: MeasureParams = DEFAULT_PARAMS,
                    context: Optional[RuleContext] = None) -> dict[str, Value]:
    """The measure's value at each representable characteristic state; the
    independence entry is present only when n_X·n_Y/n is an integer."""
    _check_margins(n_x, n_y, n)
    desc = resolve(measure)
    out: dict[str, Value] = {}
    for lm in _curve_landmarks(n_x, n_y, n):
        if lm.exact:
            out[lm.state] = evaluate(desc, _table(lm.n_xy, n_x, n_y, n),
                                     params, context)
    return out


def shape_probe(series: CurveSeries, tol: float = 1e-9) -> str:
    """Classify the curve by the sign pattern of its second differences over
    consecutive finite points: linear / concave / convex / mixed."""
    window: list[float] = []
    last_a: Optional[int] = None
    has_pos = has_neg = False
    count = 0
    for a, v in series.points:
        finite = v is not None and math.isfinite(v)
        if not finite or (last_a is not None and a != last_a + 1):
            window.clear()
        if finite:
            count += 1
            window.append(v)
            if len(window) > 3:
                window.pop(0)
            if len(window) == 3:
                d2 = window[2] - 2.0 * window[1] + window[0]
                if d2 > tol:
                    has_pos = True
                elif d2 < -tol:
                    has_neg = True
        last_a = a
    if count < 3:
        raise ValueError("need at least three finite points to probe a shape")
    if has_pos and has_neg:
        return "mixed"
    if has_pos:
        return "convex"
    if has_neg:
        return "concave"
    return "linear"


@dataclass(frozen=True)
class ClassProfile:
    class_id: int
    members: tuple[int, ...]
    summary: dict[str, str]     # property -> "0"|"1"|"2"|"?"|"0?"|"1?"|"2?"


def class_profile(matrix: PropertyMatrix, partition) -> list[ClassProfile]:
    """Summarize each cluster's property values with the majority notation."""
    missing = [mid for mid in partition.labels if mid not in matrix.values]
    if missing:
        raise ValueError(f"partition covers measures absent from the matrix: "
                         f"{sorted(missing)}")
    profiles = []
    for class_id, members in enumerate(partition.blocks(), start=1):
        summary: dict[str, str] = {}
        for prop in PROPERTY_NAMES:
            counts: dict[int, int] = {}
            for mid in members:
                v = matrix.values[mid][prop]
                counts[v] = counts.get(v, 0) + 1
            if len(counts) == 1:
                summary[prop] = str(next(iter(counts)))
            elif (len(members) >= 3 and len(counts) == 2
                  and min(counts.values()) == 1):
                majority = max(counts, key=counts.get)
                summary[prop] = f"{majority}?"
            else:
                summary[prop] = "?"
        profiles.append(ClassProfile(class_id, members, summary))
    return profiles


def profiles_to_csv(profiles: list[ClassProfile], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["class", "members", *PROPERTY_NAMES])
        for p in profiles:
            writer.writerow([
                p.class_id,
                "&".join(resolve(mid).name for mid in p.members),
                *(p.summary[prop] for prop in PROPERTY_NAMES)])
