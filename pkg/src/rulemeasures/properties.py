"""Bounded verification of the 19 formal properties of each measure.

Every property P1..P19 is decided by exhaustive search over all contingency
tables with n <= n_max (default 40).  Universal claims are refuted with the
first counterexample in enumeration order, so witnesses are deterministic;
existential verdicts carry no witness.  P12 is ternary (0 = convex,
1 = indifferent/linear, 2 = concave); every other property is binary.
P17 (grounded in a probabilistic model) and, where published, P19
(discriminant power) are declared registry facts rather than search results.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from .contingency import ContingencyTable
from .measures import (
    DEFAULT_PARAMS,
    MeasureDescriptor,
    MeasureParams,
    registry,
    resolve,
)

PROPERTY_NAMES = tuple(f"P{i}" for i in range(1, 20))

_NAN = float("nan")


@dataclass(frozen=True)
class EvaluationConfig:
    """Knobs of the bounded property search."""

    n_max: int = 40
    tol: float = 1e-9
    min_conf: float = 0.5          # confidence floor of the P12 restriction
    k_max: int = 4                 # largest scaling factor for P13/P18
    p19_scales: tuple[int, ...] = (1, 4, 16, 64, 256)
    p19_dispersion_floor: float = 1e-3
    params: MeasureParams = DEFAULT_PARAMS

    def __post_init__(self) -> None:
        if self.n_max < 4:
            raise ValueError("n_max must be at least 4")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if not 0.0 <= self.min_conf <= 1.0:
            raise ValueError("min_conf must lie in [0, 1]")
        if self.k_max < 2:
            raise ValueError("k_max must be at least 2")


@dataclass(frozen=True)
class Verdict:
    measure_id: int
    prop: str
    value: Optional[int]                 # 0/1 (0/1/2 for P12); None on error
    method: str                          # "computed" or "declared"
    witness: tuple[ContingencyTable, ...] | None = None
    landmark: Optional[float] = None
    error: Optional[str] = None
    bound: Optional[int] = None          # n_max behind a computed verdict


# -- table enumeration engine -------------------------------------------------


class _Engine:
    """Shared per-bound state: cell arrays, transform index maps, state masks."""

    def __init__(self, n_max: int):
        self.n_max = n_max
        cells: list[tuple[int, int, int, int]] = []
        for n in range(1, n_max + 1):
            for a in range(n + 1):
                for b in range(n - a + 1):
                    for c in range(n - a - b + 1):
                        cells.append((a, b, c, n - a - b - c))
        self.cells = cells
        self.index = {t: i for i, t in enumerate(cells)}
        arr = np.array(cells, dtype=np.int64)
        self.a, self.b, self.c, self.d = arr[:, 0], arr[:, 1], arr[:, 2], arr[:, 3]
        self.n = arr.sum(axis=1)
        self.x = self.a + self.b
        self.y = self.a + self.c

        lookup = self.index
        self.swap_idx = np.fromiter(
            (lookup[(a, c, b, d)] for a, b, c, d in cells), np.int64, len(cells))
        self.negc_idx = np.fromiter(
            (lookup[(b, a, d, c)] for a, b, c, d in cells), np.int64, len(cells))
        self.negp_idx = np.fromiter(
            (lookup[(c, d, a, b)] for a, b, c, d in cells), np.int64, len(cells))
        self.bothneg_idx = np.fromiter(
            (lookup[(d, c, b, a)] for a, b, c, d in cells), np.int64, len(cells))
        self.contra_idx = np.fromiter(
            (lookup[(d, b, c, a)] for a, b, c, d in cells), np.int64, len(cells))

        cross = self.a * self.n
        expected = self.x * self.y
        self.independence = cross == expected
        self.attraction = cross > expected
        self.repulsion = cross < expected
        self.implication = (self.b == 0) & (self.x >= 1)
        self.equilibrium = (2 * self.a == self.x) & (self.x >= 1)

        # sort orders for the monotonicity families
        self.order_p4 = np.lexsort((self.a, self.y, self.x, self.n))
        self.order_p5 = np.lexsort((self.d, self.c, self.b, self.a))
        self.order_p6 = np.lexsort((self.d, self.c, self.b, self.a))

        self._vectors: dict[tuple, np.ndarray] = {}
        self._moments: tuple[float, float] | None = None

    # -- measure value vectors ------------------------------------------------

    def _params_key(self, params: MeasureParams) -> tuple:
        return (params.sigma_c, params.k_weight, params.m_weight)

    def vector(self, desc: MeasureDescriptor, params: MeasureParams) -> np.ndarray:
        """Values of one measure on every table in the bound (nan = undefined)."""
        key = (desc.id, self._params_key(params))
        cached = self._vectors.get(key)
        if cached is not None:
            return cached
        if desc.needs_context:
            vec = self._pdi_vector(params)
        else:
            func = desc.func
            vec = np.fromiter(
                (v if (v := func(a, b, c, d, params)) is not None else _NAN
                 for a, b, c, d in self.cells),
                np.float64, len(self.cells))
        self._vectors[key] = vec
        return vec

    def ii_moments(self, params: MeasureParams) -> tuple[float, float]:
        """Population mean/std of implication intensity over the bound; this
        is the standardization context of the discriminant index."""
        if self._moments is None:
            ii = self.vector(resolve(30), params)
            good = ii[np.isfinite(ii)]
            mean = float(good.mean())
            std = float(good.std())
            self._moments = (mean, std)
        return self._moments

    def _pdi_vector(self, params: MeasureParams) -> np.ndarray:
        from .stats import std_normal_sf

        ii = self.vector(resolve(30), params)
        mean, std = self.ii_moments(params)
        if std == 0.0:
            return np.full(len(self.cells), _NAN)
        out = np.empty_like(ii)
        for i, v in enumerate(ii):
            out[i] = std_normal_sf((v - mean) / std) if math.isfinite(v) else _NAN
        return out

    def evaluator(self, desc: MeasureDescriptor, params: MeasureParams) -> "_Evaluator":
        return _Evaluator(self, desc, params)

    def table(self, i: int) -> ContingencyTable:
        return ContingencyTable(*self.cells[i])


class _Evaluator:
    """Scalar access to a measure: vector lookup in-bound, memoized direct
    evaluation out of bound (used by the scaling properties)."""

    def __init__(self, eng: _Engine, desc: MeasureDescriptor, params: MeasureParams):
        self._eng = eng
        self._desc = desc
        self._params = params
        self._vec = eng.vector(desc, params)
        self._memo: dict[tuple[int, int, int, int], float] = {}
        self._moments = eng.ii_moments(params) if desc.needs_context else None

    def at(self, cells: tuple[int, int, int, int]) -> float:
        idx = self._eng.index.get(cells)
        if idx is not None:
            return float(self._vec[idx])
        value = self._memo.get(cells)
        if value is None:
            if self._desc.needs_context:
                raw = self._desc.func(*cells, self._params, self._moments)
            else:
                raw = self._desc.func(*cells, self._params)
            value = _NAN if raw is None else raw
            self._memo[cells] = value
        return value


_ENGINES: dict[int, _Engine] = {}


def _engine(n_max: int) -> _Engine:
    eng = _ENGINES.get(n_max)
    if eng is None:
        eng = _Engine(n_max)
        _ENGINES[n_max] = eng
    return eng


# -- comparison helpers -------------------------------------------------------


def _differs(u: float, v: float, tol: float) -> bool:
    """Extended-real difference: infinities compare by sign, undefined only
    equals undefined."""
    u_nan, v_nan = u != u, v != v
    if u_nan or v_nan:
        return not (u_nan and v_nan)
    if u == v:
        return False
    diff = u - v
    return not (-tol <= diff <= tol)


# -- individual property searches --------------------------------------------


def _identity_property(eng, vec, idx_map, tol, negate=False):
    """First table where m(transform(t)) deviates from (-)m(t)."""
    other = vec[idx_map]
    base = -vec if negate else vec
    with np.errstate(invalid="ignore"):
        nan_mismatch = np.isnan(other) != np.isnan(base)
        both = ~np.isnan(other) & ~np.isnan(base)
        numeric = np.zeros(len(vec), dtype=bool)
        ob, bb = other[both], base[both]
        numeric[both] = ~((ob == bb) | (np.abs(ob - bb) <= tol))
    bad = np.flatnonzero(nan_mismatch | numeric)
    return int(bad[0]) if bad.size else None


def _p1(eng, ev, cfg):
    i = _identity_property(eng, ev._vec, eng.swap_idx, cfg.tol)
    if i is None:
        return 0, None
    return 1, (eng.table(i), eng.table(int(eng.swap_idx[i])))


def _p2(eng, ev, cfg):
    i = _identity_property(eng, ev._vec, eng.negc_idx, cfg.tol)
    if i is None:
        return 0, None
    return 1, (eng.table(i), eng.table(int(eng.negc_idx[i])))


def _p3(eng, ev, cfg):
    vec = ev._vec
    mask = eng.implication
    idxs = np.flatnonzero(mask)
    if not idxs.size:
        return None, "no logical-implication tables in the bound"
    any_defined = False
    for i in idxs:
        u, v = float(vec[i]), float(vec[eng.contra_idx[i]])
        if not (u != u and v != v):
            any_defined = True
        if _differs(u, v, cfg.tol):
            return 0, (eng.table(int(i)), eng.table(int(eng.contra_idx[i])))
    if not any_defined:
        return None, "measure undefined on every implication table"
    return 1, None


def _sweep_families(eng, vec, order, family_keys, tol):
    """Weak monotonicity (nondecreasing) along each sorted family, undefined
    skipped; returns (violating pair | None, strict pair found?)."""
    keys = [k[order] for k in family_keys]
    values = vec[order]
    prev_key = None
    prev_val = _NAN
    prev_idx = -1
    strict = False
    n_rows = len(values)
    for pos in range(n_rows):
        key = tuple(int(k[pos]) for k in keys)
        v = float(values[pos])
        if key != prev_key:
            prev_key = key
            prev_val, prev_idx = _NAN, -1
        if v != v:
            continue
        if prev_idx >= 0:
            if prev_val > v and not (prev_val - v <= tol):
                return (int(order[prev_idx]), int(order[pos])), strict
            if v > prev_val and not (v - prev_val <= tol):
                strict = True
        prev_val, prev_idx = v, pos
    return None, strict


def _p4(eng, ev, cfg):
    pair, strict = _sweep_families(
        eng, ev._vec, eng.order_p4, (eng.n, eng.x, eng.y), cfg.tol)
    if pair is not None:
        return 0, (eng.table(pair[0]), eng.table(pair[1]))
    return (1 if strict else 0), None


def _p5(eng, ev, cfg):
    pair, strict = _sweep_families(
        eng, ev._vec, eng.order_p5, (eng.a, eng.b, eng.c), cfg.tol)
    if pair is not None:
        return 0, (eng.table(pair[0]), eng.table(pair[1]))
    return (1 if strict else 0), None


def _p6(eng, ev, cfg):
    """Decrease with conclusion size: groups share (n_X, n_XY); the conclusion
    margin grows with n_notX_Y while the rest of the table is free."""
    vec = ev._vec
    order = eng.order_p6
    a_s, b_s, c_s = eng.a[order], eng.b[order], eng.c[order]
    values = vec[order]
    tol = cfg.tol

    increase_pair = None
    strict = False

    group_key = None
    run_min = math.inf
    run_min_idx = -1
    run_max = -math.inf

    level_c = None
    level_min = math.inf
    level_min_idx = -1
    level_max = -math.inf
    level_max_idx = -1

    def close_level():
        nonlocal increase_pair, strict, run_min, run_min_idx, run_max
        if level_min_idx >= 0:
            if increase_pair is None and run_min_idx >= 0 and \
                    level_max > run_min and not (level_max - run_min <= tol):
                increase_pair = (run_min_idx, level_max_idx)
            if run_max > level_min and not (run_max - level_min <= tol):
                strict = True
            if level_min < run_min:
                run_min, run_min_idx = level_min, level_min_idx
            if level_max > run_max:
                run_max = level_max

    for pos in range(len(values)):
        key = (int(a_s[pos]), int(b_s[pos]))
        c_here = int(c_s[pos])
        if key != group_key:
            close_level()
            group_key = key
            run_min, run_min_idx, run_max = math.inf, -1, -math.inf
            level_c = c_here
            level_min, level_min_idx = math.inf, -1
            level_max, level_max_idx = -math.inf, -1
        elif c_here != level_c:
            close_level()
            level_c = c_here
            level_min, level_min_idx = math.inf, -1
            level_max, level_max_idx = -math.inf, -1
        v = float(values[pos])
        if v != v:
            continue
        if v < level_min:
            level_min, level_min_idx = v, int(order[pos])
        if v > level_max:
            level_max, level_max_idx = v, int(order[pos])
    close_level()

    if increase_pair is not None:
        return 0, (eng.table(increase_pair[0]), eng.table(increase_pair[1]))
    return (1 if strict else 0), None


def _fixed_value_set(eng, vec, mask, tol):
    """(verdict, landmark, witness_pair, error) for a fixed-value property."""
    idxs = np.flatnonzero(mask)
    if not idxs.size:
        return None, None, None, "restriction set empty in the bound"
    vals = vec[idxs]
    defined = ~np.isnan(vals)
    if not defined.any():
        return None, None, None, "measure undefined on the whole restriction set"
    good_idx = idxs[defined]
    good = vals[defined]
    vmin_i = int(good_idx[np.argmin(good)])
    vmax_i = int(good_idx[np.argmax(good)])
    vmin, vmax = float(np.min(good)), float(np.max(good))
    if vmin == vmax or vmax - vmin <= tol:
        landmark = vmin if vmin == vmax else 0.5 * (vmin + vmax)
        return 1, landmark, None, None
    return 0, None, (eng.table(vmin_i), eng.table(vmax_i)), None


def _p7(eng, ev, cfg):
    return _fixed_value_set(eng, ev._vec, eng.independence, cfg.tol)


def _p8(eng, ev, cfg):
    return _fixed_value_set(eng, ev._vec, eng.implication, cfg.tol)


def _p9(eng, ev, cfg):
    return _fixed_value_set(eng, ev._vec, eng.equilibrium, cfg.tol)


def _separator(eng, ev, cfg, reference_mask):
    """The separating constant: the P7 landmark when independence is a fixed
    point, otherwise the supremum of values outside the reference zone."""
    verdict, landmark, _, _ = _p7(eng, ev, cfg)
    if verdict == 1:
        return landmark
    vals = ev._vec[reference_mask]
    vals = vals[~np.isnan(vals)]
    if not vals.size:
        return None
    return float(np.max(vals))


def _p10(eng, ev, cfg):
    vec = ev._vec
    verdict7, landmark7, _, _ = _p7(eng, ev, cfg)
    if verdict7 == 1:
        sep = landmark7
    else:
        outside = vec[~eng.attraction]
        outside = outside[~np.isnan(outside)]
        if not outside.size:
            return None, None, None, "no defined non-attraction values"
        sep = float(np.max(outside))
    att = np.flatnonzero(eng.attraction)
    vals = vec[att]
    defined = ~np.isnan(vals)
    if not defined.any():
        return None, None, None, "measure undefined on every attraction table"
    bad = defined & ~(vals > sep + cfg.tol)
    bad_idx = np.flatnonzero(bad)
    if bad_idx.size:
        return 0, sep, (eng.table(int(att[bad_idx[0]])),), None
    return 1, sep, None, None


def _p11(eng, ev, cfg):
    vec = ev._vec
    verdict7, landmark7, _, _ = _p7(eng, ev, cfg)
    if verdict7 == 1:
        sep = landmark7
    else:
        outside = vec[~eng.repulsion]
        outside = outside[~np.isnan(outside)]
        if not outside.size:
            return None, None, None, "no defined non-repulsion values"
        sep = float(np.min(outside))
    rep = np.flatnonzero(eng.repulsion)
    vals = vec[rep]
    defined = ~np.isnan(vals)
    if not defined.any():
        return None, None, None, "measure undefined on every repulsion table"
    bad = defined & ~(vals < sep - cfg.tol)
    bad_idx = np.flatnonzero(bad)
    if bad_idx.size:
        return 0, sep, (eng.table(int(rep[bad_idx[0]])),), None
    return 1, sep, None, None


def _p12(eng, ev, cfg):
    """Curvature of m along n_XY in the confident region (conf >= min_conf):
    second differences over each fixed-(n_X, n_Y, n) family.  Ternary verdict:
    2 concave-only, 0 convex-only, 1 linear or mixed."""
    vec = ev._vec
    order = eng.order_p4
    n_s, x_s, y_s, a_s = eng.n[order], eng.x[order], eng.y[order], eng.a[order]
    values = vec[order]
    tol = cfg.tol
    min_conf = cfg.min_conf

    has_pos = has_neg = False
    pos_triple = neg_triple = None
    any_triple = False

    fam_key = None
    window: list[tuple[int, float]] = []   # (engine index, value) of run
    last_a = None

    def push(idx, v):
        nonlocal has_pos, has_neg, pos_triple, neg_triple, any_triple
        window.append((idx, v))
        if len(window) > 3:
            window.pop(0)
        if len(window) == 3:
            any_triple = True
            d2 = window[2][1] - 2.0 * window[1][1] + window[0][1]
            if d2 > tol and not has_pos:
                has_pos = True
                pos_triple = tuple(i for i, _ in window)
            elif d2 < -tol and not has_neg:
                has_neg = True
                neg_triple = tuple(i for i, _ in window)

    for pos in range(len(values)):
        key = (int(n_s[pos]), int(x_s[pos]), int(y_s[pos]))
        if key != fam_key:
            fam_key = key
            window.clear()
            last_a = None
        a_here = int(a_s[pos])
        x_here = int(x_s[pos])
        if a_here < min_conf * x_here - 1e-12:
            continue
        v = float(values[pos])
        if not math.isfinite(v) or (last_a is not None and a_here != last_a + 1):
            window.clear()
        if math.isfinite(v):
            push(int(order[pos]), v)
        last_a = a_here

    if not any_triple:
        return None, None, "no evaluable confident triple in the bound"
    if has_pos and not has_neg:
        return 0, tuple(eng.table(i) for i in pos_triple), None
    if has_neg and not has_pos:
        return 2, tuple(eng.table(i) for i in neg_triple), None
    return 1, None, None


_SCALE_LAYOUTS = (
    ("row", lambda a, b, c, d, k1, k2: (k1 * a, k1 * b, k2 * c, k2 * d)),
    ("col", lambda a, b, c, d, k1, k2: (k1 * a, k2 * b, k1 * c, k2 * d)),
)


def _p13(eng, ev, cfg):
    tol = cfg.tol
    for i, (a, b, c, d) in enumerate(eng.cells):
        base = float(ev._vec[i])
        for _, scale in _SCALE_LAYOUTS:
            for k1 in range(1, cfg.k_max + 1):
                for k2 in range(1, cfg.k_max + 1):
                    if k1 == 1 and k2 == 1:
                        continue
                    scaled = scale(a, b, c, d, k1, k2)
                    if _differs(base, ev.at(scaled), tol):
                        return 0, (eng.table(i), ContingencyTable(*scaled))
    return 1, None


def _p18(eng, ev, cfg):
    tol = cfg.tol
    for i, (a, b, c, d) in enumerate(eng.cells):
        base = float(ev._vec[i])
        for k in range(2, cfg.k_max + 1):
            scaled = (k * a, k * b, k * c, k * d)
            if _differs(base, ev.at(scaled), tol):
                return 1, (eng.table(i), ContingencyTable(*scaled))
    return 0, None


def _p19(eng, ev, cfg):
    """Discriminant power heuristic: at the largest scale factor, do attraction
    tables still spread over a non-trivial value range?"""
    scale = max(cfg.p19_scales)
    floor = cfg.p19_dispersion_floor
    vmin, vmax = math.inf, -math.inf
    for i in np.flatnonzero(eng.attraction):
        a, b, c, d = eng.cells[int(i)]
        v = ev.at((scale * a, scale * b, scale * c, scale * d))
        if v != v:
            continue
        if v < vmin:
            vmin = v
        if v > vmax:
            vmax = v
        if vmax - vmin >= floor:
            return 1, None
    return 0, None


# -- public API ---------------------------------------------------------------


def evaluate_property(
    measure: str | int | MeasureDescriptor,
    prop: str,
    config: EvaluationConfig = EvaluationConfig(),
) -> Verdict:
    """Decide one property of one measure over the bound."""
    desc = measure if isinstance(measure, MeasureDescriptor) else resolve(measure)
    if prop not in PROPERTY_NAMES:
        raise ValueError(f"unknown property {prop!r}")

    if prop == "P17":
        return Verdict(desc.id, prop, int(desc.probabilistic_model), "declared")
    if prop == "P19" and desc.p19_override is not None:
        return Verdict(desc.id, prop, desc.p19_override, "declared")

    eng = _engine(config.n_max)
    ev = eng.evaluator(desc, config.params)

    nm = config.n_max
    if prop in ("P1", "P2", "P4", "P5", "P6", "P13", "P18", "P19"):
        func = {"P1": _p1, "P2": _p2, "P4": _p4, "P5": _p5, "P6": _p6,
                "P13": _p13, "P18": _p18, "P19": _p19}[prop]
        value, witness = func(eng, ev, config)
        return Verdict(desc.id, prop, value, "computed", witness, bound=nm)
    if prop == "P3":
        value, extra = _p3(eng, ev, config)
        if value is None:
            return Verdict(desc.id, prop, None, "computed", error=extra, bound=nm)
        witness = extra if value == 0 else None
        return Verdict(desc.id, prop, value, "computed", witness, bound=nm)
    if prop in ("P7", "P8", "P9"):
        func = {"P7": _p7, "P8": _p8, "P9": _p9}[prop]
        value, landmark, witness, error = func(eng, ev, config)
        return Verdict(desc.id, prop, value, "computed", witness, landmark,
                       error, bound=nm)
    if prop in ("P10", "P11"):
        func = {"P10": _p10, "P11": _p11}[prop]
        value, sep, witness, error = func(eng, ev, config)
        return Verdict(desc.id, prop, value, "computed", witness, sep, error,
                       bound=nm)
    if prop == "P12":
        value, witness, error = _p12(eng, ev, config)
        return Verdict(desc.id, prop, value, "computed", witness, error=error,
                       bound=nm)
    if prop == "P14":
        i = _identity_property(eng, ev._vec, eng.negp_idx, config.tol, negate=True)
    elif prop == "P15":
        i = _identity_property(eng, ev._vec, eng.negc_idx, config.tol, negate=True)
    else:  # P16
        i = _identity_property(eng, ev._vec, eng.bothneg_idx, config.tol)
    if i is None:
        return Verdict(desc.id, prop, 1, "computed", bound=nm)
    idx_map = {"P14": eng.negp_idx, "P15": eng.negc_idx, "P16": eng.bothneg_idx}[prop]
    witness = (eng.table(i), eng.table(int(idx_map[i])))
    return Verdict(desc.id, prop, 0, "computed", witness, bound=nm)


def evaluate_measure(
    measure: str | int | MeasureDescriptor,
    config: EvaluationConfig = EvaluationConfig(),
) -> dict[str, Verdict]:
    """All 19 verdicts of one measure."""
    desc = measure if isinstance(measure, MeasureDescriptor) else resolve(measure)
    return {prop: evaluate_property(desc, prop, config) for prop in PROPERTY_NAMES}


class PropertyMatrix:
    """A 61 x 19 verdict matrix with CSV round-trip."""

    def __init__(self, values: dict[int, dict[str, int]],
                 verdicts: dict[tuple[int, str], Verdict] | None = None):
        self.values = values
        self.verdicts = verdicts

    def row(self, measure: str | int) -> list[int]:
        desc = resolve(measure)
        return [self.values[desc.id][p] for p in PROPERTY_NAMES]

    def measure_ids(self) -> list[int]:
        return sorted(self.values)

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["measure", *PROPERTY_NAMES])
            for mid in self.measure_ids():
                writer.writerow([resolve(mid).name,
                                 *(self.values[mid][p] for p in PROPERTY_NAMES)])

    @classmethod
    def from_csv(cls, path) -> "PropertyMatrix":
        values: dict[int, dict[str, int]] = {}
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            for row in reader:
                desc = resolve(row["measure"])
                # blank cells are undecided verdicts (tiny bounds only)
                values[desc.id] = {p: int(row[p]) if row[p] != "" else None
                                   for p in PROPERTY_NAMES}
        return cls(values)


def _measure_row(args) -> tuple[int, dict[str, Verdict]]:
    measure_id, config = args
    return measure_id, evaluate_measure(measure_id, config)


def build_matrix(
    config: EvaluationConfig = EvaluationConfig(),
    jobs: int = 1,
    measures: Iterable[str | int] | None = None,
) -> PropertyMatrix:
    """Verdicts for every measure (or a subset), optionally in parallel.

    Worker count only affects wall time; results are id-ordered and
    deterministic either way.
    """
    ids = ([resolve(m).id for m in measures] if measures is not None
           else [d.id for d in registry()])
    rows: dict[int, dict[str, Verdict]] = {}
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for mid, verdicts in pool.map(_measure_row,
                                          [(m, config) for m in ids]):
                rows[mid] = verdicts
    else:
        for mid in ids:
            rows[mid] = evaluate_measure(mid, config)
    values = {mid: {p: v.value for p, v in row.items()} for mid, row in rows.items()}
    verdicts = {(mid, p): v for mid, row in rows.items() for p, v in row.items()}
    return PropertyMatrix(values, verdicts)
