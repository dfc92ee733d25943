"""Categorization of the measures from their property rows.

Pipeline pieces: complete disjunctive (one-hot) encoding of the 19-property
matrix into 39 binary columns, Ward agglomerative clustering via the
Lance-Williams update, dendrogram cuts, a seeded Lloyd k-means with restarts,
consensus classes across the two partitions, and Rand/adjusted-Rand scores.

Everything is deterministic: Ward ties break on the smallest (left, right)
member-id pair, k-means ties on the lowest cluster label, and the random
number generator is an explicit SplitMix64 stream so seeds are portable.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .measures import resolve
from .properties import PROPERTY_NAMES, PropertyMatrix

_P12_LEVELS = (0, 1, 2)


@dataclass(frozen=True)
class EncodedMatrix:
    ids: tuple[int, ...]
    columns: tuple[str, ...]
    data: np.ndarray          # shape (len(ids), len(columns)), 0/1

    def row(self, measure_id: int) -> np.ndarray:
        return self.data[self.ids.index(measure_id)]


def disjunctive_encode(matrix: PropertyMatrix) -> EncodedMatrix:
    """Expand each property into indicator columns: two per binary property,
    three for the ternary P12 — 39 columns total."""
    ids = tuple(matrix.measure_ids())
    columns: list[str] = []
    for prop in PROPERTY_NAMES:
        levels = _P12_LEVELS if prop == "P12" else (0, 1)
        columns.extend(f"{prop}={v}" for v in levels)
    data = np.zeros((len(ids), len(columns)), dtype=np.int8)
    col = 0
    for prop in PROPERTY_NAMES:
        levels = _P12_LEVELS if prop == "P12" else (0, 1)
        for r, mid in enumerate(ids):
            value = matrix.values[mid][prop]
            if value not in levels:
                raise ValueError(
                    f"measure {mid} has {prop}={value!r}, outside {levels}")
            data[r, col + levels.index(value)] = 1
        col += len(levels)
    return EncodedMatrix(ids, tuple(columns), data)


@dataclass(frozen=True)
class Dendrogram:
    """Merge t joins nodes `left` and `right` into node `n_leaves + t`;
    leaves are 0..n_leaves-1 in `leaf_ids` order."""

    leaf_ids: tuple[int, ...]
    merges: tuple[tuple[int, int, float, int], ...]  # (left, right, height, size)

    @property
    def n_leaves(self) -> int:
        return len(self.leaf_ids)

    def to_json(self) -> str:
        return json.dumps({
            "leaves": list(self.leaf_ids),
            "merges": [[l, r, h, s] for l, r, h, s in self.merges],
        }, indent=2, sort_keys=True)

    def to_newick(self, names: bool = True) -> str:
        n = self.n_leaves

        def label(node: int) -> str:
            mid = self.leaf_ids[node]
            return resolve(mid).name.replace(" ", "_").replace(",", "") \
                if names else str(mid)

        def height(node: int) -> float:
            return 0.0 if node < n else self.merges[node - n][2]

        def render(node: int, parent_h: float) -> str:
            length = max(parent_h - height(node), 0.0)
            if node < n:
                return f"{label(node)}:{length:g}"
            left, right, h, _ = self.merges[node - n]
            return f"({render(left, h)},{render(right, h)}):{length:g}"

        top = 2 * n - 2
        left, right, h, _ = self.merges[-1]
        return f"({render(left, h)},{render(right, h)});"


def ahc_ward(enc: EncodedMatrix) -> Dendrogram:
    """Ward clustering: at each step merge the pair whose fusion least
    increases within-cluster variance.  Distances are maintained as the exact
    Ward cost increments through the Lance-Williams update; ties break on the
    smallest (left, right) pair of minimal member ids."""
    n = len(enc.ids)
    if n < 2:
        raise ValueError("need at least two rows to cluster")
    points = enc.data.astype(np.float64)

    # active cluster -> (node index, size, smallest member id)
    active: dict[int, tuple[int, int, int]] = {
        i: (i, 1, enc.ids[i]) for i in range(n)}
    # Ward increment for merging two singletons is half the squared distance
    dist: dict[tuple[int, int], float] = {}
    for i in range(n):
        diff = points[i + 1:] - points[i]
        sq = (diff * diff).sum(axis=1)
        for j in range(i + 1, n):
            dist[(i, j)] = 0.5 * sq[j - i - 1]

    merges: list[tuple[int, int, float, int]] = []
    next_node = n
    while len(active) > 1:
        best = None
        keys = sorted(active, key=lambda c: active[c][2])
        for ii, ci in enumerate(keys):
            for cj in keys[ii + 1:]:
                key = (ci, cj) if ci < cj else (cj, ci)
                d = dist[key]
                cand = (d, active[ci][2], active[cj][2], ci, cj)
                if best is None or cand < best:
                    best = cand
        d, _, _, ci, cj = best
        node_i, size_i, min_i = active[ci]
        node_j, size_j, min_j = active[cj]
        merged_size = size_i + size_j
        merges.append((node_i, node_j, d, merged_size))

        # Lance-Williams update for Ward's criterion
        new = min(ci, cj)
        other = max(ci, cj)
        for ck in list(active):
            if ck in (ci, cj):
                continue
            size_k = active[ck][1]
            d_ik = dist[(min(ci, ck), max(ci, ck))]
            d_jk = dist[(min(cj, ck), max(cj, ck))]
            total = merged_size + size_k
            updated = ((size_i + size_k) * d_ik + (size_j + size_k) * d_jk
                       - size_k * d) / total
            dist[(min(new, ck), max(new, ck))] = updated
        del active[other]
        active[new] = (next_node, merged_size, min(min_i, min_j))
        next_node += 1

    return Dendrogram(enc.ids, tuple(merges))


@dataclass(frozen=True)
class Partition:
    labels: dict[int, int]          # measure id -> 1..k

    @property
    def k(self) -> int:
        return len(set(self.labels.values()))

    def blocks(self) -> list[tuple[int, ...]]:
        by_label: dict[int, list[int]] = {}
        for mid, lab in self.labels.items():
            by_label.setdefault(lab, []).append(mid)
        return [tuple(sorted(by_label[lab])) for lab in sorted(by_label)]

    def to_csv(self, path) -> None:
        import csv
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["measure", "cluster"])
            for mid in sorted(self.labels):
                writer.writerow([resolve(mid).name, self.labels[mid]])


def _canonical_labels(ids: Sequence[int], raw: Sequence[int]) -> Partition:
    """Relabel clusters 1..k in order of each cluster's smallest member id."""
    first_member: dict[int, int] = {}
    for mid, lab in zip(ids, raw):
        first_member.setdefault(lab, mid)
        first_member[lab] = min(first_member[lab], mid)
    order = {lab: rank + 1 for rank, lab in
             enumerate(sorted(first_member, key=first_member.get))}
    return Partition({mid: order[lab] for mid, lab in zip(ids, raw)})


def cut(dendrogram: Dendrogram, k: int) -> Partition:
    """Undo the k-1 most expensive merges (the last ones, by Ward
    monotonicity) and label the remaining components."""
    n = dendrogram.n_leaves
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}")
    parent = list(range(2 * n - 1))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for t, (left, right, _, _) in enumerate(dendrogram.merges[: n - k]):
        node = n + t
        parent[find(left)] = node
        parent[find(right)] = node
    raw = [find(i) for i in range(n)]
    return _canonical_labels(dendrogram.leaf_ids, raw)


class SplitMix64:
    """Explicit, portable PRNG (SplitMix64): deterministic across platforms
    so a seed fully documents a k-means run."""

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self._MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self._MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        # rejection sampling keeps the draw unbiased
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % bound

    def sample(self, population: int, count: int) -> list[int]:
        chosen: list[int] = []
        pool = list(range(population))
        for _ in range(count):
            idx = self.below(len(pool))
            chosen.append(pool.pop(idx))
        return chosen


def _lloyd(points: np.ndarray, k: int, rng: SplitMix64) -> tuple[np.ndarray, float]:
    n = len(points)
    centroids = points[rng.sample(n, k)].astype(np.float64)
    assign = np.full(n, -1)
    max_iter = max(100, 10 * k)
    for _ in range(max_iter):
        # squared distances; ties go to the lowest cluster label
        d2 = ((points[:, None, :] - centroids[None, :, :]) ** 2).sum(axis=2)
        new_assign = d2.argmin(axis=1)
        for label in range(k):
            if not (new_assign == label).any():
                # reseed an empty cluster with the point farthest from its
                # centroid (lowest index on ties)
                far = d2[np.arange(n), new_assign]
                idx = int(far.argmax())
                centroids[label] = points[idx]
                new_assign[idx] = label
        if (new_assign == assign).all():
            break
        assign = new_assign
        for label in range(k):
            members = points[assign == label]
            if len(members):
                centroids[label] = members.mean(axis=0)
    d2 = ((points[:, None, :] - centroids[None, :, :]) ** 2).sum(axis=2)
    sse = float(d2[np.arange(n), assign].sum())
    return assign, sse


def kmeans(enc: EncodedMatrix, k: int, seed: int = 0,
           restarts: int = 1) -> Partition:
    """Best-of-restarts Lloyd k-means; each restart owns an independent
    generator derived from (seed, restart index), so results are
    deterministic and schedule-independent."""
    n = len(enc.ids)
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}")
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    points = enc.data.astype(np.float64)
    best: tuple[float, int, np.ndarray] | None = None
    for restart in range(restarts):
        rng = SplitMix64((seed << 20) ^ restart)
        assign, sse = _lloyd(points, k, rng)
        cand = (sse, restart, assign)
        if best is None or cand[0] < best[0]:
            best = cand
    return _canonical_labels(enc.ids, best[2])


@dataclass(frozen=True)
class ConsensusClasses:
    classes: tuple[tuple[int, ...], ...]
    residue: tuple[tuple[int, int, int], ...]   # (id, label in p1, label in p2)

    def to_json(self) -> str:
        return json.dumps({
            "classes": [list(cls) for cls in self.classes],
            "residue": [{"measure": mid, "first": l1, "second": l2}
                        for mid, l1, l2 in self.residue],
        }, indent=2, sort_keys=True)


def consensus(p1: Partition, p2: Partition) -> ConsensusClasses:
    """Non-singleton blocks of the meet partition; singletons are kept as
    residue annotated with their cluster in each input."""
    if set(p1.labels) != set(p2.labels):
        raise ValueError("partitions cover different measure sets")
    meet: dict[tuple[int, int], list[int]] = {}
    for mid in p1.labels:
        meet.setdefault((p1.labels[mid], p2.labels[mid]), []).append(mid)
    classes = sorted((tuple(sorted(m)) for m in meet.values() if len(m) > 1),
                     key=lambda cls: cls[0])
    residue = sorted((m[0], p1.labels[m[0]], p2.labels[m[0]])
                     for m in meet.values() if len(m) == 1)
    return ConsensusClasses(tuple(classes), tuple(residue))


def rand_scores(p1: Partition, p2: Partition) -> tuple[float, float]:
    """(Rand index, adjusted Rand index) by pair counting."""
    if set(p1.labels) != set(p2.labels):
        raise ValueError("partitions cover different measure sets")
    ids = sorted(p1.labels)
    n = len(ids)
    if n < 2:
        raise ValueError("need at least two elements")
    table: dict[tuple[int, int], int] = {}
    for mid in ids:
        key = (p1.labels[mid], p2.labels[mid])
        table[key] = table.get(key, 0) + 1
    row: dict[int, int] = {}
    col: dict[int, int] = {}
    for (l1, l2), count in table.items():
        row[l1] = row.get(l1, 0) + count
        col[l2] = col.get(l2, 0) + count
    sum_cells = sum(math.comb(c, 2) for c in table.values())
    sum_row = sum(math.comb(c, 2) for c in row.values())
    sum_col = sum(math.comb(c, 2) for c in col.values())
    pairs = math.comb(n, 2)
    agree = pairs + 2 * sum_cells - sum_row - sum_col
    rand = agree / pairs
    expected = sum_row * sum_col / pairs
    max_index = 0.5 * (sum_row + sum_col)
    if max_index == expected:
        ari = 1.0 if sum_cells == expected else 0.0
    else:
        ari = (sum_cells - expected) / (max_index - expected)
    return rand, ari


def extend_partition(partition: Partition,
                     absorbed: dict[int, int]) -> Partition:
    """Give absorbed duplicate measures the label of their representative."""
    labels = dict(partition.labels)
    for mid, rep in absorbed.items():
        labels[mid] = labels[rep]
    return Partition(labels)
