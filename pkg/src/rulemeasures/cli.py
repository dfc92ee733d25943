"""Command-line entry point.

One binary, subcommand style.  Every command is deterministic for fixed flags:
randomness comes only from ``--seed``, and ``--jobs`` changes wall time, never
bytes.  Delimited/JSON outputs are the primary artifacts; the report-style
commands (``curves``, ``cluster ahc``) can additionally render a figure next
to them with ``--figure``.

Exit status: 0 success, 1 usage or input error, 2 when ``properties verify``
finds unexplained disagreements with the published reference cells.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from typing import Optional, Sequence

from . import analysis, clustering, dedup, miner, reference
from .contingency import ContingencyTable
from .measures import registry, resolve
from .properties import (EvaluationConfig, PropertyMatrix, build_matrix)

_EVALUATOR_DEFAULTS = (
    "property-evaluator defaults: n_max=40 (tables up to total count 40), "
    "tol=1e-9, min_conf=0.5 (confidence floor of the descriptive-rule "
    "restriction), k_max=4 (largest row/column scaling factor), "
    "p19 scales x{1,4,16,64,256} with dispersion floor 1e-3")


class _Parser(argparse.ArgumentParser):
    def error(self, message):          # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _fmt(value) -> str:
    if value is None:
        return "undefined"
    if value == math.inf:
        return "inf"
    if value == -math.inf:
        return "-inf"
    return repr(value)


def _config(args) -> EvaluationConfig:
    return EvaluationConfig(n_max=args.nmax, tol=args.tol,
                            min_conf=args.min_conf, k_max=args.k_max)


def _add_eval_flags(p):
    p.add_argument("--nmax", type=int, default=40,
                   help="search bound: all tables with total count <= NMAX "
                        "(default 40)")
    p.add_argument("--tol", type=float, default=1e-9,
                   help="numeric comparison tolerance (default 1e-9)")
    p.add_argument("--min-conf", type=float, default=0.5,
                   help="confidence floor of the P12 restriction (default 0.5)")
    p.add_argument("--k-max", type=int, default=4,
                   help="largest scaling factor for P13/P18 (default 4)")


def _load_matrix(path) -> PropertyMatrix:
    return PropertyMatrix.from_csv(path)


def _load_labels(path) -> clustering.Partition:
    labels = {}
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            labels[resolve(row["measure"]).id] = int(row["cluster"])
    if not labels:
        raise ValueError(f"no cluster labels in {path}")
    return clustering.Partition(labels)


# ---------------------------------------------------------------- commands

def _cmd_measures_list(args) -> int:
    rows = [(d.id, d.name) for d in registry()]
    if args.format == "json":
        print(json.dumps([{"id": i, "name": n} for i, n in rows], indent=2))
    else:
        print("id,name")
        for i, n in rows:
            print(f"{i},{n}")
    return 0


def _cmd_measures_eval(args) -> int:
    from .measures import evaluate, evaluate_all
    table = ContingencyTable.from_text(args.table)
    if args.measure:
        print(_fmt(evaluate(args.measure, table)))
        return 0
    values = evaluate_all(table)
    if args.format == "json":
        print(json.dumps({resolve(mid).name: (None if v is None else _fmt(v))
                          for mid, v in values.items()}, indent=2))
    else:
        print("measure,value")
        for mid, v in values.items():
            print(f"{resolve(mid).name},{_fmt(v)}")
    return 0


def _cmd_properties_matrix(args) -> int:
    cfg = _config(args)
    measures = args.measures.split(",") if args.measures else None
    matrix = build_matrix(cfg, jobs=args.jobs, measures=measures)
    matrix.to_csv(args.out)
    return 0


def _cmd_properties_verify(args) -> int:
    if args.matrix:
        matrix = _load_matrix(args.matrix)
    else:
        matrix = build_matrix(_config(args), jobs=args.jobs)
    discrepancies = reference.compare_to_reference(matrix)
    waivers = reference.load_waivers()
    bad = 0
    for d in discrepancies:
        waived = (d.measure_id, d.prop) in waivers
        status = "waived" if waived else "UNEXPLAINED"
        bad += 0 if waived else 1
        print(f"{status}: {resolve(d.measure_id).name} {d.prop} "
              f"published={d.published} computed={d.computed}")
    print(f"{len(discrepancies)} discrepancies, {bad} unexplained")
    return 2 if bad else 0


def _cmd_dedup(args) -> int:
    grouping = dedup.extensional_duplicates(_config(args))
    blob = grouping.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(blob + "\n")
    else:
        print(blob)
    return 0


def _cmd_encode(args) -> int:
    enc = clustering.disjunctive_encode(_load_matrix(args.matrix))
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["measure", *enc.columns])
        for i, mid in enumerate(enc.ids):
            writer.writerow([resolve(mid).name, *enc.data[i].tolist()])
    return 0


def _cmd_cluster_ahc(args) -> int:
    enc = clustering.disjunctive_encode(_load_matrix(args.matrix))
    dend = clustering.ahc_ward(enc)
    if args.dendrogram:
        with open(args.dendrogram, "w") as fh:
            fh.write(dend.to_json() + "\n")
    if args.figure:
        _render_dendrogram(dend, args.figure)
    clustering.cut(dend, args.cut).to_csv(args.out)
    return 0


def _cmd_cluster_kmeans(args) -> int:
    enc = clustering.disjunctive_encode(_load_matrix(args.matrix))
    part = clustering.kmeans(enc, args.k, seed=args.seed,
                             restarts=args.restarts)
    part.to_csv(args.out)
    return 0


def _cmd_cluster_consensus(args) -> int:
    enc = clustering.disjunctive_encode(_load_matrix(args.matrix))
    ahc = clustering.cut(clustering.ahc_ward(enc), args.k)
    km = clustering.kmeans(enc, args.k, seed=args.seed, restarts=args.restarts)
    blob = clustering.consensus(ahc, km).to_json()
    with open(args.out, "w") as fh:
        fh.write(blob + "\n")
    return 0


def _cmd_profile(args) -> int:
    profiles = analysis.class_profile(_load_matrix(args.matrix),
                                      _load_labels(args.labels))
    analysis.profiles_to_csv(profiles, args.out)
    return 0


def _cmd_curves(args) -> int:
    series = analysis.curve(args.measure, args.nx, args.ny, args.n)
    series.to_csv(args.out)
    if args.landmarks:
        with open(args.landmarks, "w") as fh:
            fh.write(series.landmarks_json() + "\n")
    if args.figure:
        _render_curve(series, args.figure)
    return 0


def _measure_selection(args) -> list[str]:
    if args.measures:
        return args.measures.split(",")
    return [d.name for d in registry() if not d.needs_context]


def _cmd_mine(args) -> int:
    db = miner.load_transactions(args.input)
    rules = miner.mine(db, args.minsupp, args.minconf,
                       override_guard=args.override_guard)
    selection = _measure_selection(args)
    rules = miner.score_rules(rules, selection)
    if args.format == "json":
        with open(args.out, "w") as fh:
            fh.write(miner.report_json(rules, selection) + "\n")
    else:
        miner.report_csv(rules, selection, args.out)
    return 0


def _cmd_rank(args) -> int:
    db = miner.load_transactions(args.input)
    rules = miner.mine(db, args.minsupp, args.minconf,
                       override_guard=args.override_guard)
    selection = _measure_selection(args)
    if args.by not in selection:
        selection = [args.by, *selection]
    rules = miner.score_rules(rules, selection, rank_by=args.by)
    if args.format == "json":
        with open(args.out, "w") as fh:
            fh.write(miner.report_json(rules, selection) + "\n")
    else:
        miner.report_csv(rules, selection, args.out)
    return 0


# ---------------------------------------------------------------- figures

def _render_curve(series, path) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    xs = [a for a, v in series.points if v is not None and math.isfinite(v)]
    ys = [v for _, v in series.points if v is not None and math.isfinite(v)]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(xs, ys, marker=".", lw=1.2)
    for lm in series.landmarks:
        ax.axvline(lm.n_xy, ls=":" if not lm.exact else "--", lw=0.8,
                   color="grey")
        ax.annotate(lm.state, (lm.n_xy, ax.get_ylim()[1]), rotation=90,
                    fontsize=7, va="top", ha="right")
    ax.set_xlabel("n_XY")
    ax.set_ylabel(resolve(series.measure_id).name)
    ax.set_title(f"n_X={series.n_x}, n_Y={series.n_y}, n={series.n}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _render_dendrogram(dend, path) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    n = dend.n_leaves
    children: dict[int, tuple[int, int]] = {
        n + t: (l, r) for t, (l, r, _, _) in enumerate(dend.merges)}
    heights = {i: 0.0 for i in range(n)}
    for t, (_, _, h, _) in enumerate(dend.merges):
        heights[n + t] = h
    order: list[int] = []

    def collect(node: int) -> None:
        if node < n:
            order.append(node)
        else:
            l, r = children[node]
            collect(l)
            collect(r)

    collect(n + len(dend.merges) - 1)
    xs = {leaf: i for i, leaf in enumerate(order)}
    fig, ax = plt.subplots(figsize=(10, 5))
    for t, (l, r, h, _) in enumerate(dend.merges):
        xl, xr = xs[l], xs[r]
        ax.plot([xl, xl, xr, xr], [heights[l], h, h, heights[r]],
                color="black", lw=0.9)
        xs[n + t] = 0.5 * (xl + xr)
    ax.set_xticks(range(n))
    ax.set_xticklabels([resolve(dend.leaf_ids[leaf]).name for leaf in order],
                       rotation=90, fontsize=6)
    ax.set_ylabel("merge cost")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


# ---------------------------------------------------------------- wiring

def _build_parser() -> _Parser:
    parser = _Parser(prog="rulemeasures",
                     description="Interestingness measures of association "
                                 "rules: evaluation, formal properties, "
                                 "categorization, and a small Apriori miner.",
                     epilog=_EVALUATOR_DEFAULTS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measures", help="list or evaluate measures")
    msub = p.add_subparsers(dest="subcommand", required=True)
    pl = msub.add_parser("list", help="list the measure catalog")
    pl.add_argument("--format", choices=("csv", "json"), default="csv")
    pl.set_defaults(func=_cmd_measures_list)
    pe = msub.add_parser("eval", help="evaluate measures on one table")
    pe.add_argument("--table", required=True,
                    help="contingency counts n_xy,n_xny,n_nxy,n_nxny")
    pe.add_argument("--measure", help="one measure (name or id); omit for all")
    pe.add_argument("--format", choices=("csv", "json"), default="csv")
    pe.set_defaults(func=_cmd_measures_eval)

    p = sub.add_parser("properties", help="property matrix and verification",
                       epilog=_EVALUATOR_DEFAULTS)
    psub = p.add_subparsers(dest="subcommand", required=True)
    pm = psub.add_parser("matrix", help="compute the 61x19 property matrix",
                         epilog=_EVALUATOR_DEFAULTS)
    _add_eval_flags(pm)
    pm.add_argument("--jobs", type=int, default=1)
    pm.add_argument("--measures", help="comma-separated subset (names or ids)")
    pm.add_argument("--out", required=True)
    pm.set_defaults(func=_cmd_properties_matrix)
    pv = psub.add_parser("verify",
                         help="compare verdicts against the published cells",
                         epilog=_EVALUATOR_DEFAULTS)
    _add_eval_flags(pv)
    pv.add_argument("--jobs", type=int, default=1)
    pv.add_argument("--matrix", help="verify a precomputed matrix CSV instead "
                                     "of rebuilding")
    pv.set_defaults(func=_cmd_properties_verify)

    p = sub.add_parser("dedup",
                       help="group formulas that agree on every table in "
                            "bound", epilog=_EVALUATOR_DEFAULTS)
    _add_eval_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_dedup)

    p = sub.add_parser("encode",
                       help="complete disjunctive (39-column) encoding")
    p.add_argument("--matrix", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("cluster", help="cluster the encoded property rows")
    csub = p.add_subparsers(dest="subcommand", required=True)
    ca = csub.add_parser("ahc", help="Ward agglomerative clustering")
    ca.add_argument("--matrix", required=True)
    ca.add_argument("--cut", type=int, required=True, help="number of clusters")
    ca.add_argument("--out", required=True, help="cluster-label CSV")
    ca.add_argument("--dendrogram", help="also write the merge tree as JSON")
    ca.add_argument("--figure", help="also render the dendrogram to this file")
    ca.set_defaults(func=_cmd_cluster_ahc)
    ck = csub.add_parser("kmeans", help="seeded k-means with restarts")
    ck.add_argument("--matrix", required=True)
    ck.add_argument("--k", type=int, required=True)
    ck.add_argument("--seed", type=int, default=42)
    ck.add_argument("--restarts", type=int, default=20)
    ck.add_argument("--out", required=True)
    ck.set_defaults(func=_cmd_cluster_kmeans)
    cc = csub.add_parser("consensus",
                         help="classes agreed by Ward and k-means")
    cc.add_argument("--matrix", required=True)
    cc.add_argument("--k", type=int, required=True)
    cc.add_argument("--seed", type=int, default=42)
    cc.add_argument("--restarts", type=int, default=20)
    cc.add_argument("--out", required=True)
    cc.set_defaults(func=_cmd_cluster_consensus)

    p = sub.add_parser("profile",
                       help="per-class property summaries with majority "
                            "notation")
    p.add_argument("--matrix", required=True)
    p.add_argument("--labels", required=True, help="cluster-label CSV")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("curves",
                       help="measure evolution over n_XY at fixed margins")
    p.add_argument("--measure", required=True)
    p.add_argument("--nx", type=int, required=True)
    p.add_argument("--ny", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True, help="curve CSV (n_xy,value)")
    p.add_argument("--landmarks", help="also write landmark states as JSON")
    p.add_argument("--figure", help="also render the curve to this file")
    p.set_defaults(func=_cmd_curves)

    for name, fn in (("mine", _cmd_mine), ("rank", _cmd_rank)):
        p = sub.add_parser(name,
                           help="mine association rules from a basket file"
                           if name == "mine"
                           else "mine and rank rules by one measure")
        p.add_argument("--input", required=True,
                       help="one basket per line, whitespace-separated items")
        p.add_argument("--minsupp", type=float, required=True)
        p.add_argument("--minconf", type=float, required=True)
        p.add_argument("--override-guard", action="store_true",
                       help="allow minsupp below 1/n_baskets on wide "
                            "databases")
        p.add_argument("--measures", help="comma-separated selection; default "
                                          "all context-free measures")
        if name == "rank":
            p.add_argument("--by", required=True, help="primary rank measure")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", required=True)
        p.set_defaults(func=fn)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
