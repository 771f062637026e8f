"""Command-line front end.

Subcommands: `generate` (seeded fixtures), `burn` (run one algorithm on
one graph), `exact` (brute-force burning number on small graphs),
`verify` (check a schedule file), and `bench` (Table-style CSV/JSON
reports over seeded instance ladders).

Exit codes: 0 success, 1 verification or guarantee failure, 2 usage,
3 file I/O.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence

from .cactus import approx_cactus
from .ditree import approx_arborescence, approx_polytree
from .engine import load_schedule, validate
from .errors import BurnlabError, GraphFormatError
from .generators import (DEFAULT_CYCLE_FRACTION, KINDS, GenSpec,
                         fixture_relpath, generate)
from .graphs import (DirectedTree, UndirectedGraph, classify_ditree,
                     is_cactus, load_graph, save_graph)
from .oracles import (DEFAULT_SIZE_CAP, baseline_3approx,
                      exact_burning_number, _oracle_size_cap)

ALGS = ("cactus275", "poly3", "arb2", "arb1905", "baseline3")

# Which generated classes each algorithm accepts.
_ALG_CLASSES = {
    "cactus275": ("cactus",),
    "baseline3": ("cactus",),
    "poly3": ("polytree", "arborescence"),
    "arb2": ("arborescence",),
    "arb1905": ("arborescence",),
}

_AUTO_ALGS = {
    "cactus": ("cactus275", "baseline3"),
    "polytree": ("poly3",),
    "arborescence": ("arb2", "arb1905"),
}

CSV_COLUMNS = ("name", "class", "V", "E", "alg", "estimate", "b_star",
               "ms", "seed")


def _graph_kind(g) -> str:
    if isinstance(g, UndirectedGraph):
        return "cactus" if is_cactus(g) else "undirected"
    return classify_ditree(g)


def _run_alg(alg: str, g):
    """(schedule, b_star); raises BurnlabError on class mismatch."""
    kind = _graph_kind(g)
    if kind not in _ALG_CLASSES[alg]:
        raise BurnlabError(f"{alg} expects a {' or '.join(_ALG_CLASSES[alg])} "
                           f"input, got {kind}")
    if alg == "cactus275":
        return approx_cactus(g)
    if alg == "baseline3":
        return baseline_3approx(g)
    if alg == "arb1905":
        return approx_arborescence(g)
    return approx_polytree(g)  # poly3 and its arborescence restriction arb2


# ---- generate -----------------------------------------------------------

def _parse_sizes(args) -> List[int]:
    if args.n_list:
        try:
            sizes = [int(s) for s in args.n_list.split(",") if s]
        except ValueError:
            raise BurnlabError(f"bad --n-list {args.n_list!r}")
    else:
        sizes = [args.n] if args.n else []
    if not sizes or any(s < 1 for s in sizes):
        raise BurnlabError("need --n or a nonempty --n-list of positives")
    return sizes


def cmd_generate(args) -> int:
    sizes = _parse_sizes(args)
    for n in sizes:
        spec = GenSpec(kind=args.graph_class, n=n, seed=args.seed,
                       cycle_fraction=args.cycle_fraction,
                       max_out_degree=args.max_out_degree)
        g = generate(spec)
        path = os.path.join(args.out, fixture_relpath(spec))
        os.makedirs(os.path.dirname(path), exist_ok=True)
        save_graph(g, path)
        print(f"{path} n={g.n} m={g.m}")
    return 0


# ---- burn / exact / verify ---------------------------------------------

def cmd_burn(args) -> int:
    g = load_graph(args.graph)
    schedule, b_star = _run_alg(args.alg, g)
    verdict = validate(g, schedule)
    if not verdict.ok:  # drivers validate already; belt and braces
        print(f"reject: {verdict.reason}")
        return 1
    print(f"b_star {b_star}")
    print(f"length {len(schedule)}")
    print(f"schedule {schedule.to_line()}")
    return 0


def cmd_exact(args) -> int:
    g = load_graph(args.graph)
    res = exact_burning_number(g)
    print(f"exact {res.b}")
    print(f"witness {res.witness.to_line()}")
    return 0


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    schedule = load_schedule(args.schedule)
    verdict = validate(g, schedule)
    if verdict.ok:
        print("accept")
        return 0
    print(f"reject: {verdict.reason}")
    return 1


# ---- bench --------------------------------------------------------------

def _bench_task(task: Dict):
    """One (instance, algorithm) row; runs inside worker processes."""
    spec: GenSpec = task["spec"]
    alg: str = task["alg"]
    g = generate(spec)
    row = {
        "name": f"{spec.kind}_n{spec.n}_s{spec.seed}",
        "class": spec.kind,
        "V": g.n,
        "E": g.m,
        "alg": alg,
        "estimate": "",
        "b_star": "",
        "ms": 0,
        "seed": spec.seed,
    }
    t0 = time.perf_counter()
    try:
        schedule, b_star = _run_alg(alg, g)
        verdict = validate(g, schedule)
        if not verdict.ok:
            raise BurnlabError(verdict.reason)
        row["estimate"] = len(schedule)
        row["b_star"] = b_star
    except BurnlabError:
        row["estimate"] = "ERROR"
    row["ms"] = 0 if task["no_timing"] else round(
        (time.perf_counter() - t0) * 1000.0, 3)
    if task["with_oracle"]:
        row["exact"] = ""
        row["ratio"] = ""
        if g.n <= task["oracle_cap"] and row["estimate"] != "ERROR":
            exact = exact_burning_number(g).b
            row["exact"] = exact
            row["ratio"] = round(row["estimate"] / exact, 4)
    return row


def _bench_rows(args) -> List[Dict]:
    try:
        classes = [c for c in args.classes.split(",") if c]
        sizes = [int(s) for s in args.sizes.split(",") if s]
        seeds = [int(s) for s in args.seeds.split(",") if s]
    except ValueError:
        raise BurnlabError("bad --sizes/--seeds")
    if not classes or not sizes or not seeds:
        raise BurnlabError("need nonempty --classes, --sizes, --seeds")
    for c in classes:
        if c not in KINDS:
            raise BurnlabError(f"unknown class {c!r}")
    cap = _oracle_size_cap()
    with_oracle = any(n <= cap for n in sizes)
    tasks = []
    for c in classes:
        algs = _AUTO_ALGS[c] if args.algs == "auto" else \
            [a for a in args.algs.split(",") if a]
        for a in algs:
            if a not in ALGS:
                raise BurnlabError(f"unknown algorithm {a!r}")
        for n in sizes:
            for seed in seeds:
                spec = GenSpec(kind=c, n=n, seed=seed,
                               cycle_fraction=args.cycle_fraction)
                for a in algs:
                    tasks.append({"spec": spec, "alg": a,
                                  "no_timing": args.no_timing,
                                  "with_oracle": with_oracle,
                                  "oracle_cap": cap})
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(_bench_task, tasks))
    else:
        rows = [_bench_task(t) for t in tasks]
    rows.sort(key=lambda r: (r["class"], r["V"], r["seed"], r["alg"]))
    return rows


def cmd_bench(args) -> int:
    rows = _bench_rows(args)
    with_oracle = rows and "exact" in rows[0]
    columns = CSV_COLUMNS + (("exact", "ratio") if with_oracle else ())
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ---- wiring -------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="burnlab",
        description="Graph-burning approximations for cacti and directed "
                    "trees, with an exact brute-force oracle.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write seeded fixture graphs")
    p.add_argument("--class", dest="graph_class", required=True,
                   choices=KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--n-list", default="")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--cycle-fraction", type=float,
                   default=DEFAULT_CYCLE_FRACTION)
    p.add_argument("--max-out-degree", type=int, default=None)
    p.add_argument("--out", default="fixtures")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("burn", help="run one approximation on one graph")
    p.add_argument("graph")
    p.add_argument("--alg", required=True, choices=ALGS)
    p.set_defaults(func=cmd_burn)

    p = sub.add_parser("exact", help="brute-force burning number "
                                     f"(default cap {DEFAULT_SIZE_CAP} "
                                     "vertices, see BURNLAB_ORACLE_CAP)")
    p.add_argument("graph")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", help="check a schedule file against a graph")
    p.add_argument("graph")
    p.add_argument("schedule")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="instance-ladder report (CSV or JSON)")
    p.add_argument("--classes", default="cactus")
    p.add_argument("--sizes", required=True)
    p.add_argument("--seeds", default="1")
    p.add_argument("--algs", default="auto")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-timing", action="store_true",
                   help="zero the ms column for byte-stable output")
    p.add_argument("--cycle-fraction", type=float,
                   default=DEFAULT_CYCLE_FRACTION)
    p.add_argument("--out", default="")
    p.set_defaults(func=cmd_bench)
    return top


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BurnlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
