"""Command line interface. Output is ``key=value`` lines.

Exit codes: 0 circle / pass, 1 not circle / fail, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import collections
import itertools
import random
import sys
import time
from collections.abc import Sequence

from . import __version__
from .chord_diagram import intersection_graph
from .generate import KINDS, OBSTRUCTIONS, GenConfig, generate
from .graph import Graph, InputError, is_connected, parse_edge_list, serialize_edge_list
from .lexbfs import lexbfs
from .oracle import CapExceeded, OracleCaps, brute_recognize, brute_splits, check_good_vertex
from .recognizer import Verdict, recognize

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_edge_list(sys.stdin.buffer.read())
    try:
        with open(path, "rb") as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def certificate_matches(g: Graph, v: Verdict) -> bool:
    d = v.certificate
    if d is None:
        return False
    if sorted(d.labels) != list(range(g.n)):  # type: ignore[type-var]
        return False
    ig = intersection_graph(d)
    lab = d.labels
    got = {tuple(sorted((lab[a], lab[b]))) for a, b in ig.edges()}
    return got == set(g.edges())


def _insertion_stats(v: Verdict) -> list[str]:
    cases = collections.Counter(s.case for s in v.insertions)
    lines = [f"case_{k}={cases[k]}" for k in sorted(cases)]
    if v.insertions:
        lines.append(f"max_insert_work={max(s.work for s in v.insertions)}")
        lines.append(f"max_subtree_nodes={max(s.subtree_nodes for s in v.insertions)}")
    return lines


def cmd_recognize(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    v = recognize(g)
    print(v.report(certificate=args.certificate, canonical=args.canonical))
    if args.stats:
        print("\n".join(_insertion_stats(v)))
    return EXIT_OK if v.accepted else EXIT_NO


def cmd_certify(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    v = recognize(g)
    print(v.report(certificate=args.certificate, canonical=args.canonical))
    if not v.accepted:
        return EXIT_NO
    ok = certificate_matches(g, v)
    print(f"verified={'true' if ok else 'false'}")
    return EXIT_OK if ok else EXIT_NO


def cmd_decompose(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    v = recognize(g, keep_trees=True)
    print(v.report())
    if not v.accepted:
        return EXIT_NO
    for i, comp in enumerate(v.trees):
        t = comp.tree
        if t is None:
            continue
        st = t.stats()
        print(f"component={i} vertices={len(comp.vertices)} "
              + " ".join(f"{k}={st[k]}" for k in ("clique", "star", "prime", "phi")))
        if args.stats:
            for node in t.nodes():
                print(f"  node kind={node.kind} degree={len(node.markers)}")
    return EXIT_OK


def cmd_lexbfs(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    if not is_connected(g):
        raise InputError("lexbfs needs a connected graph")
    if not (0 <= args.start < max(g.n, 1)):
        raise InputError(f"start vertex {args.start} out of range")
    order = lexbfs(g, args.start).order
    print("order=" + " ".join(map(str, order)))
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    if args.kind not in KINDS:
        raise InputError(f"unknown kind {args.kind!r}; choose from {', '.join(KINDS)}")
    if args.kind != "obstruction" and args.n < 1:
        raise InputError("n must be positive")
    if args.kind == "obstruction" and args.obstruction not in OBSTRUCTIONS:
        raise InputError(f"unknown obstruction {args.obstruction!r}")
    g = generate(GenConfig(args.kind, args.n, args.seed, args.obstruction))
    text = serialize_edge_list(g)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def bench_rows(sizes: Sequence[int], reps: int, seed: int) -> list[dict[str, float]]:
    rows = []
    for n in sizes:
        g = generate(GenConfig("sparse-circle", n, seed))
        for _ in range(reps):
            t0 = time.perf_counter()
            v = recognize(g)
            dt = time.perf_counter() - t0
            rows.append({
                "n": g.n, "m": g.m, "seconds": dt, "work_units": v.work,
                "ratio": v.work / (g.n + g.m), "accepted": v.accepted,
            })
    return rows


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    rows = bench_rows(sizes, args.reps, args.seed)
    for r in rows:
        print(f"n={r['n']} m={r['m']} seconds={r['seconds']:.3f} "
              f"work_units={r['work_units']} ratio={r['ratio']:.3f}")
    if rows:
        ratios = [r["ratio"] for r in rows]
        print(f"ratio_spread={max(ratios) / min(ratios):.3f}")
    return EXIT_OK if all(r["accepted"] for r in rows) else EXIT_NO


def crosscheck(nmax: int, samples: int, seed: int, out=print) -> int:
    """recognize vs brute_recognize; returns the number of disagreements."""
    caps = OracleCaps.from_env()
    if nmax > caps.recognize_max:
        raise CapExceeded(f"nmax={nmax} above oracle cap {caps.recognize_max}")
    bad = 0
    checked = 0

    def one(g: Graph) -> None:
        nonlocal bad, checked
        checked += 1
        v = recognize(g)
        b = brute_recognize(g, caps) is not None
        sound = not v.accepted or certificate_matches(g, v)
        if v.accepted != b or not sound:
            bad += 1
            if bad <= 5:
                out(f"counterexample={serialize_edge_list(g).strip().replace(chr(10), ';')}"
                    f" recognize={v.accepted} brute={b}")

    for n in range(1, min(nmax, 6) + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            if is_connected(g):
                one(g)
    rng = random.Random(seed)
    for n in range(7, nmax + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for _ in range(samples):
            p = rng.choice((0.3, 0.5, 0.7))
            one(Graph.from_edges(n, [e for e in pairs if rng.random() < p]))
    out(f"checked={checked}")
    out(f"disagreements={bad}")
    return bad


def cmd_crosscheck(args: argparse.Namespace) -> int:
    return EXIT_OK if crosscheck(args.nmax, args.samples, args.seed) == 0 else EXIT_NO


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    if args.query == "recognize":
        d = brute_recognize(g)
        print(f"status={'circle' if d is not None else 'not-circle'}")
        if d is not None and args.certificate:
            print(f"certificate={d}")
        return EXIT_OK if d is not None else EXIT_NO
    if args.query == "splits":
        splits = brute_splits(g)
        print(f"splits={len(splits)}")
        for s in splits:
            print("split=" + " ".join(map(str, sorted(s.a))) + " | " + " ".join(map(str, sorted(s.b))))
        return EXIT_OK
    if args.vertex is None or not (0 <= args.vertex < g.n):
        raise InputError("goodvertex needs --vertex in range")
    good = check_good_vertex(g, args.vertex)
    print(f"good={'true' if good else 'false'}")
    return EXIT_OK if good else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="circlekit", description="Circle graph recognition via split PC-trees.")
    p.add_argument("--version", action="version", version=f"circlekit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("input", nargs="?", default="-", help="edge-list file, '-' for stdin")

    for name, fn in (("recognize", cmd_recognize), ("certify", cmd_certify)):
        sp = sub.add_parser(name)
        with_input(sp)
        sp.add_argument("--certificate", action="store_true", help="print the chord diagram")
        sp.add_argument("--canonical", action="store_true", help="print the canonical word")
        sp.add_argument("--stats", action="store_true", help="per-insertion summary")
        sp.set_defaults(func=fn)
    sp = sub.add_parser("decompose")
    with_input(sp)
    sp.add_argument("--stats", action="store_true", help="list every node")
    sp.set_defaults(func=cmd_decompose)
    sp = sub.add_parser("lexbfs")
    with_input(sp)
    sp.add_argument("--start", type=int, default=0)
    sp.set_defaults(func=cmd_lexbfs)
    sp = sub.add_parser("generate")
    sp.add_argument("kind")
    sp.add_argument("-n", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--obstruction", default="W5")
    sp.add_argument("-o", "--output", default="-")
    sp.set_defaults(func=cmd_generate)
    sp = sub.add_parser("bench")
    sp.add_argument("--sizes", default="10000,100000")
    sp.add_argument("--reps", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_bench)
    sp = sub.add_parser("crosscheck")
    sp.add_argument("--nmax", type=int, default=6)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_crosscheck)
    sp = sub.add_parser("oracle")
    sp.add_argument("query", choices=("recognize", "splits", "goodvertex"))
    with_input(sp)
    sp.add_argument("--vertex", type=int)
    sp.add_argument("--certificate", action="store_true")
    sp.set_defaults(func=cmd_oracle)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, CapExceeded) as exc:
        print(f"error={exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
