"""Command-line front end: build, pcov, ovocc, verify, bench.

All data output is line-oriented tab-separated text on stdout with
'#'-prefixed header lines; diagnostics go to stderr and every error path
exits nonzero. Fragments are printed 1-based inclusive.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import bench as bench_mod
from . import verify as verify_mod
from .covertree import CoverSuffixTree
from .ovocc import OvOccIndex
from .partial import all_partial_covers, shortest_alpha_covers
from .text import Fragment, Text, load_text


def _read_input(path: str | None) -> bytes:
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load(path: str | None) -> Text:
    return load_text(_read_input(path))


def cmd_build(args) -> int:
    t = _load(args.input)
    cst = CoverSuffixTree(t)
    st = cst.st
    out = sys.stdout if args.output in (None, "-") else open(args.output, "w")
    try:
        out.write(f"# n\t{t.n}\n")
        out.write(f"# sigma\t{t.sigma}\n")
        out.write(f"# nodes\t{st.nodes}\n")
        out.write(f"# runs\t{len(cst.run_a)}\n")
        out.write(f"# squares\t{len(cst.sq_i)}\n")
        out.write("# columns\tid\tparent\tedge_start\tedge_end\tdepth\tsquare\tsuflink\tocc\tov\tnov\tcv_ov\tcv\n")
        ids = np.arange(st.nodes)
        parent = np.where(st.parent >= 0, st.parent + 1, 0)
        pdepth = st.depth[np.where(st.parent >= 0, st.parent, 0)]
        estart = np.where(ids > 0, st.pos + pdepth, 0)
        eend = np.where(ids > 0, st.pos + st.depth - 1, 0)
        suflink = np.where(st.suflink >= 0, st.suflink + 1, 0)
        cols = np.column_stack([
            ids + 1, parent, estart, eend, st.depth,
            cst.is_square.astype(np.int64), suflink,
            cst.occ, cst.ov, cst.nov, cst.cv_ov, cst.cv,
        ])
        np.savetxt(out, cols, fmt="%d", delimiter="\t")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_pcov(args) -> int:
    t = _load(args.input)
    cst = CoverSuffixTree(t)
    if args.all:
        table = all_partial_covers(cst)
        for alpha in range(1, t.n + 1):
            ln, frag = table.entry(alpha)
            sys.stdout.write(f"{alpha}\t{ln}\t{frag.start}\t{frag.end}\n")
        return 0
    alpha = args.alpha
    if not 1 <= alpha <= t.n:
        print(f"alpha must lie in [1..{t.n}]", file=sys.stderr)
        return 2
    for _, ln, frag in shortest_alpha_covers(cst, alpha):
        sys.stdout.write(f"{ln}\t{frag.start}\t{frag.end}\n")
    return 0


def cmd_ovocc(args) -> int:
    t = _load(args.input)
    idx = OvOccIndex(t)
    if args.pattern is not None:
        pattern = args.pattern.encode()
    else:
        i, j = args.frag
        try:
            pattern = Fragment(i, j)
            t.check_fragment(pattern)
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return 2
    try:
        res = idx.query(pattern, args.beta)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    for i, j in sorted(res.pairs()):
        sys.stdout.write(f"{i}\t{j}\n")
    return 0


def cmd_verify(args) -> int:
    if args.max_n > 500:
        print("--max-n is capped at 500 (oracles are cubic)", file=sys.stderr)
        return 2
    rng = np.random.default_rng(args.seed)
    stats = verify_mod.VerifyStats()
    for it in range(args.iters):
        n = int(rng.integers(2, args.max_n + 1))
        data = verify_mod.random_text(rng, n, args.sigma)
        before = len(stats.failures)
        verify_mod.check_text(data, stats)
        if len(stats.failures) > before:
            small = verify_mod.minimize_failure(data)
            print(f"FAIL after {it + 1} texts: {stats.failures[before]}", file=sys.stderr)
            print(f"minimized failing input: {small!r}", file=sys.stderr)
            return 1
    print(
        f"verified {stats.texts} texts (max n {args.max_n}, sigma {args.sigma}): "
        f"{stats.queries} ovocc queries, max rmq/(out+1) {stats.max_rmq_per_output:.2f}"
    )
    return 0


def cmd_bench(args) -> int:
    sizes = [int(float(s)) for s in args.sizes.split(",") if s]
    if not sizes:
        print("no sizes given", file=sys.stderr)
        return 2
    bench_mod.warmup()
    rows, ratios = bench_mod.bench_family(args.family, sizes, repeats=args.repeats)
    for family, n, phase, ns in rows:
        sys.stdout.write(f"{family}\t{n}\t{phase}\t{ns}\n")
    for n, ratio in ratios:
        sys.stdout.write(f"{args.family}\tratio_at\t{n}\t{ratio:.3f}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="coverst", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build the cover suffix tree and dump its nodes")
    p.add_argument("--input", default=None, help="input file (default: stdin)")
    p.add_argument("--output", default=None, help="output file (default: stdout)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("pcov", help="shortest partial covers")
    p.add_argument("--input", default=None)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--all", action="store_true", help="table for every alpha")
    g.add_argument("--alpha", type=int, help="all shortest covers for one alpha")
    p.set_defaults(func=cmd_pcov)

    p = sub.add_parser("ovocc", help="bounded-gap overlapping consecutive occurrences")
    p.add_argument("--input", default=None)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pattern", help="pattern string")
    g.add_argument("--frag", nargs=2, type=int, metavar=("I", "J"), help="pattern as fragment of T")
    p.add_argument("--beta", type=int, required=True, help="maximum gap, must be < pattern length")
    p.set_defaults(func=cmd_ovocc)

    p = sub.add_parser("verify", help="randomized oracle-equivalence suite")
    p.add_argument("--max-n", type=int, default=100)
    p.add_argument("--iters", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sigma", type=int, default=2)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="timed cover-tree builds")
    p.add_argument("--sizes", required=True, help="comma list, e.g. 1e6,2e6")
    p.add_argument("--family", choices=bench_mod.FAMILIES, default="random")
    p.add_argument("--repeats", type=int, default=2)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
