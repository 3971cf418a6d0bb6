"""Construction benchmarks over scaling input families."""

from __future__ import annotations

import gc
from time import perf_counter

import numpy as np

from .covertree import CoverSuffixTree
from .text import load_text

FAMILIES = ("random", "unary", "fibonacci")


def make_input(family: str, n: int, seed: int = 0) -> bytes:
    """Text of length n from one of the benchmark families."""
    if family == "random":
        rng = np.random.default_rng(seed)
        return bytes(rng.integers(0, 2, n).astype(np.uint8) + ord("a"))
    if family == "unary":
        return b"a" * n
    if family == "fibonacci":
        a, b = b"a", b"ab"
        while len(b) < n:
            a, b = b, b + a
        return b[:n]
    raise ValueError(f"unknown family {family!r}")


def warmup() -> None:
    """Trigger JIT compilation on a tiny input so timings measure the build."""
    CoverSuffixTree(load_text(make_input("random", 4096)))
    CoverSuffixTree(load_text(make_input("unary", 512)))


def time_build(data: bytes, repeats: int = 1) -> tuple[float, dict[str, float]]:
    """Best wall time of a full cover-tree build, with per-phase laps."""
    best = float("inf")
    phases: dict[str, float] = {}
    t = load_text(data)
    for _ in range(repeats):
        gc.collect()
        tic = perf_counter()
        cst = CoverSuffixTree(t)
        total = perf_counter() - tic
        if total < best:
            best = total
            phases = dict(cst.timings)
        cst = None
    return best, phases


def bench_family(family: str, sizes: list[int], repeats: int = 2):
    """Rows (family, n, phase, nanoseconds); phase 'total' rows included."""
    rows = []
    totals = []
    for n in sizes:
        data = make_input(family, n)
        total, phases = time_build(data, repeats=repeats)
        for phase, sec in phases.items():
            rows.append((family, n, phase, int(sec * 1e9)))
        rows.append((family, n, "total", int(total * 1e9)))
        totals.append(total)
    ratios = [(sizes[i + 1], totals[i + 1] / totals[i]) for i in range(len(sizes) - 1)]
    return rows, ratios
