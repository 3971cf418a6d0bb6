"""Maximal repetitions (runs) and the distinct square substrings they induce."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .suffixes import SuffixTree
from .text import Text


@dataclass(frozen=True)
class Run:
    """Maximal repetition T[a..b] with smallest period p and exponent >= 2."""

    a: int
    b: int
    p: int

    @property
    def length(self) -> int:
        return self.b - self.a + 1

    @property
    def exponent(self) -> float:
        return self.length / self.p


@dataclass(frozen=True)
class SquareOcc:
    """Canonical occurrence of a distinct square T[i..i+2d), half length d."""

    i: int
    d: int


def _lce_bundle(sym: np.ndarray, n: int):
    """(rank, rmq tables) for constant-time LCE over a 1-based symbol array."""
    sa0, rank0 = K.suffix_array_build(sym[1 : n + 2])
    rank = np.full(n + 2, -1, dtype=np.int32)
    rank[1:] = rank0
    lcp = K.kasai_lcp(sym, sa0 + 1, rank, n)
    return rank, K.block_rmq_build(lcp.astype(np.int64))


def reverse_bundle(t: Text):
    """LCE bundle of the reversed text, for backward extensions."""
    rev = np.zeros(t.n + 2, dtype=np.int32)
    rev[1 : t.n + 1] = t.sym[t.n : 0 : -1]
    return _lce_bundle(rev, t.n)


def compute_runs_arrays(t: Text, st: SuffixTree) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All runs of T as arrays (a, b, p), sorted by (a, p).

    Anchored LCE extensions report every maximal p-periodic interval of
    length >= 2p, possibly with non-minimal p; grouping by (a, b) and
    keeping the smallest period leaves exactly the runs.
    """
    n = t.n
    rank_r, tables_r = reverse_bundle(t)
    cap = 4 * n + 64
    while True:
        out_a = np.empty(cap, dtype=np.int32)
        out_b = np.empty(cap, dtype=np.int32)
        out_p = np.empty(cap, dtype=np.int32)
        cnt = K.run_candidates(
            t.sym, n,
            st.sarr.rank, *st._lce_tables,
            rank_r, *tables_r,
            out_a, out_b, out_p,
        )
        if cnt >= 0:
            break
        cap *= 2
    a = out_a[:cnt]
    b = out_b[:cnt]
    p = out_p[:cnt]
    span = a.astype(np.int64) * (n + 2) + b
    order = np.lexsort((p, span))
    a, b, p, span = a[order], b[order], p[order], span[order]
    keep = np.ones(cnt, dtype=bool)
    keep[1:] = span[1:] != span[:-1]
    a, b, p = a[keep], b[keep], p[keep]
    order = np.lexsort((p, a))
    return a[order].copy(), b[order].copy(), p[order].copy()


def compute_runs(t: Text, st: SuffixTree | None = None) -> list[Run]:
    if st is None:
        st = SuffixTree(t)
    a, b, p = compute_runs_arrays(t, st)
    return [Run(int(x), int(y), int(z)) for x, y, z in zip(a, b, p)]


def distinct_square_arrays(
    t: Text, st: SuffixTree, run_a: np.ndarray, run_b: np.ndarray, run_p: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Distinct squares as arrays (i, d), i the canonical (smallest) start.

    Candidates are the leftmost-window occurrences inside each run; equal
    squares from different runs collapse via an LCE comparison after
    sorting by (half length, suffix rank).
    """
    total = int(K.square_candidate_count(run_a, run_b, run_p))
    cand_i = np.empty(total, dtype=np.int32)
    cand_d = np.empty(total, dtype=np.int32)
    K.square_candidate_fill(run_a, run_b, run_p, cand_i, cand_d)
    if total == 0:
        return cand_i, cand_d
    lcp = st.lcparr.lcp
    lcp_desc = np.argsort(-lcp.astype(np.int64), kind="stable").astype(np.int64)
    lcp_desc = lcp_desc[lcp[lcp_desc] > 0]
    out_i = np.empty(total, dtype=np.int32)
    out_d = np.empty(total, dtype=np.int32)
    cnt = K.square_dedup(
        cand_i, cand_d, st.sarr.rank, lcp.astype(np.int64), lcp_desc, t.n,
        out_i, out_d,
    )
    sq_i = out_i[:cnt]
    sq_d = out_d[:cnt]
    final = np.lexsort((sq_i, sq_d))
    return sq_i[final].copy(), sq_d[final].copy()


def enumerate_distinct_squares(t: Text, runs: list[Run], st: SuffixTree | None = None) -> list[SquareOcc]:
    """One canonical SquareOcc per distinct square substring of T."""
    if st is None:
        st = SuffixTree(t)
    run_a = np.array([r.a for r in runs], dtype=np.int32)
    run_b = np.array([r.b for r in runs], dtype=np.int32)
    run_p = np.array([r.p for r in runs], dtype=np.int32)
    sq_i, sq_d = distinct_square_arrays(t, st, run_a, run_b, run_p)
    return [SquareOcc(int(i), int(d)) for i, d in zip(sq_i, sq_d)]
