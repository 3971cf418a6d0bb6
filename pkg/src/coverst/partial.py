"""Shortest partial covers from an annotated cover suffix tree.

Only branching nodes of the plain suffix tree and genuine suffixes of T
can be optimal witnesses (any other substring is dominated by a
same-length one of these), so one pass over the branching nodes plus a
backward sweep solves the all-alpha problem.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .covertree import CoverSuffixTree
from .text import Fragment


@dataclass
class ShortestTable:
    """shortest[alpha] as parallel arrays indexed by alpha in 1..n."""

    length: np.ndarray
    start: np.ndarray
    end: np.ndarray

    def entry(self, alpha: int) -> tuple[int, Fragment]:
        return int(self.length[alpha]), Fragment(int(self.start[alpha]), int(self.end[alpha]))

    @property
    def n(self) -> int:
        return len(self.length) - 1


@njit(cache=True)
def _apply_branching(node_ids, depth, pos, cv, length, start, end):
    for t in range(node_ids.shape[0]):
        v = node_ids[t]
        alpha = cv[v]
        d = depth[v]
        if d < length[alpha]:
            length[alpha] = d
            start[alpha] = pos[v]
            end[alpha] = pos[v] + d - 1


@njit(cache=True)
def _sweep_down(length, start, end):
    for alpha in range(length.shape[0] - 2, 0, -1):
        if length[alpha] > length[alpha + 1]:
            length[alpha] = length[alpha + 1]
            start[alpha] = start[alpha + 1]
            end[alpha] = end[alpha + 1]


def all_partial_covers(cst: CoverSuffixTree) -> ShortestTable:
    """A shortest alpha-partial cover for every alpha in 1..n."""
    st = cst.st
    n = cst.text.n
    length = np.zeros(n + 1, dtype=np.int64)
    start = np.zeros(n + 1, dtype=np.int64)
    end = np.zeros(n + 1, dtype=np.int64)
    alphas = np.arange(1, n + 1)
    length[1:] = alphas                         # slot l starts as the suffix T[n-l+1..n]
    start[1:] = n - alphas + 1
    end[1:] = n
    ids = np.arange(st.plain_nodes)
    branching = ids[(st.leaf_suffix[: st.plain_nodes] < 0) & (ids != 0)]
    _apply_branching(
        branching.astype(np.int64), st.depth.astype(np.int64),
        st.pos.astype(np.int64), cst.cv, length, start, end,
    )
    _sweep_down(length, start, end)
    table = ShortestTable(length, start, end)
    if np.any(np.diff(table.length[1:]) < 0):
        raise RuntimeError("shortest-cover lengths are not monotone")
    return table


def shortest_alpha_covers(cst: CoverSuffixTree, alpha: int):
    """All shortest alpha-partial covers, as (node, length, Fragment) rows.

    Scans every edge of the cover tree; on the edge into node v the
    coverage of the length-l prefix is cv(v) - (depth(v)-l)*nov(v), so
    the minimal admissible l on that edge is depth(v) - (cv(v)-alpha)//nov(v),
    clamped to the edge. Rows are deduplicated by locus and sorted by node id.
    """
    n = cst.text.n
    if not 1 <= alpha <= n:
        raise ValueError(f"alpha must lie in [1..{n}]")
    st = cst.st
    ids = np.arange(1, st.nodes)
    depth = st.depth[ids].astype(np.int64)
    pdepth = st.depth[st.parent[ids]].astype(np.int64)
    leaf = st.leaf_suffix[ids]
    hi = np.where(leaf >= 0, n + 1 - leaf, depth)
    lo = pdepth + 1
    cv = cst.cv[ids]
    nov = cst.nov[ids]
    cv_hi = cv - (depth - hi) * nov
    ok = (hi >= lo) & (cv_hi >= alpha)
    best = np.maximum(lo, depth - (cv - alpha) // nov)
    best = np.where(ok, best, np.iinfo(np.int64).max)
    lstar = int(best.min())
    if lstar == np.iinfo(np.int64).max:
        raise RuntimeError("no substring reaches the requested coverage")
    rows = []
    for k in np.where(best == lstar)[0]:
        v = int(ids[k])
        s = int(st.pos[v])
        rows.append((v, lstar, Fragment(s, s + lstar - 1)))
    return rows
