"""Linear-size index for bounded-gap overlapping consecutive occurrences.

Stores the plain suffix tree and its suffix-link tree, pre-order
numberings of both, the per-node minimal periods MinLower / MinBottom in
pre-order arrays with RMQ structures on top, and per-node lists of runs
whose bottommost triangle fragment ends at that node, sorted by period.
A query walks to the pattern's locus and enumerates qualifying nodes by
recursive range-minimum splitting, which keeps the work proportional to
the output.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from . import _kernels as K
from .runs import compute_runs_arrays
from .suffixes import SuffixTree, build_suffix_link_tree
from .text import Fragment, Text


@njit(cache=True)
def _min_lower(num_sl, size_sl, depth, mb_pad, mb_bmin, mb_barg, mb_sp, mb_logt, inf, out):
    for v in range(num_sl.shape[0]):
        lo = num_sl[v]
        hi = lo + size_sl[v] - 1
        p, _ = K.block_rmq_query(mb_pad, mb_bmin, mb_barg, mb_sp, mb_logt, lo, hi)
        out[v] = p if depth[v] > p else inf


@dataclass
class OvOccResult:
    """Pairs (i, j) with j - i <= beta, plus the RMQ call count."""

    pairs_i: np.ndarray
    pairs_j: np.ndarray
    rmq_calls: int

    def pairs(self) -> list[tuple[int, int]]:
        return [(int(i), int(j)) for i, j in zip(self.pairs_i, self.pairs_j)]

    def __len__(self) -> int:
        return len(self.pairs_i)


class OvOccIndex:
    """Index answering query(S, beta) in output-sensitive time.

    Built from the plain suffix tree; the cover tree is not needed. The
    sentinel value n+1 plays the role of infinity in the period arrays.
    """

    def __init__(self, t: Text):
        self.text = t
        st = SuffixTree(t)
        st.compute_suffix_links()
        self.st = st
        self.slt = build_suffix_link_tree(st)
        self.run_a, self.run_b, self.run_p = compute_runs_arrays(t, st)
        n = t.n
        self.inf = n + 1
        nodes = st.nodes

        # Bottoms: runs bucketed at the locus of T[a..b-p], sorted by period
        order = np.argsort(self.run_p, kind="stable")
        ra, rb, rp = self.run_a[order], self.run_b[order], self.run_p[order]
        if len(ra):
            blen = (rb - rp - ra + 1).astype(np.int32)
            loci = st.wa_batch(st.leaf_node[ra], blen)
            if np.any(st.depth[loci] != blen):
                raise RuntimeError("run bottom is not an explicit node")
        else:
            loci = np.empty(0, dtype=np.int32)
        counts = np.bincount(loci, minlength=nodes) if len(ra) else np.zeros(nodes, np.int64)
        self.bot_ptr = np.zeros(nodes + 1, dtype=np.int64)
        np.cumsum(counts, out=self.bot_ptr[1:])
        bucketed = np.argsort(loci, kind="stable")  # stable keeps the period order per node
        self.bot_per = rp[bucketed].astype(np.int32)
        self.bot_a = ra[bucketed].astype(np.int32)

        min_bottom = np.full(nodes, self.inf, dtype=np.int64)
        heads = self.bot_ptr[:-1] < self.bot_ptr[1:]
        min_bottom[heads] = self.bot_per[self.bot_ptr[:-1][heads]]
        self.min_bottom = min_bottom

        pre_st = st.preorder()
        pre_sl = self.slt.preorder(nodes)
        self.num_st = pre_st.number - 1
        self.size_st = pre_st.size
        self.node_at_st = pre_st.node_at
        self.num_sl = pre_sl.number - 1
        self.size_sl = pre_sl.size
        self.node_at_sl = pre_sl.node_at

        mb = np.empty(nodes, dtype=np.int64)
        mb[self.num_sl] = min_bottom
        self.mb = mb
        self._mb_tables = K.block_rmq_build(mb)
        self.min_lower = np.empty(nodes, dtype=np.int64)
        _min_lower(
            self.num_sl, self.size_sl, st.depth.astype(np.int64),
            *self._mb_tables, self.inf, self.min_lower,
        )
        ml = np.empty(nodes, dtype=np.int64)
        ml[self.num_st] = self.min_lower
        self.ml = ml
        self._ml_tables = K.block_rmq_build(ml)

    # ---------------------------------------------------------------- queries

    def _locus(self, pattern) -> tuple[int, int]:
        """(nearest explicit node, pattern length); node -1 when absent."""
        if isinstance(pattern, Fragment):
            self.text.check_fragment(pattern)
            if pattern.end > self.text.n:
                raise ValueError("fragment reaches the sentinel")
            leaf = int(self.st.leaf_node[pattern.start])
            return self.st.weighted_ancestor(leaf, pattern.length), pattern.length
        enc = self.text.encode(bytes(pattern))
        if enc is None:
            return -1, len(pattern)
        node, matched = self.st.walk(enc)
        if node < 0 or matched < len(enc):
            return -1, len(enc)
        return node, len(enc)

    def query(self, pattern, beta: int) -> OvOccResult:
        """All consecutive occurrences (i, j) of the pattern with j-i <= beta.

        The pattern is raw bytes or a Fragment of the text; beta must be
        a positive integer smaller than the pattern length.
        """
        u, m = self._locus(pattern)
        if beta < 1:
            raise ValueError("beta must be positive")
        if beta >= m:
            raise ValueError("beta must be smaller than pattern length")
        if u < 0:
            return OvOccResult(np.empty(0, np.int32), np.empty(0, np.int32), 0)
        nodes = self.st.nodes
        stack = np.empty(4 * (nodes + 4), dtype=np.int64)
        out_i = np.empty(self.text.n + 2, dtype=np.int32)
        out_j = np.empty(self.text.n + 2, dtype=np.int32)
        cnt, calls = K.ovocc_query(
            u, beta,
            self.num_st, self.size_st, self.node_at_st,
            self.num_sl, self.size_sl,
            *self._ml_tables,
            *self._mb_tables,
            self.node_at_sl, self.st.depth,
            self.bot_ptr, self.bot_per, self.bot_a,
            stack, out_i, out_j,
        )
        return OvOccResult(out_i[:cnt].copy(), out_j[:cnt].copy(), int(calls))


def build_ovocc_index(t: Text) -> OvOccIndex:
    return OvOccIndex(t)


def query_ovocc(idx: OvOccIndex, pattern, beta: int) -> OvOccResult:
    return idx.query(pattern, beta)
