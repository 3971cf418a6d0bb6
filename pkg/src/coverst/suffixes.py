"""Suffix array, LCP, suffix tree, suffix links, weighted ancestors,
LCE and RMQ: the toolkit every later stage consumes.

The suffix tree is stored column-wise in flat numpy arrays indexed by
node id (root = 0). Leaves carry their 1-based suffix start; pos[v]
holds a witness occurrence of v's string label, so the label is
T[pos[v] .. pos[v]+depth[v]-1] and the edge from the parent is
T[pos[v]+depth[parent] .. pos[v]+depth[v]-1].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .text import Fragment, Text


@dataclass
class SuffixArray:
    """Lexicographic order of all n+1 suffix starts (1-based)."""

    sa: np.ndarray          # int32[n+1], 1-based suffix starts
    rank: np.ndarray        # int32[n+2], rank[i] = 0-based index of suffix i in sa

    def __len__(self) -> int:
        return len(self.sa)


@dataclass
class LcpArray:
    """lcp[k] = LCP of suffixes sa[k-1] and sa[k]; lcp[0] = 0."""

    lcp: np.ndarray         # int32[n+1]


def build_suffix_array(t: Text) -> SuffixArray:
    sa0, rank0 = K.suffix_array_build(t.sym[1 : t.n + 2])
    rank = np.full(t.n + 2, -1, dtype=np.int32)
    rank[1:] = rank0
    return SuffixArray(sa=sa0 + 1, rank=rank)


def build_lcp_array(t: Text, sarr: SuffixArray) -> LcpArray:
    return LcpArray(lcp=K.kasai_lcp(t.sym, sarr.sa, sarr.rank, t.n))


class RmqStructure:
    """Static range-minimum structure: block minima plus a sparse table.

    query(l, r) is 1-based inclusive and returns (min, argmin) with ties
    broken towards the smallest index.
    """

    def __init__(self, keys):
        keys = np.asarray(keys, dtype=np.int64)
        if len(keys) == 0:
            raise ValueError("empty key array")
        self.size = len(keys)
        self._tables = K.block_rmq_build(keys)

    def query(self, l: int, r: int) -> tuple[int, int]:
        if not (1 <= l <= r <= self.size):
            raise ValueError(f"bad RMQ range ({l},{r}) for size {self.size}")
        val, arg = K.block_rmq_query(*self._tables, l - 1, r - 1)
        return int(val), int(arg) + 1


def rmq_build(keys) -> RmqStructure:
    return RmqStructure(keys)


def rmq_query(r: RmqStructure, l: int, hi: int) -> tuple[int, int]:
    return r.query(l, hi)


@dataclass
class PreorderIndex:
    """1-based preorder numbers and contiguous subtree intervals."""

    number: np.ndarray      # int32 per node, 1-based
    size: np.ndarray        # int32 per node
    node_at: np.ndarray     # node_at[number-1] = node

    def interval(self, v: int) -> tuple[int, int]:
        n = int(self.number[v])
        return n, n + int(self.size[v]) - 1


class SuffixTree:
    """Compact suffix tree of a Text, built from the suffix array + LCP.

    Node arrays: parent, depth (string depth), pos (witness occurrence
    start), leaf_suffix (-1 on internal nodes), suflink (-1 until
    compute_suffix_links runs, and on square nodes added later). The
    child lists live in a CSR sorted by ascending first edge symbol.
    """

    def __init__(self, t: Text):
        self.text = t
        self.sarr = build_suffix_array(t)
        self.lcparr = build_lcp_array(t, self.sarr)
        (
            self.parent,
            self.depth,
            self.pos,
            self.leaf_suffix,
            self.leaf_node,
            self.nodes,
        ) = K.st_from_sa_lcp(self.sarr.sa, self.lcparr.lcp, t.n)
        self.plain_nodes = self.nodes      # before square augmentation
        self.suflink = np.full(self.nodes, -1, dtype=np.int32)
        self._lce_tables = K.block_rmq_build(self.lcparr.lcp.astype(np.int64))
        self._rebuild_csr()
        self._lift = None

    # ---------------------------------------------------------------- basics

    def _rebuild_csr(self) -> None:
        parent_clamped = np.where(self.parent >= 0, self.parent, 0)
        first = self.text.sym[self.pos + self.depth[parent_clamped]]
        first[0] = 0
        self.csr_start, self.csr_child = K.children_csr(self.parent, first, self.nodes)
        self.child_first = first[self.csr_child]
        self._lift = None

    def is_leaf(self, v: int) -> bool:
        return self.leaf_suffix[v] >= 0

    def n_children(self, v: int) -> int:
        return int(self.csr_start[v + 1] - self.csr_start[v])

    def children(self, v: int) -> np.ndarray:
        return self.csr_child[self.csr_start[v] : self.csr_start[v + 1]]

    def label_fragment(self, v: int) -> Fragment:
        return Fragment(int(self.pos[v]), int(self.pos[v] + self.depth[v] - 1))

    def label_bytes(self, v: int) -> bytes:
        if self.depth[v] == 0:
            return b""
        return self.text.fragment_bytes(self.label_fragment(v))

    def edge_fragment(self, v: int) -> Fragment:
        p = self.parent[v]
        return Fragment(int(self.pos[v] + self.depth[p]), int(self.pos[v] + self.depth[v] - 1))

    def lce(self, i: int, j: int) -> int:
        """Longest common prefix length of suffixes i and j (1-based)."""
        n = self.text.n
        if not (1 <= i <= n + 1 and 1 <= j <= n + 1):
            raise ValueError("suffix start out of range")
        return int(K.lce_query(self.sarr.rank, *self._lce_tables, n, i, j))

    # ------------------------------------------------------- weighted ancestor

    def _ensure_lifting(self) -> None:
        if self._lift is not None:
            return
        levels = [self.parent.astype(np.int32)]
        while np.any(levels[-1] >= 0):
            prev = levels[-1]
            safe = np.where(prev >= 0, prev, 0)
            levels.append(np.where(prev >= 0, prev[safe], -1).astype(np.int32))
        self._lift = np.stack(levels)

    def weighted_ancestor(self, v: int, d: int) -> int:
        """Topmost ancestor w of v (w = v allowed) with depth[w] >= d."""
        if d < 0:
            raise ValueError("negative target depth")
        if d > self.depth[v]:
            raise ValueError("target depth exceeds node depth")
        self._ensure_lifting()
        cur = v
        for lvl in range(self._lift.shape[0] - 1, -1, -1):
            up = self._lift[lvl, cur]
            if up >= 0 and self.depth[up] >= d:
                cur = int(up)
        return cur

    def wa_batch(self, qnode: np.ndarray, qdepth: np.ndarray) -> np.ndarray:
        """Batched weighted-ancestor queries via one DFS over the tree."""
        qnode = np.asarray(qnode, dtype=np.int64)
        qdepth = np.asarray(qdepth, dtype=np.int32)
        qptr, order = K.group_queries(qnode, self.nodes)
        ans = np.full(len(qnode), -1, dtype=np.int32)
        K.wa_batch(
            self.csr_start, self.csr_child, self.depth, self.nodes,
            qptr, qdepth[order], order, ans,
        )
        return ans

    # ------------------------------------------------------------ suffix links

    def compute_suffix_links(self) -> None:
        """Fill suflink for every non-root node of the plain suffix tree.

        Leaves drop their first symbol onto the next leaf; each internal
        node issues one weighted-ancestor query at the leaf of suffix
        pos[v]+1 with target depth |v|-1.
        """
        n = self.text.n
        link = self.suflink
        for i in range(1, n + 1):
            link[self.leaf_node[i]] = self.leaf_node[i + 1]
        link[self.leaf_node[n + 1]] = 0
        internal = np.where((self.leaf_suffix < 0) & (np.arange(self.nodes) != 0))[0]
        if len(internal) == 0:
            return
        qnode = self.leaf_node[self.pos[internal] + 1].astype(np.int64)
        qdepth = self.depth[internal] - 1
        ans = self.wa_batch(qnode, qdepth)
        if np.any(self.depth[ans] != qdepth):
            raise RuntimeError("suffix link target not explicit; construction bug")
        link[internal] = ans

    # ------------------------------------------------------------ pattern walk

    def walk(self, pattern: np.ndarray) -> tuple[int, int]:
        """Walk encoded symbols from the root; see kernels.walk_pattern."""
        pattern = np.asarray(pattern, dtype=np.int32)
        node, matched = K.walk_pattern(
            self.text.sym, self.csr_start, self.csr_child, self.child_first,
            self.pos, self.depth, pattern,
        )
        return int(node), int(matched)

    def preorder(self) -> PreorderIndex:
        number, size, node_at = K.preorder_numbers(self.csr_start, self.csr_child, 0, self.nodes)
        return PreorderIndex(number=number + 1, size=size, node_at=node_at)


def build_suffix_tree(t: Text) -> SuffixTree:
    return SuffixTree(t)


def compute_suffix_links(st: SuffixTree) -> SuffixTree:
    st.compute_suffix_links()
    return st


@dataclass
class SuffixLinkTree:
    """The tree of suffix links over the plain suffix tree's nodes.

    parent[v] = suflink[v]; children lists are materialized in a CSR
    ordered by ascending node id.
    """

    parent: np.ndarray
    csr_start: np.ndarray
    csr_child: np.ndarray

    def preorder(self, nodes: int) -> PreorderIndex:
        number, size, node_at = K.preorder_numbers(self.csr_start, self.csr_child, 0, nodes)
        return PreorderIndex(number=number + 1, size=size, node_at=node_at)


def build_suffix_link_tree(st: SuffixTree) -> SuffixLinkTree:
    nodes = st.plain_nodes
    link = st.suflink[:nodes]
    if np.any(link[1:] < 0):
        raise RuntimeError("suffix link unset; run compute_suffix_links first")
    ids = np.arange(nodes, dtype=np.int64)
    child_ids = ids[1:]
    order = np.argsort(link[1:], kind="stable")
    csr_child = child_ids[order].astype(np.int32)
    counts = np.bincount(link[1:], minlength=nodes)
    csr_start = np.zeros(nodes + 1, dtype=np.int64)
    np.cumsum(counts, out=csr_start[1:])
    return SuffixLinkTree(parent=link.copy(), csr_start=csr_start, csr_child=csr_child)


def preorder_index(tree, nodes: int | None = None) -> PreorderIndex:
    """Preorder numbering of a SuffixTree or SuffixLinkTree."""
    if isinstance(tree, SuffixTree):
        return tree.preorder()
    if nodes is None:
        raise ValueError("node count required for a SuffixLinkTree")
    return tree.preorder(nodes)


def lce(st: SuffixTree, i: int, j: int) -> int:
    return st.lce(i, j)


def weighted_ancestor(st: SuffixTree, v: int, d: int) -> int:
    return st.weighted_ancestor(v, d)
