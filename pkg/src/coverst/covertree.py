"""Cover suffix tree: square-half loci made explicit, every explicit
node annotated with occurrence, overlap and coverage statistics.

The overlap counts come from runs. For every run, the fragments
witnessing overlapping consecutive occurrences form a triangular family
whose lower side lies on a suffix-link-tree path and whose upper side
consists of square halves; path-difference counters over the suffix-link
tree and over the rotation graph of square halves turn both sides into
per-node totals, and one subtree sum over this tree yields ov(v).
Period-weighted counters give the overlap part of coverage the same way.
"""

from __future__ import annotations

from time import perf_counter

import numpy as np

from . import _kernels as K
from .runs import compute_runs_arrays, distinct_square_arrays
from .suffixes import SuffixTree
from .text import Fragment, Text


class CoverSuffixTree:
    """Annotated cover suffix tree of a text.

    Wraps the augmented SuffixTree (st) plus per-node annotation arrays:
    is_square, occ, ov, nov, cv_ov, cv. Nodes with id < st.plain_nodes
    are the original suffix-tree nodes; ids beyond are square-half nodes
    created by edge splitting.
    """

    def __init__(self, t: Text):
        self.text = t
        self.timings: dict[str, float] = {}
        tic = perf_counter()
        st = SuffixTree(t)
        self._lap(tic, "suffix_tree")
        tic = perf_counter()
        st.compute_suffix_links()
        self._lap(tic, "suffix_links")
        self.st = st
        tic = perf_counter()
        self.run_a, self.run_b, self.run_p = compute_runs_arrays(t, st)
        self._lap(tic, "runs")
        if len(self.run_a) > t.n:
            raise RuntimeError("more runs than text positions; construction bug")
        tic = perf_counter()
        self.sq_i, self.sq_d = distinct_square_arrays(t, st, self.run_a, self.run_b, self.run_p)
        self._lap(tic, "squares")
        if len(self.sq_i) > t.n:
            raise RuntimeError("more distinct squares than text positions")
        tic = perf_counter()
        self._build_structure()
        self._lap(tic, "structure")
        tic = perf_counter()
        self._build_rotation_graph()
        self._lap(tic, "rotation_graph")
        tic = perf_counter()
        self._compute_counters()
        self._lap(tic, "counters")
        tic = perf_counter()
        self._annotate()
        self._lap(tic, "annotate")

    def _lap(self, tic: float, phase: str) -> None:
        self.timings[phase] = perf_counter() - tic

    # ------------------------------------------------------------- structure

    def _build_structure(self) -> None:
        """Make every square-half locus explicit (edge splitting)."""
        st = self.st
        t = self.text
        nsq = len(self.sq_i)
        loci = st.wa_batch(st.leaf_node[self.sq_i], self.sq_d) if nsq else np.empty(0, np.int32)
        if nsq:
            bad = K.verify_square_loci(
                loci, self.sq_i, self.sq_d, st.depth, st.parent,
                st.pos, st.sarr.rank, *st._lce_tables, t.n,
            )
            if bad:
                raise RuntimeError("square fragment does not match its locus")
        exact = st.depth[loci] == self.sq_d if nsq else np.empty(0, bool)
        n_new = int((~exact).sum()) if nsq else 0
        new_total = st.nodes + n_new
        if new_total > 3 * t.n + 2:
            raise RuntimeError("cover tree exceeds the 3n+2 node bound")

        parent = np.full(new_total, -1, dtype=np.int32)
        depth = np.zeros(new_total, dtype=np.int32)
        pos = np.zeros(new_total, dtype=np.int32)
        leaf_suffix = np.full(new_total, -1, dtype=np.int32)
        suflink = np.full(new_total, -1, dtype=np.int32)
        parent[: st.nodes] = st.parent
        depth[: st.nodes] = st.depth
        pos[: st.nodes] = st.pos
        leaf_suffix[: st.nodes] = st.leaf_suffix
        suflink[: st.nodes] = st.suflink
        is_square = np.zeros(new_total, dtype=bool)
        sq_node = np.full(max(nsq, 1), -1, dtype=np.int32)

        if nsq:
            is_square[loci[exact]] = True
            sq_node[np.where(exact)[0]] = loci[exact]
            inexact = np.where(~exact)[0]
            if len(inexact):
                grp_order = np.lexsort((-self.sq_d[inexact], loci[inexact]))
                rows = inexact[grp_order]
                K.insert_square_nodes(
                    parent, depth, pos, is_square, st.nodes,
                    loci[rows], self.sq_d[rows], rows.astype(np.int64), sq_node,
                )
        st.parent, st.depth, st.pos = parent, depth, pos
        st.leaf_suffix, st.suflink = leaf_suffix, suflink
        st.nodes = new_total
        st._rebuild_csr()
        self.is_square = is_square
        self.sq_node = sq_node[:nsq]
        self._depth_desc = np.argsort(st.depth, kind="stable")[::-1].astype(np.int32)

    # --------------------------------------------------------- rotation graph

    def _build_rotation_graph(self) -> None:
        """Arcs square-half -> its rotation, realized inside some square."""
        st = self.st
        nsq = len(self.sq_i)
        self.rot_next = np.full(st.nodes, -1, dtype=np.int32)
        if nsq:
            targets = st.wa_batch(st.leaf_node[self.sq_i + 1], self.sq_d)
            good = (st.depth[targets] == self.sq_d) & self.is_square[targets]
            src = self.sq_node[good]
            dst = targets[good]
            if len(np.unique(src)) != len(src):
                raise RuntimeError("duplicate outgoing rotation arc")
            self.rot_next[src] = dst
        vertices = np.sort(self.sq_node).astype(np.int32) if nsq else np.empty(0, np.int32)
        (
            self.rot_kind,
            self.rot_comp,
            self.rot_idx,
            self.rot_comp_ptr,
            self.rot_comp_nodes,
        ) = K.rotation_components(self.rot_next, vertices)

    # --------------------------------------------------------------- counters

    def _compute_counters(self) -> None:
        st = self.st
        n = self.text.n
        nodes = st.nodes
        a, b, p = self.run_a, self.run_b, self.run_p
        uplen = b - 2 * p - a + 1
        active = uplen >= 1  # exponent-2 runs have empty Upper/Lower sets
        aa, bb, pp, ul = a[active], b[active], p[active], uplen[active].astype(np.int64)

        self.c_lower_unit = np.zeros(nodes, dtype=np.int64)
        self.c_lower_per = np.zeros(nodes, dtype=np.int64)
        self.c_upper_unit = np.zeros(nodes, dtype=np.int64)
        self.c_upper_per = np.zeros(nodes, dtype=np.int64)
        if len(aa):
            qnode = np.concatenate([
                st.leaf_node[aa], st.leaf_node[bb - 2 * pp],
                st.leaf_node[aa], st.leaf_node[bb - 2 * pp],
            ]).astype(np.int64)
            qdepth = np.concatenate([bb - pp - aa + 1, pp + 1, pp, pp]).astype(np.int32)
            ans = st.wa_batch(qnode, qdepth)
            m = len(aa)
            lower_bottom = ans[:m]
            lower_top = ans[m : 2 * m]
            v1 = ans[2 * m : 3 * m]
            v2 = ans[3 * m :]
            if np.any(st.depth[lower_bottom] != bb - pp - aa + 1) or np.any(
                st.depth[lower_top] != pp + 1
            ):
                raise RuntimeError("Lower locus not explicit; construction bug")
            if np.any(lower_top >= st.plain_nodes):
                raise RuntimeError("Lower locus landed on a square-only node")
            if (
                np.any(st.depth[v1] != pp)
                or np.any(st.depth[v2] != pp)
                or not np.all(self.is_square[v1])
                or not np.all(self.is_square[v2])
            ):
                raise RuntimeError("Upper endpoint is not a square-half node")

            w = pp.astype(np.int64)
            np.add.at(self.c_lower_unit, lower_bottom, 1)
            np.add.at(self.c_lower_per, lower_bottom, w)
            dec = st.suflink[lower_top]
            np.add.at(self.c_lower_unit, dec, -1)
            np.add.at(self.c_lower_per, dec, -w)
            plain = self._depth_desc[self._depth_desc < st.plain_nodes]
            K.suffix_link_prefix_sums(plain, st.suflink, self.c_lower_unit)
            K.suffix_link_prefix_sums(plain, st.suflink, self.c_lower_per)

            K.upper_counters(
                self.rot_next, self.rot_kind, self.rot_comp, self.rot_idx,
                self.rot_comp_ptr, self.rot_comp_nodes,
                v1.astype(np.int64), v2.astype(np.int64), ul, w,
                self.c_upper_unit, self.c_upper_per,
            )
        # distribution sanity: the Upper side hands out one visit per fragment
        total = int(ul.sum())
        got = int(self.c_upper_unit[self.sq_node].sum()) if len(self.sq_i) else 0
        if got != total:
            raise RuntimeError("Upper visit total mismatch")

    # --------------------------------------------------------------- annotate

    def _annotate(self) -> None:
        st = self.st
        n = self.text.n
        occ = (st.leaf_suffix >= 0).astype(np.int64)
        K.accumulate_to_parents(self._depth_desc, st.parent, occ)
        ov = self.c_lower_unit - self.c_upper_unit
        K.accumulate_to_parents(self._depth_desc, st.parent, ov)
        cv_ov = self.c_lower_per - self.c_upper_per
        K.accumulate_to_parents(self._depth_desc, st.parent, cv_ov)
        if np.any(ov < 0):
            raise RuntimeError("negative overlap count; counter bug")
        nov = occ - ov
        if np.any(nov < 1):
            raise RuntimeError("nov < 1; every substring occurs at least once")
        self.occ = occ
        self.ov = ov
        self.nov = nov
        self.cv_ov = cv_ov
        self.cv_nov = nov * st.depth
        self.cv = self.cv_ov + self.cv_nov
        interior = (st.leaf_suffix < 0) & (np.arange(st.nodes) != 0)
        if np.any(self.cv[interior] < st.depth[interior]) or np.any(self.cv[interior] > n):
            raise RuntimeError("coverage outside [|label|, n] on a sentinel-free node")

    def run_counters(self, weight_mode: str) -> tuple[np.ndarray, np.ndarray]:
        """(C_lower, C_upper) per node for weight_mode 'unit' or 'period'."""
        if weight_mode == "unit":
            return self.c_lower_unit, self.c_upper_unit
        if weight_mode == "period":
            return self.c_lower_per, self.c_upper_per
        raise ValueError("weight_mode must be 'unit' or 'period'")

    # ------------------------------------------------------------ node lookup

    def cv_at_depth(self, v: int, length: int) -> int:
        """Coverage of the (possibly implicit) prefix of v's label.

        length must lie on the edge into v: parent depth < length <= depth[v].
        """
        st = self.st
        if not st.depth[st.parent[v]] < length <= st.depth[v]:
            raise ValueError("length not on the edge into the node")
        return int(self.cv[v] - (int(st.depth[v]) - length) * self.nov[v])

    def locate(self, pattern: bytes) -> tuple[int, bool] | None:
        """Nearest explicit node at/below the pattern's locus, plus an
        exact-locus flag; None if the pattern does not occur."""
        enc = self.text.encode(pattern)
        if enc is None:
            return None
        node, matched = self.st.walk(enc)
        if node < 0 or matched < len(pattern):
            return None
        return node, bool(self.st.depth[node] == matched)

    def locate_fragment(self, frag: Fragment) -> int:
        """Explicit node at/below the locus of a fragment of T."""
        self.text.check_fragment(frag)
        leaf = int(self.st.leaf_node[frag.start])
        return self.st.weighted_ancestor(leaf, frag.length)

    def square_half_labels(self) -> set[bytes]:
        return {self.st.label_bytes(int(v)) for v in self.sq_node}

    def node_of_label(self, label: bytes) -> int | None:
        hit = self.locate(label)
        if hit is None or not hit[1]:
            return None
        return hit[0]


def build_cover_suffix_tree(t: Text) -> CoverSuffixTree:
    return CoverSuffixTree(t)
