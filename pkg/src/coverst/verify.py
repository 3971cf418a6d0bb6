"""Randomized oracle-equivalence harness.

check_text runs every fast-path result on one input against the
brute-force oracles: runs, distinct squares, per-node annotations,
shortest partial covers, and every bounded-gap occurrence query (every
distinct substring, every admissible beta). The oracle side is computed
from raw bytes only; the compiled driver below merely compares.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numba import njit

from . import _kernels as K
from . import oracles
from .covertree import CoverSuffixTree
from .ovocc import OvOccIndex
from .partial import all_partial_covers, shortest_alpha_covers
from .text import Text, load_text

ALPHABET = b"abcd"


@dataclass
class VerifyStats:
    texts: int = 0
    queries: int = 0
    rmq_violations: int = 0
    max_rmq_per_output: float = 0.0
    elapsed: float = 0.0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def random_text(rng: np.random.Generator, n: int, sigma: int) -> bytes:
    return bytes(rng.integers(0, sigma, n).astype(np.uint8) + ALPHABET[0])


# --------------------------------------------------------------------------
# bulk ovocc query checking
# --------------------------------------------------------------------------

@njit(cache=True)
def _bulk_ovocc_check(
    ent_node, ent_lo, ent_hi, ent_exp,
    exp_key, exp_gap,
    num_st, size_st, node_at_st,
    num_sl, size_sl,
    ml_pad, ml_bmin, ml_barg, ml_sp, ml_logt,
    mb_pad, mb_bmin, mb_barg, mb_sp, mb_logt,
    node_at_sl, depth,
    bot_ptr, bot_per, bot_a,
    nkey,
):
    """Run every (substring, beta) query and compare with oracle pairs.

    Edge e covers pattern lengths ent_lo[e]..ent_hi[e] below node
    ent_node[e]; its oracle pairs sit in exp_key[ent_exp[e]:ent_exp[e+1]]
    encoded as i*nkey+j and sorted by (gap, i) with gaps aligned in
    exp_gap. Returns (entry, length, beta) of the first mismatch (-1s if
    none), the query count, RMQ-bound violations, and the worst
    calls/(output+1) ratio scaled by 1000.
    """
    nodes = num_st.shape[0]
    stack = np.empty(4 * (nodes + 4), dtype=np.int64)
    out_i = np.empty(nkey + 2, dtype=np.int32)
    out_j = np.empty(nkey + 2, dtype=np.int32)
    got = np.empty(nkey + 2, dtype=np.int64)
    want = np.empty(nkey + 2, dtype=np.int64)
    queries = 0
    violations = 0
    worst = 0
    for e in range(ent_node.shape[0]):
        u = ent_node[e]
        base = ent_exp[e]
        npair = ent_exp[e + 1] - base
        for ln in range(ent_lo[e], ent_hi[e] + 1):
            for beta in range(1, ln):
                cnt, calls = K.ovocc_query(
                    u, beta,
                    num_st, size_st, node_at_st,
                    num_sl, size_sl,
                    ml_pad, ml_bmin, ml_barg, ml_sp, ml_logt,
                    mb_pad, mb_bmin, mb_barg, mb_sp, mb_logt,
                    node_at_sl, depth,
                    bot_ptr, bot_per, bot_a,
                    stack, out_i, out_j,
                )
                queries += 1
                ratio = (1000 * calls) // (cnt + 1)
                if ratio > worst:
                    worst = ratio
                if calls > 8 * (cnt + 1):
                    violations += 1
                k = 0
                while k < npair and exp_gap[base + k] <= beta:
                    k += 1
                if cnt != k:
                    return e, ln, beta, queries, violations, worst
                for x in range(k):
                    got[x] = out_i[x] * nkey + out_j[x]
                    want[x] = exp_key[base + x]
                got[:k].sort()
                want[:k].sort()
                for x in range(k):
                    if got[x] != want[x]:
                        return e, ln, beta, queries, violations, worst
    return -1, -1, -1, queries, violations, worst


def check_ovocc_all(t: Text, idx: OvOccIndex, table: dict[bytes, list[int]], stats: VerifyStats) -> None:
    """Compare every query against the oracle occurrence table."""
    st = idx.st
    n = t.n
    ent_node, ent_lo, ent_hi = [], [], []
    exp_key_parts, exp_gap_parts = [], []
    ent_exp = [0]
    total_entries = 0
    nkey = n + 2
    for v in range(1, st.nodes):
        lo = int(st.depth[st.parent[v]]) + 1
        suf = int(st.leaf_suffix[v])
        hi = (n + 1 - suf) if suf >= 0 else int(st.depth[v])
        if hi < lo:
            continue
        p0 = int(st.pos[v]) - 1
        starts = np.asarray(table[t.raw[p0 : p0 + hi]], dtype=np.int64)
        # one occurrence set serves the whole edge; confirm against the oracle
        for ln in range(lo, hi):
            if table[t.raw[p0 : p0 + ln]] != list(starts):
                stats.failures.append(f"edge occurrence sets differ at node {v} len {ln}")
                return
        total_entries += hi - lo + 1
        gaps = starts[1:] - starts[:-1]
        order = np.argsort(gaps, kind="stable")
        exp_key_parts.append(starts[:-1][order] * nkey + starts[1:][order])
        exp_gap_parts.append(gaps[order])
        ent_node.append(v)
        ent_lo.append(lo)
        ent_hi.append(hi)
        ent_exp.append(ent_exp[-1] + len(gaps))
    if total_entries != len(table):
        stats.failures.append(
            f"edge lengths cover {total_entries} substrings, oracle has {len(table)}"
        )
        return
    e, ln, beta, queries, violations, worst = _bulk_ovocc_check(
        np.asarray(ent_node, dtype=np.int64),
        np.asarray(ent_lo, dtype=np.int64),
        np.asarray(ent_hi, dtype=np.int64),
        np.asarray(ent_exp, dtype=np.int64),
        np.concatenate(exp_key_parts) if exp_key_parts else np.empty(0, np.int64),
        np.concatenate(exp_gap_parts) if exp_gap_parts else np.empty(0, np.int64),
        idx.num_st, idx.size_st, idx.node_at_st,
        idx.num_sl, idx.size_sl,
        *idx._ml_tables,
        *idx._mb_tables,
        idx.node_at_sl, st.depth,
        idx.bot_ptr, idx.bot_per, idx.bot_a,
        nkey,
    )
    stats.queries += queries
    stats.rmq_violations += violations
    stats.max_rmq_per_output = max(stats.max_rmq_per_output, worst / 1000.0)
    if e >= 0:
        v = ent_node[e]
        pat = t.raw[int(st.pos[v]) - 1 :][:ln]
        stats.failures.append(f"ovocc mismatch on {t.raw!r} pattern {pat!r} beta {beta}")


# --------------------------------------------------------------------------
# per-text checks
# --------------------------------------------------------------------------

def check_bounds(t: Text, cst: CoverSuffixTree, stats: VerifyStats) -> None:
    n = t.n
    if len(cst.run_a) > n:
        stats.failures.append(f"{len(cst.run_a)} runs on n={n}")
    if len(cst.sq_i) > n:
        stats.failures.append(f"{len(cst.sq_i)} distinct squares on n={n}")
    if cst.st.nodes > 3 * n + 2:
        stats.failures.append(f"{cst.st.nodes} explicit nodes on n={n}")


def check_runs(t: Text, cst: CoverSuffixTree, stats: VerifyStats) -> None:
    fast = list(zip(cst.run_a.tolist(), cst.run_b.tolist(), cst.run_p.tolist()))
    if fast != oracles.naive_runs(t):
        stats.failures.append(f"run set mismatch on {t.raw!r}")


def check_squares(t: Text, cst: CoverSuffixTree, stats: VerifyStats) -> None:
    if cst.square_half_labels() != oracles.naive_squares(t):
        stats.failures.append(f"distinct square mismatch on {t.raw!r}")


def check_annotations(
    t: Text, cst: CoverSuffixTree, table: dict[bytes, list[int]], stats: VerifyStats
) -> None:
    st = cst.st
    n = t.n
    if not (cst.occ[0] == n + 1 and cst.ov[0] == 0 and cst.nov[0] == n + 1 and cst.cv[0] == 0):
        stats.failures.append(f"root annotation off on {t.raw!r}")
    for v in range(1, st.nodes):
        if st.leaf_suffix[v] >= 0:
            if not (cst.occ[v] == 1 and cst.ov[v] == 0 and cst.nov[v] == 1):
                stats.failures.append(f"leaf annotation off at node {v} on {t.raw!r}")
                return
            continue
        label = t.raw[int(st.pos[v]) - 1 : int(st.pos[v]) - 1 + int(st.depth[v])]
        starts = table[label]
        ov = sum(1 for i, j in zip(starts, starts[1:]) if j < i + len(label))
        cv = oracles.coverage_from_positions(starts, len(label))
        good = (
            cst.occ[v] == len(starts)
            and cst.ov[v] == ov
            and cst.nov[v] == len(starts) - ov
            and cst.cv[v] == cv
        )
        if not good:
            stats.failures.append(f"annotation mismatch at {label!r} on {t.raw!r}")
            return
        if cst.occ[v] != cst.ov[v] + cst.nov[v]:
            stats.failures.append(f"occ != ov+nov at {label!r} on {t.raw!r}")
            return


def check_partial_covers(
    t: Text, cst: CoverSuffixTree, table: dict[bytes, list[int]], stats: VerifyStats
) -> None:
    n = t.n
    best_cv = np.zeros(n + 1, dtype=np.int64)
    for s, starts in table.items():
        c = oracles.coverage_from_positions(starts, len(s))
        if c > best_cv[len(s)]:
            best_cv[len(s)] = c
    running = np.maximum.accumulate(best_cv)
    tab = all_partial_covers(cst)
    for alpha in range(1, n + 1):
        want = int(np.searchsorted(running, alpha))
        ln, frag = tab.entry(alpha)
        if ln != want:
            stats.failures.append(f"APC length mismatch at alpha={alpha} on {t.raw!r}")
            return
        witness = t.raw[frag.start - 1 : frag.end]
        if oracles.coverage_from_positions(table[witness], ln) < alpha:
            stats.failures.append(f"APC witness under-covers at alpha={alpha} on {t.raw!r}")
            return
        rows = shortest_alpha_covers(cst, alpha)
        if not rows or any(l != ln for _, l, _ in rows):
            stats.failures.append(f"alpha-cover length mismatch at alpha={alpha} on {t.raw!r}")
            return
        for _, l, wf in rows:
            wb = t.raw[wf.start - 1 : wf.end]
            if oracles.coverage_from_positions(table[wb], l) < alpha:
                stats.failures.append(f"alpha-cover witness under-covers on {t.raw!r}")
                return


def check_text(data: bytes, stats: VerifyStats | None = None) -> VerifyStats:
    """Run the whole oracle-equivalence suite on one input."""
    if stats is None:
        stats = VerifyStats()
    t = load_text(data)
    cst = CoverSuffixTree(t)
    idx = OvOccIndex(t)
    table = oracles.substring_positions(t)
    check_bounds(t, cst, stats)
    check_runs(t, cst, stats)
    check_squares(t, cst, stats)
    check_annotations(t, cst, table, stats)
    check_partial_covers(t, cst, table, stats)
    check_ovocc_all(t, idx, table, stats)
    stats.texts += 1
    return stats


def run_random_suite(
    count: int, max_n: int, seed: int, sigmas=(2, 3, 4), stop_on_failure: bool = True
) -> VerifyStats:
    """check_text over `count` random inputs with sizes up to max_n."""
    rng = np.random.default_rng(seed)
    stats = VerifyStats()
    for it in range(count):
        n = int(rng.integers(2, max_n + 1))
        sigma = sigmas[it % len(sigmas)]
        data = random_text(rng, n, sigma)
        before = len(stats.failures)
        check_text(data, stats)
        if stop_on_failure and len(stats.failures) > before:
            break
    return stats


def minimize_failure(data: bytes, budget: int = 200) -> bytes:
    """Greedy shrink of a failing input, keeping it failing."""

    def fails(cand: bytes) -> bool:
        if len(cand) == 0:
            return False
        try:
            return not check_text(cand).ok
        except Exception:
            return True

    cur = data
    spent = 0
    improved = True
    while improved and spent < budget:
        improved = False
        half = len(cur) // 2
        for cand in (cur[:half], cur[half:]):
            if len(cand) and spent < budget:
                spent += 1
                if fails(cand):
                    cur = cand
                    improved = True
                    break
        if improved:
            continue
        for k in range(len(cur)):
            if spent >= budget:
                break
            cand = cur[:k] + cur[k + 1 :]
            spent += 1
            if fails(cand):
                cur = cand
                improved = True
                break
    return cur
