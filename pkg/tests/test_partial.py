import numpy as np
import pytest

from coverst import all_partial_covers, load_text, shortest_alpha_covers
from coverst.covertree import CoverSuffixTree
from coverst.oracles import (
    coverage_from_positions,
    naive_all_partial_covers,
    naive_coverage,
    substring_positions,
)

from conftest import random_bytes


def test_fig_profile(fig_cst):
    table = all_partial_covers(fig_cst)
    lengths = [table.entry(a)[0] for a in range(1, 19)]
    assert lengths == [1] * 14 + [5, 16, 17, 18]


def test_unary_profile():
    cst = CoverSuffixTree(load_text(b"aaaa"))
    table = all_partial_covers(cst)
    assert [table.entry(a)[0] for a in range(1, 5)] == [1, 1, 1, 1]
    assert all(
        cst.text.raw[f.start - 1 : f.end] == b"a"
        for f in (table.entry(a)[1] for a in range(1, 5))
    )


def test_table_against_oracle_and_witnesses():
    rng = np.random.default_rng(71)
    for _ in range(25):
        n = int(rng.integers(2, 200))
        t = load_text(random_bytes(rng, n, int(rng.integers(1, 4))))
        cst = CoverSuffixTree(t)
        table = all_partial_covers(cst)
        want = naive_all_partial_covers(t)
        lengths = [table.entry(a)[0] for a in range(1, n + 1)]
        assert lengths == want
        assert all(b >= a for a, b in zip(lengths, lengths[1:]))  # monotone
        for alpha in range(1, n + 1):
            ln, frag = table.entry(alpha)
            assert frag.length == ln and frag.end <= n
            assert naive_coverage(t, t.raw[frag.start - 1 : frag.end]) >= alpha


def test_alpha_witnesses_fig(fig_cst):
    rows = shortest_alpha_covers(fig_cst, 15)
    t = fig_cst.text
    words = {t.raw[f.start - 1 : f.end] for _, _, f in rows}
    assert all(ln == 5 for _, ln, _ in rows)
    assert b"aabaa" in words
    rows = shortest_alpha_covers(fig_cst, 14)
    assert [(ln, t.raw[f.start - 1 : f.end]) for _, ln, f in rows] == [(1, b"a")]


def test_alpha_witness_sets_match_oracle():
    rng = np.random.default_rng(73)
    for _ in range(15):
        n = int(rng.integers(2, 100))
        t = load_text(random_bytes(rng, n, 2))
        cst = CoverSuffixTree(t)
        table = substring_positions(t)
        cov = {s: coverage_from_positions(pos, len(s)) for s, pos in table.items()}
        apc = all_partial_covers(cst)
        for alpha in range(1, n + 1):
            best = min(len(s) for s, c in cov.items() if c >= alpha)
            want = {s for s, c in cov.items() if c >= alpha and len(s) == best}
            rows = shortest_alpha_covers(cst, alpha)
            got = {t.raw[f.start - 1 : f.end] for _, _, f in rows}
            assert all(ln == best for _, ln, _ in rows)
            assert got == want
            assert apc.entry(alpha)[0] == best


def test_branching_or_suffix_domination():
    # every substring is dominated by a same-length branching substring or
    # suffix, which is what lets the table scan only branching nodes
    rng = np.random.default_rng(79)
    for _ in range(10):
        n = int(rng.integers(2, 40))
        t = load_text(random_bytes(rng, n, 2))
        table = substring_positions(t)
        best_any = {}
        best_bs = {}
        for s, starts in table.items():
            c = coverage_from_positions(starts, len(s))
            best_any[len(s)] = max(best_any.get(len(s), 0), c)
            followers = {
                t.raw[i + len(s) - 1] if i + len(s) - 1 < n else -1 for i in starts
            }
            is_suffix = starts[-1] + len(s) - 1 == n
            if len(followers) >= 2 or is_suffix:
                best_bs[len(s)] = max(best_bs.get(len(s), 0), c)
        assert best_any == best_bs


def test_alpha_out_of_range(fig_cst):
    with pytest.raises(ValueError):
        shortest_alpha_covers(fig_cst, 0)
    with pytest.raises(ValueError):
        shortest_alpha_covers(fig_cst, fig_cst.text.n + 1)
