import numpy as np
import pytest

from coverst import load_text
from coverst.covertree import CoverSuffixTree
from coverst.oracles import (
    naive_consecutive,
    naive_coverage,
    naive_runs,
    naive_squares,
    occurrences,
    substring_positions,
)

from conftest import random_bytes


def label(cst, v):
    return cst.st.label_bytes(int(v))


def test_structure_fig(fig_cst):
    want = {b"a", b"aa", b"aab", b"aaba", b"aba", b"abaa", b"baa", b"baaa"}
    assert fig_cst.square_half_labels() == want
    for lab in want:
        node = fig_cst.node_of_label(lab)
        assert node is not None and fig_cst.is_square[node]


def test_structure_unary_adds_no_nodes():
    cst = CoverSuffixTree(load_text(b"aaaa"))
    assert cst.st.nodes == 9 == cst.st.plain_nodes


def test_structure_matches_square_set():
    rng = np.random.default_rng(43)
    for _ in range(30):
        n = int(rng.integers(2, 200))
        t = load_text(random_bytes(rng, n, int(rng.integers(1, 4))))
        cst = CoverSuffixTree(t)
        assert cst.square_half_labels() == naive_squares(t)
        assert cst.st.nodes <= 3 * n + 2
        # splitting kept edges consistent
        for v in range(1, cst.st.nodes):
            assert cst.st.depth[v] > cst.st.depth[cst.st.parent[v]]


def test_occ_examples(fig_cst):
    assert fig_cst.occ[fig_cst.node_of_label(b"aa")] == 9
    assert fig_cst.occ[0] == fig_cst.text.n + 1
    leaves = np.where(fig_cst.st.leaf_suffix >= 0)[0]
    assert np.all(fig_cst.occ[leaves] == 1)


def test_counter_examples_unary():
    cst = CoverSuffixTree(load_text(b"aaaa"))
    aaa = cst.node_of_label(b"aaa")
    aa = cst.node_of_label(b"aa")
    a = cst.node_of_label(b"a")
    assert cst.c_lower_unit[aaa] == 1
    assert cst.c_lower_unit[aa] == 1
    assert cst.c_upper_unit[a] == 2  # the self-loop walk visits 'a' twice
    lo, up = cst.run_counters("unit")
    assert lo is cst.c_lower_unit and up is cst.c_upper_unit
    lo, up = cst.run_counters("period")
    assert lo is cst.c_lower_per and up is cst.c_upper_per
    with pytest.raises(ValueError):
        cst.run_counters("squared")


def test_counters_match_per_run_enumeration():
    rng = np.random.default_rng(47)
    for _ in range(25):
        n = int(rng.integers(2, 200))
        t = load_text(random_bytes(rng, n, 2))
        cst = CoverSuffixTree(t)
        upper: dict[bytes, list[int]] = {}
        lower: dict[bytes, list[int]] = {}
        for a, b, p in zip(cst.run_a, cst.run_b, cst.run_p):
            for i in range(a, b - 2 * p + 1):
                upper.setdefault(t.raw[i - 1 : i - 1 + p], []).append(p)
                lower.setdefault(t.raw[i - 1 : b - p], []).append(p)
        for v in range(cst.st.nodes):
            lab = label(cst, v)
            assert cst.c_upper_unit[v] == len(upper.get(lab, []))
            assert cst.c_upper_per[v] == sum(upper.get(lab, []))
            assert cst.c_lower_unit[v] == len(lower.get(lab, []))
            assert cst.c_lower_per[v] == sum(lower.get(lab, []))


def test_rotation_graph_fig(fig_cst):
    cst = fig_cst
    node = {label(cst, v): int(v) for v in cst.sq_node}
    nxt = cst.rot_next
    assert nxt[node[b"a"]] == node[b"a"]  # self-loop
    assert nxt[node[b"aab"]] == node[b"aba"]
    assert nxt[node[b"aba"]] == node[b"baa"]
    assert nxt[node[b"baa"]] == node[b"aab"]
    assert cst.rot_kind[node[b"aab"]] == 1
    comp = cst.rot_comp[node[b"aab"]]
    size = cst.rot_comp_ptr[comp + 1] - cst.rot_comp_ptr[comp]
    assert size == 3
    assert nxt[node[b"aaba"]] == node[b"abaa"]
    assert nxt[node[b"abaa"]] == node[b"baaa"]
    assert cst.rot_kind[node[b"aaba"]] == 0


def test_rotation_arcs_are_rotations():
    rng = np.random.default_rng(53)
    for _ in range(25):
        n = int(rng.integers(2, 200))
        t = load_text(random_bytes(rng, n, 2))
        cst = CoverSuffixTree(t)
        for v in cst.sq_node:
            w = cst.rot_next[int(v)]
            if w >= 0:
                lv, lw = label(cst, int(v)), label(cst, int(w))
                assert lw == lv[1:] + lv[:1]
                assert cst.is_square[w]


def test_annotations_fig(fig_cst):
    cst = fig_cst
    for lab, cv, nov in [
        (b"a", 14, 14), (b"aa", 14, 5), (b"aaa", 10, 3),
        (b"aabaa", 15, 1), (b"abaabaa", 10, 1),
    ]:
        v = cst.node_of_label(lab)
        assert (cst.cv[v], cst.nov[v]) == (cv, nov)
    assert np.all(cst.occ == cst.ov + cst.nov)


def test_annotations_unary():
    cst = CoverSuffixTree(load_text(b"aaaa"))
    aa = cst.node_of_label(b"aa")
    assert (cst.ov[aa], cst.nov[aa], cst.cv[aa]) == (2, 1, 4)


def test_annotations_match_oracle():
    rng = np.random.default_rng(59)
    for _ in range(20):
        n = int(rng.integers(2, 120))
        t = load_text(random_bytes(rng, n, int(rng.integers(1, 4))))
        cst = CoverSuffixTree(t)
        for v in range(1, cst.st.nodes):
            if cst.st.leaf_suffix[v] >= 0:
                assert (cst.occ[v], cst.ov[v], cst.nov[v]) == (1, 0, 1)
                continue
            lab = label(cst, v)
            _, ov, nov = naive_consecutive(t, lab)
            assert cst.occ[v] == len(occurrences(t, lab))
            assert (cst.ov[v], cst.nov[v]) == (ov, nov)
            assert cst.cv[v] == naive_coverage(t, lab)


def test_cv_at_depth(fig_cst):
    cst = fig_cst
    v = cst.node_of_label(b"abaabaa")
    assert cst.cv_at_depth(v, 6) == 9
    assert cst.cv_at_depth(v, 7) == cst.cv[v]
    with pytest.raises(ValueError):
        cst.cv_at_depth(v, 3)  # below the edge into "abaabaa"
    with pytest.raises(ValueError):
        cst.cv_at_depth(v, 8)


def test_cv_at_depth_matches_naive_everywhere():
    rng = np.random.default_rng(61)
    for _ in range(12):
        n = int(rng.integers(2, 80))
        t = load_text(random_bytes(rng, n, 2))
        cst = CoverSuffixTree(t)
        st = cst.st
        for v in range(1, st.nodes):
            lo = int(st.depth[st.parent[v]]) + 1
            suf = int(st.leaf_suffix[v])
            hi = (n + 1 - suf) if suf >= 0 else int(st.depth[v])
            for ln in range(lo, hi + 1):
                lab = t.raw[int(st.pos[v]) - 1 : int(st.pos[v]) - 1 + ln]
                assert cst.cv_at_depth(v, ln) == naive_coverage(t, lab)


def test_locate(fig_cst):
    cst = fig_cst
    v, exact = cst.locate(b"aabaa")
    assert exact and (cst.cv[v], cst.nov[v]) == (15, 1)
    v, exact = cst.locate(b"abaaba")
    assert not exact and label(cst, v) == b"abaabaa"
    assert cst.locate(b"abc") is None
    assert cst.locate(b"aaaab") is None


def test_triangle_characterization():
    # every overlapping consecutive occurrence pair (i, i+per R) appears in
    # exactly one run triangle, and nothing else does
    rng = np.random.default_rng(67)
    for _ in range(10):
        n = int(rng.integers(2, 60))
        t = load_text(random_bytes(rng, n, 2))
        runs = naive_runs(t)
        table = substring_positions(t)
        for s, starts in table.items():
            d = len(s)
            want = sorted(
                (i, j) for i, j in zip(starts, starts[1:]) if j < i + d
            )
            got = []
            for a, b, p in runs:
                for i in range(a, b - 2 * p + 1):
                    if p < d <= b - p - i + 1 and t.raw[i - 1 : i - 1 + d] == s:
                        got.append((i, i + p))
            assert sorted(got) == want


def check_lower_paths(cst):
    t = cst.text
    for a, b, p in zip(cst.run_a, cst.run_b, cst.run_p):
        if b - 2 * p < a:
            continue
        nodes = []
        for i in range(a, b - 2 * p + 1):
            hit = cst.locate(t.raw[i - 1 : b - p])
            assert hit is not None and hit[1]
            nodes.append(hit[0])
        for u, v in zip(nodes, nodes[1:]):
            assert cst.st.suflink[u] == v


def test_lower_sets_form_suffix_link_paths(fig_cst):
    check_lower_paths(fig_cst)
    rng = np.random.default_rng(101)
    for _ in range(10):
        n = int(rng.integers(4, 150))
        check_lower_paths(CoverSuffixTree(load_text(random_bytes(rng, n, 2))))
