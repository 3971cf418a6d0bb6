import numpy as np

from coverst import compute_runs, enumerate_distinct_squares, load_text
from coverst.oracles import naive_runs, naive_squares, occurrences

from conftest import FIG_TEXT, random_bytes


def triples(runs):
    return [(r.a, r.b, r.p) for r in runs]


def test_runs_examples():
    assert triples(compute_runs(load_text(b"aaaa"))) == [(1, 4, 1)]
    # run of exponent 2.8 spanning the whole string
    rs = triples(compute_runs(load_text(b"abcdeabcdeabcd")))
    assert (1, 14, 5) in rs
    # exponent-5 run
    rs = triples(compute_runs(load_text(b"ababababab")))
    assert (1, 10, 2) in rs


def test_runs_fig_text(fig_text):
    rs = triples(compute_runs(fig_text))
    assert (2, 12, 3) in rs and (8, 17, 4) in rs
    assert rs == [(1, 3, 1), (2, 12, 3), (5, 6, 1), (8, 9, 1), (8, 17, 4), (11, 13, 1), (15, 18, 1)]


def test_runs_match_oracle():
    rng = np.random.default_rng(31)
    for _ in range(40):
        n = int(rng.integers(2, 200))
        sigma = int(rng.integers(1, 4))
        t = load_text(random_bytes(rng, n, sigma))
        rs = triples(compute_runs(t))
        assert rs == naive_runs(t)
        assert len(rs) <= n


def test_run_definition_holds_on_every_reported_run():
    rng = np.random.default_rng(37)
    for _ in range(20):
        n = int(rng.integers(4, 150))
        t = load_text(random_bytes(rng, n, 2))
        sym = t.sym
        for r in compute_runs(t):
            assert 2 * r.p <= r.length and r.exponent >= 2
            assert all(sym[i] == sym[i + r.p] for i in range(r.a, r.b - r.p + 1))
            # p is the smallest period
            for q in range(1, r.p):
                assert any(sym[i] != sym[i + q] for i in range(r.a, r.b - q + 1))
            assert r.a == 1 or sym[r.a - 1] != sym[r.a - 1 + r.p]
            assert r.b == t.n or sym[r.b + 1] != sym[r.b + 1 - r.p]


def test_distinct_squares_examples(fig_text):
    runs = compute_runs(fig_text)
    sqs = enumerate_distinct_squares(fig_text, runs)
    halves = {fig_text.raw[s.i - 1 : s.i - 1 + s.d] for s in sqs}
    assert halves == {b"a", b"aa", b"aab", b"aaba", b"aba", b"abaa", b"baa", b"baaa"}

    t = load_text(b"aaaa")
    sqs = enumerate_distinct_squares(t, compute_runs(t))
    assert {t.raw[s.i - 1 : s.i - 1 + s.d] for s in sqs} == {b"a", b"aa"}


def test_distinct_squares_match_oracle():
    rng = np.random.default_rng(41)
    for _ in range(40):
        n = int(rng.integers(2, 200))
        t = load_text(random_bytes(rng, n, int(rng.integers(1, 4))))
        sqs = enumerate_distinct_squares(t, compute_runs(t))
        halves = [t.raw[s.i - 1 : s.i - 1 + s.d] for s in sqs]
        assert len(halves) == len(set(halves))  # one occurrence per square
        assert set(halves) == naive_squares(t)
        assert len(halves) <= n
        for s in sqs:
            assert t.raw[s.i - 1 : s.i - 1 + s.d] == t.raw[s.i - 1 + s.d : s.i - 1 + 2 * s.d]
            # canonical occurrence is the leftmost one in the text
            assert s.i == occurrences(t, t.raw[s.i - 1 : s.i - 1 + s.d] * 2)[0]
