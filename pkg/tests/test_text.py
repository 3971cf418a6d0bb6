import numpy as np
import pytest

from coverst import Fragment, fragment_equal, load_text

from conftest import FIG_TEXT, random_bytes


def test_load_text_examples():
    t = load_text(b"aaaa")
    assert list(t.sym[1:]) == [1, 1, 1, 1, 0]
    assert t.n == 4 and t.sigma == 1

    t = load_text(b"ab")
    assert list(t.sym[1:]) == [1, 2, 0]
    assert t.sigma == 2

    t = load_text(b"ba")
    assert list(t.sym[1:]) == [2, 1, 0]  # rank preserves byte order


def test_load_text_rejects_empty():
    with pytest.raises(ValueError, match="empty text"):
        load_text(b"")


def test_roundtrip_binary_safe():
    rng = np.random.default_rng(1)
    for _ in range(20):
        raw = bytes(rng.integers(0, 256, int(rng.integers(1, 200))).astype(np.uint8))
        t = load_text(raw)
        assert t.render() == raw
        assert t.sym[t.n + 1] == 0
        assert np.all(t.sym[1 : t.n + 1] >= 1)
        # every rank in 1..sigma occurs
        assert set(np.unique(t.sym[1 : t.n + 1])) == set(range(1, t.sigma + 1))


def test_fragment_equal_examples():
    t = load_text(FIG_TEXT)
    assert fragment_equal(t, Fragment(3, 6), Fragment(9, 12))  # both "abaa"
    assert fragment_equal(t, Fragment(5, 9), Fragment(5, 9))
    t2 = load_text(b"ab")
    assert not fragment_equal(t2, Fragment(1, 1), Fragment(2, 2))


def test_fragment_validation():
    t = load_text(b"abc")
    with pytest.raises(ValueError):
        Fragment(0, 2)
    with pytest.raises(ValueError):
        Fragment(3, 2)
    with pytest.raises(ValueError):
        fragment_equal(t, Fragment(1, 5), Fragment(1, 1))
    # position n+1 (the sentinel) is addressable
    assert fragment_equal(t, Fragment(4, 4), Fragment(4, 4))


def test_fragment_equal_matches_symbol_scan():
    rng = np.random.default_rng(7)
    for _ in range(10):
        n = int(rng.integers(2, 64))
        t = load_text(random_bytes(rng, n, 2))
        frags = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i, n + 1)
        ]
        rng.shuffle(frags)
        for (i1, j1), (i2, j2) in zip(frags[:200], frags[1:201]):
            want = list(t.sym[i1 : j1 + 1]) == list(t.sym[i2 : j2 + 1])
            assert fragment_equal(t, Fragment(i1, j1), Fragment(i2, j2)) == want
