"""Pin the oracle values that other suites rely on."""

import pytest

from coverst import load_text
from coverst.oracles import (
    naive_all_partial_covers,
    naive_consecutive,
    naive_coverage,
    naive_ovocc,
    naive_runs,
    naive_squares,
)

from conftest import FIG_TEXT


@pytest.fixture(scope="module")
def fig():
    return load_text(FIG_TEXT)


def test_naive_coverage(fig):
    assert naive_coverage(fig, b"aabaa") == 15
    assert naive_coverage(fig, b"abaabaa") == 10
    assert naive_coverage(load_text(b"aaaa"), b"aa") == 4


def test_naive_consecutive(fig):
    _, ov, nov = naive_consecutive(fig, b"aa")
    assert (ov, nov) == (4, 5)
    _, ov, nov = naive_consecutive(load_text(b"abab"), b"ab")
    assert (ov, nov) == (0, 2)
    pairs, ov, nov = naive_consecutive(load_text(b"aaa"), b"aa")
    assert pairs == [(1, 2)] and (ov, nov) == (1, 1)


def test_naive_runs():
    assert naive_runs(load_text(b"ababababab")) == [(1, 10, 2)]
    assert naive_runs(load_text(b"aaaa")) == [(1, 4, 1)]
    rs = naive_runs(load_text(FIG_TEXT))
    assert rs == [(1, 3, 1), (2, 12, 3), (5, 6, 1), (8, 9, 1), (8, 17, 4), (11, 13, 1), (15, 18, 1)]


def test_naive_squares(fig):
    assert naive_squares(fig) == {b"a", b"aa", b"aab", b"aaba", b"aba", b"abaa", b"baa", b"baaa"}
    assert naive_squares(load_text(b"ab")) == set()
    assert naive_squares(load_text(b"aaaa")) == {b"a", b"aa"}


def test_naive_all_partial_covers(fig):
    lengths = naive_all_partial_covers(fig)
    assert lengths == [1] * 14 + [5, 16, 17, 18]
    assert naive_all_partial_covers(load_text(b"xyz"))[0] == 1  # alpha=1 is a single symbol


def test_naive_ovocc(fig):
    assert naive_ovocc(fig, b"aa", 1) == {(1, 2), (11, 12), (15, 16), (16, 17)}
    assert naive_ovocc(fig, b"abaa", 3) == {(3, 6), (6, 9)}
    with pytest.raises(ValueError):
        naive_ovocc(fig, b"aa", 2)
