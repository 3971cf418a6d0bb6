import numpy as np

from coverst import verify
from coverst.bench import make_input, time_build


def test_run_random_suite_clean():
    stats = verify.run_random_suite(count=25, max_n=40, seed=123)
    assert stats.ok and stats.texts == 25
    assert stats.queries > 0 and stats.rmq_violations == 0


def test_minimize_failure_no_failure_returns_input():
    assert verify.minimize_failure(b"abcab") == b"abcab"


def test_minimize_failure_shrinks(monkeypatch):
    def fake_check(data, stats=None):
        s = verify.VerifyStats() if stats is None else stats
        if b"ab" in data:
            s.failures.append("planted")
        return s

    monkeypatch.setattr(verify, "check_text", fake_check)
    small = verify.minimize_failure(b"xxxabyyy")
    assert small == b"ab"


def test_make_input_families():
    assert make_input("unary", 5) == b"aaaaa"
    fib = make_input("fibonacci", 13)
    assert fib == b"abaababaabaab"
    assert make_input("fibonacci", 8) == fib[:8]  # prefixes of one infinite word
    r1 = make_input("random", 64, seed=4)
    assert r1 == make_input("random", 64, seed=4)
    assert set(r1) <= {ord("a"), ord("b")}


def test_time_build_reports_phases():
    total, phases = time_build(make_input("random", 3000), repeats=1)
    assert total > 0
    assert {"suffix_tree", "runs", "squares", "counters"} <= set(phases)
    assert sum(phases.values()) <= total * 1.05
