"""Brute-force reference implementations used as test oracles.

Everything here works directly on the raw bytes / symbol array of a
Text and is deliberately kept free of any code shared with the fast
pipeline. Intended for n up to a few hundred.
"""

from __future__ import annotations

import numpy as np

from .text import Text


def occurrences(t: Text, s: bytes) -> list[int]:
    """All 1-based starts of s in T[1..n], by repeated byte scanning."""
    if len(s) == 0 or len(s) > t.n:
        return []
    res = []
    at = t.raw.find(s)
    while at != -1:
        res.append(at + 1)
        at = t.raw.find(s, at + 1)
    return res


def naive_coverage(t: Text, s: bytes) -> int:
    """Number of text positions lying inside at least one occurrence of s."""
    covered = np.zeros(t.n + 2, dtype=bool)
    for i in occurrences(t, s):
        covered[i : i + len(s)] = True
    return int(covered.sum())


def naive_consecutive(t: Text, s: bytes):
    """Consecutive occurrence pairs of s plus the (ov, nov) split.

    Returns (pairs, ov, nov): pairs are all (i, j) of adjacent
    occurrences, ov counts the overlapping ones (j < i + |s|) and
    nov = occ - ov.
    """
    occ = occurrences(t, s)
    pairs = list(zip(occ, occ[1:]))
    ov = sum(1 for i, j in pairs if j < i + len(s))
    return pairs, ov, len(occ) - ov


def naive_runs(t: Text) -> list[tuple[int, int, int]]:
    """All runs (a, b, p) of T, sorted by (a, p).

    For each period p, maximal intervals of the self-comparison mask
    sym[i] == sym[i+p] give the maximal p-periodic stretches; a stretch
    is a run iff its length is >= 2p and no smaller period survives on
    the same interval.
    """
    sym = t.sym[1 : t.n + 1]
    n = t.n
    candidates = []
    for p in range(1, n // 2 + 1):
        eq = sym[: n - p] == sym[p:]
        i = 0
        while i < n - p:
            if eq[i]:
                j = i
                while j < n - p and eq[j]:
                    j += 1
                a = i + 1
                b = j + p
                if b - a + 1 >= 2 * p:
                    candidates.append((a, b, p))
                i = j
            i += 1
    runs = []
    for a, b, p in candidates:
        seg = sym[a - 1 : b]
        minimal = True
        for q in range(1, p):
            if np.array_equal(seg[: len(seg) - q], seg[q:]):
                minimal = False
                break
        if minimal:
            runs.append((a, b, p))
    runs.sort(key=lambda r: (r[0], r[2]))
    return runs


def naive_squares(t: Text) -> set[bytes]:
    """The distinct square halves of T, as raw byte strings."""
    halves = set()
    raw = t.raw
    for d in range(1, t.n // 2 + 1):
        for i in range(t.n - 2 * d + 1):
            if raw[i : i + d] == raw[i + d : i + 2 * d]:
                halves.add(raw[i : i + d])
    return halves


def substring_positions(t: Text) -> dict[bytes, list[int]]:
    """Occurrence lists of every distinct substring of T, keyed by bytes."""
    table: dict[bytes, list[int]] = {}
    raw = t.raw
    for ln in range(1, t.n + 1):
        for i in range(t.n - ln + 1):
            table.setdefault(raw[i : i + ln], []).append(i + 1)
    return table


def coverage_from_positions(starts: list[int], ln: int) -> int:
    """Covered-position count from a sorted occurrence list."""
    total = 0
    for k, i in enumerate(starts):
        if k + 1 < len(starts):
            total += min(ln, starts[k + 1] - i)
        else:
            total += ln
    return total


def naive_all_partial_covers(t: Text) -> list[int]:
    """Length of a shortest alpha-partial cover for every alpha in 1..n."""
    best_cv = np.zeros(t.n + 1, dtype=np.int64)  # best coverage per length
    for s, starts in substring_positions(t).items():
        c = coverage_from_positions(starts, len(s))
        if c > best_cv[len(s)]:
            best_cv[len(s)] = c
    running = np.maximum.accumulate(best_cv)
    lengths = []
    for alpha in range(1, t.n + 1):
        lengths.append(int(np.searchsorted(running, alpha)))
    return lengths


def naive_ovocc(t: Text, s: bytes, beta: int) -> set[tuple[int, int]]:
    """Consecutive occurrences (i, j) of s with j - i <= beta."""
    if not 1 <= beta < len(s):
        raise ValueError("beta must satisfy 1 <= beta < |s|")
    pairs, _, _ = naive_consecutive(t, s)
    return {(i, j) for i, j in pairs if j - i <= beta}
