"""Ranked text and positioned substrings.

All public positions are 1-based and inclusive. A text of length n is
stored as integer ranks with a unique sentinel 0 appended at position
n+1; the sentinel is strictly smaller than every real symbol, so the
full-suffix leaf always sits at a deterministic place in lexicographic
structures.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SENTINEL = 0


@dataclass(frozen=True)
class Fragment:
    """A positioned substring [start..end], both ends inclusive."""

    start: int
    end: int

    def __post_init__(self):
        if self.start < 1 or self.end < self.start:
            raise ValueError(f"invalid fragment ({self.start},{self.end})")

    @property
    def length(self) -> int:
        return self.end - self.start + 1


class Text:
    """A byte string remapped to ranks 1..sigma plus the sentinel.

    Attributes:
        raw: the original bytes.
        n: number of real symbols (the sentinel is not counted).
        sigma: alphabet size after ranking.
        sym: int32 array of length n+2; sym[i] is the rank at 1-based
            position i, sym[n+1] == 0 is the sentinel, sym[0] is unused.
    """

    __slots__ = ("raw", "n", "sigma", "sym", "_byte_rank")

    def __init__(self, raw: bytes):
        if len(raw) == 0:
            raise ValueError("empty text")
        self.raw = bytes(raw)
        self.n = len(raw)
        buf = np.frombuffer(self.raw, dtype=np.uint8)
        values = np.unique(buf)
        self.sigma = int(len(values))
        byte_rank = np.full(256, -1, dtype=np.int32)
        byte_rank[values] = np.arange(1, self.sigma + 1, dtype=np.int32)
        self._byte_rank = byte_rank
        sym = np.zeros(self.n + 2, dtype=np.int32)
        sym[1 : self.n + 1] = byte_rank[buf]
        self.sym = sym

    def render(self) -> bytes:
        """The original bytes (inverse of load_text)."""
        return self.raw

    def check_fragment(self, frag: Fragment) -> None:
        if frag.end > self.n + 1:
            raise ValueError(f"fragment {frag} out of range for n={self.n}")

    def fragment_bytes(self, frag: Fragment) -> bytes:
        """Raw bytes of a fragment; the sentinel position is rendered as b'#'."""
        self.check_fragment(frag)
        if frag.end <= self.n:
            return self.raw[frag.start - 1 : frag.end]
        return self.raw[frag.start - 1 : self.n] + b"#"

    def encode(self, pattern: bytes) -> np.ndarray | None:
        """Map pattern bytes to ranks, or None if a byte never occurs in the text."""
        if len(pattern) == 0:
            return np.empty(0, dtype=np.int32)
        buf = np.frombuffer(bytes(pattern), dtype=np.uint8)
        ranks = self._byte_rank[buf]
        if np.any(ranks < 0):
            return None
        return ranks.astype(np.int32)


def load_text(raw: bytes) -> Text:
    """Build a Text from raw bytes; the ranking preserves byte order."""
    return Text(raw)


def fragment_equal(t: Text, f1: Fragment, f2: Fragment) -> bool:
    """True iff the two fragments match, i.e. have the same symbol content."""
    t.check_fragment(f1)
    t.check_fragment(f2)
    if f1.length != f2.length:
        return False
    a = t.sym[f1.start : f1.end + 1]
    b = t.sym[f2.start : f2.end + 1]
    return bool(np.array_equal(a, b))
