"""Bounded-gap overlapping occurrence queries from a linear-size index.

Given a substring S and a gap bound beta < |S|, the index reports every
consecutive occurrence pair (i, j) of S with j - i <= beta. Such pairs
always overlap, and each one is induced by a run (maximal repetition)
whose period equals the gap, which is what the index exploits: the work
per query is proportional to the number of reported pairs, not to the
number of occurrences of S.
"""

from coverst import build_ovocc_index, load_text
from coverst.oracles import naive_ovocc, occurrences

TEXT = b"aaabaabaabaaabaaaa"

t = load_text(TEXT)
idx = build_ovocc_index(t)

print(f"text: {TEXT.decode()}")
for pattern in (b"aa", b"abaa", b"aabaa"):
    occ = occurrences(t, pattern)
    print(f"\npattern {pattern.decode()!r}: occurrences at {occ}")
    for beta in range(1, len(pattern)):
        res = idx.query(pattern, beta)
        pairs = sorted(res.pairs())
        assert set(pairs) == naive_ovocc(t, pattern, beta)
        print(f"  beta={beta}: {pairs}  ({res.rmq_calls} RMQ probes)")

# the RMQ probe count tracks the output size, not the text or pattern
res = idx.query(b"a" * 2, 1)
print(f"\noutput-sensitivity: {len(res)} pairs reported with {res.rmq_calls} probes")
