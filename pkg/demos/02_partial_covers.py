"""Shortest partial covers: the smallest substring covering >= alpha positions.

A substring C is an alpha-partial cover of T if the occurrences of C cover
at least alpha text positions. The annotated cover tree answers the whole
family alpha = 1..n in linear time; a brute-force check over every distinct
substring confirms the profile here.
"""

from coverst import all_partial_covers, load_text, shortest_alpha_covers
from coverst.covertree import CoverSuffixTree
from coverst.oracles import naive_all_partial_covers, naive_coverage

TEXT = b"aaabaabaabaaabaaaa"

t = load_text(TEXT)
cst = CoverSuffixTree(t)
table = all_partial_covers(cst)

print(f"text: {TEXT.decode()}")
print("\nalpha -> shortest alpha-partial cover:")
prev = None
for alpha in range(1, t.n + 1):
    ln, frag = table.entry(alpha)
    word = t.raw[frag.start - 1 : frag.end].decode()
    if ln != prev:
        print(f"  alpha={alpha:>2d}  length={ln:>2d}  e.g. {word}")
        prev = ln

assert [table.entry(a)[0] for a in range(1, t.n + 1)] == naive_all_partial_covers(t)
print("\nprofile matches the brute-force scan over all distinct substrings")

alpha = 15
rows = shortest_alpha_covers(cst, alpha)
print(f"\nall shortest {alpha}-partial covers:")
for _, ln, frag in rows:
    word = t.raw[frag.start - 1 : frag.end]
    print(f"  {word.decode()}  (length {ln}, covers {naive_coverage(t, word)} positions)")
