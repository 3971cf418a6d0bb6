"""Build the cover suffix tree of a small text and read its annotations.

Every substring of the text corresponds to a node of the tree (explicit
or implicit on an edge). Explicit nodes carry:

  occ  - number of occurrences,
  ov   - overlapping consecutive occurrence pairs,
  nov  - occ - ov (one plus the non-overlapping consecutive pairs),
  cv   - how many text positions its occurrences cover.

Square halves (U with UU a substring) get their own explicit nodes, which
is exactly what makes coverage queries for arbitrary substrings possible.
"""

from coverst import load_text
from coverst.covertree import CoverSuffixTree

TEXT = b"aaabaabaabaaabaaaa"

t = load_text(TEXT)
cst = CoverSuffixTree(t)
st = cst.st

print(f"text: {TEXT.decode()}  (n = {t.n}, sigma = {t.sigma})")
print(f"suffix-tree nodes: {st.plain_nodes}, after square insertion: {st.nodes}")
print(f"runs: {len(cst.run_a)}, distinct squares: {len(cst.sq_i)}")

print("\nsquare halves made explicit:")
print("  " + " ".join(sorted(s.decode() for s in cst.square_half_labels())))

print("\nannotations of all internal nodes (occ, ov, nov, cv):")
for v in range(1, st.nodes):
    if st.leaf_suffix[v] >= 0:
        continue
    lab = st.label_bytes(v).decode()
    star = "*" if cst.is_square[v] else " "
    print(
        f"  {lab:<10s}{star} occ={int(cst.occ[v]):>2d} ov={int(cst.ov[v]):>2d}"
        f" nov={int(cst.nov[v]):>2d} cv={int(cst.cv[v]):>2d}"
    )

# Implicit nodes sit on edges; their coverage follows from the child node:
# cv(u) = cv(v) - (|v| - |u|) * nov(v).
v, exact = cst.locate(b"abaabaa")
print(f"\ncv(abaabaa) = {int(cst.cv[v])}")
print(f"cv(abaaba)  = {cst.cv_at_depth(v, 6)}   (one symbol shorter, same edge)")
