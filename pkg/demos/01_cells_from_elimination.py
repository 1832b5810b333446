#!/usr/bin/env python3
"""From Gaussian elimination to the cell decomposition.

Eliminating an invertible matrix with upper triangular row and column
operations leaves a permutation matrix: which permutation cannot be changed,
and that invariant cuts the group into double cosets.  This script factors a
few matrices, then tiles all of GL_3(F_2) by its six cells.
"""

from collections import Counter

from bruhatkit import GF, QQ, ExactMatrix, bruhat_cell_rank_profile, bruhat_decompose
from bruhatkit.cells import cell_order
from bruhatkit.exact import enumerate_matrices
from bruhatkit.weyl import GroupSpec

# --- a rational example -----------------------------------------------------

g = ExactMatrix(QQ, [["1/2", 3, 1], [2, 1, 0], [4, 0, 0]])
fact = bruhat_decompose(g)
print("matrix:")
print(g)
print(f"\ncell: w = {list(fact.w.window)}  (length {fact.w.length()}, "
      f"reduced word {list(fact.w.reduced_word())})")
print("b1 =", fact.b1.entries)
print("b2 =", fact.b2.entries)
assert fact.product() == g
print("b1 * w_rep * b2 reconstructs g exactly\n")

# the rank-profile oracle recovers the same permutation without elimination
assert bruhat_cell_rank_profile(g) == fact.w
print("rank-profile oracle agrees:", list(bruhat_cell_rank_profile(g).window))

# --- lower triangular matrices sit in the big cell of GL_2 ------------------

lower = ExactMatrix(GF(2), [[1, 0], [1, 1]])
print("\n[[1,0],[1,1]] over GF(2) lies in cell", list(bruhat_decompose(lower).w.window))

# --- tiling GL_3(F_2) -------------------------------------------------------

field = GF(2)
counts = Counter()
for m in enumerate_matrices(field, 3):
    if m.det() != 0:
        counts[bruhat_decompose(m).w] += 1

print("\nGL_3(F_2) tiled by cells (|cell| = 2^l(w) * |B|, |B| = 8):")
for w in sorted(counts, key=lambda w: (w.length(), w.window)):
    print(f"  w = {list(w.window)}  length {w.length()}  size {counts[w]}")
    assert counts[w] == cell_order(w, 2)
print("total:", sum(counts.values()), "= |GL_3(F_2)| = 168")

# every w of S_3 appears
assert set(counts) == set(GroupSpec("A", 2).elements())
