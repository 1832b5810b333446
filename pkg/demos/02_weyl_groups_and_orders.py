#!/usr/bin/env python3
"""Weyl groups as signed permutations: lengths, classes, group orders.

The length generating polynomial of W factors through the invariant degrees,
and the same degrees give the order of the matrix group over any finite
field.  Both identities are checked here by brute enumeration.
"""

from bruhatkit import GroupSpec, chevalley_order, conjugacy_classes, gl_order, poincare_polynomial
from bruhatkit.weyl import poincare_from_degrees

# --- windows, lengths, reduced words ----------------------------------------

c2 = GroupSpec("BC", 2)
print(f"W(C_2): order {c2.order()}, degrees {c2.degrees()}")
for w in c2.elements():
    word = " ".join(f"s{i}" for i in w.reduced_word()) or "e"
    print(f"  {str(w):>9}  length {w.length()}  = {word}")

w0 = c2.longest_element()
print(f"longest element {w0}, length {w0.length()} = number of positive roots\n")

# --- the length generating function -----------------------------------------

for spec in [GroupSpec("A", 2), c2, GroupSpec("D", 4)]:
    enumerated = poincare_polynomial(spec)
    closed = poincare_from_degrees(spec)
    assert enumerated == closed
    print(f"{spec}: sum_w q^l(w) = {enumerated}")
    print(f"      matches prod (q^d - 1)/(q - 1) over degrees {spec.degrees()}")

# --- conjugacy classes with their minimal lengths ----------------------------

print("\nclasses of W(C_2): (positive cycles; negative cycles)")
for cls in conjugacy_classes(c2):
    lam, mu = cls.label
    print(f"  ({lam}; {mu})  size {cls.size}  d_C {cls.min_length}  elliptic {cls.elliptic}")

# --- Chevalley orders ---------------------------------------------------------

print("\nmatrix group orders from the degrees:")
print("  |GL_3(F_2)|  =", gl_order(3, 2))
print("  |SL_3(F_2)|  =", chevalley_order(GroupSpec("A", 2), 2))
print("  |Sp_4(F_3)|  =", chevalley_order(c2, 3))
assert chevalley_order(c2, 3) == 51840
