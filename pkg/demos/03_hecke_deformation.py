#!/usr/bin/env python3
"""The Iwahori-Hecke algebra: a q-deformation of the Weyl group algebra.

T-basis products follow the cell structure: multiplying by a generator
either moves up in length or splits into the (q-1), q combination.  At q=1
everything collapses back onto the group algebra.
"""

import itertools

from bruhatkit import GroupSpec, hecke_mul, specialize, t_basis
from bruhatkit.hecke import group_algebra_product

s3 = GroupSpec("A", 2)
s1, s2 = s3.generators()

# --- the defining relation ----------------------------------------------------

print("T_s1 * T_s1 =", hecke_mul(t_basis(s1), t_basis(s1)))
print("T_s1 * T_s2 =", hecke_mul(t_basis(s1), t_basis(s2)))

# braid compatibility: both sides are T_{w0}
left = hecke_mul(hecke_mul(t_basis(s1), t_basis(s2)), t_basis(s1))
right = hecke_mul(t_basis(s2), hecke_mul(t_basis(s1), t_basis(s2)))
assert left == right == t_basis(s3.longest_element())
print("T_s1 T_s2 T_s1 = T_s2 T_s1 T_s2 = T_[3,2,1]")

# --- a full 6x6 multiplication table at q = 1 ---------------------------------

print("\nspecializing every product at q = 1 reproduces S_3 exactly:")
elements = list(s3.elements())
for a, b in itertools.product(elements, repeat=2):
    collapsed = specialize(hecke_mul(t_basis(a), t_basis(b)), 1)
    assert collapsed == group_algebra_product({a: 1}, {b: 1}) == {a * b: 1}
print("checked all", len(elements) ** 2, "products")

# --- and a glimpse of the generic structure ------------------------------------

w0 = s3.longest_element()
print("\nT_w0 * T_w0 =", hecke_mul(t_basis(w0), t_basis(w0)))
print("(evaluating those coefficients at q=1 would give the single term T_e)")
