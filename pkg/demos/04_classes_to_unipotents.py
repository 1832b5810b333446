#!/usr/bin/env python3
"""The map from Weyl-group classes to unipotent classes, combinatorially.

Type A: cycle types map to equal Jordan types, so the map is the identity on
partitions.  Type C: push a signed permutation into the symmetric group on
2n letters and read off its cycle type; the image is always a symplectic
partition (odd parts with even multiplicity), and those are exactly the
Jordan types of symplectic unipotent matrices.
"""

from bruhatkit import GroupSpec, conjugacy_classes, map_i, map_j_image, phi, phi_table

# --- type A: the identity map ---------------------------------------------------

print("S_4 classes map to GL_4 unipotent classes by cycle type:")
for row in phi_table(GroupSpec("A", 3)):
    print(f"  cycle type {row.cls.label}  ->  Jordan type {row.image.jordan_type}")

# --- type C: through the embedding ----------------------------------------------

c2 = GroupSpec("BC", 2)
print("\nW(C_2) classes, embedded into S_4:")
for cls in conjugacy_classes(c2):
    lam, mu = cls.label
    w = cls.representative
    embedded = w.embed_in_symmetric()
    print(f"  ({lam}; {mu})  rep {str(w):>8}  ->  {list(embedded.window)}"
          f"  cycle type {map_i(cls)}  elliptic={cls.elliptic}")

print("\nsymplectic partitions of 4:", sorted(p.parts for p in map_j_image(2)))
image = {tuple(phi(c).jordan_type.parts) for c in conjugacy_classes(c2)}
print("image of the five classes:  ", sorted(image), "(all of them: surjective)")

# two classes share the image (2,2); only one of them is elliptic
for cls in conjugacy_classes(c2):
    if tuple(phi(cls).jordan_type.parts) == (2, 2):
        lam, mu = cls.label
        print(f"  ({lam}; {mu}) -> (2,2), elliptic={cls.elliptic}")
print("restricted to elliptic classes the map becomes injective")

# --- larger ranks, same facts -----------------------------------------------------

for n in (3, 4, 5):
    classes = conjugacy_classes(GroupSpec("BC", n))
    assert {map_i(c) for c in classes} == map_j_image(n)
    elliptic = [phi(c).jordan_type for c in classes if c.elliptic]
    assert len(set(elliptic)) == len(elliptic)
print("\nimage coincidence and elliptic injectivity hold through rank 5")
