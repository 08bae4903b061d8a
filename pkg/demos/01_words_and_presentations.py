"""Words, free reduction, presentations, and hom counting.

Run:  python demos/01_words_and_presentations.py
"""

from devissage import (GenId, cyclic_presentation, free_presentation,
                       free_product, hom_count, reduce_word, symmetric,
                       word)

a, b = GenId("demo", 0), GenId("demo", 1)

w = word((a, 1), (b, 1), (b, -1), (a, 1))
print("unreduced:", w)
print("reduced:  ", reduce_word(w))
print("w * w^-1 reduces to the identity:", reduce_word(w * w.inverse()).is_identity)

z2 = cyclic_presentation("a", 2)
z3 = cyclic_presentation("b", 3)
print("\nZ/2 =", z2)
print("Z/3 =", z3)

both = free_product(z2, z3)
print("free product:", both)

# Hom counts into a finite probe multiply over free factors.
s3 = symmetric(3)
print("\nhoms(Z/2 -> S3) =", hom_count(z2, s3))
print("homs(Z/3 -> S3) =", hom_count(z3, s3))
print("homs(Z/2 * Z/3 -> S3) =", hom_count(both, s3))

free2 = free_presentation("f", 2)
print("\nhoms(F2 -> S3) = |S3|^2 =", hom_count(free2, s3))
