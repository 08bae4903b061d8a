"""Probing a presented group through its finite actions.

Hom fingerprints are the package's stand-in for isomorphism tests (equal
fingerprints are necessary, not sufficient), and transitive actions up to
conjugation count connected covers of the classifying object.

Run:  python demos/02_probing_groups.py
"""

from devissage import (count_transitive_actions, cyclic, cyclic_presentation,
                       enumerate_homs, fingerprint, free_presentation,
                       free_product, symmetric, verify_hom)

z2 = cyclic_presentation("a", 2)
probes = [symmetric(2), symmetric(3), cyclic(4)]

print("fingerprint of Z/2 over", [str(p) for p in probes], "=",
      fingerprint(z2, probes).counts)

homs = enumerate_homs(z2, symmetric(3))
print("homs(Z/2 -> S3):", [h.image(z2.generators[0]) for h in homs])
print("all verified:", all(verify_hom(h) for h in homs))

# Connected covers of a wedge of two circles = transitive F2-actions.
f2 = free_presentation("f", 2)
print("\nconnected degree-d covers of the figure eight (d = 1..5):",
      [count_transitive_actions(f2, d) for d in range(1, 6)])

# Z/2 has no transitive action on more than two points.
print("transitive Z/2-actions by degree (d = 1..4):",
      [count_transitive_actions(z2, d) for d in range(1, 5)])

# Z/2 * Z: the group of a nodal curve with a Z/2 component.
z2_star_z = free_product(z2, free_presentation("x", 1))
print("connected covers of Z/2 * Z (d = 1..4):",
      [count_transitive_actions(z2_star_z, d) for d in range(1, 5)])
