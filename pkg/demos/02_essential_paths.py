"""Path space, ladder operators, and essential paths.

Walks of a fixed length form an orthonormal basis.  The annihilation
operator c_i collapses a back-and-forth excursion at position i with a
Perron-Frobenius weight; its adjoint c_i† inserts one, summed over
neighbors.  Essential paths are the vectors every c_i kills; for the
three-vertex chain there are exactly ten of them.
"""

import math

from pathhopf import (
    PathSpace,
    PathVector,
    essential_basis,
    format_path,
    inner_product,
    is_essential,
    load_fixture,
)

space = PathSpace(load_fixture("a3"))

print("walks of length 2:", [format_path(p) for p in space.enumerate_paths(2)])
print()

# one back-and-forth excursion is not essential
x = PathVector.unit((0, 1, 0))
print("c_0 (0-1-0) =", space.annihilate(0, x))
print("is (0-1-0) essential?", is_essential(space, x))

# the antisymmetric round-trip combination is
gamma = PathVector(2, {(1, 2, 1): 1 / math.sqrt(2), (1, 0, 1): -1 / math.sqrt(2)})
print("is (121)-(101) combination essential?", is_essential(space, gamma))
print()

# c_i c_i† = beta, the defining contraction
y = space.annihilate(0, space.create(0, PathVector.unit((0,))))
print("c_0 c_0† (0) =", y, " (beta =", f"{space.beta:.6f})")
print()

# the Temperley-Lieb-Jones projections e_i = c_i† c_i / beta satisfy
# e_i e_{i±1} e_i = e_i / beta^2
z = PathVector.unit((0, 1, 2, 1))
lhs = space.tlj(0, space.tlj(1, space.tlj(0, z)))
rhs = space.tlj(0, z) * (1 / space.beta**2)
print("braid relation residual:", (lhs - rhs).sup_norm())
print()

print("essential dimensions by length:")
for n in range(4):
    basis = essential_basis(space, n)
    print(f"  length {n}: dimension {len(basis)}")
    for a, xi in enumerate(basis.vectors):
        s, r = basis.endpoints[a]
        terms = " + ".join(f"{c.real:+.6f} {format_path(p)}" for p, c in xi.terms())
        print(f"    [{a}] {s}->{r}: {terms}")

total = sum(len(essential_basis(space, n)) for n in range(3))
print("total essential paths on the chain:", total)

# orthonormality across the whole basis
basis2 = essential_basis(space, 2)
gram = [
    [abs(inner_product(u, v)) for v in basis2.vectors] for u in basis2.vectors
]
print("length-2 Gram matrix:", gram)
