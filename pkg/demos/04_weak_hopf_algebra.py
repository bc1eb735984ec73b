"""The weak *-Hopf algebra on graded endomorphisms of essential paths.

Pairs of equal-length essential vectors span the algebra.  The product
concatenates slotwise and projects back to essentials; the coproduct
resolves the middle leg over an orthonormal basis; the antipode swaps and
reverses the legs with a Perron-Frobenius endpoint factor.  All axioms are
checked numerically, and flattening the endpoint factor to 1 visibly breaks
exactly the cancellation axiom.
"""

from pathhopf import (
    PathSpace,
    PathVector,
    antipode,
    coproduct,
    counit,
    element_in_path_coordinates,
    identity,
    load_fixture,
    multiply,
    projector_P,
    star_alg,
    verify_axioms,
)
from pathhopf.cli import format_report


def describe(element, label):
    print(f"{label}:")
    for (pl, pr), z in sorted(element_in_path_coordinates(element).items()):
        left = "-".join(map(str, pl))
        right = "-".join(map(str, pr))
        print(f"  {z.real:+.6f} * ({left}) (x) ({right})")


space = PathSpace(load_fixture("a3"))

# embed elementary pairs and multiply
x = projector_P(space, PathVector.unit((2, 1)), PathVector.unit((1, 2)))
y = projector_P(space, PathVector.unit((1, 2)), PathVector.unit((2, 1)))
describe(multiply(x, y), "(21 (x) 12) . (12 (x) 21)")
print()

one = identity(space)
print("identity has", len(one.coeffs), "terms; x . 1 - x =",
      (multiply(x, one) - x).sup_norm())
print("counit of x . y:", f"{counit(multiply(x, y)).real:.6f}")
print()

describe(antipode(x), "antipode of (21 (x) 12)")
describe(star_alg(x), "star of (21 (x) 12)")
print("coproduct of x has", len(coproduct(x).coeffs), "terms")
print()

# full numeric axiom check on the 34-dimensional chain algebra
report = verify_axioms(space, max_length=2, samples=100, seed=0)
print(format_report(report))
print()

# negative control: a flat endpoint factor must fail the cancellation axiom
broken = verify_axioms(space, 2, samples=30, seed=0, weight_fn=lambda *a: 1.0)
print("with the endpoint factor flattened to 1:")
print(format_report(broken))
