"""Pointed categories from group data.

Objects are the elements of a finite group G, each object carries the
scalar group Z/N as its endomorphisms, and the associator is a
function omega on object triples.  Which omega are admissible is not
decided by a formula: the generic pentagon checker is the judge.
"""

import skelcat as sc

# The simplest nontrivial example: two objects, scalars Z/2.
spec = sc.PointedSpec(sc.cyclic_group(2), 2, {})
M = sc.pointed_category(spec)
print("C(Z/2, 0, N=2):", M.category.n_objects, "objects,",
      len(M.category.mor_src), "morphisms")
print("pentagon + triangle:", sc.check_monoidal(M).passed)

# The same category also admits a nontrivial associator.
M_twisted = sc.pointed_category(
    sc.PointedSpec(sc.cyclic_group(2), 2, {(1, 1, 1): 1}))
print("omega(1,1,1)=1 accepted:", sc.check_monoidal(M_twisted).passed)

# With scalars Z/4 the pentagon only allows the values 0 and 2.
try:
    sc.pointed_category(sc.PointedSpec(sc.cyclic_group(2), 4, {(1, 1, 1): 1}))
except sc.SkelcatError as exc:
    print("omega(1,1,1)=1 over Z/4 rejected:", exc)

# Exhaustive enumeration, pentagon-checker filtered.
for n in (1, 2, 3):
    for N in (2, 3, 4):
        omegas = sc.enumerate_cocycles(sc.cyclic_group(n), N)
        print(f"admissible associators on Z/{n} with N={N}: {len(omegas)}")

# Braidings on top of an associator, hexagon-checker filtered.
for N in (2, 3, 4):
    cs = sc.enumerate_braidings(sc.cyclic_group(3), N, {})
    print(f"braidings on C(Z/3, 0, N={N}): {len(cs)}")

# Derived unit triangles hold for free on every valid instance.
B = sc.pointed_braided(sc.PointedSpec(
    sc.cyclic_group(3), 3, {},
    {(g, h): (g * h) % 3 for g in range(3) for h in range(3)}))
print("braiding hexagons:", sc.check_braided(B).passed)
print(sc.derived_laws_suite(B).pretty())
