"""Coherence reports and what a broken component looks like.

Every checker evaluates both legs of each diagram over the whole index
space and reports the first violating tuple.  Reports never stop at
the first bad diagram, so a mutation's footprint is fully visible.
"""

import skelcat as sc

c = {(g, h): (g * h) % 3 for g in range(3) for h in range(3)}
V = sc.pointed_braided(sc.PointedSpec(sc.cyclic_group(3), 3, {}, c))
M = V.base

print("pristine monoidal report:")
print(sc.check_monoidal(M).pretty())

# Perturb one associator component within its hom-set.
a = dict(M.a)
hom = M.category.hom(M.category.mor_src[a[(1, 1, 1)]],
                     M.category.mor_dst[a[(1, 1, 1)]])
a[(1, 1, 1)] = hom[(hom.index(a[(1, 1, 1)]) + 1) % len(hom)]
broken = sc.MonoidalData(M.category, M.tensor, M.unit, a, M.l, M.r, True)

print("\nafter perturbing a[1,1,1]:")
report = sc.check_monoidal(broken)
print(report.pretty())

# The counterexample re-evaluates by hand: both legs genuinely differ.
entry = report.entry("pent.a")
u, v, w, x = entry.counterexample
cat, ob, tm = M.category, M.tensor.obj_map, M.tensor.mor_map
from skelcat.fincat import chain
lhs = chain(cat, [tm[(a[(u, v, w)], cat.identity[x])],
                  a[(u, ob[(v, w)], x)],
                  tm[(cat.identity[u], a[(v, w, x)])]])
rhs = chain(cat, [a[(ob[(u, v)], w, x)], a[(u, v, ob[(w, x)])]])
print(f"\nlegs at {entry.counterexample}: {lhs} vs {rhs}")

# The same game through the seeded fuzzer on a whole bundle.
from skelcat.bundle import BundleBuilder
b = BundleBuilder("demo")
b.add_braided("V", V)
bundle = b.build()
mutant, descriptor = sc.mutate(bundle, seed=5)
print("\nmutation:", descriptor)
for kind, name, rep in sc.run_suite(mutant, "all"):
    for e in rep.failing():
        print(f"  detected by {kind} {name}: {e.diagram} at {e.counterexample}")
