#!/usr/bin/env python3
"""
The counterexample gallery, recomputed from scratch.

Each scene exhibits one way classical module-theoretic intuition fails in
a mere extension-closed subcategory: subobject posets without meets,
objects with composition series of different lengths, and monoids where
a + x = a + y without x = y.
"""
from jhp_lab import grothendieck, regress, repkit, typea
from jhp_lab.symgroup import parse_orientation, parse_perm


def scene(title):
    print(f"\n== {title}")


scene("vector spaces of dimension != 1: k^6 factors two ways")
E = repkit.Membership.dims_only(
    (repkit.Rep(repkit.PresentedAlgebra(1, (), ()), (1,), ()),),
    lambda d: d[0] != 1,
    labels=("k",),
)
X = repkit.Rep(repkit.PresentedAlgebra(1, (), ()), (6,), ())
report = repkit.series_analysis(X, E)
for labels in sorted(report.factor_labels):
    print("   k^6 =", " + ".join(labels))
print("   lengths:", sorted(report.lengths))

scene("dimensions != 1,3: two 4-dimensional subobjects with no meet")
ok, detail = regress.check_nonlattice()
print("  ", detail if ok else "(FAILED)")

scene("a torsion-free class where lengths differ")
q = parse_orientation("1<2<3>4")
w = parse_perm("53241")
E = typea.torsion_free_membership(w, q)
X = typea.interval_rep(typea.IntervalModule(1, 5, q))
report = repkit.series_analysis(X, E)
print("   composition series of M[1,5):")
for labels in sorted(report.factor_labels):
    print("     0 < ... <", " + ".join(labels))

scene("four simple objects, rank-two completed group")
loop = grothendieck.report(
    grothendieck.abstract_source(
        regress.LOOP_ALGEBRA_PRESENTATION, label="loop-algebra class", grade_bound=6
    )
)
print("   atoms:", ", ".join(loop.atoms))
print("   completed rank:", loop.k0_rank)
a, x, y = loop.certificate
print(f"   cancellation fails: [{a}]+[{x}] = [{a}]+[{y}], [{x}] != [{y}]")

scene("the Kronecker class over the two-element field")
demo = grothendieck.kronecker_demo(3)
print("   one-parameter classes:", ", ".join(sorted(demo.regular_labels)))
for lhs, rhs in sorted(demo.projective_relations):
    print(f"   [{lhs}] = [{rhs}]")
print("   three distinct sums with one value: not cancellative")
