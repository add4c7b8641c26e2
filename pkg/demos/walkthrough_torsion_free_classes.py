#!/usr/bin/env python3
"""
A guided tour of the two headline classes over the quiver 1 -> 2 <- 3.

Both subcategories live inside the six-indecomposable module category of
the type-A3 path algebra.  F(4312) keeps five of the indecomposables and
behaves classically; F(3412) keeps four, all of which are simple in it,
and unique factorization into simples breaks down.
"""
from jhp_lab import grothendieck, typea
from jhp_lab.symgroup import (
    bruhat_inversions,
    inversions,
    parse_orientation,
    parse_perm,
    support,
)

q = parse_orientation("1>2<3")
print(f"quiver {q}: interval modules M[i,j) indexed by transpositions\n")

for digits in ("4312", "3412"):
    w = parse_perm(digits)
    print(f"== the class of w = {digits}")
    print("   inversions        ", sorted(inversions(w)))
    print("   Bruhat inversions ", sorted(bruhat_inversions(w)))
    print("   support           ", sorted(support(w)))
    mods = sorted(typea.class_of(w, q).modules)
    simples = typea.simples_of(w, q)
    print("   members           ", ", ".join(str(m) for m in mods))
    print("   simple objects    ", ", ".join(str(m) for m in sorted(simples)))
    verdict = typea.jhp_verdict(w, q)
    print(f"   unique factorization into simples: {verdict}")

    report = grothendieck.report(grothendieck.typea_torsionfree(w, q))
    print(f"   monoid atoms {len(report.atoms)}, completed rank {report.k0_rank},"
          f" torsion {report.k0_torsion}")
    if not verdict:
        pres = report.presentation
        print("   the offending identification:")
        for u, v in pres.relations:
            if sum(u) == 2 and sum(v) == 2:
                print(f"     [{pres.format_word(u)}] = [{pres.format_word(v)}]")
                break
    print()

print("Across all fourteen classes of this quiver the count is:")
total, jhp, faithful = typea.census(q)
print(f"  {total} torsion-free classes, {jhp} with unique factorization,"
      f" {faithful} faithful ones among those")
