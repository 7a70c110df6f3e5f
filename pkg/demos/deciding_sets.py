"""Deciding whether sets of square roots can be rationalized.

A substitution x -> phi(t) rationalizes sqrt(f) when f(phi) becomes a
perfect square.  For a whole set of square roots one substitution must work
simultaneously; the decision reduces to the geometric genus of the curve
generated by all the roots together.  This script walks through three
families with three different outcomes.
"""

from sqrat import decide_set, parse_expr, subset_criterion


def show(family):
    rads = [parse_expr(text) for text in family]
    verdict = decide_set(rads)
    passes, failing = subset_criterion(rads)
    print(f"family: {{{', '.join('sqrt(' + t + ')' for t in family)}}}")
    print(f"  genus {verdict.genus}, lattice rank {verdict.rank}, "
          f"{verdict.branch_count} branch points")
    print(f"  verdict: {verdict.status.replace('_', ' ')}")
    if failing is not None:
        subset = " * ".join(f"({family[i]})" for i in failing)
        print(f"  already the subset product {subset} has squarefree "
              "degree > 2, so no substitution can exist")
    if verdict.witness is not None:
        print(f"  witness: x -> {verdict.witness.phi.to_str('t')}")
        for text, root in zip(family, verdict.witness.roots):
            print(f"    sqrt({text}) -> {root.to_str('t')}")
    print()


# Any two linear radicands work: genus 0, and the greedy construction finds
# an explicit substitution.
show(["x-1", "x-2"])

# Three distinct linear radicands never work: the triple cover has genus 1.
show(["x", "x-1", "x-2"])

# But the three pairwise products of linear factors do work: the third
# square root is (up to 1/x) the product of the first two, so the lattice
# has rank 2 and the compositum curve has genus 0.
show(["x^2-x", "x^2-2*x", "x^2-3*x+2"])

# A scaled family where the subset criterion pinpoints the obstruction.
show(["x", "4*x+1", "x^2-4*x"])
