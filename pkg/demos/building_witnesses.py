"""Constructing explicit rationalizing substitutions and checking them.

The greedy construction kills one square root at a time: a class of degree
one is squared away by a shift substitution, a class of degree two by a
conic parametrization; the composed substitution is then pushed through
the remaining radicands.  Every returned witness is verified symbolically,
and constant leftovers (squares over C but not over Q) are reported as
defects rather than hidden.
"""

from fractions import Fraction

from sqrat import (
    Witness,
    greedy_rationalize,
    parse_expr,
    substitute,
    verify_witness,
)
from sqrat.poly import RatFunc, UPoly


def show(texts):
    fam = [parse_expr(t) for t in texts]
    w = greedy_rationalize(fam)
    print(f"family {{{', '.join('sqrt(' + t + ')' for t in texts)}}}:")
    if w is None:
        print("  no witness found (and indeed none exists here)")
        print()
        return
    print(f"  x -> {w.phi.to_str('t')}")
    for t, root, d in zip(texts, w.roots, w.defects):
        note = "" if d == 1 else f"   [defect {d}: square over C only]"
        print(f"  sqrt({t}) -> {root.to_str('t')}{note}")
    ok, defects = verify_witness(fam, w)
    print(f"  verified: {ok}, defects: {defects}")
    print()


show(["x-1", "x-2"])
show(["x", "1-x"])
show(["x", "x-1", "x-2"])   # genus 1: no witness can exist
show(["5", "x"])            # the constant 5 leaves a defect over Q

# The textbook witness for {sqrt(x), sqrt(1-x)}: a single phi with
#   phi(x)   = (2t/(1+t^2))^2
#   phi(1-x) = ((1-t^2)/(1+t^2))^2
T = UPoly.x()
phi = RatFunc(2 * T, T * T + 1) ** 2
fam = [parse_expr("x"), parse_expr("1-x")]
w = Witness(phi=phi,
            roots=(RatFunc(2 * T, T * T + 1),
                   RatFunc(1 - T * T, T * T + 1)),
            defects=(Fraction(1), Fraction(1)))
print("textbook witness for {sqrt(x), sqrt(1-x)} verifies:",
      verify_witness(fam, w)[0])
print("  phi(1-x) =", substitute(fam[1], phi).to_str("t"))

# A miscopied variant (2t^2/(1+t^2) instead of 2t/(1+t^2)) breaks the
# commuting condition; the verifier catches it.
bad_phi = RatFunc(2 * T * T, T * T + 1) ** 2
bad = Witness(phi=bad_phi,
              roots=(RatFunc(2 * T * T, T * T + 1),
                     RatFunc(1 - T * T, T * T + 1)),
              defects=(Fraction(1), Fraction(1)))
print("miscopied variant verifies:", verify_witness(fam, bad)[0])
