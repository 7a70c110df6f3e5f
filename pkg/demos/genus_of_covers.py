"""How the genus computations work, from branch data alone.

Everything is Riemann-Hurwitz on exact ramification data: no plane-curve
desingularization, no factorization over Q.  A gcd-free basis of the
radicands' numerators and denominators gives every radicand an exact
valuation vector; parities of those vectors over GF(2) are all the cover
geometry needs.
"""

from sqrat import (
    CoverSpec,
    branch_count,
    build_branch_table,
    cyclic_cover_genus,
    hyperelliptic_genus,
    lattice_rank,
    multiquadratic_genus,
    parse_expr,
    superelliptic_genus_closed_form,
)

# -- a multiquadratic cover ---------------------------------------------------

family = [parse_expr(t) for t in ("x", "4*x+1", "x^2-4*x")]
table = build_branch_table(family)
print("radicands:", ", ".join(str(f) for f in family))
print("gcd-free basis:", ", ".join(str(b) for b in table.basis))
print("parity rows (last column = place at infinity):")
for f, row in zip(family, table.parity):
    print(f"  {str(f):12s} {row}")

summary = branch_count(table)
r = lattice_rank(table)
print(f"rank r = {r}  (the cover has degree 2^r = {2**r})")
print(f"branch points B = {summary.branch_count} "
      f"(infinity ramified: {summary.infinity_ramified})")
# each branch point has 2^(r-1) preimages of ramification index 2:
# 2g - 2 = 2^r * (-2) + B * 2^(r-1)
print("genus =", multiquadratic_genus(family))
print()

# -- hyperelliptic covers -----------------------------------------------------

for text in ("x-1", "(x-1)*(x-2)*(x-3)", "x^2*(x-1)"):
    f = parse_expr(text)
    print(f"z^2 = {text}: genus {hyperelliptic_genus(f)}")
print()

# -- cyclic covers ------------------------------------------------------------

f = parse_expr("x*(x-1)*(x-2)")
print(f"z^3 = {f}: genus {cyclic_cover_genus(CoverSpec(f, 3))}")
print(f"z^2 = x*(x-1): genus "
      f"{cyclic_cover_genus(CoverSpec(parse_expr('x*(x-1)'), 2))}")
print()

# The closed form (e-1)(s-2)/2 in terms of the exponent pattern agrees with
# Riemann-Hurwitz when all exponents are coprime to e, but is returned
# verbatim and can even be half-integral outside that range; Riemann-Hurwitz
# stays the authority.
print("closed form for exponents (1,1,1), e=3:",
      superelliptic_genus_closed_form((1, 1, 1), 3))
print("closed form for exponents (1,1,2), e=4:",
      superelliptic_genus_closed_form((1, 1, 2), 4),
      "(not an integer: outside the formula's reliable domain)")
f = parse_expr("x*(x-1)") * parse_expr("(x-2)^2")
print("Riemann-Hurwitz for the matching curve:",
      cyclic_cover_genus(CoverSpec(f, 4)))
