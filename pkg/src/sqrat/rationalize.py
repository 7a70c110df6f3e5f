"""Constructing and verifying explicit rationalizing substitutions.

A witness for a family of radicands is a single nonconstant substitution
x -> phi(t) such that every radicand becomes a perfect square, together
with the square roots themselves.  Construction is greedy: repeatedly pick
a radicand whose current square class has degree at most 2, kill it with a
linear or conic parametrization, push the substitution through the rest,
and repeat.  When no class of degree <= 2 remains, one round of lattice
reduction replaces the working family by reduced generators before giving
up.  The greedy construction is deliberately incomplete: the decision
module stays authoritative, and a genus zero family may still come back
as unknown here.

Constants are squares over C but not always over Q; such leftovers are
recorded as constant defects on the witness, never silently accepted.

The module also computes the minimal polynomial of the sum of the square
roots of independent generators by iterated Sylvester resultants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DegenerateSumError,
    DependentGeneratorsError,
    EmptyFamilyError,
    NoRationalPointFoundError,
    WrongDegreeError,
    ZeroRadicandError,
)
from .lattice import (
    build_branch_table,
    lattice_rank,
    reduced_generators_scaled,
)
from .poly import (
    RatFunc,
    SquareOverC,
    SquareOverQ,
    UPoly,
    fraction_sqrt,
    is_square,
    square_class,
    squarefree_part,
    substitute,
)
from .resultants import (
    ZPoly,
    clear_denominators_monic,
    resultant_with_quadratic,
    zp_is_monic,
    zp_is_squarefree_in_z,
    zpoly,
)

CONIC_SEARCH_HEIGHT = 100


@dataclass(frozen=True)
class Witness:
    """A rationalizing substitution with one square root per radicand.

    substitute(f_i, phi) equals defects[i] * roots[i]^2 exactly; an entry 1
    in defects means the i-th radicand becomes a square over Q, anything
    else is a non-square rational constant (a square over C only).
    """

    phi: RatFunc
    roots: tuple[RatFunc, ...]
    defects: tuple[Fraction, ...]

    @property
    def has_defects(self) -> bool:
        return any(d != 1 for d in self.defects)


def _class_rep(f: RatFunc) -> tuple[Fraction, UPoly]:
    """Constant and monic squarefree part: f = c * g * h^2."""
    c, g, _ = square_class(f)
    return c, g


def rationalize_linear(f: RatFunc | UPoly) -> RatFunc:
    """Substitution sending a class-degree-1 radicand to a perfect square.

    With f = c*(x + b)*h^2 the image x -> (t^2 - c*b)/c maps the scaled
    representative c*x + c*b to t^2, hence f itself to a square over Q.
    """
    f = RatFunc(f) if isinstance(f, UPoly) else f
    c, g = _class_rep(f)
    if g.degree != 1:
        raise WrongDegreeError("squarefree class must have degree 1")
    b = g.coeff(0)
    t2 = UPoly((0, 0, 1))
    return RatFunc(t2 - UPoly.constant(c * b), UPoly.constant(c))


def rationalize_conic(f: RatFunc | UPoly) -> RatFunc:
    """Parametrize a class-degree-2 radicand so it becomes a square over Q.

    Writing the scaled class representative as R = a*x^2 + b*x + c, tries
    in order:

      1. a is a square s^2 in Q: lines through the point at infinity,
         x -> (t^2 - c) / (b - 2 s t);
      2. R has a rational root r (with conjugate r'):
         lines through (r, 0), x -> (r t^2 - a r') / (t^2 - a);
      3. bounded search for a rational point (x0, z0) on z^2 = R with
         numerator and denominator heights <= 100, then lines through it:
         x -> (x0 t^2 - 2 z0 t + a x0 + b) / (t^2 - a).

    Raises NoRationalPointFoundError when the search is exhausted.  Over C
    a parametrization always exists; the decision module, not this one, is
    the authority on rationalizability.
    """
    f = RatFunc(f) if isinstance(f, UPoly) else f
    cc, g = _class_rep(f)
    if g.degree != 2:
        raise WrongDegreeError("squarefree class must have degree 2")
    a = cc
    b = cc * g.coeff(1)
    c = cc * g.coeff(0)

    sub = None
    s = fraction_sqrt(a)
    if s is not None:
        sub = RatFunc(UPoly((-c, 0, 1)), UPoly((b, -2 * s)))
    else:
        p, q = g.coeff(1), g.coeff(0)
        disc_root = fraction_sqrt(p * p - 4 * q)
        if disc_root is not None:
            r = (-p + disc_root) / 2
            r_conj = (-p - disc_root) / 2
            sub = RatFunc(UPoly((-a * r_conj, 0, r)), UPoly((-a, 0, 1)))
        else:
            point = _search_rational_point(a, b, c)
            if point is None:
                raise NoRationalPointFoundError(
                    f"no rational point of height <= {CONIC_SEARCH_HEIGHT} "
                    "on the conic"
                )
            x0, z0 = point
            sub = RatFunc(UPoly((a * x0 + b, -2 * z0, x0)), UPoly((-a, 0, 1)))
    rep = RatFunc(UPoly((c, b, a)))
    if not isinstance(is_square(substitute(rep, sub)), SquareOverQ):
        raise RuntimeError("conic parametrization failed to square the class")
    return sub


def _search_rational_point(a: Fraction, b: Fraction, c: Fraction,
                           height: int = CONIC_SEARCH_HEIGHT):
    """First rational (x0, z0) with z0^2 = a x0^2 + b x0 + c, by height."""
    from math import gcd

    for h in range(1, height + 1):
        candidates = [(p, h) for p in range(-h, h + 1)]
        candidates += [(h, q) for q in range(1, h)]
        candidates += [(-h, q) for q in range(1, h)]
        for p, q in candidates:
            if gcd(abs(p), q) != 1:
                continue
            x0 = Fraction(p, q)
            z0 = fraction_sqrt(a * x0 * x0 + b * x0 + c)
            if z0 is not None:
                return x0, z0
    return None


def greedy_rationalize(radicands: Sequence[RatFunc | UPoly]) -> Witness | None:
    """Sequentially rationalize a family; None means unknown, never a lie.

    Picks the remaining radicand of smallest class degree (ties by index),
    requires that degree to be 1 or 2, composes the step substitution into
    the accumulated one and transforms the rest.  If every remaining class
    has degree > 2 the family is replaced once by its reduced generators;
    if that does not help, or a conic step finds no rational point, gives
    up.  A returned witness has been verified symbolically.
    """
    rads = _validated(radicands)
    phi = RatFunc.x()
    targets = list(rads)
    reduced_already = False
    while True:
        live = []
        for i, g in enumerate(targets):
            d = squarefree_part(g).degree
            if d >= 1:
                live.append((d, i))
        if not live:
            break
        attackable = [(d, i) for d, i in live if d <= 2]
        if not attackable:
            if reduced_already:
                return None
            reduced_already = True
            table = build_branch_table([targets[i] for _, i in live])
            targets = [RatFunc(g) for g in reduced_generators_scaled(table)]
            continue
        d, i = min(attackable)
        try:
            step = rationalize_linear(targets[i]) if d == 1 else rationalize_conic(targets[i])
        except NoRationalPointFoundError:
            return None
        phi = substitute(phi, step)
        targets = [substitute(g, step) for g in targets]
        reduced_already = False
    roots = []
    defects = []
    for f in rads:
        result = is_square(substitute(f, phi))
        if isinstance(result, SquareOverQ):
            roots.append(result.root)
            defects.append(Fraction(1))
        elif isinstance(result, SquareOverC):
            roots.append(result.root)
            defects.append(result.defect)
        else:
            return None  # soundness guard; greedy must not fabricate
    witness = Witness(phi=phi, roots=tuple(roots), defects=tuple(defects))
    ok, _ = verify_witness(rads, witness)
    if not ok:
        raise RuntimeError("greedy produced a witness that fails verification")
    return witness


def verify_witness(radicands: Sequence[RatFunc | UPoly],
                   witness: Witness) -> tuple[bool, list[tuple[int, Fraction]]]:
    """Check a witness symbolically.

    Accepted iff for every i the ratio substitute(f_i, phi) / roots[i]^2 is
    a constant; ratios different from 1 are returned as (index, defect)
    pairs, marking the witness as valid over C only.  No exceptions: this
    is a verification result.
    """
    rads = _validated(radicands)
    if len(rads) != len(witness.roots):
        return False, []
    defects: list[tuple[int, Fraction]] = []
    for i, f in enumerate(rads):
        image = substitute(f, witness.phi)
        root = witness.roots[i]
        if root.is_zero:
            if image.is_zero:
                continue
            return False, []
        ratio = image / (root * root)
        if not ratio.is_constant:
            return False, []
        d = ratio.as_fraction
        if d != 1:
            defects.append((i, d))
    return True, defects


def _validated(radicands: Sequence[RatFunc | UPoly]) -> list[RatFunc]:
    if len(radicands) == 0:
        raise EmptyFamilyError("the radicand family is empty")
    out = []
    for f in radicands:
        if isinstance(f, UPoly):
            f = RatFunc(f)
        if f.is_zero:
            raise ZeroRadicandError("zero radicand in the family")
        out.append(f)
    return out


# -- primitive element minimal polynomial ------------------------------------


@dataclass(frozen=True)
class MinPoly:
    """Monic minimal polynomial of sum(sqrt(f_i)) over the generator list."""

    poly: ZPoly
    generators: tuple[RatFunc, ...]

    @property
    def degree(self) -> int:
        return len(self.poly) - 1


def minpoly_multiquadratic(generators: Sequence[RatFunc | UPoly]) -> MinPoly:
    """Iterated-resultant minimal polynomial of the sum of square roots.

    Rational generators are first replaced by polynomial ones of the same
    square class by clearing denominators of z^2 - f.  Requires the
    generators' classes to be independent in the square-class lattice; the
    result is monic of degree 2^m with roots exactly the sums of the square
    roots over all sign choices, and is rejected if two sign choices
    collide (a degenerate primitive element).
    """
    rads = _validated(generators)
    polys: list[UPoly] = []
    for f in rads:
        if f.den.is_one:
            polys.append(f.num)
        else:
            cleared, _ = clear_denominators_monic([-f, RatFunc(0), RatFunc(1)])
            polys.append(-cleared[0])
    table = build_branch_table(polys)
    rank = lattice_rank(table)
    if rank < len(polys):
        relation = _dependency_relation(table)
        raise DependentGeneratorsError(
            "generators are dependent modulo squares"
            + (f" (relation among indices {relation})" if relation else ""),
            relation=relation,
        )
    p: ZPoly = zpoly([-polys[0], UPoly.zero(), UPoly.one()])
    for f in polys[1:]:
        p = resultant_with_quadratic(p, f)
    if not zp_is_monic(p) or len(p) - 1 != 2 ** len(polys):
        raise RuntimeError("resultant iteration lost monicity or degree")
    if not zp_is_squarefree_in_z(p):
        raise DegenerateSumError(
            "distinct sign combinations of the square roots collide"
        )
    return MinPoly(poly=p, generators=tuple(rads))


def _dependency_relation(table) -> list[int] | None:
    """Indices of input rows whose classes multiply to a square, if any."""
    pivots: list[tuple[int, int, int]] = []
    for i, mask in enumerate(table.parity_masks()):
        combo = 1 << i
        for bit, row, src in pivots:
            if mask & bit:
                mask ^= row
                combo ^= src
        if mask:
            pivots.append((mask & -mask, mask, combo))
        else:
            return [j for j in range(table.family_size) if combo & (1 << j)]
    return None
