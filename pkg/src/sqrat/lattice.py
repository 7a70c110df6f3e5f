"""Square-class data of a radicand family.

A family f_1, ..., f_m of nonzero rational functions generates a subgroup
of Q(x)*/(Q(x)*)^2, a vector space over GF(2).  Working over C, constants
are squares, so the class of each f_i is determined by the parities of its
valuations.  A gcd-free basis b_1, ..., b_k of the numerators and
denominators makes those valuations computable without factoring: every
complex root of a basis element sees the same valuation vector.

The branch table records, for each radicand, its integer exponent vector on
the basis plus a parity row over GF(2) with one extra column for the place
at infinity (parity of deg num - deg den).  Rank of the parity matrix is
log2 of the degree of the compositum field; a basis element is a branch
locus of the compositum cover iff its parity column is nonzero, and the
total number of geometric branch points feeds Riemann-Hurwitz downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyFamilyError, ZeroRadicandError
from .poly import RatFunc, UPoly, coprime_basis, multiplicity, square_class


@dataclass(frozen=True)
class BranchTable:
    """Coprime basis, exponent matrix and GF(2) parity matrix of a family.

    parity rows have k+1 entries: one per basis element (sorted by degree,
    then coefficients) and a final column for the place at infinity.
    """

    radicands: tuple[RatFunc, ...]
    basis: tuple[UPoly, ...]
    exponents: tuple[tuple[int, ...], ...]
    parity: tuple[tuple[int, ...], ...]

    @property
    def family_size(self) -> int:
        return len(self.radicands)

    def parity_masks(self, include_infinity: bool = True) -> list[int]:
        """Parity rows as bitmasks, bit j = column j, highest bit = infinity."""
        width = len(self.basis) + 1 if include_infinity else len(self.basis)
        masks = []
        for row in self.parity:
            mask = 0
            for j in range(width):
                if row[j]:
                    mask |= 1 << j
            masks.append(mask)
        return masks


@dataclass(frozen=True)
class LatticeSummary:
    """Rank and geometric branch data of the square-class lattice."""

    rank: int
    branch_count: int
    ramified_basis_indices: tuple[int, ...]
    infinity_ramified: bool


def _coerce_radicands(radicands: Sequence[RatFunc | UPoly]) -> list[RatFunc]:
    if len(radicands) == 0:
        raise EmptyFamilyError("the radicand family is empty")
    out = []
    for f in radicands:
        if isinstance(f, UPoly):
            f = RatFunc(f)
        if not isinstance(f, RatFunc):
            raise TypeError("radicands must be RatFunc or UPoly values")
        if f.is_zero:
            raise ZeroRadicandError("zero radicand in the family")
        out.append(f)
    return out


def build_branch_table(radicands: Sequence[RatFunc | UPoly]) -> BranchTable:
    """Compute the branch table of a nonempty family of nonzero radicands.

    Radicands with trivial square class contribute an all-zero parity row.
    """
    rads = _coerce_radicands(radicands)
    support = []
    for f in rads:
        if not f.num.is_constant:
            support.append(f.num)
        if not f.den.is_constant:
            support.append(f.den)
    if support:
        basis, _ = coprime_basis(support)
    else:
        basis = []
    exponents = []
    parity = []
    for f in rads:
        row = []
        for b in basis:
            row.append(multiplicity(f.num, b) - multiplicity(f.den, b))
        inf_parity = (f.num.degree - f.den.degree) % 2
        exponents.append(tuple(row))
        parity.append(tuple(e % 2 for e in row) + (inf_parity,))
    return BranchTable(
        radicands=tuple(rads),
        basis=tuple(basis),
        exponents=tuple(exponents),
        parity=tuple(parity),
    )


def lattice_rank(table: BranchTable) -> int:
    """Rank of the parity matrix over GF(2); 2^rank is the compositum degree."""
    rank = 0
    pivots: list[int] = []
    for mask in table.parity_masks():
        for p in pivots:
            low = p & -p
            if mask & low:
                mask ^= p
        if mask:
            pivots.append(mask)
            rank += 1
    return rank


def branch_count(table: BranchTable) -> LatticeSummary:
    """Count geometric branch points of the compositum cover.

    Basis element j is a branch locus iff parity column j is nonzero; each
    contributes deg(b_j) complex points.  The place at infinity adds one
    more when its column is nonzero.  When the rank is 1 the count is even
    (a single hyperelliptic class ramifies at an even number of places).
    """
    rank = lattice_rank(table)
    k = len(table.basis)
    ramified = tuple(
        j for j in range(k) if any(row[j] for row in table.parity)
    )
    infinity = any(row[k] for row in table.parity)
    total = sum(table.basis[j].degree for j in ramified) + (1 if infinity else 0)
    if rank == 1 and total % 2:
        raise RuntimeError("odd branch count for a rank-1 lattice")
    summary = LatticeSummary(
        rank=rank,
        branch_count=total,
        ramified_basis_indices=ramified,
        infinity_ramified=infinity,
    )
    m, cols = len(table.radicands), k + 1
    if not (rank <= m and rank <= cols):
        raise RuntimeError("lattice rank exceeds its bounds")
    return summary


def _reduced_rows(table: BranchTable) -> list[tuple[int, int]]:
    """Row-echelon reduction of the parity matrix over GF(2).

    Rows are processed in input order; each surviving row is reduced against
    the pivots found so far, pivot columns chosen left to right (infinity
    column last).  Returns (input_mask, reduced_row_mask) pairs in the order
    the pivots were found; input_mask records which input rows were XORed.
    """
    pivots: list[tuple[int, int, int]] = []  # (pivot_bit, row_mask, input_mask)
    out: list[tuple[int, int]] = []
    for i, mask in enumerate(table.parity_masks()):
        combo = 1 << i
        for bit, row, src in pivots:
            if mask & bit:
                mask ^= row
                combo ^= src
        if mask:
            bit = mask & -mask
            pivots.append((bit, mask, combo))
            out.append((combo, mask))
    return out


def reduced_generators(table: BranchTable) -> list[UPoly]:
    """Monic class representatives of a GF(2) basis of the lattice.

    Each reduced parity row maps to the product of its finite basis
    elements (monic, constants dropped).  Rows are returned in the order
    their pivots were found.
    """
    gens = []
    for _, row_mask in _reduced_rows(table):
        g = UPoly.one()
        for j, b in enumerate(table.basis):
            if row_mask & (1 << j):
                g = g * b
        gens.append(g)
    return gens


def reduced_generators_scaled(table: BranchTable) -> list[UPoly]:
    """Constant-preserving representatives of the reduced generators.

    Each reduced row is realized as the subset product of the original
    radicands recorded during elimination, with squares stripped but the
    leading constant kept: the representative of class c * g * h^2 is the
    polynomial c * g.  Feeding these to the minimal polynomial keeps the
    radicands' own scaling (e.g. 4x+1 rather than its monic class x+1/4).
    """
    gens = []
    for input_mask, _ in _reduced_rows(table):
        prod = RatFunc(1)
        for i, f in enumerate(table.radicands):
            if input_mask & (1 << i):
                prod = prod * f
        c, g, _ = square_class(prod)
        gens.append(UPoly.constant(c) * g)
    return gens
