"""Exact univariate polynomial and rational function arithmetic over Q.

A polynomial is a dense tuple of `fractions.Fraction` coefficients in one
distinguished variable, constant term first, with no trailing zeros.  The
degree of the zero polynomial is the sentinel None, never -1.  A rational
function keeps numerator and denominator coprime with a monic denominator,
so equality is structural.

On top of the ring arithmetic this module provides the square-theoretic
toolbox the rest of the library is built on:

  * gcd and squarefree decomposition (Yun's algorithm, characteristic 0);
  * square classes modulo (Q(x)*)^2: every nonzero f factors uniquely as
    c * g * h^2 with c a rational constant, g monic squarefree and h a
    rational function with monic numerator and denominator;
  * gcd-free (coprime) bases with exact integer exponent matrices, the
    factorization-free substitute for irreducible factorization;
  * substitution x -> s(t) for nonconstant rational s, and exact square
    testing that distinguishes squares over Q from squares over C.

Decision-level code treats nonzero constants as squares (true over C, the
constant field the geometry lives over); only witness verification cares
about the difference, which is why is_square reports the constant defect.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence, Union

from .errors import ConstantSubstitutionError, ZeroInputError

Scalar = Union[int, Fraction]


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


class UPoly:
    """Dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> UPoly:
        return cls()

    @classmethod
    def one(cls) -> UPoly:
        return cls((1,))

    @classmethod
    def constant(cls, c: Scalar) -> UPoly:
        return cls((c,))

    @classmethod
    def x(cls) -> UPoly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> UPoly:
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls((0,) * degree + (_as_fraction(coeff),))

    # -- structure --------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial (a true sentinel)."""
        return len(self._coeffs) - 1 if self._coeffs else None

    @property
    def leading(self) -> Fraction:
        if not self._coeffs:
            raise ZeroInputError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_one(self) -> bool:
        return self._coeffs == (Fraction(1),)

    @property
    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def coeff(self, k: int) -> Fraction:
        """Coefficient of x^k (zero beyond the degree)."""
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def sort_key(self) -> tuple:
        return (len(self._coeffs), self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        other = _coerce_upoly(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    __hash__ = None  # cross-type equality with scalars; do not use as dict key

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> UPoly:
        return UPoly(tuple(-c for c in self._coeffs))

    def __add__(self, other) -> UPoly:
        other = _coerce_upoly(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> UPoly:
        other = _coerce_upoly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> UPoly:
        other = _coerce_upoly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> UPoly:
        other = _coerce_upoly(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return UPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return UPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> UPoly:
        # scalar division only; polynomial division goes through divmod
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                raise ZeroDivisionError("division of polynomial by zero scalar")
            return UPoly(tuple(a / c for a in self._coeffs))
        return NotImplemented

    def __pow__(self, n: int) -> UPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = UPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other) -> tuple[UPoly, UPoly]:
        other = _coerce_upoly(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dd = len(other._coeffs) - 1
        lead = other._coeffs[-1]
        quo = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c / lead
            quo[k - dd] = q
            for j in range(dd + 1):
                rem[k - dd + j] -= q * other._coeffs[j]
        return UPoly(quo), UPoly(rem)

    def __floordiv__(self, other) -> UPoly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> UPoly:
        return divmod(self, other)[1]

    def exact_div(self, other: UPoly) -> UPoly:
        """Divide by an exact divisor; raises if the division has a remainder."""
        q, r = divmod(self, other)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> UPoly:
        if self.is_zero:
            raise ZeroInputError("cannot normalize the zero polynomial")
        return self / self.leading

    def derivative(self) -> UPoly:
        return UPoly(tuple(i * c for i, c in enumerate(self._coeffs) if i))

    def evaluate(self, point: Scalar) -> Fraction:
        v = _as_fraction(point)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * v + c
        return acc

    # -- printing ---------------------------------------------------------

    def to_str(self, var: str = "x") -> str:
        """Canonical expression string: descending powers, explicit * and ^."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if not c:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                mon = var if k == 1 else f"{var}^{k}"
                body = mon if abs(c) == 1 else f"{abs(c)}*{mon}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"UPoly[{self.to_str()}]"


def _coerce_upoly(value) -> UPoly | None:
    if isinstance(value, UPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return UPoly.constant(value)
    return None


class RatFunc:
    """Reduced rational function: coprime numerator over monic denominator."""

    __slots__ = ("_num", "_den")

    def __init__(self, num, den=1):
        n = _coerce_upoly(num)
        d = _coerce_upoly(den)
        if n is None or d is None:
            raise TypeError("RatFunc expects polynomials or scalars")
        if d.is_zero:
            raise ZeroDivisionError("zero denominator in rational function")
        if n.is_zero:
            self._num = UPoly.zero()
            self._den = UPoly.one()
            return
        g = poly_gcd(n, d)
        if not g.is_one:
            n = n.exact_div(g)
            d = d.exact_div(g)
        lead = d.leading
        if lead != 1:
            n = n / lead
            d = d / lead
        self._num = n
        self._den = d

    @classmethod
    def x(cls) -> RatFunc:
        return cls(UPoly.x())

    @property
    def num(self) -> UPoly:
        return self._num

    @property
    def den(self) -> UPoly:
        return self._den

    @property
    def is_zero(self) -> bool:
        return self._num.is_zero

    @property
    def is_constant(self) -> bool:
        return self._num.is_constant and self._den.is_one

    @property
    def as_fraction(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("rational function is not constant")
        return self._num.coeff(0)

    @property
    def degree(self) -> int | None:
        """deg(num) - deg(den), or None for zero (valuation at infinity, negated)."""
        if self._num.is_zero:
            return None
        return self._num.degree - self._den.degree

    def __bool__(self) -> bool:
        return not self._num.is_zero

    def __eq__(self, other: object) -> bool:
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    __hash__ = None

    def __neg__(self) -> RatFunc:
        return RatFunc(-self._num, self._den)

    def __add__(self, other) -> RatFunc:
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return RatFunc(self._num * other._den + other._num * self._den,
                       self._den * other._den)

    __radd__ = __add__

    def __sub__(self, other) -> RatFunc:
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RatFunc:
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> RatFunc:
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return RatFunc(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFunc:
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other) -> RatFunc:
        other = _coerce_ratfunc(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> RatFunc:
        if not isinstance(n, int):
            raise ValueError("exponent must be an integer")
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return RatFunc(self._den ** (-n), self._num ** (-n))
        return RatFunc(self._num ** n, self._den ** n)

    def to_str(self, var: str = "x") -> str:
        if self._den.is_one:
            return self._num.to_str(var)
        return f"({self._num.to_str(var)})/({self._den.to_str(var)})"

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"RatFunc[{self.to_str()}]"


def _coerce_ratfunc(value) -> RatFunc | None:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, (int, Fraction, UPoly)):
        return RatFunc(value)
    return None


# -- gcd and squarefree structure ------------------------------------------


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    while b:
        r = a % b
        a, b = b, (r.monic() if r else r)
    return a.monic() if a else UPoly.zero()


def multiplicity(f: UPoly, b: UPoly) -> int:
    """Largest k with b^k dividing f; f nonzero, b nonconstant."""
    if f.is_zero:
        raise ZeroInputError("multiplicity in the zero polynomial")
    if b.is_constant:
        raise ValueError("multiplicity of a constant factor is undefined")
    count = 0
    while True:
        q, r = divmod(f, b)
        if r:
            return count
        f = q
        count += 1


@dataclass(frozen=True)
class SqfDecomp:
    """Squarefree decomposition f = unit * prod(factor^multiplicity).

    Factors are monic, squarefree, pairwise coprime, listed by increasing
    multiplicity; multiplicities are strictly positive.
    """

    unit: Fraction
    parts: tuple[tuple[UPoly, int], ...]

    def expand(self) -> UPoly:
        out = UPoly.constant(self.unit)
        for factor, mult in self.parts:
            out = out * factor ** mult
        return out


def squarefree_decompose(f: UPoly) -> SqfDecomp:
    """Yun's algorithm (valid in characteristic 0)."""
    if f.is_zero:
        raise ZeroInputError("squarefree decomposition of zero")
    unit = f.leading
    w = f.monic()
    parts: list[tuple[UPoly, int]] = []
    d1 = w.derivative()
    a = poly_gcd(w, d1)
    b = w if a.is_one else w.exact_div(a)
    c = d1 if a.is_one else d1.exact_div(a)
    d = c - b.derivative()
    i = 1
    while not b.is_constant:
        p = poly_gcd(b, d)
        if not p.is_constant:
            parts.append((p, i))
            b = b.exact_div(p)
            c = d.exact_div(p)
        else:
            c = d
        d = c - b.derivative()
        i += 1
    return SqfDecomp(unit=unit, parts=tuple(parts))


def radical(f: UPoly) -> UPoly:
    """Monic product of the distinct squarefree factors of f."""
    out = UPoly.one()
    for factor, _ in squarefree_decompose(f).parts:
        out = out * factor
    return out


def square_class(f: RatFunc | UPoly) -> tuple[Fraction, UPoly, RatFunc]:
    """Canonical factorization f = c * g * h^2.

    c is a nonzero rational, g is monic squarefree (the square class
    representative) and h has monic numerator and denominator.  The triple
    is uniquely determined by this normalization.
    """
    f = _coerce_ratfunc(f)
    if f is None or f.is_zero:
        raise ZeroInputError("square class of zero")
    dn = squarefree_decompose(f.num)
    dd = squarefree_decompose(f.den)
    c = dn.unit / dd.unit
    g = UPoly.one()
    h_num = UPoly.one()
    h_den = UPoly.one()
    for factor, mult in dn.parts:
        if mult % 2:
            g = g * factor
        h_num = h_num * factor ** (mult // 2)
    for factor, mult in dd.parts:
        if mult % 2:
            g = g * factor
        h_den = h_den * factor ** ((mult + 1) // 2)
    return c, g, RatFunc(h_num, h_den)


def squarefree_part(f: RatFunc | UPoly) -> UPoly:
    """Monic squarefree representative of the square class of f.

    Constants have trivial class (they are squares over C), so the part of
    a constant is 1.  For rational f this is the product of the odd
    multiplicity factors of num * den.
    """
    return square_class(f)[1]


# -- coprime (gcd-free) bases ------------------------------------------------


def coprime_basis(fs: Sequence[UPoly]) -> tuple[list[UPoly], list[list[int]]]:
    """Gcd-free basis of a family of nonzero polynomials.

    Returns (basis, exponents) with the basis monic, squarefree, pairwise
    coprime, of degree >= 1, sorted by (degree, coefficients), and
    fs[i] = c_i * prod_j basis[j] ** exponents[i][j] for nonzero rational
    constants c_i.  The reconstruction is verified exactly.
    """
    polys = list(fs)
    for f in polys:
        if f is None or f.is_zero:
            raise ZeroInputError("coprime basis of a family containing zero")
    basis: list[UPoly] = []
    for f in polys:
        if f.is_constant:
            continue
        # refine with each squarefree part separately: parts group the
        # factors of f by multiplicity, so every final basis element has a
        # single well-defined multiplicity in f
        for part, _ in squarefree_decompose(f).parts:
            rest = part
            refined: list[UPoly] = []
            for b in basis:
                d = poly_gcd(b, rest)
                if d.is_constant:
                    refined.append(b)
                    continue
                b_left = b.exact_div(d)
                if not b_left.is_constant:
                    refined.append(b_left)
                refined.append(d)
                rest = rest.exact_div(d)
            if not rest.is_constant:
                refined.append(rest)
            basis = refined
    basis.sort(key=UPoly.sort_key)
    exponents = [[multiplicity(f, b) for b in basis] for f in polys]
    for f, row in zip(polys, exponents):
        prod = UPoly.one()
        for b, e in zip(basis, row):
            prod = prod * b ** e
        q, r = divmod(f, prod)
        if r or not q.is_constant or q.is_zero:
            raise RuntimeError("coprime basis reconstruction failed")
    return basis, exponents


# -- substitution and square testing -----------------------------------------


def substitute(f: UPoly | RatFunc, s: RatFunc) -> RatFunc:
    """Compose f with the substitution x -> s(t), reduced to lowest terms.

    s must be nonconstant, so the induced endomorphism of Q(x) is injective.
    """
    if not isinstance(s, RatFunc):
        raise TypeError("substitution image must be a RatFunc")
    if s.is_constant:
        raise ConstantSubstitutionError("substitution image must be nonconstant")
    if isinstance(f, UPoly):
        acc = RatFunc(0)
        for c in reversed(f.coeffs):
            acc = acc * s + c
        return acc
    if isinstance(f, RatFunc):
        den = substitute(f.den, s)
        if den.is_zero:
            raise RuntimeError("nonzero denominator vanished under substitution")
        return substitute(f.num, s) / den
    raise TypeError("substitute expects a UPoly or RatFunc")


def fraction_sqrt(c: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None if c is not a square in Q."""
    if c < 0:
        return None
    rn = isqrt(c.numerator)
    rd = isqrt(c.denominator)
    if rn * rn != c.numerator or rd * rd != c.denominator:
        return None
    return Fraction(rn, rd)


@dataclass(frozen=True)
class SquareOverQ:
    """f = root^2 exactly over Q(x)."""
    root: RatFunc


@dataclass(frozen=True)
class SquareOverC:
    """f = defect * root^2 with a non-square rational constant defect.

    Over C the defect is a square, so f is a square there but not over Q.
    """
    defect: Fraction
    root: RatFunc


@dataclass(frozen=True)
class NotSquare:
    """The square class of f is a nonconstant polynomial."""


SquareResult = Union[SquareOverQ, SquareOverC, NotSquare]


def is_square(f: RatFunc | UPoly) -> SquareResult:
    """Exact square test; zero counts as SquareOverQ(0)."""
    f = _coerce_ratfunc(f)
    if f is None:
        raise TypeError("is_square expects a RatFunc or UPoly")
    if f.is_zero:
        return SquareOverQ(RatFunc(0))
    c, g, h = square_class(f)
    if not g.is_one:
        return NotSquare()
    root_c = fraction_sqrt(c)
    if root_c is None:
        return SquareOverC(defect=c, root=h)
    return SquareOverQ(root=root_c * h)
