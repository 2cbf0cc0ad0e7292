"""Staircase palindromic polynomials.

S(x, n, h) is the monic palindromic polynomial of degree n whose
coefficients ramp 1, 2, ..., h, plateau at the height h, then descend
symmetrically. Every such polynomial factors into cyclotomic polynomials:
for h > 1 the factor indices are the divisors (other than 1) of h together
with the divisors (other than 1) of n + 2 - h; for h = 1 they are the
divisors (other than 1) of n + 1.

A FactorList records such a factorization as a multiset of cyclotomic
indices, each paired with an argument transform (identity here; negation,
power, or scale for the derived families in `variants`). Its defining
invariant is that expanding it reproduces the source polynomial exactly,
which `verify` checks coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cyclotomic import CyclotomicCache, cyclotomic, divisors
from .errors import InvalidHeight, InvalidScale
from .polynomial import ONE, Polynomial, Scalar, as_scalar


def max_height(n: int) -> int:
    """Largest admissible height for degree n: ceil((n+1)/2)."""
    return (n + 2) // 2


def sp_count(n: int) -> int:
    """Number of staircase palindromic polynomials of degree n."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("degree must be a positive integer")
    return max_height(n)


def _check_degree_height(n, h) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError("degree must be a positive integer")
    if not isinstance(h, int) or h < 1 or h > max_height(n):
        raise InvalidHeight(f"height must satisfy 1 <= h <= {max_height(n)} for degree {n}, got {h}")


@dataclass(frozen=True)
class SpDescriptor:
    """Degree and height identifying one staircase palindromic polynomial."""

    n: int
    h: int

    def __post_init__(self):
        _check_degree_height(self.n, self.h)


# -- argument transforms ----------------------------------------------------


class Transform:
    """How a cyclotomic factor's argument is rewritten before expansion."""

    def apply(self, p: Polynomial) -> Polynomial:
        raise NotImplementedError

    def argument_text(self) -> str:
        raise NotImplementedError

    def degree_multiplier(self) -> int:
        return 1

    def _key(self):
        raise NotImplementedError


@dataclass(frozen=True)
class Identity(Transform):
    def apply(self, p: Polynomial) -> Polynomial:
        return p

    def argument_text(self) -> str:
        return "x"

    def _key(self):
        return (0,)


@dataclass(frozen=True)
class NegateArg(Transform):
    def apply(self, p: Polynomial) -> Polynomial:
        return p.substitute_neg()

    def argument_text(self) -> str:
        return "-x"

    def _key(self):
        return (1,)


@dataclass(frozen=True)
class PowerArg(Transform):
    d: int

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError("power transform requires an integer d >= 1")

    def apply(self, p: Polynomial) -> Polynomial:
        return p.substitute_power(self.d)

    def argument_text(self) -> str:
        return f"x^{self.d}"

    def degree_multiplier(self) -> int:
        return self.d

    def _key(self):
        return (2, self.d)


@dataclass(frozen=True)
class ScaleArg(Transform):
    alpha: Scalar

    def __post_init__(self):
        a = as_scalar(self.alpha)
        if a == 0:
            raise InvalidScale("scale transform requires a nonzero scalar")
        object.__setattr__(self, "alpha", a)

    def apply(self, p: Polynomial) -> Polynomial:
        return p.substitute_scale(self.alpha)

    def argument_text(self) -> str:
        from .textio import format_scalar

        text = format_scalar(self.alpha)
        return f"{text}x" if text != "1" else "x"

    def _key(self):
        return (3, Fraction(self.alpha))


IDENTITY = Identity()


@dataclass(frozen=True)
class Factor:
    """One cyclotomic factor: Psi_index with a transformed argument."""

    index: int
    transform: Transform = IDENTITY

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 2:
            raise ValueError("cyclotomic factor index must be an integer >= 2")

    def expand(self, cache: CyclotomicCache | None = None) -> Polynomial:
        return self.transform.apply(cyclotomic(self.index, cache))

    def degree(self) -> int:
        from .cyclotomic import totient

        return totient(self.index) * self.transform.degree_multiplier()

    def text(self) -> str:
        return f"Psi_{self.index}({self.transform.argument_text()})"


@dataclass(frozen=True)
class FactorList:
    """A multiset of cyclotomic factors (plus a rational unit, normally 1).

    Expanding the list multiplies everything back out; `verify` compares
    that expansion against a candidate source polynomial exactly.
    """

    factors: tuple = ()
    unit: Scalar = 1

    def __post_init__(self):
        ordered = tuple(sorted(self.factors, key=lambda f: (f.index, f.transform._key())))
        object.__setattr__(self, "factors", ordered)
        object.__setattr__(self, "unit", as_scalar(self.unit))

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def expand(self, cache: CyclotomicCache | None = None) -> Polynomial:
        result = ONE * self.unit
        for f in self.factors:
            result = result * f.expand(cache)
        return result

    def degree(self) -> int:
        return sum(f.degree() for f in self.factors)

    def grouped(self):
        """(factor, exponent) pairs, collapsing repeats for display."""
        groups = []
        for f in self.factors:
            if groups and groups[-1][0] == f:
                groups[-1][1] += 1
            else:
                groups.append([f, 1])
        return [(f, count) for f, count in groups]

    def indices(self) -> list:
        return [f.index for f in self.factors]

    def __str__(self) -> str:
        from .textio import format_factors

        return format_factors(self)


def verify(p: Polynomial, f: FactorList, cache: CyclotomicCache | None = None) -> bool:
    """True iff expanding `f` reproduces `p` exactly, coefficient for coefficient."""
    return f.expand(cache) == p


# -- construction, recognition, factorization -------------------------------


def build_sp(desc: SpDescriptor) -> Polynomial:
    """The staircase palindromic polynomial S(x, n, h).

    >>> str(build_sp(SpDescriptor(4, 3)))
    'x^4+2x^3+3x^2+2x+1'
    """
    n, h = desc.n, desc.h
    return Polynomial([min(i + 1, n - i + 1, h) for i in range(n + 1)])


def classify_sp(p: Polynomial) -> Optional[SpDescriptor]:
    """Recover (n, h) when p is a staircase palindromic polynomial, else None.

    Recognition scans the coefficient profile directly (monic, integer, unit
    ramp up to a plateau); it never divides, so round-trips against the
    factorization path are a genuine cross-check.
    """
    if p.is_zero() or not isinstance(p.degree, int) or p.degree < 1:
        return None
    if not p.has_integer_coefficients():
        return None
    n = p.degree
    h = max(p.coeffs)
    if not isinstance(h, int) or h < 1 or h > max_height(n):
        return None
    for i, c in enumerate(p.coeffs):
        if c != min(i + 1, n - i + 1, h):
            return None
    return SpDescriptor(n, h)


def all_one_split(desc: SpDescriptor):
    """Degrees (l, m) with all_one(l) * all_one(m) = S(x, n, h): l = h-1, m = n-h+1."""
    return desc.h - 1, desc.n - desc.h + 1


def factor_sp(desc: SpDescriptor) -> FactorList:
    """Cyclotomic factorization of S(x, n, h).

    >>> str(factor_sp(SpDescriptor(4, 3)))
    'Psi_3(x)^2'
    """
    n, h = desc.n, desc.h
    if h == 1:
        indices = [t for t in divisors(n + 1) if t != 1]
    else:
        indices = [d for d in divisors(h) if d != 1]
        indices += [t for t in divisors(n + 2 - h) if t != 1]
    return FactorList(tuple(Factor(i) for i in indices))
