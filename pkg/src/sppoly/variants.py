"""The three families derived from staircase palindromic polynomials.

Each family is the image of an SP polynomial under one argument
substitution, and each inherits the SP cyclotomic factorization with that
same substitution applied to every factor:

  alternating-sign (ASP):  T(x, n, h) = S(-x, n, h)      factors Psi_d(-x)
  missing-terms   (MSP):   M(x) = S(x^d, base_n, h)      factors Psi_d(x^d)
  geometric       (GSP):   G(x) = S(alpha*x, n, h)       factors Psi_d(alpha*x)

Recognition inverts the substitution and reuses the SP profile scan.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InvalidScale, InvalidStretch
from .polynomial import Polynomial, Scalar, as_scalar
from .staircase import (
    Factor,
    FactorList,
    Identity,
    NegateArg,
    PowerArg,
    ScaleArg,
    SpDescriptor,
    _check_degree_height,
    build_sp,
    classify_sp,
    factor_sp,
)


@dataclass(frozen=True)
class AspDescriptor:
    """Degree and height of an alternating-sign SP polynomial."""

    n: int
    h: int

    def __post_init__(self):
        _check_degree_height(self.n, self.h)


@dataclass(frozen=True)
class MspDescriptor:
    """Missing-terms SP polynomial: base SP degree, stretch d >= 2, height.

    The constructed polynomial has total degree base_n * d and support only
    at indices divisible by d.
    """

    base_n: int
    d: int
    h: int

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 2:
            raise InvalidStretch(f"stretch must be an integer >= 2, got {self.d}")
        _check_degree_height(self.base_n, self.h)


@dataclass(frozen=True)
class GspDescriptor:
    """Geometric SP polynomial: coefficients of S(x, n, h) scaled by alpha^i.

    Any nonzero rational alpha is accepted for construction; classification
    never returns alpha in {1, -1} since those are plain SP / ASP.
    """

    n: int
    h: int
    alpha: Scalar

    def __post_init__(self):
        a = as_scalar(self.alpha)
        if a == 0:
            raise InvalidScale("geometric scale must be nonzero")
        object.__setattr__(self, "alpha", a)
        _check_degree_height(self.n, self.h)


# -- alternating sign --------------------------------------------------------


def build_asp(desc: AspDescriptor) -> Polynomial:
    """T(x, n, h) = S(-x, n, h)."""
    return build_sp(SpDescriptor(desc.n, desc.h)).substitute_neg()


def factor_asp(desc: AspDescriptor, normalize: bool = False) -> FactorList:
    """SP factor indices with every argument negated.

    With normalize=True, each odd index d > 1 is rewritten to index 2d with
    an identity argument (Psi_d(-x) = Psi_2d(x) for odd d > 1); even indices
    keep the negated argument. The expansion is unchanged either way.
    """
    base = factor_sp(SpDescriptor(desc.n, desc.h))
    f = FactorList(tuple(Factor(fac.index, NegateArg()) for fac in base))
    return normalize_asp_factors(f) if normalize else f


def normalize_asp_factors(f: FactorList) -> FactorList:
    """Rewrite (odd index d > 1, negated argument) factors as (2d, identity)."""
    rewritten = []
    for fac in f:
        if isinstance(fac.transform, NegateArg) and fac.index % 2 == 1:
            rewritten.append(Factor(2 * fac.index, Identity()))
        else:
            rewritten.append(fac)
    return FactorList(tuple(rewritten), f.unit)


def classify_asp(p: Polynomial) -> Optional[AspDescriptor]:
    """Recover (n, h) when p(-x) is a staircase palindromic polynomial."""
    sp = classify_sp(p.substitute_neg())
    return AspDescriptor(sp.n, sp.h) if sp else None


# -- missing terms ------------------------------------------------------------


def build_msp(desc: MspDescriptor) -> Polynomial:
    """M(x) = S(x^d, base_n, h), total degree base_n * d."""
    return build_sp(SpDescriptor(desc.base_n, desc.h)).substitute_power(desc.d)


def factor_msp(desc: MspDescriptor) -> FactorList:
    """SP factor indices with every argument raised to the stretch power."""
    base = factor_sp(SpDescriptor(desc.base_n, desc.h))
    return FactorList(tuple(Factor(fac.index, PowerArg(desc.d)) for fac in base))


def classify_msp(p: Polynomial) -> Optional[MspDescriptor]:
    """Recover (base_n, d, h) with maximal stretch d >= 2, else None.

    The stretch is the gcd of the support indices; compressing by it must
    leave an SP coefficient profile.
    """
    if p.is_zero() or not isinstance(p.degree, int) or p.degree < 2:
        return None
    d = 0
    for i, c in enumerate(p.coeffs):
        if i and c != 0:
            d = math.gcd(d, i)
    if d < 2:
        return None
    base = Polynomial(p.coeffs[::d])
    sp = classify_sp(base)
    return MspDescriptor(sp.n, d, sp.h) if sp else None


# -- geometric -----------------------------------------------------------------


def build_gsp(desc: GspDescriptor) -> Polynomial:
    """G(x) = S(alpha*x, n, h): coefficient i of the SP picks up alpha^i."""
    return build_sp(SpDescriptor(desc.n, desc.h)).substitute_scale(desc.alpha)


def factor_gsp(desc: GspDescriptor) -> FactorList:
    """SP factor indices with every argument scaled by alpha."""
    base = factor_sp(SpDescriptor(desc.n, desc.h))
    return FactorList(tuple(Factor(fac.index, ScaleArg(desc.alpha)) for fac in base))


def classify_gsp(p: Polynomial) -> Optional[GspDescriptor]:
    """Recover (n, h, alpha) for rational nonzero alpha not in {1, -1}.

    The constant term must be 1 and the linear term nonzero. The scale
    candidate is b_1 / a_1 where a_1, the SP linear coefficient, is 1
    exactly when h = 1 and 2 otherwise; both hypotheses are tried and at
    most one survives the full profile check. Scales 1 and -1 classify as
    SP / ASP instead, and irrational scales are reported as no match.
    """
    if p.is_zero() or not isinstance(p.degree, int) or p.degree < 1:
        return None
    if p.coeffs[0] != 1:
        return None
    b1 = p.coeffs[1]
    if b1 == 0:
        return None
    for a1 in (1, 2):
        alpha = as_scalar(Fraction(b1, a1) if isinstance(b1, int) else Fraction(b1) / a1)
        base = p.substitute_scale(Fraction(1, 1) / alpha)
        sp = classify_sp(base)
        if sp is not None:
            if alpha == 1 or alpha == -1:
                return None
            return GspDescriptor(sp.n, sp.h, alpha)
    return None
