"""Root enumeration for factored family members.

Every factor list built by this package expands to a product of cyclotomic
polynomials with transformed arguments, so its full root multiset is known
exactly: labeled roots of unity, possibly negated (folded into the angle),
stretched (order arithmetic on the enlarged circle), or scaled by 1/alpha.

RootEntry labels a root as (order, residue, multiplicity, scale) meaning
the value e^(2*pi*i*residue/order) / scale. Residues are kept in [1, order]
with gcd(residue, order) = 1; the root 1 is labeled (1, 1).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .cyclotomic import CyclotomicCache, primitive_residues
from .errors import InternalError, UnverifiedFactorList
from .polynomial import Polynomial, Scalar
from .staircase import FactorList, Identity, NegateArg, PowerArg, ScaleArg

RESIDUAL_TOLERANCE = 1e-9


@dataclass(frozen=True)
class RootEntry:
    order: int
    residue: int
    multiplicity: int
    scale: Scalar = 1

    def value(self) -> complex:
        return cmath.exp(2j * math.pi * self.residue / self.order) / float(Fraction(self.scale))

    def modulus(self) -> Fraction:
        """Exact modulus: the unit-circle part contributes exactly 1."""
        return 1 / abs(Fraction(self.scale))

    def is_real(self) -> bool:
        return self.order in (1, 2)

    def real_value(self) -> Scalar:
        """Exact value for order-1 and order-2 entries."""
        if not self.is_real():
            raise ValueError("entry is not a real root")
        v = Fraction(1 if self.order == 1 else -1) / Fraction(self.scale)
        return v.numerator if v.denominator == 1 else v

    def conjugate_label(self):
        k = self.order - self.residue
        return (self.order, k if k else self.order, self.scale)


class RootSet:
    """The labeled root multiset of one factored polynomial."""

    def __init__(self, entries, source: Polynomial):
        self.entries = tuple(sorted(entries, key=lambda e: (e.order, e.residue, Fraction(e.scale))))
        self.source = source

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def total_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    @cached_property
    def values(self) -> list:
        return [e.value() for e in self.entries]

    @cached_property
    def residuals(self) -> list:
        """|source(v)| per entry, evaluated in double precision."""
        return [abs(w) for w in self.source.evaluate_complex_many(self.values)]

    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)

    def max_modulus(self) -> Fraction:
        return max((e.modulus() for e in self.entries), default=Fraction(0))

    def is_conjugate_closed(self) -> bool:
        table = {(e.order, e.residue, e.scale): e.multiplicity for e in self.entries}
        return all(table.get(e.conjugate_label()) == e.multiplicity for e in self.entries)


def _folded_negation_label(d: int, k: int):
    # -e^(2*pi*i*k/d) = e^(2*pi*i*(2k+d)/(2d)), reduced to minimal order.
    j = (2 * k + d) % (2 * d)
    if j == 0:
        return (1, 1)
    g = math.gcd(j, 2 * d)
    return (2 * d // g, j // g)


def roots_of(
    f: FactorList,
    source: Polynomial | None = None,
    cache: CyclotomicCache | None = None,
) -> RootSet:
    """Enumerate the exact root multiset of a verified factor list.

    When `source` is given, the expansion of `f` must reproduce it exactly
    (UnverifiedFactorList otherwise); when omitted, the expansion itself is
    the source. The result is checked against the source before returning:
    multiplicities must sum to the degree and every root must evaluate to
    (numerically) zero.
    """
    expansion = f.expand(cache)
    if source is None:
        source = expansion
    elif expansion != source:
        raise UnverifiedFactorList("factor list does not expand to the given polynomial")

    counts: dict = {}

    def add(order: int, residue: int, scale: Scalar = 1) -> None:
        key = (order, residue, scale)
        counts[key] = counts.get(key, 0) + 1

    for fac in f:
        d = fac.index
        t = fac.transform
        if isinstance(t, Identity):
            for k in primitive_residues(d):
                add(d, k)
        elif isinstance(t, NegateArg):
            for k in primitive_residues(d):
                add(*_folded_negation_label(d, k))
        elif isinstance(t, PowerArg):
            # Scan the whole enlarged circle; x is a root iff x^stretch hits a
            # primitive d-th root, i.e. iff gcd(j, d) = 1.
            circle = d * t.d
            for j in range(1, circle):
                if math.gcd(j, d) == 1:
                    g = math.gcd(j, circle)
                    add(circle // g, j // g)
        elif isinstance(t, ScaleArg):
            for k in primitive_residues(d):
                add(d, k, t.alpha)
        else:
            raise InternalError(f"unknown transform {t!r}")

    rs = RootSet(
        (RootEntry(order, residue, mult, scale) for (order, residue, scale), mult in counts.items()),
        source,
    )
    degree = source.degree if source.coeffs else 0
    if rs.total_multiplicity() != degree:
        raise InternalError(
            f"root multiplicities sum to {rs.total_multiplicity()}, expected degree {degree}"
        )
    if rs.entries and rs.max_residual() >= RESIDUAL_TOLERANCE:
        raise InternalError(f"enumerated root misses the source by {rs.max_residual():.3e}")
    return rs


@dataclass(frozen=True)
class RealRootReport:
    """Exact real roots (only +/- 1 over alpha can occur) with multiplicities."""

    roots: tuple  # of (value, multiplicity), value exact

    def __bool__(self) -> bool:
        return bool(self.roots)


def real_root_report(
    f: FactorList,
    source: Polynomial | None = None,
    cache: CyclotomicCache | None = None,
) -> RealRootReport:
    rs = roots_of(f, source, cache)
    found = [(e.real_value(), e.multiplicity) for e in rs if e.is_real()]
    return RealRootReport(tuple(sorted(found, key=lambda pair: Fraction(pair[0]))))


@dataclass(frozen=True)
class StabilityReport:
    """Schur stability verdict from exact root moduli.

    verdict is "schur-stable" when every modulus is < 1, "marginal" when the
    maximum modulus is exactly 1 (roots on the unit circle), and
    "not-schur-stable" when some root lies outside the closed unit disk.
    """

    max_modulus: Fraction
    verdict: str

    @property
    def stable(self) -> bool:
        return self.verdict == "schur-stable"


def stability_verdict(max_modulus: Fraction) -> str:
    if max_modulus < 1:
        return "schur-stable"
    if max_modulus == 1:
        return "marginal"
    return "not-schur-stable"


def schur_report(
    f: FactorList,
    source: Polynomial | None = None,
    cache: CyclotomicCache | None = None,
) -> StabilityReport:
    rs = roots_of(f, source, cache)
    m = rs.max_modulus()
    return StabilityReport(m, stability_verdict(m))
