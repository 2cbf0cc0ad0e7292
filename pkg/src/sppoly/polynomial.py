"""Exact dense univariate polynomials over the rationals.

Coefficients are stored ascending (index i holds the coefficient of x^i) as
Python ints, or Fraction values when a denominator survives. No float ever
enters a Polynomial; numeric evaluation happens only on the way out, in
`evaluate_complex`.

The zero polynomial is the empty coefficient tuple and reports degree
NEG_INFINITY; every nonzero polynomial has a nonzero leading coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from . import _kernels
from .errors import DivisionByZero, InvalidScale, NotDivisible

Scalar = Union[int, Fraction]

NEG_INFINITY = float("-inf")


def as_scalar(value) -> Scalar:
    """Coerce to a canonical exact scalar: int, or Fraction with denominator > 1."""
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"exact scalar required (int or Fraction), got {type(value).__name__}")


@dataclass(frozen=True)
class Polynomial:
    """An immutable polynomial with exact rational coefficients.

    >>> Polynomial((1, 2, 1))
    Polynomial((1, 2, 1))
    >>> str(Polynomial((1, 2, 1)))
    'x^2+2x+1'
    """

    coeffs: tuple

    def __init__(self, coeffs: Iterable = ()):
        items = [as_scalar(c) for c in coeffs]
        while items and items[-1] == 0:
            items.pop()
        object.__setattr__(self, "coeffs", tuple(items))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        """Degree of the leading term; NEG_INFINITY for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Scalar:
        """Coefficient of x^i; zero outside the stored range."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def leading_coefficient(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_palindromic(self) -> bool:
        """True iff the coefficient sequence reads the same in both directions."""
        return self.coeffs == self.coeffs[::-1]

    def is_all_one(self) -> bool:
        """True iff every coefficient from the constant through the lead is 1."""
        return bool(self.coeffs) and all(c == 1 for c in self.coeffs)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return ZERO
            return Polynomial(_kernels.conv(list(self.coeffs), list(other.coeffs)))
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def div_exact(self, divisor: Polynomial) -> Polynomial:
        """Exact quotient self / divisor.

        Raises NotDivisible when division leaves a remainder, DivisionByZero
        when the divisor is the zero polynomial.

        >>> Polynomial((-1, 0, 0, 1)).div_exact(Polynomial((-1, 1)))
        Polynomial((1, 1, 1))
        """
        if divisor.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        if len(self.coeffs) < len(divisor.coeffs):
            raise NotDivisible(f"{self} is not divisible by {divisor}")
        q, r = _kernels.divmod_dense(list(self.coeffs), list(divisor.coeffs))
        if any(c != 0 for c in r):
            raise NotDivisible(f"{self} is not divisible by {divisor}")
        return Polynomial(q)

    # -- evaluation --------------------------------------------------------

    def evaluate(self, value) -> Scalar:
        """Exact Horner evaluation at a rational point."""
        v = as_scalar(value)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return as_scalar(acc) if isinstance(acc, Fraction) else acc

    def evaluate_complex(self, value: complex) -> complex:
        """Double-precision Horner evaluation; rejects non-finite results."""
        result = _kernels.eval_complex_many(list(self.coeffs), [complex(value)])[0]
        if not (math.isfinite(result.real) and math.isfinite(result.imag)):
            raise OverflowError("complex evaluation produced a non-finite value")
        return result

    def evaluate_complex_many(self, values) -> list:
        """Batch form of evaluate_complex, one pass over the coefficients."""
        results = _kernels.eval_complex_many(list(self.coeffs), [complex(v) for v in values])
        for r in results:
            if not (math.isfinite(r.real) and math.isfinite(r.imag)):
                raise OverflowError("complex evaluation produced a non-finite value")
        return results

    # -- argument substitutions --------------------------------------------

    def substitute_neg(self) -> Polynomial:
        """p(-x): sign flip on odd-degree coefficients."""
        return Polynomial([-c if i & 1 else c for i, c in enumerate(self.coeffs)])

    def substitute_power(self, d: int) -> Polynomial:
        """p(x^d): coefficient at i moves to index i*d."""
        if not isinstance(d, int) or d < 1:
            raise ValueError("power substitution requires an integer d >= 1")
        if d == 1 or not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * d + 1)
        for i, c in enumerate(self.coeffs):
            out[i * d] = c
        return Polynomial(out)

    def substitute_scale(self, alpha) -> Polynomial:
        """p(alpha*x): coefficient at i picks up alpha^i. alpha must be nonzero."""
        a = as_scalar(alpha)
        if a == 0:
            raise InvalidScale("scale substitution requires a nonzero scalar")
        out = []
        power: Scalar = 1
        for c in self.coeffs:
            out.append(c * power)
            power *= a
        return Polynomial(out)

    # -- display -----------------------------------------------------------

    def __repr__(self) -> str:
        return f"Polynomial({self.coeffs!r})"

    def __str__(self) -> str:
        from .textio import format_polynomial

        return format_polynomial(self)


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))


def all_one(k: int) -> Polynomial:
    """The degree-k polynomial with every coefficient 1: sum of x^i for i <= k.

    >>> str(all_one(2))
    'x^2+x+1'
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError("all_one requires a nonnegative integer degree")
    return Polynomial([1] * (k + 1))


def x_power_minus_one(n: int) -> Polynomial:
    """x^n - 1."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("x_power_minus_one requires a positive integer")
    return Polynomial([-1] + [0] * (n - 1) + [1])
