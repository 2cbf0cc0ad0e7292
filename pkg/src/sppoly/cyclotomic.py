"""Cyclotomic polynomials and the divisor/totient helpers around them.

The n-th cyclotomic polynomial (written Psi_n in output) is the monic
integer polynomial whose zeros are exactly the primitive n-th roots of
unity. It is computed here by exact division,

    Psi_n = (x^n - 1) / product of Psi_d over proper divisors d of n,

which reuses the one arithmetic path the whole package trusts: an inexact
division anywhere in that recursion is a bug and aborts loudly.
"""

from __future__ import annotations

import math

from .errors import InternalError, NotDivisible, PreconditionViolated
from .polynomial import ONE, Polynomial, x_power_minus_one


def divisors(n: int) -> list:
    """All divisors of n in ascending order, including 1 and n."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("divisors requires a positive integer")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def primitive_residues(n: int) -> list:
    """Residues k in [1, n] with gcd(k, n) = 1.

    These index the primitive n-th roots of unity e^(2*pi*i*k/n). For n = 1
    the list is [1], labeling the root 1 itself.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("primitive_residues requires a positive integer")
    return [k for k in range(1, n + 1) if math.gcd(k, n) == 1]


def totient(n: int) -> int:
    """Euler's totient, counted directly from primitive_residues."""
    return len(primitive_residues(n))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class CyclotomicCache:
    """Memo table of computed cyclotomic polynomials.

    Entries are validated on insertion (monic, integer coefficients, degree
    equal to the totient). Concurrent readers are safe; a miss may be
    computed redundantly by two threads, but each insertion is a single
    atomic dict write of a deterministic value, so last-write-wins is
    harmless.
    """

    def __init__(self):
        self._table: dict = {}

    def __len__(self) -> int:
        return len(self._table)

    def __contains__(self, n: int) -> bool:
        return n in self._table

    def get(self, n: int):
        return self._table.get(n)

    def store(self, n: int, poly: Polynomial) -> None:
        if not poly.is_monic() or not poly.has_integer_coefficients():
            raise InternalError(f"cyclotomic {n}: non-monic or non-integer result")
        if poly.degree != totient(n):
            raise InternalError(f"cyclotomic {n}: degree {poly.degree} != totient {totient(n)}")
        self._table[n] = poly


DEFAULT_CACHE = CyclotomicCache()


def cyclotomic(n: int, cache: CyclotomicCache | None = None) -> Polynomial:
    """The n-th cyclotomic polynomial, memoized in `cache`.

    >>> str(cyclotomic(1)), str(cyclotomic(6))
    ('x-1', 'x^2-x+1')
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("cyclotomic requires a positive integer index")
    if cache is None:
        cache = DEFAULT_CACHE
    hit = cache.get(n)
    if hit is not None:
        return hit
    for d in divisors(n):
        if d in cache:
            continue
        proper = ONE
        for e in divisors(d)[:-1]:
            proper = proper * cache.get(e)
        try:
            quotient = x_power_minus_one(d).div_exact(proper)
        except NotDivisible as exc:
            raise InternalError(f"x^{d}-1 not divisible by its proper cyclotomic factors") from exc
        cache.store(d, quotient)
    return cache.get(n)


def check_property_1(m: int, cache: CyclotomicCache | None = None) -> bool:
    """Psi_m(-x) = Psi_2m(x) for odd m > 1; executable identity check."""
    if not isinstance(m, int) or m <= 1 or m % 2 == 0:
        raise PreconditionViolated("property 1 requires an odd integer m > 1")
    return cyclotomic(m, cache).substitute_neg() == cyclotomic(2 * m, cache)


def check_property_2(m: int, p: int, cache: CyclotomicCache | None = None) -> bool:
    """Psi_{m*p}(x) = Psi_m(x^p) for prime p dividing m."""
    if not isinstance(m, int) or m < 1 or not is_prime(p):
        raise PreconditionViolated("property 2 requires a positive m and a prime p")
    if m % p != 0:
        raise PreconditionViolated("property 2 requires p to divide m")
    return cyclotomic(m * p, cache) == cyclotomic(m, cache).substitute_power(p)


def check_property_3(m: int, p: int, cache: CyclotomicCache | None = None) -> bool:
    """Psi_m(x^p) = Psi_{p*m}(x) * Psi_m(x) for prime p not dividing m."""
    if not isinstance(m, int) or m < 1 or not is_prime(p):
        raise PreconditionViolated("property 3 requires a positive m and a prime p")
    if m % p == 0:
        raise PreconditionViolated("property 3 requires p to not divide m")
    lhs = cyclotomic(m, cache).substitute_power(p)
    return lhs == cyclotomic(p * m, cache) * cyclotomic(m, cache)
