import cmath
import concurrent.futures
import random

import pytest

from sppoly import (
    CyclotomicCache,
    InternalError,
    Polynomial,
    PreconditionViolated,
    all_one,
    check_property_1,
    check_property_2,
    check_property_3,
    cyclotomic,
    divisors,
    primitive_residues,
    totient,
    x_power_minus_one,
)


def cyclotomic_by_roots(n):
    """Independent oracle: expand the product of (x - z) over primitive n-th roots.

    Works in complex floating point and rounds, so only trustworthy for
    small n; that is exactly what it cross-checks.
    """
    coeffs = [1 + 0j]
    for k in primitive_residues(n):
        z = cmath.exp(2j * cmath.pi * k / n)
        new = [0j] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] += c
            new[i] -= c * z
        coeffs = new
    rounded = [round(c.real) for c in coeffs]
    assert max(abs(c - r) for c, r in zip(coeffs, rounded)) < 1e-6
    return Polynomial(rounded)


class TestDivisors:
    def test_one(self):
        assert divisors(1) == [1]

    def test_twelve(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]

    def test_prime(self):
        assert divisors(7) == [1, 7]

    def test_square(self):
        assert divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            divisors(0)

    def test_divides_exactly(self):
        for n in range(1, 200):
            ds = divisors(n)
            assert ds == sorted(ds)
            assert all(n % d == 0 for d in ds)
            assert ds[0] == 1 and ds[-1] == n


class TestPrimitiveResidues:
    def test_one(self):
        assert primitive_residues(1) == [1]

    def test_six(self):
        assert primitive_residues(6) == [1, 5]

    def test_prime(self):
        assert primitive_residues(5) == [1, 2, 3, 4]

    def test_totient_values(self):
        # 1, 1, 2, 2, 4, 2, 6, 4, 6, 4 for n = 1..10
        assert [totient(n) for n in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]


class TestCyclotomic:
    def test_first_index_is_x_minus_one(self):
        assert cyclotomic(1) == Polynomial((-1, 1))

    def test_small_values(self):
        assert cyclotomic(2) == Polynomial((1, 1))
        assert cyclotomic(3) == all_one(2)
        assert cyclotomic(4) == Polynomial((1, 0, 1))
        assert cyclotomic(6) == Polynomial((1, -1, 1))

    def test_prime_indices_are_all_one(self):
        for k in (2, 3, 5, 7, 11, 13, 31):
            assert cyclotomic(k) == all_one(k - 1)

    def test_matches_root_product_oracle(self):
        for n in range(1, 31):
            assert cyclotomic(n) == cyclotomic_by_roots(n)

    def test_product_over_divisors(self):
        for n in range(1, 51):
            product = Polynomial((1,))
            for d in divisors(n):
                product = product * cyclotomic(d)
            assert product == x_power_minus_one(n)

    def test_degree_is_totient(self):
        for n in range(1, 80):
            assert cyclotomic(n).degree == len(primitive_residues(n))

    def test_coefficients_stay_small_through_104(self):
        for n in range(1, 105):
            assert all(c in (-1, 0, 1) for c in cyclotomic(n).coeffs)

    def test_coefficient_two_appears_at_105(self):
        assert min(cyclotomic(105).coeffs) == -2

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            cyclotomic(0)

    def test_explicit_cache(self):
        cache = CyclotomicCache()
        assert cyclotomic(12, cache) == cyclotomic(12)
        assert 12 in cache and 6 in cache and 1 in cache

    def test_cache_rejects_bad_entries(self):
        cache = CyclotomicCache()
        with pytest.raises(InternalError):
            cache.store(3, Polynomial((2, 1)))  # wrong degree for totient(3)
        with pytest.raises(InternalError):
            cache.store(1, 2 * Polynomial((1, 1)))  # not monic

    def test_concurrent_fill_is_consistent(self):
        cache = CyclotomicCache()
        ns = list(range(1, 120)) * 2
        random.Random(7).shuffle(ns)
        with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(lambda n: (n, cyclotomic(n, cache)), ns))
        for n, poly in results:
            assert poly == cyclotomic(n)


class TestIdentityChecks:
    def test_property_1_example(self):
        # Psi_3(-x) = x^2 - x + 1 = Psi_6(x)
        assert cyclotomic(3).substitute_neg() == Polynomial((1, -1, 1))
        assert check_property_1(3)

    def test_property_1_sweep(self):
        assert all(check_property_1(m) for m in range(3, 60, 2))

    def test_property_1_preconditions(self):
        with pytest.raises(PreconditionViolated):
            check_property_1(4)
        with pytest.raises(PreconditionViolated):
            check_property_1(1)

    def test_property_2_example(self):
        # Psi_4(x) = x^2 + 1 = Psi_2(x^2)
        assert cyclotomic(4) == cyclotomic(2).substitute_power(2)
        assert check_property_2(2, 2)

    def test_property_2_preconditions(self):
        with pytest.raises(PreconditionViolated):
            check_property_2(3, 2)  # p does not divide m
        with pytest.raises(PreconditionViolated):
            check_property_2(4, 4)  # p not prime

    def test_property_3_example(self):
        # Psi_3(x^2) = Psi_6(x) * Psi_3(x)
        lhs = cyclotomic(3).substitute_power(2)
        assert lhs == cyclotomic(6) * cyclotomic(3)
        assert check_property_3(3, 2)

    def test_property_3_preconditions(self):
        with pytest.raises(PreconditionViolated):
            check_property_3(4, 2)  # p divides m
        with pytest.raises(PreconditionViolated):
            check_property_3(3, 6)  # p not prime

    def test_properties_small_sweep(self):
        for p in (2, 3, 5, 7):
            for m in range(1, 60 // p + 1):
                if m % p == 0:
                    assert check_property_2(m, p)
                else:
                    assert check_property_3(m, p)
