import math
from fractions import Fraction

import pytest

from sppoly import (
    AspDescriptor,
    Factor,
    FactorList,
    GspDescriptor,
    MspDescriptor,
    NegateArg,
    Polynomial,
    PowerArg,
    ScaleArg,
    SpDescriptor,
    UnverifiedFactorList,
    build_asp,
    build_gsp,
    build_msp,
    build_sp,
    factor_asp,
    factor_gsp,
    factor_msp,
    factor_sp,
    real_root_report,
    roots_of,
    schur_report,
    sp_count,
)


def labels(rs):
    return sorted((e.order, e.residue, e.multiplicity) for e in rs)


class TestEnumeration:
    def test_repeated_cube_roots(self):
        rs = roots_of(factor_sp(SpDescriptor(4, 3)))
        assert labels(rs) == [(3, 1, 2), (3, 2, 2)]
        assert rs.total_multiplicity() == 4

    def test_height_one_gives_punctured_circle(self):
        # S(x, 7, 1) = (x^8 - 1)/(x - 1): all eighth roots of unity except 1.
        rs = roots_of(factor_sp(SpDescriptor(7, 1)))
        assert labels(rs) == [
            (2, 1, 1),
            (4, 1, 1),
            (4, 3, 1),
            (8, 1, 1),
            (8, 3, 1),
            (8, 5, 1),
            (8, 7, 1),
        ]

    def test_scaled_roots(self):
        rs = roots_of(factor_gsp(GspDescriptor(4, 3, 2)))
        assert labels(rs) == [(3, 1, 2), (3, 2, 2)]
        assert all(e.scale == 2 for e in rs)
        assert all(abs(abs(v) - 0.5) < 1e-12 for v in rs.values)

    def test_negated_argument_folds_into_angle(self):
        # Psi_4(-x) has roots -i and i again; Psi_2(-x) = 1 - x has root +1.
        rs = roots_of(FactorList((Factor(4, NegateArg()),)))
        assert labels(rs) == [(4, 1, 1), (4, 3, 1)]
        rs = roots_of(FactorList((Factor(2, NegateArg()),)))
        assert labels(rs) == [(1, 1, 1)]

    def test_negated_odd_index_matches_doubled_identity(self):
        negated = roots_of(FactorList((Factor(3, NegateArg()),)))
        doubled = roots_of(FactorList((Factor(6),)))
        assert labels(negated) == labels(doubled) == [(6, 1, 1), (6, 5, 1)]

    def test_power_argument_orders(self):
        # Psi_3(x^2) = Psi_6 * Psi_3: primitive sixth and cube roots.
        rs = roots_of(FactorList((Factor(3, PowerArg(2)),)))
        assert labels(rs) == [(3, 1, 1), (3, 2, 1), (6, 1, 1), (6, 5, 1)]
        # Psi_3(x^3) = Psi_9: the primitive ninth roots.
        rs = roots_of(FactorList((Factor(3, PowerArg(3)),)))
        assert labels(rs) == [(9, k, 1) for k in (1, 2, 4, 5, 7, 8)]

    def test_multiplicities_sum_to_degree(self):
        for n in range(1, 40):
            for h in range(1, sp_count(n) + 1):
                p = build_sp(SpDescriptor(n, h))
                rs = roots_of(factor_sp(SpDescriptor(n, h)), source=p)
                assert rs.total_multiplicity() == n

    def test_residuals_small(self):
        p = build_sp(SpDescriptor(30, 11))
        rs = roots_of(factor_sp(SpDescriptor(30, 11)), source=p)
        assert rs.max_residual() < 1e-9

    def test_conjugate_closure(self):
        for f in (
            factor_sp(SpDescriptor(12, 5)),
            factor_asp(AspDescriptor(9, 4)),
            factor_msp(MspDescriptor(6, 2, 3)),
            factor_gsp(GspDescriptor(8, 2, Fraction(-3))),
        ):
            assert roots_of(f).is_conjugate_closed()

    def test_source_mismatch_raises(self):
        with pytest.raises(UnverifiedFactorList):
            roots_of(factor_sp(SpDescriptor(4, 3)), source=build_sp(SpDescriptor(4, 2)))

    def test_gcd_invariant_on_labels(self):
        for f in (factor_msp(MspDescriptor(8, 3, 2)), factor_asp(AspDescriptor(10, 4))):
            for e in roots_of(f):
                assert 1 <= e.residue <= e.order
                assert math.gcd(e.residue, e.order) == 1


class TestRealRoots:
    def test_single_minus_one(self):
        report = real_root_report(factor_sp(SpDescriptor(7, 4)))
        assert report.roots == ((-1, 1),)

    def test_no_real_roots(self):
        report = real_root_report(factor_sp(SpDescriptor(4, 3)))
        assert report.roots == ()
        assert not report

    def test_even_degree_even_height(self):
        # h = 2 divides evenly, so Psi_2 appears twice: -1 with multiplicity 2.
        report = real_root_report(factor_sp(SpDescriptor(6, 2)))
        assert report.roots == ((-1, 2),)

    def test_scaled_real_root(self):
        report = real_root_report(factor_gsp(GspDescriptor(7, 4, 2)))
        assert report.roots == ((Fraction(-1, 2), 1),)

    def test_alternating_plus_one(self):
        # T(x, 7, 4) carries Psi_2(-x), whose root is +1.
        report = real_root_report(factor_asp(AspDescriptor(7, 4)))
        assert report.roots == ((1, 1),)

    def test_never_other_real_values(self):
        for n in range(1, 30):
            for h in range(1, sp_count(n) + 1):
                report = real_root_report(factor_sp(SpDescriptor(n, h)))
                assert all(v == -1 for v, _ in report.roots)


class TestStability:
    def test_unit_circle_is_marginal(self):
        report = schur_report(factor_sp(SpDescriptor(4, 3)))
        assert report.verdict == "marginal"
        assert report.max_modulus == 1
        assert not report.stable

    def test_contracting_scale_is_stable(self):
        report = schur_report(factor_gsp(GspDescriptor(4, 3, 2)))
        assert report.verdict == "schur-stable"
        assert report.max_modulus == Fraction(1, 2)
        assert report.stable

    def test_expanding_scale_is_unstable(self):
        report = schur_report(factor_gsp(GspDescriptor(4, 3, Fraction(1, 2))))
        assert report.verdict == "not-schur-stable"
        assert report.max_modulus == 2

    def test_negative_scale_uses_absolute_value(self):
        report = schur_report(factor_gsp(GspDescriptor(5, 3, Fraction(-3))))
        assert report.max_modulus == Fraction(1, 3)
        assert report.stable

    def test_missing_terms_stay_on_circle(self):
        report = schur_report(factor_msp(MspDescriptor(6, 3, 2)))
        assert report.verdict == "marginal"
        assert report.max_modulus == 1


class TestValues:
    def test_numeric_values_match_labels(self):
        rs = roots_of(factor_sp(SpDescriptor(4, 3)))
        expected = {
            complex(math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3)),
            complex(math.cos(4 * math.pi / 3), math.sin(4 * math.pi / 3)),
        }
        for v in rs.values:
            assert min(abs(v - w) for w in expected) < 1e-12

    def test_source_polynomial_vanishes(self):
        p = build_gsp(GspDescriptor(6, 2, Fraction(5, 7)))
        rs = roots_of(factor_gsp(GspDescriptor(6, 2, Fraction(5, 7))), source=p)
        assert all(abs(p.evaluate_complex(v)) < 1e-9 for v in rs.values)

    def test_missing_terms_values(self):
        p = build_msp(MspDescriptor(2, 3, 1))
        rs = roots_of(factor_msp(MspDescriptor(2, 3, 1)), source=p)
        assert rs.total_multiplicity() == 6
        assert all(abs(abs(v) - 1) < 1e-12 for v in rs.values)
