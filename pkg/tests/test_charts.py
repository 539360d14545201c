import dataclasses
from fractions import Fraction

import pytest

from hilbcells import (
    LEX_YX,
    BivariatePolynomial,
    ChartCoefficient,
    DomainError,
    Monomial,
    RegimeError,
    Weight,
    buchberger,
    build_chart_family,
    construct_staircase,
    enumerate_staircases,
    initial_staircase,
    sector_decomposition,
    specialize_family,
    standard_monomials,
    tangent_basis,
    verify_flatness,
    weight_initial_ideal,
)
from hilbcells.charts import default_sample_points
from hilbcells.polynomials import DOMAIN_CHART

W11 = Weight(1, -1)

X_YX = ((0, 1), (1, 0))  # the variable for couple (y, x)
X_Y1 = ((0, 1), (0, 0))  # the variable for couple (y, 1)


class TestSectors:
    def test_domino(self):
        sd = sector_decomposition(construct_staircase([1, 1]))
        assert sd.sector(Monomial(3, 0)) == 2
        assert sd.sector(Monomial(0, 5)) == 1

    def test_single_box(self):
        sd = sector_decomposition(construct_staircase([1]))
        assert sd.sector(Monomial(1, 1)) == 2

    def test_cleft_sector_is_its_index(self):
        for l in range(1, 7):
            for E in enumerate_staircases(l):
                sd = sector_decomposition(E)
                for i, c in enumerate(sd.clefts, start=1):
                    assert sd.sector(c) == i

    def test_partition_of_complement(self):
        for l in range(1, 7):
            for E in enumerate_staircases(l):
                sd = sector_decomposition(E)
                for a in range(E.width + 3):
                    for b in range(E.height + 3):
                        m = Monomial(a, b)
                        if m not in E:
                            assert 1 <= sd.sector(m) <= len(sd.clefts)

    def test_rejects_staircase_cells(self):
        sd = sector_decomposition(construct_staircase([1, 1]))
        with pytest.raises(DomainError):
            sd.sector(Monomial(0, 0))


class TestBuildFamily:
    def test_domino_invariant(self):
        fam = build_chart_family(construct_staircase([1, 1]), "invariant", W11)
        assert fam.variables == (X_YX,)
        texts = [p.to_text() for p in fam.generators]
        assert texts == ["+1/1·X[0,1;1,0]^1·x^1*y^0 +1/1·x^0*y^1", "+1/1·x^2*y^0"]
        assert dict(fam.q_polynomials)[X_YX].to_text() == "+1/1·x^1*y^0"

    def test_domino_general(self):
        fam = build_chart_family(construct_staircase([1, 1]), "general")
        assert fam.variables == (X_Y1, X_YX)
        p_y = fam.generators[0].to_text()
        assert p_y == (
            "+1/1·X[0,1;1,0]^1·x^1*y^0 +1/1·x^0*y^1 +1/1·X[0,1;0,0]^1·x^0*y^0"
        )

    def test_single_box_invariant_is_constant(self):
        fam = build_chart_family(construct_staircase([1]), "invariant", W11)
        assert fam.variables == ()
        assert [p.to_text() for p in fam.generators] == ["+1/1·x^0*y^1", "+1/1·x^1*y^0"]

    def test_mode_weight_mismatch(self):
        E = construct_staircase([1, 1])
        with pytest.raises(RegimeError):
            build_chart_family(E, "invariant")
        with pytest.raises(RegimeError):
            build_chart_family(E, "invariant", Weight(-1, -2))
        with pytest.raises(RegimeError):
            build_chart_family(E, "general", W11)
        with pytest.raises(DomainError):
            build_chart_family(E, "projective")

    def test_variable_count_matches_tangent(self):
        for l in range(1, 9):
            for E in enumerate_staircases(l):
                inv = build_chart_family(E, "invariant", W11)
                assert len(inv.variables) == len(tangent_basis(E, W11).positive)
                gen = build_chart_family(E, "general")
                assert len(gen.variables) == len(tangent_basis(E).positive)


class TestSpecialize:
    def test_unit_point(self):
        fam = build_chart_family(construct_staircase([1, 1]), "invariant", W11)
        gens = specialize_family(fam, {X_YX: Fraction(1)})
        assert sorted(p.to_text() for p in gens) == [
            "+1/1·x^1*y^0 +1/1·x^0*y^1",
            "+1/1·x^2*y^0",
        ]

    def test_origin_gives_monomial_generators(self):
        for l in range(1, 7):
            for E in enumerate_staircases(l):
                for mode, w in (("invariant", W11), ("general", None)):
                    fam = build_chart_family(E, mode, w)
                    origin = specialize_family(fam, {})
                    assert origin == [
                        BivariatePolynomial.of_monomial(c, 1) for c in fam.clefts
                    ]

    def test_general_off_origin_fiber(self):
        fam = build_chart_family(construct_staircase([1, 1]), "general")
        gens = specialize_family(fam, {X_Y1: Fraction(1)})
        assert sorted(p.to_text() for p in gens) == [
            "+1/1·x^0*y^1 +1/1·x^0*y^0",
            "+1/1·x^2*y^0",
        ]
        assert len(standard_monomials(buchberger(gens, LEX_YX))) == 2

    def test_unknown_variable_rejected(self):
        fam = build_chart_family(construct_staircase([1, 1]), "invariant", W11)
        with pytest.raises(DomainError):
            specialize_family(fam, {X_Y1: Fraction(1)})


class TestFlatness:
    def test_domino_invariant_certificate(self):
        cert = verify_flatness(build_chart_family(construct_staircase([1, 1]), "invariant", W11))
        assert cert.valid and cert.leading_ok and cert.origin_ok
        assert all(ok for _, _, ok, _ in cert.spairs)
        assert all(s.colength == 2 for s in cert.samples)

    def test_hook_staircase_general_with_five_random_points(self):
        fam = build_chart_family(construct_staircase([3, 1, 1, 1]), "general")
        cert = verify_flatness(fam, extra_samples=5, seed=20010610)
        assert cert.valid
        assert all(s.colength == 6 for s in cert.samples)

    def test_corrupted_family_is_rejected(self):
        fam = build_chart_family(construct_staircase([1, 1]), "invariant", W11)
        bad_generator = BivariatePolynomial.of_monomial(Monomial(0, 1), 1, DOMAIN_CHART) + (
            BivariatePolynomial.of_monomial(Monomial(0, 2), 1, DOMAIN_CHART).scale(
                ChartCoefficient.variable(X_YX)
            )
        )
        corrupted = dataclasses.replace(fam, generators=(bad_generator, fam.generators[1]))
        cert = verify_flatness(corrupted)
        assert not cert.valid
        assert cert.witness is not None

    def test_all_staircases_both_modes(self):
        for l in range(1, 7):
            for E in enumerate_staircases(l):
                for mode, w in (("invariant", W11), ("general", None)):
                    cert = verify_flatness(build_chart_family(E, mode, w))
                    assert cert.valid, (E.columns, mode, cert.witness)

    def test_sample_specializations_have_initial_staircase_E(self):
        for l in range(1, 6):
            for E in enumerate_staircases(l):
                for mode, w in (("invariant", W11), ("general", None)):
                    fam = build_chart_family(E, mode, w)
                    for point in default_sample_points(fam, extra=2, seed=5):
                        gens = specialize_family(fam, point)
                        assert initial_staircase(gens, LEX_YX) == E

    def test_invariant_mode_is_quasi_homogeneous(self):
        # Every generator P is concentrated in one degree of the grading once
        # the chart variables count for zero.
        for l in range(1, 8):
            for E in enumerate_staircases(l):
                fam = build_chart_family(E, "invariant", W11)
                for c, p in zip(fam.clefts, fam.generators):
                    assert p.weight_degrees(W11) == {W11.degree(c)}

    def test_invariant_mode_min_weight_limit_recovers_the_ideal(self):
        # For torus exponents pairing positively with the direction, the
        # small-parameter limit of every member is the monomial ideal.
        for l in range(1, 6):
            for E in enumerate_staircases(l):
                fam = build_chart_family(E, "invariant", W11)
                expected = [BivariatePolynomial.of_monomial(c, 1) for c in fam.clefts]
                for point in default_sample_points(fam, extra=2, seed=9):
                    gens = specialize_family(fam, point)
                    for vector in ((2, 1), (3, 1)):
                        limit = weight_initial_ideal(gens, vector, "min")
                        assert initial_staircase(limit, LEX_YX) == E
                        assert sorted(p.to_text() for p in limit) == sorted(
                            p.to_text() for p in expected
                        )
