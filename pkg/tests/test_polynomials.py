import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hilbcells import (
    GRLEX_XY,
    LEX_XY,
    LEX_YX,
    BivariatePolynomial,
    ChartCoefficient,
    DomainError,
    Monomial,
    NotZeroDimensionalError,
    StepLimitExceeded,
    Weight,
    buchberger,
    cell_order,
    clefts,
    construct_staircase,
    divide,
    enumerate_staircases,
    initial_staircase,
    is_groebner,
    monomial_compare,
    parse_ideal,
    poly_from_expr,
    poly_from_text,
    standard_monomials,
    weight_initial_ideal,
    weight_order,
)
from hilbcells.charts import build_chart_family, specialize_family
from hilbcells.polynomials import DOMAIN_CHART

W11 = Weight(1, -1)

LENGTH_SEVEN_IDEAL = "x*y^2+y^3; x^2*y+x*y^2; x^3+x^2*y-x*y-y^2; y^4-y^3"


def cleft_generators(E):
    return [BivariatePolynomial.of_monomial(c, 1) for c in clefts(E)]


class TestOrders:
    def test_compare_examples(self):
        x, y = Monomial(1, 0), Monomial(0, 1)
        assert monomial_compare(x, y, LEX_XY) == 1
        assert monomial_compare(x, y, LEX_YX) == -1
        assert monomial_compare(x, y, cell_order(W11)) == -1

    def test_cell_order_regime(self):
        with pytest.raises(DomainError):
            cell_order(Weight(-1, -2))
        with pytest.raises(DomainError):
            cell_order(Weight(0, -1))

    def test_weight_order_validation(self):
        with pytest.raises(DomainError):
            weight_order((1, 0), "towards")

    def test_globality(self):
        assert weight_order((1, 0), "max").is_global
        assert not weight_order((2, 1), "min").is_global


class TestParsing:
    def test_expr(self):
        p = poly_from_expr("x*y^2 + y^3")
        assert p.terms == {Monomial(1, 2): Fraction(1), Monomial(0, 3): Fraction(1)}
        q = poly_from_expr("2/3*x - y + 1")
        assert q.terms == {
            Monomial(1, 0): Fraction(2, 3),
            Monomial(0, 1): Fraction(-1),
            Monomial(0, 0): Fraction(1),
        }

    def test_expr_rejects_garbage(self):
        with pytest.raises(DomainError):
            poly_from_expr("x + + y")
        with pytest.raises(DomainError):
            poly_from_expr("z^2")

    def test_ideal(self):
        gens = parse_ideal(LENGTH_SEVEN_IDEAL)
        assert len(gens) == 4


class TestDivision:
    def test_monomial_quotient(self):
        q, r = divide(poly_from_expr("x^2*y"), [poly_from_expr("x^2")], LEX_YX)
        assert q[0] == poly_from_expr("y") and not r

    def test_self_division(self):
        f = poly_from_expr("y+x")
        q, r = divide(f, [f, poly_from_expr("x^2")], LEX_YX)
        assert q[0] == poly_from_expr("1") and not q[1] and not r

    def test_skips_to_matching_divisor(self):
        q, r = divide(poly_from_expr("x^3"), parse_ideal("y+x; x^2"), LEX_YX)
        assert not q[0] and q[1] == poly_from_expr("x") and not r

    def test_non_invertible_leading_coefficient(self):
        x = BivariatePolynomial.of_monomial(Monomial(1, 0), 1, DOMAIN_CHART)
        bad = x.scale(ChartCoefficient.variable(((0, 1), (1, 0))))
        with pytest.raises(DomainError):
            divide(x, [bad], LEX_YX)

    def test_step_guard(self):
        with pytest.raises(StepLimitExceeded):
            divide(poly_from_expr("x^5"), [poly_from_expr("x-1")], LEX_XY, step_limit=2)


small_polys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)),
    st.fractions(min_value=-4, max_value=4, max_denominator=3),
    min_size=0,
    max_size=5,
).map(lambda d: BivariatePolynomial({Monomial(*k): v for k, v in d.items()}))

nonzero_polys = small_polys.filter(bool)


class TestDivisionInvariant:
    @given(f=small_polys, divisors=st.lists(nonzero_polys, min_size=1, max_size=3))
    @settings(max_examples=150, deadline=None)
    def test_exact_identity(self, f, divisors):
        for order in (LEX_XY, LEX_YX, GRLEX_XY):
            quotients, remainder = divide(f, divisors, order)
            recombined = remainder
            for q, d in zip(quotients, divisors):
                recombined = recombined + q * d
            assert recombined == f
            leaders = [d.leading_monomial(order) for d in divisors]
            for m in remainder.terms:
                assert not any(lm.divides(m) for lm in leaders)


class TestChartDivisionInvariant:
    def test_exact_identity_over_the_chart_ring(self):
        # Symbolic division against the monic chart generators satisfies the
        # same exact identity as over the rationals.
        x_poly = BivariatePolynomial.of_monomial(Monomial(1, 0), 1, DOMAIN_CHART)
        for columns in ((3, 1, 1, 1), (2, 2), (4, 2)):
            fam = build_chart_family(construct_staircase(list(columns)), "general")
            gens = list(fam.generators)
            extra = ChartCoefficient.variable(fam.variables[0])
            f = gens[0] * gens[-1] + gens[0].mul_monomial(Monomial(1, 2)).scale(extra) + x_poly
            # The generators are monic in their clefts only under the y-lex
            # order; any other order may hit a variable leading coefficient.
            quotients, remainder = divide(f, gens, LEX_YX)
            recombined = remainder
            for q, d in zip(quotients, gens):
                recombined = recombined + q * d
            assert recombined == f
            leaders = [d.leading_monomial(LEX_YX) for d in gens]
            for m in remainder.terms:
                assert not any(lm.divides(m) for lm in leaders)


class TestBuchberger:
    def test_line_and_square(self):
        gb = buchberger(parse_ideal("y+x; x^2"), LEX_YX)
        assert set(gb.leading_monomials) == {Monomial(0, 1), Monomial(2, 0)}
        E = standard_monomials(gb)
        assert E.columns == (1, 1) and len(E) == 2

    def test_length_seven_basis_is_groebner(self):
        gens = parse_ideal(LENGTH_SEVEN_IDEAL)
        cert = is_groebner(gens, GRLEX_XY)
        assert cert.is_groebner
        assert all(p.remainder_zero for p in cert.pairs)

    def test_length_seven_colength(self):
        gb = buchberger(parse_ideal(LENGTH_SEVEN_IDEAL), GRLEX_XY)
        E = standard_monomials(gb)
        assert E.columns == (4, 2, 1) and len(E) == 7

    def test_single_monomial(self):
        gb = buchberger([poly_from_expr("x")], LEX_XY)
        assert [g.to_text() for g in gb.generators] == ["+1/1·x^1*y^0"]

    def test_idempotent(self):
        gb = buchberger(parse_ideal(LENGTH_SEVEN_IDEAL), GRLEX_XY)
        again = buchberger(list(gb.generators), GRLEX_XY)
        assert again.generators == gb.generators
        assert standard_monomials(again) == standard_monomials(gb)

    def test_zero_generator_rejected(self):
        with pytest.raises(DomainError):
            buchberger([BivariatePolynomial.zero()], LEX_XY)

    def test_interreduction_keeps_the_ideal(self):
        # {x, x+y} generates (x, y); a naive leading-term filter would lose y.
        gb = buchberger(parse_ideal("x; x+y"), LEX_XY)
        assert standard_monomials(gb).columns == (1,)

    def test_square_plus_y_instance(self):
        # The S-polynomial of x^2+y and y^2 is y^3, which reduces to zero, so
        # the pair is already a basis; the check agrees with the fixpoint.
        gens = parse_ideal("x^2+y; y^2")
        assert is_groebner(gens, LEX_XY).is_groebner
        basis = buchberger(gens, LEX_XY).generators
        assert sorted(g.to_text() for g in basis) == sorted(g.to_text() for g in gens)

    def test_output_passes_is_groebner(self):
        rng = random.Random(3)
        for _ in range(15):
            gens = []
            for _k in range(rng.randint(1, 3)):
                terms = {
                    Monomial(rng.randint(0, 3), rng.randint(0, 3)): Fraction(
                        rng.randint(-3, 3)
                    )
                    for _t in range(rng.randint(1, 4))
                }
                p = BivariatePolynomial(terms)
                if p:
                    gens.append(p)
            if not gens:
                continue
            for order in (LEX_XY, LEX_YX, GRLEX_XY):
                gb = buchberger(gens, order)
                assert is_groebner(list(gb.generators), order).is_groebner


class TestStandardMonomials:
    def test_examples(self):
        assert standard_monomials(buchberger(parse_ideal("y; x^2"), LEX_YX)).columns == (1, 1)
        assert standard_monomials(
            buchberger(parse_ideal("y^3; x*y; x^4"), LEX_YX)
        ).columns == (3, 1, 1, 1)

    def test_unit_ideal(self):
        gb = buchberger(parse_ideal("x; x+1"), LEX_XY)
        assert standard_monomials(gb).columns == ()

    def test_not_zero_dimensional(self):
        gb = buchberger([poly_from_expr("x")], LEX_XY)
        with pytest.raises(NotZeroDimensionalError):
            standard_monomials(gb)


class TestInitialStaircase:
    def test_examples(self):
        assert initial_staircase(parse_ideal("y+x; x^2"), cell_order(W11)).columns == (1, 1)
        assert initial_staircase(parse_ideal("x-1; y-2"), LEX_XY).columns == (1,)
        assert initial_staircase(parse_ideal(LENGTH_SEVEN_IDEAL), GRLEX_XY).columns == (4, 2, 1)

    def test_monomial_ideal_is_fixed(self):
        for l in range(1, 9):
            for E in enumerate_staircases(l):
                gens = cleft_generators(E)
                for order in (LEX_XY, LEX_YX, GRLEX_XY, cell_order(W11)):
                    assert initial_staircase(gens, order) == E


class TestWeightInitial:
    def test_max_limit(self):
        limit = weight_initial_ideal(parse_ideal("y+x; x^2"), (1, 0), "max")
        assert sorted(p.to_text() for p in limit) == ["+1/1·x^0*y^2", "+1/1·x^1*y^0"]
        assert initial_staircase(limit, LEX_YX).columns == (2,)

    def test_min_limit(self):
        limit = weight_initial_ideal(parse_ideal("y+x; x^2"), (2, 1), "min")
        assert initial_staircase(limit, LEX_YX).columns == (1, 1)
        assert sorted(p.to_text() for p in limit) == ["+1/1·x^0*y^1", "+1/1·x^2*y^0"]

    def test_monomial_ideal_fixed(self):
        gens = parse_ideal("y^3; x*y; x^4")
        limit = weight_initial_ideal(gens, (1, 0), "max")
        assert initial_staircase(limit, LEX_YX).columns == (3, 1, 1, 1)

    def test_colength_preserved_max_on_random_ideals(self):
        rng = random.Random(11)
        for _ in range(10):
            l = rng.randint(1, 8)
            E = rng.choice(enumerate_staircases(l))
            fam = build_chart_family(E, "general")
            point = {
                v: Fraction(rng.randint(-2, 2), rng.randint(1, 2)) for v in fam.variables
            }
            gens = specialize_family(fam, point)
            vector = (rng.randint(0, 3), rng.randint(0, 3))
            limit = weight_initial_ideal(gens, vector, "max")
            assert len(initial_staircase(limit, LEX_YX)) == l

    def test_colength_preserved_min_on_graded_ideals(self):
        rng = random.Random(13)
        for _ in range(10):
            l = rng.randint(1, 8)
            E = rng.choice(enumerate_staircases(l))
            fam = build_chart_family(E, "invariant", W11)
            point = {
                v: Fraction(rng.randint(-2, 2), rng.randint(1, 2)) for v in fam.variables
            }
            gens = specialize_family(fam, point)
            limit = weight_initial_ideal(gens, (2, 1), "min")
            assert len(initial_staircase(limit, LEX_YX)) == l


class TestSerialization:
    @given(p=small_polys)
    @settings(max_examples=100, deadline=None)
    def test_text_round_trip(self, p):
        assert poly_from_text(p.to_text()) == p

    @given(p=small_polys)
    @settings(max_examples=100, deadline=None)
    def test_json_round_trip(self, p):
        assert BivariatePolynomial.from_json(p.to_json()) == p

    def test_chart_round_trip(self):
        E = construct_staircase([3, 1, 1, 1])
        fam = build_chart_family(E, "general")
        for p in fam.generators:
            assert poly_from_text(p.to_text(), domain=DOMAIN_CHART) == p
            assert poly_from_text(p.to_text()).to_text() == p.to_text()
            assert BivariatePolynomial.from_json(p.to_json()) == p

    def test_chart_coefficient_algebra(self):
        a = ChartCoefficient.variable(((0, 1), (1, 0)))
        b = ChartCoefficient.variable(((0, 1), (0, 0)))
        two = ChartCoefficient.from_fraction(2)
        assert (a + b) - b == a
        assert (a * b).render() == "1*X[0,1;0,0]^1*X[0,1;1,0]^1"
        assert (a * two).substitute({((0, 1), (1, 0)): Fraction(3)}) == 6
        assert not (a - a)
        assert two.is_constant and two.constant_value() == 2
        assert not a.is_constant
