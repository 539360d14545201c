"""Explicit chart families over the positive tangent space of a staircase.

The generators deform each cleft by a universal polynomial in chart
variables, one variable per significant positive couple (all of them in
general mode, only those of a fixed direction in invariant mode).  At the
origin the family degenerates to the monomial ideal; flatness is certified
symbolically through S-pair reduction plus sampled specializations of
constant colength.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .errors import ConsistencyError, DomainError, RegimeError
from .polynomials import (
    DOMAIN_CHART,
    LEX_YX,
    BivariatePolynomial,
    ChartCoefficient,
    VarKey,
    buchberger,
    divide,
    s_polynomial,
    standard_monomials,
    variable_name,
)
from .staircases import Monomial, Staircase, Weight, clefts
from .tangent import CleftCouple, tangent_basis

MODE_INVARIANT = "invariant"
MODE_GENERAL = "general"


@dataclass(frozen=True)
class SectorDecomposition:
    """Partition of the complement of E by the largest dividing cleft.

    Sector indices are 1-based and follow the clefts in increasing x-lex
    order: sector i consists of the multiples of cleft i that are not
    multiples of cleft i+1 (all multiples, for the last cleft).
    """

    staircase: Staircase
    clefts: tuple[Monomial, ...]

    def sector(self, m: Monomial) -> int:
        if m in self.staircase:
            raise DomainError(f"{m} lies in the staircase, not in its complement")
        best = 0
        for i, c in enumerate(self.clefts, start=1):
            if c.divides(m):
                best = i
        if best == 0:
            raise ConsistencyError(f"complement monomial {m} divisible by no cleft")
        return best


def sector_decomposition(E: Staircase) -> SectorDecomposition:
    return SectorDecomposition(E, clefts(E))


def couple_key(couple: CleftCouple) -> VarKey:
    return ((couple.c.alpha, couple.c.beta), (couple.m.alpha, couple.m.beta))


@dataclass(frozen=True)
class ChartFamily:
    """Universal ideal generators over the chart variables of a staircase."""

    staircase: Staircase
    mode: str
    weight: Optional[Weight]
    variables: tuple[VarKey, ...]
    clefts: tuple[Monomial, ...]
    generators: tuple[BivariatePolynomial, ...]          # P, aligned with clefts
    q_polynomials: tuple[tuple[VarKey, BivariatePolynomial], ...]

    def to_json(self) -> dict:
        return {
            "staircase": self.staircase.to_json(),
            "mode": self.mode,
            "weight": self.weight.to_json() if self.weight else None,
            "variables": [variable_name(v) for v in self.variables],
            "generators": [p.to_text() for p in self.generators],
            "q": {variable_name(v): q.to_text() for v, q in self.q_polynomials},
        }


def build_chart_family(
    E: Staircase, mode: str, weight: Optional[Weight] = None
) -> ChartFamily:
    """Run the decreasing cleft recursion for the chart generators.

    For each indexed couple (c_i, m) the monomial m*(lcm(c_i, c_{i+1})/c_i)
    escapes the staircase and lands in the sector of a later cleft c_{i+k};
    the couple contributes X[c_i;m] * P(c_{i+k}) * (m/c_{i+k}).  Products are
    formed in Laurent form and must come out polynomial.
    """
    if mode == MODE_INVARIANT:
        if weight is None:
            raise RegimeError("invariant mode needs a weight (a > 0, b < 0)")
        if weight.a <= 0:
            raise RegimeError(f"invariant mode needs a > 0, got ({weight.a}, {weight.b})")
        indexed = tangent_basis(E, weight).positive
    elif mode == MODE_GENERAL:
        if weight is not None:
            raise RegimeError("general mode takes no weight")
        indexed = tangent_basis(E).positive
    else:
        raise DomainError(f"unknown chart mode {mode!r}")

    cs = clefts(E)
    n = len(cs)
    sectors = SectorDecomposition(E, cs)
    by_cleft: dict[int, list[CleftCouple]] = {}
    for couple in indexed:
        by_cleft.setdefault(cs.index(couple.c), []).append(couple)

    P: list[Optional[BivariatePolynomial]] = [None] * n
    P[n - 1] = BivariatePolynomial.of_monomial(cs[n - 1], 1, DOMAIN_CHART)
    q_polys: list[tuple[VarKey, BivariatePolynomial]] = []
    for i in range(n - 2, -1, -1):
        total = P[i + 1].mul_laurent(
            cs[i].alpha - cs[i + 1].alpha, cs[i].beta - cs[i + 1].beta
        )
        g = cs[i].lcm(cs[i + 1])
        for couple in sorted(by_cleft.get(i, ()), key=CleftCouple.sort_key):
            landing = couple.m.mul(g.div(cs[i]))
            target = sectors.sector(landing) - 1
            if target <= i:
                raise ConsistencyError(
                    f"couple ({couple.c}, {couple.m}): landing {landing} sits in "
                    f"sector {target + 1}, not past cleft {i + 1}"
                )
            q = P[target].mul_laurent(
                couple.m.alpha - cs[target].alpha, couple.m.beta - cs[target].beta
            )
            key = couple_key(couple)
            q_polys.append((key, q))
            total = total + q.scale(ChartCoefficient.variable(key))
        P[i] = total

    generators = tuple(P)
    for c, p in zip(cs, generators):
        lm = p.leading_monomial(LEX_YX)
        lc = p.terms[lm]
        if lm != c or not (lc.is_constant and lc.constant_value() == 1):
            raise ConsistencyError(f"generator for cleft {c} has leading term {lm}")
        origin = p.substitute_chart({})
        if origin != BivariatePolynomial.of_monomial(c, 1):
            raise ConsistencyError(f"origin fiber of P({c}) is {origin.to_text()}")

    variables = tuple(sorted(couple_key(cp) for cp in indexed))
    return ChartFamily(E, mode, weight, variables, cs, generators, tuple(q_polys))


def specialize_family(
    fam: ChartFamily, point: Mapping[VarKey, Fraction]
) -> list[BivariatePolynomial]:
    """Substitute rational values for the chart variables; absent means zero."""
    unknown = set(point) - set(fam.variables)
    if unknown:
        names = ", ".join(sorted(variable_name(v) for v in unknown))
        raise DomainError(f"point assigns variables outside the family: {names}")
    values = {k: Fraction(v) for k, v in point.items()}
    return [p.substitute_chart(values) for p in fam.generators]


def default_sample_points(
    fam: ChartFamily, extra: int = 3, seed: int = 7
) -> list[dict[VarKey, Fraction]]:
    """All unit points, then seeded pseudo-random points with small rationals."""
    points: list[dict[VarKey, Fraction]] = []
    for v in fam.variables:
        points.append({v: Fraction(1)})
    rng = random.Random(seed)
    for _ in range(extra):
        points.append(
            {v: Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for v in fam.variables}
        )
    return points


@dataclass(frozen=True)
class SampleCheck:
    point: tuple[tuple[VarKey, str], ...]
    colength: int
    ok: bool

    def to_json(self) -> dict:
        return {
            "point": {variable_name(k): v for k, v in self.point},
            "colength": self.colength,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class FlatnessCertificate:
    """Witness record for the constant-colength property of a chart family."""

    valid: bool
    leading_ok: bool
    spairs: tuple[tuple[int, int, bool, str], ...]
    origin_ok: bool
    samples: tuple[SampleCheck, ...]
    witness: Optional[str]

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "leading_ok": self.leading_ok,
            "spairs": [
                {"i": i, "j": j, "remainder_zero": ok, "remainder": rem}
                for i, j, ok, rem in self.spairs
            ],
            "origin_ok": self.origin_ok,
            "samples": [s.to_json() for s in self.samples],
            "witness": self.witness,
        }


def verify_flatness(
    fam: ChartFamily,
    samples: Optional[Sequence[Mapping[VarKey, Fraction]]] = None,
    extra_samples: int = 3,
    seed: int = 7,
    step_limit: Optional[int] = None,
) -> FlatnessCertificate:
    """Certify constant colength: symbolic S-pairs, origin fiber, samples.

    The symbolic part checks that every consecutive-cleft S-polynomial of the
    generators reduces to zero over the chart ring and that leading monomials
    are exactly the clefts (consecutive pairs suffice: the lcm of two distant
    clefts is divisible by every cleft in between).
    """
    witness = None

    leading_ok = True
    for c, p in zip(fam.clefts, fam.generators):
        lm = p.leading_monomial(LEX_YX)
        lc = p.terms[lm]
        monic = isinstance(lc, ChartCoefficient) and lc.is_constant and lc.constant_value() == 1
        if lm != c or not monic:
            leading_ok = False
            witness = f"generator for cleft {c} leads with {lm}"

    spairs = []
    for i in range(len(fam.generators) - 1):
        try:
            h = s_polynomial(fam.generators[i], fam.generators[i + 1], LEX_YX)
            rem = divide(h, list(fam.generators), LEX_YX, step_limit)[1]
        except DomainError as exc:
            spairs.append((i, i + 1, False, f"reduction failed: {exc}"))
            if witness is None:
                witness = f"S-pair ({i}, {i + 1}) cannot be reduced: {exc}"
            continue
        spairs.append((i, i + 1, not rem, rem.to_text()))
        if rem and witness is None:
            witness = f"S-pair ({i}, {i + 1}) leaves remainder {rem.to_text()}"

    origin = [p.substitute_chart({}) for p in fam.generators]
    expected = [BivariatePolynomial.of_monomial(c, 1) for c in fam.clefts]
    origin_ok = origin == expected
    if not origin_ok and witness is None:
        witness = "origin fiber differs from the monomial ideal"

    if samples is None:
        samples = default_sample_points(fam, extra=extra_samples, seed=seed)
    checks = []
    target = len(fam.staircase)
    for point in samples:
        frozen = tuple(sorted((k, str(Fraction(v))) for k, v in point.items()))
        try:
            gens = specialize_family(fam, point)
            gb = buchberger(gens, LEX_YX, step_limit)
            col = len(standard_monomials(gb))
        except DomainError:
            col = -1
        ok = col == target
        checks.append(SampleCheck(frozen, col, ok))
        if not ok and witness is None:
            witness = f"specialization {dict(frozen)} has colength {col}, expected {target}"

    valid = (
        leading_ok
        and origin_ok
        and all(ok for _, _, ok, _ in spairs)
        and all(c.ok for c in checks)
    )
    return FlatnessCertificate(
        valid, leading_ok, tuple(spairs), origin_ok, tuple(checks), witness
    )
