"""Degenerations between strata and the minimal staircase of a component.

One degeneration step specializes the invariant chart family of a staircase
at a nonzero point and takes the flat limit of the orbit under the torus
scaling x alone; the limit is a strictly smaller staircase with the same
Hilbert function.  Iterating lands on the unique compatible staircase with
trivial positive tangent space, which the bottom-row recursion constructs
directly and an exhaustive oracle double-checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .charts import build_chart_family, couple_key, specialize_family
from .errors import (
    BoundExceededError,
    ConsistencyError,
    DomainError,
    RegimeError,
    UnrealizableError,
)
from .polynomials import (
    LEX_YX,
    BivariatePolynomial,
    VarKey,
    initial_staircase,
    variable_name,
    weight_initial_ideal,
)
from .staircases import (
    Comparison,
    HilbertFunction,
    SProfile,
    Staircase,
    Weight,
    clefts,
    compare_staircases,
    compatible_staircases,
    enumerate_staircases,
    hilbert_function,
    s_profile,
)
from .tangent import CleftCouple, cell_dimension, tangent_basis


def _require_descent_regime(w: Weight) -> None:
    if w.a <= 0:
        raise RegimeError(f"degenerations need a > 0, b < 0; got ({w.a}, {w.b})")


def _canonical_positive_couples(E: Staircase, w: Weight) -> list[CleftCouple]:
    """Positive couples ordered by cleft under the y-lex order, then cell."""
    minus_rank = {c: i for i, c in enumerate(reversed(clefts(E)))}
    couples = list(tangent_basis(E, w).positive)
    couples.sort(key=lambda cp: (minus_rank[cp.c], (cp.m.alpha, cp.m.beta)))
    return couples


@dataclass(frozen=True)
class DegenerationStep:
    """One strict descent in the staircase order, with full evidence."""

    source: Staircase
    couple: CleftCouple
    point: tuple[tuple[VarKey, str], ...]
    specialized: tuple[BivariatePolynomial, ...]
    limit: tuple[BivariatePolynomial, ...]
    target: Staircase
    source_profile: SProfile
    target_profile: SProfile

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "couple": self.couple.to_json(),
            "point": {variable_name(k): v for k, v in self.point},
            "specialized": [p.to_text() for p in self.specialized],
            "limit": [p.to_text() for p in self.limit],
            "target": self.target.to_json(),
            "profiles": {
                "source": list(self.source_profile.counts),
                "target": list(self.target_profile.counts),
            },
        }


def degenerate_once(
    E: Staircase,
    w: Weight,
    couple: Optional[CleftCouple] = None,
    step_limit: Optional[int] = None,
) -> DegenerationStep:
    """Flat limit of the unit-point member of the invariant family of E.

    The limit ideal is the x-weight-maximal initial ideal of the specialized
    generators; its staircase is certified distinct from E, strictly below it
    in the S-profile order, and of equal Hilbert function.
    """
    _require_descent_regime(w)
    candidates = _canonical_positive_couples(E, w)
    if not candidates:
        raise DomainError(f"positive tangent space of {E.columns} in direction "
                          f"({w.a}, {w.b}) is empty; nothing to degenerate")
    if couple is None:
        couple = candidates[0]
    elif couple not in candidates:
        raise DomainError(f"({couple.c}, {couple.m}) is not a significant positive "
                          f"couple of direction ({w.a}, {w.b})")

    fam = build_chart_family(E, "invariant", w)
    point = {couple_key(couple): Fraction(1)}
    gens = specialize_family(fam, point)
    limit = weight_initial_ideal(gens, (1, 0), "max", step_limit)
    F = initial_staircase(limit, LEX_YX, step_limit)

    dump = (
        f"source {E.columns}, couple ({couple.c}, {couple.m}), "
        f"specialized [{'; '.join(p.to_text() for p in gens)}], "
        f"limit [{'; '.join(p.to_text() for p in limit)}], target {F.columns}"
    )
    if F == E:
        raise ConsistencyError(f"degeneration did not move: {dump}")
    if hilbert_function(F, w) != hilbert_function(E, w):
        raise ConsistencyError(f"degeneration changed the Hilbert function: {dump}")
    if compare_staircases(F, E, w) != Comparison.LESS:
        raise ConsistencyError(f"limit staircase is not below the source: {dump}")

    frozen_point = tuple(sorted((k, str(v)) for k, v in point.items()))
    return DegenerationStep(
        E, couple, frozen_point, tuple(gens), tuple(limit), F,
        s_profile(E, w), s_profile(F, w),
    )


def descend_to_minimal(
    E: Staircase,
    w: Weight,
    policy: str = "first",
    seed: int = 0,
    step_limit: Optional[int] = None,
) -> tuple[DegenerationStep, ...]:
    """Degenerate until the positive tangent space vanishes.

    The couple picked at each step follows the policy (first, last, or
    seeded random); the endpoint does not depend on it.
    """
    _require_descent_regime(w)
    if policy not in ("first", "last", "random"):
        raise DomainError(f"unknown policy {policy!r}")
    rng = random.Random(seed)
    chain: list[DegenerationStep] = []
    current = E
    cap = len(enumerate_staircases(len(E)))
    while True:
        candidates = _canonical_positive_couples(current, w)
        if not candidates:
            return tuple(chain)
        if policy == "first":
            chosen = candidates[0]
        elif policy == "last":
            chosen = candidates[-1]
        else:
            chosen = rng.choice(candidates)
        step = degenerate_once(current, w, chosen, step_limit)
        chain.append(step)
        current = step.target
        if len(chain) > cap:
            raise ConsistencyError(f"descent from {E.columns} exceeded {cap} steps")


def minimal_staircase(H: HilbertFunction) -> Staircase:
    """Bottom-row recursion for the least compatible staircase.

    The bottom row keeps the powers of x whose degree sees the count of H
    rise; the rest of the staircase is the shifted solution for the residual
    Hilbert function.  The result is validated against H.
    """
    w = H.weight
    if w.a <= 0:
        raise RegimeError(f"minimal staircase needs a > 0, b < 0; got ({w.a}, {w.b})")
    columns = _minimal_columns(H.as_dict(), w)
    E = Staircase(columns)
    if hilbert_function(E, w) != H:
        raise UnrealizableError(f"H not realizable: recursion output {columns} misses it")
    return E


def _minimal_columns(values: dict[int, int], w: Weight) -> tuple[int, ...]:
    values = {d: c for d, c in values.items() if c != 0}
    if not values:
        return ()
    if any(c < 0 for c in values.values()):
        raise UnrealizableError("H not realizable: negative residual count")
    step = -w.b  # degree of x
    maxdeg = max(values)

    def count(d: int) -> int:
        return values.get(d, 0)

    admissible = [j for j in range(maxdeg // step + 1) if count(step * j - w.a) < count(step * j)]
    if not admissible:
        raise UnrealizableError("H not realizable: no admissible bottom row")
    k = max(admissible)

    bottom_degrees = [step * j for j in range(k + 1)]
    residual: dict[int, int] = {}
    degrees = set(values) | set(bottom_degrees)
    for d in degrees:
        c = count(d) - bottom_degrees.count(d)
        if c < 0:
            raise UnrealizableError("H not realizable: bottom row exceeds a count")
        if c:
            residual[d - w.a] = c

    upper = _minimal_columns(residual, w)
    if len(upper) > k + 1:
        raise UnrealizableError("H not realizable: upper part wider than the bottom row")
    return tuple(u + 1 for u in upper) + (1,) * (k + 1 - len(upper))


def minimal_staircase_oracle(H: HilbertFunction, bound: int = 14) -> Staircase:
    """Exhaustive check of the minimal staircase: enumerate, filter, compare.

    Hard-errors if the compatible set does not contain exactly one staircase
    with empty positive part, or if that one is not below every other.
    """
    if H.total() > bound:
        raise BoundExceededError(f"oracle bound {bound} exceeded by mass {H.total()}")
    w = H.weight
    if w.a <= 0:
        raise RegimeError(f"oracle needs a > 0, b < 0; got ({w.a}, {w.b})")
    compatible = compatible_staircases(H)
    if not compatible:
        raise UnrealizableError("no compatible staircase")
    empty_positive = [E for E in compatible if not tangent_basis(E, w).positive]
    if len(empty_positive) != 1:
        raise ConsistencyError(
            f"{len(empty_positive)} compatible staircases with empty positive part "
            f"for {H.as_dict()}; expected exactly one"
        )
    least = empty_positive[0]
    for other in compatible:
        if other != least and compare_staircases(least, other, w) != Comparison.LESS:
            raise ConsistencyError(
                f"{least.columns} is not below {other.columns} in the staircase order"
            )
    return least


@dataclass(frozen=True)
class StratumData:
    staircase: Staircase
    dim_ab: int
    dim_pos: int
    dim_neg: int

    def to_json(self) -> dict:
        return {
            "columns": list(self.staircase.columns),
            "dim_ab": self.dim_ab,
            "dim_pos": self.dim_pos,
            "dim_neg": self.dim_neg,
        }


@dataclass(frozen=True)
class ComponentReport:
    """Everything the library knows about one Hilbert-function class."""

    weight: Weight
    hilbert: HilbertFunction
    strata: tuple[StratumData, ...]
    minimal: Staircase
    dimension: int
    chains: tuple[tuple[Staircase, ...], ...]

    def to_json(self) -> dict:
        return {
            "weight": self.weight.to_json(),
            "H": {str(d): c for d, c in self.hilbert.values},
            "strata": [s.to_json() for s in self.strata],
            "minimal": self.minimal.to_json(),
            "dimension": self.dimension,
            "chains": [[list(E.columns) for E in chain] for chain in self.chains],
        }


def component_report(length: int, w: Weight, bound: int = 12) -> list[ComponentReport]:
    """Group the staircases of one length by Hilbert function and certify each class.

    In the descent regime (a > 0) every class gets per-stratum tangent data,
    a dimension-constancy check, the minimal staircase computed both by
    recursion and by the enumeration oracle, and a descent chain from every
    stratum.  Otherwise classes collapse to single strata.
    """
    if length > bound:
        raise BoundExceededError(f"component bound {bound} exceeded by length {length}")
    groups: dict[HilbertFunction, list[Staircase]] = {}
    for E in enumerate_staircases(length):
        groups.setdefault(hilbert_function(E, w), []).append(E)

    reports = []
    for H in sorted(groups, key=lambda h: h.values):
        members = groups[H]
        data = []
        for E in members:
            tb = tangent_basis(E, w)
            data.append(StratumData(E, tb.dimension, len(tb.positive), len(tb.negative)))

        if w.a > 0:
            dims = {s.dim_ab for s in data}
            if len(dims) != 1:
                raise ConsistencyError(f"tangent dimension varies over {H.as_dict()}: {dims}")
            minimal = minimal_staircase(H)
            oracle = minimal_staircase_oracle(H, bound=max(bound, H.total()))
            if minimal != oracle:
                raise ConsistencyError(
                    f"recursion gives {minimal.columns} but enumeration gives {oracle.columns}"
                )
            empty = [s for s in data if s.dim_pos == 0]
            if len(empty) != 1 or empty[0].staircase != minimal:
                raise ConsistencyError(f"minimal stratum mismatch for {H.as_dict()}")
            chains = []
            for E in members:
                steps = descend_to_minimal(E, w)
                end = steps[-1].target if steps else E
                if end != minimal:
                    raise ConsistencyError(
                        f"descent from {E.columns} ends at {end.columns}, "
                        f"not {minimal.columns}"
                    )
                chains.append((E,) + tuple(s.target for s in steps))
            dimension = dims.pop()
        else:
            if len(members) != 1:
                raise ConsistencyError(
                    f"{len(members)} staircases share H = {H.as_dict()} although a <= 0"
                )
            if w.a < 0 and data[0].dim_ab != 0:
                raise ConsistencyError(
                    f"nonzero invariant tangent space at {members[0].columns} with a*b > 0"
                )
            minimal = members[0]
            chains = [(members[0],)]
            dimension = data[0].dim_ab

        reports.append(ComponentReport(w, H, tuple(data), minimal, dimension, tuple(chains)))
    return reports


def poincare_polynomial(length: int, weight_vector: tuple[int, int]) -> dict[int, int]:
    """Cell-dimension census over all staircases of one length.

    Needs a covering torus action: both weight-vector entries negative and
    no orthogonal significant character anywhere at this length.
    """
    w1, w2 = weight_vector
    if w1 >= 0 or w2 >= 0:
        raise RegimeError(
            f"weight vector {weight_vector} must have both entries negative"
        )
    counts: dict[int, int] = {}
    for E in enumerate_staircases(length):
        d = cell_dimension(E, weight_vector)
        counts[d] = counts.get(d, 0) + 1
    return dict(sorted(counts.items()))
