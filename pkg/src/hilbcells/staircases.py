"""Staircase combinatorics on the monomial grid.

A staircase is a finite subset of the grid whose complement is closed under
addition, i.e. the exponent diagram of the standard monomials of a monomial
ideal.  It is stored as its column heights (a partition), which makes the
divisor-closure automatic.  This module also provides degree gradings by a
primitive weight, Hilbert functions, exhaustive enumeration, cumulative
S-profiles along the global monomial sequence, and the induced partial order
on staircases of equal cardinality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .errors import DomainError, RegimeError, ShapeError


class Monomial(NamedTuple):
    """A monomial x^alpha * y^beta, identified with the grid point (alpha, beta)."""

    alpha: int
    beta: int

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(self.alpha + other.alpha, self.beta + other.beta)

    def divides(self, other: "Monomial") -> bool:
        return self.alpha <= other.alpha and self.beta <= other.beta

    def div(self, other: "Monomial") -> "Monomial":
        """Exact quotient self/other; other must divide self."""
        if not other.divides(self):
            raise DomainError(f"{other} does not divide {self}")
        return Monomial(self.alpha - other.alpha, self.beta - other.beta)

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(self.alpha, other.alpha), max(self.beta, other.beta))

    def __str__(self) -> str:
        if self.alpha == 0 and self.beta == 0:
            return "1"
        parts = []
        if self.alpha:
            parts.append("x" if self.alpha == 1 else f"x^{self.alpha}")
        if self.beta:
            parts.append("y" if self.beta == 1 else f"y^{self.beta}")
        return "*".join(parts)


ONE = Monomial(0, 0)
X = Monomial(1, 0)
Y = Monomial(0, 1)


@dataclass(frozen=True)
class Weight:
    """A primitive direction (a, b), normalized so that b < 0.

    The associated grading of a monomial x^alpha*y^beta is
    ``-b*alpha + a*beta``.
    """

    a: int
    b: int

    def __post_init__(self):
        if (self.a, self.b) == (0, 0):
            raise DomainError("weight (0, 0) is not a direction")
        if math.gcd(abs(self.a), abs(self.b)) != 1:
            raise DomainError(f"weight ({self.a}, {self.b}) is not primitive")
        if self.b >= 0:
            raise DomainError(f"weight ({self.a}, {self.b}) must have b < 0")

    def degree(self, m: Monomial) -> int:
        return -self.b * m.alpha + self.a * m.beta

    @property
    def product(self) -> int:
        return self.a * self.b

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b}

    @classmethod
    def from_json(cls, data: dict) -> "Weight":
        return cls(int(data["a"]), int(data["b"]))


def degree(m: Monomial, w: Weight) -> int:
    """Grading -b*alpha + a*beta of a monomial under the weight (a, b)."""
    return w.degree(m)


@dataclass(frozen=True)
class Staircase:
    """Finite divisor-closed set of monomials, stored as column heights.

    ``columns[i]`` is the number of cells (i, 0), ..., (i, columns[i]-1);
    heights must be positive and weakly decreasing.
    """

    columns: tuple[int, ...]

    def __post_init__(self):
        cols = self.columns
        if any(not isinstance(c, int) or c <= 0 for c in cols):
            raise ShapeError(f"column heights must be positive integers: {list(cols)}")
        if any(cols[i] < cols[i + 1] for i in range(len(cols) - 1)):
            raise ShapeError(f"column heights must be weakly decreasing: {list(cols)}")

    def __len__(self) -> int:
        return sum(self.columns)

    def __contains__(self, m: Monomial) -> bool:
        a, b = m
        return a >= 0 and b >= 0 and a < len(self.columns) and b < self.columns[a]

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def height(self) -> int:
        return self.columns[0] if self.columns else 0

    def cells(self) -> tuple[Monomial, ...]:
        return tuple(
            Monomial(i, j) for i in range(len(self.columns)) for j in range(self.columns[i])
        )

    @classmethod
    def from_cells(cls, cells: Iterable[Monomial]) -> "Staircase":
        cellset = {Monomial(a, b) for a, b in cells}
        if not cellset:
            return cls(())
        width = max(c.alpha for c in cellset) + 1
        heights = []
        for i in range(width):
            column = {c.beta for c in cellset if c.alpha == i}
            if column != set(range(len(column))):
                raise ShapeError(f"column {i} has gaps: not a staircase")
            heights.append(len(column))
        if sum(heights) != len(cellset):
            raise ShapeError("cell set is not a staircase")
        return cls(tuple(heights))

    def to_json(self) -> dict:
        return {"columns": list(self.columns)}

    @classmethod
    def from_json(cls, data: dict) -> "Staircase":
        return construct_staircase(data["columns"])


def construct_staircase(columns: Iterable[int]) -> Staircase:
    """Build a staircase from column heights, trimming trailing zeros."""
    cols = list(columns)
    while cols and cols[-1] == 0:
        cols.pop()
    return Staircase(tuple(int(c) for c in cols))


def clefts(E: Staircase) -> tuple[Monomial, ...]:
    """Minimal monomial generators of the complement ideal, sorted by >_+.

    Sorted ascending under the (alpha, beta)-lexicographic order; reversing
    the tuple gives the ascending view under the (beta, alpha)-lexicographic
    order, since consecutive clefts trade x-exponent against y-exponent.
    """
    if not E.columns:
        raise DomainError("the empty staircase has complement ideal (1); no clefts")
    cols = E.columns
    out = [Monomial(0, cols[0])]
    for i in range(1, len(cols)):
        if cols[i] < cols[i - 1]:
            out.append(Monomial(i, cols[i]))
    out.append(Monomial(len(cols), 0))
    return tuple(out)


@dataclass(frozen=True)
class HilbertFunction:
    """Count of staircase cells per degree, for a fixed weight."""

    weight: Weight
    values: tuple[tuple[int, int], ...]  # sorted (degree, count), counts >= 1

    def __post_init__(self):
        degs = [d for d, _ in self.values]
        if degs != sorted(degs) or len(set(degs)) != len(degs):
            raise DomainError("Hilbert function support must be sorted and duplicate-free")
        if any(c <= 0 for _, c in self.values):
            raise DomainError("Hilbert function counts must be positive")

    @classmethod
    def from_counts(cls, weight: Weight, counts: dict[int, int]) -> "HilbertFunction":
        items = tuple(sorted((int(d), int(c)) for d, c in counts.items() if c != 0))
        return cls(weight, items)

    def as_dict(self) -> dict[int, int]:
        return dict(self.values)

    def count(self, d: int) -> int:
        return dict(self.values).get(d, 0)

    def total(self) -> int:
        return sum(c for _, c in self.values)

    def to_json(self) -> dict:
        return {
            "a": self.weight.a,
            "b": self.weight.b,
            "values": {str(d): c for d, c in self.values},
        }

    @classmethod
    def from_json(cls, data: dict) -> "HilbertFunction":
        w = Weight(int(data["a"]), int(data["b"]))
        return cls.from_counts(w, {int(k): int(v) for k, v in data["values"].items()})


def hilbert_function(E: Staircase, w: Weight) -> HilbertFunction:
    """Number of cells of E in each degree of the w-grading."""
    counts: dict[int, int] = {}
    for cell in E.cells():
        d = w.degree(cell)
        counts[d] = counts.get(d, 0) + 1
    return HilbertFunction.from_counts(w, counts)


@lru_cache(maxsize=None)
def _partitions(total: int) -> tuple[tuple[int, ...], ...]:
    """All weakly decreasing positive tuples with the given sum, lex sorted."""
    if total == 0:
        return ((),)

    def gen(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(sorted(gen(total, total)))


def enumerate_staircases(cardinality: int) -> tuple[Staircase, ...]:
    """All staircases with the given number of cells, lex-ordered by columns."""
    if cardinality < 0:
        raise DomainError("cardinality must be nonnegative")
    return tuple(Staircase(p) for p in _partitions(cardinality))


def compatible_staircases(H: HilbertFunction) -> tuple[Staircase, ...]:
    """All staircases whose Hilbert function equals H, by exhaustive filtering."""
    return tuple(
        E for E in enumerate_staircases(H.total()) if hilbert_function(E, H.weight) == H
    )


def _require_positive_regime(w: Weight) -> None:
    if w.a <= 0:
        raise RegimeError(
            f"weight ({w.a}, {w.b}) rejected: the global monomial sequence needs a > 0, b < 0"
        )


def monomial_sequence(w: Weight) -> Iterator[Monomial]:
    """All grid monomials in increasing (degree, y-exponent) order.

    Requires a > 0 and b < 0 so each degree holds finitely many monomials and
    the enumeration is a well-ordering of the whole grid.
    """
    _require_positive_regime(w)
    delta = 0
    while True:
        for beta in range(delta // w.a + 1):
            rem = delta - w.a * beta
            if rem % (-w.b) == 0:
                yield Monomial(rem // (-w.b), beta)
        delta += 1


@dataclass(frozen=True)
class SProfile:
    """Cumulative cell counts of a staircase along the global monomial sequence.

    ``counts[k]`` is the number of cells at positions <= k; the last entry sits
    at the position of the staircase's largest cell, beyond which the profile
    is constant equal to the cardinality.
    """

    weight: Weight
    counts: tuple[int, ...]

    @property
    def stabilization_index(self) -> int:
        return len(self.counts) - 1

    def value(self, k: int) -> int:
        return self.counts[k] if k < len(self.counts) else self.counts[-1]


def s_profile(E: Staircase, w: Weight) -> SProfile:
    """The cumulative profile of E along the (degree, y-exponent) sequence.

    The enumeration stops at the end of the degree block holding the largest
    cell, so profiles of staircases with equal Hilbert functions share their
    horizon; beyond it the profile is constant.
    """
    _require_positive_regime(w)
    if not E.columns:
        raise DomainError("s_profile of the empty staircase is undefined")
    top_degree = max(w.degree(m) for m in E.cells())
    counts = []
    running = 0
    for m in monomial_sequence(w):
        if w.degree(m) > top_degree:
            break
        running += 1 if m in E else 0
        counts.append(running)
    return SProfile(w, tuple(counts))


class Comparison(Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def compare_staircases(E: Staircase, F: Staircase, w: Weight) -> Comparison:
    """Partial order on equal-cardinality staircases via pointwise S-profiles.

    E is greater than F when its profile dominates F's everywhere with at
    least one strict inequality.  Identical profiles force E == F, so the
    dominance test below is automatically strict somewhere when E != F.
    """
    if len(E) != len(F):
        raise DomainError(f"cardinality mismatch: {len(E)} vs {len(F)}")
    if E == F:
        return Comparison.EQUAL
    pe, pf = s_profile(E, w), s_profile(F, w)
    horizon = max(pe.stabilization_index, pf.stabilization_index)
    ge = all(pe.value(k) >= pf.value(k) for k in range(horizon + 1))
    le = all(pe.value(k) <= pf.value(k) for k in range(horizon + 1))
    if ge:
        return Comparison.GREATER
    if le:
        return Comparison.LESS
    return Comparison.INCOMPARABLE
