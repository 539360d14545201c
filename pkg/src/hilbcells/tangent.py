"""Cleft couples and the combinatorial tangent space at a monomial subscheme.

A cleft couple pairs a minimal generator of the complement ideal with a cell
of the staircase; the significant couples (those surviving the successor-lcm
test) index a basis of the tangent space to the Hilbert scheme at the
monomial point.  An independent oracle recomputes the same data as the
solution space of an exact linear system on module homomorphisms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BoundExceededError, ConsistencyError, DomainError, GenericityError
from .staircases import Monomial, Staircase, Weight, clefts


@dataclass(frozen=True)
class HalfDirection:
    """Primitive integer vector (f, g), classified positive or negative.

    Positive means f > 0, or f = 0 and g < 0; negative is the mirror.
    """

    f: int
    g: int

    def __post_init__(self):
        if (self.f, self.g) == (0, 0):
            raise DomainError("half-direction cannot be zero")
        if math.gcd(abs(self.f), abs(self.g)) != 1:
            raise DomainError(f"half-direction ({self.f}, {self.g}) is not primitive")

    @property
    def positive(self) -> bool:
        return self.f > 0 or (self.f == 0 and self.g < 0)

    @property
    def sign(self) -> str:
        return "positive" if self.positive else "negative"

    @classmethod
    def of_vector(cls, f: int, g: int) -> "HalfDirection":
        d = math.gcd(abs(f), abs(g))
        if d == 0:
            raise DomainError("half-direction of the zero vector is undefined")
        return cls(f // d, g // d)


@dataclass(frozen=True)
class CleftCouple:
    """A cleft c of the staircase paired with a cell m; its character is m - c."""

    c: Monomial
    m: Monomial

    @property
    def char(self) -> tuple[int, int]:
        return (self.m.alpha - self.c.alpha, self.m.beta - self.c.beta)

    @property
    def halfdir(self) -> HalfDirection:
        return HalfDirection.of_vector(*self.char)

    def has_direction(self, w: Weight) -> bool:
        f, g = self.char
        return f * w.b - g * w.a == 0

    def sort_key(self):
        return (self.c.alpha, self.c.beta, self.m.alpha, self.m.beta)

    def to_json(self, significant: bool | None = None) -> dict:
        data = {
            "c": [self.c.alpha, self.c.beta],
            "m": [self.m.alpha, self.m.beta],
            "halfdir": self.halfdir.sign,
        }
        if significant is not None:
            data["significant"] = significant
        return data


def cleft_couples(E: Staircase, direction: Weight | None = None) -> tuple[CleftCouple, ...]:
    """All (cleft, cell) pairs of E, optionally filtered to one direction.

    A couple with positive half-direction always has strictly negative
    y-increment: the complement is an ideal, so moving a cleft by a
    nonnegative vector cannot land inside E.  Checked at construction.
    """
    out = []
    for c in clefts(E):
        for m in E.cells():
            couple = CleftCouple(c, m)
            if couple.halfdir.positive and couple.char[1] >= 0:
                raise ConsistencyError(f"positive couple {couple} with nonnegative y-increment")
            if direction is None or couple.has_direction(direction):
                out.append(couple)
    return tuple(sorted(out, key=CleftCouple.sort_key))


def _successor(E: Staircase, c: Monomial, positive: bool) -> Monomial | None:
    """Next cleft after c: under the x-lex order if positive, y-lex otherwise."""
    cs = clefts(E)
    i = cs.index(c)
    if positive:
        return cs[i + 1] if i + 1 < len(cs) else None
    return cs[i - 1] if i > 0 else None


def is_significant(E: Staircase, couple: CleftCouple) -> bool:
    """Successor-lcm test: true iff m*(s/c) escapes E, s = lcm(c, successor).

    The maximal cleft under the relevant order has no successor, but also
    carries no couples of the matching half-direction, so returning False
    there is vacuous.
    """
    succ = _successor(E, couple.c, couple.halfdir.positive)
    if succ is None:
        return False
    s = couple.c.lcm(succ)
    shifted = couple.m.mul(s.div(couple.c))
    return shifted not in E


@dataclass(frozen=True)
class TangentBasis:
    """Significant couples of a staircase, split by half-direction.

    Unfiltered, the significant couples form a basis of the tangent space to
    the Hilbert scheme at the monomial subscheme; filtered by a direction
    (a, b), of the invariant tangent space.
    """

    staircase: Staircase
    direction: Weight | None
    couples: tuple[CleftCouple, ...]      # every couple considered, flags below
    flags: tuple[bool, ...]               # significance per couple
    positive: tuple[CleftCouple, ...]     # significant with positive half-direction
    negative: tuple[CleftCouple, ...]

    @property
    def significant(self) -> tuple[CleftCouple, ...]:
        return tuple(c for c, ok in zip(self.couples, self.flags) if ok)

    @property
    def dimension(self) -> int:
        return len(self.positive) + len(self.negative)

    def to_json(self) -> dict:
        return {
            "staircase": self.staircase.to_json(),
            "direction": self.direction.to_json() if self.direction else None,
            "couples": [c.to_json(significant=ok) for c, ok in zip(self.couples, self.flags)],
            "split": {"pos": len(self.positive), "neg": len(self.negative)},
            "dimension": self.dimension,
        }


def tangent_basis(E: Staircase, direction: Weight | None = None) -> TangentBasis:
    """Basis of the (optionally direction-filtered) tangent space at Z(E)."""
    couples = cleft_couples(E, direction)
    flags = tuple(is_significant(E, c) for c in couples)
    sig = [c for c, ok in zip(couples, flags) if ok]
    pos = tuple(c for c in sig if c.halfdir.positive)
    neg = tuple(c for c in sig if not c.halfdir.positive)
    return TangentBasis(E, direction, couples, flags, pos, neg)


def cell_dimension(E: Staircase, weight_vector: tuple[int, int]) -> int:
    """Number of significant couples pairing positively with the weight vector.

    This is the dimension of the attracting cell of Z(E) for the torus action
    with the given coordinate weights; the vector must be generic, i.e.
    orthogonal to no significant character.
    """
    w1, w2 = weight_vector
    count = 0
    for couple in tangent_basis(E).significant:
        f, g = couple.char
        pairing = w1 * f + w2 * g
        if pairing == 0:
            raise GenericityError(
                f"weight vector {weight_vector} is orthogonal to the character "
                f"{couple.char} of couple ({couple.c}, {couple.m})",
                couple=couple,
            )
        if pairing > 0:
            count += 1
    return count


@dataclass(frozen=True)
class SignificanceGraph:
    """Chain graph on the direction-(a, b) couples of a staircase.

    Every node ends at most one arrow and originates at most one; components
    are chains, or isolated self-loops.  The dimension counts chain
    components free of self-loops.
    """

    staircase: Staircase
    direction: Weight
    nodes: tuple[CleftCouple, ...]
    arrows: tuple[tuple[int, int], ...]
    dimension: int

    def to_json(self) -> dict:
        return {
            "staircase": self.staircase.to_json(),
            "direction": self.direction.to_json(),
            "nodes": [n.to_json() for n in self.nodes],
            "arrows": [list(a) for a in self.arrows],
            "dimension": self.dimension,
        }


def significance_graph(E: Staircase, w: Weight) -> SignificanceGraph:
    """Arrows encode the relations forced between couples of direction (a, b).

    Each non-significant couple receives one arrow: from the couple obtained
    by sliding along the successor cleft when that stays on the grid, from
    itself otherwise.
    """
    nodes = cleft_couples(E, direction=w)
    index = {n: i for i, n in enumerate(nodes)}
    arrows: list[tuple[int, int]] = []
    for node in nodes:
        if is_significant(E, node):
            continue
        succ = _successor(E, node.c, node.halfdir.positive)
        if succ is None:
            raise ConsistencyError(f"non-significant couple {node} lacks a successor cleft")
        m2 = Monomial(
            node.m.alpha + succ.alpha - node.c.alpha,
            node.m.beta + succ.beta - node.c.beta,
        )
        if m2.alpha >= 0 and m2.beta >= 0:
            source = CleftCouple(succ, m2)
            if source not in index:
                raise ConsistencyError(f"arrow source {source} is not a graph node")
            arrows.append((index[source], index[node]))
        else:
            arrows.append((index[node], index[node]))

    # Union-find over nodes; a self-loop kills its whole component.
    parent = list(range(len(nodes)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    dead = set()
    for s, t in arrows:
        if s == t:
            dead.add(find(s))
        else:
            rs, rt = find(s), find(t)
            parent[rs] = rt
    components = {find(i) for i in range(len(nodes))}
    dead = {find(d) for d in dead}
    dimension = len(components - dead)
    return SignificanceGraph(E, w, nodes, tuple(arrows), dimension)


@dataclass(frozen=True)
class HomOracleResult:
    """Character multiset and dimension of the module-homomorphism solution space."""

    characters: tuple[tuple[int, int], ...]
    dimension: int


def _nullity_and_free_chars(columns, rows) -> tuple[int, list[tuple[int, int]]]:
    """Sparse Gaussian elimination over the rationals.

    ``columns`` fixes the pivot-search order; each row is a dict from column
    position to coefficient.  Returns the nullity and the characters of the
    free (non-pivot) columns.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        r = dict(row)
        while r:
            lead = min(r.keys())
            if lead not in pivots:
                inv = Fraction(1) / r[lead]
                pivots[lead] = {k: v * inv for k, v in r.items()}
                break
            factor = r[lead]
            for k, v in pivots[lead].items():
                nv = r.get(k, Fraction(0)) - factor * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    free = [columns[j] for j in range(len(columns)) if j not in pivots]
    return len(free), [char for char, _var in free]


def hom_tangent_oracle(E: Staircase, bound: int = 10) -> HomOracleResult:
    """Tangent space via module homomorphisms, as exact linear algebra.

    Unknowns are the coefficients sending each cleft to each cell; the
    lcm-compatibility relations between consecutive clefts (under the x-lex
    order) are imposed as linear equations, with products reduced modulo the
    complement ideal by projecting escaped monomials to zero.  Returns the
    solution-space dimension and its character grading.

    Relations for non-consecutive cleft pairs follow from the consecutive
    ones; for small staircases this is re-checked against the full system.
    """
    if len(E) > bound:
        raise BoundExceededError(f"oracle bound {bound} exceeded by |E| = {len(E)}")
    cs = clefts(E)
    cells = E.cells()

    variables = [((m.alpha - c.alpha, m.beta - c.beta), (i, m))
                 for i, c in enumerate(cs) for m in cells]
    variables.sort()
    position = {var: j for j, (_char, var) in enumerate(variables)}

    def build_rows(pairs):
        rows = []
        for i, j in pairs:
            s = cs[i].lcm(cs[j])
            shift_i = s.div(cs[i])
            shift_j = s.div(cs[j])
            for target in cells:
                row: dict[int, Fraction] = {}
                back_i = Monomial(target.alpha - shift_i.alpha, target.beta - shift_i.beta)
                if back_i in E:
                    row[position[(i, back_i)]] = Fraction(1)
                back_j = Monomial(target.alpha - shift_j.alpha, target.beta - shift_j.beta)
                if back_j in E:
                    row[position[(j, back_j)]] = row.get(position[(j, back_j)], Fraction(0)) - 1
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
        return rows

    consecutive = [(i, i + 1) for i in range(len(cs) - 1)]
    nullity, chars = _nullity_and_free_chars(variables, build_rows(consecutive))

    if len(E) <= 5:
        all_pairs = [(i, j) for i in range(len(cs)) for j in range(i + 1, len(cs))]
        full_nullity, _ = _nullity_and_free_chars(variables, build_rows(all_pairs))
        if full_nullity != nullity:
            raise ConsistencyError(
                f"consecutive-pair system has nullity {nullity} but the full system "
                f"has {full_nullity} for columns {E.columns}"
            )

    return HomOracleResult(tuple(sorted(chars)), nullity)
