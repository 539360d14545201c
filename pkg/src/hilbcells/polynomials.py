"""Exact bivariate polynomial arithmetic over two coefficient domains.

Coefficients are either arbitrary-precision rationals or elements of a
polynomial ring in chart variables over the rationals.  On top of the
arithmetic live monomial orders, multivariate division, the Buchberger
algorithm with a hard resource guard, standard monomials of zero-dimensional
ideals, and extremal-weight initial ideals (flat limits of one-parameter
orbits).

Weight-refined orders with ``min`` extremum are local (the unit monomial is
maximal among weight-zero monomials); Buchberger and division still
terminate on the graded inputs this library feeds them, and the step guard
turns any divergence into a hard error rather than a silent truncation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .errors import (
    DomainError,
    NonPolynomialError,
    NotZeroDimensionalError,
    RegimeError,
    StepLimitExceeded,
)
from .staircases import Monomial, Staircase, Weight

DEFAULT_STEP_LIMIT = 500_000

DOMAIN_RATIONAL = "rational"
DOMAIN_CHART = "chart"


# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialOrder:
    """Total multiplicative order on grid monomials, compared via sort keys."""

    kind: str
    weight: Optional[Weight] = None
    vector: Optional[tuple[int, int]] = None
    extremum: Optional[str] = None
    tiebreak: Optional["MonomialOrder"] = None

    def key(self, m: Monomial):
        if self.kind == "lex_xy":
            return (m.alpha, m.beta)
        if self.kind == "lex_yx":
            return (m.beta, m.alpha)
        if self.kind == "grlex_xy":
            return (m.alpha + m.beta, m.alpha)
        if self.kind == "cell":
            return (self.weight.degree(m), m.beta)
        if self.kind == "weighted":
            s = self.vector[0] * m.alpha + self.vector[1] * m.beta
            lead = s if self.extremum == "max" else -s
            return (lead,) + self.tiebreak.key(m)
        raise DomainError(f"unknown monomial order kind {self.kind!r}")

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    @property
    def is_global(self) -> bool:
        """True when the unit monomial is minimal, so division terminates."""
        if self.kind != "weighted":
            return True
        v1, v2 = self.vector
        if self.extremum == "max":
            return v1 >= 0 and v2 >= 0
        return v1 <= 0 and v2 <= 0


_SPOT_SAMPLE = [Monomial(a, b) for a in range(4) for b in range(4)]


def _spot_check(order: MonomialOrder) -> MonomialOrder:
    # Multiplicativity and, for global orders, 1 <= m, on a sample grid.
    for m1 in _SPOT_SAMPLE:
        for m2 in _SPOT_SAMPLE:
            c = order.compare(m1, m2)
            for t in (Monomial(1, 0), Monomial(0, 1), Monomial(2, 3)):
                if order.compare(m1.mul(t), m2.mul(t)) != c:
                    raise DomainError(f"order {order.kind} is not multiplicative")
    if order.is_global:
        one = Monomial(0, 0)
        for m in _SPOT_SAMPLE:
            if m != one and order.compare(one, m) >= 0:
                raise DomainError(f"order {order.kind} does not satisfy 1 <= m")
    return order


LEX_XY = _spot_check(MonomialOrder("lex_xy"))
LEX_YX = _spot_check(MonomialOrder("lex_yx"))
GRLEX_XY = _spot_check(MonomialOrder("grlex_xy"))


def cell_order(w: Weight) -> MonomialOrder:
    """The (degree, y-exponent) order; a monomial order only when a*b < 0."""
    if w.product >= 0:
        raise RegimeError(f"cell order needs a*b < 0, got ({w.a}, {w.b})")
    return _spot_check(MonomialOrder("cell", weight=w))


def weight_order(
    vector: tuple[int, int], extremum: str, tiebreak: MonomialOrder = LEX_YX
) -> MonomialOrder:
    """Compare by extremal weight first, then by the tiebreak order."""
    if extremum not in ("max", "min"):
        raise DomainError(f"extremum must be 'max' or 'min', got {extremum!r}")
    order = MonomialOrder(
        "weighted", vector=(int(vector[0]), int(vector[1])), extremum=extremum, tiebreak=tiebreak
    )
    return _spot_check(order)


def monomial_compare(m1: Monomial, m2: Monomial, order: MonomialOrder) -> int:
    """-1, 0 or 1 as m1 is below, equal to, or above m2 in the order."""
    return order.compare(m1, m2)


# ---------------------------------------------------------------------------
# Chart-ring coefficients
# ---------------------------------------------------------------------------

VarKey = tuple[tuple[int, int], tuple[int, int]]  # ((cx, cy), (mx, my))
ChartMonomial = tuple[tuple[VarKey, int], ...]    # sorted, exponents > 0


def variable_name(key: VarKey) -> str:
    (cx, cy), (mx, my) = key
    return f"X[{cx},{cy};{mx},{my}]"


class ChartCoefficient:
    """Finite rational combination of monomials in chart variables."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[ChartMonomial, Fraction]):
        self.terms = {k: Fraction(v) for k, v in terms.items() if v != 0}

    @classmethod
    def from_fraction(cls, q) -> "ChartCoefficient":
        q = Fraction(q)
        return cls({(): q} if q else {})

    @classmethod
    def variable(cls, key: VarKey) -> "ChartCoefficient":
        return cls({((key, 1),): Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, ChartCoefficient) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other: "ChartCoefficient") -> "ChartCoefficient":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return ChartCoefficient(out)

    def __neg__(self) -> "ChartCoefficient":
        return ChartCoefficient({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "ChartCoefficient") -> "ChartCoefficient":
        return self + (-other)

    @staticmethod
    def _mul_mono(m1: ChartMonomial, m2: ChartMonomial) -> ChartMonomial:
        exps: dict[VarKey, int] = dict(m1)
        for key, e in m2:
            exps[key] = exps.get(key, 0) + e
        return tuple(sorted(exps.items()))

    def __mul__(self, other: "ChartCoefficient") -> "ChartCoefficient":
        out: dict[ChartMonomial, Fraction] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = self._mul_mono(k1, k2)
                out[k] = out.get(k, Fraction(0)) + v1 * v2
        return ChartCoefficient(out)

    def scaled(self, q) -> "ChartCoefficient":
        q = Fraction(q)
        return ChartCoefficient({k: v * q for k, v in self.terms.items()})

    @property
    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {()}

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise DomainError(f"chart coefficient {self.render()} is not constant")
        return self.terms.get((), Fraction(0))

    def variables(self) -> set[VarKey]:
        return {key for mono in self.terms for key, _ in mono}

    def substitute(self, point: Mapping[VarKey, Fraction]) -> Fraction:
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            value = coeff
            for key, e in mono:
                value *= Fraction(point.get(key, 0)) ** e
            total += value
        return total

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in sorted(self.terms.items()):
            body = "*".join(f"{variable_name(k)}^{e}" for k, e in mono) or "1"
            parts.append(f"{coeff}*{body}")
        return " + ".join(parts)


def _coeff_zero(domain: str):
    return Fraction(0) if domain == DOMAIN_RATIONAL else ChartCoefficient({})


def _coeff_from_fraction(domain: str, q):
    return Fraction(q) if domain == DOMAIN_RATIONAL else ChartCoefficient.from_fraction(q)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

class BivariatePolynomial:
    """Polynomial in x, y with exact coefficients and no stored zero terms."""

    __slots__ = ("domain", "terms")

    def __init__(self, terms: Mapping[Monomial, object], domain: str = DOMAIN_RATIONAL):
        self.domain = domain
        self.terms = {Monomial(*m): c for m, c in terms.items() if c}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, domain: str = DOMAIN_RATIONAL) -> "BivariatePolynomial":
        return cls({}, domain)

    @classmethod
    def of_monomial(cls, m: Monomial, coeff=1, domain: str = DOMAIN_RATIONAL):
        return cls({Monomial(*m): _coeff_from_fraction(domain, coeff)
                    if not isinstance(coeff, ChartCoefficient) else coeff}, domain)

    # -- simple queries ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BivariatePolynomial)
            and self.domain == other.domain
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self.to_text()!r})"

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self.terms:
            raise DomainError("the zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder):
        return self.terms[self.leading_monomial(order)]

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "BivariatePolynomial") -> None:
        if self.domain != other.domain:
            raise DomainError(f"domain mismatch: {self.domain} vs {other.domain}")

    def __add__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        self._check(other)
        out = dict(self.terms)
        zero = _coeff_zero(self.domain)
        for m, c in other.terms.items():
            out[m] = out.get(m, zero) + c
        return BivariatePolynomial(out, self.domain)

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial({m: -c for m, c in self.terms.items()}, self.domain)

    def __sub__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        return self + (-other)

    def __mul__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        self._check(other)
        out: dict[Monomial, object] = {}
        zero = _coeff_zero(self.domain)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                out[m] = out.get(m, zero) + c1 * c2
        return BivariatePolynomial(out, self.domain)

    def scale(self, coeff) -> "BivariatePolynomial":
        if self.domain == DOMAIN_RATIONAL:
            q = Fraction(coeff)
            return BivariatePolynomial({m: c * q for m, c in self.terms.items()}, self.domain)
        if not isinstance(coeff, ChartCoefficient):
            coeff = ChartCoefficient.from_fraction(coeff)
        return BivariatePolynomial({m: c * coeff for m, c in self.terms.items()}, self.domain)

    def mul_monomial(self, m: Monomial) -> "BivariatePolynomial":
        return BivariatePolynomial({t.mul(m): c for t, c in self.terms.items()}, self.domain)

    def mul_laurent(self, da: int, db: int) -> "BivariatePolynomial":
        """Shift all exponents by (da, db); the result must stay polynomial."""
        out = {}
        for t, c in self.terms.items():
            a, b = t.alpha + da, t.beta + db
            if a < 0 or b < 0:
                raise NonPolynomialError(
                    f"shifting {self.to_text()} by x^{da}*y^{db} leaves the polynomial ring"
                )
            out[Monomial(a, b)] = c
        return BivariatePolynomial(out, self.domain)

    # -- weight structure ------------------------------------------------------

    def initial_part(self, vector: tuple[int, int], extremum: str) -> "BivariatePolynomial":
        """Extremal-weight homogeneous part of the polynomial."""
        if not self.terms:
            return self
        v1, v2 = vector
        weights = {m: v1 * m.alpha + v2 * m.beta for m in self.terms}
        target = max(weights.values()) if extremum == "max" else min(weights.values())
        return BivariatePolynomial(
            {m: c for m, c in self.terms.items() if weights[m] == target}, self.domain
        )

    def weight_degrees(self, w: Weight) -> set[int]:
        return {w.degree(m) for m in self.terms}

    # -- chart specialization ---------------------------------------------------

    def substitute_chart(self, point: Mapping[VarKey, Fraction]) -> "BivariatePolynomial":
        if self.domain != DOMAIN_CHART:
            raise DomainError("substitute_chart needs chart-ring coefficients")
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            value = c.substitute(point)
            if value:
                out[m] = value
        return BivariatePolynomial(out, DOMAIN_RATIONAL)

    def chart_variables(self) -> set[VarKey]:
        if self.domain != DOMAIN_CHART:
            return set()
        out: set[VarKey] = set()
        for c in self.terms.values():
            out |= c.variables()
        return out

    # -- serialization -----------------------------------------------------------

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: GRLEX_XY.key(kv[0]), reverse=True)

    def to_text(self) -> str:
        """Canonical text: signed terms ±p/q·[chart·]x^a*y^b joined by spaces."""
        if not self.terms:
            return "0"
        chunks = []
        for m, c in self._sorted_terms():
            if self.domain == DOMAIN_RATIONAL:
                chunks.append(_render_term(c, None, m))
            else:
                for mono, q in sorted(c.terms.items()):
                    chunks.append(_render_term(q, mono, m))
        return " ".join(chunks)

    def to_json(self) -> dict:
        terms = []
        for m, c in self._sorted_terms():
            if self.domain == DOMAIN_RATIONAL:
                terms.append({"coeff": str(Fraction(c)), "x": m.alpha, "y": m.beta})
            else:
                for mono, q in sorted(c.terms.items()):
                    terms.append(
                        {
                            "coeff": str(q),
                            "chart": [[list(k[0]), list(k[1]), e] for k, e in mono],
                            "x": m.alpha,
                            "y": m.beta,
                        }
                    )
        return {"domain": self.domain, "terms": terms}

    @classmethod
    def from_json(cls, data: dict) -> "BivariatePolynomial":
        domain = data["domain"]
        out: dict[Monomial, object] = {}
        zero = _coeff_zero(domain)
        for term in data["terms"]:
            m = Monomial(int(term["x"]), int(term["y"]))
            q = Fraction(term["coeff"])
            if domain == DOMAIN_RATIONAL:
                coeff = q
            else:
                mono = tuple(
                    sorted(
                        ((tuple(entry[0]), tuple(entry[1])), int(entry[2]))
                        for entry in term.get("chart", [])
                    )
                )
                coeff = ChartCoefficient({mono: q})
            out[m] = out.get(m, zero) + coeff
        return cls(out, domain)


def _render_fraction(q: Fraction) -> str:
    sign = "+" if q >= 0 else "-"
    q = abs(q)
    return f"{sign}{q.numerator}/{q.denominator}"


def _render_term(q: Fraction, chart_mono: Optional[ChartMonomial], m: Monomial) -> str:
    body = f"x^{m.alpha}*y^{m.beta}"
    if chart_mono:
        chart = "*".join(f"{variable_name(k)}^{e}" for k, e in chart_mono)
        return f"{_render_fraction(q)}·{chart}·{body}"
    return f"{_render_fraction(q)}·{body}"


_TERM_RE = re.compile(
    r"(?P<sign>[+-])(?P<num>\d+)/(?P<den>\d+)·(?:(?P<chart>[^·]+)·)?x\^(?P<x>\d+)\*y\^(?P<y>\d+)$"
)
_CHARTVAR_RE = re.compile(r"X\[(-?\d+),(-?\d+);(-?\d+),(-?\d+)\]\^(\d+)$")


def poly_from_text(text: str, domain: Optional[str] = None) -> BivariatePolynomial:
    """Parse the canonical text format back into a polynomial, bit-exactly.

    Without an explicit domain, the presence of chart variables decides it.
    """
    text = text.strip()
    is_chart = "X[" in text
    if domain is None:
        domain = DOMAIN_CHART if is_chart else DOMAIN_RATIONAL
    elif is_chart and domain == DOMAIN_RATIONAL:
        raise DomainError("chart variables in a rational-domain polynomial")
    if text == "0":
        return BivariatePolynomial.zero(domain)
    chunks = text.split()
    out: dict[Monomial, object] = {}
    zero = _coeff_zero(domain)
    for chunk in chunks:
        match = _TERM_RE.match(chunk)
        if not match:
            raise DomainError(f"malformed polynomial term {chunk!r}")
        q = Fraction(int(match["num"]), int(match["den"]))
        if match["sign"] == "-":
            q = -q
        m = Monomial(int(match["x"]), int(match["y"]))
        if domain == DOMAIN_RATIONAL:
            coeff = q
        else:
            exps: dict[VarKey, int] = {}
            if match["chart"]:
                for factor in match["chart"].split("*"):
                    fm = _CHARTVAR_RE.match(factor)
                    if not fm:
                        raise DomainError(f"malformed chart variable {factor!r}")
                    key = ((int(fm[1]), int(fm[2])), (int(fm[3]), int(fm[4])))
                    exps[key] = exps.get(key, 0) + int(fm[5])
            coeff = ChartCoefficient({tuple(sorted(exps.items())): q})
        out[m] = out.get(m, zero) + coeff
    return BivariatePolynomial(out, domain)


_EXPR_TERM_RE = re.compile(
    r"^(?P<coeff>\d+(?:/\d+)?)?(?P<body>(?:\*?[xy](?:\^\d+)?)*)$"
)


def poly_from_expr(expr: str) -> BivariatePolynomial:
    """Parse a human-typed expression like ``x*y^2 + y^3 - 2/3*x``."""
    s = expr.replace(" ", "")
    if not s:
        raise DomainError("empty polynomial expression")
    if s[0] not in "+-":
        s = "+" + s
    out: dict[Monomial, Fraction] = {}
    pieces = re.findall(r"[+-][^+-]+", s)
    if "".join(pieces) != s:
        raise DomainError(f"malformed polynomial expression {expr!r}")
    for piece in pieces:
        sign = -1 if piece[0] == "-" else 1
        body = piece[1:]
        match = _EXPR_TERM_RE.match(body)
        if not match or (not match["coeff"] and not match["body"]):
            raise DomainError(f"malformed term {piece!r} in {expr!r}")
        coeff = Fraction(match["coeff"]) if match["coeff"] else Fraction(1)
        alpha = beta = 0
        for var, exp in re.findall(r"([xy])(?:\^(\d+))?", match["body"]):
            e = int(exp) if exp else 1
            if var == "x":
                alpha += e
            else:
                beta += e
        m = Monomial(alpha, beta)
        out[m] = out.get(m, Fraction(0)) + sign * coeff
    return BivariatePolynomial(out, DOMAIN_RATIONAL)


def parse_ideal(text: str) -> list[BivariatePolynomial]:
    """Parse a semicolon-separated list of polynomial expressions."""
    gens = [poly_from_expr(chunk) for chunk in text.split(";") if chunk.strip()]
    if not gens:
        raise DomainError("empty ideal description")
    return gens


# ---------------------------------------------------------------------------
# Division and Groebner bases
# ---------------------------------------------------------------------------

class _StepGuard:
    """Counts reduction steps; trips a hard error at the limit."""

    __slots__ = ("limit", "steps")

    def __init__(self, limit: Optional[int]):
        self.limit = DEFAULT_STEP_LIMIT if limit is None else limit
        self.steps = 0

    def tick(self) -> None:
        self.steps += 1
        if self.steps > self.limit:
            raise StepLimitExceeded(
                f"step limit {self.limit} exceeded; raise step_limit to continue"
            )


def _invertible_lc(poly: BivariatePolynomial, order: MonomialOrder):
    """Leading coefficient as an invertible scalar, or a domain error."""
    lc = poly.leading_coefficient(order)
    if poly.domain == DOMAIN_RATIONAL:
        return Fraction(lc)
    if not isinstance(lc, ChartCoefficient) or not lc.is_constant or not lc:
        raise DomainError(
            f"leading coefficient of {poly.to_text()} is not an invertible constant"
        )
    return lc.constant_value()


def _divide(
    f: BivariatePolynomial,
    divisors: Sequence[BivariatePolynomial],
    order: MonomialOrder,
    guard: _StepGuard,
) -> tuple[list[BivariatePolynomial], BivariatePolynomial]:
    info = []
    for d in divisors:
        lm = d.leading_monomial(order)
        info.append((lm, _invertible_lc(d, order), d))
    quotients = [BivariatePolynomial.zero(f.domain) for _ in divisors]
    remainder: dict[Monomial, object] = {}
    work = dict(f.terms)
    zero = _coeff_zero(f.domain)
    while work:
        guard.tick()
        m = max(work, key=order.key)
        c = work.pop(m)
        for idx, (lm, lc, d) in enumerate(info):
            if lm.divides(m):
                shift = m.div(lm)
                qc = c * (1 / lc) if f.domain == DOMAIN_RATIONAL else c.scaled(1 / lc)
                quotients[idx] += BivariatePolynomial({shift: qc}, f.domain)
                for t, tc in d.terms.items():
                    if t == lm:
                        continue
                    key = t.mul(shift)
                    nv = work.get(key, zero) - qc * tc
                    if nv:
                        work[key] = nv
                    else:
                        work.pop(key, None)
                break
        else:
            remainder[m] = c
    return quotients, BivariatePolynomial(remainder, f.domain)


def divide(
    f: BivariatePolynomial,
    divisors: Sequence[BivariatePolynomial],
    order: MonomialOrder,
    step_limit: Optional[int] = None,
) -> tuple[list[BivariatePolynomial], BivariatePolynomial]:
    """Multivariate division: f = sum(q_i * d_i) + r, first matching divisor wins.

    No term of the remainder is divisible by any divisor's leading monomial.
    """
    return _divide(f, divisors, order, _StepGuard(step_limit))


def reduce_modulo(
    f: BivariatePolynomial,
    divisors: Sequence[BivariatePolynomial],
    order: MonomialOrder,
    step_limit: Optional[int] = None,
) -> BivariatePolynomial:
    return divide(f, divisors, order, step_limit)[1]


def _autoreduce(
    polys: list[BivariatePolynomial], order: MonomialOrder, guard: _StepGuard
) -> list[BivariatePolynomial]:
    """Interreduce to a fixpoint: every element irreducible modulo the others.

    Sound on arbitrary generating sets: each element is replaced by its full
    remainder, never dropped unless that remainder is zero.
    """
    polys = [p for p in polys if p]
    changed = True
    while changed:
        changed = False
        out: list[BivariatePolynomial] = []
        for i, p in enumerate(polys):
            others = out + polys[i + 1:]
            r = _divide(p, others, order, guard)[1] if others else p
            if r:
                out.append(r)
            if r != p:
                changed = True
        polys = out
    normalized = []
    for p in polys:
        lc = _invertible_lc(p, order)
        normalized.append(p.scale(Fraction(1) / lc))
    normalized.sort(key=lambda p: order.key(p.leading_monomial(order)))
    return normalized


def s_polynomial(
    f: BivariatePolynomial, g: BivariatePolynomial, order: MonomialOrder
) -> BivariatePolynomial:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = lf.lcm(lg)
    cf, cg = _invertible_lc(f, order), _invertible_lc(g, order)
    left = f.mul_monomial(lcm.div(lf)).scale(Fraction(1) / cf)
    right = g.mul_monomial(lcm.div(lg)).scale(Fraction(1) / cg)
    return left - right


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple[BivariatePolynomial, ...]
    order: MonomialOrder

    @property
    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.leading_monomial(self.order) for g in self.generators)

    def to_json(self) -> dict:
        return {
            "generators": [g.to_text() for g in self.generators],
            "leading": [[m.alpha, m.beta] for m in self.leading_monomials],
        }


def buchberger(
    gens: Sequence[BivariatePolynomial],
    order: MonomialOrder,
    step_limit: Optional[int] = None,
) -> GroebnerBasis:
    """Reduced Groebner basis by the Buchberger algorithm.

    Deterministic: the pair queue is ordered by lcm degree then insertion
    index, and the final basis is interreduced, monic, and sorted by leading
    monomial.  Idempotent on already reduced bases.
    """
    if not gens or any(not g for g in gens):
        raise DomainError("generators must be nonzero")
    domain = gens[0].domain
    if any(g.domain != domain for g in gens):
        raise DomainError("mixed coefficient domains")
    guard = _StepGuard(step_limit)
    basis = _autoreduce(list(gens), order, guard)

    def pair_key(ij: tuple[int, int]):
        lcm = basis[ij[0]].leading_monomial(order).lcm(basis[ij[1]].leading_monomial(order))
        return (lcm.alpha + lcm.beta, ij)

    pairs = sorted(
        ((i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))),
        key=pair_key,
    )
    while pairs:
        i, j = pairs.pop(0)
        guard.tick()
        li = basis[i].leading_monomial(order)
        lj = basis[j].leading_monomial(order)
        if li.lcm(lj) == li.mul(lj):  # coprime leading monomials
            continue
        rem = _divide(s_polynomial(basis[i], basis[j], order), basis, order, guard)[1]
        if rem:
            lc = _invertible_lc(rem, order)
            basis.append(rem.scale(Fraction(1) / lc))
            new = len(basis) - 1
            pairs.extend((k, new) for k in range(new))
            pairs.sort(key=pair_key)
    return GroebnerBasis(tuple(_autoreduce(basis, order, guard)), order)


@dataclass(frozen=True)
class PairStatus:
    i: int
    j: int
    remainder_zero: bool
    remainder: str


@dataclass(frozen=True)
class GroebnerCertificate:
    is_groebner: bool
    pairs: tuple[PairStatus, ...]

    def to_json(self) -> dict:
        return {
            "is_groebner": self.is_groebner,
            "pairs": [
                {"i": p.i, "j": p.j, "remainder_zero": p.remainder_zero,
                 "remainder": p.remainder}
                for p in self.pairs
            ],
        }


def is_groebner(
    gens: Sequence[BivariatePolynomial],
    order: MonomialOrder,
    step_limit: Optional[int] = None,
) -> GroebnerCertificate:
    """Check all S-polynomial remainders; works symbolically over chart rings."""
    if not gens or any(not g for g in gens):
        raise DomainError("generators must be nonzero")
    statuses = []
    ok = True
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            rem = divide(s_polynomial(gens[i], gens[j], order), gens, order, step_limit)[1]
            statuses.append(PairStatus(i, j, not rem, rem.to_text()))
            ok = ok and not rem
    return GroebnerCertificate(ok, tuple(statuses))


def standard_monomials(gb: GroebnerBasis) -> Staircase:
    """Staircase of monomials outside the leading ideal; errors if infinite."""
    lms = list(gb.leading_monomials)
    if any(m == Monomial(0, 0) for m in lms):
        return Staircase(())
    x_powers = [m.alpha for m in lms if m.beta == 0]
    y_powers = [m.beta for m in lms if m.alpha == 0]
    if not x_powers or not y_powers:
        raise NotZeroDimensionalError(
            "leading ideal contains no pure power of x or of y; colength is infinite"
        )
    width = min(x_powers)
    columns = []
    for i in range(width):
        height = min(m.beta for m in lms if m.alpha <= i)
        columns.append(height)
    return Staircase(tuple(columns))


def colength(gb: GroebnerBasis) -> int:
    return len(standard_monomials(gb))


def initial_staircase(
    gens: Sequence[BivariatePolynomial],
    order: MonomialOrder,
    step_limit: Optional[int] = None,
) -> Staircase:
    """Staircase of the initial ideal of the span of gens under the order."""
    return standard_monomials(buchberger(gens, order, step_limit))


def weight_initial_ideal(
    gens: Sequence[BivariatePolynomial],
    vector: tuple[int, int],
    extremum: str,
    step_limit: Optional[int] = None,
) -> list[BivariatePolynomial]:
    """Generators of the extremal-weight initial ideal (the flat limit).

    Computes a Groebner basis under the weight-refined order and keeps the
    extremal-weight homogeneous part of each basis element; the result has
    the same colength as the input ideal.
    """
    order = weight_order(vector, extremum)
    gb = buchberger(gens, order, step_limit)
    return [g.initial_part(vector, extremum) for g in gb.generators]
