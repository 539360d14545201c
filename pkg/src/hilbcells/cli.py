"""JSON command-line front end.

Every subcommand writes exactly one JSON document to standard output and
diagnostics to standard error.  Exit codes: 0 success, 1 domain errors
(regime mismatch, unrealizable Hilbert function, failed internal
certificate), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import charts, polynomials, strata, tangent
from .errors import ConsistencyError, DomainError
from .polynomials import (
    GRLEX_XY,
    LEX_XY,
    LEX_YX,
    cell_order,
    parse_ideal,
)
from .staircases import (
    HilbertFunction,
    Monomial,
    Staircase,
    Weight,
    clefts,
    compare_staircases,
    compatible_staircases,
    construct_staircase,
    enumerate_staircases,
    hilbert_function,
)
from .tangent import CleftCouple


class MalformedInput(ValueError):
    """Unparseable flags or payloads; mapped to exit code 2."""


# ---------------------------------------------------------------------------
# Flag parsing helpers
# ---------------------------------------------------------------------------

def _parse_columns(text: str) -> Staircase:
    try:
        cols = [int(c) for c in text.split(",") if c.strip() != ""]
    except ValueError as exc:
        raise MalformedInput(f"cannot parse columns {text!r}") from exc
    return construct_staircase(cols)


def _parse_vector(text: str) -> tuple[int, int]:
    try:
        parts = [int(c) for c in text.replace("(", "").replace(")", "").split(",")]
    except ValueError as exc:
        raise MalformedInput(f"cannot parse integer pair {text!r}") from exc
    if len(parts) != 2:
        raise MalformedInput(f"expected two integers, got {text!r}")
    return (parts[0], parts[1])


def _parse_weights(text: str) -> list[tuple[int, int]]:
    return [_parse_vector(chunk) for chunk in text.split(";") if chunk.strip()]


def _weight(args) -> Weight:
    if args.a is None or args.b is None:
        raise MalformedInput("this subcommand needs --a and --b")
    return Weight(args.a, args.b)


def _maybe_weight(args) -> Weight | None:
    if args.a is None and args.b is None:
        return None
    return _weight(args)


def _parse_hilbert(args) -> HilbertFunction:
    if not args.hilbert:
        raise MalformedInput("this subcommand needs --hilbert")
    try:
        data = json.loads(args.hilbert)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"--hilbert is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise MalformedInput("--hilbert must be a JSON object")
    if "values" in data:
        hf = HilbertFunction.from_json(data)
        w = _maybe_weight(args)
        if w is not None and w != hf.weight:
            raise MalformedInput("--a/--b disagree with the weight in --hilbert")
        return hf
    try:
        counts = {int(k): int(v) for k, v in data.items()}
    except ValueError as exc:
        raise MalformedInput("--hilbert keys must be decimal degrees") from exc
    return HilbertFunction.from_counts(_weight(args), counts)


def _parse_point(text: str | None) -> dict:
    if not text:
        return {}
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"--point is not valid JSON: {exc}") from exc
    point = {}
    for name, value in data.items():
        key = _parse_variable_name(name)
        try:
            point[key] = Fraction(str(value))
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedInput(f"bad rational {value!r} for {name}") from exc
    return point


def _parse_variable_name(name: str):
    body = name.strip()
    if not (body.startswith("X[") and body.endswith("]")):
        raise MalformedInput(f"bad chart variable name {name!r}")
    inner = body[2:-1]
    try:
        c_part, m_part = inner.split(";")
        cx, cy = (int(v) for v in c_part.split(","))
        mx, my = (int(v) for v in m_part.split(","))
    except ValueError as exc:
        raise MalformedInput(f"bad chart variable name {name!r}") from exc
    return ((cx, cy), (mx, my))


def _parse_couple(text: str) -> CleftCouple:
    try:
        c_part, m_part = text.split(";")
    except ValueError as exc:
        raise MalformedInput(f"--couple must look like 'cx,cy;mx,my', got {text!r}") from exc
    c = _parse_vector(c_part)
    m = _parse_vector(m_part)
    return CleftCouple(Monomial(*c), Monomial(*m))


_ORDERS = {"lex_xy": LEX_XY, "lex_yx": LEX_YX, "grlex_xy": GRLEX_XY}


def _parse_order(args):
    name = args.order
    if name in _ORDERS:
        return _ORDERS[name]
    if name == "cell":
        return cell_order(_weight(args))
    raise MalformedInput(f"unknown order {name!r}; pick lex_xy, lex_yx, grlex_xy or cell")


def _parse_ideal_arg(args):
    if not args.ideal:
        raise MalformedInput("this subcommand needs --ideal")
    return parse_ideal(args.ideal)


def _chart_family(args) -> charts.ChartFamily:
    E = _parse_columns(args.columns)
    if args.mode == "invariant":
        return charts.build_chart_family(E, "invariant", _weight(args))
    if args.mode == "general":
        return charts.build_chart_family(E, "general")
    raise MalformedInput(f"unknown mode {args.mode!r}; pick invariant or general")


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_staircase(args):
    E = _parse_columns(args.columns)
    return {
        "columns": list(E.columns),
        "cardinality": len(E),
        "cells": [[m.alpha, m.beta] for m in E.cells()],
        "clefts": [[m.alpha, m.beta] for m in clefts(E)],
    }


def _cmd_clefts(args):
    E = _parse_columns(args.columns)
    plus = clefts(E)
    return {
        "clefts": [[m.alpha, m.beta] for m in plus],
        "plus": [[m.alpha, m.beta] for m in plus],
        "minus": [[m.alpha, m.beta] for m in reversed(plus)],
    }


def _cmd_hilbert(args):
    E = _parse_columns(args.columns)
    return hilbert_function(E, _weight(args)).to_json()


def _cmd_compatible(args):
    H = _parse_hilbert(args)
    return {"staircases": [E.to_json() for E in compatible_staircases(H)]}


def _cmd_compare(args):
    E = _parse_columns(args.columns)
    F = _parse_columns(args.other)
    result = compare_staircases(E, F, _weight(args))
    return {"comparison": result.value}


def _cmd_tangent(args):
    E = _parse_columns(args.columns)
    return tangent.tangent_basis(E, _maybe_weight(args)).to_json()


def _cmd_graph(args):
    E = _parse_columns(args.columns)
    return tangent.significance_graph(E, _weight(args)).to_json()


def _cmd_hom_oracle(args):
    E = _parse_columns(args.columns)
    result = tangent.hom_tangent_oracle(E, bound=args.bound)
    return {
        "dimension": result.dimension,
        "characters": [list(c) for c in result.characters],
    }


def _cmd_cells(args):
    E = _parse_columns(args.columns)
    vector = _parse_vector(args.vector)
    return {"vector": list(vector), "cell_dimension": tangent.cell_dimension(E, vector)}


def _cmd_chart(args):
    return _chart_family(args).to_json()


def _cmd_specialize(args):
    fam = _chart_family(args)
    gens = charts.specialize_family(fam, _parse_point(args.point))
    return {"generators": [p.to_text() for p in gens]}


def _cmd_verify_flat(args):
    fam = _chart_family(args)
    cert = charts.verify_flatness(fam, extra_samples=args.samples, seed=args.seed,
                                  step_limit=args.max_steps)
    return cert.to_json()


def _cmd_degenerate(args):
    E = _parse_columns(args.columns)
    couple = _parse_couple(args.couple) if args.couple else None
    step = strata.degenerate_once(E, _weight(args), couple, step_limit=args.max_steps)
    return step.to_json()


def _cmd_descend(args):
    E = _parse_columns(args.columns)
    steps = strata.descend_to_minimal(E, _weight(args), policy=args.policy,
                                      seed=args.seed, step_limit=args.max_steps)
    final = steps[-1].target if steps else E
    return {"chain": [s.to_json() for s in steps], "final": final.to_json()}


def _cmd_minimal(args):
    H = _parse_hilbert(args)
    return strata.minimal_staircase(H).to_json()


def _cmd_components(args):
    reports = strata.component_report(args.length, _weight(args), bound=args.length)
    return {"components": [r.to_json() for r in reports]}


def _cmd_poincare(args):
    vector = _parse_vector(args.vector)
    counts = strata.poincare_polynomial(args.length, vector)
    return {
        "length": args.length,
        "vector": list(vector),
        "coefficients": {str(d): c for d, c in counts.items()},
        "total": sum(counts.values()),
    }


def _cmd_groebner(args):
    gens = _parse_ideal_arg(args)
    order = _parse_order(args)
    cert = polynomials.is_groebner(gens, order, step_limit=args.max_steps)
    gb = polynomials.buchberger(gens, order, step_limit=args.max_steps)
    try:
        E = polynomials.standard_monomials(gb)
        staircase_json, col = E.to_json(), len(E)
    except DomainError:
        staircase_json, col = None, None
    return {
        "is_groebner": cert.is_groebner,
        "colength": col,
        "staircase": staircase_json,
        "basis": [g.to_text() for g in gb.generators],
        "leading": [[m.alpha, m.beta] for m in gb.leading_monomials],
    }


def _cmd_initial(args):
    gens = _parse_ideal_arg(args)
    order = _parse_order(args)
    return polynomials.initial_staircase(gens, order, step_limit=args.max_steps).to_json()


def _cmd_weight_initial(args):
    gens = _parse_ideal_arg(args)
    vector = _parse_vector(args.vector)
    limit = polynomials.weight_initial_ideal(gens, vector, args.extremum, step_limit=args.max_steps)
    E = polynomials.initial_staircase(limit, LEX_YX, step_limit=args.max_steps)
    return {
        "generators": [p.to_text() for p in limit],
        "staircase": E.to_json(),
    }


# ---------------------------------------------------------------------------
# Batch suites
# ---------------------------------------------------------------------------

def _suite_item(name, check):
    try:
        detail = check()
        return {"name": name, "ok": True, "detail": detail}
    except (DomainError, ConsistencyError, AssertionError) as exc:
        return {"name": name, "ok": False, "witness": str(exc)}


def _suite_verify_all(args):
    max_length = args.max_length
    seed = args.seed
    lengths = range(1, max_length + 1)

    def oracle_equivalence():
        for l in lengths:
            for E in enumerate_staircases(l):
                basis = tangent.tangent_basis(E)
                mine = tuple(sorted(c.char for c in basis.significant))
                oracle = tangent.hom_tangent_oracle(E, bound=max_length)
                assert mine == oracle.characters, f"character mismatch at {E.columns}"
                assert oracle.dimension == 2 * l, f"dimension {oracle.dimension} at {E.columns}"
        return f"all staircases up to length {max_length}"

    def graph_dimension():
        for w in (Weight(1, -1), Weight(2, -1), Weight(1, -3), Weight(0, -1), Weight(-1, -2)):
            for l in lengths:
                for E in enumerate_staircases(l):
                    g = tangent.significance_graph(E, w)
                    t = tangent.tangent_basis(E, w).dimension
                    assert g.dimension == t, f"graph {g.dimension} vs tangent {t} at {E.columns}"
                    if w.product > 0:
                        assert t == 0, f"nonzero invariant tangent at {E.columns}"
        return "graph dimension matches the tangent basis for five weights"

    def constancy():
        for w in (Weight(1, -1), Weight(2, -1), Weight(3, -2), Weight(1, -3)):
            for l in lengths:
                groups = {}
                for E in enumerate_staircases(l):
                    groups.setdefault(hilbert_function(E, w), []).append(E)
                for H, members in groups.items():
                    dims = {tangent.tangent_basis(E, w).dimension for E in members}
                    assert len(dims) == 1, f"dimensions {dims} in class {H.as_dict()}"
        return "dimension constant on every Hilbert-function class"

    def minimal_agreement():
        for w in (Weight(1, -1), Weight(2, -1), Weight(3, -2), Weight(1, -3)):
            for l in lengths:
                groups = {}
                for E in enumerate_staircases(l):
                    groups.setdefault(hilbert_function(E, w), []).append(E)
                for H in groups:
                    rec = strata.minimal_staircase(H)
                    oracle = strata.minimal_staircase_oracle(H, bound=max_length)
                    assert rec == oracle, f"{rec.columns} vs {oracle.columns}"
        return "recursion agrees with the enumeration oracle"

    def descent():
        w = Weight(1, -1)
        for l in lengths:
            for E in enumerate_staircases(l):
                H = hilbert_function(E, w)
                minimal = strata.minimal_staircase(H)
                for policy in ("first", "last", "random"):
                    steps = strata.descend_to_minimal(E, w, policy=policy, seed=seed)
                    end = steps[-1].target if steps else E
                    assert end == minimal, f"{policy} descent from {E.columns}"
        return "all descent policies end at the minimal staircase"

    def flatness():
        for l in lengths:
            for E in enumerate_staircases(l):
                for mode, w in (("invariant", Weight(1, -1)), ("general", None)):
                    fam = charts.build_chart_family(E, mode, w)
                    cert = charts.verify_flatness(fam, extra_samples=3, seed=seed)
                    assert cert.valid, f"{mode} family of {E.columns}: {cert.witness}"
        return "flatness certificates valid in both modes"

    def collapse():
        for w in (Weight(-1, -2), Weight(-2, -3)):
            for l in lengths:
                groups = {}
                for E in enumerate_staircases(l):
                    groups.setdefault(hilbert_function(E, w), []).append(E)
                for H, members in groups.items():
                    assert len(members) == 1, f"{len(members)} staircases for {H.as_dict()}"
                    assert tangent.tangent_basis(members[0], w).dimension == 0
        return "every class is a single point with zero invariant tangent space"

    def poincare_census():
        v1 = (-1, -(max_length + 1))
        v2 = (-2, -(2 * max_length + 1))
        for l in lengths:
            c1 = strata.poincare_polynomial(l, v1)
            c2 = strata.poincare_polynomial(l, v2)
            assert c1 == c2, f"census differs at length {l}"
            assert sum(c1.values()) == len(enumerate_staircases(l))
        return f"census invariant across {v1} and {v2}"

    items = [
        _suite_item("tangent-oracle-equivalence", oracle_equivalence),
        _suite_item("graph-dimension", graph_dimension),
        _suite_item("dimension-constancy", constancy),
        _suite_item("minimal-staircase-agreement", minimal_agreement),
        _suite_item("descent-convergence", descent),
        _suite_item("flatness-certificates", flatness),
        _suite_item("ab-positive-collapse", collapse),
        _suite_item("poincare-census", poincare_census),
    ]
    return {
        "suite": "verify-all",
        "max_length": max_length,
        "seed": seed,
        "items": items,
        "all_ok": all(item["ok"] for item in items),
    }


def _suite_components(args):
    w = _weight(args)
    reports = strata.component_report(args.length, w, bound=args.length)
    items = [
        {
            "name": f"H={json.dumps({str(d): c for d, c in r.hilbert.values}, sort_keys=True)}",
            "ok": True,
            "constancy": True,
            "report": r.to_json(),
        }
        for r in reports
    ]
    return {
        "suite": "components",
        "length": args.length,
        "weight": w.to_json(),
        "items": items,
        "all_ok": True,
    }


def _suite_poincare(args):
    if not args.weights:
        raise MalformedInput("run-suite poincare needs --weights '(w1,w2);(w1,w2)'")
    vectors = _parse_weights(args.weights)
    items = []
    for l in range(1, args.max_length + 1):
        def census(l=l):
            results = [strata.poincare_polynomial(l, v) for v in vectors]
            first = results[0]
            assert all(r == first for r in results), f"census differs at length {l}"
            assert sum(first.values()) == len(enumerate_staircases(l))
            return {str(d): c for d, c in first.items()}
        items.append(_suite_item(f"length-{l}", census))
    return {
        "suite": "poincare",
        "max_length": args.max_length,
        "weights": [list(v) for v in vectors],
        "items": items,
        "all_ok": all(item["ok"] for item in items),
    }


def _cmd_run_suite(args):
    if args.suite == "verify-all":
        return _suite_verify_all(args)
    if args.suite == "components":
        return _suite_components(args)
    if args.suite == "poincare":
        return _suite_poincare(args)
    raise MalformedInput(f"unknown suite {args.suite!r}")


# ---------------------------------------------------------------------------
# Parser assembly and entry point
# ---------------------------------------------------------------------------

def _add_common(sub, *, columns=False, weight=False, hilbert=False, order=False,
                ideal=False, mode=False, vector=False, seed=False):
    if columns:
        sub.add_argument("--columns", required=True, help="staircase column heights, e.g. 4,2")
    if weight:
        sub.add_argument("--a", type=int, default=None)
        sub.add_argument("--b", type=int, default=None)
    if hilbert:
        sub.add_argument("--hilbert", help='degree counts as JSON, e.g. \'{"0":1,"1":2}\'')
    if order:
        sub.add_argument("--order", default="lex_yx",
                         help="lex_xy | lex_yx | grlex_xy | cell (cell needs --a/--b)")
    if ideal:
        sub.add_argument("--ideal", help="semicolon-separated generators, e.g. 'x*y^2+y^3; x^2'")
    if mode:
        sub.add_argument("--mode", required=True, help="invariant | general")
    if vector:
        sub.add_argument("--vector", required=True, help="integer pair, e.g. '-1,-3'")
    if seed:
        sub.add_argument("--seed", type=int, default=7)
    sub.add_argument("--max-steps", dest="max_steps", type=int, default=None,
                     help="resource guard for polynomial reductions")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbcells",
        description="Staircase invariants of equivariant punctual Hilbert schemes; "
                    "one JSON document per invocation.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("staircase", help="construct a staircase and list its data")
    _add_common(s, columns=True)
    s.set_defaults(handler=_cmd_staircase)

    s = subs.add_parser("clefts", help="minimal generators of the complement ideal")
    _add_common(s, columns=True)
    s.set_defaults(handler=_cmd_clefts)

    s = subs.add_parser("hilbert", help="Hilbert function of a staircase")
    _add_common(s, columns=True, weight=True)
    s.set_defaults(handler=_cmd_hilbert)

    s = subs.add_parser("compatible", help="all staircases with a given Hilbert function")
    _add_common(s, weight=True, hilbert=True)
    s.set_defaults(handler=_cmd_compatible)

    s = subs.add_parser("compare", help="S-profile order between two staircases")
    _add_common(s, columns=True, weight=True)
    s.add_argument("--other", required=True, help="second staircase columns")
    s.set_defaults(handler=_cmd_compare)

    s = subs.add_parser("tangent", help="significant cleft couples, optionally by direction")
    _add_common(s, columns=True, weight=True)
    s.set_defaults(handler=_cmd_tangent)

    s = subs.add_parser("graph", help="significance graph in one direction")
    _add_common(s, columns=True, weight=True)
    s.set_defaults(handler=_cmd_graph)

    s = subs.add_parser("hom-oracle", help="tangent space via exact linear algebra")
    _add_common(s, columns=True)
    s.add_argument("--bound", type=int, default=10)
    s.set_defaults(handler=_cmd_hom_oracle)

    s = subs.add_parser("cells", help="attracting-cell dimension for a torus weight vector")
    _add_common(s, columns=True, vector=True)
    s.set_defaults(handler=_cmd_cells)

    s = subs.add_parser("chart", help="chart family over the positive tangent space")
    _add_common(s, columns=True, weight=True, mode=True)
    s.set_defaults(handler=_cmd_chart)

    s = subs.add_parser("specialize", help="evaluate a chart family at a point")
    _add_common(s, columns=True, weight=True, mode=True)
    s.add_argument("--point", help='JSON point, e.g. \'{"X[0,1;1,0]":"1"}\'')
    s.set_defaults(handler=_cmd_specialize)

    s = subs.add_parser("verify-flat", help="flatness certificate of a chart family")
    _add_common(s, columns=True, weight=True, mode=True, seed=True)
    s.add_argument("--samples", type=int, default=3, help="extra pseudo-random sample points")
    s.set_defaults(handler=_cmd_verify_flat)

    s = subs.add_parser("degenerate", help="one flat degeneration to a smaller stratum")
    _add_common(s, columns=True, weight=True)
    s.add_argument("--couple", help="couple to specialize, e.g. '0,1;1,0'")
    s.set_defaults(handler=_cmd_degenerate)

    s = subs.add_parser("descend", help="degenerate until the positive tangent space vanishes")
    _add_common(s, columns=True, weight=True, seed=True)
    s.add_argument("--policy", default="first", help="first | last | random")
    s.set_defaults(handler=_cmd_descend)

    s = subs.add_parser("minimal", help="minimal staircase of a Hilbert function")
    _add_common(s, weight=True, hilbert=True)
    s.set_defaults(handler=_cmd_minimal)

    s = subs.add_parser("components", help="full report per Hilbert-function class")
    _add_common(s, weight=True)
    s.add_argument("--length", type=int, required=True)
    s.set_defaults(handler=_cmd_components)

    s = subs.add_parser("poincare", help="cell-dimension census over one length")
    _add_common(s, vector=True)
    s.add_argument("--length", type=int, required=True)
    s.set_defaults(handler=_cmd_poincare)

    s = subs.add_parser("groebner", help="Groebner check, reduced basis and colength")
    _add_common(s, weight=True, order=True, ideal=True)
    s.set_defaults(handler=_cmd_groebner)

    s = subs.add_parser("initial", help="staircase of the initial ideal")
    _add_common(s, weight=True, order=True, ideal=True)
    s.set_defaults(handler=_cmd_initial)

    s = subs.add_parser("weight-initial", help="extremal-weight initial ideal (flat limit)")
    _add_common(s, ideal=True, vector=True)
    s.add_argument("--extremum", default="max", choices=("max", "min"))
    s.set_defaults(handler=_cmd_weight_initial)

    s = subs.add_parser("run-suite", help="batch property suites with JSON summaries")
    s.add_argument("suite", choices=("verify-all", "components", "poincare"))
    s.add_argument("--max-length", dest="max_length", type=int, default=6)
    s.add_argument("--length", type=int, default=6)
    s.add_argument("--a", type=int, default=None)
    s.add_argument("--b", type=int, default=None)
    s.add_argument("--weights", help="semicolon-separated pairs, e.g. '(-1,-3);(-2,-5)'")
    s.add_argument("--seed", type=int, default=7)
    s.add_argument("--max-steps", dest="max_steps", type=int, default=None)
    s.set_defaults(handler=_cmd_run_suite)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.handler(args)
    except MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(
        json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
