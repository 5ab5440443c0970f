"""Request handlers shared by the HTTP service and the CLI.

Each handler takes a validated request model and returns a response model;
precondition violations raise ExactError subclasses that the service maps to
HTTP 422 and the CLI maps to exit code 2.  Series payloads list polynomial
coefficients: when a larger order is requested, the missing coefficients are
taken to be exact zeros of that polynomial, never invented series terms.
"""

from __future__ import annotations

from fractions import Fraction

from . import schemas
from .combinat import (
    dihedral_orbits,
    lukasiewicz_words,
    motzkin_paths,
    motzkin_weight,
    plane_trees,
)
from .deformation import integral_variant_path, inversion_reversion_path
from .errors import BadRange, EmptyCoefficients
from .reversion import build_ladder, fixed_point_series
from .rings import MultiPoly, format_rational, parse_rational
from .series import TruncatedSeries
from .suites import SUITES, run_suite
from .transforms import (
    binomial_transform,
    hankel_transform,
    inverse_transform_iterates,
    jfraction_expand,
)


def _encode(value):
    if isinstance(value, MultiPoly):
        return value.to_json_obj()
    return format_rational(value)


def _parse_seq(strings) -> list[Fraction]:
    if not strings:
        raise EmptyCoefficients("empty sequence")
    return [parse_rational(s) for s in strings]


def _series(coeffs: list[str], order: int | None) -> TruncatedSeries:
    values = _parse_seq(coeffs)
    if order is not None:
        if order <= len(values):
            values = values[:order]
        else:
            values = values + [Fraction(0)] * (order - len(values))
    return TruncatedSeries(values)


def revert(req: schemas.SeriesRequest) -> schemas.SeriesResponse:
    result = _series(req.coeffs, req.order).revert()
    return schemas.SeriesResponse(
        order=result.order, coeffs=[_encode(c) for c in result.coeffs]
    )


def ladder(req: schemas.LadderRequest) -> schemas.LadderResponse:
    s = _series(req.coeffs, max(req.n, len(req.coeffs)))
    lad = build_ladder(s, req.n)
    return schemas.LadderResponse(
        partials=[[_encode(c) for c in p] for p in lad.partials],
        mirrors=[[_encode(c) for c in m] for m in lad.mirrors],
        mirror_constants=[_encode(m[0]) for m in lad.mirrors],
    )


def fixed_point(req: schemas.LadderRequest) -> schemas.SeriesResponse:
    s = _series(req.coeffs, max(req.n, len(req.coeffs)))
    q = fixed_point_series(build_ladder(s, req.n))
    return schemas.SeriesResponse(order=q.order, coeffs=[_encode(c) for c in q.coeffs])


def interpolate(req: schemas.InterpRequest) -> schemas.SeriesResponse:
    a = _series(req.coeffs, req.order)
    tau = parse_rational(req.tau)
    if req.variant == "reversion":
        result = inversion_reversion_path(a, tau)
    else:
        result = integral_variant_path(a, tau)
    return schemas.SeriesResponse(
        order=result.order, coeffs=[_encode(c) for c in result.coeffs]
    )


def hankel(req: schemas.HankelRequest) -> schemas.HankelResponse:
    dets = hankel_transform(_parse_seq(req.seq), req.shift, req.n)
    return schemas.HankelResponse(dets=[_encode(d) for d in dets])


def jfraction(req: schemas.JFractionRequest) -> schemas.JFractionResponse:
    jf = jfraction_expand(TruncatedSeries(_parse_seq(req.coeffs)), req.depth)
    return schemas.JFractionResponse(
        d0=format_rational(jf.d0),
        p=[format_rational(v) for v in jf.p],
        q=[format_rational(v) for v in jf.q],
    )


def transform(req: schemas.TransformRequest) -> schemas.TransformResponse:
    seq = _parse_seq(req.seq)
    if req.kind == "inverse":
        out = inverse_transform_iterates(TruncatedSeries(seq), req.iterations).coeffs
    else:
        out = binomial_transform(seq, parse_rational(req.tau))
    return schemas.TransformResponse(seq=[_encode(v) for v in out])


def _tree_to_lists(tree: tuple) -> list:
    return [_tree_to_lists(c) for c in tree]


def enumerate_objects(req: schemas.EnumRequest) -> schemas.EnumResponse:
    if req.kind == "luka":
        if req.n < 1:
            raise BadRange("words need length >= 1")
        items = [list(w) for w in lukasiewicz_words(req.n)]
        return schemas.EnumResponse(count=len(items), items=items)
    if req.kind == "motzkin":
        paths = motzkin_paths(req.n)
        items = [list(p) for p in paths]
        weights = [motzkin_weight(p).to_json_obj() for p in paths] if req.weights else None
        return schemas.EnumResponse(count=len(items), items=items, weights=weights)
    trees = plane_trees(req.n + 1)
    items = [_tree_to_lists(t) for t in trees]
    orbits = None
    if req.orbits:
        raw = dihedral_orbits(req.n, "plane")
        orbits = {
            "orbits": [[_tree_to_lists(t) for t in orbit] for orbit in raw["orbits"]],
            "fixed_left": raw["fixed_left"],
            "fixed_right": raw["fixed_right"],
            "count": raw["count"],
        }
    return schemas.EnumResponse(count=len(items), items=items, orbits=orbits)


def verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    if req.suite != "all" and req.suite not in SUITES:
        known = ", ".join(sorted(SUITES) + ["all"])
        raise BadRange(f"unknown suite {req.suite!r}; choose one of: {known}")
    report = run_suite(req.suite, order=req.order)
    return schemas.VerifyResponse(
        suite=report.suite,
        passed=report.passed,
        checks=[
            schemas.CheckLine(name=c["name"], passed=c["passed"], detail=c["detail"])
            for c in report.checks
        ],
    )
