"""Command-line client for the exact-computation handlers.

The CLI is a thin front end: each subcommand builds the same request model
the HTTP service accepts, runs the shared handler in process, and prints the
response as JSON (default) or CSV.  Exit codes: 0 success, 1 internal error
or failed verification suite, 2 validation error (with an error object on
stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from . import api, schemas
from .errors import ExactError, MalformedRational


def _string_list(text: str) -> list[str]:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedRational(f"not valid JSON: {exc}") from None
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise MalformedRational('expected a JSON array of rational strings like ["1","-3/7"]')
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpskit",
        description="Exact formal power series reversion, Hankel transforms, "
        "continued fractions, and combinatorial enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("revert", help="compositional inverse of a series")
    p.add_argument("--coeffs", required=True, help="JSON array of rational strings")
    p.add_argument("--order", type=int, default=None, help="output truncation order")
    add_format(p)

    p = sub.add_parser("dl", help="stepwise truncated products and their mirrors")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--n", type=int, required=True, help="number of ladder steps")
    add_format(p)

    p = sub.add_parser("qser", help="series q with q = t*s(q) built from the ladder")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--order", type=int, required=True, help="number of q coefficients")
    add_format(p)

    p = sub.add_parser("interp", help="deformation between inversion and reversion")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--tau", default="0", help="deformation parameter, rational string")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--variant", choices=("reversion", "derivative"), default="reversion")
    add_format(p)

    p = sub.add_parser("hankel", help="shifted Hankel determinant transform")
    p.add_argument("--seq", required=True, help="JSON array of rational strings")
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--n", type=int, required=True, help="largest matrix size")
    add_format(p)

    p = sub.add_parser("jfrac", help="continued-fraction expansion of a series")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--n", type=int, required=True, help="expansion depth")
    add_format(p)

    p = sub.add_parser("transform", help="inverse or binomial sequence transform")
    p.add_argument("--seq", required=True)
    p.add_argument("--kind", choices=("inverse", "binomial"), required=True)
    p.add_argument("--k", type=int, default=1, help="inverse-transform iterations")
    p.add_argument("--tau", default="1", help="binomial parameter, rational string")
    add_format(p)

    p = sub.add_parser("enum", help="enumerate words, paths, or trees")
    enum_sub = p.add_subparsers(dest="kind", required=True)
    q = enum_sub.add_parser("luka", help="Lukasiewicz words of a given length")
    q.add_argument("--n", type=int, required=True)
    add_format(q)
    q = enum_sub.add_parser("motzkin", help="Motzkin paths of a given length")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--weights", action="store_true", help="include weight monomials")
    add_format(q)
    q = enum_sub.add_parser("trees", help="plane trees with n+1 vertices")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--orbits", action="store_true", help="include dihedral orbits")
    add_format(q)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--order", type=int, default=None, help="override the default size")
    add_format(p)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _dispatch(args) -> tuple:
    """Build the request model, call the shared handler, return the response."""
    if args.command == "revert":
        return api.revert(
            schemas.SeriesRequest(coeffs=_string_list(args.coeffs), order=args.order)
        )
    if args.command == "dl":
        return api.ladder(
            schemas.LadderRequest(coeffs=_string_list(args.coeffs), n=args.n)
        )
    if args.command == "qser":
        return api.fixed_point(
            schemas.LadderRequest(coeffs=_string_list(args.coeffs), n=args.order)
        )
    if args.command == "interp":
        return api.interpolate(
            schemas.InterpRequest(
                coeffs=_string_list(args.coeffs),
                tau=args.tau,
                order=args.order,
                variant=args.variant,
            )
        )
    if args.command == "hankel":
        return api.hankel(
            schemas.HankelRequest(seq=_string_list(args.seq), shift=args.shift, n=args.n)
        )
    if args.command == "jfrac":
        return api.jfraction(
            schemas.JFractionRequest(coeffs=_string_list(args.coeffs), depth=args.n)
        )
    if args.command == "transform":
        return api.transform(
            schemas.TransformRequest(
                seq=_string_list(args.seq),
                kind=args.kind,
                iterations=args.k,
                tau=args.tau,
            )
        )
    if args.command == "enum":
        return api.enumerate_objects(
            schemas.EnumRequest(
                kind=args.kind,
                n=args.n,
                weights=getattr(args, "weights", False),
                orbits=getattr(args, "orbits", False),
            )
        )
    if args.command == "verify":
        return api.verify(schemas.VerifyRequest(suite=args.suite, order=args.order))
    raise AssertionError(f"unhandled command {args.command}")


def _csv_lines(response) -> list[str]:
    if isinstance(response, schemas.SeriesResponse):
        return [",".join(str(c) for c in response.coeffs)]
    if isinstance(response, schemas.HankelResponse):
        return [",".join(str(d) for d in response.dets)]
    if isinstance(response, schemas.TransformResponse):
        return [",".join(str(v) for v in response.seq)]
    if isinstance(response, schemas.JFractionResponse):
        return [
            "d0," + response.d0,
            "p," + ",".join(response.p),
            "q," + ",".join(response.q),
        ]
    if isinstance(response, schemas.LadderResponse):
        lines = []
        for i, poly in enumerate(response.partials, 1):
            lines.append(f"P,{i}," + ",".join(str(c) for c in poly))
        for i, poly in enumerate(response.mirrors, 1):
            lines.append(f"Q,{i}," + ",".join(str(c) for c in poly))
        return lines
    if isinstance(response, schemas.VerifyResponse):
        return [f"{c.name},{'pass' if c.passed else 'FAIL'}" for c in response.checks]
    if isinstance(response, schemas.EnumResponse):
        return [json.dumps(item) for item in response.items]
    return [response.model_dump_json()]


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        uvicorn.run("fpskit.service:app", host=args.host, port=args.port)
        return 0

    try:
        response = _dispatch(args)
    except (ExactError, ValidationError) as exc:
        error = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(error), file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        error = {"error": "InternalError", "message": str(exc)}
        print(json.dumps(error), file=sys.stderr)
        return 1

    if getattr(args, "format", "json") == "csv":
        for line in _csv_lines(response):
            print(line)
    else:
        print(response.model_dump_json(exclude_none=True))

    if isinstance(response, schemas.VerifyResponse) and not response.passed:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
