"""Command-line front end.

JSON goes to stdout (stable key order, no timestamps), human summaries to
stderr.  Exit codes: 0 success / nontrivial point, 1 verification failure or
trivial point, 2 invalid input or degenerate construction, 3 search
exhausted.  ``--store FILE`` (or QUINTICPOINTS_STORE) appends every result to
a JSON-lines ledger; only the timestamp differs between identical reruns.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import datetime
import json
import os
import sys
from fractions import Fraction

from . import __version__, elliptic, quadform, surfaces
from .exact import GaussianRational, format_rational, parse_rational
from .quintic import Point4, QuinticCoeffs, classify, residual, scale_to_integers

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INVALID = 2
EXIT_EXHAUSTED = 3

_INVALID_INPUT_ERRORS = (
    surfaces.WrongFamily,
    surfaces.DegenerateParameters,
    surfaces.NotSolvable,
    surfaces.NoBasePointFound,
    surfaces.MapPole,
    surfaces.SingularCubic,
    surfaces.PointNotOnCubic,
    surfaces.DegenerateConic,
    surfaces.SeedNotOnConic,
    surfaces.DegenerateMixedPair,
    elliptic.DegenerateSpecialization,
    elliptic.PointNotOnCurve,
    elliptic.SingularCurve,
    quadform.ZeroCoefficient,
    quadform.NotNormalized,
    quadform.BaseNotOnConic,
)


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _note(message: str) -> None:
    print(message, file=sys.stderr)


def _store_record(args, command: str, inputs: dict, outputs) -> None:
    path = getattr(args, "store", None) or os.environ.get("QUINTICPOINTS_STORE")
    if not path:
        return
    record = {
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "version": __version__,
    }
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(record, sort_keys=True) + "\n")


def _parse_gaussian(text: str) -> GaussianRational:
    """Accept 'a/b' or 'a/b,c/d' (real,imaginary)."""
    if "," in text:
        re_part, im_part = text.split(",", 1)
        return GaussianRational(parse_rational(re_part), parse_rational(im_part))
    return GaussianRational(parse_rational(text), Fraction(0))


# ---------------------------------------------------------------------------
# verify-identities

def cmd_verify_identities(args) -> int:
    checks = surfaces.identity_suite(only=args.only, mutate=args.mutate, seed=args.seed)
    payload = {
        "checks": [
            {"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks
        ],
        "all_pass": all(c.ok for c in checks),
        "count": len(checks),
    }
    _emit(payload)
    for c in checks:
        _note(f"{'PASS' if c.ok else 'FAIL'}  {c.name}")
    _store_record(args, "verify-identities", {"only": args.only, "mutate": args.mutate}, payload)
    return EXIT_OK if payload["all_pass"] and checks else EXIT_FAIL


# ---------------------------------------------------------------------------
# construct

def _certificate_exit(cert: surfaces.Certificate, args) -> int:
    payload = cert.to_json()
    _emit(payload)
    _note(
        f"{cert.construction}: residual 0, "
        f"{'nontrivial' if cert.nontrivial else 'TRIVIAL'} point {cert.point.to_json()}"
    )
    _store_record(args, f"construct {cert.construction}", cert.inputs, payload)
    return EXIT_OK if cert.nontrivial else EXIT_FAIL


_SYMMETRIC_PRESETS = {
    "consani-scholten": surfaces.CONSANI_SCHOLTEN,
    "c29": surfaces.SymmetricQuinticCoeffs(
        a1=1, a2=1, a3=1, a4=1, a5=1, b1=1, b2=1, b3=1, c0=1, c1=29
    ),
}


def _symmetric_coeffs(args) -> surfaces.SymmetricQuinticCoeffs:
    if args.preset:
        return _SYMMETRIC_PRESETS[args.preset]
    if args.coeffs:
        raw = json.loads(args.coeffs)
        return surfaces.SymmetricQuinticCoeffs(**{k: int(v) for k, v in raw.items()})
    raise ValueError("symmetric construction needs --preset or --coeffs")


def cmd_construct(args) -> int:
    family = args.family
    try:
        if family == "thm1":
            cert, _ = surfaces.thm1_point(
                QuinticCoeffs(args.a, args.b, args.c),
                parse_rational(args.u),
                parse_rational(args.v),
                branch=args.branch,
            )
        elif family == "thm2":
            cert = surfaces.thm2_point(
                args.a, args.c, parse_rational(args.u), parse_rational(args.v),
                search_bound=args.bound,
            )
        elif family == "gaussian":
            cert = surfaces.gaussian_point(
                (args.a, args.b, args.c),
                parse_rational(args.y),
                _parse_gaussian(args.u),
            )
        elif family == "fifth-power":
            cert = surfaces.fifth_power_solution(
                _parse_gaussian(args.u), _parse_gaussian(args.v)
            )
        elif family == "mixed":
            cert = surfaces.mixed_point(args.c, args.f, parse_rational(args.t), args.k)
        elif family == "symmetric":
            coeffs = _symmetric_coeffs(args)
            if args.variant == "gaussian":
                cert = surfaces.symmetric_gaussian_point(
                    coeffs, parse_rational(args.t), _parse_gaussian(args.u)
                )
            else:
                seed = tuple(parse_rational(s) for s in args.seed_point.split(","))
                cert = surfaces.symmetric_rational_point(
                    coeffs, parse_rational(args.t), seed, parse_rational(args.w)
                )
        else:  # pragma: no cover - argparse restricts choices
            raise ValueError(family)
    except _INVALID_INPUT_ERRORS as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        _emit(payload)
        _note(f"invalid input: {exc}")
        _store_record(args, f"construct {family}", vars(args).get("family", {}), payload)
        return EXIT_INVALID
    except (ValueError, ZeroDivisionError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return EXIT_INVALID
    return _certificate_exit(cert, args)


# ---------------------------------------------------------------------------
# solve-form

def cmd_solve_form(args) -> int:
    try:
        norm = quadform.normalize(args.a1, args.a2, args.a3, args.a4)
        report = quadform.represents_zero(norm.form)
        witness = quadform.find_zero(norm.form, args.bound)
        pulled = norm.pull_back_witness(witness) if witness else None
    except quadform.ZeroCoefficient as exc:
        _emit({"error": "ZeroCoefficient", "message": str(exc)})
        return EXIT_INVALID
    payload = {
        "form": [args.a1, args.a2, args.a3, args.a4],
        "normalized": list(norm.form.coeffs()),
        "conditions": report.conditions_json(),
        "solvable": report.solvable,
        "witness": list(witness) if witness else None,
        "witness_original_form": list(pulled) if pulled else None,
    }
    _emit(payload)
    _note(
        f"form {payload['form']} -> normalized {payload['normalized']}: "
        f"{'solvable' if report.solvable else 'unsolvable'}"
    )
    _store_record(args, "solve-form", {"form": payload["form"]}, payload)
    return EXIT_OK


# ---------------------------------------------------------------------------
# table

def _verify_row_task(index: int):
    rows = elliptic.load_table()
    return elliptic.verify_row(rows[index]).to_json()


def _search_row_task(task):
    d, height, bound = task
    found = elliptic.conjecture2_search(
        d,
        0,
        elliptic.rationals_by_height(height),
        elliptic.SearchBounds(num_bound=bound, den_bound=1),
    )
    if found is None:
        return {"D": d, "status": "exhausted"}
    t, point = found
    return {
        "D": d,
        "t": format_rational(t),
        "X": format_rational(point.x),
        "Y": format_rational(point.y),
        "status": "ok",
    }


def _run_parallel(task_fn, tasks, jobs: int):
    if jobs <= 1:
        return [task_fn(t) for t in tasks]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(task_fn, tasks))


def _rows_to_csv(rows) -> str:
    lines = ["D,t,X,Y,status"]
    for row in rows:
        lines.append(
            ",".join(
                str(row.get(k, "")) for k in ("D", "t", "X", "Y", "status")
            )
        )
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    if args.dmax < 1:
        _emit({"error": "InvalidInput", "message": "--dmax must be >= 1"})
        return EXIT_INVALID
    if args.mode == "verify":
        count = min(args.dmax, 100)
        results = _run_parallel(_verify_row_task, range(count), args.jobs)
        all_ok = all(r["status"] == "ok" for r in results)
        exit_code = EXIT_OK if all_ok else EXIT_FAIL
    else:
        tasks = [(d, args.tmax, args.bound) for d in range(1, args.dmax + 1)]
        results = _run_parallel(_search_row_task, tasks, args.jobs)
        exhausted = [r for r in results if r["status"] == "exhausted"]
        all_ok = not exhausted
        exit_code = EXIT_OK if all_ok else EXIT_EXHAUSTED
    csv_text = _rows_to_csv(results)
    payload = {"mode": args.mode, "rows": results, "all_ok": all_ok}
    _emit(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
        _note(f"wrote {args.out}")
    else:
        _note(csv_text.rstrip("\n"))
    _store_record(args, "table", {"dmax": args.dmax, "mode": args.mode}, payload)
    return exit_code


# ---------------------------------------------------------------------------
# question3

def cmd_question3(args) -> int:
    if args.N < 1:
        _emit({"error": "InvalidInput", "message": "--N must be >= 1"})
        return EXIT_INVALID
    a_n, sols = quadform.question3_family(args.N)
    f = QuinticCoeffs(a_n, 0, args.c)
    points = []
    for sol in sols:
        x, y, z = sol.coords()
        point = Point4(
            (-x + y + 3 * z) / 5, (2 * x + y) / 5, 3 * y / 5, (x - y + 3 * z) / 5
        )
        res = residual(f, point)
        report = classify(f, point)
        assert res == 0 and point.is_integral()
        points.append(
            {
                "point": point.to_json(),
                "residual": str(res),
                "nontrivial": report.nontrivial,
            }
        )
    payload = {"N": args.N, "a_N": a_n, "c": args.c, "points": points}
    _emit(payload)
    _note(f"f = X^5 + ({a_n})X^3 + ({args.c})X carries {len(points)} integer points")
    _store_record(args, "question3", {"N": args.N, "c": args.c}, payload)
    return EXIT_OK


# ---------------------------------------------------------------------------
# scale-integers

def cmd_scale_integers(args) -> int:
    try:
        f = QuinticCoeffs(args.a, args.b, args.c)
        raw = json.loads(args.points) if args.points else json.load(sys.stdin)
        points = [Point4.from_json(obj) for obj in raw]
        big, scaled = scale_to_integers(f, points)
    except Exception as exc:  # noqa: BLE001 - boundary: report and exit 2
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return EXIT_INVALID
    payload = {
        "f": {"a": f.a, "b": f.b, "c": f.c},
        "F": {"a": big.a, "b": big.b, "c": big.c},
        "points": [p.to_json() for p in scaled],
        "residuals": [str(residual(big, p)) for p in scaled],
    }
    _emit(payload)
    _note(f"scaled {len(scaled)} point(s) onto V_F with F = {big}")
    _store_record(args, "scale-integers", {"f": payload["f"]}, payload)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quintic-points",
        description="Exact rational points on quintic hypersurfaces f(p)+f(q)=f(r)+f(s)",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized spot checks")
    common.add_argument("--bound", type=int, default=60, help="search bound")
    common.add_argument("--out", help="output file (table CSV)")
    common.add_argument("--store", help="append-only JSONL result store")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_sub(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p_verify = add_sub("verify-identities", help="run the symbolic identity suite")
    p_verify.add_argument("--only", help="substring filter on check names")
    p_verify.add_argument("--mutate", action="store_true", help="test hook: perturb one identity")
    p_verify.set_defaults(func=cmd_verify_identities)

    p_construct = add_sub("construct", help="construct one certified point")
    p_construct.add_argument(
        "family",
        choices=["thm1", "thm2", "gaussian", "fifth-power", "mixed", "symmetric"],
    )
    p_construct.add_argument("--a", type=int, default=0)
    p_construct.add_argument("--b", type=int, default=0)
    p_construct.add_argument("--c", type=int, default=0)
    p_construct.add_argument("--f", type=int, default=0)
    p_construct.add_argument("--u", default="0")
    p_construct.add_argument("--v", default="0")
    p_construct.add_argument("--y", default="1")
    p_construct.add_argument("--t", default="1")
    p_construct.add_argument("--w", default="0")
    p_construct.add_argument("--k", type=int, default=1)
    p_construct.add_argument("--branch", type=int, default=1, choices=[1, -1])
    p_construct.add_argument("--variant", choices=["gaussian", "rational"], default="gaussian")
    p_construct.add_argument("--preset", choices=sorted(_SYMMETRIC_PRESETS))
    p_construct.add_argument("--coeffs", help="symmetric coefficients as JSON")
    p_construct.add_argument("--seed-point", default="3,8", help="conic seed U,V")
    p_construct.set_defaults(func=cmd_construct)

    p_solve = add_sub("solve-form", help="decide a1 X1^2 + ... + a4 X4^2 = 0")
    p_solve.add_argument("a1", type=int)
    p_solve.add_argument("a2", type=int)
    p_solve.add_argument("a3", type=int)
    p_solve.add_argument("a4", type=int)
    p_solve.set_defaults(func=cmd_solve_form)

    p_table = add_sub("table", help="verify or extend the specialization table")
    p_table.add_argument("--dmax", type=int, default=100)
    p_table.add_argument("--mode", choices=["verify", "search"], default="verify")
    p_table.add_argument("--tmax", type=int, default=50, help="height cap for search mode")
    p_table.set_defaults(func=cmd_table)
    p_table.set_defaults(bound=3000)

    p_q3 = add_sub("question3", help="N integer points with c fixed")
    p_q3.add_argument("--N", type=int, default=1)
    p_q3.add_argument("--c", type=int, default=1)
    p_q3.set_defaults(func=cmd_question3)

    p_scale = add_sub("scale-integers", help="clear denominators via Corollary-style scaling")
    p_scale.add_argument("--a", type=int, default=0)
    p_scale.add_argument("--b", type=int, default=0)
    p_scale.add_argument("--c", type=int, default=0)
    p_scale.add_argument("--points", help="JSON list of points (stdin when omitted)")
    p_scale.set_defaults(func=cmd_scale_integers)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:  # pragma: no cover
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
