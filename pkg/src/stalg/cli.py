"""Command-line interface: verification suites and solution tooling.

Commands
--------
verify      run a named invariant suite and emit a JSON report
planewave   construct an on-shell plane-wave solution and evaluate a residual
decompose   split a field JSON file through both projector families
quartet     build the four real Hestenes solutions from a Dirac solution
oracle      compare algebraic values against the 4x4 matrix representation

All machine output is JSON on stdout (or ``--out PATH``); diagnostics go to
stderr.  Exit codes: 0 pass, 1 verification failure, 2 usage or input error.

Exact-mode numbers on the command line are rationals like ``3`` or ``-5/7``;
complex parameters use ``re`` or ``re,im`` (for example ``--b 0,1`` is the
imaginary unit).  Float mode accepts ordinary decimals.  Values that start
with a minus sign and are not plain integers must use the ``=`` form, e.g.
``--c=-1/3``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .fields import (
    Field,
    dirac_residual,
    hestenes_residual,
    joyce_planewave,
    joyce_residual,
    rank,
    rest_solutions,
)
from .matrices import represent, unrepresent
from .multivector import Multivector
from .scalars import EXACT, FLOAT, FLOAT_EPS, ComplexScalar, ModeMismatchError
from .spinors import (
    hestenes_quartet,
    real_even_pair,
    reconstruct_joyce,
    split_right,
)
from .verify import DEFAULT_SEED, SUITE_NAMES, run_suite
from .fields import PlaneWaveParams


def _parse_real(text: str, mode: str):
    if mode == EXACT:
        return Fraction(text)
    return float(Fraction(text)) if "/" in text else float(text)


def _parse_complex(text: str, mode: str) -> ComplexScalar:
    parts = text.split(",")
    if len(parts) == 1:
        re, im = parts[0], "0"
    elif len(parts) == 2:
        re, im = parts
    else:
        raise ValueError(f"complex value must be 're' or 're,im', got {text!r}")
    if mode == EXACT:
        return ComplexScalar.exact(Fraction(re), Fraction(im))
    return ComplexScalar.floating(_parse_real(re, FLOAT), _parse_real(im, FLOAT))


def _emit(payload: dict, out_path: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out_path and out_path != "-":
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_json(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _residual_entry(residual: Field, reference: Field) -> dict:
    if residual.mode == EXACT:
        return {"zero": residual.is_zero(), "norm": 0.0 if residual.is_zero() else residual.norm()}
    norm = residual.norm()
    return {"zero": norm <= FLOAT_EPS * (1.0 + reference.norm()), "norm": norm}


# -- commands -----------------------------------------------------------------


def cmd_verify(args) -> int:
    report = run_suite(args.suite, mode=args.mode, seed=args.seed)
    _emit(report.to_json_dict(), args.out)
    return 0 if report.failures == 0 else 1


_CHECKS = {
    "dirac": lambda f, m: dirac_residual(f, m),
    "joyce": lambda f, m: joyce_residual(f, m),
    "hestenes+": lambda f, m: hestenes_residual(f, m),
    "hestenes-": lambda f, m: hestenes_residual(f, -m),
}


def cmd_planewave(args) -> int:
    mode = args.mode
    m = _parse_real(args.m, mode)
    k = _parse_real(args.k, mode)
    operator = _CHECKS[args.check]

    if k == 0:
        if not args.rest:
            print(
                "error: k = 0 is degenerate; pass --rest for the rest-frame basis",
                file=sys.stderr,
            )
            return 2
        basis = rest_solutions(m, args.omega_sign, mode)
        entries = []
        all_zero = True
        for f in basis.fields:
            res = operator(f, m)
            entry = _residual_entry(res, f)
            all_zero = all_zero and entry["zero"]
            entries.append({"field": f.to_json_dict(), "residual": entry})
        _emit(
            {
                "mode": mode,
                "check": args.check,
                "degenerate": basis.degenerate,
                "rest_basis": entries,
            },
            args.out,
        )
        return 0 if all_zero else 1

    params = PlaneWaveParams(
        _parse_complex(args.a, mode),
        _parse_complex(args.b, mode),
        _parse_complex(args.c, mode),
        _parse_complex(args.d, mode),
    )
    field = joyce_planewave(params, args.omega_sign, k, m)
    residual = operator(field, m)
    entry = _residual_entry(residual, field)
    _emit(
        {
            "mode": mode,
            "check": args.check,
            "field": field.to_json_dict(),
            "residual_zero": entry["zero"],
            "residual_norm": entry["norm"],
            "residual": residual.to_json_dict(),
        },
        args.out,
    )
    return 0 if entry["zero"] else 1


def cmd_decompose(args) -> int:
    data = _load_json(args.input)
    field = Field.from_json_dict(data)
    m = _parse_real(args.m, field.mode)

    def residual_table(f: Field) -> dict:
        return {
            "dirac_plus": _residual_entry(dirac_residual(f, m), f),
            "dirac_minus": _residual_entry(dirac_residual(f, -m), f),
            "hestenes_plus": _residual_entry(hestenes_residual(f, m), f),
            "hestenes_minus": _residual_entry(hestenes_residual(f, -m), f),
        }

    p0_plus, p0_minus = split_right(field, "gamma0")
    p12_plus, p12_minus = split_right(field, "i12")
    payload = {
        "mode": field.mode,
        "mass": args.m,
        "p0_split": {
            "plus": {"field": p0_plus.to_json_dict(), "residuals": residual_table(p0_plus)},
            "minus": {"field": p0_minus.to_json_dict(), "residuals": residual_table(p0_minus)},
        },
        "p12_split": {
            "plus": {"field": p12_plus.to_json_dict(), "residuals": residual_table(p12_plus)},
            "minus": {"field": p12_minus.to_json_dict(), "residuals": residual_table(p12_minus)},
        },
        "warnings": [],
    }
    if field.is_even():
        f_plus, f_minus = real_even_pair(field)
        rebuilt = reconstruct_joyce(f_plus, f_minus)
        ok = rebuilt == field if field.mode == EXACT else rebuilt.isclose(field)
        payload["real_even_pair"] = {
            "plus": {"field": f_plus.to_json_dict(), "residuals": residual_table(f_plus)},
            "minus": {"field": f_minus.to_json_dict(), "residuals": residual_table(f_minus)},
        }
        payload["reconstruction_ok"] = ok
    else:
        payload["real_even_pair"] = None
        payload["reconstruction_ok"] = None
        payload["warnings"].append(
            "input is not even-valued; the real even pair branch was skipped"
        )
        print("warning: input is not even-valued; skipping real even pair", file=sys.stderr)
    _emit(payload, args.out)
    if payload["reconstruction_ok"] is False:
        return 1
    return 0


def cmd_quartet(args) -> int:
    data = _load_json(args.input)
    field = Field.from_json_dict(data)
    m = _parse_real(args.m, field.mode)
    if field.is_zero():
        print("error: zero field is not a usable quartet seed", file=sys.stderr)
        return 1
    seed_residual = dirac_residual(field, m)
    if not _residual_entry(seed_residual, field)["zero"]:
        print(
            f"error: input does not solve the Dirac equation at mass {args.m}; "
            f"residual norm {seed_residual.norm()}",
            file=sys.stderr,
        )
        return 1
    quartet = hestenes_quartet(field, m)
    entries = [_residual_entry(hestenes_residual(h, m), h) for h in quartet]
    payload = {
        "mode": field.mode,
        "mass": args.m,
        "fields": [h.to_json_dict() for h in quartet],
        "residuals": entries,
        "real_rank": rank(list(quartet), "real"),
        "rank_scalars": "real",
    }
    _emit(payload, args.out)
    return 0 if all(e["zero"] for e in entries) and payload["real_rank"] == 4 else 1


def cmd_oracle(args) -> int:
    import random

    data = _load_json(args.input)
    if "coeffs" in data:
        values = [Multivector.from_json_dict(data)]
        kind = "multivector"
    elif "terms" in data:
        field = Field.from_json_dict(data)
        values = [t.amplitude for t in field.terms]
        kind = "field"
    else:
        raise ValueError("input JSON is neither a multivector nor a field")

    mode = values[0].mode if values else EXACT
    rng = random.Random(args.seed)

    def random_partner() -> Multivector:
        coeffs = {}
        for bits in range(16):
            if rng.random() < 0.6:
                re = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                im = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                if mode == EXACT:
                    coeffs[bits] = ComplexScalar.exact(re, im)
                else:
                    coeffs[bits] = ComplexScalar.floating(float(re), float(im))
        return Multivector(mode, coeffs)

    checks = []
    worst = 0.0
    all_ok = True
    for idx, value in enumerate(values):
        rep = represent(value)
        back = unrepresent(rep)
        ok = back == value if mode == EXACT else back.isclose(value)
        all_ok = all_ok and ok
        checks.append({"id": f"roundtrip[{idx}]", "status": "pass" if ok else "fail"})
        for trial in range(args.trials):
            partner = random_partner()
            lhs = represent(value * partner)
            rhs = rep * represent(partner)
            gap = lhs.max_discrepancy(rhs)
            worst = max(worst, gap)
            ok = lhs == rhs if mode == EXACT else gap <= FLOAT_EPS * (1.0 + value.max_magnitude())
            all_ok = all_ok and ok
            checks.append(
                {"id": f"product[{idx},{trial}]", "status": "pass" if ok else "fail"}
            )
        lhs = represent(value.adjoint())
        rhs = rep.conjugate_transpose()
        gap = lhs.max_discrepancy(rhs)
        worst = max(worst, gap)
        ok = lhs == rhs if mode == EXACT else gap <= FLOAT_EPS * (1.0 + value.max_magnitude())
        all_ok = all_ok and ok
        checks.append({"id": f"adjoint[{idx}]", "status": "pass" if ok else "fail"})

    payload = {
        "mode": mode,
        "kind": kind,
        "seed": args.seed,
        "checks": checks,
        "max_discrepancy": worst,
    }
    _emit(payload, args.out)
    return 0 if all_ok else 1


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stalg",
        description="Exact spacetime-algebra toolkit: verification suites, "
        "plane-wave solutions, spinor decompositions and a matrix oracle.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=(EXACT, FLOAT), default=EXACT)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--out", default=None, help="write JSON here instead of stdout")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    p.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "planewave", parents=[common], help="construct a plane-wave solution"
    )
    p.add_argument("--m", required=True, help="mass (rational in exact mode)")
    p.add_argument("--k", required=True, help="momentum along x1")
    p.add_argument("--omega-sign", choices=("+", "-"), default="+")
    for name in "abcd":
        p.add_argument(f"--{name}", default="0", help=f"amplitude parameter {name} (re or re,im)")
    p.add_argument("--check", choices=tuple(_CHECKS), default="joyce")
    p.add_argument("--rest", action="store_true", help="emit the k = 0 basis instead")
    p.set_defaults(func=cmd_planewave)

    p = sub.add_parser("decompose", parents=[common], help="split a field JSON file")
    p.add_argument("input", help="field JSON path, or - for stdin")
    p.add_argument("--m", required=True, help="mass for the residual table")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser(
        "quartet", parents=[common], help="four Hestenes solutions from a Dirac one"
    )
    p.add_argument("input", help="Dirac-solution field JSON path, or - for stdin")
    p.add_argument("--m", required=True, help="mass of the seed solution")
    p.set_defaults(func=cmd_quartet)

    p = sub.add_parser(
        "oracle", parents=[common], help="compare against the matrix representation"
    )
    p.add_argument("input", help="multivector or field JSON path, or - for stdin")
    p.add_argument("--trials", type=int, default=8, help="random product partners per value")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON input: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ModeMismatchError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
