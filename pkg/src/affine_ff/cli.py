"""Command-line front end.

    affine-ff field-info --p 3 --n 2
    affine-ff kernel --p 2 --n 4 --family S --k 2 --l 1
    affine-ff solve --p 3 --n 2 --family T --k 2 --l 1 --a 1,0 --verify

Exit status: 0 on success (an unsolvable equation is still a success),
1 on bad input, 2 when --verify finds a disagreement with the oracle.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from .errors import FieldError
from .ffcore import FieldSpec, format_digits, make_field, parse_digits
from .kernel import kernel_case_for, kernel_for
from .linearized import EquationParams, family_map
from .solver import solve

EXHAUSTIVE_VERIFY_LIMIT = 729


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="affine-ff", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def field_args(sp):
        sp.add_argument("--p", type=int, required=True, help="characteristic (prime)")
        sp.add_argument("--n", type=int, required=True, help="extension degree")
        sp.add_argument("--modulus", help="monic irreducible, base-p digits low degree first, e.g. 1,1,0,1")
        sp.add_argument("--verify", action="store_true", help="cross-check against the linear-algebra oracle")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    def eq_args(sp):
        sp.add_argument("--family", choices=("T", "S"), required=True)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--l", type=int, required=True)

    field_args(sub.add_parser("field-info", help="show the field construction"))
    kp = sub.add_parser("kernel", help="closed-form kernel of T_l^k or S_l^k")
    field_args(kp)
    eq_args(kp)
    sp = sub.add_parser("solve", help="solve T_l^k(X) = a or S_l^k(X) = a")
    field_args(sp)
    eq_args(sp)
    sp.add_argument("--a", required=True, help="right-hand side, base-p digits low degree first")
    return parser


def _field(args) -> FieldSpec:
    modulus = parse_digits(args.modulus, args.p) if args.modulus else None
    return make_field(args.p, args.n, modulus)


def _field_report(spec: FieldSpec) -> dict:
    return {"p": spec.p, "n": spec.n, "modulus": format_digits(spec.modulus), "size": spec.size}


def _empty_report(spec: FieldSpec) -> dict:
    return {
        "field": _field_report(spec),
        "params": None,
        "branch": None,
        "solvable": None,
        "x0": None,
        "kernel_basis": None,
        "kernel_dim": None,
        "verified": None,
    }


def _verify_kernel(fn, spec, kernel) -> bool:
    return oracle.kernel(fn, spec) == kernel


def _verify_solution(fn, spec, a, result) -> bool:
    if oracle.kernel(fn, spec) != result.kernel:
        return False
    if (oracle.preimage(fn, spec, a) is not None) != result.solvable:
        return False
    if result.solvable and fn(result.x0) != a:
        return False
    if spec.size <= EXHAUSTIVE_VERIFY_LIMIT:
        return oracle.exhaustive_solve(fn, spec, a) == set(result.elements())
    return True


def run(args) -> tuple[int, dict]:
    spec = _field(args)
    report = _empty_report(spec)
    if args.command == "field-info":
        if args.verify:
            report["verified"] = True
        return 0, report

    params = EquationParams(spec.p, spec.n, args.k, args.l)
    fn = family_map(args.family, args.l, args.k)
    case = kernel_case_for(args.family, params)
    report["params"] = dict(params.as_dict(), family=args.family)
    report["branch"] = case.key
    report["branch_description"] = case.description

    if args.command == "kernel":
        kernel = kernel_for(args.family, params, spec)
        verified = _verify_kernel(fn, spec, kernel) if args.verify else None
    else:
        a = spec.parse(args.a)
        result = solve(params, spec, args.family, a)
        kernel = result.kernel
        report["a"] = str(a)
        report["condition"] = result.condition
        report["solvable"] = result.solvable
        report["x0"] = str(result.x0) if result.solvable else None
        report["solution_count"] = result.size
        verified = _verify_solution(fn, spec, a, result) if args.verify else None

    report["kernel_basis"] = [str(b) for b in kernel.basis]
    report["kernel_dim"] = kernel.dim
    report["verified"] = verified
    return (2 if verified is False else 0), report


def format_text(command: str, report: dict) -> str:
    f = report["field"]
    lines = [f"field: GF({f['p']}^{f['n']}), modulus {f['modulus']}, size {f['size']}"]
    if command != "field-info":
        pr = report["params"]
        lines.append(f"family: {pr['family']}")
        lines.append("params: " + " ".join(f"{key}={pr[key]}" for key in ("p", "n", "k", "l", "d", "e", "L")))
        lines.append(f"branch: {report['branch']} ({report['branch_description']})")
    if command == "solve":
        lines.append(f"a: {report['a']}")
        lines.append(f"condition: {report['condition']}")
        lines.append("verdict: " + ("Solvable" if report["solvable"] else "Unsolvable"))
        if report["solvable"]:
            lines.append(f"x0: {report['x0']}")
    if command != "field-info":
        lines.append(f"kernel_dim: {report['kernel_dim']}")
        basis = report["kernel_basis"]
        lines.append("kernel_basis: " + ("; ".join(basis) if basis else "(empty)"))
    if command == "solve":
        lines.append(f"solution_count: {report['solution_count']}")
    if report["verified"] is not None:
        lines.append("verify: " + ("MATCH" if report["verified"] else "MISMATCH"))
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        status, report = run(args)
    except (UsageError, FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(format_text(args.command, report))
    return status


if __name__ == "__main__":
    sys.exit(main())
