"""Command-line front end.

Every subcommand renders one table (CSV) or one document (JSON) to stdout,
and to ``--out`` when given.  Identical argv and seed produce identical
bytes.  Exit codes: 0 success, 1 a verification check failed, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import bvp as bvp_mod
from .geometry import monomial_sphere_integral, solid_angle, sphere_quadrature
from .harmonic import (
    addition_theorem_eval,
    count_harmonic,
    count_homogeneous,
    harmonic_basis_raw,
    legendre_harmonic,
    orthonormalize,
)
from .legendre import (
    LegendreTable,
    funk_hecke_coeff,
    legendre_coeffs,
    legendre_eval,
)
from .orthopoly import Weight, gram_schmidt, inner_product, recurrence_coeffs, recurrence_residual
from .polyalg import ExactPolynomial

__all__ = ["run", "main"]


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _csv(header, rows, meta=None) -> str:
    lines = []
    if meta:
        lines.append("# " + " ".join(f"{k}={v}" for k, v in meta.items()))
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _emit(args, text: str) -> None:
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)


def _render(args, doc, header, rows, meta=None) -> None:
    if args.format == "json":
        text = json.dumps(_jsonable(doc), indent=2) + "\n"
    else:
        text = _csv(header, rows, meta)
    _emit(args, text)


def _cmd_count(args) -> int:
    K = count_homogeneous(args.p, args.n)
    N = count_harmonic(args.p, args.n)
    doc = {"p": args.p, "n": args.n, "K": K, "N": N}
    _render(args, doc, ["p", "n", "K", "N"], [[args.p, args.n, K, N]])
    return 0


def _cmd_legendre(args) -> int:
    p, n = args.p, args.n
    if args.eval is not None:
        value = float(legendre_eval(p, n, args.eval))
        doc = {"p": p, "n": n, "t": args.eval, "value": value}
        _render(args, doc, ["p", "n", "t", "value"], [[p, n, args.eval, value]])
        return 0
    if args.table:
        table = LegendreTable(p, n)
        rows = [
            [k, k_deg, c]
            for k in range(n + 1)
            for k_deg, c in enumerate(table[k].coeffs)
        ]
        doc = {
            "p": p,
            "n_max": n,
            "coefficients": [list(table[k].coeffs) for k in range(n + 1)],
        }
        _render(args, doc, ["n", "k", "coefficient"], rows, {"p": p})
        return 0
    poly = legendre_coeffs(p, n)
    rows = [[k, c] for k, c in enumerate(poly.coeffs)]
    doc = {"p": p, "n": n, "coefficients": list(poly.coeffs)}
    _render(args, doc, ["k", "coefficient"], rows, {"p": p, "n": n})
    return 0


def _cmd_basis(args) -> int:
    if args.raw:
        members = harmonic_basis_raw(args.p, args.n)
    else:
        members = orthonormalize(args.p, args.n).members
    rows = [
        [i, " ".join(str(e) for e in alpha), c]
        for i, m in enumerate(members)
        for alpha, c in m.terms.items()
    ]
    doc = {
        "p": args.p,
        "n": args.n,
        "kind": "raw" if args.raw else "orthonormal",
        "members": [
            {"terms": [{"alpha": list(a), "coeff": c} for a, c in m.terms.items()]}
            for m in members
        ],
    }
    _render(
        args,
        doc,
        ["member", "exponents", "coefficient"],
        rows,
        {"p": args.p, "n": args.n, "count": len(members)},
    )
    return 0


def _cmd_quadrature(args) -> int:
    rule = sphere_quadrature(args.p, args.degree)
    if args.format == "json":
        _emit(args, rule.to_json() + "\n")
    else:
        _emit(args, rule.to_csv())
    return 0


ZONAL_FUNCTIONS = {
    "one": lambda t: np.ones_like(t),
    "t": lambda t: t,
    "t2": lambda t: t**2,
    "t3": lambda t: t**3,
    "abs": np.abs,
    "exp": np.exp,
}


def _cmd_funk_hecke(args) -> int:
    if args.f not in ZONAL_FUNCTIONS:
        raise ValueError(
            f"unknown kernel {args.f!r}; choose from {sorted(ZONAL_FUNCTIONS)}"
        )
    m = args.degree if args.degree is not None else 128
    lam = funk_hecke_coeff(args.p, args.n, ZONAL_FUNCTIONS[args.f], m=m)
    doc = {"p": args.p, "n": args.n, "f": args.f, "lambda": lam}
    _render(
        args, doc, ["p", "n", "f", "lambda"], [[args.p, args.n, args.f, lam]]
    )
    return 0


def _boundary_from_description(p: int, desc: dict) -> bvp_mod.BoundaryData:
    kind = desc.get("type")
    if kind == "polynomial":
        poly = ExactPolynomial.from_json_dict({"nvars": p, "terms": desc["terms"]})
        return bvp_mod.BoundaryData.from_polynomial(poly)
    if kind == "builtin":
        return bvp_mod.builtin_boundary(p, desc["name"])
    raise ValueError("boundary type must be 'polynomial' or 'builtin'")


def _cmd_solve(args) -> int:
    with open(args.problem) as fh:
        problem = json.load(fh)
    p = int(problem["p"])
    n_max = int(problem["n_max"])
    f = _boundary_from_description(p, problem["boundary"])
    quad_degree = problem.get("quad_degree")
    if args.degree is not None:
        quad_degree = args.degree
    if quad_degree is None:
        quad_degree = 64
    sol = bvp_mod.project_boundary(f, n_max)
    rows = []
    for point in problem["eval_points"]:
        x = np.asarray(point, dtype=float)
        a = bvp_mod.series_eval(sol, x)
        b = bvp_mod.poisson_eval(f, x, quad_degree=quad_degree)
        rows.append([*(float(v) for v in x), a, b, abs(a - b)])
    header = [f"x{i + 1}" for i in range(p)] + [
        "series_value",
        "poisson_value",
        "abs_diff",
    ]
    doc = {
        "p": p,
        "n_max": n_max,
        "quad_degree": quad_degree,
        "header": header,
        "rows": rows,
    }
    _render(args, doc, header, rows, {"p": p, "n_max": n_max, "quad_degree": quad_degree})
    return 0


def _range_str(values) -> str:
    values = sorted(set(values))
    if not values:
        return "-"
    if len(values) == 1:
        return str(values[0])
    return f"{values[0]}..{values[-1]}"


def _check_orthogonality(args):
    ps = [args.p] if args.p else [2, 3, 4, 5]
    n_top = args.n_max if args.n_max is not None else 8
    tol = args.tol if args.tol is not None else 1e-10
    worst = 0.0
    for p in ps:
        w = Weight(Fraction(p - 3, 2), Fraction(p - 3, 2))
        polys = [legendre_coeffs(p, n) for n in range(n_top + 1)]
        for i in range(n_top + 1):
            for j in range(i):
                worst = max(worst, abs(inner_product(polys[i], polys[j], w)))
    return ps, range(n_top + 1), worst, tol


def _check_addition(args):
    ps = [args.p] if args.p else [3, 4, 5]
    n_top = args.n if args.n is not None else 4
    tol = args.tol if args.tol is not None else 1e-8
    samples = args.samples if args.samples is not None else 100
    rng = np.random.default_rng(args.seed)
    worst = 0.0
    for p in ps:
        for n in range(n_top + 1):
            basis = orthonormalize(p, n)
            for _ in range(samples):
                xi = rng.normal(size=p)
                xi /= np.linalg.norm(xi)
                eta = rng.normal(size=p)
                eta /= np.linalg.norm(eta)
                lhs = addition_theorem_eval(basis, xi, eta)
                rhs = legendre_eval(p, n, float(xi @ eta))
                worst = max(worst, abs(lhs - rhs))
    return ps, range(n_top + 1), worst, tol


def _check_generating_function(args):
    ps = [args.p] if args.p else [3, 4, 5]
    tol = args.tol if args.tol is not None else 1e-8
    t_grid = np.linspace(-1.0, 1.0, 11)
    worst = 0.0
    for p in ps:
        worst = max(
            worst,
            bvp_mod.generating_function_consistency(p, t_grid, (0.1, 0.3, 0.5), 60),
        )
    return ps, range(61), worst, tol


def _check_funk_hecke(args):
    ps = [args.p] if args.p else [3, 4, 5]
    n_top = args.n if args.n is not None else 4
    tol = args.tol if args.tol is not None else 1e-7
    rng = np.random.default_rng(args.seed)
    worst = 0.0
    for p in ps:
        for n in range(n_top + 1):
            basis = orthonormalize(p, n)
            Y = basis.members[0]
            eta = rng.normal(size=p)
            eta /= np.linalg.norm(eta)
            y_eta = float(Y.evaluate(tuple(eta)))
            rule = sphere_quadrature(p, 2 * n_top + 8)
            ts = rule.nodes @ eta
            y_vals = Y.evaluate_array(rule.nodes)
            for name in ("one", "t", "t2", "t3"):
                f = ZONAL_FUNCTIONS[name]
                sphere_side = float(np.sum(rule.weights * f(ts) * y_vals))
                lam = funk_hecke_coeff(p, n, f)
                worst = max(worst, abs(sphere_side - lam * y_eta))
    return ps, range(n_top + 1), worst, tol


def _check_quadrature(args):
    ps = [args.p] if args.p else [2, 3, 4, 5, 6]
    tol = args.tol if args.tol is not None else 1e-12
    worst = 0.0
    for p in ps:
        for degree in (4, 9):
            rule = sphere_quadrature(p, degree)
            omega = solid_angle(p)
            worst = max(worst, abs(float(np.sum(rule.weights)) - omega) / omega)
            alpha = (2, 4) + (0,) * (p - 2)
            exact = float(monomial_sphere_integral(alpha))
            approx = float(np.sum(rule.weights * (rule.nodes ** np.array(alpha)).prod(axis=1)))
            if degree >= sum(alpha):
                worst = max(worst, abs(approx - exact) / abs(exact))
    return ps, range(1), worst, tol


def _check_recurrence(args):
    tol = args.tol if args.tol is not None else 1e-9
    n_top = args.n_max if args.n_max is not None else 8
    worst = 0.0
    for a, b in ((0, 0), (Fraction(-1, 2), Fraction(-1, 2)), (Fraction(1, 2), Fraction(1, 2)), (2, 2), (1, 0)):
        w = Weight(Fraction(a), Fraction(b))
        phis = gram_schmidt(w, n_top)
        rc = recurrence_coeffs(phis, w)
        worst = max(worst, recurrence_residual(phis, rc, w))
    return [1], range(n_top + 1), worst, tol


def _check_harmonicity(args):
    ps = [args.p] if args.p else [2, 3, 4, 5]
    n_top = args.n_max if args.n_max is not None else 6
    tol = args.tol if args.tol is not None else 1e-12
    worst = 0.0
    for p in ps:
        for n in range(n_top + 1):
            for member in harmonic_basis_raw(p, n):
                lap = member.laplacian()
                if lap.terms:
                    worst = max(worst, float(max(abs(c) for c in lap.terms.values())))
            lap = legendre_harmonic(p, n).laplacian()
            if lap.terms:
                worst = max(worst, float(max(abs(c) for c in lap.terms.values())))
    return ps, range(n_top + 1), worst, tol


def _check_bvp(args):
    ps = [args.p] if args.p else [3]
    tol = args.tol if args.tol is not None else 1e-6
    rng = np.random.default_rng(args.seed)
    worst = 0.0
    for p in ps:
        data = [
            bvp_mod.builtin_boundary(p, "coordinate"),
            bvp_mod.BoundaryData.from_polynomial(
                ExactPolynomial.monomial(p, (1, 1) + (0,) * (p - 2))
                + ExactPolynomial.variable(p, p - 1)
            ),
        ]
        for f in data:
            sol = bvp_mod.project_boundary(f, n_max=4)
            for _ in range(10):
                x = rng.normal(size=p)
                x *= 0.8 * rng.random() / np.linalg.norm(x)
                a = bvp_mod.series_eval(sol, x)
                b = bvp_mod.poisson_eval(f, x, quad_degree=64)
                worst = max(worst, abs(a - b))
        for _ in range(5):
            xb = rng.normal(size=p)
            xb /= np.linalg.norm(xb)
            x0 = rng.normal(size=p)
            x0 *= 0.6 * rng.random() / np.linalg.norm(x0)
            worst = max(worst, abs(bvp_mod.green_function(p, xb, x0)))
    return ps, range(5), worst, tol


VERIFY_CHECKS = {
    "orthogonality": _check_orthogonality,
    "addition": _check_addition,
    "generating-function": _check_generating_function,
    "funk-hecke": _check_funk_hecke,
    "quadrature": _check_quadrature,
    "recurrence": _check_recurrence,
    "harmonicity": _check_harmonicity,
    "bvp": _check_bvp,
}


def _cmd_verify(args) -> int:
    for name in args.checks:
        if name not in VERIFY_CHECKS:
            sys.stderr.write(
                f"unknown check {name!r}; available: {', '.join(sorted(VERIFY_CHECKS))}\n"
            )
            return 2
    reports = []
    for name in args.checks:
        ps, ns, worst, tol = VERIFY_CHECKS[name](args)
        reports.append(
            {
                "check": name,
                "p-range": _range_str(ps),
                "n-range": _range_str(ns),
                "max_residual": worst,
                "tolerance": tol,
                "pass": bool(worst <= tol),
            }
        )
    header = ["check", "p-range", "n-range", "max_residual", "tolerance", "pass"]
    rows = [[r[k] for k in header] for r in reports]
    _render(args, reports, header, rows)
    return 0 if all(r["pass"] for r in reports) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperharm",
        description="Spherical harmonics, ultraspherical Legendre polynomials, "
        "and the Dirichlet problem on the unit ball in p dimensions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, *, p=False, n=False, n_max=False, degree=False):
        if p:
            sp.add_argument("--p", type=int, required=True, help="ambient dimension")
        if n:
            sp.add_argument("--n", type=int, required=True, help="polynomial degree")
        if n_max:
            sp.add_argument("--n-max", type=int, dest="n_max", help="maximum degree")
        if degree:
            sp.add_argument("--degree", type=int, help="quadrature degree")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", help="also write the output to this file")

    sp = sub.add_parser("count", help="monomial and harmonic dimension counts")
    common(sp, p=True, n=True)
    sp.set_defaults(func=_cmd_count)

    sp = sub.add_parser("legendre", help="Legendre coefficient tables and values")
    common(sp, p=True, n=True)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--coeffs", action="store_true", help="coefficient row (default)")
    mode.add_argument("--eval", type=float, help="evaluate at this argument")
    mode.add_argument("--table", action="store_true", help="all rows up to --n")
    sp.set_defaults(func=_cmd_legendre)

    sp = sub.add_parser("basis", help="degree-n spherical harmonic basis")
    common(sp, p=True, n=True)
    sp.add_argument("--raw", action="store_true", help="exact pre-orthogonalization basis")
    sp.set_defaults(func=_cmd_basis)

    sp = sub.add_parser("quadrature", help="product quadrature rule for the sphere")
    common(sp, p=True)
    sp.add_argument("--degree", type=int, required=True, help="polynomial exactness target")
    sp.set_defaults(func=_cmd_quadrature)

    sp = sub.add_parser("funk-hecke", help="zonal kernel eigenvalue for degree n")
    common(sp, p=True, n=True, degree=True)
    sp.add_argument("--f", required=True, help=f"kernel name: {', '.join(sorted(ZONAL_FUNCTIONS))}")
    sp.set_defaults(func=_cmd_funk_hecke)

    sp = sub.add_parser("solve", help="Dirichlet problem from a JSON description")
    sp.add_argument("--problem", required=True, help="path to the problem JSON file")
    sp.add_argument("--degree", type=int, help="kernel quadrature degree override")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--out", help="also write the output to this file")
    sp.set_defaults(func=_cmd_solve)

    sp = sub.add_parser("verify", help="run named identity checks")
    sp.add_argument("checks", nargs="*", help=f"names: {', '.join(sorted(VERIFY_CHECKS))}")
    sp.add_argument("--p", type=int, help="restrict to one dimension")
    sp.add_argument("--n", type=int, help="maximum degree for sampled checks")
    sp.add_argument("--n-max", type=int, dest="n_max", help="maximum degree for swept checks")
    sp.add_argument("--samples", type=int, help="random sample count")
    sp.add_argument("--seed", type=int, default=0, help="sampling seed")
    sp.add_argument("--tol", type=float, help="tolerance override")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--out", help="also write the output to this file")
    sp.set_defaults(func=_cmd_verify)

    return parser


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
