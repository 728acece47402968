"""Command-line front end.

    stefan-latent solve  --bc neumann --q0 0.1
    stefan-latent table 2
    stefan-latent sweep --bc robin --u-inf 0.5 --h0 1 --param Bi --values 1 10 50 100
    stefan-latent verify --all-tables

Exit codes: 0 ok, 2 invalid input, 3 solver non-convergence,
4 verification or monotonicity failure.
"""

import argparse
import csv
import io
import sys
from dataclasses import replace
from pathlib import Path

from . import equivalence, tables
from .errors import StefanError, ValidationError
from .model import BoundaryCondition, dimensionless, parse_config_text, spec_from_mapping
from .solution import eval_front, eval_u, latent_heat, solve
from .solver import solve_xi
from .verify import GATES, pde_residual

EXIT_OK, EXIT_INVALID, EXIT_SOLVER, EXIT_VERIFY = 0, 2, 3, 4

# flag dest -> config key
_SPEC_FLAGS = {
    "beta": "beta", "delta": "delta", "gamma": "gamma", "a": "a", "k": "k",
    "bc": "bc", "u0": "u0", "q0": "q0", "h0": "h0", "u_inf": "u_inf",
    "lam": "lambda", "tol": "tol", "max_iter": "max_iter",
}


def num(x):
    """12 significant digits, scientific notation."""
    return f"{x:.11e}"


def _write_csv(rows, header, out, meta=None):
    buf = io.StringIO()
    if meta:
        buf.write(f"# {meta}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    out.write(buf.getvalue())


def _spec_parent():
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("problem data (flags override --config)")
    g.add_argument("--config", type=Path, help="flat 'key = value' file")
    g.add_argument("--beta", type=float)
    g.add_argument("--delta", type=float)
    g.add_argument("--gamma", type=float)
    g.add_argument("--a", type=float, help="square root of the diffusivity")
    g.add_argument("--k", type=float, help="conductivity")
    g.add_argument("--bc", choices=("dirichlet", "neumann", "robin", "general"))
    g.add_argument("--u0", type=float)
    g.add_argument("--q0", type=float)
    g.add_argument("--h0", type=float)
    g.add_argument("--u-inf", dest="u_inf", type=float)
    g.add_argument("--lambda", dest="lam", type=float)
    g.add_argument("--tol", type=float)
    g.add_argument("--max-iter", dest="max_iter", type=int)
    return p


def _output_parent():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("-o", "--output", type=Path, help="write CSV here instead of stdout")
    return p


def _config_values(args):
    values = {}
    if args.config is not None:
        try:
            text = args.config.read_text()
        except OSError as exc:
            raise ValidationError(f"cannot read config: {exc}") from None
        values.update(parse_config_text(text))
    for dest, key in _SPEC_FLAGS.items():
        value = getattr(args, dest, None)
        if value is not None:
            values[key] = value
    return values


def load_run(args):
    """(spec, tol, max_iter) from --config merged with flags."""
    return spec_from_mapping(_config_values(args))


def _open_out(args):
    path = getattr(args, "output", None)
    if path is None:
        return sys.stdout, False
    return open(path, "w", newline=""), True


def _emit(args, rows, header, meta=None):
    out, close = _open_out(args)
    try:
        _write_csv(rows, header, out, meta)
    finally:
        if close:
            out.close()


# commands ---------------------------------------------------------------------

def cmd_solve(args):
    spec, tol, max_iter = load_run(args)
    sol, root = solve(spec, tol, max_iter)
    law = spec.law
    lines = [
        f"bc         = {spec.bc.kind}",
        f"beta       = {law.beta:g}",
        f"delta      = {law.delta:g}",
        f"alpha      = {spec.alpha:g}",
        f"xi         = {root.xi:.4f}  ({num(root.xi)})",
        f"C1         = {num(sol.c1)}",
        f"C2         = {num(sol.c2)}",
        f"iterations = {root.iterations} ({root.method})",
        f"|F(xi)|    = {root.residual:.3e}",
    ]
    groups = dimensionless(spec)
    for name in ("Q", "Ste", "Bi"):
        value = getattr(groups, name)
        if value is not None:
            lines.append(f"{name:<10} = {value:.6g}")
    print("\n".join(lines))
    return EXIT_OK


def _times(args):
    if any(t <= 0 for t in args.t):
        raise ValidationError("times must be > 0")
    return args.t


def cmd_eval(args):
    spec, tol, max_iter = load_run(args)
    sol, _ = solve(spec, tol, max_iter)
    a = spec.material.a
    rows = []
    for t in _times(args):
        s, _ = eval_front(sol, t)
        xs = args.x if args.x else [s * i / (args.nx - 1) for i in range(args.nx)]
        for x in xs:
            u = eval_u(sol, x, t, extend=args.extend)
            rows.append([num(t), num(x), num(x / (2 * a * t**0.5)), num(u)])
    _emit(args, rows, ["t", "x", "eta", "u"])
    return EXIT_OK


def cmd_front(args):
    spec, tol, max_iter = load_run(args)
    sol, _ = solve(spec, tol, max_iter)
    rows = [[num(t), *map(num, eval_front(sol, t))] for t in _times(args)]
    _emit(args, rows, ["t", "s", "sdot"])
    return EXIT_OK


def cmd_latent(args):
    spec, tol, max_iter = load_run(args)
    sol, _ = solve(spec, tol, max_iter)
    rows = []
    p = regime = None
    for t in _times(args):
        value, p, regime = latent_heat(sol, t)
        rows.append([num(t), num(value)])
    _emit(args, rows, ["t", "L"], meta=f"p={p:g} regime={regime}")
    return EXIT_OK


def _with_group(spec, param, value):
    m, law, bc = spec.material, spec.law, spec.bc
    if param == "Q":
        if bc.kind != "neumann":
            raise ValidationError("a Q sweep needs --bc neumann")
        return replace(spec, bc=BoundaryCondition.neumann(value * m.gamma * m.a ** law.power))
    if param == "Ste":
        u = value * m.gamma * m.a ** (law.power + 1) / m.k
        if bc.kind == "dirichlet":
            return replace(spec, bc=BoundaryCondition.dirichlet(u))
        if bc.kind in ("robin", "general"):
            return replace(spec, bc=replace(bc, u_inf=u))
        raise ValidationError("a Ste sweep needs a dirichlet, robin or general condition")
    if bc.kind not in ("robin", "general"):
        raise ValidationError("a Bi sweep needs a robin or general condition")
    return replace(spec, bc=replace(bc, h0=value * m.k / m.a))


def cmd_sweep(args):
    spec, tol, max_iter = load_run(args)
    values = args.values
    if any(v <= 0 for v in values) or any(x >= y for x, y in zip(values, values[1:])):
        raise ValidationError("sweep values must be positive and strictly ascending")
    xis = [solve_xi(_with_group(spec, args.param, v), tol, max_iter).xi for v in values]
    _emit(args, [[num(v), num(xi)] for v, xi in zip(values, xis)], [args.param, "xi"])
    if any(x >= y for x, y in zip(xis, xis[1:])):
        print(f"error: xi is not strictly increasing in {args.param}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def table1_rows():
    rows = []
    for delta, beta, q, spec in tables.table1_specs():
        xi = solve_xi(spec).xi
        printed = tables.TABLE1[(delta, beta)][tables.Q_VALUES.index(q)]
        flag = tables.SUSPECT_FLAG if (delta, beta, q) in tables.SUSPECT_TABLE1 else ""
        rows.append([f"{delta:g}", f"{beta:g}", f"{q:g}", f"{xi:.4f}", f"{printed:.4f}", flag])
    return rows


def table2_rows():
    rows = []
    for delta, beta in tables.ROWS:
        cells = [s for d, b, _, s in tables.table2_specs() if (d, b) == (delta, beta)]
        rows.append([f"{delta:g}", f"{beta:g}", *(f"{solve_xi(s).xi:.4f}" for s in cells)])
    return rows


def cmd_table(args):
    if args.which == 1:
        _emit(args, table1_rows(), ["delta", "beta", "Q", "xi_N", "reference_xi_N", "flag"])
    else:
        header = ["delta", "beta", *(f"Bi={bi:g}" for bi in tables.BI_VALUES), "xi_D"]
        _emit(args, table2_rows(), header)
    return EXIT_OK


def _render_report(report):
    lines = []
    for name, gate in GATES.items():
        value = getattr(report, name)
        status = "ok" if value <= gate else "FAIL"
        lines.append(f"{name:<20} = {value:.3e}  (gate {gate:g}) {status}")
    return lines


def _verify_one(spec, args, tol=1e-10, max_iter=100):
    sol, _ = solve(spec, tol, max_iter)
    if args.corrupt_c1 is not None:
        sol = replace(sol, c1=sol.c1 * args.corrupt_c1)
    return pde_residual(sol, nx=args.nx, nt=args.nt, t_range=(args.t0, args.t1))


def cmd_verify(args):
    if args.all_tables:
        failed = 0
        for spec in tables.all_specs():
            report = _verify_one(spec, args)
            bad = report.failures()
            groups = dimensionless(spec)
            named = " ".join(f"{n}={getattr(groups, n):g}" for n in ("Q", "Ste", "Bi")
                             if getattr(groups, n) is not None)
            if spec.bc.kind == "dirichlet":
                named = f"u0={spec.bc.u0:g}"
            label = f"{spec.bc.kind:<9} beta={spec.law.beta:g} delta={spec.law.delta:g} {named}"
            print(f"{'FAIL' if bad else 'ok  '} {label} {' '.join(bad)}")
            failed += bool(bad)
        return EXIT_VERIFY if failed else EXIT_OK
    spec, tol, max_iter = load_run(args)
    report = _verify_one(spec, args, tol, max_iter)
    print("\n".join(_render_report(report)))
    bad = report.failures()
    if bad:
        print(f"error: verification failed: {', '.join(bad)}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_equiv(args):
    values = _config_values(args)
    spec, tol, max_iter = spec_from_mapping(values)
    if args.direction == "to-dirichlet":
        if spec.bc.kind == "dirichlet":
            raise ValidationError("to-dirichlet needs a neumann, robin or general source")
        rec = equivalence.to_dirichlet(spec, tol, max_iter)
        print(f"u0         = {num(rec.target_spec.bc.u0)}")
    else:
        if spec.bc.kind != "dirichlet":
            raise ValidationError("from-dirichlet needs a dirichlet source")
        if values.get("u_inf") is None:
            raise ValidationError("from-dirichlet needs --u-inf")
        lam = float(values.get("lambda", 1.0))
        rec = equivalence.from_dirichlet(spec, lam, float(values["u_inf"]), tol, max_iter)
        print(f"h0         = {num(rec.target_spec.bc.h0)}")
    print(f"xi_source  = {num(rec.xi_source)}")
    print(f"xi_target  = {num(rec.xi_target)}")
    print(f"gap        = {rec.max_xi_gap:.3e}")
    if rec.max_xi_gap > equivalence.EQUIVALENCE_TOL:
        print("error: equivalent problems have different fronts", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def build_parser():
    spec_p, out_p = _spec_parent(), _output_parent()
    parser = argparse.ArgumentParser(
        prog="stefan-latent",
        description="Similarity solutions of one-phase Stefan problems with latent heat "
                    "gamma s^beta sdot^delta.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[spec_p], help="solve for xi and print a summary")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("eval", parents=[spec_p, out_p], help="temperature on a grid (CSV)")
    p.add_argument("--t", type=float, nargs="+", default=[1.0])
    p.add_argument("--x", type=float, nargs="+", help="explicit x values")
    p.add_argument("--nx", type=int, default=11, help="points on [0, s(t)] when --x is absent")
    p.add_argument("--extend", action="store_true", help="u = 0 beyond the front instead of an error")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("front", parents=[spec_p, out_p], help="front position and speed (CSV)")
    p.add_argument("--t", type=float, nargs="+", default=[1.0])
    p.set_defaults(func=cmd_front)

    p = sub.add_parser("latent", parents=[spec_p, out_p], help="latent heat along the front (CSV)")
    p.add_argument("--t", type=float, nargs="+", default=[1.0])
    p.set_defaults(func=cmd_latent)

    p = sub.add_parser("sweep", parents=[spec_p, out_p], help="xi against Q, Ste or Bi (CSV)")
    p.add_argument("--param", choices=("Q", "Ste", "Bi"), required=True)
    p.add_argument("--values", type=float, nargs="+", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("table", parents=[out_p], help="recompute the reference tables (CSV)")
    p.add_argument("which", type=int, choices=(1, 2))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[spec_p], help="finite-difference residual gates")
    p.add_argument("--all-tables", action="store_true", help="check every tabulated configuration")
    p.add_argument("--nx", type=int, default=32)
    p.add_argument("--nt", type=int, default=8)
    p.add_argument("--t0", type=float, default=0.5)
    p.add_argument("--t1", type=float, default=2.0)
    p.add_argument("--corrupt-c1", type=float, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("equiv", parents=[spec_p], help="map to or from a Dirichlet condition")
    p.add_argument("--direction", choices=("to-dirichlet", "from-dirichlet"), required=True)
    p.set_defaults(func=cmd_equiv)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StefanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
