"""Batch command-line frontend.

Subcommand tree: linalg, solve, leontief, lp, finance, calc, econ.  Global
flags --format {table,json,csv}, --output PATH and --trace may appear before
or after the subcommand.  Exit codes: 0 success, 1 input/parse error,
2 infeasible/unbounded/no-solution outcomes, 3 numerical failure.

Output is deterministic and locale-independent: numbers always use '.' as
the decimal separator, and identical argv plus input files produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import calculus as ca
from . import econ, finmath, leontief, linalg, linsolve, simplex

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NO_SOLUTION = 2
EXIT_NUMERICAL = 3


class OutcomeExit(Exception):
    """A well-formed run whose mathematical outcome maps to exit code 2."""

    def __init__(self, message: str, payload: Optional[dict] = None):
        super().__init__(message)
        self.payload = payload


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _num(v: float) -> str:
    return f"{v:.10g}"


def _render_table(data: dict, indent: str = "") -> str:
    lines = []
    width = max((len(k) for k in data), default=0)
    for key, value in data.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_render_table(value, indent + "  "))
        elif isinstance(value, (list, tuple)):
            rendered = ", ".join(
                _num(v) if isinstance(v, float) else str(v) for v in value
            )
            lines.append(f"{indent}{key:<{width}}  [{rendered}]")
        elif isinstance(value, float):
            lines.append(f"{indent}{key:<{width}}  {_num(value)}")
        else:
            lines.append(f"{indent}{key:<{width}}  {value}")
    return "\n".join(lines)


def render(payload, fmt: str) -> str:
    """Serialize a result payload: json at full precision, csv for
    schedules, aligned key/value text otherwise."""
    if isinstance(payload, finmath.Schedule):
        if fmt == "csv":
            return payload.to_csv()
        if fmt == "json":
            return payload.to_json() + "\n"
        meta = _render_table({k: v for k, v in payload.meta.items()})
        return meta + "\n" + payload.to_csv()
    if fmt == "csv":
        raise ValueError("csv output is only defined for schedules")
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if isinstance(payload, dict):
        return _render_table(payload) + "\n"
    return str(payload) + "\n"


def _emit(text: str, output: Optional[str]):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# Input helpers
# ---------------------------------------------------------------------------

def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _parse_window(spec: str) -> tuple[float, float]:
    lo, _, hi = spec.partition(":")
    if not _:
        raise ValueError(f"window must look like LO:HI, got {spec!r}")
    return float(lo), float(hi)


def _parse_coeffs(spec: str) -> tuple[float, ...]:
    return tuple(float(v) for v in spec.split(","))


# ---------------------------------------------------------------------------
# Subcommand handlers; each returns a payload for render()
# ---------------------------------------------------------------------------

def _cmd_linalg(args):
    if args.linalg_op == "det":
        return {"determinant": linsolve.determinant(linalg.read_matrix(args.matrix))}
    if args.linalg_op == "inverse":
        inv = linsolve.inverse(linalg.read_matrix(args.matrix))
        return {"inverse": [list(row) for row in inv.to_array()]}
    if args.linalg_op == "mul":
        prod = linalg.mat_mul(linalg.read_matrix(args.matrix), linalg.read_matrix(args.other))
        return {"product": [list(row) for row in prod.to_array()]}
    if args.linalg_op == "matvec":
        v = linalg.mat_vec(linalg.read_matrix(args.matrix), linalg.read_vector(args.vector))
        return {"result": list(v.entries)}
    if args.linalg_op == "angle":
        a = linalg.read_vector(args.matrix)
        b = linalg.read_vector(args.other)
        return {
            "dot": linalg.dot(a, b),
            "angle_rad": linalg.angle(a, b),
            "orthogonal": linalg.are_orthogonal(a, b),
        }
    raise ValueError(f"unknown linalg operation {args.linalg_op!r}")


def _cmd_solve(args):
    A = linalg.read_matrix(args.matrix)
    b = linalg.read_vector(args.rhs)
    result = linsolve.solve(linsolve.LinearSystem(A, b)).to_dict()
    if result["kind"] == "none":
        raise OutcomeExit("the system has no solution", result)
    return result


def _cmd_leontief(args):
    table = leontief.DeliveriesTable(
        linalg.read_matrix(args.table), linalg.read_vector(args.demand)
    )
    R = linalg.read_matrix(args.resources) if args.resources else None
    model, q, y = leontief.model_from_table(table, R=R)
    payload = {
        "total_output": list(q.entries),
        "final_demand": list(y.entries),
        "P": [list(row) for row in model.P.to_array()],
        "technology_matrix": [list(row) for row in model.technology_matrix().to_array()],
        "total_demand_matrix": [
            list(row) for row in model.total_demand_matrix().to_array()
        ],
    }
    if R is not None:
        v = leontief.resource_requirements(model, q, given="q")
        payload["resource_requirements"] = list(v.entries)
    if args.next_demand:
        q2, v2 = leontief.forecast(model, linalg.read_vector(args.next_demand))
        payload["forecast_total_output"] = list(q2.entries)
        if v2 is not None:
            payload["forecast_resources"] = list(v2.entries)
    return payload


def _cmd_lp(args):
    lp = simplex.LinearProgram.from_json(_read_text(args.problem))
    trace: Optional[list] = [] if args.trace else None
    solution = simplex.solve_simplex(lp, trace=trace)
    if trace:
        for tab in trace:
            sys.stderr.write(tab.format_text() + "\n")
    payload = solution.to_dict()
    if solution.status != "optimal":
        raise OutcomeExit(f"status: {solution.status}", payload)
    return payload


def _cmd_finance(args):
    op = args.finance_op
    if op == "compound":
        value = finmath.compound_solve(K0=args.K0, Kn=args.Kn, q=args.q, n=args.n)
        missing = [k for k in ("K0", "Kn", "q", "n") if getattr(args, k) is None][0]
        return {missing: value}
    if op == "effective":
        q_eff, p_eff = finmath.effective_rate(args.p, args.m)
        return {"q_eff": q_eff, "p_eff": p_eff}
    if op == "installment":
        value = finmath.installment_solve(Kn=args.Kn, E=args.E, q=args.q, n=args.n)
        missing = [k for k in ("Kn", "E", "q", "n") if getattr(args, k) is None][0]
        return {missing: value}
    if op == "redemption":
        return finmath.redemption_plan(
            args.R0, args.p, t=args.t, A=args.A, horizon=args.horizon
        )
    if op == "pension":
        return finmath.pension_plan(args.K0, args.p, args.m, args.a, horizon=args.horizon)
    if op == "depreciation":
        if args.method == "linear":
            rn, schedule = finmath.depreciation_linear(args.K0, args.N, n=args.n)
            return schedule
        result = finmath.depreciation_declining(args.K0, p=args.p, n=args.n, Rn=args.Rn)
        if isinstance(result, tuple):
            return result[1]
        missing = "p" if args.p is None else "n"
        return {missing: result}
    if op == "master":
        return {"Kn": finmath.master_formula(args.K0, args.q, args.R, args.n)}
    raise ValueError(f"unknown finance operation {op!r}")


def _cmd_calc(args):
    op = args.calc_op
    expr = ca.parse(args.expr)
    if op == "diff":
        return {"derivative": ca.to_string(ca.differentiate(expr))}
    if op == "elasticity":
        eps = ca.elasticity(expr, args.at)
        return {"elasticity": eps, "label": ca.elasticity_label(eps)}
    if op == "roots":
        lo, hi = _parse_window(args.window)
        return {"roots": ca.roots(expr, lo, hi)}
    if op == "integrate":
        return {"integral": ca.integrate(expr, getattr(args, "from"), args.to)}
    if op == "report":
        lo, hi = _parse_window(args.window)
        return ca.curve_report(expr, lo, hi).to_dict()
    raise ValueError(f"unknown calc operation {op!r}")


def _cmd_econ(args):
    op = args.econ_op
    if op == "cost":
        model = econ.CostModel(a3=args.a3, a2=args.a2, a1=args.a1, a0=args.a0)
        return econ.cost_analysis(model).to_dict()
    if op == "profit":
        a3, a2, a1, a0 = _parse_coeffs(args.cost)
        _, x_max = _parse_window(args.window)
        market = econ.MarketModel(
            price=ca.parse(args.price),
            cost=econ.CostModel(a3=a3, a2=a2, a1=a1, a0=a0),
            x_max=x_max,
        )
        payload = econ.profit_analysis(market).to_dict()
        if payload["x_M"] is not None:
            payload["cournot"] = econ.cournot(market).to_dict()
        return payload
    if op == "surplus":
        try:
            strategies = econ.market_strategies(
                ca.parse(args.demand), ca.parse(args.supply), args.pu, args.po
            )
        except econ.EconError as exc:
            raise OutcomeExit(str(exc))
        return strategies.to_dict()
    if op == "value":
        return {"value": econ.psych_value(args.x, args.a)}
    raise ValueError(f"unknown econ operation {op!r}")


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _global_flags(parser: argparse.ArgumentParser, suppress: bool):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument(
        "--format",
        choices=("table", "json", "csv"),
        default=argparse.SUPPRESS if suppress else "table",
        help="output format (default: table)",
    )
    parser.add_argument("--output", default=default, metavar="PATH", help="write results to PATH")
    parser.add_argument(
        "--trace",
        action="store_true",
        default=argparse.SUPPRESS if suppress else False,
        help="stream per-iteration tableaus (lp) to the error stream",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ecomath", description="Quantitative-economics toolkit"
    )
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(parent, name, **kw):
        p = parent.add_parser(name, **kw)
        _global_flags(p, suppress=True)
        return p

    # linalg
    p = sub.add_parser("linalg", help="matrix and vector operations")
    ops = p.add_subparsers(dest="linalg_op", required=True)
    for name, nargs2 in (("det", False), ("inverse", False), ("mul", True),
                         ("matvec", False), ("angle", True)):
        q = leaf(ops, name)
        q.add_argument("matrix", help="matrix (or first vector) file, matrix text format")
        if name == "matvec":
            q.add_argument("vector", help="vector file")
        elif nargs2:
            q.add_argument("other", help="second matrix/vector file")
        q.set_defaults(handler=_cmd_linalg)

    # solve
    p = leaf(sub, "solve", help="classify and solve a linear system A x = b")
    p.add_argument("matrix", help="coefficient matrix file")
    p.add_argument("rhs", help="right-hand-side vector file")
    p.set_defaults(handler=_cmd_solve)

    # leontief
    p = leaf(sub, "leontief", help="input-output analysis from a deliveries table")
    p.add_argument("table", help="deliveries table file (square matrix)")
    p.add_argument("demand", help="final-demand vector file")
    p.add_argument("--resources", help="resource consumption matrix file")
    p.add_argument("--next-demand", dest="next_demand", help="forecast demand vector file")
    p.set_defaults(handler=_cmd_leontief)

    # lp
    p = sub.add_parser("lp", help="linear programming")
    ops = p.add_subparsers(dest="lp_op", required=True)
    q = leaf(ops, "solve", help="solve a standard-form LP from a JSON file")
    q.add_argument("problem", help="LP JSON file")
    q.set_defaults(handler=_cmd_lp)

    # finance
    p = sub.add_parser("finance", help="financial mathematics")
    ops = p.add_subparsers(dest="finance_op", required=True)
    q = leaf(ops, "compound", help="solve Kn = K0 q^n (leave one flag out)")
    for flag in ("K0", "Kn", "q", "n"):
        q.add_argument(f"--{flag}", type=float)
    q.set_defaults(handler=_cmd_finance)
    q = leaf(ops, "effective", help="effective annual rate")
    q.add_argument("--p", type=float, required=True, help="nominal rate, percent")
    q.add_argument("--m", type=int, required=True, help="periods per year")
    q.set_defaults(handler=_cmd_finance)
    q = leaf(ops, "installment", help="installment savings (leave one flag out)")
    for flag in ("Kn", "E", "q", "n"):
        q.add_argument(f"--{flag}", type=float)
    q.set_defaults(handler=_cmd_finance)
    q = leaf(ops, "redemption", help="redemption payment plan")
    q.add_argument("--R0", type=float, required=True, help="initial debt")
    q.add_argument("--p", type=float, required=True, help="interest rate, percent")
    q.add_argument("--t", type=float, help="initial redemption rate, percent")
    q.add_argument("--A", type=float, help="annuity, currency units")
    q.add_argument("--horizon", type=int, help="limit the schedule length")
    q.set_defaults(handler=_cmd_finance)
    q = leaf(ops, "pension", help="pension payment plan")
    q.add_argument("--K0", type=float, required=True, help="initial capital")
    q.add_argument("--p", type=float, required=True, help="interest rate, percent")
    q.add_argument("--m", type=int, required=True, help="withdrawals per year")
    q.add_argument("--a", type=float, required=True, help="withdrawal amount")
    q.add_argument("--horizon", type=int, help="limit the schedule length")
    q.set_defaults(handler=_cmd_finance)
    q = leaf(ops, "depreciation", help="linear or declining-balance depreciation")
    q.add_argument("--method", choices=("linear", "declining"), required=True)
    q.add_argument("--K0", type=float, required=True, help="acquisition value")
    q.add_argument("--N", type=int, help="useful life in years (linear)")
    q.add_argument("--p", type=float, help="declining rate, percent")
    q.add_argument("--n", type=int, help="year of interest")
    q.add_argument("--Rn", type=float, help="target remaining value (declining)")
    q.set_defaults(handler=_cmd_finance)
    q = leaf(ops, "master", help="master formula Kn = K0 q^n + R (q^n-1)/(q-1)")
    q.add_argument("--K0", type=float, required=True)
    q.add_argument("--q", type=float, required=True)
    q.add_argument("--R", type=float, required=True)
    q.add_argument("--n", type=float, required=True)
    q.set_defaults(handler=_cmd_finance)

    # calc
    p = sub.add_parser("calc", help="differentiation, roots, integration, curve reports")
    ops = p.add_subparsers(dest="calc_op", required=True)
    q = leaf(ops, "diff", help="symbolic derivative")
    q.add_argument("expr")
    q.set_defaults(handler=_cmd_calc)
    q = leaf(ops, "elasticity", help="point elasticity x f'(x)/f(x)")
    q.add_argument("expr")
    q.add_argument("--at", type=float, required=True)
    q.set_defaults(handler=_cmd_calc)
    q = leaf(ops, "roots", help="all roots in a window")
    q.add_argument("expr")
    q.add_argument("--window", required=True, metavar="LO:HI")
    q.set_defaults(handler=_cmd_calc)
    q = leaf(ops, "integrate", help="definite integral")
    q.add_argument("expr")
    q.add_argument("--from", type=float, required=True, dest="from")
    q.add_argument("--to", type=float, required=True)
    q.set_defaults(handler=_cmd_calc)
    q = leaf(ops, "report", help="curve sketch of a polynomial/rational function")
    q.add_argument("expr")
    q.add_argument("--window", required=True, metavar="LO:HI")
    q.set_defaults(handler=_cmd_calc)

    # econ
    p = sub.add_parser("econ", help="cost, profit, surplus and value analysis")
    ops = p.add_subparsers(dest="econ_op", required=True)
    q = leaf(ops, "cost", help="cost-phase analysis of a cubic cost function")
    q.add_argument("--a3", type=float, required=True)
    q.add_argument("--a2", type=float, required=True)
    q.add_argument("--a1", type=float, required=True)
    q.add_argument("--a0", type=float, default=0.0)
    q.set_defaults(handler=_cmd_econ)
    q = leaf(ops, "profit", help="break-even, profit maximum and Cournot point")
    q.add_argument("--price", required=True, help="unit price p(x) as an expression")
    q.add_argument("--cost", required=True, metavar="a3,a2,a1,a0")
    q.add_argument("--window", required=True, metavar="LO:HI")
    q.set_defaults(handler=_cmd_econ)
    q = leaf(ops, "surplus", help="equilibrium and the three selling strategies")
    q.add_argument("--demand", required=True, help="demand N(p) as an expression in x")
    q.add_argument("--supply", required=True, help="supply A(p) as an expression in x")
    q.add_argument("--pu", type=float, required=True, help="lower price bound")
    q.add_argument("--po", type=float, required=True, help="upper price bound")
    q.set_defaults(handler=_cmd_econ)
    q = leaf(ops, "value", help="psychological value of a gain/loss")
    q.add_argument("--a", type=float, required=True, help="scale parameter")
    q.add_argument("--x", type=float, required=True, help="gain (x>=0) or loss (x<0)")
    q.set_defaults(handler=_cmd_econ)

    return parser


def dispatch(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; ours is the input-error code 1
        return EXIT_OK if exc.code == 0 else EXIT_INPUT

    fmt = getattr(args, "format", "table")
    output = getattr(args, "output", None)
    try:
        payload = args.handler(args)
        _emit(render(payload, fmt), output)
        return EXIT_OK
    except OutcomeExit as exc:
        if exc.payload is not None:
            _emit(render(exc.payload, fmt), output)
        sys.stderr.write(f"ecomath: {exc}\n")
        return EXIT_NO_SOLUTION
    except (ca.PoleError, ca.DivergenceError, simplex.IterationLimitError) as exc:
        sys.stderr.write(f"ecomath: numerical failure: {exc}\n")
        return EXIT_NUMERICAL
    except (
        ValueError,
        ArithmeticError,
        OSError,
        json.JSONDecodeError,
        KeyError,
    ) as exc:
        sys.stderr.write(f"ecomath: error: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
