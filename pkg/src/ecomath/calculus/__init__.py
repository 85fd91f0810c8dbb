"""Symbolic-lite calculus: expression trees, differentiation, root finding,
curve sketching and definite integration."""

from .expr import (
    Abs,
    Add,
    Const,
    Div,
    EvalDomainError,
    Exp,
    Expr,
    ExprSyntaxError,
    Ln,
    Mul,
    Neg,
    Pow,
    Sub,
    Var,
    X,
    abs_,
    add,
    const,
    differentiate,
    div,
    evaluate,
    exp_,
    ln_,
    log_base,
    mul,
    neg,
    parse,
    pow_,
    sub,
    to_string,
)
from .analysis import (
    CurveReport,
    DivergenceError,
    PoleError,
    UnsupportedExpressionError,
    antiderivative,
    as_rational,
    curve_report,
    elasticity,
    elasticity_expr,
    elasticity_label,
    expr_from_poly,
    integrate,
    poly_coeffs,
    poly_divide,
    roots,
    second_elasticity,
    tangent_line,
)

__all__ = [
    "Abs", "Add", "Const", "Div", "EvalDomainError", "Exp", "Expr",
    "ExprSyntaxError", "Ln", "Mul", "Neg", "Pow", "Sub", "Var", "X",
    "abs_", "add", "const", "differentiate", "div", "evaluate", "exp_",
    "ln_", "log_base", "mul", "neg", "parse", "pow_", "sub", "to_string",
    "CurveReport", "DivergenceError", "PoleError", "UnsupportedExpressionError",
    "antiderivative", "as_rational", "curve_report", "elasticity",
    "elasticity_expr", "elasticity_label", "expr_from_poly", "integrate",
    "poly_coeffs", "poly_divide", "roots", "second_elasticity", "tangent_line",
]
