"""Exact sexagesimal arithmetic, plane geometry and tablet replay.

Numbers come back as fractions.Fraction. Arguments may be an int, a Fraction
or a sexagesimal numeral string such as "14,24", "0;0,6" or "2/3".
"""

from ._babylon import (
    BabylonError,
    bisect_trapezoid,
    canonical_trace,
    check_intercept,
    classify_regular,
    combine,
    diff_trace,
    evaluate,
    has_finite_expansion,
    intercept_fourth,
    is_transversal,
    parse,
    parse_floating,
    reciprocal,
    render,
    run_cli,
    similar_sas,
    similar_sss,
    solve_product_ratio,
    solve_smt18,
    solve_sum_product,
    sqrt_exact,
    to_string,
    transversal_w,
    verify_solution,
)

__all__ = [
    "BabylonError",
    "bisect_trapezoid",
    "canonical_trace",
    "check_intercept",
    "classify_regular",
    "combine",
    "diff_trace",
    "evaluate",
    "has_finite_expansion",
    "intercept_fourth",
    "is_transversal",
    "parse",
    "parse_floating",
    "reciprocal",
    "render",
    "run_cli",
    "similar_sas",
    "similar_sss",
    "solve_product_ratio",
    "solve_smt18",
    "solve_sum_product",
    "sqrt_exact",
    "to_string",
    "transversal_w",
    "verify_solution",
]
