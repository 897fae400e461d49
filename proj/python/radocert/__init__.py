"""Exact partition- and density-regularity checks for polynomial equations."""

from ._core import (
    ParseError,
    PreconditionError,
    RadocertError,
    SchemaError,
    __version__,
    check_window,
    columns_condition,
    density_check,
    domain_info,
    enumerate_roots,
    parse_polynomial,
    reduce,
    refutation_scan,
    run_cli,
    semidecide,
    verify_certificate,
)

__all__ = [
    "ParseError",
    "PreconditionError",
    "RadocertError",
    "SchemaError",
    "__version__",
    "check_window",
    "columns_condition",
    "density_check",
    "domain_info",
    "enumerate_roots",
    "parse_polynomial",
    "reduce",
    "refutation_scan",
    "run_cli",
    "semidecide",
    "verify_certificate",
]
