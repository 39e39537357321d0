"""Property reports: one polynomial's structural verdicts as a plain dict."""

from __future__ import annotations

from .polynomials import IntPoly, gamma_expand, is_gamma_nonnegative, is_gamma_positive
from .roots import is_real_rooted


def property_report(poly: IntPoly) -> dict:
    """All structural verdicts for one polynomial, JSON-ready.  The gamma
    field is null exactly when the polynomial is not palindromic."""
    expansion = gamma_expand(poly)
    return {
        "coefficients": list(poly.coeffs),
        "pretty": poly.pretty(),
        "degree": poly.degree,
        "palindromic": poly.is_palindromic(),
        "monic": poly.is_monic(),
        "unimodal": poly.is_unimodal(),
        "log_concave": poly.is_log_concave(),
        "gamma": list(expansion.gamma) if expansion.is_exact else None,
        "gamma_positive": is_gamma_positive(poly),
        "gamma_nonnegative": is_gamma_nonnegative(poly),
        "real_rooted": bool(poly) and is_real_rooted(poly),
        "evaluation_at_1": poly(1),
    }


REPORT_TEXT_FIELDS = (
    "degree", "palindromic", "monic", "unimodal", "log_concave",
    "gamma", "gamma_positive", "gamma_nonnegative", "real_rooted",
    "evaluation_at_1",
)


def report_lines(report: dict) -> list[str]:
    lines = [report["pretty"]]
    for field in REPORT_TEXT_FIELDS:
        lines.append(f"  {field}: {report[field]}")
    return lines


CSV_COLUMNS = (
    "expr", "k", "degree", "coefficients", "palindromic", "monic", "unimodal",
    "log_concave", "gamma", "gamma_positive", "gamma_nonnegative",
    "real_rooted", "evaluation_at_1", "verdicts",
)


def csv_row(expr: str, k, report: dict, verdicts: str = "") -> list[str]:
    """Fixed-order row; list-valued cells are ';'-joined."""
    return [
        expr,
        str(k),
        str(report["degree"]),
        ";".join(str(c) for c in report["coefficients"]),
        str(report["palindromic"]),
        str(report["monic"]),
        str(report["unimodal"]),
        str(report["log_concave"]),
        ";".join(str(g) for g in report["gamma"]) if report["gamma"] is not None else "",
        str(report["gamma_positive"]),
        str(report["gamma_nonnegative"]),
        str(report["real_rooted"]),
        str(report["evaluation_at_1"]),
        verdicts,
    ]
