"""Exact Catalan trapezoids, pair partitions and (q,2)-deformed moments.

Thin re-export of the compiled extension. Exact values come back as Python
ints, ``fractions.Fraction`` or coefficient lists of Fractions (ascending
powers of q).
"""

from qcat._core import (
    DomainError,
    SizeGuardError,
    VerificationError,
    ballot_count_oracle,
    binomial,
    catalan_boundary_table,
    catalan_number,
    catalan_triangle,
    classify_signature,
    count_strata,
    enumerate_ncpp,
    enumerate_pp,
    enumerate_pp_eps,
    enumerate_plus_signatures,
    factorial,
    is_noncrossing,
    k_class,
    ncpp_counterpart,
    p_n,
    p_nk,
    run_cli,
    semifactorial,
    shapiro_triangle,
    solve_closed_form,
    solve_recurrence,
    tau,
    trapezoid,
    vacuum_moment,
    vacuum_moment_gram,
    verify_all,
    wick_moment,
)

__all__ = [
    "DomainError",
    "SizeGuardError",
    "VerificationError",
    "ballot_count_oracle",
    "binomial",
    "catalan_boundary_table",
    "catalan_number",
    "catalan_triangle",
    "classify_signature",
    "count_strata",
    "enumerate_ncpp",
    "enumerate_pp",
    "enumerate_pp_eps",
    "enumerate_plus_signatures",
    "factorial",
    "is_noncrossing",
    "k_class",
    "ncpp_counterpart",
    "p_n",
    "p_nk",
    "run_cli",
    "semifactorial",
    "shapiro_triangle",
    "solve_closed_form",
    "solve_recurrence",
    "tau",
    "trapezoid",
    "vacuum_moment",
    "vacuum_moment_gram",
    "verify_all",
    "wick_moment",
]
