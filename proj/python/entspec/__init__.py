"""Exact entanglement spectrum of the XY chain.

Thin wrapper over the compiled ``_entspec`` module. Degeneracies come back as
Python ints, exact at any size.
"""

from ._entspec import (
    ConvergenceError,
    CriticalInputError,
    DomainError,
    EllipticData,
    ModelPoint,
    NumericError,
    ResourceError,
    asymptotic_degeneracy,
    cauchy_degeneracy,
    classify,
    degeneracy_tables,
    elliptic_data,
    exact_spectrum,
    free_fermion_spectrum,
    is_gapped,
    log_generating_function,
    regime,
    renyi_entropy,
    run_cli,
    small_alpha_entropy,
    von_neumann_entropy,
    zeta,
)

__all__ = [name for name in dir() if not name.startswith("_")]
