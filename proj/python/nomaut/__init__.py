"""Nominal automata (NOFAs and RNNAs) with trace and language semantics."""

from ._nomaut import (
    Automaton,
    Error,
    ParseError,
    PoolError,
    SpecViolation,
    alpha_eq,
    auto_pool,
    canonicalize,
    free_names,
    selfcheck,
    validate_spec,
)

__all__ = [
    "Automaton",
    "Error",
    "ParseError",
    "PoolError",
    "SpecViolation",
    "alpha_eq",
    "auto_pool",
    "canonicalize",
    "free_names",
    "selfcheck",
    "validate_spec",
]
