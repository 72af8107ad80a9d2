"""Exact localization toolkit for R[X] over finite product rings.

Thin wrappers around the C++ core. All heavy operations return JSON
strings whose layout matches the CLI output; `run` is the full CLI.
"""

from anderson_ring._core import (
    check_predicate,
    gen_search_json,
    member,
    run,
    spectrum_json,
    theorem_json,
)

__all__ = [
    "check_predicate",
    "gen_search_json",
    "member",
    "run",
    "spectrum_json",
    "theorem_json",
]
