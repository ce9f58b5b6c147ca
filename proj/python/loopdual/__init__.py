"""Centralizer presentations and loop-space series for reductive root data."""

import json

from ._loopdual import (
    SCHEMA_VERSION,
    BudgetExceeded,
    Error,
    InvalidInput,
    centralizer_series,
    degree_d_ad,
    exponents,
    n_G,
    omega_poincare,
    preset_names,
    run_centralizer,
    run_check_all,
    run_datum_info,
)

EXIT_PASS, EXIT_ERROR, EXIT_MISMATCH, EXIT_BUDGET, EXIT_BAD_INPUT = 0, 1, 2, 3, 4


class CommandError(RuntimeError):
    def __init__(self, code, message):
        super().__init__(message.strip())
        self.code = code


def _document(result):
    code, out, err = result
    if not out:
        raise CommandError(code, err)
    return code, json.loads(out)


def datum_info(name):
    return _document(run_datum_info(name))[1]


def centralizer(name, rings=("Q",), truncation=40):
    """Returns (exit code, document) for the centralizer command."""
    return _document(run_centralizer(name, list(rings), truncation))


def check_all(max_rank=2, truncation=40):
    """Returns (exit code, summary lines)."""
    code, out, _ = run_check_all(max_rank, truncation)
    return code, out.splitlines()


__all__ = [
    "SCHEMA_VERSION",
    "BudgetExceeded",
    "CommandError",
    "Error",
    "InvalidInput",
    "centralizer",
    "centralizer_series",
    "check_all",
    "datum_info",
    "degree_d_ad",
    "exponents",
    "n_G",
    "omega_poincare",
    "preset_names",
]
