"""Python bindings for the skein module workbench."""

import json

from ._skeinwb import (
    CalibrationFailure,
    Error,
    bracket,
    builtin_diagram_json,
    builtin_diagram_names,
    calibrate_kappa,
    divergence,
    eval_dual,
    f_and_fprime,
    run_suite_json,
    suite_names,
)


def run_suite(which="all", seed=1, samples=20):
    """Run a property suite and return its records as dicts."""
    return [json.loads(line) for line in run_suite_json(which, seed, samples)]


__all__ = [
    "CalibrationFailure",
    "Error",
    "bracket",
    "builtin_diagram_json",
    "builtin_diagram_names",
    "calibrate_kappa",
    "divergence",
    "eval_dual",
    "f_and_fprime",
    "run_suite",
    "suite_names",
]
