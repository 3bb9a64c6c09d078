"""Interval kernel and proof drivers; reports come back as parsed JSON."""

import json

from ._tangency import (
    ConfigError,
    DomainError,
    Interval,
    ShapeError,
    TangencyError,
    atan,
    cos,
    pi,
    positive_definite,
    sin,
    sqrt,
    transversality_determinant,
)
from . import _tangency

__all__ = [
    "ConfigError",
    "DomainError",
    "Interval",
    "ShapeError",
    "TangencyError",
    "atan",
    "check_toy",
    "cos",
    "pi",
    "positive_definite",
    "prove_henon",
    "sin",
    "sqrt",
    "transversality_determinant",
]


def prove_henon(param_radius=None, grids=(), threads=1):
    """Run the Henon proof and return the report as a dict."""
    return json.loads(_tangency.prove_henon_json(param_radius, list(grids), threads))


def check_toy(lambda_=2.0, mu=0.5, delta=0.5, epsilon=0.01, k=3, s=3):
    """Run the toy-model checks and return the report as a dict."""
    return json.loads(_tangency.check_toy_json(lambda_, mu, delta, epsilon, k, s))
