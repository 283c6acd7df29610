"""Singular moduli k_r, the degree-5 ladder and identity certification.

All numbers cross the boundary as decimal strings so no precision is lost.
"""

import json

from . import _quintic
from ._quintic import (
    BranchError,
    ConvergenceError,
    DomainError,
    QuinticError,
    UsageError,
    ladder,
    modulus,
    registry,
    rrcf,
    run_cli,
)


def verify(r, ids=None, prec=512, tol_exp=120):
    """Identity report at r as a dict (see the CLI's JSON "report" payload)."""
    return json.loads(_quintic.verify_json(r, ids, prec, tol_exp))


__all__ = [
    "BranchError",
    "ConvergenceError",
    "DomainError",
    "QuinticError",
    "UsageError",
    "ladder",
    "modulus",
    "registry",
    "rrcf",
    "run_cli",
    "verify",
]
