"""Central DG solver for the compressible Euler equations with gravity.

The heavy lifting lives in the C++ extension; this package re-exports the
operations most useful from python.
"""

from cdgrav._core import (  # noqa: F401
    ConfigError,
    PositivityFault,
    convergence,
    gauss_rule,
    list_problems,
    lobatto_rule,
    run,
)

__all__ = [
    "ConfigError",
    "PositivityFault",
    "convergence",
    "gauss_rule",
    "list_problems",
    "lobatto_rule",
    "run",
]
