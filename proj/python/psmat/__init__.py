"""Exact-arithmetic solver and verifier for three-matrix power-sum systems.

Every function takes and returns JSON text; parse results with json.loads.
"""

try:
    from psmat._psmat import (
        classify,
        construct,
        verify,
        flag_report,
        ncgb,
        quat_region,
        quat_solve,
    )
except ImportError:  # extension built outside the package (in-tree builds)
    from _psmat import (
        classify,
        construct,
        verify,
        flag_report,
        ncgb,
        quat_region,
        quat_solve,
    )

__all__ = [
    "classify",
    "construct",
    "verify",
    "flag_report",
    "ncgb",
    "quat_region",
    "quat_solve",
]
