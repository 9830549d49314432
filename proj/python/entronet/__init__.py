"""Entropy vectors, information inequalities and multicast network codes.

Thin wrapper over the C++ core. All verdicts are computed in exact
arithmetic; every number in a result dict is an exact string ("p/q" or
"log2:p/q"), never a float.
"""

from ._core import (
    EntronetError,
    builtin_vector,
    check,
    demo,
    elemental_inequalities,
    group_vector,
    mp_network,
    prove,
    solve,
)

__all__ = [
    "EntronetError",
    "builtin_vector",
    "check",
    "demo",
    "elemental_inequalities",
    "group_vector",
    "mp_network",
    "prove",
    "solve",
]
