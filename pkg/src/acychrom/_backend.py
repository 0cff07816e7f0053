"""Kernel backend selection.

The compiled ``_ckernels`` module is used when it imports and the graph fits
in a 64-bit word; otherwise the pure-Python kernels run. Setting
``ACYCHROM_BACKEND=python`` forces the fallback everywhere.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels

FOUND = _pykernels.FOUND
EXHAUSTED = _pykernels.EXHAUSTED
TIMED_OUT = _pykernels.TIMED_OUT

_compiled: ModuleType | None
try:
    from . import _ckernels as _compiled
except ImportError:  # extension not built
    _compiled = None

if os.environ.get("ACYCHROM_BACKEND", "").lower() == "python":
    _compiled = None


def name() -> str:
    return "cython" if _compiled is not None else "python"


def compiled_available() -> bool:
    return _compiled is not None


def kernels(n: int) -> ModuleType:
    if _compiled is not None and n <= 64:
        return _compiled
    return _pykernels


def max_clique(adj: list[int], cand: int) -> int:
    return kernels(len(adj)).max_clique(adj, cand)


def k_colour(adj: list[int], k: int, deadline: float = 0.0) -> tuple[int, list[int] | None]:
    return kernels(len(adj)).k_colour(adj, k, deadline)


def best_right_order(out: list[int], inn: list[int], best: int, upper: int) -> tuple[int, list[int] | None]:
    return kernels(len(out)).best_right_order(out, inn, best, upper)
