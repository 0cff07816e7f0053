"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import time
from typing import Callable

from acychrom import _backend
from acychrom.chromatic import chromatic_number, max_clique
from acychrom.core import UndirectedGraph, random_tournament
from acychrom.gn import build_gn
from acychrom.orderings import f_exact


def gnp(n: int, p: float, seed: int) -> UndirectedGraph:
    rng = random.Random(seed)
    return UndirectedGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


# inputs are built once so only the solvers are timed
_DENSE, _MID, _SPARSE = gnp(64, 0.95, 1), gnp(50, 0.5, 2), gnp(60, 0.3, 4)
_G3 = build_gn(3)
_T9 = [random_tournament(9, s) for s in range(5)]
_T10 = random_tournament(10, 1)

CASES: list[tuple[str, Callable[[], object]]] = [
    ("max_clique G(64, 0.95)", lambda: max_clique(_DENSE)),
    ("chromatic G(50, 0.5)", lambda: chromatic_number(_MID, cap=None)),
    ("chromatic G(60, 0.3)", lambda: chromatic_number(_SPARSE, cap=None)),
    ("f_exact G_3", lambda: f_exact(_G3)),
    ("f_exact random T_9 x5", lambda: [f_exact(g) for g in _T9]),
    ("f_exact random T_10", lambda: f_exact(_T10)),
]


def best_of(fn: Callable[[], object], repeat: int) -> tuple[float, object]:
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    compiled = _backend._compiled
    if compiled is None:
        raise SystemExit("compiled kernels unavailable; build with `pip install -e . --no-build-isolation`")
    print(f"{'case':<24} {'compiled':>10} {'python':>10} {'speedup':>8}")
    for label, fn in CASES:
        _backend._compiled = compiled
        tc, rc = best_of(fn, args.repeat)
        _backend._compiled = None
        tp, rp = best_of(fn, args.repeat)
        _backend._compiled = compiled
        assert rc == rp, f"{label}: backends disagree"
        print(f"{label:<24} {tc * 1e3:9.1f}ms {tp * 1e3:9.1f}ms {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
