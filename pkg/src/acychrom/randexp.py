"""Random-tournament experiment: chi of the identity-order right subgraph versus n / (2 log2 n)."""

from __future__ import annotations

import io
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .chromatic import chromatic_number
from .core import LinearOrder, check_size, derive_seed, random_tournament
from .orderings import right_underlying

CSV_HEADER = "n,seed,trial,chi_right_identity,ratio,elapsed_ms"


@dataclass(frozen=True)
class ExperimentConfig:
    sizes: tuple[int, ...] = (16, 24, 32)
    trials: int = 20
    seed: int = 1
    chi_exact_limit: int = 40
    record_timing: bool = False
    workers: int = 1

    def __post_init__(self):
        if not self.sizes or any(n < 1 for n in self.sizes):
            raise ValueError("sizes must be positive")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")

    @classmethod
    def from_text(cls, text: str) -> "ExperimentConfig":
        """Parse ``key=value`` lines (sizes, trials, seed, chi_exact_limit); ``#`` starts a comment."""
        values: dict = {}
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not sep:
                raise ValueError(f"expected key=value, got {raw!r}")
            if key == "sizes":
                values["sizes"] = tuple(int(s) for s in value.split(",") if s.strip())
            elif key in ("trials", "seed", "chi_exact_limit"):
                values[key] = int(value)
            else:
                raise ValueError(f"unknown config key {key!r}")
        return cls(**values)


@dataclass(frozen=True)
class ExperimentRecord:
    n: int
    seed: int
    trial: int
    chi_right_identity: int
    ratio: float
    elapsed_ms: float = field(default=0.0, compare=False)


def asymptotic_scale(n: int) -> float:
    """n / (2 log2 n), with 1 standing in when log2 n = 0."""
    lg = math.log2(n)
    return n / (2 * lg) if lg > 0 else 1.0


def task_seed(seed: int, n: int, trial: int) -> int:
    return derive_seed(seed, n, trial)


def _run_one(args: tuple[int, int, int, bool]) -> ExperimentRecord:
    n, trial, seed, timing = args
    start = time.perf_counter()
    g = random_tournament(n, seed)
    chi, _ = chromatic_number(right_underlying(g, LinearOrder.identity(n)), cap=None)
    elapsed = (time.perf_counter() - start) * 1000 if timing else 0.0
    return ExperimentRecord(n, seed, trial, chi, chi / asymptotic_scale(n), elapsed)


def run_experiment(cfg: ExperimentConfig) -> list[ExperimentRecord]:
    """One record per (n, trial), sorted by (n, trial) whatever the scheduling.

    ``seed`` in each record is the per-task seed the tournament was drawn with.
    Timings are reported only when ``cfg.record_timing`` is set, so that the
    default output is a pure function of the config.
    """
    for n in cfg.sizes:
        check_size("run_experiment", n, cfg.chi_exact_limit)
    tasks = [
        (n, trial, task_seed(cfg.seed, n, trial), cfg.record_timing)
        for n in sorted(set(cfg.sizes))
        for trial in range(cfg.trials)
    ]
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            records = list(pool.map(_run_one, tasks))
    else:
        records = [_run_one(t) for t in tasks]
    return sorted(records, key=lambda r: (r.n, r.trial))


def to_csv(records: list[ExperimentRecord]) -> str:
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for r in records:
        buf.write(f"{r.n},{r.seed},{r.trial},{r.chi_right_identity},{r.ratio:.6f},{r.elapsed_ms:.3f}\n")
    return buf.getvalue()


def mean_by_size(records: list[ExperimentRecord]) -> dict[int, float]:
    sums: dict[int, list[int]] = {}
    for r in records:
        sums.setdefault(r.n, []).append(r.chi_right_identity)
    return {n: sum(v) / len(v) for n, v in sorted(sums.items())}
