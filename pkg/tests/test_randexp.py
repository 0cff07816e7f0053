import math

import pytest

from acychrom.core import LinearOrder, random_tournament
from acychrom.orderings import chi_right, f_exact
from acychrom.randexp import (
    CSV_HEADER,
    ExperimentConfig,
    asymptotic_scale,
    mean_by_size,
    run_experiment,
    task_seed,
    to_csv,
)
from acychrom.errors import SizeLimitExceeded


def test_scale():
    assert asymptotic_scale(1) == 1.0
    assert asymptotic_scale(16) == pytest.approx(2.0)
    assert asymptotic_scale(32) == pytest.approx(3.2)


def test_degenerate_size():
    (rec,) = run_experiment(ExperimentConfig(sizes=(1,), trials=1, seed=3))
    assert rec.chi_right_identity == 1 and rec.ratio == 1.0


def test_deterministic_csv():
    cfg = ExperimentConfig(sizes=(8, 12), trials=5, seed=9)
    a, b = to_csv(run_experiment(cfg)), to_csv(run_experiment(cfg))
    assert a == b
    lines = a.splitlines()
    assert lines[0] == CSV_HEADER and len(lines) == 11


def test_parallel_matches_serial():
    cfg = ExperimentConfig(sizes=(10, 14), trials=4, seed=2)
    par = ExperimentConfig(sizes=(10, 14), trials=4, seed=2, workers=2)
    assert to_csv(run_experiment(cfg)) == to_csv(run_experiment(par))


def test_record_fields():
    cfg = ExperimentConfig(sizes=(12,), trials=3, seed=4)
    for r in run_experiment(cfg):
        assert r.seed == task_seed(4, 12, r.trial)
        g = random_tournament(12, r.seed)
        assert r.chi_right_identity == chi_right(g, LinearOrder.identity(12))
        assert r.ratio == pytest.approx(r.chi_right_identity / asymptotic_scale(12))
        assert r.elapsed_ms == 0.0


def test_timing_recorded_when_asked():
    recs = run_experiment(ExperimentConfig(sizes=(8,), trials=2, seed=1, record_timing=True))
    assert all(r.elapsed_ms > 0 for r in recs)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_identity_chi_is_a_lower_bound_on_f(n):
    for r in run_experiment(ExperimentConfig(sizes=(n,), trials=6, seed=n)):
        assert r.chi_right_identity <= f_exact(random_tournament(n, r.seed))


def test_mean_by_size():
    recs = run_experiment(ExperimentConfig(sizes=(6, 9), trials=3, seed=1))
    means = mean_by_size(recs)
    assert set(means) == {6, 9}
    assert means[6] == sum(r.chi_right_identity for r in recs if r.n == 6) / 3


def test_config_parsing():
    cfg = ExperimentConfig.from_text("sizes = 8, 16  # ladder\ntrials=3\nseed=7\n\n")
    assert cfg == ExperimentConfig(sizes=(8, 16), trials=3, seed=7)
    with pytest.raises(ValueError):
        ExperimentConfig.from_text("colour=blue")
    with pytest.raises(ValueError):
        ExperimentConfig(trials=0)
    with pytest.raises(ValueError):
        ExperimentConfig(sizes=(0,))


def test_size_cap():
    with pytest.raises(SizeLimitExceeded):
        run_experiment(ExperimentConfig(sizes=(41,), trials=1))


def test_one_sided_bound_small_ladder():
    recs = run_experiment(ExperimentConfig(sizes=(8, 12), trials=10, seed=5))
    assert all(r.chi_right_identity >= r.n / (2 * math.log2(r.n)) for r in recs)
