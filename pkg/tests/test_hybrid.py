import math

import numpy as np
import pytest

from trussopt import benchmarks
from trussopt.ga import GaParams, Individual, Population
from trussopt.hybrid import (HybridParams, RunRecord, compare_plain_ga,
                             remove_victim_index, run)


def _pop_from_values(values, seed=0):
    individuals = [Individual(design=np.array([float(v)]), weight=v,
                              violation_total=0.0, penalized=v,
                              evaluated_at_generation=1)
                   for v in values]
    return Population(individuals=individuals, generation=1,
                      rng=np.random.default_rng(seed))


def _small_params(generations=8, t_sa=3, pop=10, seed=0):
    return HybridParams(t_sa=t_sa,
                        ga=GaParams(population_size=pop,
                                    max_generations=generations, seed=seed))


def test_params_reject_t_sa_below_one():
    with pytest.raises(ValueError):
        HybridParams(t_sa=0)


def test_victim_never_best_and_frequencies_match():
    # fitness 1.0, 0.5, 0.2, 0.125 -> inverse weights 0, 2, 5, 8
    pop = _pop_from_values([10.0, 11.0, 14.0, 17.0])
    rng = np.random.default_rng(23)
    n = 100_000
    counts = np.zeros(4)
    for _ in range(n):
        counts[remove_victim_index(pop, rng=rng)] += 1
    assert counts[0] == 0
    p = np.array([0.0, 2.0, 5.0, 8.0]) / 15.0
    sigma = np.sqrt(n * p * (1 - p))
    assert np.all(np.abs(counts - n * p) <= 3 * np.maximum(sigma, 1.0))


def test_run_is_deterministic_per_seed(small_model):
    params = _small_params()
    a = run(small_model, params, seed=42)
    b = run(small_model, params, seed=42)
    assert a.total_evaluations == b.total_evaluations
    np.testing.assert_array_equal(a.best.design, b.best.design)
    assert a.best.penalized == b.best.penalized
    for sa, sb in zip(a.history, b.history):
        assert (sa.generation, sa.best_F, sa.mean_F, sa.evaluations,
                sa.sa_ran) == (sb.generation, sb.best_F, sb.mean_F,
                               sb.evaluations, sb.sa_ran)
        assert (math.isnan(sa.best_feasible_weight)
                and math.isnan(sb.best_feasible_weight)) \
            or sa.best_feasible_weight == sb.best_feasible_weight


def test_different_seeds_differ(small_model):
    params = _small_params()
    a = run(small_model, params, seed=1)
    b = run(small_model, params, seed=2)
    # the tiny model converges to the same corner, but the sampled
    # trajectories must differ
    assert [s.best_F for s in a.history] != [s.best_F for s in b.history]


def test_sa_runs_on_schedule(small_model):
    rec = run(small_model, _small_params(generations=9, t_sa=3), seed=5)
    ran = [st.generation for st in rec.history if st.sa_ran]
    assert ran == [3, 6, 9]


def test_infinite_t_sa_is_plain_ga(small_model):
    rec = run(small_model, HybridParams(
        t_sa=math.inf, ga=GaParams(population_size=10, max_generations=6,
                                   seed=3)), seed=3)
    assert not any(st.sa_ran for st in rec.history)


def test_t_sa_beyond_max_generations_matches_plain_ga(small_model):
    far = run(small_model, _small_params(generations=6, t_sa=50), seed=9)
    plain = run(small_model, HybridParams(
        t_sa=math.inf, ga=GaParams(population_size=10, max_generations=6,
                                   seed=9)), seed=9)
    np.testing.assert_array_equal(far.best.design, plain.best.design)
    assert far.total_evaluations == plain.total_evaluations


def test_best_feasible_weight_trace_non_increasing(small_model):
    rec = run(small_model, _small_params(generations=12), seed=0)
    trace = [st.best_feasible_weight for st in rec.history
             if not math.isnan(st.best_feasible_weight)]
    assert trace, "expected a feasible design on this trivially feasible model"
    assert all(b <= a + 1e-12 for a, b in zip(trace, trace[1:]))


def test_evaluations_strictly_increase(small_model):
    rec = run(small_model, _small_params(generations=10), seed=1)
    evals = [st.evaluations for st in rec.history]
    assert all(b > a for a, b in zip(evals, evals[1:]))
    assert rec.total_evaluations == evals[-1]


def test_max_evaluations_caps_budget(small_model):
    rec = run(small_model, _small_params(generations=500, t_sa=math.inf),
              seed=0, max_evaluations=60)
    assert rec.history[-1].generation < 500
    assert rec.total_evaluations <= 60 + 10  # at most one generation over


def test_best_is_reverified_feasible(small_model):
    from trussopt import analysis
    from trussopt.penalty import evaluate_constraints
    rec = run(small_model, _small_params(generations=10), seed=2)
    assert rec.best_is_feasible
    res = analysis.analyze(small_model, rec.best.design)
    report = evaluate_constraints(small_model, res, rec.best.design)
    assert report.feasible


def test_compare_requires_five_seeds(small_model):
    with pytest.raises(ValueError):
        compare_plain_ga(small_model, _small_params(), seeds=[1, 2, 3])


def test_compare_budgets_match(small_model):
    summary = compare_plain_ga(small_model, _small_params(generations=6),
                               seeds=[0, 1, 2, 3, 4])
    for rh, rp in zip(summary.hybrid_records, summary.plain_records):
        # plain arm stops within one generation of the hybrid's budget
        assert rp.total_evaluations <= rh.total_evaluations + 10
    assert len(summary.hybrid_weights) == 5
    assert summary.hybrid_median == np.median(summary.hybrid_weights)
