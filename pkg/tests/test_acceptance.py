"""Acceptance suite: twelve end-to-end checks, one verdict line each.

Each test prints ``ACCEPTANCE <n> <label>: PASS|FAIL`` straight to the
terminal (bypassing capture) so the whole gate can be read at a glance
from any pytest run.
"""

import contextlib
import itertools
import string
import time

import numpy as np
import pytest

from collective_schedules import (
    GenSpec,
    Objective,
    PreferenceProfile,
    Schedule,
    SolveOptions,
    TaskSet,
    brute_force_oracle,
    deviation,
    enumerate_optima,
    find_pta_condorcet_schedule,
    generate,
    is_pta_condorcet_consistent,
    lmt,
    lrm_probe,
    neutrality_probe,
    pta_kendall_tau,
    score,
    solve_exact,
    swap_tasks_in_profile,
)
from collective_schedules.experiments import (
    instance_seed,
    run_compare,
    run_lmt_eval,
    run_lrm_audit,
)
from collective_schedules.gallery import (
    deviation_length_reduction_counterexample,
    deviation_neutrality_counterexample,
    deviation_unanimity_counterexample,
    kemeny_unanimity_counterexample,
    median_trap_family,
    median_trap_scores,
    three_task_example,
)

MODELS = ("uniform", "plackett-luce")


@contextlib.contextmanager
def criterion(capsys, number, label):
    """Print one verdict line for a criterion, whatever the outcome."""
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"ACCEPTANCE {number:>2} {label}: FAIL", flush=True)
        raise
    with capsys.disabled():
        print(f"ACCEPTANCE {number:>2} {label}: PASS", flush=True)


def test_01_worked_example_pairwise_score(capsys):
    with criterion(capsys, 1, "worked-example pairwise score"):
        _, profile = three_task_example()
        assert pta_kendall_tau(Schedule.of("2", "1", "3"), profile) == 14


def test_02_exact_solver_matches_oracle(capsys):
    with criterion(capsys, 2, "exact solver matches oracle"):
        options = SolveOptions(enumerate_all=True, optimum_cap=5040)
        checked = 0
        for cell, (n, v, model) in enumerate(
            itertools.product(range(3, 8), (1, 5, 50), MODELS)
        ):
            for i in range(7):
                seed = instance_seed(11, cell, i)
                tasks, profile = generate(GenSpec(n, v, model, (1, 10), seed))
                for objective in Objective:
                    oracle = brute_force_oracle(tasks, profile, objective)
                    fast = solve_exact(tasks, profile, objective, options)
                    assert fast.optimal_score == oracle.optimal_score
                    assert fast.optima == oracle.optima
                checked += 1
        assert checked == 210


def test_03_proof_instance_fixtures(capsys):
    with criterion(capsys, 3, "proof-instance fixtures"):
        tasks, profile, _ = deviation_unanimity_counterexample()
        report = solve_exact(tasks, profile, Objective.SUM_DEVIATION)
        assert report.optimum_count == 1
        assert report.schedule.order == ("d", "c", "e", "a", "b")

        tasks, profile, _ = kemeny_unanimity_counterexample()
        report = solve_exact(tasks, profile, Objective.PTA_KENDALL_TAU)
        assert report.schedule.order == ("a", "c", "d", "e", "f", "g", "b")

        tasks, profile, pair = deviation_neutrality_counterexample(k=20, v=400)
        report = solve_exact(tasks, profile, Objective.SUM_DEVIATION)
        assert report.schedule.order == ("b", "f", "a", "e", "d", "c")
        swapped = solve_exact(
            tasks, swap_tasks_in_profile(profile, *pair), Objective.SUM_DEVIATION
        )
        assert swapped.schedule.order == ("e", "a", "f", "b", "d", "c")

        _, profile, target, reduced = deviation_length_reduction_counterexample()
        verdict = lrm_probe(profile, "sum-dev", target, reduced)
        assert verdict.holds is False
        assert verdict.witness["start_after"] > verdict.witness["start_before"]


def test_04_pairwise_optima_respect_precedence_constraints(capsys):
    with criterion(capsys, 4, "pairwise optima respect precedence constraints"):
        qualifying = 0
        attempts = 0
        i = 0
        while qualifying < 500:
            assert attempts < 2000, "seeded stream should qualify quickly"
            model = MODELS[i % 2]
            n = 4 + (i % 5)
            v = (5, 50)[(i // 2) % 2]
            tasks, profile = generate(
                GenSpec(n, v, model, (1, 10), instance_seed(77, i))
            )
            i += 1
            attempts += 1
            if find_pta_condorcet_schedule(profile) is None:
                continue
            qualifying += 1
            optima, complete = enumerate_optima(
                tasks, profile, Objective.PTA_KENDALL_TAU, cap=2000
            )
            assert complete
            for schedule in optima:
                assert is_pta_condorcet_consistent(schedule, profile).holds
        assert qualifying == 500


def test_05_deviation_is_a_metric_between_schedules(capsys):
    with criterion(capsys, 5, "deviation is a metric between schedules"):
        rng = np.random.default_rng(2024)

        def distance(tasks, a, b):
            return deviation(Schedule(a), PreferenceProfile.of(tasks, (b, 1)))

        for _ in range(1000):
            n = int(rng.integers(2, 7))
            ids = tuple(string.ascii_lowercase[:n])
            lengths = rng.integers(1, 8, size=n)
            tasks = TaskSet.of(*zip(ids, (int(x) for x in lengths)))
            x, y, z = (tuple(rng.permutation(ids)) for _ in range(3))
            assert distance(tasks, x, x) == 0
            d_xy = distance(tasks, x, y)
            assert d_xy == distance(tasks, y, x)
            assert (d_xy == 0) == (x == y)
            assert distance(tasks, x, z) <= d_xy + distance(tasks, y, z)


def test_06_scores_add_across_disjoint_electorates(capsys):
    with criterion(capsys, 6, "scores add across disjoint electorates"):
        rng = np.random.default_rng(606)
        samples = 0
        while samples < 200:
            n = int(rng.integers(3, 8))
            v = int(rng.integers(5, 31))
            model = MODELS[samples % 2]
            tasks, profile = generate(
                GenSpec(n, v, model, (1, 10), int(rng.integers(0, 2**31)))
            )
            part_a, part_b = [], []
            for schedule, mult in profile.groups:
                take = int(rng.integers(0, mult + 1))
                if take:
                    part_a.append((schedule, take))
                if mult - take:
                    part_b.append((schedule, mult - take))
            if not part_a or not part_b:
                continue
            union = profile
            first = PreferenceProfile(tasks, tuple(part_a))
            second = PreferenceProfile(tasks, tuple(part_b))
            sched = Schedule(tuple(rng.permutation(tasks.ids)))
            for objective in Objective:
                assert score(sched, union, objective) == score(
                    sched, first, objective
                ) + score(sched, second, objective)
            samples += 1


def test_07_swapping_equal_length_tasks_swaps_the_optima(capsys):
    with criterion(capsys, 7, "swapping equal-length tasks swaps the optima"):
        checked = 0
        for i in range(100):
            n = 4 + (i % 2)
            model = MODELS[i % 2]
            tasks, profile = generate(
                GenSpec(n, 7, model, (1, 3), instance_seed(901, i))
            )
            pair = next(
                (a, b)
                for a, b in itertools.combinations(tasks.ids, 2)
                if tasks.length(a) == tasks.length(b)
            )
            for objective in Objective:
                verdict = neutrality_probe(profile, *pair, objective)
                assert verdict.holds is True
            checked += 1
        assert checked == 100


def test_08_median_heuristic_quality(capsys):
    with criterion(capsys, 8, "median heuristic quality"):
        report = run_lmt_eval(
            n=10, v=100, instances=1000, seed=0,
            model="uniform", length_range=(1, 5), include_times=False,
        )
        by_rule = {row.rule: row.mean_ratio for row in report.rows}
        print(f"measured mean ratios: {by_rule}")
        assert 1.02 <= by_rule["lmt"] <= 1.10
        assert 1.00 <= by_rule["lmt-ls"] <= 1.02


def test_09_cross_rule_ratio_table(capsys):
    with criterion(capsys, 9, "cross-rule ratio table"):
        report = run_compare(
            models=("uniform", "plackett-luce"), ns=(5,), v=100,
            instances=300, seed=0, include_times=False,
        )
        cells = {
            (row.model, row.rule, row.metric): row.mean_ratio
            for row in report.rows
        }
        for (model, rule, metric), ratio in sorted(cells.items()):
            print(f"measured {model:15s} {rule:10s} under {metric:16s}: {ratio:.4f}")
        objective_of = {
            "sum-dev": "sum-deviation",
            "sum-tard": "sum-tardiness",
            "pta-kemeny": "pta-kendall-tau",
        }
        for model in ("uniform", "plackett-luce"):
            for rule, metric in objective_of.items():
                assert cells[(model, rule, metric)] == 1.0
        assert abs(cells[("uniform", "sum-tard", "sum-deviation")] - 1.06) <= 0.05
        assert abs(cells[("uniform", "pta-kemeny", "sum-deviation")] - 1.07) <= 0.05
        assert abs(cells[("plackett-luce", "sum-tard", "sum-deviation")] - 1.06) <= 0.05
        assert abs(cells[("plackett-luce", "pta-kemeny", "sum-deviation")] - 1.07) <= 0.05


def test_10_length_reduction_audit(capsys):
    with criterion(capsys, 10, "length-reduction audit"):
        report = run_lrm_audit(instances=1200, n=8, v=50, seed=0, include_times=False)
        rates = {
            row.rule: row.violation_rate
            for row in report.rows
            if row.model == "all"
        }
        print(f"violation rates over all 1200 instances: {rates}")
        assert rates["sum-tard"] == 0.0
        assert rates["pta-kemeny"] == 0.0
        assert 0.04 <= rates["sum-dev"] <= 0.14


def test_11_median_heuristic_can_be_arbitrarily_bad(capsys):
    with criterion(capsys, 11, "median heuristic can be arbitrarily bad"):
        ratios = []
        for p, n, v in ((4, 6, 10), (16, 12, 40), (64, 24, 160)):
            tasks, profile, alternative = median_trap_family(p, n, v)
            measured = deviation(lmt(tasks, profile), profile)
            heuristic_form, alternative_form = median_trap_scores(p, n, v)
            assert measured == heuristic_form == v * p * n + v * n - 3 * v - 4 * p
            assert deviation(alternative, profile) == alternative_form
            ratios.append(measured / alternative_form)
        assert ratios[0] < ratios[1] < ratios[2]


def test_12_twelve_task_runtime_budget(capsys):
    with criterion(capsys, 12, "twelve-task runtime budget"):
        tasks, profile = generate(GenSpec(12, 50, "uniform", (1, 10), 2026))
        for objective in Objective:
            started = time.perf_counter()
            report = solve_exact(tasks, profile, objective)
            elapsed = time.perf_counter() - started
            print(f"{objective.value}: {elapsed:.3f}s")
            assert elapsed < 60.0
