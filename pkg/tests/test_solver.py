"""Exact solvers: optimal scores, tie-breaking, enumeration, and guards."""

import itertools

import numpy as np
import pytest

from collective_schedules import (
    GenSpec,
    Objective,
    PreferenceProfile,
    Schedule,
    SolveOptions,
    TaskSet,
    TooManyTasksError,
    brute_force_oracle,
    enumerate_optima,
    generate,
    solve_exact,
)

MODELS = ("uniform", "plackett-luce")


class TestWorkedExample:
    def test_deviation_optimum(self, example):
        tasks, profile = example
        report = solve_exact(tasks, profile, Objective.SUM_DEVIATION)
        assert report.optimal_score == 20
        assert report.schedule.order == ("2", "1", "3")
        assert report.optimum_count == 1
        assert report.states_explored == 8

    def test_tardiness_optimum(self, example):
        tasks, profile = example
        report = solve_exact(tasks, profile, Objective.SUM_TARDINESS)
        assert report.optimal_score == 11
        assert report.schedule.order == ("1", "2", "3")
        assert report.optimum_count == 1

    def test_pairwise_optima(self, example):
        tasks, profile = example
        options = SolveOptions(enumerate_all=True)
        report = solve_exact(tasks, profile, Objective.PTA_KENDALL_TAU, options)
        assert report.optimal_score == 12
        assert report.optimum_count == 2
        assert report.schedule.order == ("1", "2", "3")
        assert report.optima == (
            Schedule.of("1", "2", "3"),
            Schedule.of("1", "3", "2"),
        )
        assert report.optima_complete

    def test_optima_skipped_unless_requested(self, example):
        tasks, profile = example
        report = solve_exact(tasks, profile, Objective.PTA_KENDALL_TAU)
        assert report.optima is None
        assert report.optima_complete

    def test_enumeration_cap(self, example):
        tasks, profile = example
        options = SolveOptions(enumerate_all=True, optimum_cap=1)
        report = solve_exact(tasks, profile, Objective.PTA_KENDALL_TAU, options)
        assert len(report.optima) == 1
        assert not report.optima_complete
        assert report.optimum_count == 2  # exact count is independent of the cap

    def test_enumerate_optima_helper(self, example):
        tasks, profile = example
        optima, complete = enumerate_optima(tasks, profile, Objective.PTA_KENDALL_TAU)
        assert complete
        assert [s.order for s in optima] == [("1", "2", "3"), ("1", "3", "2")]


class TestOracle:
    def test_matches_worked_example(self, example):
        tasks, profile = example
        expected = {
            Objective.SUM_DEVIATION: (20, [("2", "1", "3")]),
            Objective.SUM_TARDINESS: (11, [("1", "2", "3")]),
            Objective.PTA_KENDALL_TAU: (12, [("1", "2", "3"), ("1", "3", "2")]),
        }
        for objective, (best, optima) in expected.items():
            report = brute_force_oracle(tasks, profile, objective)
            assert report.optimal_score == best
            assert [s.order for s in report.optima] == optima
            assert report.optima_complete
            assert report.states_explored == 6

    def test_size_guard(self):
        tasks = TaskSet.of(*((f"t{i}", 1) for i in range(10)))
        profile = PreferenceProfile.of(tasks, (tasks.ids, 1))
        with pytest.raises(TooManyTasksError):
            brute_force_oracle(tasks, profile, Objective.SUM_DEVIATION)

    def test_agrees_with_exact_solver_on_random_instances(self):
        rng = np.random.default_rng(99)
        enumerate_all = SolveOptions(enumerate_all=True, optimum_cap=720)
        for trial in range(30):
            n = int(rng.integers(3, 6))
            v = int(rng.integers(1, 12))
            model = MODELS[trial % 2]
            seed = int(rng.integers(0, 2**31))
            tasks, profile = generate(GenSpec(n, v, model, (1, 6), seed))
            for objective in Objective:
                oracle = brute_force_oracle(tasks, profile, objective)
                fast = solve_exact(tasks, profile, objective, enumerate_all)
                assert fast.optimal_score == oracle.optimal_score
                assert fast.optima == oracle.optima
                assert fast.optimum_count == len(oracle.optima)
                assert fast.schedule == oracle.optima[0]


class TestOptions:
    def test_defaults(self):
        options = SolveOptions()
        assert not options.enumerate_all
        assert options.optimum_cap == 1000
        assert options.tie_break == "lexicographic"
        assert options.max_tasks == 20

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"optimum_cap": 0},
            {"max_tasks": 0},
            {"tie_break": "random"},
        ],
    )
    def test_invalid_options_rejected(self, kwargs):
        with pytest.raises(ValueError):
            SolveOptions(**kwargs)

    def test_size_guard(self, example):
        tasks, profile = example
        with pytest.raises(TooManyTasksError):
            solve_exact(tasks, profile, Objective.SUM_DEVIATION, SolveOptions(max_tasks=2))


class TestTieBreaking:
    def test_representative_is_lexicographically_least(self):
        # Two unit tasks and two opposed voters tie every order;
        # the representative must follow the declared task order.
        tasks = TaskSet.of(("y", 1), ("x", 1))
        profile = PreferenceProfile.of(tasks, (("y", "x"), 1), (("x", "y"), 1))
        for objective in Objective:
            report = solve_exact(tasks, profile, objective, SolveOptions(enumerate_all=True))
            assert report.schedule.order == ("y", "x")
            assert report.optimum_count == 2
            assert report.optima == (Schedule.of("y", "x"), Schedule.of("x", "y"))

    def test_unanimous_profile_returns_the_ballot(self):
        tasks = TaskSet.of(("a", 3), ("b", 1), ("c", 2))
        profile = PreferenceProfile.of(tasks, (("c", "a", "b"), 7))
        for objective in Objective:
            report = solve_exact(tasks, profile, objective)
            assert report.schedule.order == ("c", "a", "b")
            assert report.optimal_score == 0
            assert report.optimum_count == 1


def _force_pair_before(profile: PreferenceProfile, a: str, b: str) -> PreferenceProfile:
    """Rewrite every ballot so task ``a`` sits immediately before ``b``."""
    orders = []
    for schedule, mult in profile.groups:
        order = [tid for tid in schedule.order if tid != a]
        order.insert(order.index(b), a)
        orders.extend([tuple(order)] * mult)
    return PreferenceProfile.from_orders(profile.tasks, orders)


class TestUnanimousPairStructure:
    """When every voter places a before b, optima keep the pair in order
    provided the earlier task is not longer than the later one."""

    def _corpus(self):
        rng = np.random.default_rng(4242)
        for trial in range(25):
            n = int(rng.integers(4, 6))
            v = int(rng.integers(3, 9))
            model = MODELS[trial % 2]
            seed = int(rng.integers(0, 2**31))
            tasks, profile = generate(GenSpec(n, v, model, (1, 3), seed))
            yield tasks, profile

    def test_every_pairwise_optimum_respects_shorter_first_pair(self):
        for tasks, profile in self._corpus():
            a, b = next(
                (x, y)
                for x, y in itertools.permutations(tasks.ids, 2)
                if tasks.length(x) <= tasks.length(y)
            )
            forced = _force_pair_before(profile, a, b)
            optima, complete = enumerate_optima(
                tasks, forced, Objective.PTA_KENDALL_TAU, cap=5000
            )
            assert complete
            assert all(s.position(a) < s.position(b) for s in optima)

    def test_some_tardiness_optimum_respects_shorter_first_pair(self):
        for tasks, profile in self._corpus():
            a, b = next(
                (x, y)
                for x, y in itertools.permutations(tasks.ids, 2)
                if tasks.length(x) <= tasks.length(y)
            )
            forced = _force_pair_before(profile, a, b)
            optima, complete = enumerate_optima(
                tasks, forced, Objective.SUM_TARDINESS, cap=5000
            )
            assert complete
            assert any(s.position(a) < s.position(b) for s in optima)

    def test_some_deviation_optimum_respects_equal_length_pair(self):
        for tasks, profile in self._corpus():
            pair = next(
                (
                    (x, y)
                    for x, y in itertools.combinations(tasks.ids, 2)
                    if tasks.length(x) == tasks.length(y)
                ),
                None,
            )
            if pair is None:
                continue
            a, b = pair
            forced = _force_pair_before(profile, a, b)
            optima, complete = enumerate_optima(
                tasks, forced, Objective.SUM_DEVIATION, cap=5000
            )
            assert complete
            assert any(s.position(a) < s.position(b) for s in optima)


class TestReportShape:
    def test_states_and_timing(self, example):
        tasks, profile = example
        report = solve_exact(tasks, profile, Objective.SUM_DEVIATION)
        assert report.objective is Objective.SUM_DEVIATION
        assert report.states_explored == 2 ** tasks.n
        assert report.wall_time_s >= 0.0

    def test_single_task_instance(self):
        tasks = TaskSet.of(("only", 4))
        profile = PreferenceProfile.of(tasks, (("only",), 3))
        for objective in Objective:
            report = solve_exact(tasks, profile, objective, SolveOptions(enumerate_all=True))
            assert report.schedule.order == ("only",)
            assert report.optimal_score == 0
            assert report.optima == (Schedule.of("only"),)
