"""Exact minimization of the three scheduling objectives.

Two independent routes to the optimum:

* ``brute_force_oracle`` scores every one of the n! permutations with the
  direct metric formulas.  It is the reference implementation and is kept
  deliberately simple; it refuses instances with more than 9 tasks.
* ``solve_exact`` runs a dynamic program over the 2^n subsets of tasks.
  Appending one task to a fixed prefix changes each objective by an amount
  that depends only on the prefix load (for deviation and tardiness) or on
  the set of tasks still waiting (for the pairwise objective), so optimal
  completions of every subset can be combined bottom-up.

Both report the same exact integer optimum; ties are always broken toward
the schedule whose sequence of declared task indices is lexicographically
smallest.
"""

from __future__ import annotations

import time
from bisect import bisect_right
from dataclasses import dataclass
from itertools import permutations
from math import factorial

from .errors import MismatchedTaskSetError, TooManyTasksError
from .metrics import (
    _completions_by_index,
    _deviation_kernel,
    _due_vectors,
    _pta_kernel,
    _tardiness_kernel,
    pairwise_counts,
)
from .model import Objective, PreferenceProfile, Schedule, TaskSet, require_valid_profile

ORACLE_MAX_TASKS = 9


@dataclass(frozen=True, slots=True)
class SolveOptions:
    """Knobs for :func:`solve_exact`.

    ``optimum_cap`` bounds only the enumerated ``optima`` list; the optimum
    count itself is always exact.  ``tie_break`` currently admits a single
    policy, the lexicographic one described in the module docstring.
    """

    enumerate_all: bool = False
    optimum_cap: int = 1000
    tie_break: str = "lexicographic"
    max_tasks: int = 20

    def __post_init__(self) -> None:
        if self.optimum_cap < 1:
            raise ValueError("optimum_cap must be at least 1")
        if self.tie_break != "lexicographic":
            raise ValueError(f"unsupported tie_break {self.tie_break!r}")
        if self.max_tasks < 1:
            raise ValueError("max_tasks must be at least 1")


@dataclass(frozen=True, slots=True)
class SolveReport:
    """Outcome of one exact solve.

    ``schedule`` is the lexicographically least optimal schedule.
    ``optima`` is ``None`` unless enumeration was requested; when present
    it is sorted lexicographically and ``optima_complete`` says whether it
    holds every optimum or was cut off at the cap.
    """

    objective: Objective
    optimal_score: int
    schedule: Schedule
    optimum_count: int
    optima: tuple[Schedule, ...] | None
    optima_complete: bool
    states_explored: int
    wall_time_s: float


def brute_force_oracle(tasks: TaskSet, profile: PreferenceProfile, objective: Objective) -> SolveReport:
    """Minimize by scoring all permutations; the ground truth for tests."""
    started = time.perf_counter()
    objective = Objective(objective)
    n = tasks.n
    if n > ORACLE_MAX_TASKS:
        raise TooManyTasksError(f"oracle handles at most {ORACLE_MAX_TASKS} tasks, got {n}")
    _require_same_tasks(tasks, profile)
    require_valid_profile(profile)

    lengths = tasks.lengths
    if objective is Objective.PTA_KENDALL_TAU:
        counts = pairwise_counts(profile).counts

        def evaluate(order: tuple[int, ...]) -> int:
            return _pta_kernel(order, lengths, counts)

    else:
        dues, mults = _due_vectors(profile)
        kernel = _deviation_kernel if objective is Objective.SUM_DEVIATION else _tardiness_kernel

        def evaluate(order: tuple[int, ...]) -> int:
            return kernel(_completions_by_index(order, lengths), dues, mults)

    best: int | None = None
    argmins: list[tuple[int, ...]] = []
    for order in permutations(range(n)):  # ascending lex over index tuples
        value = evaluate(order)
        if best is None or value < best:
            best = value
            argmins = [order]
        elif value == best:
            argmins.append(order)

    ids = tasks.ids
    optima = tuple(Schedule(tuple(ids[i] for i in order)) for order in argmins)
    assert best is not None
    return SolveReport(
        objective=objective,
        optimal_score=best,
        schedule=optima[0],
        optimum_count=len(optima),
        optima=optima,
        optima_complete=True,
        states_explored=factorial(n),
        wall_time_s=time.perf_counter() - started,
    )


def solve_exact(
    tasks: TaskSet,
    profile: PreferenceProfile,
    objective: Objective,
    options: SolveOptions | None = None,
) -> SolveReport:
    """Minimize the objective with a subset dynamic program.

    State: the set of tasks already scheduled (as a bitmask over declared
    indices).  Value: the best achievable cost of scheduling the remaining
    tasks.  Memory and time grow as 2^n, hence the ``max_tasks`` guard.
    """
    started = time.perf_counter()
    objective = Objective(objective)
    options = options or SolveOptions()
    n = tasks.n
    if n > options.max_tasks:
        raise TooManyTasksError(f"exact solver limited to {options.max_tasks} tasks, got {n}")
    _require_same_tasks(tasks, profile)
    require_valid_profile(profile)

    lengths = tasks.lengths
    full = (1 << n) - 1
    bit = [1 << i for i in range(n)]

    # prefix load per mask, built from each mask's lowest set bit
    load = [0] * (full + 1)
    low_index = {bit[i]: i for i in range(n)}
    for mask in range(1, full + 1):
        low = mask & -mask
        load[mask] = load[mask ^ low] + lengths[low_index[low]]

    if objective is Objective.PTA_KENDALL_TAU:
        counts = pairwise_counts(profile).counts
        cols = [[row[i] for row in counts] for i in range(n)]  # cols[i][j] = voters wanting j before i

        def step(mask: int, i: int, rem: list[int]) -> int:
            col = cols[i]
            return lengths[i] * sum(col[j] for j in rem if j != i)

    else:
        table = _due_prefix_tables(profile)
        tardy_only = objective is Objective.SUM_TARDINESS

        def step(mask: int, i: int, rem: list[int]) -> int:
            finish = load[mask] + lengths[i]
            dues, cum_mult, cum_due, total_mult, total_due = table[i]
            r = bisect_right(dues, finish)
            late = finish * cum_mult[r] - cum_due[r]
            if tardy_only:
                return late
            return late + (total_due - cum_due[r]) - finish * (total_mult - cum_mult[r])

    # best completion cost for every prefix set, filled from the full set down
    h = [0] * (full + 1)
    ways = [0] * (full + 1)
    ways[full] = 1
    for mask in range(full - 1, -1, -1):
        rem = [i for i in range(n) if not mask & bit[i]]
        best = None
        for i in rem:
            cand = step(mask, i, rem) + h[mask | bit[i]]
            if best is None or cand < best:
                best = cand
        h[mask] = best
        total_ways = 0
        for i in rem:
            if step(mask, i, rem) + h[mask | bit[i]] == best:
                total_ways += ways[mask | bit[i]]
        ways[mask] = total_ways

    ids = tasks.ids

    # lexicographically least optimum: always take the smallest viable index
    order: list[str] = []
    mask = 0
    while mask != full:
        rem = [i for i in range(n) if not mask & bit[i]]
        for i in rem:
            if step(mask, i, rem) + h[mask | bit[i]] == h[mask]:
                order.append(ids[i])
                mask |= bit[i]
                break
    representative = Schedule(tuple(order))

    optima: tuple[Schedule, ...] | None = None
    complete = True
    if options.enumerate_all:
        found: list[Schedule] = []
        complete = _enumerate(0, [], full, bit, h, step, ids, n, options.optimum_cap, found)
        optima = tuple(found)

    return SolveReport(
        objective=objective,
        optimal_score=h[0],
        schedule=representative,
        optimum_count=ways[0],
        optima=optima,
        optima_complete=complete,
        states_explored=full + 1,
        wall_time_s=time.perf_counter() - started,
    )


def enumerate_optima(
    tasks: TaskSet,
    profile: PreferenceProfile,
    objective: Objective,
    cap: int = 1000,
) -> tuple[tuple[Schedule, ...], bool]:
    """All optimal schedules (lexicographic order) up to ``cap``.

    Returns the schedules and a flag telling whether the list is complete.
    """
    report = solve_exact(tasks, profile, objective, SolveOptions(enumerate_all=True, optimum_cap=cap))
    assert report.optima is not None
    return report.optima, report.optima_complete


def _enumerate(mask, prefix, full, bit, h, step, ids, n, cap, found) -> bool:
    """Depth-first walk over optimal extensions; False when cut at the cap."""
    if mask == full:
        if len(found) >= cap:
            return False
        found.append(Schedule(tuple(prefix)))
        return True
    rem = [i for i in range(n) if not mask & bit[i]]
    for i in rem:
        if step(mask, i, rem) + h[mask | bit[i]] == h[mask]:
            if not _enumerate(mask | bit[i], prefix + [ids[i]], full, bit, h, step, ids, n, cap, found):
                return False
    return True


def _due_prefix_tables(profile: PreferenceProfile):
    """Per task: sorted preferred completions with cumulative weight sums."""
    dues, mults = _due_vectors(profile)
    n = profile.tasks.n
    tables = []
    for i in range(n):
        pairs = sorted((group[i], m) for group, m in zip(dues, mults))
        cum_mult = [0]
        cum_due = [0]
        for d, m in pairs:
            cum_mult.append(cum_mult[-1] + m)
            cum_due.append(cum_due[-1] + m * d)
        sorted_dues = [d for d, _ in pairs]
        tables.append((sorted_dues, cum_mult, cum_due, cum_mult[-1], cum_due[-1]))
    return tables


def _require_same_tasks(tasks: TaskSet, profile: PreferenceProfile) -> None:
    if tasks != profile.tasks:
        raise MismatchedTaskSetError("profile was built over a different task set")
