"""Distance metrics between schedules and voter profiles.

Three profile metrics drive the aggregation rules:

* ``deviation``: sum over voters and tasks of |completion in the candidate
  schedule - completion in the voter's schedule|.
* ``tardiness``: like deviation but only counting lateness, i.e.
  max(0, candidate completion - voter completion).
* ``pta_kendall_tau``: processing-time-aware Kendall tau.  Every ordered
  pair the candidate schedule places as (a before b) against a voter who
  wanted b first costs the length of a, the task that was moved ahead.

All scores are exact Python integers.  The pairwise order counts are built
once per profile (O(v n^2)) so that evaluating one more candidate schedule
costs O(n^2) rather than another scan over the voters.

``kendall_tau`` and ``spearman_footrule`` are the classical unweighted
distances between two schedules; with unit-length tasks they coincide with
``pta_kendall_tau`` and ``deviation`` against a single voter.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MismatchedTaskSetError
from .model import (
    Objective,
    PreferenceProfile,
    Schedule,
    TaskSet,
    _require_permutation,
    require_valid_profile,
)


@dataclass(frozen=True, slots=True)
class PairwiseCountMatrix:
    """Voter counts for every ordered task pair.

    ``counts[i][j]`` is the number of voters (with multiplicity) whose
    schedule runs the task with declared index ``i`` before the one with
    declared index ``j``.  The diagonal is zero and for distinct tasks
    ``counts[i][j] + counts[j][i]`` equals the voter count.
    """

    tasks: TaskSet
    counts: tuple[tuple[int, ...], ...]
    voter_count: int

    def before(self, a: str, b: str) -> int:
        """Number of voters scheduling task ``a`` before task ``b``."""
        return self.counts[self.tasks.index(a)][self.tasks.index(b)]


def pairwise_counts(profile: PreferenceProfile) -> PairwiseCountMatrix:
    """Count, for every ordered pair, the voters placing one task first."""
    require_valid_profile(profile)
    tasks = profile.tasks
    n = tasks.n
    counts = [[0] * n for _ in range(n)]
    for order, mult in _indexed_groups(profile):
        pos = [0] * n
        for rank, i in enumerate(order):
            pos[i] = rank
        for i in range(n):
            for j in range(i + 1, n):
                if pos[i] < pos[j]:
                    counts[i][j] += mult
                else:
                    counts[j][i] += mult
    return PairwiseCountMatrix(tasks, tuple(tuple(row) for row in counts), profile.voter_count)


def deviation(schedule: Schedule, profile: PreferenceProfile) -> int:
    """Total absolute completion-time deviation from all voters."""
    comp, dues, mults = _prepare(schedule, profile)
    return _deviation_kernel(comp, dues, mults)


def tardiness(schedule: Schedule, profile: PreferenceProfile) -> int:
    """Total lateness versus every voter's preferred completion times."""
    comp, dues, mults = _prepare(schedule, profile)
    return _tardiness_kernel(comp, dues, mults)


def pta_kendall_tau(
    schedule: Schedule,
    profile: PreferenceProfile,
    counts: PairwiseCountMatrix | None = None,
) -> int:
    """Processing-time-aware Kendall tau score of ``schedule``.

    Pass a precomputed ``counts`` matrix when scoring many schedules
    against the same profile.
    """
    if counts is None:
        counts = pairwise_counts(profile)
    elif counts.tasks != profile.tasks:
        raise MismatchedTaskSetError("count matrix was built for a different task set")
    tasks = profile.tasks
    _require_permutation(schedule, tasks)
    order = [tasks.index(tid) for tid in schedule.order]
    return _pta_kernel(order, tasks.lengths, counts.counts)


def score(schedule: Schedule, profile: PreferenceProfile, objective: Objective) -> int:
    """Evaluate one schedule under the given objective."""
    objective = Objective(objective)
    if objective is Objective.SUM_DEVIATION:
        return deviation(schedule, profile)
    if objective is Objective.SUM_TARDINESS:
        return tardiness(schedule, profile)
    return pta_kendall_tau(schedule, profile)


def kendall_tau(a: Schedule, b: Schedule, tasks: TaskSet | None = None) -> int:
    """Number of task pairs the two schedules order oppositely.

    ``tasks`` is optional; without it the two orders only need to be
    permutations of one another.
    """
    pos_a, pos_b = _pair_positions(a, b, tasks)
    n = len(pos_a)
    out = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (pos_a[i] < pos_a[j]) != (pos_b[i] < pos_b[j]):
                out += 1
    return out


def spearman_footrule(a: Schedule, b: Schedule, tasks: TaskSet | None = None) -> int:
    """Sum over tasks of the absolute difference in position."""
    pos_a, pos_b = _pair_positions(a, b, tasks)
    return sum(abs(pa - pb) for pa, pb in zip(pos_a, pos_b))


# ---------------------------------------------------------------------------
# index-space kernels, shared with the enumeration oracle and local search

def _indexed_groups(profile: PreferenceProfile) -> list[tuple[tuple[int, ...], int]]:
    tasks = profile.tasks
    return [(tuple(tasks.index(tid) for tid in s.order), m) for s, m in profile.groups]


def _completions_by_index(order: tuple[int, ...], lengths: tuple[int, ...]) -> list[int]:
    comp = [0] * len(order)
    elapsed = 0
    for i in order:
        elapsed += lengths[i]
        comp[i] = elapsed
    return comp


def _due_vectors(profile: PreferenceProfile) -> tuple[list[list[int]], list[int]]:
    """Per voter group, each task's preferred completion time (by index)."""
    lengths = profile.tasks.lengths
    dues: list[list[int]] = []
    mults: list[int] = []
    for order, mult in _indexed_groups(profile):
        dues.append(_completions_by_index(order, lengths))
        mults.append(mult)
    return dues, mults


def _deviation_kernel(comp: list[int], dues: list[list[int]], mults: list[int]) -> int:
    total = 0
    for due, mult in zip(dues, mults):
        total += mult * sum(abs(c - d) for c, d in zip(comp, due))
    return total


def _tardiness_kernel(comp: list[int], dues: list[list[int]], mults: list[int]) -> int:
    total = 0
    for due, mult in zip(dues, mults):
        group = 0
        for c, d in zip(comp, due):
            if c > d:
                group += c - d
        total += mult * group
    return total


def _pta_kernel(
    order: list[int] | tuple[int, ...],
    lengths: tuple[int, ...],
    counts: tuple[tuple[int, ...], ...],
) -> int:
    # cost of running `earlier` before `later`: lengths[earlier] per voter
    # who wanted the opposite order
    total = 0
    n = len(order)
    for r in range(n):
        earlier = order[r]
        weight = lengths[earlier]
        for c in range(r + 1, n):
            total += weight * counts[order[c]][earlier]
    return total


def _prepare(schedule: Schedule, profile: PreferenceProfile):
    require_valid_profile(profile)
    tasks = profile.tasks
    _require_permutation(schedule, tasks)
    order = tuple(tasks.index(tid) for tid in schedule.order)
    comp = _completions_by_index(order, tasks.lengths)
    dues, mults = _due_vectors(profile)
    return comp, dues, mults


def _positions(schedule: Schedule, tasks: TaskSet) -> list[int]:
    _require_permutation(schedule, tasks)
    pos = [0] * tasks.n
    for rank, tid in enumerate(schedule.order):
        pos[tasks.index(tid)] = rank
    return pos


def _pair_positions(
    a: Schedule, b: Schedule, tasks: TaskSet | None
) -> tuple[list[int], list[int]]:
    if tasks is not None:
        return _positions(a, tasks), _positions(b, tasks)
    rank_a = {tid: rank for rank, tid in enumerate(a.order)}
    if len(rank_a) != len(a.order):
        raise MismatchedTaskSetError("first schedule repeats a task")
    if sorted(b.order) != sorted(a.order):
        raise MismatchedTaskSetError("schedules cover different tasks")
    ids = list(a.order)
    pos_b = {tid: rank for rank, tid in enumerate(b.order)}
    return [rank_a[tid] for tid in ids], [pos_b[tid] for tid in ids]
