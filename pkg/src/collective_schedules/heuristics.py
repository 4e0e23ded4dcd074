"""Fast approximate rules: median sorting and adjacent-swap descent.

``lmt`` orders tasks by the lower median of their completion times across
the voters, a linear-time stand-in for the exact solvers.  ``local_search``
then repeatedly applies the best adjacent swap.  Neither is guaranteed
optimal (see ``gallery.median_trap_family`` for how bad the sort alone can
get) but together they land within a couple percent on random instances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MismatchedTaskSetError
from .metrics import pairwise_counts, pta_kendall_tau, score
from .model import (
    Objective,
    PreferenceProfile,
    Schedule,
    TaskSet,
    _require_permutation,
    completion_times,
    require_valid_profile,
)


@dataclass(frozen=True, slots=True)
class LocalSearchStep:
    """One applied swap: position swapped with its right neighbor."""

    position: int
    score_before: int
    score_after: int


@dataclass(frozen=True, slots=True)
class LocalSearchTrace:
    """What the descent did and why it stopped."""

    steps: tuple[LocalSearchStep, ...]
    terminated_by: str  # "local-optimum" or "step-cap"
    start_score: int
    final_score: int


def median_completion_times(profile: PreferenceProfile) -> dict[str, int]:
    """Lower median of each task's completion time over all voters.

    With ``v`` voters this is the ceil(v/2)-th smallest completion,
    multiplicities expanded.
    """
    require_valid_profile(profile)
    tasks = profile.tasks
    gathered: dict[str, list[tuple[int, int]]] = {tid: [] for tid in tasks.ids}
    for schedule, mult in profile.groups:
        for tid, done in completion_times(schedule, tasks).items():
            gathered[tid].append((done, mult))
    threshold = (profile.voter_count + 1) // 2
    medians: dict[str, int] = {}
    for tid, pairs in gathered.items():
        pairs.sort()
        seen = 0
        for done, mult in pairs:
            seen += mult
            if seen >= threshold:
                medians[tid] = done
                break
    return medians


def lmt(tasks: TaskSet, profile: PreferenceProfile) -> Schedule:
    """Schedule tasks by nondecreasing median completion time.

    Ties go to the shorter task, then to the smaller task id.
    """
    if tasks != profile.tasks:
        raise MismatchedTaskSetError("profile was built over a different task set")
    medians = median_completion_times(profile)
    order = sorted(tasks.ids, key=lambda tid: (medians[tid], tasks.length(tid), tid))
    return Schedule(tuple(order))


def local_search(
    schedule: Schedule,
    profile: PreferenceProfile,
    objective: Objective,
    max_steps: int | None = None,
) -> tuple[Schedule, LocalSearchTrace]:
    """Best-improvement descent over adjacent transpositions.

    Each step scores all n-1 adjacent swaps and applies the one with the
    largest improvement (leftmost on ties), stopping at a local optimum or
    after ``max_steps`` swaps (default 2n).  Scores along the trace are
    strictly decreasing.
    """
    objective = Objective(objective)
    require_valid_profile(profile)
    tasks = profile.tasks
    _require_permutation(schedule, tasks)
    if max_steps is None:
        max_steps = 2 * tasks.n
    if max_steps < 0:
        raise ValueError("max_steps must be nonnegative")

    counts = pairwise_counts(profile) if objective is Objective.PTA_KENDALL_TAU else None

    def evaluate(s: Schedule) -> int:
        if counts is not None:
            return pta_kendall_tau(s, profile, counts)
        return score(s, profile, objective)

    current = schedule
    current_score = evaluate(schedule)
    start_score = current_score
    steps: list[LocalSearchStep] = []
    terminated_by = "local-optimum"
    while True:
        if len(steps) >= max_steps:
            terminated_by = "step-cap"
            break
        best_pos = None
        best_score = current_score
        order = current.order
        for pos in range(len(order) - 1):
            swapped = list(order)
            swapped[pos], swapped[pos + 1] = swapped[pos + 1], swapped[pos]
            value = evaluate(Schedule(tuple(swapped)))
            if value < best_score:  # strict: leftmost candidate wins ties
                best_score = value
                best_pos = pos
        if best_pos is None:
            break
        swapped = list(order)
        swapped[best_pos], swapped[best_pos + 1] = swapped[best_pos + 1], swapped[best_pos]
        current = Schedule(tuple(swapped))
        steps.append(LocalSearchStep(best_pos, current_score, best_score))
        current_score = best_score

    trace = LocalSearchTrace(tuple(steps), terminated_by, start_score, current_score)
    return current, trace
