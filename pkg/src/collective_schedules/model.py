"""Core data model for collective scheduling.

A *task set* is an ordered list of tasks with positive integer lengths.  A
*schedule* is one permutation of those tasks, executed back to back on a
single machine starting at time 0, so the completion time of a task is the
sum of the lengths scheduled up to and including it.  Voters submit their
preferred schedules; identical submissions are stored once with a
multiplicity.  The declared order of the task set is the canonical order
used for every lexicographic tie-break in the package.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .errors import DuplicateTaskError, MismatchedTaskSetError, UnknownTaskError


class Objective(str, Enum):
    """Aggregation objectives a consensus schedule can minimize."""

    SUM_DEVIATION = "sum-deviation"
    SUM_TARDINESS = "sum-tardiness"
    PTA_KENDALL_TAU = "pta-kendall-tau"


@dataclass(frozen=True, slots=True)
class TaskSet:
    """Ordered collection of (task_id, length) pairs.

    Ids are opaque strings and must be unique; lengths are positive
    integers.  The declared order defines the canonical task indexing.
    """

    tasks: tuple[tuple[str, int], ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        frozen = tuple((tid, length) for tid, length in self.tasks)
        object.__setattr__(self, "tasks", frozen)
        index: dict[str, int] = {}
        for pos, (tid, length) in enumerate(frozen):
            if not isinstance(tid, str) or not tid:
                raise ValueError(f"task id must be a non-empty string, got {tid!r}")
            if not isinstance(length, int) or isinstance(length, bool) or length < 1:
                raise ValueError(f"task {tid!r} needs a positive integer length, got {length!r}")
            if tid in index:
                raise DuplicateTaskError(f"duplicate task id {tid!r}")
            index[tid] = pos
        if not index:
            raise ValueError("a task set needs at least one task")
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, *tasks: tuple[str, int]) -> "TaskSet":
        return cls(tuple(tasks))

    @property
    def n(self) -> int:
        return len(self.tasks)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(tid for tid, _ in self.tasks)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(length for _, length in self.tasks)

    @property
    def total_load(self) -> int:
        return sum(self.lengths)

    def index(self, task_id: str) -> int:
        try:
            return self._index[task_id]
        except KeyError:
            raise UnknownTaskError(f"unknown task id {task_id!r}") from None

    def length(self, task_id: str) -> int:
        return self.tasks[self.index(task_id)][1]

    def __contains__(self, task_id: str) -> bool:
        return task_id in self._index

    def with_length(self, task_id: str, new_length: int) -> "TaskSet":
        """Copy of this task set with one task's length replaced."""
        pos = self.index(task_id)
        updated = list(self.tasks)
        updated[pos] = (task_id, new_length)
        return TaskSet(tuple(updated))


@dataclass(frozen=True, slots=True)
class Schedule:
    """One execution order over a task set (a permutation of its ids)."""

    order: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", tuple(self.order))

    @classmethod
    def of(cls, *order: str) -> "Schedule":
        return cls(order)

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def position(self, task_id: str) -> int:
        try:
            return self.order.index(task_id)
        except ValueError:
            raise UnknownTaskError(f"task {task_id!r} not in schedule") from None

    def swap(self, a: str, b: str) -> "Schedule":
        """Schedule with the positions of tasks ``a`` and ``b`` exchanged."""
        if a == b:
            return self
        pa, pb = self.position(a), self.position(b)
        order = list(self.order)
        order[pa], order[pb] = order[pb], order[pa]
        return Schedule(tuple(order))


@dataclass(frozen=True, slots=True)
class PreferenceProfile:
    """Voters' preferred schedules, grouped with multiplicities.

    The profile is a plain record: it stores whatever it is given so that
    :func:`validate_profile` can report defects.  Scoring and solving entry
    points reject invalid profiles up front.
    """

    tasks: TaskSet
    groups: tuple[tuple[Schedule, int], ...]

    def __post_init__(self) -> None:
        frozen = tuple((schedule, mult) for schedule, mult in self.groups)
        object.__setattr__(self, "groups", frozen)

    @classmethod
    def of(cls, tasks: TaskSet, *groups: tuple[Sequence[str], int]) -> "PreferenceProfile":
        """Build a profile from (order, multiplicity) pairs."""
        return cls(tasks, tuple((Schedule(tuple(order)), int(mult)) for order, mult in groups))

    @classmethod
    def from_orders(cls, tasks: TaskSet, orders: Iterable[Sequence[str]]) -> "PreferenceProfile":
        """Collapse a stream of individual ballots into grouped form.

        Groups appear sorted by canonical task indices so that equal ballot
        multisets always produce equal profiles.
        """
        counted = Counter(tuple(order) for order in orders)
        key = lambda order: tuple(tasks.index(tid) for tid in order)
        return cls(tasks, tuple((Schedule(o), m) for o, m in sorted(counted.items(), key=lambda kv: key(kv[0]))))

    @property
    def voter_count(self) -> int:
        return sum(mult for _, mult in self.groups)


@dataclass(frozen=True, slots=True)
class ProfileDefect:
    """One problem found while validating a profile."""

    group: int | None
    code: str
    message: str


@dataclass(frozen=True, slots=True)
class ProfileValidation:
    """Outcome of :func:`validate_profile`."""

    ok: bool
    voter_count: int
    task_count: int
    defects: tuple[ProfileDefect, ...]


def completion_times(schedule: Schedule, tasks: TaskSet) -> dict[str, int]:
    """Completion time of every task under ``schedule``.

    Tasks run back to back from time 0, so task k at position j completes at
    the sum of the lengths of positions 0..j.  Raises if the schedule is not
    a permutation of ``tasks``.
    """
    _require_permutation(schedule, tasks)
    out: dict[str, int] = {}
    elapsed = 0
    for tid in schedule.order:
        elapsed += tasks.length(tid)
        out[tid] = elapsed
    return out


def validate_profile(profile: PreferenceProfile, tasks: TaskSet | None = None) -> ProfileValidation:
    """Check a profile against a task set and report every defect found.

    ``tasks`` defaults to the profile's own task set; passing a different
    one flags the mismatch as a defect.
    """
    tasks = tasks if tasks is not None else profile.tasks
    defects: list[ProfileDefect] = []
    if tasks != profile.tasks:
        defects.append(ProfileDefect(None, "mismatched-task-set", "profile was built over a different task set"))
    if not profile.groups:
        defects.append(ProfileDefect(None, "no-voters", "profile has no voter groups"))
    voters = 0
    for g, (schedule, mult) in enumerate(profile.groups):
        if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
            defects.append(ProfileDefect(g, "bad-multiplicity", f"multiplicity must be a positive integer, got {mult!r}"))
        else:
            voters += mult
        seen: set[str] = set()
        for tid in schedule.order:
            if tid not in tasks:
                defects.append(ProfileDefect(g, "unknown-task", f"group {g} names unknown task {tid!r}"))
            elif tid in seen:
                defects.append(ProfileDefect(g, "duplicate-task", f"group {g} repeats task {tid!r}"))
            seen.add(tid)
        missing = [tid for tid in tasks.ids if tid not in seen]
        if missing:
            defects.append(ProfileDefect(g, "missing-task", f"group {g} is missing task(s) {missing}"))
    if not defects and voters < 1:
        defects.append(ProfileDefect(None, "no-voters", "profile has zero voters"))
    return ProfileValidation(ok=not defects, voter_count=voters, task_count=tasks.n, defects=tuple(defects))


def require_valid_profile(profile: PreferenceProfile) -> None:
    """Raise on the first defect that makes a profile unusable for scoring."""
    report = validate_profile(profile)
    if report.ok:
        return
    defect = report.defects[0]
    if defect.code == "unknown-task":
        raise UnknownTaskError(defect.message)
    if defect.code in ("missing-task", "duplicate-task", "mismatched-task-set"):
        raise MismatchedTaskSetError(defect.message)
    raise ValueError(defect.message)


def swap_tasks_in_profile(profile: PreferenceProfile, a: str, b: str) -> PreferenceProfile:
    """Exchange tasks ``a`` and ``b`` in every voter's schedule.

    Multiplicities are untouched and applying the same swap twice returns
    the original profile.
    """
    profile.tasks.index(a), profile.tasks.index(b)  # reject unknown ids
    if a == b:
        return profile
    return PreferenceProfile(profile.tasks, tuple((s.swap(a, b), m) for s, m in profile.groups))


def _require_permutation(schedule: Schedule, tasks: TaskSet) -> None:
    # cheap full check: every id known, no repeats, nothing missing
    seen: set[str] = set()
    for tid in schedule.order:
        if tid not in tasks:
            raise UnknownTaskError(f"unknown task id {tid!r} in schedule")
        if tid in seen:
            raise MismatchedTaskSetError(f"task {tid!r} appears twice in schedule")
        seen.add(tid)
    if len(seen) != tasks.n:
        raise MismatchedTaskSetError("schedule does not cover the whole task set")
