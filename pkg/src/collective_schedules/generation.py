"""Random instance generation for experiments and audits.

Two ballot models:

* ``uniform``: every voter draws an independent uniformly random order.
* ``plackett-luce``: the instance draws one utility per task from (0, 1];
  each voter then builds an order by repeatedly picking among the
  remaining tasks with probability proportional to utility.  Voters are
  i.i.d. but correlated through the shared utilities, so popular tasks
  cluster early.

Task lengths are uniform integers over ``length_range`` (default 1..10).
Everything is driven by one ``numpy`` generator, so equal specs give
equal instances.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidSpecError
from .model import PreferenceProfile, TaskSet

MODEL_UNIFORM = "uniform"
MODEL_PLACKETT_LUCE = "plackett-luce"
MODELS = (MODEL_UNIFORM, MODEL_PLACKETT_LUCE)

# CLI shorthands: the correlated model is the Plackett-Luce one
MODEL_ALIASES = {
    "u": MODEL_UNIFORM,
    "uniform": MODEL_UNIFORM,
    "c": MODEL_PLACKETT_LUCE,
    "correlated": MODEL_PLACKETT_LUCE,
    "pl": MODEL_PLACKETT_LUCE,
    "plackett-luce": MODEL_PLACKETT_LUCE,
}


def canonical_model(name: str) -> str:
    try:
        return MODEL_ALIASES[name.lower()]
    except KeyError:
        raise InvalidSpecError(f"unknown ballot model {name!r}") from None


@dataclass(frozen=True, slots=True)
class GenSpec:
    """Parameters of one random instance.

    ``utilities`` overrides the Plackett-Luce utility draw (one positive
    weight per task); it exists so tests can pin degenerate weightings.
    """

    n: int
    v: int
    model: str = MODEL_UNIFORM
    length_range: tuple[int, int] = (1, 10)
    seed: int = 0
    utilities: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidSpecError(f"need at least one task, got n={self.n!r}")
        if not isinstance(self.v, int) or self.v < 1:
            raise InvalidSpecError(f"need at least one voter, got v={self.v!r}")
        if self.model not in MODELS:
            raise InvalidSpecError(f"unknown ballot model {self.model!r}")
        lo, hi = self.length_range
        if not (isinstance(lo, int) and isinstance(hi, int) and 1 <= lo <= hi):
            raise InvalidSpecError(f"bad length range {self.length_range!r}")
        if self.utilities is not None:
            if self.model != MODEL_PLACKETT_LUCE:
                raise InvalidSpecError("utilities only apply to the plackett-luce model")
            if len(self.utilities) != self.n or any(u <= 0 for u in self.utilities):
                raise InvalidSpecError("need one positive utility per task")


def generate(spec: GenSpec) -> tuple[TaskSet, PreferenceProfile]:
    """Draw one instance; equal specs produce identical instances."""
    rng = np.random.default_rng(spec.seed)
    lo, hi = spec.length_range
    lengths = rng.integers(lo, hi + 1, size=spec.n)
    width = len(str(spec.n))
    ids = tuple(f"t{i + 1:0{width}d}" for i in range(spec.n))
    tasks = TaskSet(tuple((tid, int(length)) for tid, length in zip(ids, lengths)))

    if spec.model == MODEL_UNIFORM:
        ballots = [tuple(ids[i] for i in rng.permutation(spec.n)) for _ in range(spec.v)]
    else:
        if spec.utilities is not None:
            utilities = np.asarray(spec.utilities, dtype=float)
        else:
            utilities = 1.0 - rng.random(spec.n)  # uniform on (0, 1]
        ballots = [_plackett_luce_ballot(rng, ids, utilities) for _ in range(spec.v)]

    return tasks, PreferenceProfile.from_orders(tasks, ballots)


def _plackett_luce_ballot(rng, ids, utilities) -> tuple[str, ...]:
    remaining = list(range(len(ids)))
    order: list[str] = []
    while remaining:
        weights = [utilities[i] for i in remaining]
        total = sum(weights)
        draw = rng.random() * total
        acc = 0.0
        chosen = len(remaining) - 1  # guard against float round-off
        for pos, w in enumerate(weights):
            acc += w
            if draw < acc:
                chosen = pos
                break
        order.append(ids[remaining.pop(chosen)])
    return tuple(order)
