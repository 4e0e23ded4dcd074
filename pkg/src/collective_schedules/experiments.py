"""Seeded experiment pipelines and their report format.

Every pipeline emits an :class:`ExperimentReport`: a fixed-schema CSV
(`model,n,v,rule,metric,mean_ratio,violation_rate,unique_fraction,mean_time`,
'.' decimals, ',' separator, blank cells where a column does not apply)
plus a JSON twin carrying per-instance detail.  Given the same seed the
scientific columns are reproducible bit for bit; ``mean_time`` holds
measured wall-clock seconds, so reports meant for byte diffing should be
produced with ``include_times=False``.
"""

from __future__ import annotations

import csv
import io as stringio
import json
import time
from dataclasses import dataclass
from math import inf
from statistics import fmean
from typing import Any, Iterable, Sequence

import numpy as np

from .axioms import (
    check_unanimity,
    find_pta_condorcet_schedule,
    is_pta_condorcet_consistent,
    lrm_probe,
)
from .errors import InvalidSpecError
from .generation import MODELS, GenSpec, canonical_model, generate
from .heuristics import lmt, local_search
from .metrics import score
from .model import Objective
from .rules import EXACT_RULES, RULE_NAMES, apply_rule
from .solver import enumerate_optima, solve_exact

CSV_HEADER = (
    "model",
    "n",
    "v",
    "rule",
    "metric",
    "mean_ratio",
    "violation_rate",
    "unique_fraction",
    "mean_time",
)


@dataclass(frozen=True, slots=True)
class ReportRow:
    """One aggregated result line, keyed by (model, n, v, rule, metric)."""

    model: str
    n: int
    v: int
    rule: str
    metric: str
    mean_ratio: float | None = None
    violation_rate: float | None = None
    unique_fraction: float | None = None
    mean_time: float | None = None


@dataclass(frozen=True)
class ExperimentReport:
    """Aggregated rows plus per-instance detail for one pipeline run."""

    command: str
    params: dict[str, Any]
    rows: tuple[ReportRow, ...]
    instances: tuple[dict[str, Any], ...] = ()

    def to_csv(self) -> str:
        buffer = stringio.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in self.rows:
            writer.writerow(
                [
                    row.model,
                    row.n,
                    row.v,
                    row.rule,
                    row.metric,
                    _cell(row.mean_ratio),
                    _cell(row.violation_rate),
                    _cell(row.unique_fraction),
                    _cell(row.mean_time),
                ]
            )
        return buffer.getvalue()

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "params": self.params,
            "rows": [
                {
                    "model": r.model,
                    "n": r.n,
                    "v": r.v,
                    "rule": r.rule,
                    "metric": r.metric,
                    "mean_ratio": r.mean_ratio,
                    "violation_rate": r.violation_rate,
                    "unique_fraction": r.unique_fraction,
                    "mean_time": r.mean_time,
                }
                for r in self.rows
            ],
            "instances": list(self.instances),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def instance_seed(base: int, *key: int) -> int:
    """Deterministic child seed for one instance of one experiment cell."""
    entropy = [int(base) & 0xFFFFFFFF] + [int(k) & 0xFFFFFFFF for k in key]
    return int(np.random.SeedSequence(entropy).generate_state(1, np.uint64)[0])


def run_compare(
    models: Sequence[str] = MODELS,
    ns: Sequence[int] = (5, 10),
    v: int = 100,
    instances: int = 50,
    seed: int = 0,
    length_range: tuple[int, int] = (1, 10),
    include_times: bool = True,
) -> ExperimentReport:
    """Cross-evaluate the three exact rules under the three metrics.

    For each instance and each rule the optimal schedule is computed, then
    scored under every metric and divided by that metric's own optimum.
    The diagonal ratio is exactly 1 by construction.
    """
    models = [canonical_model(m) for m in models]
    rows: list[ReportRow] = []
    details: list[dict[str, Any]] = []
    for model in models:
        for n in ns:
            ratios = {rule: {m: [] for m in EXACT_RULES} for rule in EXACT_RULES}
            times = {rule: [] for rule in EXACT_RULES}
            for i in range(instances):
                child = instance_seed(seed, MODELS.index(model), n, v, i)
                tasks, profile = generate(GenSpec(n, v, model, length_range, child))
                reports = {
                    rule: solve_exact(tasks, profile, objective)
                    for rule, objective in EXACT_RULES.items()
                }
                detail = {"model": model, "n": n, "v": v, "seed": child, "ratios": {}}
                for rule, rep in reports.items():
                    times[rule].append(rep.wall_time_s)
                    detail["ratios"][rule] = {}
                    for metric_rule, objective in EXACT_RULES.items():
                        value = score(rep.schedule, profile, objective)
                        ratio = _ratio(value, reports[metric_rule].optimal_score)
                        ratios[rule][metric_rule].append(ratio)
                        detail["ratios"][rule][metric_rule] = ratio
                if include_times:
                    detail["times"] = {rule: times[rule][-1] for rule in EXACT_RULES}
                details.append(detail)
            for rule in EXACT_RULES:
                for metric_rule, objective in EXACT_RULES.items():
                    rows.append(
                        ReportRow(
                            model,
                            n,
                            v,
                            rule,
                            objective.value,
                            mean_ratio=fmean(ratios[rule][metric_rule]),
                            mean_time=fmean(times[rule]) if include_times else None,
                        )
                    )
    params = {
        "models": list(models),
        "ns": list(ns),
        "v": v,
        "instances": instances,
        "seed": seed,
        "length_range": list(length_range),
    }
    return ExperimentReport("compare", params, tuple(rows), tuple(details))


def run_lmt_eval(
    n: int = 10,
    v: int = 100,
    instances: int = 100,
    seed: int = 0,
    model: str = "uniform",
    length_range: tuple[int, int] = (1, 10),
    include_times: bool = True,
) -> ExperimentReport:
    """Quality of the median heuristic against the exact deviation optimum."""
    model = canonical_model(model)
    pre, post, t_lmt, t_ls, t_exact = [], [], [], [], []
    details: list[dict[str, Any]] = []
    for i in range(instances):
        child = instance_seed(seed, MODELS.index(model), n, v, i)
        tasks, profile = generate(GenSpec(n, v, model, length_range, child))
        exact = solve_exact(tasks, profile, Objective.SUM_DEVIATION)

        started = time.perf_counter()
        start = lmt(tasks, profile)
        lmt_seconds = time.perf_counter() - started
        improved, trace = local_search(start, profile, Objective.SUM_DEVIATION)
        ls_seconds = time.perf_counter() - started

        ratio_pre = _ratio(score(start, profile, Objective.SUM_DEVIATION), exact.optimal_score)
        ratio_post = _ratio(trace.final_score, exact.optimal_score)
        pre.append(ratio_pre)
        post.append(ratio_post)
        t_lmt.append(lmt_seconds)
        t_ls.append(ls_seconds)
        t_exact.append(exact.wall_time_s)
        details.append(
            {
                "model": model,
                "n": n,
                "v": v,
                "seed": child,
                "ratio_lmt": ratio_pre,
                "ratio_lmt_ls": ratio_post,
                "search_steps": len(trace.steps),
                "terminated_by": trace.terminated_by,
            }
        )
    metric = Objective.SUM_DEVIATION.value
    rows = (
        ReportRow(model, n, v, "lmt", metric, mean_ratio=fmean(pre), mean_time=_mean_time(t_lmt, include_times)),
        ReportRow(model, n, v, "lmt-ls", metric, mean_ratio=fmean(post), mean_time=_mean_time(t_ls, include_times)),
        ReportRow(model, n, v, "sum-dev", metric, mean_ratio=1.0, mean_time=_mean_time(t_exact, include_times)),
    )
    params = {
        "model": model,
        "n": n,
        "v": v,
        "instances": instances,
        "seed": seed,
        "length_range": list(length_range),
    }
    return ExperimentReport("lmt-eval", params, rows, tuple(details))


def run_lrm_audit(
    instances: int = 1200,
    n: int = 8,
    v: int = 50,
    seed: int = 0,
    length_range: tuple[int, int] = (1, 10),
    include_times: bool = True,
    reduction: str = "unit",
) -> ExperimentReport:
    """Length-reduction monotonicity rates for the three exact rules.

    Half the corpus uses uniform ballots, half Plackett-Luce.  Each
    instance shortens one uniformly chosen task with length at least 2 and
    asks each rule whether the task's start time moved later.  With the
    default ``reduction="unit"`` policy the target loses one time unit;
    ``reduction="uniform"`` redraws its length uniformly below the old
    value, a harsher perturbation that roughly triples the violation rate
    of the deviation rule.
    """
    if reduction not in ("unit", "uniform"):
        raise InvalidSpecError(f"unknown reduction policy {reduction!r}")
    per_model: dict[str, dict[str, int]] = {m: {r: 0 for r in EXACT_RULES} for m in MODELS}
    totals: dict[str, int] = {m: 0 for m in MODELS}
    details: list[dict[str, Any]] = []
    started = time.perf_counter()
    for i in range(instances):
        model = MODELS[0] if i < (instances + 1) // 2 else MODELS[1]
        chooser = np.random.default_rng(instance_seed(seed, i, 0xC0FFEE))
        for attempt in range(1000):
            child = instance_seed(seed, MODELS.index(model), n, v, i, attempt)
            tasks, profile = generate(GenSpec(n, v, model, length_range, child))
            reducible = [tid for tid in tasks.ids if tasks.length(tid) >= 2]
            if reducible:
                break
        target = reducible[int(chooser.integers(len(reducible)))]
        if reduction == "unit":
            reduced_length = tasks.length(target) - 1
        else:
            reduced_length = int(chooser.integers(1, tasks.length(target)))
        totals[model] += 1
        detail = {
            "model": model,
            "seed": child,
            "target": target,
            "old_length": tasks.length(target),
            "new_length": reduced_length,
            "verdicts": {},
        }
        for rule in EXACT_RULES:
            verdict = lrm_probe(profile, rule, target, reduced_length)
            detail["verdicts"][rule] = bool(verdict.holds)
            if not verdict.holds:
                per_model[model][rule] += 1
                detail.setdefault("witnesses", {})[rule] = {
                    "start_before": verdict.witness["start_before"],
                    "start_after": verdict.witness["start_after"],
                }
        details.append(detail)
    elapsed = time.perf_counter() - started

    rows: list[ReportRow] = []
    for model in MODELS:
        if totals[model] == 0:
            continue
        for rule in EXACT_RULES:
            rows.append(
                ReportRow(
                    model,
                    n,
                    v,
                    rule,
                    "length-reduction-monotonicity",
                    violation_rate=per_model[model][rule] / totals[model],
                )
            )
    for rule in EXACT_RULES:
        violations = sum(per_model[m][rule] for m in MODELS)
        rows.append(
            ReportRow(
                "all",
                n,
                v,
                rule,
                "length-reduction-monotonicity",
                violation_rate=violations / instances,
                mean_time=(elapsed / instances) if include_times else None,
            )
        )
    params = {
        "instances": instances,
        "n": n,
        "v": v,
        "seed": seed,
        "length_range": list(length_range),
        "reduction": reduction,
    }
    return ExperimentReport("lrm-audit", params, tuple(rows), tuple(details))


def run_uniqueness_audit(
    models: Sequence[str] = MODELS,
    ns: Sequence[int] = (5, 8),
    vs: Sequence[int] = (100, 250),
    instances: int = 100,
    seed: int = 0,
    length_range: tuple[int, int] = (1, 10),
    include_times: bool = True,
) -> ExperimentReport:
    """How often each exact rule has a single optimal schedule."""
    models = [canonical_model(m) for m in models]
    rows: list[ReportRow] = []
    details: list[dict[str, Any]] = []
    for model in models:
        for n in ns:
            for v in vs:
                unique = {rule: 0 for rule in EXACT_RULES}
                times = {rule: [] for rule in EXACT_RULES}
                for i in range(instances):
                    child = instance_seed(seed, MODELS.index(model), n, v, i)
                    tasks, profile = generate(GenSpec(n, v, model, length_range, child))
                    detail = {"model": model, "n": n, "v": v, "seed": child, "optimum_count": {}}
                    for rule, objective in EXACT_RULES.items():
                        report = solve_exact(tasks, profile, objective)
                        times[rule].append(report.wall_time_s)
                        detail["optimum_count"][rule] = report.optimum_count
                        if report.optimum_count == 1:
                            unique[rule] += 1
                    details.append(detail)
                for rule in EXACT_RULES:
                    rows.append(
                        ReportRow(
                            model,
                            n,
                            v,
                            rule,
                            "uniqueness",
                            unique_fraction=unique[rule] / instances,
                            mean_time=fmean(times[rule]) if include_times else None,
                        )
                    )
    params = {
        "models": list(models),
        "ns": list(ns),
        "vs": list(vs),
        "instances": instances,
        "seed": seed,
        "length_range": list(length_range),
    }
    return ExperimentReport("uniqueness-audit", params, tuple(rows), tuple(details))


def run_audit_axioms(
    models: Sequence[str] = MODELS,
    ns: Sequence[int] = (6, 8),
    v: int = 50,
    instances: int = 100,
    seed: int = 0,
    length_range: tuple[int, int] = (1, 10),
    cap: int = 1000,
    include_times: bool = True,
) -> ExperimentReport:
    """Precedence-constraint and unanimity verdicts for each exact rule.

    Constraint consistency is judged only on instances where a fully
    consistent schedule exists.  For the pairwise rule, every enumerated
    optimum is checked, not just the tie-broken representative.
    """
    models = [canonical_model(m) for m in models]
    rows: list[ReportRow] = []
    details: list[dict[str, Any]] = []
    started = time.perf_counter()
    for model in models:
        for n in ns:
            applicable = 0
            condorcet_violations = {rule: 0 for rule in EXACT_RULES}
            all_optima_checked = 0
            all_optima_violations = 0
            unanimity_violations = {rule: 0 for rule in EXACT_RULES}
            for i in range(instances):
                child = instance_seed(seed, MODELS.index(model), n, v, i)
                tasks, profile = generate(GenSpec(n, v, model, length_range, child))
                consistent = find_pta_condorcet_schedule(profile)
                detail = {
                    "model": model,
                    "n": n,
                    "v": v,
                    "seed": child,
                    "has_consistent_schedule": consistent is not None,
                    "rules": {},
                }
                for rule, objective in EXACT_RULES.items():
                    schedule = apply_rule(rule, tasks, profile)
                    entry: dict[str, Any] = {}
                    if consistent is not None:
                        verdict = is_pta_condorcet_consistent(schedule, profile)
                        entry["pta_condorcet"] = verdict.holds
                        if not verdict.holds:
                            condorcet_violations[rule] += 1
                    unanimity = check_unanimity(schedule, profile)
                    entry["unanimity"] = unanimity.holds
                    if not unanimity.holds:
                        unanimity_violations[rule] += 1
                    detail["rules"][rule] = entry
                if consistent is not None:
                    applicable += 1
                    optima, complete = enumerate_optima(
                        tasks, profile, Objective.PTA_KENDALL_TAU, cap
                    )
                    if complete:
                        all_optima_checked += 1
                        bad = [
                            s
                            for s in optima
                            if not is_pta_condorcet_consistent(s, profile).holds
                        ]
                        detail["kemeny_optima_consistent"] = not bad
                        if bad:
                            all_optima_violations += 1
                    else:
                        detail["kemeny_optima_consistent"] = None
                details.append(detail)
            for rule in EXACT_RULES:
                rows.append(
                    ReportRow(
                        model,
                        n,
                        v,
                        rule,
                        "pta-condorcet",
                        violation_rate=(condorcet_violations[rule] / applicable) if applicable else None,
                    )
                )
                rows.append(
                    ReportRow(
                        model,
                        n,
                        v,
                        rule,
                        "unanimity",
                        violation_rate=unanimity_violations[rule] / instances,
                    )
                )
            rows.append(
                ReportRow(
                    model,
                    n,
                    v,
                    "pta-kemeny",
                    "pta-condorcet-all-optima",
                    violation_rate=(all_optima_violations / all_optima_checked) if all_optima_checked else None,
                )
            )
    elapsed = time.perf_counter() - started
    if include_times:
        per_instance = elapsed / max(1, len(models) * len(ns) * instances)
        rows = [
            ReportRow(r.model, r.n, r.v, r.rule, r.metric, r.mean_ratio, r.violation_rate, r.unique_fraction, per_instance)
            if r.metric == "pta-condorcet-all-optima"
            else r
            for r in rows
        ]
    params = {
        "models": list(models),
        "ns": list(ns),
        "v": v,
        "instances": instances,
        "seed": seed,
        "cap": cap,
        "length_range": list(length_range),
    }
    return ExperimentReport("audit-axioms", params, tuple(rows), tuple(details))


def run_bench(
    models: Sequence[str] = ("uniform",),
    ns: Sequence[int] = (8, 10, 12),
    vs: Sequence[int] = (50,),
    rules: Sequence[str] = RULE_NAMES,
    instances: int = 3,
    seed: int = 0,
    length_range: tuple[int, int] = (1, 10),
) -> ExperimentReport:
    """Wall-time measurements per rule over seeded instances."""
    models = [canonical_model(m) for m in models]
    for rule in rules:
        if rule not in RULE_NAMES:
            raise InvalidSpecError(f"unknown rule {rule!r}")
    rows: list[ReportRow] = []
    details: list[dict[str, Any]] = []
    for model in models:
        for n in ns:
            for v in vs:
                times = {rule: [] for rule in rules}
                for i in range(instances):
                    child = instance_seed(seed, MODELS.index(model), n, v, i)
                    tasks, profile = generate(GenSpec(n, v, model, length_range, child))
                    detail = {"model": model, "n": n, "v": v, "seed": child, "times": {}}
                    for rule in rules:
                        started = time.perf_counter()
                        apply_rule(rule, tasks, profile)
                        took = time.perf_counter() - started
                        times[rule].append(took)
                        detail["times"][rule] = took
                    details.append(detail)
                for rule in rules:
                    rows.append(
                        ReportRow(model, n, v, rule, "wall-time", mean_time=fmean(times[rule]))
                    )
    params = {
        "models": list(models),
        "ns": list(ns),
        "vs": list(vs),
        "rules": list(rules),
        "instances": instances,
        "seed": seed,
        "length_range": list(length_range),
    }
    return ExperimentReport("bench", params, tuple(rows), tuple(details))


def _cell(value: float | None) -> str:
    if value is None:
        return ""
    return format(value, ".6f")


def _ratio(value: int, optimum: int) -> float:
    if optimum == 0:
        return 1.0 if value == 0 else inf
    return value / optimum


def _mean_time(values: Iterable[float], include: bool) -> float | None:
    return fmean(values) if include else None
