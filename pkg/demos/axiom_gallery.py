"""Fairness properties and the hand-built instances that break them.

Each section probes one property.  The counterexamples are small enough
to verify by hand, and each one pins down a real limitation of a rule
rather than a solver artifact.

Run with:  python demos/axiom_gallery.py
"""

from collective_schedules import (
    Objective,
    check_unanimity,
    find_pta_condorcet_schedule,
    lrm_probe,
    neutrality_probe,
    pta_condorcet_constraints,
    solve_exact,
    swap_tasks_in_profile,
)
from collective_schedules.gallery import (
    deviation_length_reduction_counterexample,
    deviation_neutrality_counterexample,
    deviation_unanimity_counterexample,
    kemeny_unanimity_counterexample,
    three_task_example,
)


def show_precedence_constraints() -> None:
    print("== Length-weighted precedence constraints ==")
    _, profile = three_task_example()
    for c in pta_condorcet_constraints(profile):
        print(f"  {c.supporters} of 5 voters force task {c.before} before {c.after}")
    schedule = find_pta_condorcet_schedule(profile)
    print(f"  fully consistent schedule: {schedule}")
    print(
        "  Tasks 2 and 3 constrain each other both ways (a threshold tie),\n"
        "  so no schedule can satisfy everything here.\n"
    )


def show_neutrality() -> None:
    print("== Neutrality: task names should not matter ==")
    tasks, profile, pair = deviation_neutrality_counterexample()
    a, b = pair
    print(f"  tasks b and e have lengths {tasks.length(a)} and {tasks.length(b)}")
    before = solve_exact(tasks, profile, Objective.SUM_DEVIATION)
    swapped_profile = swap_tasks_in_profile(profile, a, b)
    after = solve_exact(tasks, swapped_profile, Objective.SUM_DEVIATION)
    print(f"  optimum before swapping the pair in every ballot: {before.schedule}"
          f" (score {before.optimal_score})")
    print(f"  optimum after:                                    {after.schedule}"
          f" (score {after.optimal_score})")
    verdict = neutrality_probe(profile, a, b, Objective.SUM_DEVIATION)
    print(f"  deviation rule neutral on this pair? {verdict.holds}")
    print(
        "  Renaming two tasks of different lengths changed the outcome in a\n"
        "  way that does not commute with the renaming.\n"
    )


def show_unanimity() -> None:
    print("== Unanimity: honor pairs every voter agrees on ==")
    tasks, profile, pair = deviation_unanimity_counterexample()
    report = solve_exact(tasks, profile, Objective.SUM_DEVIATION)
    verdict = check_unanimity(report.schedule, profile)
    print(f"  all {profile.voter_count} voters put {pair[0]} before {pair[1]},"
          f" yet the deviation optimum is {report.schedule}")
    print(f"  unanimity holds? {verdict.holds} (witness pair {verdict.witness})")

    tasks, profile, pair = kemeny_unanimity_counterexample()
    report = solve_exact(tasks, profile, Objective.PTA_KENDALL_TAU)
    verdict = check_unanimity(report.schedule, profile)
    print(f"  all {profile.voter_count} voters put {pair[0]} before {pair[1]},"
          f" yet the pairwise optimum is {report.schedule}")
    print(f"  unanimity holds? {verdict.holds} (witness pair {verdict.witness})\n")


def show_length_reduction() -> None:
    print("== Shortening a task should never delay its start ==")
    tasks, profile, target, reduced = deviation_length_reduction_counterexample()
    verdict = lrm_probe(profile, "sum-dev", target, reduced)
    w = verdict.witness
    print(f"  task {target}: length {tasks.length(target)} -> {reduced}")
    print(f"  deviation optimum before: {w['schedule_before']}"
          f" (starts {target} at t={w['start_before']})")
    print(f"  deviation optimum after:  {w['schedule_after']}"
          f" (starts {target} at t={w['start_after']})")
    print(f"  monotone? {verdict.holds}")
    for rule in ("sum-tard", "pta-kemeny"):
        print(f"  same reduction under {rule}: holds={lrm_probe(profile, rule, target, reduced).holds}")
    print()


def main() -> None:
    show_precedence_constraints()
    show_neutrality()
    show_unanimity()
    show_length_reduction()


if __name__ == "__main__":
    main()
