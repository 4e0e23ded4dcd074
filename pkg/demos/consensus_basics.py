"""Aggregate five voters' preferred task orders into one schedule.

Three shared tasks (lengths 2, 4, and 1) must run back to back on a
single machine.  Each voter submits the order they would pick; the three
rules disagree about the best compromise, which is the whole point of
having more than one rule.

Run with:  python demos/consensus_basics.py
"""

from itertools import permutations

from collective_schedules import (
    Objective,
    PreferenceProfile,
    Schedule,
    SolveOptions,
    TaskSet,
    completion_times,
    score,
    solve_exact,
)


def main() -> None:
    tasks = TaskSet.of(("1", 2), ("2", 4), ("3", 1))
    profile = PreferenceProfile.of(
        tasks,
        (("2", "1", "3"), 2),
        (("1", "2", "3"), 2),
        (("3", "2", "1"), 1),
    )
    print(f"{tasks.n} tasks, lengths {tasks.lengths}, {profile.voter_count} voters\n")

    print("Every candidate schedule, scored under each objective:")
    header = f"{'order':12s} {'deviation':>9s} {'tardiness':>9s} {'pairwise':>9s}"
    print(header)
    for order in permutations(tasks.ids):
        s = Schedule(order)
        row = [score(s, profile, objective) for objective in Objective]
        print(f"{'-'.join(order):12s} {row[0]:9d} {row[1]:9d} {row[2]:9d}")

    print("\nWhat each rule returns:")
    for objective in Objective:
        report = solve_exact(
            tasks, profile, objective, SolveOptions(enumerate_all=True)
        )
        optima = ", ".join("-".join(s.order) for s in report.optima)
        print(
            f"  {objective.value:16s} -> {'-'.join(report.schedule.order)}"
            f"  (score {report.optimal_score}, optima: {optima})"
        )

    best = solve_exact(tasks, profile, Objective.SUM_DEVIATION).schedule
    print("\nCompletion times under the deviation winner:")
    for tid, done in completion_times(best, tasks).items():
        print(f"  task {tid} finishes at t={done}")

    print(
        "\nNote the tension: minimizing total deviation starts the long task"
        "\nfirst, while minimizing tardiness prefers the short tasks early."
    )


if __name__ == "__main__":
    main()
