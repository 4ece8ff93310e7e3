"""Runtime semantics for mixed-criticality schedules.

Sizes are worst-case budgets; at runtime each job has an actual demand
1 <= d_j <= p_j.  The machine runs jobs in start order: a job whose start
falls inside the currently executing job's window is canceled by it and
consumes no time; otherwise it executes for exactly its demand.  The gap
structure of a feasible schedule guarantees the canceler always has strictly
higher criticality than the job it cancels, whatever the demands are.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ExactNumber, Schedule, as_exact, check_feasible


@dataclass(frozen=True)
class ExecutionRecord:
    job: int                        # position in schedule.jobs
    size: ExactNumber
    start: ExactNumber
    executed: bool
    end: ExactNumber | None         # start + demand when executed
    canceled_by: int | None


@dataclass(frozen=True)
class ExecutionTrace:
    records: tuple[ExecutionRecord, ...]   # in schedule job order
    completion: ExactNumber                # end of the last executed job


def simulate(schedule: Schedule, demands) -> ExecutionTrace:
    """Execute a feasible schedule under the given per-job demands.

    Demands align with schedule.jobs.  Raises on infeasible schedules and
    out-of-range demands.
    """
    violations = check_feasible(schedule)
    if violations:
        raise ValueError(f"schedule is infeasible at pairs {violations}")
    jobs = schedule.jobs
    if len(demands) != len(jobs):
        raise ValueError(f"need {len(jobs)} demands, got {len(demands)}")
    checked = []
    for (size, _), d in zip(jobs, demands):
        d = as_exact(d)
        if not 1 <= d <= size:
            raise ValueError(f"demand {d!r} outside [1, {size}]")
        checked.append(d)

    order = sorted(range(len(jobs)), key=lambda i: jobs[i][1])
    records: list[ExecutionRecord | None] = [None] * len(jobs)
    busy_until: ExactNumber = 0
    last_executed: int | None = None
    for i in order:
        size, start = jobs[i]
        if start < busy_until:
            # Executed intervals are disjoint and ordered, so the only
            # interval that can cover this start is the most recent one.
            canceler = last_executed
            assert canceler is not None and jobs[canceler][0] > size, (
                "protection violated: a job may only be canceled by a "
                "strictly more critical one"
            )
            records[i] = ExecutionRecord(i, size, start, False, None, canceler)
        else:
            end = start + checked[i]
            records[i] = ExecutionRecord(i, size, start, True, end, None)
            busy_until = end
            last_executed = i
    return ExecutionTrace(records=tuple(records), completion=busy_until)
