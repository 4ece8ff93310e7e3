"""Triangle scheduling: solvers, hardness reduction, runtime simulation.

Jobs of sizes p_1 >= ... >= p_n are placed at start times; feasibility
demands |s_i - s_j| >= min(p_i, p_j) for every pair, and the objective is to
minimize the makespan max_j (s_j + p_j).
"""

from .core import (
    ExactNumber,
    GapList,
    Instance,
    Schedule,
    as_exact,
    binary_tree_ratio,
    check_feasible,
    gaps,
    lower_bound,
    makespan,
    new_instance,
)
from .exact import (
    InstanceTooLargeError,
    canonical_schedule_for_order,
    grid_exhaustive_optimum,
    optimal_makespan,
)
from .generators import (
    FIXTURES,
    KINDS,
    GeneratorSpec,
    fixture_instance,
    generate,
    random_instance,
    ratio_bounded_instance,
)
from .greedy import (
    GreedyStep,
    GreedyTrace,
    GreedyTree,
    TraceStep,
    greedy_schedule,
    greedy_steps,
    greedy_tree,
    insert_into_gap,
    tree_to_dot,
)
from .hardness import (
    DecodeError,
    Matching,
    ReductionLabels,
    ThreeDMInstance,
    encode,
    matching_from_schedule,
    min_padding,
    ratio_excess,
    schedule_from_matching,
    solve_3dm_bruteforce,
)
from .qptas import (
    DPResult,
    Grid,
    QptasStats,
    RoundedInstance,
    StateBudgetExceeded,
    dp_solve,
    make_grid,
    qptas_schedule,
    qptas_solve,
    round_sizes,
    split_small,
)
from .simulate import ExecutionRecord, ExecutionTrace, simulate

__all__ = [
    "ExactNumber",
    "GapList",
    "Instance",
    "Schedule",
    "as_exact",
    "binary_tree_ratio",
    "check_feasible",
    "gaps",
    "lower_bound",
    "makespan",
    "new_instance",
    "InstanceTooLargeError",
    "canonical_schedule_for_order",
    "grid_exhaustive_optimum",
    "optimal_makespan",
    "FIXTURES",
    "KINDS",
    "GeneratorSpec",
    "fixture_instance",
    "generate",
    "random_instance",
    "ratio_bounded_instance",
    "GreedyStep",
    "GreedyTrace",
    "GreedyTree",
    "TraceStep",
    "greedy_schedule",
    "greedy_steps",
    "greedy_tree",
    "insert_into_gap",
    "tree_to_dot",
    "DecodeError",
    "Matching",
    "ReductionLabels",
    "ThreeDMInstance",
    "encode",
    "matching_from_schedule",
    "min_padding",
    "ratio_excess",
    "schedule_from_matching",
    "solve_3dm_bruteforce",
    "DPResult",
    "Grid",
    "QptasStats",
    "RoundedInstance",
    "StateBudgetExceeded",
    "dp_solve",
    "make_grid",
    "qptas_schedule",
    "qptas_solve",
    "round_sizes",
    "split_small",
    "ExecutionRecord",
    "ExecutionTrace",
    "simulate",
]
