"""Largest-gap greedy insertion with right shifting.

Jobs are placed in non-increasing size order.  Each job goes into a largest
gap (earliest on ties) at distance its own size from the gap's left edge;
when the gap is too short to absorb it, everything to the right slides over
by the missing amount.  The module also records the placement trace and the
parent tree it induces: each job is a child of the job whose insertion
created the gap it landed in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import Instance, Schedule


@dataclass(frozen=True)
class TraceStep:
    job: int                # 1-based rank in the non-increasing size order
    size: int
    gap_start: int | None   # chosen gap before insertion; None for job 1
    gap_length: int | None
    placement: int          # start assigned at insertion time (later steps may shift it)
    shift: int              # 0 when the gap had room, else 2*size - gap_length
    parent: int | None      # job whose insertion created the chosen gap
    makespan: int           # makespan after this step


GreedyTrace = tuple[TraceStep, ...]


@dataclass(frozen=True)
class GreedyStep:
    """One insertion with the full solver state around it.

    `starts` holds the current start of every placed job (index k is job
    k+1), after this step's shift.  Invariant tests consume these snapshots.
    """

    step: TraceStep
    gaps_before: tuple[tuple[int, int], ...]
    gaps_after: tuple[tuple[int, int], ...]
    starts: tuple[int, ...]


def insert_into_gap(
    gap: tuple[int, int], size: int
) -> tuple[int, tuple[tuple[int, int], tuple[int, int]], int]:
    """Split a (start, length) gap by placing a job of the given size.

    Returns (placement, (left_gap, right_gap), shift).  A gap of length
    x >= 2*size splits into lengths (size, x - size) with no shift; a shorter
    gap yields two gaps of length size and pushes everything to the right by
    2*size - x.  Both regimes are handled, including size > x.
    """
    start, length = gap
    placement = start + size
    shift = max(0, 2 * size - length)
    left = (start, size)
    right = (placement, size if shift else length - size)
    return placement, (left, right), shift


def greedy_steps(instance: Instance) -> Iterator[GreedyStep]:
    """Run the greedy solver, yielding the state around every insertion."""
    sizes = instance.sizes
    starts = [0]
    # gaps as mutable [start, length, owner] in time order; the owner is the
    # job whose insertion created the gap (job 1 owns the initial gap)
    gap_list: list[list[int]] = [[0, sizes[0], 1]]
    span = sizes[0]
    first = TraceStep(1, sizes[0], None, None, 0, 0, None, span)
    yield GreedyStep(first, (), ((0, sizes[0]),), (0,))

    for j in range(2, len(sizes) + 1):
        p = sizes[j - 1]
        before = tuple((g[0], g[1]) for g in gap_list)
        pick = 0
        for idx in range(1, len(gap_list)):
            if gap_list[idx][1] > gap_list[pick][1]:
                pick = idx
        g_start, g_len, owner = gap_list[pick]
        placement, (left, right), shift = insert_into_gap((g_start, g_len), p)
        if shift:
            # Jobs at or beyond the gap's right edge move.  When g_len == p
            # the edge job sits exactly at the new placement, so the cutoff
            # is the gap end, not the placement itself.
            edge = g_start + g_len
            for k in range(len(starts)):
                if starts[k] >= edge:
                    starts[k] += shift
            for g in gap_list[pick + 1:]:
                g[0] += shift
        starts.append(placement)
        gap_list[pick:pick + 1] = [
            [left[0], left[1], j],
            [right[0], right[1], j],
        ]
        span += shift
        step = TraceStep(j, p, g_start, g_len, placement, shift, owner, span)
        after = tuple((g[0], g[1]) for g in gap_list)
        yield GreedyStep(step, before, after, tuple(starts))


def greedy_schedule(instance: Instance) -> tuple[Schedule, GreedyTrace]:
    """Greedy schedule plus its placement trace.

    Output starts are integers; job k of the schedule is the k-th largest
    size, matching the 1-based labels in the trace.
    """
    trace = []
    starts: tuple[int, ...] = ()
    for state in greedy_steps(instance):
        trace.append(state.step)
        starts = state.starts
    jobs = tuple(zip(instance.sizes, starts))
    return Schedule(jobs), tuple(trace)


@dataclass(frozen=True)
class GreedyTree:
    """Parent structure of a greedy run: job 1 at the root, children in
    placement order."""

    root: int
    parents: tuple[tuple[int, int], ...]   # (job, parent) for every job >= 2

    def children(self, job: int) -> tuple[int, ...]:
        return tuple(child for child, parent in self.parents if parent == job)

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        nodes = {self.root} | {j for j, _ in self.parents}
        return {node: self.children(node) for node in sorted(nodes)}


def greedy_tree(trace: GreedyTrace) -> GreedyTree:
    """Build the insertion tree from a trace; n nodes, n-1 edges, connected."""
    if not trace:
        raise ValueError("empty trace")
    parents = tuple((s.job, s.parent) for s in trace[1:])
    tree = GreedyTree(root=trace[0].job, parents=parents)
    reached = {tree.root}
    for job, parent in parents:
        if parent not in reached:
            raise ValueError(f"disconnected tree: job {job} hangs off unseen {parent}")
        reached.add(job)
    if len(reached) != len(trace):
        raise ValueError("tree does not cover every placed job")
    return tree


def tree_to_dot(tree: GreedyTree) -> str:
    """DOT text for the insertion tree."""
    lines = ["digraph greedy_tree {"]
    lines.append(f"  {tree.root};")
    for job, parent in tree.parents:
        lines.append(f"  {parent} -> {job};")
    lines.append("}")
    return "\n".join(lines) + "\n"
