"""Reduction from numerical 3-dimensional matching to triangle scheduling.

A numerical 3DM instance has three columns of n values each, every value
strictly between D/4 and D/2, with total sum n*D; it asks for n disjoint
triplets (a_i, b_j, c_k) each summing to D.  The encoding emits five job
types per triplet slot whose sizes force any schedule of makespan
n*(8M+5D) to pack one block of each type per window of length 8M+5D, with
the block telescoping exactly when the triplet sums to D.  M is a free
padding parameter, at least ceil(5D/4) so the five type ranges stay
disjoint.

Block layout inside window t (offsets from t*(8M+5D)):

    E at 0, A_i at A_i, C_k at A_i + C_k, F at A_i + 2*C_k,
    B_j at A_i + 2*C_k + B_j.

The decoder inverts this: E jobs must sit exactly at the window starts,
every other job classifies by size, and each window must hold one F, A, B,
C with its triplet summing to D.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Instance, Schedule, check_feasible, makespan, new_instance

Matching = tuple[tuple[int, int, int], ...]

JOB_TYPES = ("E", "F", "A", "B", "C")


@dataclass(frozen=True)
class ThreeDMInstance:
    """Numerical 3DM input: target D and value columns a, b, c (1-based)."""

    D: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.D < 4:
            raise ValueError(f"D must be at least 4, got {self.D}")
        n = len(self.a)
        if n == 0 or len(self.b) != n or len(self.c) != n:
            raise ValueError("columns a, b, c must be non-empty and equally long")
        for name, column in (("a", self.a), ("b", self.b), ("c", self.c)):
            for v in column:
                if not 4 * v > self.D or not 2 * v < self.D:
                    raise ValueError(
                        f"{name} value {v} outside the open range (D/4, D/2) for D={self.D}"
                    )
        total = sum(self.a) + sum(self.b) + sum(self.c)
        if total != n * self.D:
            raise ValueError(f"values sum to {total}, need n*D = {n * self.D}")

    @property
    def n(self) -> int:
        return len(self.a)


def min_padding(tdm: ThreeDMInstance) -> int:
    """Smallest admissible M, ceil(5D/4)."""
    return -(-5 * tdm.D // 4)


@dataclass(frozen=True)
class ReductionLabels:
    """Sidecar mapping each encoded job to its type and source index."""

    M: int
    target: int
    jobs: tuple[tuple[str, int, int], ...]   # (type, 1-based source index, size)


def _type_sizes(tdm: ThreeDMInstance, M: int) -> dict[str, tuple[int, ...]]:
    return {
        "E": tuple(8 * M + 5 * tdm.D for _ in range(tdm.n)),
        "F": tuple(4 * M for _ in range(tdm.n)),
        "A": tuple(2 * M + 2 * v + tdm.D for v in tdm.a),
        "B": tuple(2 * M + v for v in tdm.b),
        "C": tuple(M + v + tdm.D for v in tdm.c),
    }


def encode(tdm: ThreeDMInstance, M: int) -> tuple[Instance, ReductionLabels]:
    """Encode a 3DM instance as 5n jobs; solvable iff a matching exists.

    With M >= ceil(5D/4) the size ranges order strictly as
    E > F > A_i > B_j > C_k, so a job's size identifies its type.
    """
    if M < min_padding(tdm):
        raise ValueError(f"M must be at least ceil(5D/4) = {min_padding(tdm)}, got {M}")
    sizes_by_type = _type_sizes(tdm, M)
    labeled = []
    for kind in JOB_TYPES:
        for index, size in enumerate(sizes_by_type[kind], start=1):
            labeled.append((kind, index, size))
    instance = new_instance(size for _, _, size in labeled)
    target = tdm.n * (8 * M + 5 * tdm.D)
    return instance, ReductionLabels(M=M, target=target, jobs=tuple(labeled))


def ratio_excess(tdm: ThreeDMInstance, M: int) -> Fraction:
    """binary_tree_ratio(encoded) - 2: equals 5D/(4M) for n >= 2.

    The maximum is always the E/F boundary 2 + 5D/(4M); all other
    half-index ratios stay below 2.
    """
    return Fraction(5 * tdm.D, 4 * M)


def _validate_matching(tdm: ThreeDMInstance, matching: Matching) -> None:
    n = tdm.n
    if len(matching) != n:
        raise ValueError(f"matching must have {n} triplets, got {len(matching)}")
    for coord in range(3):
        seen = sorted(t[coord] for t in matching)
        if seen != list(range(1, n + 1)):
            raise ValueError(f"matching coordinate {coord} is not a permutation of 1..{n}")
    for i, j, k in matching:
        total = tdm.a[i - 1] + tdm.b[j - 1] + tdm.c[k - 1]
        if total != tdm.D:
            raise ValueError(f"triplet ({i},{j},{k}) sums to {total}, need {tdm.D}")


def schedule_from_matching(tdm: ThreeDMInstance, M: int, matching: Matching) -> Schedule:
    """Certificate schedule of makespan exactly n*(8M+5D).

    Window t holds the t-th triplet with the E/A/C/F/B layout; the gap left
    after B is 2M + 2D - 2a - b - 2c, exactly B's size when the triplet sums
    to D, so consecutive windows meet without slack.
    """
    if M < min_padding(tdm):
        raise ValueError(f"M must be at least ceil(5D/4) = {min_padding(tdm)}, got {M}")
    _validate_matching(tdm, matching)
    window = 8 * M + 5 * tdm.D
    jobs = []
    for t, (i, j, k) in enumerate(matching):
        offset = t * window
        size_a = 2 * M + 2 * tdm.a[i - 1] + tdm.D
        size_b = 2 * M + tdm.b[j - 1]
        size_c = M + tdm.c[k - 1] + tdm.D
        jobs.append((window, offset))
        jobs.append((size_a, offset + size_a))
        jobs.append((size_c, offset + size_a + size_c))
        jobs.append((4 * M, offset + size_a + 2 * size_c))
        jobs.append((size_b, offset + size_a + 2 * size_c + size_b))
    return Schedule(tuple(jobs))


class DecodeError(ValueError):
    """A tight schedule failed to decode; `block` is the offending window
    (0-based) or None when the failure is global."""

    def __init__(self, message: str, block: int | None = None):
        where = f" (block {block})" if block is not None else ""
        super().__init__(message + where)
        self.block = block


def _classify(tdm: ThreeDMInstance, M: int, size) -> str:
    for kind, sizes in _type_sizes(tdm, M).items():
        if size in sizes:
            return kind
    raise DecodeError(f"size {size} matches no encoded job type")


def matching_from_schedule(tdm: ThreeDMInstance, M: int, schedule: Schedule) -> Matching:
    """Recover a matching from a feasible schedule of makespan <= n*(8M+5D).

    The E jobs must sit exactly at multiples of 8M+5D; each window between
    them must then hold exactly one F, A, B, C, and each window's triplet
    must sum to D.  Anything else raises DecodeError naming the window.
    """
    instance, labels = encode(tdm, M)
    if sorted(schedule.sizes, reverse=True) != list(instance.sizes):
        raise DecodeError("schedule job sizes do not match the encoded instance")
    violations = check_feasible(schedule)
    if violations:
        raise DecodeError(f"schedule is infeasible at pairs {violations}")
    window = 8 * M + 5 * tdm.D
    target = tdm.n * window
    if makespan(schedule) > target:
        raise DecodeError(f"makespan {makespan(schedule)} exceeds the target {target}")

    e_starts = sorted(start for size, start in schedule.jobs if size == window)
    expected = [t * window for t in range(tdm.n)]
    if e_starts != expected:
        raise DecodeError(f"E jobs start at {e_starts}, need exactly {expected}")

    blocks: dict[int, dict[str, list[int]]] = {
        t: {kind: [] for kind in JOB_TYPES} for t in range(tdm.n)
    }
    for size, start in schedule.jobs:
        kind = _classify(tdm, M, size)
        t = start // window
        blocks[t][kind].append(size)

    pools = {
        "A": list(tdm.a),
        "B": list(tdm.b),
        "C": list(tdm.c),
    }
    offsets = {"A": lambda s: (s - 2 * M - tdm.D) // 2, "B": lambda s: s - 2 * M, "C": lambda s: s - M - tdm.D}
    matching = []
    for t in range(tdm.n):
        for kind in JOB_TYPES:
            if len(blocks[t][kind]) != 1:
                raise DecodeError(
                    f"window holds {len(blocks[t][kind])} jobs of type {kind}, need 1",
                    block=t,
                )
        indices = {}
        for kind in ("A", "B", "C"):
            value = offsets[kind](blocks[t][kind][0])
            found = None
            for pos, v in enumerate(pools[kind]):
                if v == value:
                    found = pos
                    break
            if found is None:
                raise DecodeError(f"no unused {kind} index with value {value}", block=t)
            indices[kind] = found
        i = indices["A"]
        j = indices["B"]
        k = indices["C"]
        if tdm.a[i] + tdm.b[j] + tdm.c[k] != tdm.D:
            raise DecodeError(
                f"triplet values sum to {tdm.a[i] + tdm.b[j] + tdm.c[k]}, need {tdm.D}",
                block=t,
            )
        pools["A"][i] = None
        pools["B"][j] = None
        pools["C"][k] = None
        matching.append((i + 1, j + 1, k + 1))
    return tuple(matching)


def solve_3dm_bruteforce(tdm: ThreeDMInstance, limit: int = 6) -> Matching | None:
    """First matching in lexicographic order, or None; backtracking search.

    The a column is consumed in index order, so triplets come out with
    first coordinates 1..n.
    """
    if tdm.n > limit:
        raise ValueError(f"brute-force matcher limited to {limit} triplets, got {tdm.n}")
    n = tdm.n
    used_b = [False] * n
    used_c = [False] * n
    chosen: list[tuple[int, int, int]] = []

    def extend(i: int) -> bool:
        if i == n:
            return True
        for j in range(n):
            if used_b[j]:
                continue
            for k in range(n):
                if used_c[k]:
                    continue
                if tdm.a[i] + tdm.b[j] + tdm.c[k] == tdm.D:
                    used_b[j] = True
                    used_c[k] = True
                    chosen.append((i + 1, j + 1, k + 1))
                    if extend(i + 1):
                        return True
                    chosen.pop()
                    used_b[j] = False
                    used_c[k] = False
        return False

    if extend(0):
        return tuple(chosen)
    return None
