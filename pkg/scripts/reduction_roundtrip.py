#!/usr/bin/env python3
"""Exercise the hardness reduction end to end on random matching instances.

For each trial: build a random solvable numerical 3-dimensional matching
instance, encode it as a scheduling instance, solve the matching by brute
force, lay the matching out as a schedule, confirm the exact oracle agrees
that the target makespan n*(8M+5D) is optimal, and decode the certificate
back into a matching.  Any disagreement is a bug in the reduction.

Slot counts above 2 push the encoded instance past 10 jobs, so the oracle
step is skipped there and only the certificate and decoder are checked.
"""

import argparse
import random
import time

from trisched import (
    ThreeDMInstance,
    binary_tree_ratio,
    check_feasible,
    encode,
    makespan,
    matching_from_schedule,
    min_padding,
    optimal_makespan,
    ratio_excess,
    schedule_from_matching,
    solve_3dm_bruteforce,
)

ORACLE_JOB_LIMIT = 12


def random_solvable_tdm(rng: random.Random, n: int) -> ThreeDMInstance:
    # columns are permutations of (3, 3, 4), so the identity matching works
    cols = ([], [], [])
    for _ in range(n):
        triple = rng.sample([3, 3, 4], 3)
        for col, value in zip(cols, triple):
            col.append(value)
    return ThreeDMInstance(D=10, a=tuple(cols[0]), b=tuple(cols[1]), c=tuple(cols[2]))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=25)
    parser.add_argument("--max-slots", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--extra-padding", type=int, default=6,
                        help="upper bound on random padding above the minimum")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    t0 = time.perf_counter()
    oracle_checked = 0
    for trial in range(1, args.trials + 1):
        n = rng.randint(1, args.max_slots)
        tdm = random_solvable_tdm(rng, n)
        M = min_padding(tdm) + rng.randint(0, args.extra_padding)
        instance, labels = encode(tdm, M)
        target = n * (8 * M + 5 * tdm.D)
        assert labels.target == target

        matching = solve_3dm_bruteforce(tdm)
        assert matching is not None, "generator promised solvability"
        certificate = schedule_from_matching(tdm, M, matching)
        assert check_feasible(certificate) == []
        assert makespan(certificate) == target

        oracle = "-"
        if instance.n <= ORACLE_JOB_LIMIT:
            opt, _ = optimal_makespan(instance)
            assert opt == target, f"oracle found {opt}, certificate says {target}"
            oracle = str(opt)
            oracle_checked += 1

        decoded = matching_from_schedule(tdm, M, certificate)
        redone = schedule_from_matching(tdm, M, decoded)
        assert sorted(redone.jobs) == sorted(certificate.jobs)

        excess = binary_tree_ratio(instance) - 2
        assert excess == ratio_excess(tdm, M)
        print(
            f"trial {trial:>3}: slots {n}, M {M:>3}, target {target:>4},"
            f" oracle {oracle:>4}, ratio 2+{excess}"
        )

    dt = time.perf_counter() - t0
    print(
        f"{args.trials} round trips ok ({oracle_checked} oracle-confirmed)"
        f" in {dt:.2f}s"
    )


if __name__ == "__main__":
    main()
