"""Search for bad greedy/optimal makespan ratios on random instances.

The true worst case for greedy is only known to lie in [21/20, 3/2]; this
harness hunts the gap empirically but asserts nothing beyond the proven
bounds.  Every unrestricted run evaluates the nine-job fixture first, so the
reported ratio is always at least 21/20.  Evaluations are independent and
merge by maximum ratio with the lexicographically smallest witness on ties,
so any evaluation order (or a concurrent split) yields the same report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .core import Instance, makespan
from .exact import optimal_makespan
from .generators import fixture_instance, random_instance, ratio_bounded_instance
from .greedy import greedy_schedule

FIXTURE_RATIO = Fraction(21, 20)


@dataclass(frozen=True)
class RatioSearchReport:
    ratio: Fraction
    witness: tuple[int, ...]
    iterations: int
    seed: int
    findings: tuple[tuple[tuple[int, ...], Fraction], ...] = field(default=())


def evaluate_ratio(instance: Instance) -> Fraction:
    """greedy makespan / optimal makespan, exact."""
    sched, _ = greedy_schedule(instance)
    best, _ = optimal_makespan(instance)
    return Fraction(makespan(sched), best)


def _better(candidate: tuple[Fraction, tuple[int, ...]], incumbent) -> bool:
    if incumbent is None:
        return True
    if candidate[0] != incumbent[0]:
        return candidate[0] > incumbent[0]
    return candidate[1] < incumbent[1]


def ratio_search(
    n: int,
    iterations: int,
    seed: int,
    max_size: int = 50,
    bound: Fraction | None = None,
    oracle_limit: int = 12,
) -> RatioSearchReport:
    """Evaluate `iterations` random instances of size n plus the fixture.

    With `bound` set the pool is ratio-bounded instead and the fixture is
    skipped (it would defeat the restriction).  Instances beating the
    fixture's 21/20 land in `findings`.
    """
    if n > oracle_limit:
        raise ValueError(f"n must stay within the exact oracle limit {oracle_limit}")
    rng = random.Random(seed)
    pool = []
    if bound is None:
        pool.append(fixture_instance("greedy-gap-9"))
    for _ in range(iterations):
        if bound is None:
            pool.append(random_instance(rng, n, max_size))
        else:
            pool.append(ratio_bounded_instance(rng, n, bound, max_size))

    incumbent = None
    findings = []
    for instance in pool:
        ratio = evaluate_ratio(instance)
        candidate = (ratio, instance.sizes)
        if _better(candidate, incumbent):
            incumbent = candidate
        if ratio > FIXTURE_RATIO:
            findings.append((instance.sizes, ratio))
    return RatioSearchReport(
        ratio=incumbent[0],
        witness=incumbent[1],
        iterations=iterations,
        seed=seed,
        findings=tuple(findings),
    )


def report_to_obj(report: RatioSearchReport) -> dict:
    from .serialize import encode_exact

    return {
        "ratio": encode_exact(Fraction(report.ratio)),
        "witness": list(report.witness),
        "iterations": report.iterations,
        "seed": report.seed,
        "findings": [
            {"sizes": list(sizes), "ratio": encode_exact(Fraction(ratio))}
            for sizes, ratio in report.findings
        ],
    }


def report_from_obj(obj) -> RatioSearchReport:
    """Load a report, recomputing the witness ratio to keep reports honest."""
    from .core import new_instance
    from .serialize import decode_exact

    witness = tuple(int(p) for p in obj["witness"])
    claimed = Fraction(decode_exact(obj["ratio"]))
    actual = evaluate_ratio(new_instance(witness))
    if actual != claimed:
        raise ValueError(f"report claims ratio {claimed} but the witness yields {actual}")
    return RatioSearchReport(
        ratio=claimed,
        witness=witness,
        iterations=int(obj["iterations"]),
        seed=int(obj["seed"]),
        findings=tuple(
            (tuple(int(p) for p in f["sizes"]), Fraction(decode_exact(f["ratio"])))
            for f in obj.get("findings", [])
        ),
    )
