"""Seeded instance generators plus the named fixture instances.

Everything is deterministic per seed.  The ratio-bounded generator draws
p_i uniformly from [ceil(p_anchor/bound), min(p_anchor, p_(i-1))] where the
anchor is p_ceil(i/2).  Capping at the previous draw keeps the sequence
non-increasing, so the anchor really is position ceil(i/2) of the finished
instance and the binary tree ratio stays within the bound; the function
asserts that before returning.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .core import Instance, binary_tree_ratio, new_instance
from .hardness import ThreeDMInstance, encode

FIXTURES = {
    # Greedy pays 42 against an optimum of 40 here; the worst known gap.
    "greedy-gap-9": (20, 20, 10, 5, 5, 4, 4, 4, 4),
    # Four staircase jobs: a natural-looking schedule reaches 15, optimal is 14.
    "staircase-4": (6, 5, 4, 3),
}

KINDS = ("random", "ratio-bounded", "reduction", "fixture")


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int | None = None
    seed: int = 0
    max_size: int = 100
    bound: Fraction | None = None
    fixture: str | None = None
    tdm: ThreeDMInstance | None = None
    M: int | None = None


def random_instance(rng: random.Random, n: int, max_size: int) -> Instance:
    if n < 1 or max_size < 1:
        raise ValueError("need n >= 1 and max_size >= 1")
    return new_instance(rng.randint(1, max_size) for _ in range(n))


def ratio_bounded_instance(rng: random.Random, n: int, bound, max_size: int) -> Instance:
    if n < 1 or max_size < 1:
        raise ValueError("need n >= 1 and max_size >= 1")
    bound = Fraction(bound)
    if bound < 1:
        raise ValueError(f"ratio bound must be at least 1, got {bound}")
    drawn = [rng.randint(1, max_size)]
    for i in range(2, n + 1):
        anchor = drawn[(i + 1) // 2 - 1]
        low = math.ceil(Fraction(anchor) / bound)
        # the previous draw already sits above its own (weaker) floor, so
        # the range stays non-empty and the sequence non-increasing
        drawn.append(rng.randint(low, min(anchor, drawn[-1])))
    instance = new_instance(drawn)
    assert binary_tree_ratio(instance) <= bound
    return instance


def fixture_instance(name: str) -> Instance:
    try:
        return new_instance(FIXTURES[name])
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; have {sorted(FIXTURES)}") from None


def generate(spec: GeneratorSpec) -> Instance:
    """Build an instance from a GeneratorSpec; deterministic per seed."""
    if spec.kind == "fixture":
        if spec.fixture is None:
            raise ValueError("fixture generation needs `fixture`")
        return fixture_instance(spec.fixture)
    if spec.kind == "reduction":
        if spec.tdm is None or spec.M is None:
            raise ValueError("reduction generation needs `tdm` and `M`")
        instance, _ = encode(spec.tdm, spec.M)
        return instance
    if spec.n is None:
        raise ValueError(f"{spec.kind} generation needs `n`")
    rng = random.Random(spec.seed)
    if spec.kind == "random":
        return random_instance(rng, spec.n, spec.max_size)
    if spec.kind == "ratio-bounded":
        if spec.bound is None:
            raise ValueError("ratio-bounded generation needs `bound`")
        return ratio_bounded_instance(rng, spec.n, spec.bound, spec.max_size)
    raise ValueError(f"unknown generator kind {spec.kind!r}; have {KINDS}")
