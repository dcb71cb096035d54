"""Seeded generators of clique-plus-stars specs for property sweeps."""

from __future__ import annotations

import random
from typing import Iterator, Optional

from .graph import HFamilySpec

REGIMES = ("all-stars", "one-starless", "single-star")


def random_spec(rng: random.Random, max_n: int = 12, regime: Optional[str] = None) -> HFamilySpec:
    """A random supported spec with n <= max_n.

    Half the time leaves are labelled just before their centre (so the last
    clique vertex is n); otherwise labels are shuffled.
    """
    regime = regime or rng.choice(REGIMES)
    while True:
        m = rng.randint(2, max(2, min(6, max_n - 2)))
        if regime == "all-stars":
            with_star = list(range(m))
        elif regime == "one-starless":
            skip = rng.randrange(m)
            with_star = [i for i in range(m) if i != skip]
        else:
            with_star = [rng.randrange(m)]
        room = max_n - m
        if room < len(with_star):
            continue
        counts = [0] * m
        for i in with_star:
            counts[i] = 1
        for _ in range(rng.randint(0, room - len(with_star))):
            counts[rng.choice(with_star)] += 1
        break
    spec = HFamilySpec.from_counts(counts)
    if rng.random() < 0.5:
        return spec
    labels = list(range(1, spec.n + 1))
    rng.shuffle(labels)
    relabel = dict(zip(range(1, spec.n + 1), labels))
    # clique must stay increasing, so sort the relabelled centres with their leaves
    pairs = sorted((relabel[a], [relabel[x] for x in spec.leaves[a]]) for a in spec.clique)
    return HFamilySpec(spec.n, tuple(a for a, _ in pairs), {a: ls for a, ls in pairs})


def generate_specs(count: int, seed: int = 0, max_n: int = 12) -> Iterator[HFamilySpec]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_spec(rng, max_n)
