"""Sweep random clique-plus-stars specs and check every closed form against brute force.

    python3 scripts/sweep.py --count 500 --seed 1 --max-n 12
"""

import argparse
import collections
import time
from dataclasses import dataclass

from coverdeal import (
    build_h_graph,
    closed_form_cover_ideal_h,
    complement,
    cover_ideal_by_intersection,
    cover_ideal_from_covers,
    cover_ideal_invariants,
    edge_ideal_invariants,
    h_family_order,
    is_chordal,
    minimal_covers,
    verify_linear_quotients,
)
from coverdeal.sweep import generate_specs


@dataclass
class SweepConfig:
    count: int = 240
    seed: int = 0
    max_n: int = 12


def check(spec) -> list[str]:
    problems = []
    g = build_h_graph(spec)
    covers = minimal_covers(g)
    closed = closed_form_cover_ideal_h(spec)
    if not (closed.to_json() == cover_ideal_from_covers(covers, spec.n).to_json() == cover_ideal_by_intersection(g).to_json()):
        problems.append("cover ideal routes disagree")
    cert = verify_linear_quotients(closed, h_family_order(spec, closed))
    if not cert or cert.q != 1:
        problems.append("family order is not a linear quotient order")
    edge, cover = edge_ideal_invariants(spec), cover_ideal_invariants(spec)
    if edge.dim != spec.n - covers.alpha0:
        problems.append("edge dim differs from n - alpha0")
    if edge.pd + edge.depth != spec.n or cover.pd + cover.depth != spec.n:
        problems.append("pd + depth != n")
    if not is_chordal(complement(g)):
        problems.append("complement not chordal")
    return problems


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=SweepConfig.count)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    args = ap.parse_args()
    cfg = SweepConfig(args.count, args.seed, args.max_n)

    start = time.perf_counter()
    by_regime = collections.Counter()
    failures = 0
    for spec in generate_specs(cfg.count, seed=cfg.seed, max_n=cfg.max_n):
        by_regime[spec.regime()] += 1
        problems = check(spec)
        if problems:
            failures += 1
            print("FAIL", spec.to_json(), "; ".join(problems))
    elapsed = time.perf_counter() - start
    for regime, k in sorted(by_regime.items()):
        print(f"{regime:>13}: {k}")
    print(f"{cfg.count} specs, {failures} failures, {elapsed:.2f}s")


if __name__ == "__main__":
    main()
