"""Leader (gateway) placement from minimum vertex covers."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from . import bits
from .covers import minimal_covers
from .graph import SimpleGraph

log = logging.getLogger(__name__)

ASSIGNMENT_RULE = "each sensor reports to its smallest-index adjacent leader"


@dataclass(frozen=True)
class PlacementPlan:
    leaders: tuple[int, ...]
    alternatives: tuple[tuple[int, ...], ...] = ()
    assignment: dict = field(default_factory=dict)
    components: int = 1
    warnings: tuple[str, ...] = ()

    @property
    def cardinality(self) -> int:
        return len(self.leaders)

    def to_json(self) -> dict:
        return {
            "leaders": list(self.leaders),
            "cardinality": self.cardinality,
            "alternatives": [list(a) for a in self.alternatives],
            "assignment": {str(k): v for k, v in sorted(self.assignment.items())},
            "assignment_rule": ASSIGNMENT_RULE,
            "components": self.components,
            "warnings": list(self.warnings),
        }


def _component_graph(g: SimpleGraph, comp: int) -> SimpleGraph:
    return SimpleGraph(g.n, tuple(row & comp for row in g.adj))


def plan_placement(g: SimpleGraph) -> PlacementPlan:
    """Pick the lexicographically smallest minimum vertex cover as the leader set.

    Disconnected graphs are planned per component; the overall minimum covers
    are all combinations of per-component minimum covers.
    """
    warnings = []
    if not g.edge_count():
        msg = "graph has no edges; no leaders needed"
        log.warning(msg)
        return PlacementPlan((), warnings=(msg,), components=len(g.components()))

    comps = [c for c in g.components() if bits.popcount(c) > 1]
    if len(g.components()) > 1:
        msg = f"graph is disconnected ({len(g.components())} components); planned per component"
        log.warning(msg)
        warnings.append(msg)

    per_comp = []
    for comp in comps:
        covers = minimal_covers(_component_graph(g, comp))
        a = covers.alpha0
        per_comp.append([m for m in covers.masks if bits.popcount(m) == a])

    options = sorted(
        (sum(choice) for choice in itertools.product(*per_comp)),
        key=bits.sort_key,
    )
    chosen = options[0]
    assignment = {}
    for v in g.vertices():
        if chosen >> v & 1 or not g.adj[v]:
            continue
        assignment[v] = bits.lowest(g.adj[v] & chosen)
    return PlacementPlan(
        leaders=tuple(bits.to_list(chosen)),
        alternatives=tuple(tuple(bits.to_list(m)) for m in options[1:]),
        assignment=assignment,
        components=len(g.components()),
        warnings=tuple(warnings),
    )
