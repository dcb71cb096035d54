"""Minimal vertex covers: enumeration by minimal transversals, the covering number, and the
closed-form covers of the clique-plus-stars family."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Optional

from . import bits
from .errors import ResourceLimitError, UnsupportedConfiguration
from .graph import HFamilySpec, SimpleGraph

DEFAULT_MAX_ANTICHAIN = 10**6
ENV_MAX_ANTICHAIN = "COVERDEAL_MAX_ANTICHAIN"


@dataclass(frozen=True)
class EnumerationConfig:
    max_antichain: int = DEFAULT_MAX_ANTICHAIN

    @classmethod
    def from_env(cls) -> "EnumerationConfig":
        raw = os.environ.get(ENV_MAX_ANTICHAIN)
        if raw is None or raw == "":
            return cls()
        return cls(max_antichain=int(raw))


@dataclass(frozen=True)
class CoverCollection:
    """Minimal vertex covers as bit sets, sorted by (size, lex)."""

    masks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "masks", tuple(sorted(set(self.masks), key=bits.sort_key)))

    @property
    def covers(self) -> list[list[int]]:
        return [bits.to_list(m) for m in self.masks]

    @property
    def alpha0(self) -> int:
        return min(bits.popcount(m) for m in self.masks)

    def minimum(self) -> list[list[int]]:
        a = self.alpha0
        return [bits.to_list(m) for m in self.masks if bits.popcount(m) == a]

    def __len__(self):
        return len(self.masks)

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(c) for c in self.covers}

    def to_json(self) -> dict:
        return {"alpha0": self.alpha0, "covers": self.covers}

    @classmethod
    def from_lists(cls, covers: Iterable[Iterable[int]]) -> "CoverCollection":
        return cls(tuple(bits.from_iter(c) for c in covers))


def minimal_transversals(hyperedges: Iterable[int], max_antichain: Optional[int] = None) -> list[int]:
    """All inclusion-minimal sets meeting every hyperedge (Berge's incremental product).

    Hyperedges are processed in the order given. After each one the running
    family is pruned back to an antichain, so its size is bounded by the
    number of minimal transversals of the prefix.
    """
    cap = EnumerationConfig.from_env().max_antichain if max_antichain is None else max_antichain
    family = [0]
    for edge in hyperedges:
        hit = [t for t in family if t & edge]
        miss = [t for t in family if not t & edge]
        if not miss:
            continue
        grown = set()
        for t in miss:
            for v in bits.members(edge):
                cand = t | 1 << v
                # a hitting transversal inside cand makes cand redundant
                if not any(h & cand == h for h in hit):
                    grown.add(cand)
        family = hit + bits.minimalize(grown)
        if len(family) > cap:
            raise ResourceLimitError(
                f"transversal antichain grew to {len(family)} sets, over the cap of {cap}"
            )
    return bits.minimalize(family)


def minimal_covers(g: SimpleGraph, max_antichain: Optional[int] = None) -> CoverCollection:
    """Every minimal vertex cover of `g`. An edgeless graph yields the single empty cover."""
    edges = [1 << u | 1 << v for u, v in g.edges()]
    return CoverCollection(tuple(minimal_transversals(edges, max_antichain)))


def has_cover_of_size(g: SimpleGraph, k: int) -> bool:
    return minimal_covers(g).alpha0 <= k


def check_supported(spec: HFamilySpec) -> str:
    regime = spec.regime()
    if regime == "no-stars":
        raise UnsupportedConfiguration("closed forms need at least one star attached to the clique")
    if regime == "mixed":
        raise UnsupportedConfiguration(
            f"clique vertices {spec.starless()} carry no star while other clique vertices "
            "carry stars; closed forms cover all stars, one starless vertex, or a single star"
        )
    return regime


def closed_form_cover_masks(spec: HFamilySpec) -> list[int]:
    """Closed-form minimal covers, in construction order.

    The all-centres cover comes first when every centre has a star. Then, for each
    clique vertex in clique order, the cover that swaps it for its leaves.
    """
    check_supported(spec)
    centers = bits.from_iter(spec.clique)
    out = []
    if not spec.starless():
        out.append(centers)
    for a in spec.clique:
        out.append(centers & ~(1 << a) | bits.from_iter(spec.leaves[a]))
    return out


def predicted_covers_h(spec: HFamilySpec) -> CoverCollection:
    return CoverCollection(tuple(closed_form_cover_masks(spec)))
