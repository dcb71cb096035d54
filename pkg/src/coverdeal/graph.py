"""Simple graphs on vertices 1..n, the clique-plus-stars family, complements and chordality.

Adjacency is stored as one int bit set per vertex; bit v stands for vertex v.
All public interfaces speak 1-based vertex labels.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from . import bits
from .errors import ValidationError


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected loopless graph without multi-edges.

    ``adj[v]`` is the neighbour bit set of vertex ``v``; ``adj[0]`` is unused
    and always 0.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValidationError(f"vertex count must be a positive integer, got {self.n!r}")
        if len(self.adj) != self.n + 1 or self.adj[0] != 0:
            raise ValidationError("adjacency table must have n + 1 rows with row 0 empty")
        full = self.vertex_mask
        for v in range(1, self.n + 1):
            row = self.adj[v]
            if row & ~full:
                bad = bits.to_list(row & ~full)[0]
                raise ValidationError(f"vertex {v} has neighbour {bad} outside 1..{self.n}")
            if row >> v & 1:
                raise ValidationError(f"loop at vertex {v}")
            for u in bits.members(row):
                if not self.adj[u] >> v & 1:
                    raise ValidationError(f"edge {{{v},{u}}} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        if not isinstance(n, int) or n < 1:
            raise ValidationError(f"vertex count must be a positive integer, got {n!r}")
        adj = [0] * (n + 1)
        for edge in edges:
            if len(edge) != 2:
                raise ValidationError(f"edge {list(edge)} does not have two endpoints")
            u, v = edge
            for w in (u, v):
                if not isinstance(w, int) or not 1 <= w <= n:
                    raise ValidationError(f"vertex {w!r} outside 1..{n}")
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, (0,) * (n + 1))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = bits.from_iter(range(1, n + 1))
        return cls(n, (0,) + tuple(full & ~(1 << v) for v in range(1, n + 1)))

    @property
    def vertex_mask(self) -> int:
        return ((1 << (self.n + 1)) - 1) & ~1

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in self.vertices() for v in bits.members(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(bits.popcount(row) for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits.to_list(self.adj[v])

    def components(self) -> list[int]:
        """Connected components as vertex bit sets, ordered by smallest member."""
        seen = 0
        comps = []
        for v in self.vertices():
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in bits.members(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def covers_all_edges(self, mask: int) -> bool:
        return all(mask >> v & 1 or not (self.adj[v] & ~mask) for v in self.vertices())

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}


def degree(g: SimpleGraph, v: int) -> int:
    if not isinstance(v, int) or not 1 <= v <= g.n:
        raise ValidationError(f"vertex {v!r} outside 1..{g.n}")
    return bits.popcount(g.adj[v])


def complement(g: SimpleGraph) -> SimpleGraph:
    full = g.vertex_mask
    return SimpleGraph(g.n, (0,) + tuple(full & ~g.adj[v] & ~(1 << v) for v in g.vertices()))


@dataclass(frozen=True)
class HFamilySpec:
    """A complete graph on ``clique`` with a (possibly empty) star of leaves at each clique vertex.

    ``leaves`` maps a clique vertex to its leaf labels. Missing keys mean no star.
    """

    n: int
    clique: tuple[int, ...]
    leaves: Mapping[int, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        clique = tuple(self.clique)
        leaves = {int(k): tuple(sorted(v)) for k, v in dict(self.leaves).items()}
        object.__setattr__(self, "clique", clique)
        object.__setattr__(self, "leaves", {a: leaves.get(a, ()) for a in clique} | leaves)
        self._validate()

    def _validate(self):
        n, clique = self.n, self.clique
        if not isinstance(n, int) or n < 1:
            raise ValidationError(f"vertex count must be a positive integer, got {n!r}")
        if len(clique) < 2:
            raise ValidationError("the clique needs at least two vertices")
        for a, b in zip(clique, clique[1:]):
            if a >= b:
                raise ValidationError(f"clique labels must be strictly increasing (vertex {b} after {a})")
        seen: dict[int, str] = {}
        for a in clique:
            if not isinstance(a, int) or not 1 <= a <= n:
                raise ValidationError(f"clique vertex {a!r} outside 1..{n}")
            seen[a] = "clique"
        for center, ls in self.leaves.items():
            if center not in seen or seen[center] != "clique":
                raise ValidationError(f"star center {center} is not a clique vertex")
            for leaf in ls:
                if not isinstance(leaf, int) or not 1 <= leaf <= n:
                    raise ValidationError(f"leaf {leaf!r} of vertex {center} outside 1..{n}")
                if leaf in seen:
                    where = "the clique" if seen[leaf] == "clique" else f"the star of {seen[leaf]}"
                    raise ValidationError(f"leaf {leaf} of vertex {center} already belongs to {where}")
                seen[leaf] = str(center)
        missing = [v for v in range(1, n + 1) if v not in seen]
        if missing:
            raise ValidationError(f"vertex {missing[0]} is neither a clique vertex nor a leaf")

    @property
    def m(self) -> int:
        return len(self.clique)

    def leaf_counts(self) -> list[int]:
        """Star edge counts, aligned with ``clique``."""
        return [len(self.leaves[a]) for a in self.clique]

    def starless(self) -> list[int]:
        return [a for a in self.clique if not self.leaves[a]]

    def regime(self) -> str:
        """'all-stars', 'one-starless', 'single-star', 'no-stars' or 'mixed'."""
        s = len(self.starless())
        if s == 0:
            return "all-stars"
        if s == self.m:
            return "no-stars"
        if s == 1:
            return "one-starless"
        if s == self.m - 1:
            return "single-star"
        return "mixed"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "clique": list(self.clique),
            "stars": {str(a): list(self.leaves[a]) for a in self.clique if self.leaves[a]},
        }

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> "HFamilySpec":
        """Label leaves of each clique vertex just before it, so the last clique vertex is n."""
        clique, leaves, nxt = [], {}, 1
        for c in counts:
            leaves_here = list(range(nxt, nxt + c))
            nxt += c
            clique.append(nxt)
            leaves[nxt] = leaves_here
            nxt += 1
        return cls(nxt - 1, tuple(clique), leaves)


def build_h_graph(spec: HFamilySpec) -> SimpleGraph:
    edges = [(a, b) for i, a in enumerate(spec.clique) for b in spec.clique[i + 1:]]
    edges += [(a, leaf) for a in spec.clique for leaf in spec.leaves[a]]
    return SimpleGraph.from_edges(spec.n, edges)


@dataclass(frozen=True)
class ChordalityResult:
    chordal: bool
    ordering: Optional[list[int]] = None
    cycle: Optional[list[int]] = None

    def __bool__(self):
        return self.chordal


def mcs_order(g: SimpleGraph) -> list[int]:
    """Maximum cardinality search visit order; ties go to the smallest label."""
    weight = [0] * (g.n + 1)
    unvisited = g.vertex_mask
    order = []
    while unvisited:
        v = max(bits.members(unvisited), key=lambda u: (weight[u], -u))
        order.append(v)
        unvisited &= ~(1 << v)
        for u in bits.members(g.adj[v] & unvisited):
            weight[u] += 1
    return order


def _peo_failure(g: SimpleGraph, elim: list[int]) -> Optional[tuple[int, int, int]]:
    """Return (v, x, y) with x, y non-adjacent later neighbours of v, or None if `elim` is perfect."""
    pos = {v: i for i, v in enumerate(elim)}
    for v in elim:
        later = [u for u in bits.members(g.adj[v]) if pos[u] > pos[v]]
        if len(later) < 2:
            continue
        first = min(later, key=pos.__getitem__)
        for w in later:
            if w != first and not g.has_edge(first, w):
                return v, min(first, w), max(first, w)
    return None


def _shortest_path(g: SimpleGraph, src: int, dst: int, allowed: int) -> Optional[list[int]]:
    prev = {src: src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = [u]
            while path[-1] != src:
                path.append(prev[path[-1]])
            return path[::-1]
        for w in bits.members(g.adj[u] & allowed):
            if w not in prev:
                prev[w] = u
                queue.append(w)
    return None


def _normalize_cycle(cycle: list[int]) -> list[int]:
    i = cycle.index(min(cycle))
    cycle = cycle[i:] + cycle[:i]
    if cycle[-1] < cycle[1]:
        cycle = [cycle[0]] + cycle[1:][::-1]
    return cycle


def _chordless_cycle_through(g: SimpleGraph, v: int, x: int, y: int) -> Optional[list[int]]:
    # drop v and every other neighbour of v so the path cannot create a chord to v
    allowed = g.vertex_mask & ~(g.adj[v] | 1 << v) | 1 << x | 1 << y
    path = _shortest_path(g, x, y, allowed)
    if path is None:
        return None
    return [v] + path


def find_chordless_cycle(g: SimpleGraph, around: Optional[int] = None) -> Optional[list[int]]:
    """Shortest chordless cycle of length >= 4 through `around` (or any vertex), normalized.

    Ties break on the normalized vertex list.
    """
    centers = [around] if around is not None else list(g.vertices())
    best = None
    for v in centers:
        nbrs = g.neighbors(v)
        for i, x in enumerate(nbrs):
            for y in nbrs[i + 1:]:
                if g.has_edge(x, y):
                    continue
                cyc = _chordless_cycle_through(g, v, x, y)
                if cyc is None:
                    continue
                cyc = _normalize_cycle(cyc)
                if best is None or (len(cyc), cyc) < (len(best), best):
                    best = cyc
    return best


def is_chordal(g: SimpleGraph) -> ChordalityResult:
    """Chordality by maximum cardinality search plus a perfect-elimination check.

    On success ``ordering`` is a perfect elimination ordering (first entry is
    eliminated first). On failure ``cycle`` is a chordless cycle of length >= 4.
    """
    elim = mcs_order(g)[::-1]
    failure = _peo_failure(g, elim)
    if failure is None:
        return ChordalityResult(True, ordering=elim)
    cycle = find_chordless_cycle(g, around=failure[0]) or find_chordless_cycle(g)
    if cycle is None:  # pragma: no cover - MCS failure implies a chordless cycle exists
        raise RuntimeError("perfect elimination check failed but no chordless cycle was found")
    return ChordalityResult(False, cycle=cycle)


def load_graph_json(data: dict) -> SimpleGraph | HFamilySpec:
    """Parse either ``{"n", "edges"}`` or ``{"n", "clique", "stars"}``."""
    if not isinstance(data, dict) or "n" not in data:
        raise ValidationError('graph JSON must be an object with an "n" field')
    n = data["n"]
    if "clique" in data:
        stars = data.get("stars") or {}
        if not isinstance(stars, dict):
            raise ValidationError('"stars" must map clique vertices to leaf lists')
        try:
            leaves = {int(k): tuple(v) for k, v in stars.items()}
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"bad star entry: {exc}") from None
        if not isinstance(data["clique"], list):
            raise ValidationError('"clique" must be a list of vertex labels')
        return HFamilySpec(n, tuple(data["clique"]), leaves)
    if "edges" in data:
        try:
            edges = [tuple(e) for e in data["edges"]]
        except TypeError:
            raise ValidationError('"edges" must be a list of [u, v] pairs') from None
        return SimpleGraph.from_edges(n, edges)
    raise ValidationError('graph JSON needs either "edges" or "clique"')


def as_graph(obj: SimpleGraph | HFamilySpec) -> SimpleGraph:
    return build_h_graph(obj) if isinstance(obj, HFamilySpec) else obj


def to_dot(g: SimpleGraph, leaders: Iterable[int] = (), name: str = "G") -> str:
    leaders = set(leaders)
    lines = [f"graph {name} {{"]
    for v in g.vertices():
        if v in leaders:
            lines.append(f'  v{v} [style=filled, fillcolor="lightblue"];')
        else:
            lines.append(f"  v{v};")
    for u, v in g.edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
