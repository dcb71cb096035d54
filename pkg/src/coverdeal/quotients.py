"""Linear quotients: certify an ordering, find one, and read off Betti numbers.

An ordering u_1..u_t of the minimal generators has linear quotients when every
colon ideal (u_1..u_{j-1}):(u_j) is generated by variables. For squarefree
monomials that colon is generated by the supports u_k minus u_j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional, Sequence

from . import bits
from .covers import check_supported
from .errors import ResourceLimitError, ValidationError
from .graph import HFamilySpec
from .monomials import Monomial, MonomialIdeal

DEFAULT_MAX_SEARCH_GENERATORS = 12


@dataclass(frozen=True)
class SearchConfig:
    max_generators: int = DEFAULT_MAX_SEARCH_GENERATORS


@dataclass(frozen=True)
class QuotientCertificate:
    """``order`` holds 0-based indices into the ideal's generator list.

    ``colon_vars[j]`` are the variables generating the colon at position j + 2.
    """

    order: tuple[int, ...]
    colon_vars: tuple[tuple[int, ...], ...]

    @property
    def q_values(self) -> list[int]:
        return [len(vs) for vs in self.colon_vars]

    @property
    def q(self) -> int:
        # a principal ideal has no colon steps; q = 0 keeps length = q + 1 right
        return max(self.q_values, default=0)

    def to_json(self) -> dict:
        return {"order": list(self.order), "q_values": self.q_values, "q": self.q}


@dataclass(frozen=True)
class QuotientFailure:
    """First position (1-based) whose colon ideal has a generator of degree > 1."""

    order: tuple[int, ...]
    position: int
    colon: MonomialIdeal
    witness: Monomial

    def __bool__(self):
        return False

    def to_json(self) -> dict:
        return {
            "order": list(self.order),
            "failed_at": self.position,
            "colon": self.colon.supports,
            "witness": self.witness.support,
        }


def _colon_mask_list(prefix: Sequence[int], u: int) -> list[int]:
    return bits.minimalize(g & ~u for g in prefix)


def verify_linear_quotients(ideal: MonomialIdeal, order: Sequence[int]) -> QuotientCertificate | QuotientFailure:
    order = tuple(order)
    if sorted(order) != list(range(len(ideal))):
        raise ValidationError(f"order {list(order)} is not a permutation of 0..{len(ideal) - 1}")
    gens = [ideal.masks[k] for k in order]
    colon_vars = []
    for j in range(1, len(gens)):
        colon = _colon_mask_list(gens[:j], gens[j])
        wide = [c for c in colon if bits.popcount(c) != 1]
        if wide:
            return QuotientFailure(order, j + 1, MonomialIdeal(ideal.n, tuple(colon)), Monomial(wide[0]))
        colon_vars.append(tuple(bits.lowest(c) for c in colon))
    return QuotientCertificate(order, tuple(colon_vars))


def order_of_monomials(ideal: MonomialIdeal, monomials: Sequence[Monomial]) -> list[int]:
    """Translate a list of generators into positions within ``ideal.gens``."""
    index = {m: k for k, m in enumerate(ideal.masks)}
    try:
        return [index[u.mask] for u in monomials]
    except KeyError as exc:
        raise ValidationError(f"{Monomial(exc.args[0])} is not a minimal generator") from None


def h_family_order(spec: HFamilySpec, ideal: MonomialIdeal) -> list[int]:
    """The standard linear-quotient order for the cover ideal of a clique-plus-stars graph.

    First the generator without leaves: all centres when every centre has a
    star, otherwise the centres minus the last starless one. Then the covers
    swapping a centre for its leaves, by descending clique position. Each colon
    is then generated by the swapped-out centre alone.
    """
    check_supported(spec)
    centers = bits.from_iter(spec.clique)
    starless = spec.starless()
    first_out = starless[-1] if starless else None
    seq = [centers if first_out is None else centers & ~(1 << first_out)]
    for a in reversed(spec.clique):
        if a != first_out:
            seq.append(centers & ~(1 << a) | bits.from_iter(spec.leaves[a]))
    return order_of_monomials(ideal, [Monomial(m) for m in seq])


def search_linear_quotients(
    ideal: MonomialIdeal, config: SearchConfig = SearchConfig()
) -> Optional[QuotientCertificate]:
    """Lexicographically first linear-quotient order, or None if there is none.

    Depth-first over positions trying generators in index order, so the greedy
    path is explored first. Dead prefixes are memoized by their generator set
    since a colon depends only on which generators precede it.
    """
    t = len(ideal)
    if t > config.max_generators:
        raise ResourceLimitError(f"{t} generators exceed the search bound of {config.max_generators}")
    masks = ideal.masks
    dead: set[int] = set()

    def extend(order: list[int], used: int) -> Optional[list[int]]:
        if len(order) == t:
            return order
        if used in dead:
            return None
        for k in range(t):
            if used >> k & 1:
                continue
            if order:
                colon = _colon_mask_list([masks[i] for i in order], masks[k])
                if any(bits.popcount(c) != 1 for c in colon):
                    continue
            found = extend(order + [k], used | 1 << k)
            if found is not None:
                return found
        dead.add(used)
        return None

    found = extend([], 0)
    if found is None:
        return None
    cert = verify_linear_quotients(ideal, found)
    assert isinstance(cert, QuotientCertificate)
    return cert


@dataclass(frozen=True)
class ResolutionShape:
    """Total and graded Betti numbers of R/I.

    ``shifts[i]`` lists d once for every summand R(-d) in homological degree i.
    """

    betti: tuple[int, ...]
    shifts: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def length(self) -> int:
        return len(self.betti) - 1

    def regularity(self) -> int:
        return max(d - i for i, ds in enumerate(self.shifts) for d in ds)

    def to_json(self) -> dict:
        return {"betti": list(self.betti), "shifts": [list(s) for s in self.shifts]}

    def render(self) -> str:
        terms = []
        for ds in reversed(self.shifts):
            groups = {}
            for d in ds:
                groups[d] = groups.get(d, 0) + 1
            parts = []
            for d, cnt in sorted(groups.items()):
                power = "" if cnt == 1 else f"^{cnt}"
                twist = "" if d == 0 else f"(-{d})"
                parts.append(f"R{power}{twist}")
            terms.append(" + ".join(parts))
        return "0 -> " + " -> ".join(terms) + " -> R/I -> 0"


def betti_from_certificate(cert: QuotientCertificate, degrees: Sequence[int]) -> ResolutionShape:
    """Betti data from a linear-quotient certificate.

    The j-th generator contributes C(q_j, i) summands R(-(deg u_j + i)) in
    homological degree i + 1, with q_1 = 0. ``degrees`` is indexed like the
    ideal's generators, not like ``cert.order``.
    """
    qs = [0] + cert.q_values
    degs = [degrees[k] for k in cert.order]
    top = max(qs)
    betti = [1]
    shifts = [(0,)]
    for i in range(top + 1):
        row = []
        for q, d in zip(qs, degs):
            row.extend([d + i] * comb(q, i))
        betti.append(len(row))
        shifts.append(tuple(sorted(row)))
    return ResolutionShape(tuple(betti), tuple(shifts))


def resolution_shape(ideal: MonomialIdeal, cert: QuotientCertificate) -> ResolutionShape:
    return betti_from_certificate(cert, ideal.degrees())
