"""Squarefree monomials and monomial ideals.

A squarefree monomial is its support bit set, so lcm is union, gcd is
intersection and divisibility is inclusion. Ideals always hold their minimal
generating set, ordered by (degree, lex support).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import bits
from .covers import CoverCollection, closed_form_cover_masks
from .errors import ValidationError
from .graph import HFamilySpec, SimpleGraph


@dataclass(frozen=True, order=False)
class Monomial:
    mask: int

    @classmethod
    def of(cls, *variables: int) -> "Monomial":
        return cls(bits.from_iter(variables))

    @property
    def support(self) -> list[int]:
        return bits.to_list(self.mask)

    @property
    def degree(self) -> int:
        return bits.popcount(self.mask)

    def divides(self, other: "Monomial") -> bool:
        return self.mask & other.mask == self.mask

    def __str__(self):
        return "*".join(f"X{i}" for i in self.support) or "1"

    def __repr__(self):
        return f"Monomial({str(self)})"


ONE = Monomial(0)


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    masks: tuple[int, ...]

    def __post_init__(self):
        full = ((1 << (self.n + 1)) - 1) & ~1
        for m in self.masks:
            if m & ~full:
                bad = bits.to_list(m & ~full)[0]
                raise ValidationError(f"variable X{bad} outside X1..X{self.n}")
        object.__setattr__(self, "masks", tuple(bits.minimalize(self.masks)))

    @classmethod
    def from_supports(cls, n: int, supports: Iterable[Iterable[int]]) -> "MonomialIdeal":
        return cls(n, tuple(bits.from_iter(s) for s in supports))

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, (0,))

    @property
    def gens(self) -> list[Monomial]:
        return [Monomial(m) for m in self.masks]

    @property
    def supports(self) -> list[list[int]]:
        return [bits.to_list(m) for m in self.masks]

    def degrees(self) -> list[int]:
        return [bits.popcount(m) for m in self.masks]

    def is_unit(self) -> bool:
        return 0 in self.masks

    def contains(self, u: Monomial) -> bool:
        return any(g & u.mask == g for g in self.masks)

    def is_equigenerated(self) -> bool:
        return len(set(self.degrees())) <= 1

    def __len__(self):
        return len(self.masks)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def to_json(self) -> dict:
        return {"n": self.n, "gens": self.supports}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        try:
            return cls.from_supports(data["n"], data["gens"])
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad ideal JSON: {exc}") from None


def edge_ideal(g: SimpleGraph) -> MonomialIdeal:
    return MonomialIdeal(g.n, tuple(1 << u | 1 << v for u, v in g.edges()))


def cover_ideal_from_covers(c: CoverCollection, n: int) -> MonomialIdeal:
    return MonomialIdeal(n, c.masks)


def intersect(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    """Generated by pairwise lcms of generators."""
    _same_ring(i, j)
    return MonomialIdeal(i.n, tuple(a | b for a in i.masks for b in j.masks))


def cover_ideal_by_intersection(g: SimpleGraph) -> MonomialIdeal:
    """Intersect the primes (X_u, X_v) over all edges, minimalizing after every step.

    An edgeless graph gives the unit ideal.
    """
    result = MonomialIdeal.unit(g.n)
    for u, v in g.edges():
        result = intersect(result, MonomialIdeal(g.n, (1 << u, 1 << v)))
    return result


def closed_form_cover_ideal_h(spec: HFamilySpec) -> MonomialIdeal:
    return MonomialIdeal(spec.n, tuple(closed_form_cover_masks(spec)))


def colon_by_monomial(i: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    return MonomialIdeal(i.n, tuple(g & ~u.mask for g in i.masks))


def equal(i: MonomialIdeal, j: MonomialIdeal) -> bool:
    _same_ring(i, j)
    return i.masks == j.masks


def _same_ring(i: MonomialIdeal, j: MonomialIdeal):
    if i.n != j.n:
        raise ValidationError(f"ideals live in different rings ({i.n} vs {j.n} variables)")
