"""Helpers for vertex sets stored as Python ints (bit v set <=> vertex v present)."""

from typing import Iterable, Iterator


def from_iter(items: Iterable[int]) -> int:
    mask = 0
    for v in items:
        mask |= 1 << v
    return mask


def members(mask: int) -> Iterator[int]:
    """Yield set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: int) -> list[int]:
    return list(members(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def sort_key(mask: int) -> tuple[int, list[int]]:
    """(size, sorted members): the global order for covers and generators."""
    return popcount(mask), to_list(mask)


def minimalize(masks: Iterable[int]) -> list[int]:
    """Drop every set that contains another one; result sorted by `sort_key`."""
    kept: list[int] = []
    for m in sorted(set(masks), key=popcount):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return sorted(kept, key=sort_key)
