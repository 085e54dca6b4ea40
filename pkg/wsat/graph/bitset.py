"""Helpers for vertex sets stored as machine-word bitsets."""
from typing import Iterable, Iterator


def iter_bits(bits: int) -> Iterator[int]:
    """Iterate over the set bits of `bits` in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def popcount(bits: int) -> int:
    return bits.bit_count()


def mask_of(vertices: Iterable[int]) -> int:
    """Build a bitset from an iterable of vertex labels."""
    bits = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"vertex labels must be non-negative, got {v}")
        bits |= 1 << v
    return bits


def bits_to_tuple(bits: int) -> tuple[int, ...]:
    return tuple(iter_bits(bits))


def lowest_bits(bits: int, count: int) -> int:
    """Keep only the `count` smallest members of `bits`."""
    kept = 0
    while bits and count > 0:
        low = bits & -bits
        kept |= low
        bits ^= low
        count -= 1
    return kept
