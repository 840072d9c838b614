"""Helpers for point sets encoded as Python ints (bit i = point i)."""

from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def full_mask(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def compress(mask: int, support: int) -> int:
    """Re-index the bits of ``mask`` lying in ``support`` densely.

    The k-th set bit of ``support`` becomes bit k of the result.
    """
    out = 0
    for k, i in enumerate(bits(support)):
        if mask >> i & 1:
            out |= 1 << k
    return out


def expand(mask: int, support: int) -> int:
    """Inverse of :func:`compress`."""
    out = 0
    for k, i in enumerate(bits(support)):
        if mask >> k & 1:
            out |= 1 << i
    return out
