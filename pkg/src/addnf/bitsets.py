"""Big-integer bitmask helpers.

Index sets over a fixed range(n) are represented as Python ints with bit i
standing for element i; intersection/union/complement become &, |, ^.
"""
from __future__ import annotations


def zero_bit_pattern(count: int, bit_exp: int) -> int:
    """Mask over range(count) of the integers whose bit ``bit_exp`` is 0.

    ``count`` must be a power of two with ``2**bit_exp < count`` or equal
    halves; built by repeated doubling, so cost is logarithmic in count.
    """
    half = 1 << bit_exp
    x = (1 << half) - 1
    span = half << 1
    while span < count:
        x |= x << span
        span <<= 1
    return x


def iter_bits(mask: int):
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_count(mask: int) -> int:
    return bin(mask).count("1")
