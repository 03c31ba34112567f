"""Small helpers for int bitmasks over frame element indices.

Subsets of a frame's carrier (sublocales, subframe members, ideals) are
plain Python ints; bit i set means element i belongs to the subset.
"""


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def bits(mask: int):
    """Yield the set bit positions in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def indices(mask: int) -> tuple:
    return tuple(bits(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0
