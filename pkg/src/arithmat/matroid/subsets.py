"""
Sublists as bitmasks: bit i set means ground element i is present.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator


def full(size: int) -> int:
    return (1 << size) - 1


def members(mask: int) -> list[int]:
    """
    Indices present in `mask`, ascending.
    """
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def from_members(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def size(mask: int) -> int:
    return mask.bit_count()


def contains(mask: int, i: int) -> bool:
    return bool(mask >> i & 1)


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(mask: int) -> Iterator[int]:
    """
    Every submask of `mask`, starting from `mask` itself and ending at 0.
    """
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def subcube(mask: int) -> list[int]:
    """
    The submasks of `mask` indexed so that bit i of the position is
    the i-th member of `mask`. Lets transforms run on a dense array.
    """
    cube = [0]
    for i in members(mask):
        bit = 1 << i
        cube += [m | bit for m in cube]
    return cube


def expand(mask: int, v: int) -> int:
    """
    Insert a zero bit at position v, mapping a sublist of X minus v back into X.
    """
    low = mask & ((1 << v) - 1)
    return low | ((mask >> v) << (v + 1))


def compress(mask: int, v: int) -> int:
    """
    Drop bit v, the inverse of `expand`.
    """
    low = mask & ((1 << v) - 1)
    return low | ((mask >> (v + 1)) << v)


def mobius_superset(values: list[int], width: int) -> list[int]:
    """
    Superset Mobius transform on a cube of the given width:
    out[s] = sum over t containing s of (-1)^(|t| - |s|) values[t].
    """
    out = list(values)
    for i in range(width):
        bit = 1 << i
        for s in range(len(out)):
            if not s & bit:
                out[s] -= out[s | bit]
    return out
