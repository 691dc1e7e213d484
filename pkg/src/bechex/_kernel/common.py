"""Byte-packed cell keys shared by both kernel backends.

A key is the normalised, sorted cell list written as one (q, r) byte pair
per cell.  Normalised coordinates of any shape small enough to enumerate
fit comfortably in a byte.
"""

from __future__ import annotations

from itertools import chain


def pack_cells(cells) -> bytes:
    """Normalise, sort and pack cells into a key."""
    cells = tuple(cells)
    min_q = min(q for q, _ in cells)
    min_r = min(r for _, r in cells)
    pairs = sorted((q - min_q, r - min_r) for q, r in cells)
    if pairs[-1][0] > 255 or max(r for _, r in pairs) > 255:
        raise ValueError("cell coordinates exceed the packed-key range")
    return bytes(chain.from_iterable(pairs))


def unpack_cells(key: bytes) -> tuple[tuple[int, int], ...]:
    return tuple((key[i], key[i + 1]) for i in range(0, len(key), 2))
