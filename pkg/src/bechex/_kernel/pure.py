"""Pure-Python kernel backend.

Thin adapters over the reference implementations in bechex.codes and
bechex.lattice, working on byte-packed cell keys.  Used when the compiled
extension is unavailable or BECHEX_PURE is set; semantics match
bechex._kernel._fast exactly, only speed differs.
"""

from __future__ import annotations

from .. import lattice
from ..codes import Code, convexity_deficit
from .common import pack_cells, unpack_cells

BACKEND = "python"


def canonical_key(key: bytes) -> bytes:
    return pack_cells(lattice.canonical_cells(unpack_cells(key)))


def grow(parents) -> set:
    """Canonical keys of every one-cell extension of the given shapes."""
    out = set()
    for key in parents:
        cells = unpack_cells(key)
        cell_set = set(cells)
        tried = set()
        for q, r in cells:
            for dq, dr in lattice.NEIGHBOR_OFFSETS:
                nb = (q + dq, r + dr)
                if nb in cell_set or nb in tried:
                    continue
                tried.add(nb)
                out.add(pack_cells(lattice.canonical_cells(cells + (nb,))))
    return out


def simply_connected(key: bytes) -> bool:
    return lattice.is_simply_connected(unpack_cells(key))


def trace_code(key: bytes) -> str:
    """Canonical boundary code of a connected hole-free packed shape."""
    return str(lattice._boundary_code(unpack_cells(key)))


def code_deficit(code: str) -> int:
    """Convexity deficit of a digit string; -1 when undefined."""
    deficit = convexity_deficit(Code(tuple(int(ch) for ch in code)))
    return -1 if deficit is None else deficit
