"""Hexagonal-lattice geometry: walking, embedding and tracing boundaries.

Perimeter vertices live in the triangular lattice spanned by u = (1, 0)
and v = (1/2, sqrt(3)/2); a vertex is stored as its integer coefficient
pair (x, y).  Hexagon cells are addressed by axial coordinates (q, r);
two cells are adjacent exactly when their difference is one of the six
unit offsets.

The traversal convention is fixed throughout: boundaries are walked
counter-clockwise with the interior on the left, turning left by 60
degrees at perimeter vertices of degree 2 and right at vertices of
degree 3, so a closed simple boundary makes +6 net left turns.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .codes import Code, canonical
from .errors import Disconnected, Holed, InvalidSymbols, NotClosed, SelfIntersecting

__all__ = [
    "Benzenoid",
    "BoundaryWalk",
    "Cell",
    "Condensation",
    "DIRECTIONS",
    "EDGE_NEIGHBOR_OFFSETS",
    "NEIGHBOR_OFFSETS",
    "Vertex",
    "canonical_cells",
    "condensation_class",
    "embed",
    "inner_dual",
    "is_simply_connected",
    "mirror_cells",
    "normalize_cells",
    "trace",
    "walk",
]

Vertex = tuple[int, int]
Cell = tuple[int, int]

#: Unit steps of the triangular vertex lattice, 60 degrees apart, CCW.
DIRECTIONS: tuple[Vertex, ...] = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

#: Axial offsets of the six neighbours of a cell.  The same six pairs as
#: DIRECTIONS: the offset of the hexagon faced when a boundary edge walked
#: in direction k ends also works out to NEIGHBOR_OFFSETS[k].
NEIGHBOR_OFFSETS: tuple[Cell, ...] = DIRECTIONS

#: Axial offset of the cell across edge j, where edge j of a cell is the
#: one walked in direction j while the cell lies on the left.
EDGE_NEIGHBOR_OFFSETS: tuple[Cell, ...] = (
    (1, -1),
    (1, 0),
    (0, 1),
    (-1, 1),
    (-1, 0),
    (0, -1),
)


class Condensation(Enum):
    """Fusion pattern of a benzenoid (shape of its inner dual)."""

    CATACONDENSED_UNBRANCHED = "catacondensed-unbranched"
    CATACONDENSED_BRANCHED = "catacondensed-branched"
    PERICONDENSED = "pericondensed"


@dataclass(frozen=True, slots=True)
class BoundaryWalk:
    """Closed boundary walk: edge start vertices plus edge directions.

    ``vertices`` holds one entry per edge plus the repeated start vertex.
    """

    vertices: tuple[Vertex, ...]
    directions: tuple[int, ...]

    @property
    def simple(self) -> bool:
        """True when no lattice vertex is visited twice (start excepted)."""
        interior = self.vertices[:-1]
        return len(set(interior)) == len(interior)


@dataclass(frozen=True, slots=True)
class Benzenoid:
    """A validated benzenoid: normalised cells plus derived identity data."""

    cells: tuple[Cell, ...]
    code: Code
    hexagons: int
    condensation: Condensation


def _cell_center(cell: Cell) -> Vertex:
    # Hexagon centres sit on the triangular sublattice (x - y) % 3 == 2;
    # the axial origin cell is centred at (1, -1).
    q, r = cell
    return (2 * q + r + 1, -q + r - 1)


def _center_cell(center: Vertex) -> Cell:
    x, y = center
    q = (x - y - 2) // 3
    return (q, x - 1 - 2 * q)


def walk(code: Code) -> BoundaryWalk:
    """Walk a code from (0, 0) in direction 0: each symbol s advances one
    edge then turns left, s - 1 times, then advances one edge and turns
    right.  Raises NotClosed unless the walk returns to the start vertex
    with exactly +6 net left turns (equivalently, winding 6)."""
    if code.is_benzene:
        raise InvalidSymbols("the benzene code has no degree-3 vertices to walk")
    x = y = 0
    turn = 0  # net left turns, not reduced mod 6
    vertices = [(0, 0)]
    directions = []
    for s in code.symbols:
        for step in range(s):
            d = turn % 6
            dx, dy = DIRECTIONS[d]
            directions.append(d)
            x += dx
            y += dy
            vertices.append((x, y))
            turn += 1 if step < s - 1 else -1
    if (x, y) != (0, 0) or turn != 6:
        raise NotClosed(
            f"walk of {code} ends at {(x, y)} with {turn} net left turns"
        )
    return BoundaryWalk(tuple(vertices), tuple(directions))


def embed(code: Code) -> Benzenoid:
    """Realise a code as a benzenoid cell set.

    Accepts either traversal orientation; a reversed code yields the
    mirror-image cell set.  Raises NotClosed when the walk fails to close
    and SelfIntersecting when it revisits a vertex (helicene-like codes).
    """
    if code.is_benzene:
        return Benzenoid(((0, 0),), code, 1, Condensation.CATACONDENSED_UNBRANCHED)
    w = walk(code)
    if not w.simple:
        raise SelfIntersecting(f"boundary of {code} revisits a lattice vertex")
    boundary_edges = set()
    cells: set[Cell] = set()
    for a, d in zip(w.vertices, w.directions):
        dx, dy = DIRECTIONS[d]
        b = (a[0] + dx, a[1] + dy)
        boundary_edges.add(frozenset((a, b)))
        lx, ly = DIRECTIONS[(d + 1) % 6]
        cells.add(_center_cell((a[0] + lx, a[1] + ly)))
    # Flood inward across shared edges that are not on the boundary.
    stack = list(cells)
    while stack:
        cell = stack.pop()
        corners = _corners(cell)
        for j in range(6):
            if frozenset((corners[j], corners[(j + 1) % 6])) in boundary_edges:
                continue
            dq, dr = EDGE_NEIGHBOR_OFFSETS[j]
            neighbour = (cell[0] + dq, cell[1] + dr)
            if neighbour not in cells:
                cells.add(neighbour)
                stack.append(neighbour)
    norm = normalize_cells(cells)
    return Benzenoid(norm, canonical(code), len(norm), condensation_class(norm))


def _corners(cell: Cell) -> list[Vertex]:
    cx, cy = _cell_center(cell)
    return [
        (cx + DIRECTIONS[(4 + j) % 6][0], cy + DIRECTIONS[(4 + j) % 6][1])
        for j in range(6)
    ]


def normalize_cells(cells) -> tuple[Cell, ...]:
    """Translate so the least q and least r are 0; return sorted cells."""
    cells = tuple(cells)
    if not cells:
        raise ValueError("empty cell set")
    min_q = min(q for q, _ in cells)
    min_r = min(r for _, r in cells)
    return tuple(sorted((q - min_q, r - min_r) for q, r in cells))


def _is_connected(cells: set[Cell]) -> bool:
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        q, r = stack.pop()
        for dq, dr in NEIGHBOR_OFFSETS:
            nb = (q + dq, r + dr)
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def is_simply_connected(cells) -> bool:
    """True when the complement has a single (unbounded) component.

    Flood-fills the complement inside a one-cell margin around the
    bounding box; any complement cell left unreached sits in a hole.
    """
    cell_set = set(cells)
    min_q = min(q for q, _ in cell_set) - 1
    max_q = max(q for q, _ in cell_set) + 1
    min_r = min(r for _, r in cell_set) - 1
    max_r = max(r for _, r in cell_set) + 1
    seen = {(min_q, min_r)}
    stack = [(min_q, min_r)]
    while stack:
        q, r = stack.pop()
        for dq, dr in NEIGHBOR_OFFSETS:
            nb = (q + dq, r + dr)
            if (
                min_q <= nb[0] <= max_q
                and min_r <= nb[1] <= max_r
                and nb not in cell_set
                and nb not in seen
            ):
                seen.add(nb)
                stack.append(nb)
    total = (max_q - min_q + 1) * (max_r - min_r + 1)
    return len(seen) == total - len(cell_set)


def trace(cells) -> Code:
    """Boundary-edges code of a cell set, in canonical form.

    Raises Disconnected or Holed when the set is not a benzenoid.
    """
    norm = normalize_cells(cells)
    if not _is_connected(set(norm)):
        raise Disconnected("cells do not form an edge-connected set")
    if not is_simply_connected(norm):
        raise Holed("cell set surrounds at least one hole")
    return _boundary_code(norm)


def _boundary_code(norm: tuple[Cell, ...]) -> Code:
    """Trace the perimeter of a connected hole-free normalised cell set."""
    if len(norm) == 1:
        return Code((6,))
    cell_set = set(norm)
    start_cell = norm[0]  # least cell is always on the boundary
    j0 = next(
        j
        for j, (dq, dr) in enumerate(EDGE_NEIGHBOR_OFFSETS)
        if (start_cell[0] + dq, start_cell[1] + dr) not in cell_set
    )
    # State (cell, k): the boundary edge walked in direction k with `cell`
    # interior on the left.  At the edge's far vertex the hexagon straight
    # ahead decides the turn: present = right turn (degree-3 vertex, the
    # symbol boundary), absent = left turn.
    cell, k = start_cell, j0
    turns: list[bool] = []
    limit = 6 * len(norm) + 6
    while True:
        dq, dr = NEIGHBOR_OFFSETS[k]
        ahead = (cell[0] + dq, cell[1] + dr)
        if ahead in cell_set:
            turns.append(True)
            cell, k = ahead, (k - 1) % 6
        else:
            turns.append(False)
            k = (k + 1) % 6
        if (cell, k) == (start_cell, j0):
            break
        if len(turns) > limit:
            raise RuntimeError("perimeter walk failed to terminate")
    m = len(turns)
    first = turns.index(True)
    symbols = []
    run = 0
    for i in range(first + 1, first + 1 + m):
        run += 1
        if turns[i % m]:
            symbols.append(run)
            run = 0
    return canonical(Code(tuple(symbols)))


def inner_dual(cells) -> dict[Cell, tuple[Cell, ...]]:
    """Adjacency map of cells sharing an edge (the hexagon-fusion graph)."""
    cell_set = set(cells)
    dual = {}
    for q, r in sorted(cell_set):
        dual[(q, r)] = tuple(
            sorted(
                (q + dq, r + dr)
                for dq, dr in NEIGHBOR_OFFSETS
                if (q + dq, r + dr) in cell_set
            )
        )
    return dual


def condensation_class(cells) -> Condensation:
    """Classify by the inner dual: cyclic = pericondensed, otherwise a
    tree; a tree with a degree-3 node is branched, else unbranched."""
    cell_set = set(cells)
    if not _is_connected(cell_set):
        raise Disconnected("cells do not form an edge-connected set")
    dual = inner_dual(cell_set)
    edges = sum(len(nbrs) for nbrs in dual.values()) // 2
    if edges > len(dual) - 1:
        return Condensation.PERICONDENSED
    if any(len(nbrs) > 2 for nbrs in dual.values()):
        return Condensation.CATACONDENSED_BRANCHED
    return Condensation.CATACONDENSED_UNBRANCHED


def mirror_cells(cells) -> tuple[Cell, ...]:
    """The reflected cell set, normalised."""
    return normalize_cells((q, -q - r) for q, r in cells)


def canonical_cells(cells) -> tuple[Cell, ...]:
    """Least normalised form over the 12 point symmetries of the lattice
    (6 rotations, each optionally mirrored); the key for isomorph tests."""
    best = None
    for reflected in (False, True):
        pts = [(q, -q - r) for q, r in cells] if reflected else list(cells)
        for _ in range(6):
            pts = [(-r, q + r) for q, r in pts]
            cand = normalize_cells(pts)
            if best is None or cand < best:
                best = cand
    return best
