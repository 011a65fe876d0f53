"""The ideal-pentagon reflection tiling and its vertex index scheme.

The base ideal pentagon has vertices 1-phi/2, phi/2, inf, -phi/2, phi/2-1 on
the direction line; reflecting it in its sides tiles the hyperbolic plane,
and the tiling vertices are exactly the periodic directions.  The vertices
inside the fundamental arc [phi/2-1, 1-phi/2] are addressed by index paths
over {0,1,2,3} whose last digit is nonzero: an arc spawns a pentagon with
three new vertices (digits 1,2,3 in order), and its four sub-arcs get digits
0..3.

Conventions frozen here (see README): the empty path names the arc endpoint
alpha = 1-phi/2, whose strip words are (41, 23); the mirror endpoint
phi/2-1 carries (25, 43); digit-1 vertices sit nearest alpha.  Coordinate 0
is the middle digit-1 vertex, the unique vertex fixed by the vertical
reflection x -> -x.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .golden import (GoldenNum, HALF_PHI, HALF_PHI_MINUS_ONE, ONE_MINUS_HALF_PHI,
                     ZERO)
from .projline import (INFINITY, ProjPoint, fractional_map_from_pairs,
                       mobius_apply, proj, reflect_across)
from .words import complement_path, validate_path


@dataclass(frozen=True)
class IndexPath:
    """Vertex address alpha_{n1...nk}; empty digits denote alpha itself."""

    digits: tuple[int, ...] = ()

    def __post_init__(self):
        validate_path(self.digits)

    def __str__(self):
        return "".join(map(str, self.digits)) if self.digits else "-"

    def __len__(self):
        return len(self.digits)

    @classmethod
    def parse(cls, text: str) -> "IndexPath":
        text = text.strip()
        if text in ("-", ""):
            return cls(())
        if not text.isdigit():
            raise ValueError(f"index path must be digits or '-': {text!r}")
        return cls(tuple(int(c) for c in text))


class _Mirror:
    """The reflected endpoint phi/2 - 1 of the fundamental arc.

    It is the one closed-arc vertex that no index path names (the index
    scheme grows from the alpha end), so it gets a sentinel identity.
    """

    def __repr__(self):
        return "MIRROR"

    def __str__(self):
        return "R"


MIRROR = _Mirror()

ALPHA_COORD = proj(ONE_MINUS_HALF_PHI)
MIRROR_COORD = proj(HALF_PHI_MINUS_ONE)

ROOT_VERTICES = (
    proj(ONE_MINUS_HALF_PHI),
    proj(HALF_PHI),
    INFINITY,
    proj(-HALF_PHI),
    proj(HALF_PHI_MINUS_ONE),
)


@dataclass(frozen=True)
class IdealPentagon:
    """Five ideal vertices in cyclic order plus the reflection generation."""

    vertices: tuple[ProjPoint, ...]
    generation: int = 0

    def side(self, i: int) -> tuple[ProjPoint, ProjPoint]:
        return (self.vertices[i % 5], self.vertices[(i + 1) % 5])


def root_pentagon() -> IdealPentagon:
    return IdealPentagon(ROOT_VERTICES, 0)


def child_pentagon(p: IdealPentagon, side: int) -> IdealPentagon:
    """Reflection of p across one of its sides, sharing that side's endpoints.

    The returned cyclic order runs from the first shared endpoint through
    the three new vertices to the second, matching the boundary order of the
    arc the side cuts off.
    """
    a, b = p.side(side)
    rest = [p.vertices[(side + k) % 5] for k in (2, 3, 4)]
    refl = [reflect_across(a, b, v) for v in rest]
    return IdealPentagon((a, refl[2], refl[1], refl[0], b), p.generation + 1)


# --- the fundamental-arc tree ----------------------------------------------


@dataclass(frozen=True)
class Arc:
    """A side of the tiling inside the fundamental arc.

    first/second are vertex identities (IndexPath or MIRROR) in boundary
    order from the alpha end; coordinates decrease from first to second.
    spawn() yields the three new vertices of the pentagon attached beyond
    this arc.
    """

    address: tuple[int, ...]
    first: object
    second: object
    first_coord: ProjPoint
    second_coord: ProjPoint
    source: tuple[ProjPoint, ...]  # pentagon this arc is a side of


_ROOT_ARC = Arc((), IndexPath(()), MIRROR, ALPHA_COORD, MIRROR_COORD,
                ROOT_VERTICES)

_arc_cache: dict[tuple[int, ...], Arc] = {(): _ROOT_ARC}
_spawn_cache: dict[tuple[int, ...], tuple[ProjPoint, ProjPoint, ProjPoint]] = {}


def _spawn(arc: Arc) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
    """New vertex coordinates of the pentagon beyond this arc, in order."""
    got = _spawn_cache.get(arc.address)
    if got is not None:
        return got
    a, b = arc.first_coord, arc.second_coord
    news = [reflect_across(a, b, v) for v in arc.source
            if v != a and v != b]
    assert len(news) == 3
    news.sort(key=lambda p: p.value, reverse=True)  # boundary order from alpha
    triple = tuple(news)
    _spawn_cache[arc.address] = triple
    return triple


def arc_at(address: tuple[int, ...]) -> Arc:
    """The arc with the given address string over {0,1,2,3}."""
    arc = _arc_cache.get(address)
    if arc is not None:
        return arc
    parent = arc_at(address[:-1])
    w = address[-1]
    m = _spawn(parent)
    ids = (parent.first,
           IndexPath(parent.address + (1,)),
           IndexPath(parent.address + (2,)),
           IndexPath(parent.address + (3,)),
           parent.second)
    coords = (parent.first_coord, m[0], m[1], m[2], parent.second_coord)
    child_pent = (parent.first_coord, m[0], m[1], m[2], parent.second_coord)
    arc = Arc(address, ids[w], ids[w + 1], coords[w], coords[w + 1],
              child_pent)
    _arc_cache[address] = arc
    return arc


def index_to_direction(path: IndexPath | tuple[int, ...]) -> ProjPoint:
    """Exact boundary coordinate of the vertex named by an index path."""
    digits = path.digits if isinstance(path, IndexPath) else tuple(path)
    validate_path(digits)
    if not digits:
        return ALPHA_COORD
    arc = arc_at(digits[:-1])
    return _spawn(arc)[digits[-1] - 1]


def vertex_coordinate(vertex) -> ProjPoint:
    """Coordinate of a vertex identity (IndexPath, digit tuple, or MIRROR)."""
    if vertex is MIRROR:
        return MIRROR_COORD
    return index_to_direction(vertex)


def apply_R(path: IndexPath) -> IndexPath:
    """Index action of the vertical reflection: 3-n digits, 4-n on the last.

    The empty path maps to itself; as a coordinate statement that is special
    (alpha reflects to the mirror endpoint, see MIRROR), while every
    nonempty path satisfies coord(apply_R(p)) == -coord(p).
    """
    return IndexPath(complement_path(path.digits))


def apply_Tj_index(j: int, path: IndexPath) -> IndexPath:
    """Index action of T_j: prepend j-1 and complement the old digits.

    On the empty path the geometric action sends alpha to the far endpoint
    of sub-arc j-1, which is the vertex (j) for j in 1..3 and the mirror
    endpoint for j = 4; the latter has no index name, so it raises.
    """
    if j not in (1, 2, 3, 4):
        raise ValueError("j must be in 1..4")
    if not path.digits:
        if j == 4:
            raise ValueError("T_4 sends alpha to the mirror endpoint, "
                             "which no index path names")
        return IndexPath((j,))
    return IndexPath((j - 1,) + complement_path(path.digits))


def enumerate_vertices(max_generation: int) -> Iterator[tuple[object, ProjPoint]]:
    """Yield every closed-arc tiling vertex with index length <= max_generation.

    Yields (IndexPath, coordinate) pairs in depth order, the empty path
    (alpha = 1-phi/2) first, and finally (MIRROR, phi/2-1) so both arc
    endpoints appear exactly once.
    """
    if max_generation < 0:
        raise ValueError("max_generation must be >= 0")
    yield IndexPath(()), ALPHA_COORD
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(max_generation):
        new_frontier = []
        for addr in frontier:
            for last in (1, 2, 3):
                path = IndexPath(addr + (last,))
                yield path, index_to_direction(path)
            new_frontier.extend(addr + (w,) for w in (0, 1, 2, 3))
        frontier = new_frontier
    yield MIRROR, MIRROR_COORD


# --- direction-level action of T_j -----------------------------------------

def tj_mobius(j: int):
    """The fractional-linear boundary action matching apply_Tj_index.

    It maps the fundamental arc onto sub-arc j-1 reversing boundary order:
    alpha goes to that sub-arc's far endpoint, the mirror endpoint to its
    near endpoint, and coordinate 0 (the middle digit-1 vertex) to the
    middle new vertex beyond the sub-arc.
    """
    if j not in (1, 2, 3, 4):
        raise ValueError("j must be in 1..4")
    sub = arc_at((j - 1,))
    mid_src = index_to_direction(IndexPath((2,)))
    mid_dst = index_to_direction(IndexPath((j - 1, 2)))
    src = (ALPHA_COORD, MIRROR_COORD, mid_src)
    dst = (sub.second_coord, sub.first_coord, mid_dst)
    return fractional_map_from_pairs([s.pair() for s in src],
                                     [d.pair() for d in dst])


def apply_tj_direction(j: int, x: ProjPoint) -> ProjPoint:
    return mobius_apply(tj_mobius(j), x)
