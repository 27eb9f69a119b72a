"""Coordinate sectors and the saturated subgraph.

Relative to a vertex u, the plane splits into six sectors given by the
signs of the coordinate differences.  The odd sectors s1, s3, s5 are the
wedges around the three tree directions; even sectors sit between them.
A single zero difference means the target lies exactly on a sector
boundary; such ties resolve toward the adjacent odd sector and are
flagged so callers can audit them.  Two zeros would force all three
(coordinate sums are equal), i.e. identical coordinates, which is an
error.

The saturated subgraph keeps, per internal vertex and odd sector, the
unique neighbor that is smallest in the sector's coordinate order.  For
drawings coming from a realizer this recovers exactly the three parent
edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .drawing import Drawing
from .realizer import Realizer
from .triangulation import Triangulation

Coord = tuple[int, int, int]


class IdenticalCoordinates(ValueError):
    """Two vertices share a coordinate triple; sectors are undefined."""

    def __init__(self, a: Coord, b: Coord):
        super().__init__(f"coordinates {a} and {b} coincide")
        self.pair = (a, b)


class EmptySector(ValueError):
    """An internal vertex has no neighbor in one of its odd sectors."""

    def __init__(self, vertex: int, tree: int):
        super().__init__(f"vertex {vertex} has no neighbor in sector s{2 * tree - 1}")
        self.vertex = vertex
        self.tree = tree


class NoUniqueMinimum(ValueError):
    """A sector's neighbors have no least element in the sector order."""

    def __init__(self, vertex: int, tree: int, candidates: tuple[int, ...]):
        super().__init__(
            f"vertex {vertex}, sector s{2 * tree - 1}: no unique minimum among {list(candidates)}"
        )
        self.vertex = vertex
        self.tree = tree
        self.candidates = candidates


def sign_triple(u: Coord, v: Coord) -> tuple[int, int, int]:
    """Componentwise sign of v - u."""
    d = tuple((x > y) - (x < y) for x, y in zip(v, u))
    if d == (0, 0, 0):
        raise IdenticalCoordinates(u, v)
    return d


#: sign pattern -> (sector 1..6, on a sector boundary)
_SECTOR = {
    (1, -1, -1): (1, False),
    (1, 1, -1): (2, False),
    (-1, 1, -1): (3, False),
    (-1, 1, 1): (4, False),
    (-1, -1, 1): (5, False),
    (1, -1, 1): (6, False),
    # one tie: resolve to the adjacent odd sector
    (1, 0, -1): (1, True),
    (1, -1, 0): (1, True),
    (0, 1, -1): (3, True),
    (-1, 1, 0): (3, True),
    (0, -1, 1): (5, True),
    (-1, 0, 1): (5, True),
}


def classify_sector(u: Coord, v: Coord) -> tuple[int, bool]:
    """Sector of v relative to u, plus a boundary-tie flag."""
    signs = sign_triple(u, v)
    try:
        return _SECTOR[signs]
    except KeyError:
        raise ValueError(f"sign pattern {signs} is not a sector; coordinate sums differ") from None


def sector_leq(tree: int, v: Coord, w: Coord) -> bool:
    """The partial order of sector s(2*tree - 1): closer to u wins.

    v precedes w when v is no further out in the tree's own coordinate
    and no closer in the other two.
    """
    i = tree - 1
    hi, lo = tree % 3, (tree + 1) % 3
    return v[i] <= w[i] and v[hi] >= w[hi] and v[lo] >= w[lo]


@dataclass(frozen=True)
class SaturatedGraph:
    """Per internal vertex the retained neighbor of each odd sector.

    ``entries[v]`` is None for corners.  ``boundary_labels`` records every
    neighbor classification that needed a boundary tie-break.
    """

    entries: tuple[tuple[int, int, int] | None, ...]
    boundary_labels: tuple[tuple[int, int, int], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def sat(self, v: int, tree: int) -> int:
        entry = self.entries[v]
        if entry is None:
            raise ValueError(f"vertex {v} is a corner; corners keep no saturated entries")
        return entry[tree - 1]


def extract_saturated(tri: Triangulation, drawing: Drawing) -> SaturatedGraph:
    """Keep the order-minimal neighbor per odd sector of every internal vertex.

    Raises EmptySector or NoUniqueMinimum with the offending vertex when
    the drawing does not support the extraction.
    """
    coords = drawing.coords
    entries: list[tuple[int, int, int] | None] = [None] * tri.n
    boundary: list[tuple[int, int, int]] = []
    for u in tri.internal_vertices():
        buckets: dict[int, list[int]] = {1: [], 2: [], 3: []}
        for w in tri.neighbors(u):
            sector, tie = classify_sector(coords[u], coords[w])
            if tie:
                boundary.append((u, w, sector))
            if sector % 2:
                buckets[(sector + 1) // 2].append(w)
        chosen = []
        for tree in (1, 2, 3):
            bucket = buckets[tree]
            if not bucket:
                raise EmptySector(u, tree)
            minima = [
                v for v in bucket if all(sector_leq(tree, coords[v], coords[w]) for w in bucket)
            ]
            if len(minima) != 1:
                raise NoUniqueMinimum(u, tree, tuple(minima or bucket))
            chosen.append(minima[0])
        entries[u] = tuple(chosen)
    return SaturatedGraph(tuple(entries), tuple(boundary))


def check_saturated(tri: Triangulation, drawing: Drawing, sat: SaturatedGraph):
    """Audit a saturated graph against its triangulation and drawing."""
    from .report import ValidationReport

    report = ValidationReport("saturated")
    coords = drawing.coords
    if sat.n != tri.n:
        report.fail("SizeMismatch", f"saturated graph covers {sat.n} vertices, expected {tri.n}", (sat.n,))
        return report
    for u in tri.internal_vertices():
        entry = sat.entries[u]
        if entry is None:
            report.fail("MissingEntry", f"internal vertex {u} has no saturated entry", (u,))
            continue
        for tree, v in zip((1, 2, 3), entry):
            if not tri.adjacent(u, v):
                report.fail("NotAnEdge", f"saturated edge {u}->{v} is not in the graph", (u, v, tree))
                continue
            sector, _ = classify_sector(coords[u], coords[v])
            if sector != 2 * tree - 1:
                report.fail(
                    "WrongSector",
                    f"saturated entry {u}->{v} for s{2 * tree - 1} lies in s{sector}",
                    (u, v, tree),
                )
    for u in range(3):
        if sat.entries[u] is not None:
            report.fail("CornerEntry", f"corner {u} must not carry saturated entries", (u,))
    for u, w, sector in sat.boundary_labels:
        report.note("BoundaryTie", f"neighbor {w} of {u} sits on the boundary of s{sector}", (u, w, sector))
    return report


@dataclass(frozen=True)
class SatRealizerDiff:
    """Result of comparing saturated entries with realizer parents."""

    equal: bool
    mismatches: tuple[tuple[int, int, int, int], ...]  # (vertex, tree, sat, parent)


def saturated_equals_realizer(sat: SaturatedGraph, real: Realizer) -> SatRealizerDiff:
    mismatches = []
    for u in range(3, sat.n):
        entry = sat.entries[u]
        for tree in (1, 2, 3):
            s = entry[tree - 1] if entry else -1
            p = real.parent(u, tree)
            if s != p:
                mismatches.append((u, tree, s, p))
    return SatRealizerDiff(not mismatches, tuple(mismatches))
