"""Planar triangulations as rotation systems.

A triangulation on vertices 0..n-1 is stored as one counterclockwise
neighbor list per vertex.  The outer face is always the corner triangle
(0, 1, 2), oriented so that traversing 0 -> 1 -> 2 walks the outer
boundary.  Everything downstream (realizers, drawings, routing) assumes
this normalization, so construction is strict about it.

Face traversal convention: the face to the left of the directed edge
(u, v) continues with (v, w) where w is the neighbor immediately after u
in the rotation of v.  With counterclockwise rotations this makes the
orbit of (0, 1) exactly the outer triangle.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence

from .report import ValidationReport

#: The three outer corners, in outer-face order.
CORNERS = (0, 1, 2)


class TriangulationError(ValueError):
    """Base class for rotation-system validation failures."""

    def __init__(self, message: str, subject: tuple = ()):
        super().__init__(message)
        self.subject = subject


class InconsistentRotation(TriangulationError):
    """Neighbor lists disagree: asymmetry, self-loop, or repeated entry."""


class NotTriangulated(TriangulationError):
    """Some face orbit is not a triangle, or the graph is disconnected."""


class WrongEdgeCount(TriangulationError):
    """Edge count differs from 3n - 6."""


class MissingOuterFace(TriangulationError):
    """(0, 1, 2) is not an oriented face of the embedding."""


class Triangulation:
    """Immutable rotation system with O(1) successor lookups.

    The constructor checks only local structure (entry ranges, loops,
    duplicates, symmetry); use :func:`build_triangulation` to get the
    full guarantee that the data is a triangulation with outer face
    (0, 1, 2).
    """

    __slots__ = ("n", "rotation", "_pos", "_faces")

    def __init__(self, rotation: Sequence[Sequence[int]]):
        n = len(rotation)
        if n < 3:
            raise NotTriangulated(f"need at least 3 vertices, got {n}")
        rot = tuple(tuple(nbrs) for nbrs in rotation)
        pos: list[dict[int, int]] = []
        for v, nbrs in enumerate(rot):
            index: dict[int, int] = {}
            for i, w in enumerate(nbrs):
                if not 0 <= w < n:
                    raise InconsistentRotation(f"vertex {v} lists out-of-range neighbor {w}", (v, w))
                if w == v:
                    raise InconsistentRotation(f"vertex {v} lists itself as a neighbor", (v,))
                if w in index:
                    raise InconsistentRotation(f"vertex {v} lists neighbor {w} twice", (v, w))
                index[w] = i
            pos.append(index)
        for v in range(n):
            for w in pos[v]:
                if v not in pos[w]:
                    raise InconsistentRotation(f"edge ({v}, {w}) missing its reverse entry", (v, w))
        self.n = n
        self.rotation = rot
        self._pos = pos
        self._faces: tuple[tuple[int, int, int], ...] | None = None

    # -- basic queries ------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotation[v]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._pos[u]

    def succ(self, v: int, u: int) -> int:
        """Neighbor immediately after u in the rotation of v."""
        nbrs = self.rotation[v]
        return nbrs[(self._pos[v][u] + 1) % len(nbrs)]

    def pred(self, v: int, u: int) -> int:
        """Neighbor immediately before u in the rotation of v."""
        nbrs = self.rotation[v]
        return nbrs[(self._pos[v][u] - 1) % len(nbrs)]

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.rotation) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Undirected edges as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in sorted(self.rotation[u]):
                if u < v:
                    yield (u, v)

    def is_corner(self, v: int) -> bool:
        return v < 3

    def internal_vertices(self) -> range:
        return range(3, self.n)

    def is_outer_edge(self, u: int, v: int) -> bool:
        return u < 3 and v < 3

    # -- faces ----------------------------------------------------------

    def face_orbit(self, u: int, v: int) -> tuple[int, ...]:
        """Orbit of the directed edge (u, v) under the face-successor map."""
        orbit = [u]
        a, b = u, v
        while b != u:
            orbit.append(b)
            a, b = b, self.succ(b, a)
            if len(orbit) > self.n:
                break  # corrupt rotation; caller's validator reports it
        return tuple(orbit)

    def face_orbits(self) -> tuple[tuple[int, ...], ...]:
        """All face orbits, each rotated so its smallest vertex is first."""
        seen: set[tuple[int, int]] = set()
        orbits: list[tuple[int, ...]] = []
        for u in range(self.n):
            for v in self.rotation[u]:
                if (u, v) in seen:
                    continue
                orbit = self.face_orbit(u, v)
                for i, a in enumerate(orbit):
                    seen.add((a, orbit[(i + 1) % len(orbit)]))
                orbits.append(_canonical(orbit))
        return tuple(sorted(orbits))

    def internal_faces(self) -> tuple[tuple[int, int, int], ...]:
        """Oriented internal triangles, outer orbit (0, 1, 2) excluded."""
        if self._faces is None:
            faces = tuple(f for f in self.face_orbits() if f != CORNERS)
            self._faces = faces  # type: ignore[assignment]
        return self._faces  # type: ignore[return-value]


def _canonical(orbit: tuple[int, ...]) -> tuple[int, ...]:
    i = orbit.index(min(orbit))
    return orbit[i:] + orbit[:i]


def validate_triangulation(data: Triangulation | Sequence[Sequence[int]]) -> ValidationReport:
    """Check that data is a triangulation with oriented outer face (0, 1, 2).

    Accepts either a constructed Triangulation or raw neighbor lists, so
    structurally broken input is reported rather than raised.
    """
    report = ValidationReport("triangulation")
    if isinstance(data, Triangulation):
        tri = data
    else:
        try:
            tri = Triangulation(data)
        except TriangulationError as exc:
            report.fail(type(exc).__name__, str(exc), exc.subject)
            return report

    n = tri.n
    expected = 3 * n - 6
    if tri.num_edges != expected:
        report.fail("WrongEdgeCount", f"{tri.num_edges} edges, expected 3n-6 = {expected}", (tri.num_edges, expected))

    # connectivity via rotation structure
    seen = {0}
    stack = [0]
    while stack:
        for w in tri.neighbors(stack.pop()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        missing = min(set(range(n)) - seen)
        report.fail("NotTriangulated", f"graph is disconnected (vertex {missing} unreachable from 0)", (missing,))
        return report

    non_triangle = [f for f in tri.face_orbits() if len(f) != 3]
    for face in non_triangle:
        report.fail("NotTriangulated", f"face {face} has {len(face)} sides", face)
    if not non_triangle and len(tri.face_orbits()) != 2 * n - 4:
        report.fail("NotTriangulated", f"{len(tri.face_orbits())} faces, expected 2n-4 = {2 * n - 4}", ())

    if CORNERS not in tri.face_orbits():
        msg = "no oriented face (0, 1, 2)"
        if (0, 2, 1) in tri.face_orbits():
            msg += " (found the reversed orbit; input may use clockwise rotations)"
        report.fail("MissingOuterFace", msg, CORNERS)
    return report


_ERRORS = {
    "InconsistentRotation": InconsistentRotation,
    "NotTriangulated": NotTriangulated,
    "WrongEdgeCount": WrongEdgeCount,
    "MissingOuterFace": MissingOuterFace,
}


def build_triangulation(rotation: Sequence[Sequence[int]]) -> Triangulation:
    """Construct and fully validate; raise the first violation found."""
    tri = Triangulation(rotation)  # raises InconsistentRotation on local defects
    report = validate_triangulation(tri)
    if not report.ok:
        first = report.findings[0]
        raise _ERRORS.get(first.code, TriangulationError)(first.message, tuple(first.subject))
    return tri
