"""Barycentric drawings from region face counts.

A vertex v splits the triangulation into three regions: R_i(v) is bounded
by the root paths of v in trees i-1 and i+1 together with the outer edge
opposite corner Ai.  Its coordinate x_i(v) counts the internal faces
inside R_i(v).  The counts of the 2n-5 internal faces add up to 2n-5 for
every vertex, so denom = 2n-5 turns them into barycentric coordinates;
corners sit at denom * e_i.

``region_counts`` evaluates a closed form built from subtree sizes and
depths in linear time; ``region_counts_oracle`` literally floods the dual
graph and is kept as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .realizer import Realizer
from .report import ValidationReport
from .triangulation import Triangulation


@dataclass(frozen=True)
class Drawing:
    """Integer barycentric coordinates; each row sums to denom."""

    coords: tuple[tuple[int, int, int], ...]
    denom: int

    @property
    def n(self) -> int:
        return len(self.coords)


def _tree_order(real: Realizer, tree: int) -> tuple[list[int], tuple[tuple[int, ...], ...]]:
    """Vertices in root-first order along tree `tree`, plus children lists."""
    children = real.tree_children(tree)
    order = [tree - 1]
    for v in order:
        order.extend(children[v])
    return order, children


def region_counts(tri: Triangulation, real: Realizer) -> tuple[tuple[int, int, int], ...]:
    """Face counts of the three regions, for every vertex, in O(n).

    For internal v the count decomposes along the region boundary:

        x_i(v) = 2 * inner_i(v) + depth_{i-1}(v) + depth_{i+1}(v) - 1

    where inner_i(v) counts vertices strictly inside R_i(v).  Every face
    of R_i(v) has either three corners in the closed region (2 * inner
    faces by an Euler count) or an edge on one of the two bounding paths.
    inner_i itself is a sum of subtree sizes of T_i hanging off the two
    bounding paths, which prefix sums along each tree give in one pass.
    """
    n = tri.n
    denom = 2 * n - 5
    size = [[1] * n for _ in range(3)]
    depth = [[0] * n for _ in range(3)]
    # hang[j][i][v] = sum of (size_j(b) - 1) over b on v's root path in tree i
    hang = [[[0] * n for _ in range(3)] for _ in range(3)]

    orders = []
    for tree in (1, 2, 3):
        order, children = _tree_order(real, tree)
        orders.append(order)
        t = tree - 1
        for v in reversed(order):
            for c in children[v]:
                size[t][v] += size[t][c]
        for v in order:
            for c in children[v]:
                depth[t][c] = depth[t][v] + 1
    for tree in (1, 2, 3):
        i = tree - 1
        for j in range(3):
            if j == i:
                continue
            row = hang[j][i]
            for v in orders[i]:
                p = real.parents[v][i]
                above = row[p] if p >= 0 else 0
                row[v] = above + size[j][v] - 1

    coords = []
    for v in range(n):
        if v < 3:
            coords.append(tuple(denom if i == v else 0 for i in range(3)))
            continue
        row = []
        for i in range(3):
            lo, hi = (i - 1) % 3, (i + 1) % 3
            inner = hang[i][lo][v] + hang[i][hi][v] - (size[i][v] - 1)
            row.append(2 * inner + depth[lo][v] + depth[hi][v] - 1)
        coords.append(tuple(row))
    return tuple(coords)


def region_counts_oracle(tri: Triangulation, real: Realizer, v: int) -> tuple[int, int, int]:
    """Count region faces for one internal vertex by dual flood fill.

    The walls are the edges of v's three root paths.  Removing them from
    the dual graph must leave exactly three components, one per outer
    edge; their sizes are the coordinates.
    """
    if v < 3:
        raise ValueError(f"vertex {v} is a corner; its coordinates are fixed by convention")
    walls = set()
    for tree in (1, 2, 3):
        a = v
        while a != tree - 1:
            b = real.parent(a, tree)
            walls.add((min(a, b), max(a, b)))
            a = b
    faces = tri.internal_faces()
    by_edge: dict[tuple[int, int], list[int]] = {}
    for idx, face in enumerate(faces):
        for k in range(3):
            a, b = face[k], face[(k + 1) % 3]
            by_edge.setdefault((min(a, b), max(a, b)), []).append(idx)

    comp = [-1] * len(faces)
    sizes = []
    for start in range(len(faces)):
        if comp[start] >= 0:
            continue
        label = len(sizes)
        stack = [start]
        comp[start] = label
        count = 0
        while stack:
            f = stack.pop()
            count += 1
            face = faces[f]
            for k in range(3):
                a, b = face[k], face[(k + 1) % 3]
                edge = (min(a, b), max(a, b))
                if edge in walls:
                    continue
                for g in by_edge[edge]:
                    if comp[g] < 0:
                        comp[g] = label
                        stack.append(g)
        sizes.append(count)
    if len(sizes) != 3:
        raise ValueError(f"walls of vertex {v} split the dual into {len(sizes)} parts, expected 3")

    # region i holds the internal face on the outer edge opposite corner i
    directed = {}
    for idx, face in enumerate(faces):
        for k in range(3):
            directed[(face[k], face[(k + 1) % 3])] = idx
    opposite = ((2, 1), (0, 2), (1, 0))
    result = tuple(sizes[comp[directed[e]]] for e in opposite)
    if sorted(comp[directed[e]] for e in opposite) != [0, 1, 2]:
        raise ValueError(f"regions of vertex {v} do not separate the outer edges")
    return result


def compute_drawing(tri: Triangulation, real: Realizer) -> Drawing:
    return Drawing(region_counts(tri, real), 2 * tri.n - 5)


def validate_drawing(tri: Triangulation, drawing: Drawing) -> ValidationReport:
    """Structural invariants: sums, corner placement, distinctness."""
    report = ValidationReport("drawing")
    n = tri.n
    if drawing.n != n:
        report.fail("SizeMismatch", f"drawing covers {drawing.n} vertices, expected {n}", (drawing.n, n))
        return report
    if drawing.denom != 2 * n - 5:
        report.fail("BadDenominator", f"denom is {drawing.denom}, expected 2n-5 = {2 * n - 5}", (drawing.denom,))
    for v, row in enumerate(drawing.coords):
        if min(row) < 0:
            report.fail("NegativeCoordinate", f"vertex {v} has coordinates {row}", (v,))
        if sum(row) != drawing.denom:
            report.fail("BadCoordinateSum", f"vertex {v} coordinates {row} sum to {sum(row)}", (v,))
    for corner in range(3):
        expected = tuple(drawing.denom if i == corner else 0 for i in range(3))
        if drawing.coords[corner] != expected:
            report.fail("BadCorner", f"corner {corner} at {drawing.coords[corner]}, expected {expected}", (corner,))
    if len(set(drawing.coords)) != n:
        dupes = sorted({c for c in drawing.coords if drawing.coords.count(c) > 1})
        report.fail("CoincidentVertices", f"coordinates repeat: {dupes[:3]}", tuple(dupes[:3]))
    return report


@dataclass(frozen=True)
class CartesianPlacement:
    """Exact planar points in the corner triangle (0,0), (1,0), (1/2, sqrt3/2).

    Vertex v sits at (xs[v] / (2 * denom), ys[v] * sqrt(3) / (2 * denom)).
    Keeping the sqrt(3) factored out makes squared distances rational, so
    all comparisons stay exact.
    """

    xs: tuple[int, ...]
    ys: tuple[int, ...]
    denom: int

    @property
    def n(self) -> int:
        return len(self.xs)

    def point(self, v: int) -> tuple[float, float]:
        scale = 2 * self.denom
        return (self.xs[v] / scale, self.ys[v] * 1.7320508075688772 / scale)

    def squared_distance_scaled(self, a: int, b: int) -> int:
        """Squared distance times (2 * denom)**2; exact integer."""
        dx = self.xs[a] - self.xs[b]
        dy = self.ys[a] - self.ys[b]
        return dx * dx + 3 * dy * dy


def to_cartesian(drawing: Drawing) -> CartesianPlacement:
    """Place A1 at the apex, A2 at the origin, A3 at (1, 0)."""
    xs = tuple(x1 + 2 * x3 for x1, _, x3 in drawing.coords)
    ys = tuple(x1 for x1, _, _ in drawing.coords)
    return CartesianPlacement(xs, ys, drawing.denom)
