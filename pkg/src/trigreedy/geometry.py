"""Exact geometric validation of drawings.

All predicates work on the integer barycentric coordinates directly; no
floating point is involved.  The orientation of three points is the sign
of the 3x3 determinant of their coordinate rows, positive for
counterclockwise (the corner triangle A1, A2, A3 itself is positive).
"""

from __future__ import annotations

import numpy as np

from .drawing import Drawing
from .realizer import Realizer
from .report import ValidationReport
from .triangulation import Triangulation


def orient(a: tuple[int, int, int], b: tuple[int, int, int], c: tuple[int, int, int]) -> int:
    """Sign of the orientation of the triangle (a, b, c)."""
    det = (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )
    return (det > 0) - (det < 0)


def validate_three_wedge(tri: Triangulation, real: Realizer, drawing: Drawing) -> ValidationReport:
    """Every labeled edge must leave through its own wedge.

    The outgoing T_i edge of an internal vertex has to gain in coordinate
    i and not gain in the other two.  A zero difference in a non-i
    coordinate puts the edge on the wedge boundary; that is legal but
    recorded as a note for auditing.
    """
    report = ValidationReport("three-wedge")
    coords = drawing.coords
    for v in tri.internal_vertices():
        for tree in (1, 2, 3):
            p = real.parent(v, tree)
            delta = tuple(coords[p][c] - coords[v][c] for c in range(3))
            own = delta[tree - 1]
            others = [delta[c] for c in range(3) if c != tree - 1]
            if own <= 0 or max(others) > 0:
                report.fail(
                    "EdgeOutsideWedge",
                    f"T{tree} edge {v}->{p} has coordinate change {delta}",
                    (v, p, tree),
                )
            elif max(others) == 0:
                report.note(
                    "WedgeBoundary",
                    f"T{tree} edge {v}->{p} lies on the wedge boundary ({delta})",
                    (v, p, tree),
                )
    return report


def validate_enclosing_triangle(tri: Triangulation, real: Realizer, drawing: Drawing) -> ValidationReport:
    """No vertex may sit strictly inside the triangle enclosing an edge.

    A T_i edge u -> p spans an equilateral triangle cut out by the two
    wedge boundary lines through u and the coordinate-i level line
    through p: closed form { w : w_i <= p_i, w_{i+1} <= u_{i+1}, w_{i-1}
    <= u_{i-1} }.  Its open interior must contain no vertex; points on
    the boundary (any equality, in particular u and p themselves) are
    fine.
    """
    report = ValidationReport("enclosing-triangle")
    coords = np.asarray(drawing.coords, dtype=np.int64)
    for v in tri.internal_vertices():
        for tree in (1, 2, 3):
            p = real.parent(v, tree)
            i = tree - 1
            hi, lo = (i + 1) % 3, (i - 1) % 3
            inside = (
                (coords[:, i] < coords[p, i])
                & (coords[:, hi] < coords[v, hi])
                & (coords[:, lo] < coords[v, lo])
            )
            for w in np.flatnonzero(inside):
                report.fail(
                    "VertexInsideTriangle",
                    f"vertex {int(w)} lies inside the triangle of T{tree} edge {v}->{p}",
                    (v, p, tree, int(w)),
                )
    return report


def _orient_rows(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    return np.sign(np.einsum("ij,ij->i", a, np.cross(b, c)))


def _on_segment(a, b, p) -> bool:
    """Whether p lies on the closed segment a-b, given the three collinear."""
    lo0, hi0 = min(a[0], b[0]), max(a[0], b[0])
    lo1, hi1 = min(a[1], b[1]), max(a[1], b[1])
    return lo0 <= p[0] <= hi0 and lo1 <= p[1] <= hi1


def segments_cross(a, b, c, d) -> bool:
    """Exact closed-segment intersection for integer coordinate triples.

    Reference predicate for two segments with four pairwise distinct
    endpoints; shared-endpoint pairs are handled by the caller.
    """
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    flat = lambda p: (p[0] + 2 * p[2], p[0])  # any faithful planar projection works
    if o1 == 0 and _on_segment(flat(a), flat(b), flat(c)):
        return True
    if o2 == 0 and _on_segment(flat(a), flat(b), flat(d)):
        return True
    if o3 == 0 and _on_segment(flat(c), flat(d), flat(a)):
        return True
    if o4 == 0 and _on_segment(flat(c), flat(d), flat(b)):
        return True
    return False


def validate_planarity(tri: Triangulation, drawing: Drawing) -> ValidationReport:
    """Pairwise edge check: edges may meet only at shared endpoints.

    Quadratic in the edge count, so intended for moderate sizes; the
    orientation tests for all non-adjacent pairs run vectorized and the
    rare boundary situations fall back to the scalar predicate.
    """
    report = ValidationReport("planarity")
    coords = drawing.coords
    if len(set(coords)) != len(coords):
        report.fail("CoincidentVertices", "two vertices share coordinates; every incident edge pair overlaps", ())
        return report

    edges = [(u, v) for u, v in tri.edges()]
    m = len(edges)
    earr = np.asarray(edges, dtype=np.int64)
    carr = np.asarray(coords, dtype=np.int64)
    ii, jj = np.triu_indices(m, k=1)
    a, b = earr[ii, 0], earr[ii, 1]
    c, d = earr[jj, 0], earr[jj, 1]
    shared = (a == c) | (a == d) | (b == c) | (b == d)

    # disjoint pairs: vectorized straddle tests, zeros re-examined exactly
    ui, vi = a[~shared], b[~shared]
    uj, vj = c[~shared], d[~shared]
    pa, pb, pc, pd = carr[ui], carr[vi], carr[uj], carr[vj]
    o1 = _orient_rows(pa, pb, pc)
    o2 = _orient_rows(pa, pb, pd)
    o3 = _orient_rows(pc, pd, pa)
    o4 = _orient_rows(pc, pd, pb)
    crossing = (o1 * o2 < 0) & (o3 * o4 < 0)
    touching = (o1 == 0) | (o2 == 0) | (o3 == 0) | (o4 == 0)
    for k in np.flatnonzero(touching & ~crossing):
        if segments_cross(coords[ui[k]], coords[vi[k]], coords[uj[k]], coords[vj[k]]):
            crossing[k] = True
    for k in np.flatnonzero(crossing):
        report.fail(
            "EdgesCross",
            f"edges ({int(ui[k])},{int(vi[k])}) and ({int(uj[k])},{int(vj[k])}) intersect",
            (int(ui[k]), int(vi[k]), int(uj[k]), int(vj[k])),
        )

    # pairs sharing one endpoint may only overlap if collinear on the same side
    sa, sb, sc, sd = a[shared], b[shared], c[shared], d[shared]
    for x1, y1, x2, y2 in zip(sa, sb, sc, sd):
        s = x1 if x1 in (x2, y2) else y1
        p = y1 if s == x1 else x1
        q = y2 if s == x2 else x2
        if orient(coords[s], coords[p], coords[q]) != 0:
            continue
        ps, pp, pq = coords[s], coords[p], coords[q]
        dot = sum((pp[c] - ps[c]) * (pq[c] - ps[c]) for c in range(3))
        if dot > 0:
            report.fail(
                "EdgesOverlap",
                f"edges ({int(x1)},{int(y1)}) and ({int(x2)},{int(y2)}) overlap beyond vertex {int(s)}",
                (int(x1), int(y1), int(x2), int(y2)),
            )
    return report
