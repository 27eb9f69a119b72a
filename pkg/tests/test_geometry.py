"""Exact geometric validators: wedges, enclosing triangles, planarity."""

from trigreedy import (
    compute_drawing,
    compute_realizer,
    generate_stacked,
    randomize_flips,
    validate_enclosing_triangle,
    validate_planarity,
    validate_three_wedge,
)
from trigreedy.drawing import Drawing
from trigreedy.geometry import orient, segments_cross

T5_COORDS = ((5, 0, 0), (0, 5, 0), (0, 0, 5), (1, 1, 3), (2, 2, 1))


def _pipeline(n, seed):
    tri = randomize_flips(generate_stacked(n, seed=seed), 10 * n, seed=seed)
    real = compute_realizer(tri)
    return tri, real, compute_drawing(tri, real)


def test_orient_signs():
    assert orient((1, 0, 0), (0, 1, 0), (0, 0, 1)) == 1  # corner triangle is ccw
    assert orient((0, 1, 0), (1, 0, 0), (0, 0, 1)) == -1
    assert orient((1, 1, 1), (2, 2, 2), (0, 0, 1)) == 0


def test_segments_cross_cases():
    # proper crossing
    assert segments_cross((4, 1, 0), (0, 1, 4), (1, 4, 0), (1, 0, 4))
    # parallel level lines of coordinate 3
    assert not segments_cross((5, 0, 0), (0, 5, 0), (3, 1, 1), (1, 3, 1))
    # endpoint of one segment interior to the other
    assert segments_cross((0, 5, 0), (4, 1, 0), (2, 3, 0), (2, 2, 1))
    # collinear: overlapping vs disjoint
    assert segments_cross((5, 0, 0), (1, 0, 4), (3, 0, 2), (0, 0, 5))
    assert not segments_cross((5, 0, 0), (4, 0, 1), (2, 0, 3), (0, 0, 5))


def test_wedges_hold_on_corpus():
    for n, seed in [(4, 0), (10, 3), (25, 6), (50, 11)]:
        tri, real, drawing = _pipeline(n, seed)
        report = validate_three_wedge(tri, real, drawing)
        assert report.ok, (n, seed, report.findings)


def test_wedge_violation_detected(t5_pipeline):
    tri, real, _, _ = t5_pipeline
    # swapping the two internal vertices sends T3 edge 4->3 the wrong way
    coords = T5_COORDS[:3] + (T5_COORDS[4], T5_COORDS[3])
    report = validate_three_wedge(tri, real, Drawing(coords, 5))
    assert any(f.code == "EdgeOutsideWedge" for f in report.findings)


def test_wedge_boundary_note(t5_pipeline):
    tri, real, _, _ = t5_pipeline
    # vertex 4 at (1,3,1) puts its T3 edge exactly on a wedge boundary:
    # coordinate change (0,-2,2) gains in 3 and is flat in 1
    coords = T5_COORDS[:4] + ((1, 3, 1),)
    report = validate_three_wedge(tri, real, Drawing(coords, 5))
    assert report.ok
    assert [f.code for f in report.notes] == ["WedgeBoundary"]
    assert report.notes[0].subject == (4, 3, 3)


def test_enclosing_triangles_hold_on_corpus():
    for n, seed in [(4, 0), (10, 8), (25, 1), (50, 4)]:
        tri, real, drawing = _pipeline(n, seed)
        report = validate_enclosing_triangle(tri, real, drawing)
        assert report.ok, (n, seed, report.findings)


def test_enclosing_violation_detected(t5_pipeline):
    tri, real, _, _ = t5_pipeline
    # (4,0,1) sits strictly inside the triangle of T1 edge 3->0
    coords = T5_COORDS[:4] + ((4, 0, 1),)
    report = validate_enclosing_triangle(tri, real, Drawing(coords, 5))
    assert any(
        f.code == "VertexInsideTriangle" and f.subject == (3, 0, 1, 4) for f in report.findings
    )


def test_planarity_holds_on_corpus():
    for n, seed in [(4, 0), (10, 5), (25, 3), (50, 9)]:
        tri, _, drawing = _pipeline(n, seed)
        report = validate_planarity(tri, drawing)
        assert report.ok, (n, seed, report.findings)


def test_planarity_crossing_detected(t5):
    coords = T5_COORDS[:4] + ((4, 0, 1),)
    report = validate_planarity(t5, Drawing(coords, 5))
    assert any(f.code == "EdgesCross" for f in report.findings)


def test_planarity_overlap_detected(k4):
    # vertex 3 on the segment from corner 0 to corner 2: edges (0,3) and
    # (0,2) run on top of each other
    coords = ((3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 0, 2))
    report = validate_planarity(k4, Drawing(coords, 3))
    assert any(f.code == "EdgesOverlap" and f.subject == (0, 2, 0, 3) for f in report.findings)


def test_planarity_coincident_short_circuits(k4):
    coords = ((3, 0, 0), (0, 3, 0), (0, 0, 3), (3, 0, 0))
    report = validate_planarity(k4, Drawing(coords, 3))
    assert [f.code for f in report.findings] == ["CoincidentVertices"]
