"""Barycentric drawings: goldens, the flood-fill oracle, and placement."""

import math

import pytest

from trigreedy import (
    compute_drawing,
    compute_realizer,
    generate_stacked,
    randomize_flips,
    region_counts,
    region_counts_oracle,
    to_cartesian,
    validate_drawing,
)
from trigreedy.drawing import Drawing

K4_COORDS = ((3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1))
T5_COORDS = ((5, 0, 0), (0, 5, 0), (0, 0, 5), (1, 1, 3), (2, 2, 1))


def test_k4_golden(k4_pipeline):
    _, _, drawing, _ = k4_pipeline
    assert drawing.denom == 3
    assert drawing.coords == K4_COORDS


def test_t5_golden(t5_pipeline):
    _, _, drawing, _ = t5_pipeline
    assert drawing.denom == 5
    assert drawing.coords == T5_COORDS


def test_row_sums_and_corners():
    for n, seed in [(10, 0), (25, 7), (50, 2)]:
        tri = randomize_flips(generate_stacked(n, seed=seed), 10 * n, seed=seed)
        drawing = compute_drawing(tri, compute_realizer(tri))
        denom = 2 * n - 5
        assert drawing.denom == denom
        for v, row in enumerate(drawing.coords):
            assert sum(row) == denom
            assert min(row) >= 0
        for corner in range(3):
            assert drawing.coords[corner][corner] == denom
        assert len(set(drawing.coords)) == n


def test_closed_form_matches_flood_fill():
    # the linear-time formula against the literal dual-graph count
    for n, seed in [(10, 4), (25, 9), (40, 1)]:
        tri = randomize_flips(generate_stacked(n, seed=seed), 10 * n, seed=seed)
        real = compute_realizer(tri)
        counts = region_counts(tri, real)
        for v in tri.internal_vertices():
            assert counts[v] == region_counts_oracle(tri, real, v), (n, seed, v)


def test_oracle_rejects_corners(t5_pipeline):
    tri, real, _, _ = t5_pipeline
    with pytest.raises(ValueError, match="corner"):
        region_counts_oracle(tri, real, 0)


def test_validate_accepts_computed(t5_pipeline):
    tri, _, drawing, _ = t5_pipeline
    assert validate_drawing(tri, drawing).ok


def _code(report):
    return {f.code for f in report.findings}


def test_validate_size_mismatch(k4, t5_pipeline):
    _, _, drawing, _ = t5_pipeline
    assert "SizeMismatch" in _code(validate_drawing(k4, drawing))


def test_validate_bad_denominator(t5):
    assert "BadDenominator" in _code(validate_drawing(t5, Drawing(T5_COORDS, 7)))


def test_validate_negative_coordinate(t5):
    coords = T5_COORDS[:4] + ((-1, 5, 1),)
    report = validate_drawing(t5, Drawing(coords, 5))
    assert "NegativeCoordinate" in _code(report)


def test_validate_bad_sum(t5):
    coords = T5_COORDS[:4] + ((2, 2, 2),)
    assert "BadCoordinateSum" in _code(validate_drawing(t5, Drawing(coords, 5)))


def test_validate_bad_corner(t5):
    coords = ((4, 1, 0),) + T5_COORDS[1:]
    assert "BadCorner" in _code(validate_drawing(t5, Drawing(coords, 5)))


def test_validate_coincident(t5):
    coords = T5_COORDS[:4] + (T5_COORDS[3],)
    assert "CoincidentVertices" in _code(validate_drawing(t5, Drawing(coords, 5)))


def test_cartesian_corners(t5_pipeline):
    _, _, drawing, _ = t5_pipeline
    place = to_cartesian(drawing)
    assert place.point(0) == pytest.approx((0.5, math.sqrt(3) / 2))  # apex
    assert place.point(1) == pytest.approx((0.0, 0.0))
    assert place.point(2) == pytest.approx((1.0, 0.0))


def test_cartesian_interior_points(k4_pipeline, t5_pipeline):
    _, _, k4_drawing, _ = k4_pipeline
    assert to_cartesian(k4_drawing).point(3) == pytest.approx((0.5, math.sqrt(3) / 6))
    _, _, t5_drawing, _ = t5_pipeline
    assert to_cartesian(t5_drawing).point(4) == pytest.approx((0.4, math.sqrt(3) / 5))


def test_squared_distance_exact(k4_pipeline):
    _, _, drawing, _ = k4_pipeline
    place = to_cartesian(drawing)
    unit = (2 * place.denom) ** 2
    # outer triangle has unit sides
    assert place.squared_distance_scaled(0, 1) == unit
    assert place.squared_distance_scaled(1, 2) == unit
    assert place.squared_distance_scaled(2, 0) == unit
    # center of K4 is equidistant from the corners at 1/sqrt(3)
    for corner in range(3):
        assert place.squared_distance_scaled(3, corner) * 3 == unit


def test_squared_distance_matches_float():
    tri = randomize_flips(generate_stacked(20, seed=6), 200, seed=6)
    drawing = compute_drawing(tri, compute_realizer(tri))
    place = to_cartesian(drawing)
    scale = (2 * place.denom) ** 2
    for a, b in [(3, 9), (0, 12), (5, 19)]:
        xa, ya = place.point(a)
        xb, yb = place.point(b)
        approx = (xa - xb) ** 2 + (ya - yb) ** 2
        assert place.squared_distance_scaled(a, b) / scale == pytest.approx(approx)
