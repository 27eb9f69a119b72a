"""Sector classification and saturated-subgraph extraction."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trigreedy import (
    build_triangulation,
    check_saturated,
    classify_sector,
    compute_drawing,
    compute_realizer,
    extract_saturated,
    generate_stacked,
    randomize_flips,
    saturated_equals_realizer,
    sign_triple,
)
from trigreedy.drawing import Drawing
from trigreedy.sectors import (
    EmptySector,
    IdenticalCoordinates,
    NoUniqueMinimum,
    SaturatedGraph,
    sector_leq,
)

U = (2, 2, 2)  # reference vertex for classification; targets sum to 6 too


def test_sign_triple():
    assert sign_triple((2, 2, 2), (4, 1, 1)) == (1, -1, -1)
    assert sign_triple((2, 2, 2), (2, 3, 1)) == (0, 1, -1)
    with pytest.raises(IdenticalCoordinates):
        sign_triple((1, 2, 3), (1, 2, 3))


@pytest.mark.parametrize(
    "target,sector",
    [
        ((4, 1, 1), 1),
        ((3, 3, 0), 2),
        ((1, 4, 1), 3),
        ((0, 3, 3), 4),
        ((1, 1, 4), 5),
        ((3, 0, 3), 6),
    ],
)
def test_classify_pure_sectors(target, sector):
    assert classify_sector(U, target) == (sector, False)


@pytest.mark.parametrize(
    "target,sector",
    [
        ((3, 2, 1), 1),  # (+, 0, -)
        ((3, 1, 2), 1),  # (+, -, 0)
        ((2, 3, 1), 3),  # (0, +, -)
        ((1, 3, 2), 3),  # (-, +, 0)
        ((2, 1, 3), 5),  # (0, -, +)
        ((1, 2, 3), 5),  # (-, 0, +)
    ],
)
def test_classify_boundary_resolves_to_odd(target, sector):
    assert classify_sector(U, target) == (sector, True)


def test_classify_rejects_unequal_sums():
    with pytest.raises(ValueError, match="sums differ"):
        classify_sector((0, 0, 0), (1, 1, 1))


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_classify_antisymmetry(a, b):
    # swapping endpoints flips all signs: sector j becomes j + 3 (mod 6)
    # off the boundaries, and boundary ties stay ties
    u = (100, 100, 100)
    v = (100 + a, 100 + b, 100 - a - b)
    if v == u:
        return
    s_uv, tie_uv = classify_sector(u, v)
    s_vu, tie_vu = classify_sector(v, u)
    assert tie_uv == tie_vu
    if not tie_uv:
        assert s_vu == ((s_uv + 2) % 6) + 1
    else:
        assert s_uv % 2 == 1 and s_vu % 2 == 1 and s_uv != s_vu


def test_sector_leq_order():
    # tree 1: smaller own coordinate, larger other two
    assert sector_leq(1, (3, 1, 2), (3, 1, 2))  # reflexive
    assert sector_leq(1, (1, 3, 2), (3, 2, 1))
    assert not sector_leq(1, (3, 2, 1), (1, 3, 2))
    # incomparable pair
    assert not sector_leq(1, (3, 1, 3), (3, 0, 4))
    assert not sector_leq(1, (3, 0, 4), (3, 1, 3))


def test_k4_saturated_golden(k4_pipeline):
    _, _, _, sat = k4_pipeline
    assert sat.entries == (None, None, None, (0, 1, 2))
    assert sat.boundary_labels == ()


def test_t5_saturated_golden(t5_pipeline):
    _, _, _, sat = t5_pipeline
    assert sat.entries == (None, None, None, (0, 1, 2), (0, 1, 3))
    assert sat.boundary_labels == ()


def test_sat_accessor(t5_pipeline):
    _, _, _, sat = t5_pipeline
    assert sat.sat(4, 3) == 3
    with pytest.raises(ValueError, match="corner"):
        sat.sat(0, 1)


def test_extraction_recovers_realizer():
    for n, seed in [(10, 2), (25, 5), (50, 7), (100, 0)]:
        tri = randomize_flips(generate_stacked(n, seed=seed), 10 * n, seed=seed)
        real = compute_realizer(tri)
        sat = extract_saturated(tri, compute_drawing(tri, real))
        diff = saturated_equals_realizer(sat, real)
        assert diff.equal, (n, seed, diff.mismatches)


def test_saturated_diff_reports_mismatch(t5_pipeline):
    _, real, _, sat = t5_pipeline
    tweaked = SaturatedGraph(sat.entries[:4] + ((0, 1, 0),), sat.boundary_labels)
    diff = saturated_equals_realizer(tweaked, real)
    assert not diff.equal
    assert diff.mismatches == ((4, 3, 0, 3),)


def test_empty_sector_raises(t5):
    # vertex 3 moved to (3,0,2) leaves sector s5 of vertex 4 empty
    coords = ((5, 0, 0), (0, 5, 0), (0, 0, 5), (3, 0, 2), (2, 2, 1))
    with pytest.raises(EmptySector) as exc:
        extract_saturated(t5, Drawing(coords, 5))
    assert (exc.value.vertex, exc.value.tree) == (4, 3)


def test_no_unique_minimum_raises():
    # octahedron with vertices 4 and 5 incomparable in the s1 order of 3
    octa = build_triangulation(
        [[1, 4, 3, 2], [2, 5, 4, 0], [0, 3, 5, 1], [0, 4, 5, 2], [0, 1, 5, 3], [3, 4, 1, 2]]
    )
    coords = ((7, 0, 0), (0, 7, 0), (0, 0, 7), (1, 2, 4), (3, 1, 3), (3, 0, 4))
    with pytest.raises(NoUniqueMinimum) as exc:
        extract_saturated(octa, Drawing(coords, 7))
    assert (exc.value.vertex, exc.value.tree) == (3, 1)
    assert exc.value.candidates == (0, 4, 5)


def test_dominated_neighbor_discarded():
    # octahedron where vertex 3 has two s1 neighbors: corner 0 and vertex 4,
    # with 4 below 0 in the s1 order; extraction must keep 4 and drop 0
    octa = build_triangulation(
        [[1, 4, 3, 2], [2, 5, 4, 0], [0, 3, 5, 1], [0, 4, 5, 2], [0, 1, 5, 3], [3, 4, 1, 2]]
    )
    coords = ((7, 0, 0), (0, 7, 0), (0, 0, 7), (1, 2, 4), (3, 2, 2), (0, 4, 3))
    assert classify_sector(coords[3], coords[0]) == (1, False)
    assert classify_sector(coords[3], coords[4]) == (1, True)
    assert sector_leq(1, coords[4], coords[0])
    assert not sector_leq(1, coords[0], coords[4])
    sat = extract_saturated(octa, Drawing(coords, 7))
    assert sat.entries[3] == (4, 5, 2)


def test_check_saturated_passes(t5_pipeline):
    tri, _, drawing, sat = t5_pipeline
    assert check_saturated(tri, drawing, sat).ok


def _codes(report):
    return {f.code for f in report.findings}


def test_check_saturated_size_mismatch(k4_pipeline, t5_pipeline):
    tri, _, drawing, _ = t5_pipeline
    _, _, _, k4_sat = k4_pipeline
    assert "SizeMismatch" in _codes(check_saturated(tri, drawing, k4_sat))


def test_check_saturated_missing_entry(t5_pipeline):
    tri, _, drawing, sat = t5_pipeline
    broken = SaturatedGraph(sat.entries[:4] + (None,), ())
    assert "MissingEntry" in _codes(check_saturated(tri, drawing, broken))


def test_check_saturated_not_an_edge(t5_pipeline):
    tri, _, drawing, sat = t5_pipeline
    broken = SaturatedGraph(sat.entries[:4] + ((0, 1, 2),), ())  # 4-2 is no edge
    assert "NotAnEdge" in _codes(check_saturated(tri, drawing, broken))


def test_check_saturated_wrong_sector(t5_pipeline):
    tri, _, drawing, sat = t5_pipeline
    broken = SaturatedGraph(sat.entries[:4] + ((1, 0, 3),), ())  # s1/s3 swapped
    assert "WrongSector" in _codes(check_saturated(tri, drawing, broken))


def test_check_saturated_corner_entry(t5_pipeline):
    tri, _, drawing, sat = t5_pipeline
    broken = SaturatedGraph(((1, 2, 3),) + sat.entries[1:], sat.boundary_labels)
    assert "CornerEntry" in _codes(check_saturated(tri, drawing, broken))


def test_check_saturated_boundary_note(t5_pipeline):
    tri, _, drawing, sat = t5_pipeline
    flagged = SaturatedGraph(sat.entries, ((4, 3, 5),))
    report = check_saturated(tri, drawing, flagged)
    assert report.ok
    assert [f.code for f in report.notes] == ["BoundaryTie"]
