"""Shared fixtures: the two hand-checked triangulations and their pipelines."""

import pytest

from trigreedy import (
    build_triangulation,
    compute_drawing,
    compute_realizer,
    extract_saturated,
)

# K4: outer triangle 0,1,2 with vertex 3 stacked into the middle.
#
#         0
#        /|\
#       / 3 \
#      / / \ \
#     1-------2
K4_ROTATION = [[1, 3, 2], [2, 3, 0], [0, 3, 1], [0, 1, 2]]

# T5: K4 with vertex 4 stacked into face (0, 3, 1).  Vertex 3 has
# degree 4; vertex 4 keeps degree 3.
T5_ROTATION = [[1, 4, 3, 2], [2, 3, 4, 0], [0, 3, 1], [0, 4, 1, 2], [0, 1, 3]]


@pytest.fixture
def k4():
    return build_triangulation(K4_ROTATION)


@pytest.fixture
def t5():
    return build_triangulation(T5_ROTATION)


@pytest.fixture
def t5_pipeline(t5):
    """(tri, realizer, drawing, saturated) for the five-vertex fixture."""
    real = compute_realizer(t5)
    drawing = compute_drawing(t5, real)
    sat = extract_saturated(t5, drawing)
    return t5, real, drawing, sat


@pytest.fixture
def k4_pipeline(k4):
    real = compute_realizer(k4)
    drawing = compute_drawing(k4, real)
    sat = extract_saturated(k4, drawing)
    return k4, real, drawing, sat
