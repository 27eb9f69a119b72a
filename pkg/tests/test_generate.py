"""Stacked generation and diagonal flips."""

import pytest

from trigreedy import generate_stacked, randomize_flips, validate_triangulation


def test_smallest_instance_is_k4(k4):
    # only one combinatorial choice exists at n = 4, whatever the seed
    for seed in (0, 1, 17):
        tri = generate_stacked(4, seed=seed)
        assert set(tri.edges()) == set(k4.edges())
        assert tri.face_orbits() == k4.face_orbits()


def test_generation_is_deterministic():
    a = generate_stacked(40, seed=11)
    b = generate_stacked(40, seed=11)
    assert a.rotation == b.rotation
    c = generate_stacked(40, seed=12)
    assert c.rotation != a.rotation


def test_counts_at_n200():
    tri = generate_stacked(200, seed=7)
    assert tri.num_edges == 594
    assert len(tri.face_orbits()) == 396


def test_generated_instances_validate():
    for n, seed in [(4, 0), (10, 3), (25, 5), (60, 1)]:
        assert validate_triangulation(generate_stacked(n, seed=seed)).ok


def test_too_small_rejected():
    with pytest.raises(ValueError):
        generate_stacked(3)
    with pytest.raises(ValueError):
        generate_stacked(0)


def test_negative_flip_count_rejected(k4):
    with pytest.raises(ValueError):
        randomize_flips(k4, -1)


def test_zero_flips_is_identity():
    tri = generate_stacked(30, seed=2)
    assert randomize_flips(tri, 0, seed=5).rotation == tri.rotation


def test_k4_has_no_legal_flip(k4):
    flipped = randomize_flips(k4, 50, seed=9)
    assert set(flipped.edges()) == set(k4.edges())
    assert flipped.face_orbits() == k4.face_orbits()


def test_flips_preserve_validity_and_outer_face():
    for n, seed in [(10, 0), (25, 4), (50, 8)]:
        tri = randomize_flips(generate_stacked(n, seed=seed), 10 * n, seed=seed + 1)
        report = validate_triangulation(tri)
        assert report.ok, report.findings
        assert tri.num_edges == 3 * n - 6


def test_flips_are_deterministic():
    base = generate_stacked(30, seed=6)
    a = randomize_flips(base, 300, seed=13)
    b = randomize_flips(base, 300, seed=13)
    assert a.rotation == b.rotation


def test_flips_actually_change_something():
    base = generate_stacked(30, seed=6)
    flipped = randomize_flips(base, 300, seed=13)
    assert set(flipped.edges()) != set(base.edges())
