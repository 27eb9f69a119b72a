"""Random triangulation generators: stacking plus edge flips.

Stacking alone produces stacked (Apollonian) triangulations; a round of
random diagonal flips afterwards moves the sample away from that special
class while preserving the outer face.  Both steps are deterministic in
the seed.
"""

from __future__ import annotations

import random

from .triangulation import Triangulation, build_triangulation

#: Rotation lists of the bare corner triangle.
_TRIANGLE = ((1, 2), (2, 0), (0, 1))


def generate_stacked(n: int, seed: int = 0) -> Triangulation:
    """Grow a triangulation on n vertices by stacking into random faces.

    Starts from the corner triangle and repeatedly places the next vertex
    inside a uniformly chosen internal face, connecting it to the three
    face corners.
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    rng = random.Random(seed)
    rotation: list[list[int]] = [list(nbrs) for nbrs in _TRIANGLE]
    # orbit of the single internal face of the bare triangle
    faces: list[tuple[int, int, int]] = [(0, 2, 1)]
    for w in range(3, n):
        face = faces.pop(rng.randrange(len(faces)))
        _stack(rotation, face, w)
        a, b, c = face
        faces += [(a, b, w), (b, c, w), (c, a, w)]
    return build_triangulation(rotation)


def _stack(rotation: list[list[int]], face: tuple[int, int, int], w: int) -> None:
    """Subdivide the face with a new degree-3 vertex w.

    The face orbit (a, b, c) runs a -> b -> c; reversing it gives the
    counterclockwise order in which the corners appear around w.
    """
    rotation.append(list(reversed(face)))
    orbit = list(face)
    for i, x in enumerate(orbit):
        nxt = orbit[(i + 1) % 3]
        rotation[x].insert(rotation[x].index(nxt), w)


def randomize_flips(tri: Triangulation, k: int, seed: int = 0) -> Triangulation:
    r"""Attempt k random diagonal flips; illegal picks are skipped.

    Each attempt draws an internal edge uniformly from the current graph.
    A flip of (u, v) replaces it with the opposite diagonal (x, y) of the
    two incident triangles:

            x                   x
           / \                 /|\
          / A \               / | \
         u-----v     -->     u  |  v
          \ B /               \ | /
           \ /                 \|/
            y                   y

    The flip is skipped when x and y are already adjacent (this also
    covers endpoints of degree 3, whose removal would break the
    triangulation).  Outer edges are never flipped.
    """
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    rng = random.Random(seed)
    rotation = [list(nbrs) for nbrs in tri.rotation]
    adj = [set(nbrs) for nbrs in rotation]
    internal = sorted(
        (u, v) for u in range(tri.n) for v in adj[u] if u < v and not (u < 3 and v < 3)
    )
    for _ in range(k):
        if not internal:
            break  # K4 has no flippable edge at all, but keep draws seeded
        i = rng.randrange(len(internal))
        u, v = internal[i]
        ru, rv = rotation[u], rotation[v]
        x = rv[(rv.index(u) + 1) % len(rv)]
        y = ru[(ru.index(v) + 1) % len(ru)]
        if x in adj[y]:
            continue
        ru.remove(v)
        rv.remove(u)
        adj[u].discard(v)
        adj[v].discard(u)
        # new diagonal x-y: into rot(x) before u, into rot(y) before v
        rotation[x].insert(rotation[x].index(u), y)
        rotation[y].insert(rotation[y].index(v), x)
        adj[x].add(y)
        adj[y].add(x)
        internal[i] = (min(x, y), max(x, y))
        internal.sort()
    return build_triangulation(rotation)
