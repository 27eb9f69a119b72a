"""Realizers: partitions of the internal edges into three rooted trees.

Every internal edge is directed toward a parent and labeled with a tree
index 1, 2 or 3.  Tree k, rooted at corner Ak = k-1, contains exactly one
outgoing edge per internal vertex, and around every internal vertex the
edge types appear counterclockwise as

    out-1, in-3 ..., out-2, in-1 ..., out-3, in-2 ...

with possibly empty "in" blocks, and every internal edge incident to a
corner Ak enters it in tree k.  To make each tree span all n vertices we
adopt the usual corner convention: the other two corners point at Ak in
tree k (these conventional parent edges lie on the outer face and carry
no label).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .report import ValidationReport
from .triangulation import Triangulation

#: parent triples forced on the corners (tree k roots at vertex k-1)
CORNER_PARENTS = ((-1, 1, 2), (0, -1, 2), (0, 1, -1))


@dataclass(frozen=True)
class Realizer:
    """Per-vertex parent triple (parent in T1, T2, T3); -1 marks a root."""

    parents: tuple[tuple[int, int, int], ...]

    @property
    def n(self) -> int:
        return len(self.parents)

    def parent(self, v: int, tree: int) -> int:
        return self.parents[v][tree - 1]

    def labels(self) -> Iterator[tuple[int, int, int]]:
        """Labeled directed edges as (child, parent, tree), internal only."""
        for v in range(3, self.n):
            for tree in (1, 2, 3):
                yield v, self.parents[v][tree - 1], tree

    def tree_children(self, tree: int) -> tuple[tuple[int, ...], ...]:
        """Children lists of tree `tree` including corner conventions."""
        children: list[list[int]] = [[] for _ in range(self.n)]
        for v in range(self.n):
            p = self.parents[v][tree - 1]
            if p >= 0:
                children[p].append(v)
        return tuple(tuple(c) for c in children)


def compute_realizer(tri: Triangulation) -> Realizer:
    """Realizer via contraction toward corner A1.

    Repeatedly contract an edge (0, v) where v is an internal neighbor of
    0 sharing exactly two common neighbors with it (such a v always
    exists).  Ties go to the lowest vertex id, which makes the result
    deterministic.  Unwinding the contractions assigns parents:

        expansion of v:  0 <- v in T1,
                         succ_v(0) <- v in T2,  pred_v(0) <- v in T3,
        and every fan vertex (attached to 0 only while v was contracted)
        re-hangs its T1 edge from 0 onto v.
    """
    n = tri.n
    adj: dict[int, set[int]] = {v: set(tri.neighbors(v)) for v in range(n)}
    rot: dict[int, list[int]] = {v: list(tri.neighbors(v)) for v in range(n)}

    def common_count(v: int) -> int:
        return len(adj[v] & adj[0])

    eligible = {v for v in adj[0] if v >= 3 and common_count(v) == 2}
    records: list[tuple[int, int, int, list[int]]] = []

    for _ in range(n - 3):
        if not eligible:
            raise RuntimeError("no contractible neighbor of corner 0; input is not a triangulation")
        v = min(eligible)
        rv = rot[v]
        i = rv.index(0)
        ordered = rv[i:] + rv[:i]  # starts with 0
        c1, c2 = ordered[1], ordered[-1]
        fan = ordered[2:-1]
        records.append((v, c1, c2, fan))

        # contract v into 0
        for c in (c1, c2):
            rot[c].remove(v)
            adj[c].discard(v)
        for f in fan:
            rot[f][rot[f].index(v)] = 0
            adj[f].discard(v)
            adj[f].add(0)
            adj[0].add(f)
        adj[0].discard(v)
        del rot[v], adj[v]
        eligible.discard(v)

        # only vertices whose neighborhood overlaps the surgery can change
        dirty = set(fan)
        dirty.update(c for c in (c1, c2) if c >= 3)
        for f in fan:
            dirty.update(w for w in adj[f] if w in adj[0])
        for w in dirty:
            if w >= 3 and w in adj[0] and common_count(w) == 2:
                eligible.add(w)
            else:
                eligible.discard(w)

    parents = [[-1, -1, -1] for _ in range(n)]
    for corner in range(min(3, n)):
        parents[corner] = list(CORNER_PARENTS[corner])
    for v, c1, c2, fan in reversed(records):
        parents[v] = [0, c1, c2]
        for f in fan:
            assert parents[f][0] == 0, "fan vertex must currently hang off the corner"
            parents[f][0] = v
    return Realizer(tuple(tuple(p) for p in parents))


def validate_realizer(tri: Triangulation, real: Realizer) -> ValidationReport:
    """Check tree structure, edge labeling, and the ccw pattern."""
    report = ValidationReport("realizer")
    n = tri.n
    if real.n != n:
        report.fail("SizeMismatch", f"realizer covers {real.n} vertices, triangulation has {n}", (real.n, n))
        return report
    for corner in range(3):
        if real.parents[corner] != CORNER_PARENTS[corner]:
            report.fail(
                "BadCornerConvention",
                f"corner {corner} has parents {real.parents[corner]}, expected {CORNER_PARENTS[corner]}",
                (corner,),
            )

    # every internal edge labeled exactly once, parents must be neighbors
    labeled: dict[tuple[int, int], int] = {}
    for v in tri.internal_vertices():
        for tree in (1, 2, 3):
            p = real.parent(v, tree)
            if p < 0 or not tri.adjacent(v, p):
                report.fail("ParentNotNeighbor", f"T{tree} parent of {v} is {p}, not a neighbor", (v, tree, p))
                continue
            key = (min(v, p), max(v, p))
            if key in labeled:
                report.fail("EdgeLabeledTwice", f"edge {key} labeled more than once", key)
            labeled[key] = tree
    internal_edges = [(u, v) for u, v in tri.edges() if not tri.is_outer_edge(u, v)]
    if not report.ok:
        return report

    # internal edges incident to corner Ak must enter it in tree k;
    # without this, cyclic relabelings of the trees would slip through
    for corner in range(3):
        for w in tri.neighbors(corner):
            if w >= 3 and real.parent(w, corner + 1) != corner:
                report.fail(
                    "CornerEdgeWrongTree",
                    f"edge ({w}, {corner}) must enter corner A{corner + 1} in T{corner + 1}",
                    (w, corner),
                )

    if len(labeled) != len(internal_edges):
        missing = sorted(set(internal_edges) - set(labeled))[:3]
        report.fail(
            "UnlabeledEdges",
            f"{len(internal_edges) - len(labeled)} internal edges unlabeled, e.g. {missing}",
            tuple(missing),
        )

    # each tree reaches its root without cycles
    for tree in (1, 2, 3):
        root = tree - 1
        state = [0] * n  # 0 unseen, 1 on stack, 2 done
        state[root] = 2
        for start in range(n):
            path = []
            v = start
            while state[v] == 0:
                state[v] = 1
                path.append(v)
                v = real.parent(v, tree)
                if v < 0 or v >= n:
                    report.fail("BrokenTree", f"T{tree} walk from {start} leaves the graph at {path[-1]}", (tree, start))
                    break
                if state[v] == 1:
                    report.fail("TreeCycle", f"T{tree} contains a cycle through {v}", (tree, v))
                    break
            for w in path:
                state[w] = 2

    # counterclockwise pattern around internal vertices
    for v in tri.internal_vertices():
        if not report.ok and len(report.findings) > 20:
            break  # enough evidence
        types = []
        for w in tri.neighbors(v):
            if w == real.parent(v, 1):
                types.append("o1")
            elif w == real.parent(v, 2):
                types.append("o2")
            elif w == real.parent(v, 3):
                types.append("o3")
            elif v == (real.parent(w, 1) if w >= 3 else -2):
                types.append("i1")
            elif v == (real.parent(w, 2) if w >= 3 else -2):
                types.append("i2")
            elif v == (real.parent(w, 3) if w >= 3 else -2):
                types.append("i3")
            else:
                types.append("??")
        if "??" in types or "o1" not in types:
            report.fail("PatternUntestable", f"vertex {v} has unlabeled incident edges: {types}", (v,))
            continue
        k = types.index("o1")
        types = types[k:] + types[:k]
        if not re.fullmatch(r"o1( i3)* o2( i1)* o3( i2)*", " ".join(types)):
            report.fail("BadCcwPattern", f"vertex {v} edge pattern {types} violates the ccw rule", (v,))
    return report
