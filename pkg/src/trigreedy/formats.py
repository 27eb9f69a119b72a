"""Plain-text interchange formats (.tri, .bary, .sat).

All three formats share the same lexical rules: one record per line,
fields separated by whitespace, ``#`` starts a comment, blank lines are
ignored.  Readers raise :class:`ParseError` with a 1-based line number;
semantic problems (e.g. neighbor lists that are not a triangulation)
propagate from the corresponding builders.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import TextIO

from .drawing import Drawing
from .triangulation import Triangulation, build_triangulation


class ParseError(ValueError):
    """Malformed input file; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _records(stream: TextIO) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(stream, start=1):
        fields = raw.split("#", 1)[0].split()
        if fields:
            out.append((lineno, fields))
    return out


def _int_fields(fields: list[str], lineno: int) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", lineno) from None


# -- .tri: rotation system -----------------------------------------------


def read_tri(path: str | Path) -> Triangulation:
    with open(path, encoding="ascii") as stream:
        records = _records(stream)
    if not records:
        raise ParseError("empty file, expected vertex count", 1)
    lineno, fields = records[0]
    if len(fields) != 1:
        raise ParseError(f"expected a single vertex count, got {len(fields)} fields", lineno)
    (n,) = _int_fields(fields, lineno)
    if len(records) - 1 != n:
        raise ParseError(f"expected {n} neighbor lists, found {len(records) - 1}", lineno)
    rotation = [_int_fields(fields, ln) for ln, fields in records[1:]]
    return build_triangulation(rotation)


def write_tri(tri: Triangulation, path: str | Path) -> None:
    lines = [str(tri.n)]
    lines += [" ".join(map(str, nbrs)) for nbrs in tri.rotation]
    _atomic_write(path, "\n".join(lines) + "\n")


# -- .bary: barycentric drawing ------------------------------------------


def read_bary(path: str | Path) -> Drawing:
    with open(path, encoding="ascii") as stream:
        records = _records(stream)
    if not records:
        raise ParseError("empty file, expected 'denom <D>' header", 1)
    lineno, fields = records[0]
    if len(fields) != 2 or fields[0] != "denom":
        raise ParseError("expected 'denom <D>' header", lineno)
    denom = _int_fields(fields[1:], lineno)[0]
    coords: dict[int, tuple[int, int, int]] = {}
    for lineno, fields in records[1:]:
        if len(fields) != 4:
            raise ParseError(f"expected 'v x1 x2 x3', got {len(fields)} fields", lineno)
        v, x1, x2, x3 = _int_fields(fields, lineno)
        if v in coords:
            raise ParseError(f"vertex {v} listed twice", lineno)
        coords[v] = (x1, x2, x3)
    n = len(coords)
    missing = [v for v in range(n) if v not in coords]
    if missing:
        raise ParseError(f"vertex ids are not 0..{n - 1} (missing {missing[0]})", records[-1][0])
    return Drawing(tuple(coords[v] for v in range(n)), denom)


def write_bary(drawing: Drawing, path: str | Path) -> None:
    lines = [f"denom {drawing.denom}"]
    lines += [f"{v} {x1} {x2} {x3}" for v, (x1, x2, x3) in enumerate(drawing.coords)]
    _atomic_write(path, "\n".join(lines) + "\n")


# -- .sat: saturated subgraph --------------------------------------------


def read_sat(path: str | Path) -> dict[int, tuple[int, int, int]]:
    """Read internal-vertex saturated entries as {u: (sat1, sat2, sat3)}."""
    with open(path, encoding="ascii") as stream:
        records = _records(stream)
    sat: dict[int, tuple[int, int, int]] = {}
    for lineno, fields in records:
        if len(fields) != 4:
            raise ParseError(f"expected 'u sat1 sat2 sat3', got {len(fields)} fields", lineno)
        u, s1, s2, s3 = _int_fields(fields, lineno)
        if u in sat:
            raise ParseError(f"vertex {u} listed twice", lineno)
        sat[u] = (s1, s2, s3)
    return sat


def write_sat(entries: dict[int, tuple[int, int, int]], path: str | Path) -> None:
    lines = [f"{u} {s[0]} {s[1]} {s[2]}" for u, s in sorted(entries.items())]
    _atomic_write(path, "\n".join(lines) + "\n")


def _atomic_write(path: str | Path, text: str) -> None:
    """Write via a sibling temp file so readers never see a partial file."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="ascii")
    os.replace(tmp, path)
