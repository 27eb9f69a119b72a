"""Backend selection for the all-pairs routing kernels.

The compiled Cython module is used when it imported cleanly; otherwise
(or when TRIGREEDY_FORCE_PURE=1 is set) the pure-Python twin takes over.
Both share one array contract, so callers never notice the difference
except in speed.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py
from .drawing import Drawing, to_cartesian
from .routing import Strategy
from .sectors import SaturatedGraph
from .triangulation import Triangulation

DELIVERED, STUCK, LOOP, BUDGET = 1, 2, 3, 4

_compiled = None
if os.environ.get("TRIGREEDY_FORCE_PURE") != "1":
    try:
        from . import _speedups as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None


def active_backend() -> str:
    return "compiled" if _compiled is not None else "pure"


def _backend(name: str | None):
    if name is None:
        return _compiled if _compiled is not None else _kernels_py
    if name == "pure":
        return _kernels_py
    if name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available in this installation")
        return _compiled
    raise ValueError(f"unknown backend {name!r}, expected 'pure' or 'compiled'")


def tri_csr(tri: Triangulation) -> tuple[np.ndarray, np.ndarray]:
    """Adjacency in rotation order as (indptr, indices) int32 arrays."""
    indptr = np.zeros(tri.n + 1, dtype=np.int32)
    for v in range(tri.n):
        indptr[v + 1] = indptr[v] + tri.degree(v)
    indices = np.fromiter(
        (w for v in range(tri.n) for w in tri.rotation[v]), dtype=np.int32, count=int(indptr[-1])
    )
    return indptr, indices


def coord_rows(drawing: Drawing) -> np.ndarray:
    return np.ascontiguousarray(drawing.coords, dtype=np.int64)


def sat_rows(sat: SaturatedGraph) -> np.ndarray:
    rows = [entry if entry is not None else (-1, -1, -1) for entry in sat.entries]
    return np.ascontiguousarray(rows, dtype=np.int32)


def all_pairs(
    tri: Triangulation,
    drawing: Drawing,
    sat: SaturatedGraph | None,
    strategy: Strategy,
    max_hops: int,
    backend: str | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Outcome and hop-count arrays of shape (n*n,) for all ordered pairs."""
    impl = _backend(backend)
    indptr, indices = tri_csr(tri)
    if strategy is Strategy.SECTOR:
        if sat is None:
            raise ValueError("sector routing needs the saturated graph")
        return impl.sector_all_pairs(indptr, indices, coord_rows(drawing), sat_rows(sat), max_hops)
    placement = to_cartesian(drawing)
    xs = np.asarray(placement.xs, dtype=np.int64)
    ys = np.asarray(placement.ys, dtype=np.int64)
    return impl.euclid_all_pairs(indptr, indices, xs, ys, max_hops)


def bfs_all_pairs(tri: Triangulation, backend: str | None = None) -> np.ndarray:
    indptr, indices = tri_csr(tri)
    return _backend(backend).bfs_all_pairs(indptr, indices)
