"""Closed-form distance in L_{k,n} and layer classification."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import LevelParams, VertexSet, ceil_div, check_vertex, initial_vertex


class Side(enum.Enum):
    SMALL = "small"  # the k-level
    LARGE = "large"  # the (n-k)-level


@dataclass(frozen=True)
class LayerIndex:
    """Layer ``i`` on one side; SMALL i sits at distance 2i from P, LARGE i at 2i + 1."""

    side: Side
    i: int

    @property
    def distance(self) -> int:
        return 2 * self.i + (self.side is Side.LARGE)


def distance(params: LevelParams, A: VertexSet, B: VertexSet) -> int:
    a = check_vertex(params, A)
    b = check_vertex(params, B)
    common = (A.bits & B.bits).bit_count()
    if a != b:
        return 2 * ceil_div(params.k - common, params.t) + 1
    return 2 * ceil_div(a - common, params.t)


def distance_matrix(params: LevelParams, rows, cols=None) -> np.ndarray:
    """Vectorized :func:`distance` over bitmask arrays.

    ``rows`` and ``cols`` are sequences of bitmasks (or VertexSets) of valid
    vertices; the result has shape ``(len(rows), len(cols))`` and dtype int16.
    Masks are not revalidated.
    """
    r = _as_masks(rows)
    c = r if cols is None else _as_masks(cols)
    common = np.bitwise_count(r[:, None] & c[None, :]).astype(np.int16)
    r_size = np.bitwise_count(r).astype(np.int16)[:, None]
    c_size = np.bitwise_count(c).astype(np.int16)[None, :]
    t = params.t
    same = r_size == c_size
    # ceil(x / t) == (x + t - 1) // t for x >= 0
    gap = np.where(same, r_size - common, params.k - common)
    return (2 * ((gap + t - 1) // t) + np.where(same, 0, 1)).astype(np.int16)


def _as_masks(vs) -> np.ndarray:
    if isinstance(vs, np.ndarray):
        return vs.astype(np.uint64, copy=False)
    return np.array([v.bits if isinstance(v, VertexSet) else v for v in vs], dtype=np.uint64)


def classify(params: LevelParams, A: VertexSet) -> LayerIndex:
    size = check_vertex(params, A)
    P = initial_vertex(params)
    if size == params.k:
        return LayerIndex(Side.SMALL, ceil_div(len(P - A), params.t))
    return LayerIndex(Side.LARGE, ceil_div(params.k - len(P & A), params.t))
