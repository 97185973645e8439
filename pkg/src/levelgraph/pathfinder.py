"""Constructive shortest paths in L_{k,n}.

Every pair of vertices is first relabeled so that both sets become unions of
integer intervals; the path is built in those coordinates by shifting a
window of width ``t`` and then mapped back.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import LevelParams, VertexSet, ceil_div, check_vertex, is_edge


@dataclass(frozen=True)
class Relabeling:
    """A permutation of {1, ..., n}; ``forward[e - 1]`` is the image of ``e``."""

    forward: tuple[int, ...]
    inverse: tuple[int, ...]

    @classmethod
    def from_forward(cls, forward) -> Relabeling:
        forward = tuple(forward)
        inverse = [0] * len(forward)
        for e, image in enumerate(forward, start=1):
            inverse[image - 1] = e
        if sorted(forward) != list(range(1, len(forward) + 1)):
            raise ValueError(f"not a permutation: {forward}")
        return cls(forward, tuple(inverse))

    @staticmethod
    def _map_bits(table: tuple[int, ...], bits: int) -> int:
        out = 0
        while bits:
            low = bits & -bits
            out |= 1 << (table[low.bit_length() - 1] - 1)
            bits ^= low
        return out

    def apply(self, v: VertexSet) -> VertexSet:
        return VertexSet(self._map_bits(self.forward, v.bits), v.n)

    def undo(self, v: VertexSet) -> VertexSet:
        return VertexSet(self._map_bits(self.inverse, v.bits), v.n)


@dataclass(frozen=True)
class Path:
    vertices: tuple[VertexSet, ...]
    params: LevelParams

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> VertexSet:
        return self.vertices[0]

    @property
    def end(self) -> VertexSet:
        return self.vertices[-1]

    def validate(self) -> None:
        """Raise ValueError unless the path is a simple alternating walk along edges."""
        if not self.vertices:
            raise ValueError("empty path")
        for v in self.vertices:
            check_vertex(self.params, v)
        for u, v in zip(self.vertices, self.vertices[1:]):
            # is_edge already forces the cardinalities to alternate
            if not is_edge(self.params, u, v):
                raise ValueError(f"{u!r} -> {v!r} is not an edge of {self.params}")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path revisits a vertex")

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


def canonicalize(params: LevelParams, A: VertexSet, B: VertexSet) -> Relabeling:
    """Relabeling sending A∩B, A∖B, B∖A and the rest to consecutive ascending blocks."""
    check_vertex(params, A)
    check_vertex(params, B)
    a, b = A.bits, B.bits
    blocks = (a & b, a & ~b, b & ~a, ~(a | b) & ((1 << params.n) - 1))
    forward = [0] * params.n
    position = 1
    for bits in blocks:
        while bits:
            low = bits & -bits
            forward[low.bit_length() - 1] = position
            position += 1
            bits ^= low
    return Relabeling.from_forward(forward)


def _iv(lo: int, hi: int) -> int:
    """Bitmask of the integer interval [lo, hi]; empty when hi < lo."""
    if hi < lo:
        return 0
    return ((1 << (hi - lo + 1)) - 1) << (lo - 1)


def _mixed_sequence(params: LevelParams, i: int) -> list[int]:
    """Canonical walk from [1,k] up to the last k-set inside [1,i] ∪ [k+1, n-i].

    Alternates C(j,j) = [1,i] ∪ [i+1+jt, k+jt] and C(j,j+1) = [1,i] ∪ [i+1+jt, k+(j+1)t]
    for j = 0..s with s = ceil((k-i)/t); the endpoint itself is not included.
    """
    k, t = params.k, params.t
    s = ceil_div(k - i, t)
    head = _iv(1, i)
    seq = []
    for j in range(s + 1):
        seq.append(head | _iv(i + 1 + j * t, k + j * t))
        if j < s:
            seq.append(head | _iv(i + 1 + j * t, k + (j + 1) * t))
    return seq


def _large_sequence(params: LevelParams, i: int) -> list[int]:
    """Canonical walk from [1,n-k] toward [1,i] ∪ [n-k+1, 2n-2k-i], endpoint excluded.

    Alternates C(j,j) = [1,i] ∪ [i+1+jt, n-k+jt] and
    C(j+1,j) = [1,i] ∪ [i+1+(j+1)t, n-k+jt], stopping at C(s,s-1) with
    s = ceil((n-k-i)/t).
    """
    k, t, big = params.k, params.t, params.big
    if big - i < t:
        # the shifted window [i+1+t, n-k] is empty; step down through [1,k] ⊂ A∩B
        return [_iv(1, big), _iv(1, k)]
    s = ceil_div(big - i, t)
    head = _iv(1, i)
    seq = []
    for j in range(s):
        seq.append(head | _iv(i + 1 + j * t, big + j * t))
        seq.append(head | _iv(i + 1 + (j + 1) * t, big + j * t))
    return seq


def _small_sequence(params: LevelParams, i: int) -> list[int]:
    """Canonical walk from [1,k] to the k-set [1,i] ∪ [k+1, 2k-i], endpoint excluded."""
    k, t = params.k, params.t
    if k - i < t:
        # [1,k] ∪ B = [1, 2k-i] is short enough to pad up to [1, n-k]
        return [_iv(1, k), _iv(1, params.big)]
    # C = [1, i+t] ∪ [k+1, 2k-i] already has the mixed canonical layout for i + t
    return _mixed_sequence(params, i + t) + [_iv(1, i + t) | _iv(k + 1, 2 * k - i)]


def shortest_path(params: LevelParams, A: VertexSet, B: VertexSet) -> Path:
    a = check_vertex(params, A)
    b = check_vertex(params, B)
    if A == B:
        return Path((A,), params)
    if a != b and a > b:
        return Path(shortest_path(params, B, A).vertices[::-1], params)

    pi = canonicalize(params, A, B)
    i = (A.bits & B.bits).bit_count()
    if a != b:
        canonical = _mixed_sequence(params, i)
    elif a == params.k:
        canonical = _small_sequence(params, i)
    else:
        canonical = _large_sequence(params, i)
    n, inverse = params.n, pi.inverse
    vertices = [VertexSet(Relabeling._map_bits(inverse, bits), n) for bits in canonical]
    vertices.append(B)
    return Path(tuple(vertices), params)
