"""Vertex sets, graph parameters and the extended binomial coefficient."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_MATERIALIZED_N = 64


def binom(a: int, b: int) -> int:
    """Binomial coefficient extended to all integers.

    Returns 0 whenever ``b < 0`` or ``b > a`` (this includes every negative
    ``a``), so summation terms outside the natural range vanish.
    """
    if b < 0 or b > a:
        return 0
    b = min(b, a - b)
    result = 1
    for j in range(1, b + 1):
        # exact at every step: result == C(a - b + j, j)
        result = result * (a - b + j) // j
    return result


def ceil_div(a: int, b: int) -> int:
    if a < 0 or b <= 0:
        raise ValueError(f"ceil_div expects a >= 0 and b > 0, got {a}, {b}")
    return (a + b - 1) // b


@dataclass(frozen=True)
class LevelParams:
    """Parameters of the level graph L_{k,n}.

    ``t = n - 2k`` is the gap between the two levels and ``s = ceil(k / t)``
    the index of the farthest layer from the initial vertex.
    """

    n: int
    k: int
    t: int = field(init=False)
    s: int = field(init=False)

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError(f"n and k must be nonnegative, got n={self.n}, k={self.k}")
        if 2 * self.k >= self.n:
            raise ValueError(f"L_{{k,n}} requires 2k < n, got n={self.n}, k={self.k}")
        t = self.n - 2 * self.k
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "s", ceil_div(self.k, t))

    @property
    def big(self) -> int:
        """Cardinality of the upper level, n - k."""
        return self.n - self.k

    @property
    def diameter(self) -> int:
        return 2 * self.s + 1

    def require_materializable(self, limit: int = MAX_MATERIALIZED_N) -> None:
        if self.n > limit:
            raise ValueError(f"n={self.n} exceeds the limit {limit} for this operation")

    def __str__(self):
        return f"L_{{{self.k},{self.n}}}"


def make_params(n: int, k: int) -> LevelParams:
    return LevelParams(n, k)


@dataclass(frozen=True, order=True)
class VertexSet:
    """A subset of {1, ..., n} stored as a bitmask; element ``e`` is bit ``e - 1``."""

    bits: int
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_MATERIALIZED_N:
            raise ValueError(f"universe size must be in 0..{MAX_MATERIALIZED_N}, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bitmask {self.bits:#x} has members outside 1..{self.n}")

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls((1 << n) - 1, n)

    @classmethod
    def interval(cls, lo: int, hi: int, n: int) -> VertexSet:
        """The integer interval [lo, hi]; empty when hi < lo."""
        if hi < lo:
            return cls(0, n)
        return cls(((1 << (hi - lo + 1)) - 1) << (lo - 1), n)

    def elements(self) -> list[int]:
        return list(self)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length()
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, e: int) -> bool:
        return 1 <= e <= self.n and bool(self.bits >> (e - 1) & 1)

    def _check(self, other: VertexSet) -> None:
        if self.n != other.n:
            raise ValueError(f"universe mismatch: {self.n} vs {other.n}")

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.bits & other.bits, self.n)

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.bits | other.bits, self.n)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.bits & ~other.bits, self.n)

    def complement(self) -> VertexSet:
        return VertexSet(((1 << self.n) - 1) & ~self.bits, self.n)

    def issubset(self, other: VertexSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def label(self, sep: str | None = None) -> str:
        """Compact label such as ``"123"``; elements are separated when n >= 10."""
        if sep is None:
            sep = "" if self.n < 10 else "-"
        return sep.join(map(str, self)) or "∅"

    def __repr__(self):
        return "{" + ",".join(map(str, self)) + "}"


def make_vertex(elements: Iterable[int], n: int) -> VertexSet:
    if n > MAX_MATERIALIZED_N:
        raise ValueError(f"n={n} exceeds {MAX_MATERIALIZED_N}, vertices cannot be materialized")
    bits = 0
    for e in elements:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside 1..{n}")
        bits |= 1 << (e - 1)
    return VertexSet(bits, n)


def initial_vertex(params: LevelParams) -> VertexSet:
    """P = {1, ..., k}."""
    return VertexSet((1 << params.k) - 1, params.n)


def check_vertex(params: LevelParams, A: VertexSet) -> int:
    """Validate ``A`` as a vertex of L_{k,n} and return its cardinality."""
    if A.n != params.n:
        raise ValueError(f"vertex {A!r} lives over n={A.n}, graph has n={params.n}")
    size = A.bits.bit_count()
    if size != params.k and size != params.big:
        raise ValueError(
            f"vertex {A!r} has cardinality {size}, expected {params.k} or {params.big}"
        )
    return size


def is_edge(params: LevelParams, A: VertexSet, B: VertexSet) -> bool:
    a, b = check_vertex(params, A), check_vertex(params, B)
    if a == b:
        return False
    if a > b:
        A, B = B, A
    return A.bits & ~B.bits == 0
