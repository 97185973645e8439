"""Reachability layers around the initial vertex P = {1, ..., k}.

Counts come from binomial sums and never materialize vertices, so they work
for any n; :func:`enumerate_layer` is the separate, size-guarded listing.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import LevelParams, VertexSet, binom
from .metric import LayerIndex, Side, classify

MAX_ENUMERATE_N = 20


def _check_index(params: LevelParams, i: int) -> None:
    if not 0 <= i <= params.s:
        raise ValueError(f"layer index {i} outside 0..{params.s} for {params}")


def gamma(params: LevelParams, i: int) -> int:
    """Number of k-sets at distance 2i from P."""
    _check_index(params, i)
    n, k, t = params.n, params.k, params.t
    return sum(
        binom(k, k - ((i - 1) * t + j)) * binom(n - k, (i - 1) * t + j)
        for j in range(1, t + 1)
    )


def delta(params: LevelParams, i: int) -> int:
    """Number of (n-k)-sets at distance 2i + 1 from P."""
    _check_index(params, i)
    n, k, t = params.n, params.k, params.t
    return sum(
        binom(k, k - ((i - 1) * t + j)) * binom(n - k, i * t + j)
        for j in range(1, t + 1)
    )


def f(params: LevelParams, x: int) -> int:
    """Number of vertices at exactly ``x`` steps from P, for 0 <= x <= 2s + 1."""
    if not 0 <= x <= params.diameter:
        raise ValueError(f"step count {x} outside 0..{params.diameter} for {params}")
    if x % 2 == 0:
        return gamma(params, x // 2)
    return delta(params, x // 2)


@dataclass(frozen=True)
class LayerTable:
    params: LevelParams
    gamma: tuple[int, ...]
    delta: tuple[int, ...]

    @property
    def f(self) -> tuple[int, ...]:
        return tuple(c for pair in zip(self.gamma, self.delta) for c in pair)

    @property
    def total(self) -> int:
        return binom(self.params.n, self.params.k)


def layer_table(params: LevelParams) -> LayerTable:
    r = range(params.s + 1)
    return LayerTable(params, tuple(gamma(params, i) for i in r), tuple(delta(params, i) for i in r))


def enumerate_layer(params: LevelParams, which: LayerIndex) -> list[VertexSet]:
    """All vertices of layer ``which``, in ascending bitmask order."""
    if params.n > MAX_ENUMERATE_N:
        raise ValueError(f"n={params.n} exceeds the enumeration limit {MAX_ENUMERATE_N}")
    _check_index(params, which.i)
    size = params.k if which.side is Side.SMALL else params.big
    found = []
    for combo in combinations(range(params.n), size):
        v = VertexSet(sum(1 << e for e in combo), params.n)
        if classify(params, v) == which:
            found.append(v)
    found.sort()
    return found


@dataclass(frozen=True)
class IdentityReport:
    params: LevelParams
    binom: int
    gamma_sum: int
    delta_sum: int

    @property
    def passed(self) -> bool:
        return self.gamma_sum == self.binom == self.delta_sum


def verify_identities(params: LevelParams) -> IdentityReport:
    """Evaluate both double sums for C(n, k) term by term."""
    n, k, t = params.n, params.k, params.t
    gamma_sum = delta_sum = 0
    for i in range(params.s + 1):
        for j in range(1, t + 1):
            low = binom(k, k - ((i - 1) * t + j))
            gamma_sum += low * binom(n - k, (i - 1) * t + j)
            delta_sum += low * binom(n - k, i * t + j)
    return IdentityReport(params, binom(n, k), gamma_sum, delta_sum)
