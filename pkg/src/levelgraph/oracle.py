"""Brute-force ground truth: explicit graphs, BFS, and exhaustive comparisons.

Nothing here trusts the closed forms; BFS over the materialized graph is the
reference every formula is checked against.
"""
from __future__ import annotations

import operator
import random
from collections import deque
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from typing import Iterator

import numpy as np

from .core import LevelParams, VertexSet, initial_vertex, is_edge
from .layers import layer_table, verify_identities
from .metric import classify, distance, distance_matrix
from .pathfinder import shortest_path

MAX_GRAPH_N = 20
MAX_PAIRS_N = 14
MAX_TRIPLES_N = 10


@dataclass(frozen=True)
class AdjacencyGraph:
    params: LevelParams
    vertices: tuple[VertexSet, ...]
    adjacency: tuple[tuple[int, ...], ...]
    index: dict[int, int] = field(repr=False, compare=False)

    def __len__(self):
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(map(len, self.adjacency)) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def index_of(self, v: VertexSet) -> int:
        if v.n != self.params.n or v.bits not in self.index:
            raise ValueError(f"{v!r} is not a vertex of {self.params}")
        return self.index[v.bits]

    def masks(self) -> np.ndarray:
        return np.array([v.bits for v in self.vertices], dtype=np.uint64)


def _level_masks(n: int, size: int) -> list[int]:
    return sorted(sum(1 << e for e in c) for c in combinations(range(n), size))


def build_graph(params: LevelParams) -> AdjacencyGraph:
    if params.n > MAX_GRAPH_N:
        raise ValueError(f"n={params.n} exceeds the graph size limit {MAX_GRAPH_N}")
    n, t = params.n, params.t
    small = _level_masks(n, params.k)
    large = _level_masks(n, params.big)
    masks = small + large
    index = {m: i for i, m in enumerate(masks)}
    adjacency: list[list[int]] = [[] for _ in masks]
    for a, m in enumerate(small):
        free = [e for e in range(n) if not m >> e & 1]
        for extra in combinations(free, t):
            b = index[m | sum(1 << e for e in extra)]
            adjacency[a].append(b)
            adjacency[b].append(a)
    for nbrs in adjacency:
        nbrs.sort()
    return AdjacencyGraph(
        params,
        tuple(VertexSet(m, n) for m in masks),
        tuple(map(tuple, adjacency)),
        index,
    )


def bfs_distances(graph: AdjacencyGraph, source: VertexSet) -> dict[VertexSet, int]:
    start = graph.index_of(source)
    dist = [-1] * len(graph)
    dist[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in graph.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return {graph.vertices[i]: d for i, d in enumerate(dist) if d >= 0}


def all_pairs_bfs(graph: AdjacencyGraph) -> np.ndarray:
    """Distance matrix by BFS from every vertex at once.

    Each vertex carries an integer bitset of the sources whose search has
    reached it, so one sweep over the adjacency lists advances all searches
    by a level. Unreachable pairs stay -1.
    """
    size = len(graph)
    nbytes = (size + 7) // 8
    visited = [1 << v for v in range(size)]
    frontier = list(visited)
    dist = np.full((size, size), -1, dtype=np.int16)
    np.fill_diagonal(dist, 0)
    level = 0
    while any(frontier):
        level += 1
        getter = frontier.__getitem__
        reached = [
            reduce(operator.or_, map(getter, nbrs), 0) & ~seen
            for nbrs, seen in zip(graph.adjacency, visited)
        ]
        for v, sources in enumerate(reached):
            if sources:
                visited[v] |= sources
                row = np.unpackbits(
                    np.frombuffer(sources.to_bytes(nbytes, "little"), dtype=np.uint8),
                    count=size,
                    bitorder="little",
                ).view(bool)
                dist[row, v] = level
        frontier = reached
    return dist


@dataclass
class VerificationReport:
    """Outcome of one check; ``pairs_checked`` counts triples for the axiom checks."""

    check: str
    params: LevelParams
    pairs_checked: int = 0
    mismatches: list[tuple] = field(default_factory=list)
    histogram: tuple[int, ...] | None = None

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.check:<14} {self.params}  checked={self.pairs_checked}"
        if self.histogram is not None:
            line += f"  histogram={self.histogram}"
        if self.mismatches:
            line += f"  mismatches={len(self.mismatches)}"
        return line


def _guard(params: LevelParams, limit: int, what: str) -> None:
    if params.n > limit:
        raise ValueError(f"{what} is exhaustive and limited to n <= {limit}, got n={params.n}")


def verify_distance_formula(params: LevelParams) -> VerificationReport:
    """Compare the closed-form distance with BFS on every ordered pair."""
    _guard(params, MAX_PAIRS_N, "distance verification")
    graph = build_graph(params)
    bfs = all_pairs_bfs(graph)
    closed = distance_matrix(params, graph.masks())
    vs = graph.vertices
    bad = np.argwhere(closed != bfs)
    mismatches = [(vs[a], vs[b], int(closed[a, b]), int(bfs[a, b])) for a, b in bad]
    return VerificationReport("distance", params, len(vs) ** 2, mismatches)


def verify_layers(params: LevelParams) -> VerificationReport:
    """BFS from P: histogram against f, and each vertex against its classified layer."""
    _guard(params, MAX_PAIRS_N, "layer verification")
    graph = build_graph(params)
    P = initial_vertex(params)
    dist = bfs_distances(graph, P)
    counts = [0] * (params.diameter + 1)
    mismatches: list[tuple] = []
    for v in graph.vertices:
        d = dist.get(v, -1)
        expected = classify(params, v).distance
        if d != expected:
            mismatches.append((P, v, expected, d))
        if 0 <= d < len(counts):
            counts[d] += 1
    formula = layer_table(params).f
    mismatches.sort()
    mismatches += [("f", x, want, got) for x, (want, got) in enumerate(zip(formula, counts)) if want != got]
    if len(dist) != len(graph) or max(dist.values()) > params.diameter:
        mismatches.append(("reachable", len(graph), len(dist)))
    return VerificationReport("layers", params, len(graph), mismatches, tuple(counts))


def verify_metric_axioms(
    params: LevelParams, samples: int | None = None, seed: int = 0
) -> VerificationReport:
    """Identity, symmetry, triangle inequality and d = 1 exactly on edges.

    With ``samples=None`` every pair and triple is checked (n <= 10); otherwise
    ``samples`` seeded random triples are drawn.
    """
    if samples is None:
        return _axioms_exhaustive(params)
    return _axioms_sampled(params, samples, seed)


def _axioms_exhaustive(params: LevelParams) -> VerificationReport:
    _guard(params, MAX_TRIPLES_N, "exhaustive axiom verification")
    graph = build_graph(params)
    size = len(graph)
    D = distance_matrix(params, graph.masks()).astype(np.int32)
    E = np.zeros((size, size), dtype=bool)
    for u, v in graph.edges():
        E[u, v] = E[v, u] = True
    found = []
    found += [("identity", a, b) for a, b in np.argwhere((D == 0) != np.eye(size, dtype=bool))]
    found += [("symmetry", a, b) for a, b in np.argwhere(D != D.T)]
    found += [("edge", a, b) for a, b in np.argwhere((D == 1) != E)]
    for b in range(size):
        broken = np.argwhere(D[:, b, None] + D[None, b, :] < D)
        found += [("triangle", a, b, c) for a, c in broken]
    found.sort(key=lambda m: (m[0], *map(int, m[1:])))
    vs = graph.vertices
    mismatches = [(m[0], *(vs[j] for j in m[1:])) for m in found]
    return VerificationReport("axioms", params, size**3, mismatches)


def random_vertex(params: LevelParams, rng: random.Random, size: int | None = None) -> VertexSet:
    n = params.n
    if size is None:
        size = params.k if rng.random() < 0.5 else params.big
    # draw the smaller of the set and its complement
    picked = sum(1 << e for e in rng.sample(range(n), min(size, n - size)))
    if size > n - size:
        picked ^= (1 << n) - 1
    return VertexSet(picked, n)


def random_neighbor(params: LevelParams, v: VertexSet, rng: random.Random) -> VertexSet:
    """A uniformly chosen superset (for k-sets) or subset (for (n-k)-sets) one level away."""
    pool = list(v) if len(v) == params.big else list(v.complement())
    flip = sum(1 << (e - 1) for e in rng.sample(pool, params.t))
    return VertexSet(v.bits ^ flip, params.n)


def _axioms_sampled(params: LevelParams, samples: int, seed: int) -> VerificationReport:
    params.require_materializable()
    rng = random.Random(seed)
    mismatches: list[tuple] = []
    for _ in range(samples):
        A, B, C = (random_vertex(params, rng) for _ in range(3))
        ab, bc, ac = distance(params, A, B), distance(params, B, C), distance(params, A, C)
        if distance(params, A, A) != 0 or (ab == 0) != (A == B):
            mismatches.append(("identity", A, B))
        if ab != distance(params, B, A):
            mismatches.append(("symmetry", A, B))
        if ab + bc < ac:
            mismatches.append(("triangle", A, B, C))
        if (ab == 1) != is_edge(params, A, B):
            mismatches.append(("edge", A, B))
        N = random_neighbor(params, A, rng)
        if distance(params, A, N) != 1 or not is_edge(params, A, N):
            mismatches.append(("edge", A, N))
    mismatches.sort(key=lambda m: (m[0], *m[1:]))
    return VerificationReport("axioms", params, samples, mismatches)


def verify_shortest_paths(
    params: LevelParams, samples: int | None = None, seed: int = 0
) -> VerificationReport:
    """Every constructed path must be valid, join its endpoints and match BFS.

    Exhaustive over ordered pairs when ``samples`` is None (n <= 10); the
    sampled mode compares against the closed form instead of BFS.
    """
    if samples is None:
        _guard(params, MAX_TRIPLES_N, "exhaustive path verification")
        graph = build_graph(params)
        bfs = all_pairs_bfs(graph)
        pairs = [
            (A, B, int(bfs[a, b]))
            for a, A in enumerate(graph.vertices)
            for b, B in enumerate(graph.vertices)
        ]
    else:
        params.require_materializable()
        rng = random.Random(seed)
        pairs = []
        for _ in range(samples):
            A, B = random_vertex(params, rng), random_vertex(params, rng)
            pairs.append((A, B, distance(params, A, B)))
    mismatches = []
    for A, B, expected in pairs:
        path = shortest_path(params, A, B)
        try:
            path.validate()
            ok = path.start == A and path.end == B
        except ValueError:
            ok = False
        if not ok or path.length != expected:
            mismatches.append((A, B, path.length if ok else -1, expected))
    mismatches.sort()
    return VerificationReport("paths", params, len(pairs), mismatches)


def identity_report(params: LevelParams) -> VerificationReport:
    r = verify_identities(params)
    mismatches = [] if r.passed else [("identities", r.binom, r.gamma_sum, r.delta_sum)]
    return VerificationReport("identities", params, 2, mismatches)


def valid_params(n_max: int, n_min: int = 1) -> Iterator[LevelParams]:
    for n in range(n_min, n_max + 1):
        for k in range((n - 1) // 2 + 1):
            yield LevelParams(n, k)


def sweep(n_max: int, samples: int = 10_000, seed: int = 0) -> Iterator[VerificationReport]:
    """Run every check for each valid (n, k) with n <= n_max.

    Triple and path checks switch to ``samples`` seeded draws above n = 10.
    """
    _guard(LevelParams(n_max, 0), MAX_PAIRS_N, "sweep")
    for params in valid_params(n_max):
        yield verify_distance_formula(params)
        yield verify_layers(params)
        exhaustive = params.n <= MAX_TRIPLES_N
        yield verify_metric_axioms(params, None if exhaustive else samples, seed)
        yield verify_shortest_paths(params, None if exhaustive else samples, seed)
        yield identity_report(params)

