import math

import pytest
from hypothesis import given, strategies as st

from levelgraph.core import (
    LevelParams,
    VertexSet,
    binom,
    ceil_div,
    initial_vertex,
    is_edge,
    make_params,
    make_vertex,
)

from bruteforce import factorial_binom


@pytest.mark.parametrize("a, b, expected", [(5, 2, 10), (3, -1, 0), (3, 4, 0), (0, 0, 1)])
def test_binom_examples(a, b, expected):
    assert binom(a, b) == expected


def test_binom_matches_factorials():
    for a in range(-3, 40):
        for b in range(-3, 45):
            assert binom(a, b) == factorial_binom(a, b)


def test_binom_is_exact_for_large_arguments():
    assert binom(200, 100) == math.comb(200, 100)
    assert binom(1000, 3) == 1000 * 999 * 998 // 6


@given(st.integers(0, 300), st.integers(0, 300))
def test_binom_symmetry(a, b):
    if b <= a:
        assert binom(a, b) == binom(a, a - b)


@given(st.integers(1, 200), st.integers(-5, 205))
def test_binom_pascal_rule_holds_at_boundaries(a, b):
    assert binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b)


def test_ceil_div():
    assert [ceil_div(a, 3) for a in range(7)] == [0, 1, 1, 1, 2, 2, 2]
    with pytest.raises(ValueError):
        ceil_div(-1, 2)


def test_make_params_examples():
    p = make_params(5, 2)
    assert (p.n, p.k, p.t, p.s) == (5, 2, 1, 2)
    p = make_params(8, 3)
    assert (p.n, p.k, p.t, p.s) == (8, 3, 2, 2)


@pytest.mark.parametrize("n, k", [(6, 3), (4, 2), (0, 0), (5, -1), (-1, 0), (3, 5)])
def test_make_params_rejects(n, k):
    with pytest.raises(ValueError):
        make_params(n, k)


def test_k_zero_allowed():
    p = make_params(2, 0)
    assert (p.t, p.s, p.diameter) == (2, 0, 1)


def test_counting_params_accept_large_n():
    p = LevelParams(1000, 300)
    assert p.t == 400 and p.s == 1
    with pytest.raises(ValueError):
        p.require_materializable()


def test_make_vertex_examples():
    assert make_vertex([1, 2], 5) == VertexSet(0b11, 5)
    assert make_vertex([2, 1, 2], 5) == make_vertex([1, 2], 5)
    with pytest.raises(ValueError):
        make_vertex([0], 5)
    with pytest.raises(ValueError):
        make_vertex([6], 5)
    with pytest.raises(ValueError):
        make_vertex([1], 65)


def test_vertex_set_basics():
    A = make_vertex([1, 3, 5], 6)
    assert A.elements() == [1, 3, 5]
    assert len(A) == 3
    assert 3 in A and 2 not in A and 7 not in A
    assert A.complement().elements() == [2, 4, 6]
    assert (A & make_vertex([3, 4], 6)).elements() == [3]
    assert (A - make_vertex([3], 6)).elements() == [1, 5]
    assert A.label() == "135"
    assert make_vertex([1, 10], 12).label() == "1-10"
    assert VertexSet.interval(2, 4, 6).elements() == [2, 3, 4]
    assert VertexSet.interval(4, 3, 6).elements() == []
    assert VertexSet(0, 3).label() == "∅"
    with pytest.raises(ValueError):
        VertexSet(0b1000, 3)


@given(st.integers(1, 64).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n)))))
def test_vertex_set_invariants(case):
    n, members = case
    v = make_vertex(members, n)
    assert set(v) == members
    assert len(v) == len(members) == bin(v.bits).count("1")
    assert make_vertex(sorted(members, reverse=True), n) == v


def test_universe_mismatch():
    with pytest.raises(ValueError):
        make_vertex([1], 4) & make_vertex([1], 5)


def test_initial_vertex():
    assert initial_vertex(make_params(8, 3)).elements() == [1, 2, 3]
    assert initial_vertex(make_params(3, 0)).elements() == []


def test_is_edge_examples():
    p = make_params(5, 2)
    v = lambda *e: make_vertex(e, 5)
    assert is_edge(p, v(1, 2), v(1, 2, 3))
    assert not is_edge(p, v(1, 2), v(3, 4, 5))
    assert not is_edge(p, v(1, 2), v(1, 3))
    with pytest.raises(ValueError):
        is_edge(p, v(1), v(1, 2, 3))
    with pytest.raises(ValueError):
        is_edge(p, make_vertex([1, 2], 6), v(1, 2, 3))


def test_is_edge_symmetric_and_intersection():
    from itertools import combinations

    p = make_params(7, 2)
    vs = [make_vertex(c, 7) for r in (2, 5) for c in combinations(range(1, 8), r)]
    for A in vs:
        for B in vs:
            e = is_edge(p, A, B)
            assert e == is_edge(p, B, A)
            if e:
                assert len(A & B) == min(len(A), len(B))
