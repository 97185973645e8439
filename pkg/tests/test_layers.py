from math import comb

import pytest

from levelgraph.core import binom, make_params
from levelgraph.layers import (
    delta,
    enumerate_layer,
    f,
    gamma,
    layer_table,
    verify_identities,
)
from levelgraph.metric import LayerIndex, Side

from bruteforce import histogram

L25 = make_params(5, 2)
L38 = make_params(8, 3)


def labels(vs):
    return sorted(int(v.label()) for v in vs)


def all_params(n_max):
    return [make_params(n, k) for n in range(1, n_max + 1) for k in range((n - 1) // 2 + 1)]


def test_gamma_delta_f_examples():
    assert gamma(L25, 0) == 1
    assert gamma(L25, 1) == 6
    assert delta(L25, 0) == 3
    assert delta(L25, 2) == 1
    assert f(L25, 3) == 6
    assert f(L25, 4) == 3
    assert f(L38, 0) == 1
    assert [f(L25, x) for x in range(6)] == [1, 3, 6, 6, 3, 1]


def test_l38_counts_come_from_bfs():
    h = histogram(8, 3)
    assert h == (1, 10, 45, 45, 10, 1)
    assert gamma(L38, 1) == h[2] == 45
    assert delta(L38, 0) == h[1] == 10


@pytest.mark.parametrize("bad", [-1, 3])
def test_index_out_of_range(bad):
    with pytest.raises(ValueError):
        gamma(L25, bad)
    with pytest.raises(ValueError):
        delta(L25, bad)
    with pytest.raises(ValueError):
        enumerate_layer(L25, LayerIndex(Side.SMALL, bad))


def test_f_domain():
    with pytest.raises(ValueError):
        f(L25, 6)
    with pytest.raises(ValueError):
        f(L25, -1)


def test_enumerate_examples():
    assert labels(enumerate_layer(L25, LayerIndex(Side.SMALL, 1))) == [13, 14, 15, 23, 24, 25]
    assert labels(enumerate_layer(L25, LayerIndex(Side.LARGE, 0))) == [123, 124, 125]
    assert labels(enumerate_layer(L25, LayerIndex(Side.SMALL, 0))) == [12]


def test_enumerate_is_bitmask_ordered():
    vs = enumerate_layer(L38, LayerIndex(Side.LARGE, 1))
    assert [x.bits for x in vs] == sorted(x.bits for x in vs)


def test_enumerate_guard():
    with pytest.raises(ValueError):
        enumerate_layer(make_params(21, 3), LayerIndex(Side.SMALL, 0))


@pytest.mark.parametrize("p", all_params(12), ids=str)
def test_enumeration_matches_counts_and_bfs(p):
    seen = set()
    table = layer_table(p)
    for i in range(p.s + 1):
        for side, count in ((Side.SMALL, table.gamma[i]), (Side.LARGE, table.delta[i])):
            layer = enumerate_layer(p, LayerIndex(side, i))
            assert len(layer) == count
            assert seen.isdisjoint(layer)
            seen.update(layer)
    assert len(seen) == 2 * comb(p.n, p.k)
    h = histogram(p.n, p.k)
    assert table.f == h + (0,) * (len(table.f) - len(h))


def test_partition_and_f_sum_up_to_40():
    for p in all_params(40):
        t = layer_table(p)
        assert sum(t.gamma) == sum(t.delta) == comb(p.n, p.k)
        assert sum(f(p, x) for x in range(2 * p.s + 2)) == 2 * comb(p.n, p.k)
        assert t.gamma[0] == 1
        assert all(c >= 0 for c in t.f)


def test_counting_scales_past_enumeration():
    p = make_params(500, 200)
    assert sum(layer_table(p).gamma) == comb(500, 200)


def reindexed_gamma(p, i):
    # only terms with (i-1)t < l <= it and 0 <= l <= k are nonempty
    lo, hi = max(0, (i - 1) * p.t + 1), min(p.k, i * p.t)
    return sum(comb(p.k, p.k - l) * comb(p.n - p.k, l) for l in range(lo, hi + 1))


def reindexed_delta(p, i):
    lo, hi = max(0, (i - 1) * p.t + 1), min(p.k, i * p.t)
    return sum(comb(p.k, p.k - l) * comb(p.n - p.k, p.t + l) for l in range(lo, hi + 1))


def test_vacuous_terms_vanish():
    for p in all_params(40):
        for i in range(p.s + 1):
            assert gamma(p, i) == reindexed_gamma(p, i)
            assert delta(p, i) == reindexed_delta(p, i)


@pytest.mark.parametrize("n, k, total", [(5, 2, 10), (8, 3, 56), (7, 3, 35)])
def test_identity_examples(n, k, total):
    r = verify_identities(make_params(n, k))
    assert r.passed
    assert r.binom == r.gamma_sum == r.delta_sum == total == binom(n, k)
