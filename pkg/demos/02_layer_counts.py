"""How many vertices sit at each distance from P = {1, ..., k}.

Counts come from binomial sums, so they work far beyond what can be enumerated.
"""
from math import comb

from levelgraph import LayerIndex, Side, enumerate_layer, layer_table, make_params, verify_identities

p = make_params(5, 2)
table = layer_table(p)
print(p, "f =", table.f)
for i in range(p.s + 1):
    small = enumerate_layer(p, LayerIndex(Side.SMALL, i))
    large = enumerate_layer(p, LayerIndex(Side.LARGE, i))
    print(f"  distance {2 * i}: {[v.label() for v in small]}")
    print(f"  distance {2 * i + 1}: {[v.label() for v in large]}")

# n = 200 is far past enumeration; the layer counts are still exact integers.
big = make_params(200, 80)
t = layer_table(big)
print(big, "layers:", len(t.f), "sum of gamma == C(200,80):", sum(t.gamma) == comb(200, 80))

for n, k in [(8, 3), (7, 3), (40, 13)]:
    r = verify_identities(make_params(n, k))
    print(f"C({n},{k}) = {r.binom}: gamma-sum {r.gamma_sum}, delta-sum {r.delta_sum}, ok={r.passed}")
