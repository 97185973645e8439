"""Checking the closed forms against breadth-first search.

Every pair distance, every constructed path and the layer histogram are
compared with BFS on the explicit graph.
"""
import time

from levelgraph import (
    make_params,
    verify_distance_formula,
    verify_layers,
    verify_metric_axioms,
    verify_shortest_paths,
)

for n, k in [(5, 2), (9, 3), (12, 5)]:
    p = make_params(n, k)
    start = time.perf_counter()
    reports = [verify_distance_formula(p), verify_layers(p)]
    if n <= 10:
        reports += [verify_metric_axioms(p), verify_shortest_paths(p)]
    else:
        reports += [verify_metric_axioms(p, samples=20_000, seed=1),
                    verify_shortest_paths(p, samples=20_000, seed=1)]
    for r in reports:
        print(r.summary())
    print(f"  {time.perf_counter() - start:.2f}s")

# Sampled axioms on a graph far too large to materialize (2 * C(40,13) vertices).
print(verify_metric_axioms(make_params(40, 13), samples=20_000, seed=42).summary())
