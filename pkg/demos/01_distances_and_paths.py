"""Distances and shortest paths in L_{2,5}.

Run with ``python demos/01_distances_and_paths.py``.
"""
from levelgraph import distance, make_params, make_vertex, shortest_path

p = make_params(5, 2)
print(p, "t =", p.t, "s =", p.s)

# Vertices are 2-subsets and 3-subsets of {1,...,5}; labels drop the braces.
A = make_vertex([1, 2], 5)
for B in ([1, 2, 3], [1, 3], [1, 3, 4], [4, 5], [3, 4, 5]):
    B = make_vertex(B, 5)
    path = shortest_path(p, A, B)
    print(f"d({A.label()}, {B.label()}) = {distance(p, A, B)}:",
          " -> ".join(v.label() for v in path))

# A bigger graph: the path between complementary sets realizes the diameter 2s + 1.
q = make_params(13, 5)
P = make_vertex(range(1, 6), 13)
path = shortest_path(q, P, P.complement())
print(q, "diameter", q.diameter, "path length", path.length)
for v in path:
    print("   ", v)
