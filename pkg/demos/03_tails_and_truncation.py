"""Tails: removing singular vertices without changing the invariants.

A tail replaces a singular vertex's out-edges by a chain of fresh
vertices that re-emit those edges one step at a time. With a finite
truncation the result is again a finite graph, and the K-groups stay put
once the tail is long enough. This demo scans tail lengths and shows the
stabilization explicitly.

Run:  python3 demos/03_tails_and_truncation.py
"""

from graphkt import (
    Graph,
    INF,
    desingularize,
    emit_graph,
    group_format,
    k_groups,
    truncation_scan,
)

g = Graph(["w", "v"], {("w", "w"): 1, ("v", "w"): INF})
base = k_groups(g)
print("original graph: loop at w, infinitely many edges v -> w")
print(f"  K0 = {group_format(base.k0)}, K1 = {group_format(base.k1)}\n")

print("tail length n vs invariants of the desingularized graph:")
for n in range(1, 7):
    r = k_groups(desingularize(g, n))
    print(f"  n = {n}:  K0 = {group_format(r.k0):<6} K1 = {group_format(r.k1)}")

scan = truncation_scan(g)
print(f"\nscan verdict: {scan.status} (onset n = {scan.onset})\n")

print("the desingularized graph at n = 2, in canonical form:")
print(emit_graph(desingularize(g, 2)))

# different target orderings can give non-isomorphic graphs, but the
# stabilized invariants agree
g2 = Graph(["v", "a", "b"], {("v", "a"): INF, ("v", "b"): INF})
default = truncation_scan(g2)
swapped = truncation_scan(g2, orderings={"v": ["b", "a"]})
print("two target orderings at an infinite emitter:")
print(f"  default  -> {default.status}, value {tuple(map(group_format, default.value))}")
print(f"  permuted -> {swapped.status}, value {tuple(map(group_format, swapped.value))}")
