"""K0, K1 and Ext across the classic single-vertex family and friends.

Run:  python3 demos/02_invariants_tour.py
"""

from graphkt import (
    ConditionLViolation,
    Graph,
    INF,
    ext_group,
    group_format,
    k_groups,
)


def show(name, g):
    r = k_groups(g)
    try:
        e = group_format(ext_group(g).ext)
    except ConditionLViolation as exc:
        e = f"blocked (witness {' '.join(exc.witness)})"
    print(f"{name:<28} K0 = {group_format(r.k0):<10} "
          f"K1 = {group_format(r.k1):<6} Ext = {e}")


# n parallel loops on one vertex: torsion Z/(n-1) appears for n >= 3
for n in range(2, 7):
    show(f"{n} loops on one vertex", Graph(["v"], {("v", "v"): n}))

show("one infinite loop", Graph(["v"], {("v", "v"): INF}))

# sinks contribute free rank
for k in (1, 2, 3):
    vs = [f"s{i}" for i in range(k)]
    show(f"{k} isolated sink(s)", Graph(vs))

# a loop fed by an infinite emitter: the loop has no exit, so the Ext
# formula is gated (K-theory is unaffected)
show("loop fed by infinite emitter",
     Graph(["w", "v"], {("w", "w"): 1, ("v", "w"): INF}))

# forcing evaluates the formula anyway, flagged as hypothesis-unmet
g = Graph(["w", "v"], {("w", "w"): 1, ("v", "w"): INF})
res = ext_group(g, force=True)
print(f"\nforced formula value: {group_format(res.ext)} "
      f"(condition (L) holds: {res.condition_l_holds})")
