"""Truncations of an infinite {0,1} vertex matrix vs the known limits.

The infinite matrix behind this family has two rows of 1s that no finite
truncation captures; the first two vertices are therefore declared
singular in every truncation. The truncated invariants are constant in
the truncation size and do NOT converge to the infinite-graph values,
which is the point: the free rank 2 is a boundary artifact of cutting
the matrix.

Run:  python3 demos/05_ea_truncations.py
"""

from graphkt import ea_family, group_format, k_groups
from graphkt.harness import EA_LIMITS, EA_NOTE, ea_table

g = ea_family(6)
print("truncation at n = 6:")
print("  vertices:", " ".join(g.vertices))
print("  declared singular:", sorted(g.declared_singular))
print("  stacked matrix (one 1 per column):")
for row in k_groups(g).stacked_matrix.to_rows():
    print("   ", row)

print("\ntruncation size vs invariants:")
for n, k0, k1 in ea_table(16):
    print(f"  n = {n:>2}:  K0 = {group_format(k0):<5} K1 = {group_format(k1)}")

ga, el = EA_LIMITS["graph_algebra"], EA_LIMITS["exel_laca"]
print("\nknown values for the full infinite matrix (not computed here):")
print(f"  graph algebra:     K0 = {group_format(ga['k0'])}, K1 = {group_format(ga['k1'])}")
print(f"  Exel-Laca algebra: K0 = {group_format(el['k0'])}, K1 = {group_format(el['k1'])}")
print("\n" + EA_NOTE)
