"""The exact integer engine: Smith form, kernels, cokernels.

Run:  python3 demos/04_integer_normal_forms.py
"""

from graphkt import (
    IntMatrix,
    cokernel,
    det_bareiss,
    group_format,
    kernel_basis,
    snf,
)

m = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
res = snf(m)
print("matrix:")
for row in m.to_rows():
    print("  ", row)
print("smith diagonal:", res.s.diagonal())
print("rank:", res.rank)
print("u @ m @ v == s:", res.u @ m @ res.v == res.s)
print("|det u|, |det v|:", abs(det_bareiss(res.u)), abs(det_bareiss(res.v)))

print("\ncokernel (Z^3 modulo the column span):", group_format(cokernel(m)))

k = IntMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
print("\nrank-1 matrix with a 2-dimensional kernel:")
for x in kernel_basis(k):
    print("  kernel vector:", x)

# big values stay exact: scale the matrix hugely and nothing overflows
big = IntMatrix.from_rows([[e * 10**30 for e in row] for row in m.to_rows()])
print("\ncokernel after scaling all entries by 10^30:")
print("  ", group_format(cokernel(big)))
