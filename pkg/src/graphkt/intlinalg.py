"""Exact linear algebra over the integers.

Everything works on plain Python ints, so arithmetic never overflows and
results are exact at any size. The central routine is the Smith normal
form with recovered unimodular transforms; kernels, cokernels and the
normal form of finitely generated abelian groups are read off from it.
"""

from __future__ import annotations

from dataclasses import dataclass


class IntMatrix:
    """Dense integer matrix, row-major, immutable after construction.

    Zero-dimensional shapes (0 x n, n x 0) are legal and represent maps
    to or from the zero group.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        data = tuple(entries)
        if len(data) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(data)}")
        for e in data:
            if not isinstance(e, int):
                raise TypeError(f"non-integer entry: {e!r}")
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    def __getitem__(self, key):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) out of range for {self.rows}x{self.cols}")
        return self._data[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self._data[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self._data[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list:
        c = self.cols
        return [list(self._data[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            [self._data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def diagonal(self) -> tuple:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    def __matmul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        n, k, m = self.rows, self.cols, other.cols
        out = [0] * (n * m)
        for i in range(n):
            base = i * k
            ob = i * m
            for t in range(k):
                a = self._data[base + t]
                if a:
                    tb = t * m
                    for j in range(m):
                        out[ob + j] += a * other._data[tb + j]
        return IntMatrix(n, m, out)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        if self.rows <= 6 and self.cols <= 6:
            return f"IntMatrix.from_rows({self.to_rows()!r})"
        return f"IntMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class SnfResult:
    """Diagonalization u @ m @ v == s with u, v unimodular.

    The diagonal of ``s`` starts with ``rank`` positive entries forming a
    divisibility chain d1 | d2 | ... and is zero afterwards.
    """

    u: IntMatrix
    s: IntMatrix
    v: IntMatrix
    rank: int


@dataclass(frozen=True)
class AbelianGroup:
    """Normal form of a finitely generated abelian group.

    ``torsion`` is the invariant-factor chain d1 | d2 | ... | dk with every
    di >= 2; two groups are isomorphic exactly when these fields agree.
    """

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion entries must be >= 2, got {d}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion must form a divisibility chain, got {self.torsion}")

    def __str__(self):
        return group_format(self)


def group_format(g: AbelianGroup) -> str:
    """Canonical rendering of an abelian group.

    >>> group_format(AbelianGroup(0))
    '0'
    >>> group_format(AbelianGroup(2, (2, 4)))
    'Z^2 (+) Z/2 (+) Z/4'
    """
    parts = []
    if g.free_rank == 1:
        parts.append("Z")
    elif g.free_rank > 1:
        parts.append(f"Z^{g.free_rank}")
    parts.extend(f"Z/{d}" for d in g.torsion)
    return " (+) ".join(parts) if parts else "0"


def _xgcd(a: int, b: int):
    """Return (g, x, y) with g = gcd(a, b) = x*a + y*b; g >= 0 for a, b >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _negate_row(m, i):
    m[i] = [-e for e in m[i]]


def _row_submul(m, i, t, q):
    # row i -= q * row t
    ri, rt = m[i], m[t]
    for k, e in enumerate(rt):
        if e:
            ri[k] -= q * e


def _col_submul(m, j, t, q):
    # column j -= q * column t
    for row in m:
        e = row[t]
        if e:
            row[j] -= q * e


def _find_pivot(sm, nr, nc, t):
    """Position of a nonzero entry of minimal absolute value in sm[t:, t:]."""
    best = None
    best_abs = None
    for i in range(t, nr):
        row = sm[i]
        for j in range(t, nc):
            e = row[j]
            if e:
                a = -e if e < 0 else e
                if a == 1:
                    return i, j
                if best is None or a < best_abs:
                    best = (i, j)
                    best_abs = a
    return best


def _merge_diag_pair(sm, u, v, k):
    """Replace diag entries (a, b) at k, k+1 by (gcd, lcm), transforms recorded."""
    a = sm[k][k]
    b = sm[k + 1][k + 1]
    g, x, y = _xgcd(a, b)
    ag = a // g
    bg = b // g
    _row_submul(sm, k, k + 1, -1)
    if u is not None:
        _row_submul(u, k, k + 1, -1)
    for row in sm:
        ck, cl = row[k], row[k + 1]
        row[k] = x * ck + y * cl
        row[k + 1] = ag * cl - bg * ck
    if v is not None:
        for row in v:
            ck, cl = row[k], row[k + 1]
            row[k] = x * ck + y * cl
            row[k + 1] = ag * cl - bg * ck
    q = y * bg
    _row_submul(sm, k + 1, k, q)
    if u is not None:
        _row_submul(u, k + 1, k, q)


def _smith(sm, nr, nc, u, v) -> int:
    """Diagonalize sm in place and return its rank.

    Pivot choice: nonzero entry of minimal absolute value in the working
    submatrix, which bounds coefficient growth at the sizes this package
    produces. A final gcd-repair pass restores the divisibility chain.
    When u or v is given, row and column operations are mirrored there.
    """
    t = 0
    while t < nr and t < nc:
        piv = _find_pivot(sm, nr, nc, t)
        if piv is None:
            break
        while True:
            pi, pj = piv
            if pi != t:
                _swap_rows(sm, pi, t)
                if u is not None:
                    _swap_rows(u, pi, t)
            if pj != t:
                _swap_cols(sm, pj, t)
                if v is not None:
                    _swap_cols(v, pj, t)
            p = sm[t][t]
            dirty = False
            for i in range(t + 1, nr):
                e = sm[i][t]
                if e:
                    q = e // p
                    if q:
                        _row_submul(sm, i, t, q)
                        if u is not None:
                            _row_submul(u, i, t, q)
                    if sm[i][t]:
                        dirty = True
            if not dirty:
                for j in range(t + 1, nc):
                    e = sm[t][j]
                    if e:
                        q = e // p
                        if q:
                            _col_submul(sm, j, t, q)
                            if v is not None:
                                _col_submul(v, j, t, q)
                        if sm[t][j]:
                            dirty = True
            if not dirty:
                break
            piv = _find_pivot(sm, nr, nc, t)
        t += 1
    rank = t
    for k in range(rank):
        if sm[k][k] < 0:
            _negate_row(sm, k)
            if u is not None:
                _negate_row(u, k)
    if rank > 1:
        changed = True
        while changed:
            changed = False
            for k in range(rank - 1):
                if sm[k + 1][k + 1] % sm[k][k]:
                    _merge_diag_pair(sm, u, v, k)
                    changed = True
    return rank


def snf(m: IntMatrix) -> SnfResult:
    """Smith normal form with transforms: u @ m @ v == s.

    Deterministic for a fixed input. Works for any shape, including
    zero-dimensional matrices.
    """
    nr, nc = m.rows, m.cols
    sm = m.to_rows()
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]
    rank = _smith(sm, nr, nc, u, v)
    return SnfResult(
        IntMatrix.from_rows(u, cols=nr),
        IntMatrix.from_rows(sm, cols=nc),
        IntMatrix.from_rows(v, cols=nc),
        rank,
    )


def invariant_factors(m: IntMatrix) -> tuple:
    """Nonzero diagonal d1 | d2 | ... of the Smith form, without transforms.

    Cheaper than :func:`snf` when only ranks and cokernels are needed.
    """
    sm = m.to_rows()
    rank = _smith(sm, m.rows, m.cols, None, None)
    return tuple(sm[k][k] for k in range(rank))


def kernel_basis(m: IntMatrix) -> list:
    """Basis of {x : m @ x = 0} spanning a direct summand of Z^cols.

    Returns cols - rank vectors (the trailing columns of the right
    transform); empty when the map is injective.
    """
    res = snf(m)
    v = res.v
    return [tuple(v[i, j] for i in range(m.cols)) for j in range(res.rank, m.cols)]


def cokernel(m: IntMatrix) -> AbelianGroup:
    """Normal form of Z^rows / image(m).

    >>> cokernel(IntMatrix.from_rows([[0], [1]]))
    AbelianGroup(free_rank=1, torsion=())
    """
    d = invariant_factors(m)
    return AbelianGroup(m.rows - len(d), tuple(x for x in d if x >= 2))


def det_bareiss(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - aik * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]
