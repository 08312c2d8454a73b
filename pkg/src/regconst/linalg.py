"""Exact dense integer linear algebra.

Hermite and Smith normal forms with unimodular transforms, saturated integer
kernels, ranks, determinants and cokernel orders, all in arbitrary-precision
arithmetic.  There is no floating point anywhere in this module.

Convention, used across the whole package: vectors are rows, and a matrix
with r rows and c columns represents a map Z^r -> Z^c acting by right
multiplication, x -> x @ A.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence


class IntMatrix:
    """Immutable dense integer matrix with explicit row and column counts.

    Explicit dimensions matter because zero-row and zero-column matrices occur
    routinely here (empty fixed sublattices, rank-0 modules); a bare list of
    lists cannot represent an r x 0 or 0 x c shape unambiguously.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable[int]], cols: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in data)
        if rows:
            width = len(rows[0])
            if any(len(row) != width for row in rows):
                raise ValueError("ragged rows in matrix")
            if cols is not None and cols != width:
                raise ValueError(f"cols={cols} does not match row width {width}")
            cols = width
        elif cols is None:
            cols = 0
        self.data = rows
        self.rows = len(rows)
        self.cols = cols

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.cols == other.cols and self.data == other.data

    def __hash__(self) -> int:
        return hash((self.cols, self.data))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.data]!r}, cols={self.cols})"

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        if self.cols == 0 or other.cols == 0:
            return IntMatrix.zeros(self.rows, other.cols)
        cols = list(zip(*other.data))
        out = [
            [sum(a * b for a, b in zip(row, col)) for col in cols]
            for row in self.data
        ]
        return IntMatrix(out, cols=other.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "IntMatrix":
        if self.rows == 0:
            return IntMatrix([[] for _ in range(self.cols)], cols=0)
        return IntMatrix(list(zip(*self.data)), cols=self.rows)

    def row(self, i: int) -> tuple[int, ...]:
        return self.data[i]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.data]


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form: left @ A @ right is diagonal with `divisors`."""

    divisors: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix


def mat_sub(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} - {b.shape}")
    return IntMatrix(
        [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a.data, b.data)],
        cols=a.cols,
    )


def hstack(mats: Sequence[IntMatrix]) -> IntMatrix:
    if not mats:
        raise ValueError("hstack of no matrices")
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise ValueError("hstack row count mismatch")
    cols = sum(m.cols for m in mats)
    out = [sum((list(m.data[i]) for m in mats), []) for i in range(rows)]
    return IntMatrix(out, cols=cols)


def vstack(mats: Sequence[IntMatrix]) -> IntMatrix:
    if not mats:
        raise ValueError("vstack of no matrices")
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise ValueError("vstack column count mismatch")
    out = [list(r) for m in mats for r in m.data]
    return IntMatrix(out, cols=cols)


def is_permutation_matrix(a: IntMatrix) -> bool:
    if not a.is_square:
        return False
    seen = set()
    for row in a.data:
        ones = [j for j, v in enumerate(row) if v]
        if len(ones) != 1 or row[ones[0]] != 1:
            return False
        seen.add(ones[0])
    return len(seen) == a.rows


def hnf(a: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular and U @ a == H; pivot entries are
    positive, entries above each pivot are reduced into [0, pivot), and zero
    rows come last.  Pivots are chosen as the smallest nonzero absolute value
    to limit coefficient growth.
    """
    m, n = a.rows, a.cols
    h = [list(row) for row in a.data]
    u = [[int(i == j) for j in range(m)] for i in range(m)]

    def row_sub(i: int, k: int, q: int) -> None:
        hi, hk = h[i], h[k]
        for j in range(n):
            hi[j] -= q * hk[j]
        ui, uk = u[i], u[k]
        for j in range(m):
            ui[j] -= q * uk[j]

    def row_swap(i: int, k: int) -> None:
        h[i], h[k] = h[k], h[i]
        u[i], u[k] = u[k], u[i]

    def row_negate(i: int) -> None:
        h[i] = [-x for x in h[i]]
        u[i] = [-x for x in u[i]]

    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            piv, best = None, 0
            for i in range(r, m):
                v = abs(h[i][c])
                if v and (piv is None or v < best):
                    piv, best = i, v
                    if v == 1:
                        break
            if piv is None:
                break
            if piv != r:
                row_swap(r, piv)
            if h[r][c] < 0:
                row_negate(r)
            p = h[r][c]
            clean = True
            for i in range(r + 1, m):
                v = h[i][c]
                if v:
                    q = v // p
                    if q:
                        row_sub(i, r, q)
                    if h[i][c]:
                        clean = False
            if clean:
                break
        if h[r][c]:
            p = h[r][c]
            for i in range(r):
                q = h[i][c] // p
                if q:
                    row_sub(i, r, q)
            r += 1
    return IntMatrix(h, cols=n), IntMatrix(u, cols=m)


def snf(a: IntMatrix) -> SnfResult:
    """Smith normal form with unimodular transforms.

    left @ a @ right is diagonal, each divisor divides the next, zeros last.
    The pivot at every stage is the smallest nonzero absolute value of the
    trailing block, which keeps intermediate entries modest at this scale.
    """
    m, n = a.rows, a.cols
    s = [list(row) for row in a.data]
    left = [[int(i == j) for j in range(m)] for i in range(m)]
    right = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_sub(i: int, k: int, q: int) -> None:
        si, sk = s[i], s[k]
        for j in range(n):
            si[j] -= q * sk[j]
        li, lk = left[i], left[k]
        for j in range(m):
            li[j] -= q * lk[j]

    def col_sub(j: int, k: int, q: int) -> None:
        for row in s:
            row[j] -= q * row[k]
        for row in right:
            row[j] -= q * row[k]

    def row_swap(i: int, k: int) -> None:
        s[i], s[k] = s[k], s[i]
        left[i], left[k] = left[k], left[i]

    def col_swap(j: int, k: int) -> None:
        for row in s:
            row[j], row[k] = row[k], row[j]
        for row in right:
            row[j], row[k] = row[k], row[j]

    def row_negate(i: int) -> None:
        s[i] = [-x for x in s[i]]
        left[i] = [-x for x in left[i]]

    size = min(m, n)
    for t in range(size):
        piv, best = None, 0
        for i in range(t, m):
            si = s[i]
            for j in range(t, n):
                v = abs(si[j])
                if v and (piv is None or v < best):
                    piv, best = (i, j), v
                    if v == 1:
                        break
            if best == 1:
                break
        if piv is None:
            break
        i0, j0 = piv
        if i0 != t:
            row_swap(t, i0)
        if j0 != t:
            col_swap(t, j0)
        while True:
            if s[t][t] < 0:
                row_negate(t)
            dirty = False
            for i in range(t + 1, m):
                v = s[i][t]
                if v:
                    q = v // s[t][t]
                    if q:
                        row_sub(i, t, q)
                    if s[i][t]:
                        row_swap(t, i)
                        dirty = True
            for j in range(t + 1, n):
                v = s[t][j]
                if v:
                    q = v // s[t][t]
                    if q:
                        col_sub(j, t, q)
                    if s[t][j]:
                        col_swap(t, j)
                        dirty = True
            if dirty:
                continue
            p = s[t][t]
            offender = None
            for i in range(t + 1, m):
                si = s[i]
                if any(v % p for v in si[t + 1:]):
                    offender = i
                    break
            if offender is None:
                break
            row_sub(t, offender, -1)
        if s[t][t] < 0:
            row_negate(t)
    divisors = tuple(s[k][k] for k in range(size))
    return SnfResult(divisors, IntMatrix(left, cols=m), IntMatrix(right, cols=n))


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """Basis of the saturated integer kernel {x : x @ a == 0}.

    Saturated means the row span is pure in Z^rows: if n*x lies in the span
    for some n != 0 then x does.  Rows are returned in Hermite normal form,
    so the basis is canonical for a given input.
    """
    h, u = hnf(a)
    zero_rows = [i for i in range(a.rows) if not any(h.data[i])]
    if not zero_rows:
        return IntMatrix([], cols=a.rows)
    k = IntMatrix([u.data[i] for i in zero_rows], cols=a.rows)
    kh, _ = hnf(k)
    return IntMatrix([row for row in kh.data if any(row)], cols=a.rows)


def rank_of(a: IntMatrix) -> int:
    h, _ = hnf(a)
    return sum(1 for row in h.data if any(row))


def det(a: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if not a.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = [list(row) for row in a.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k]), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        pkk = m[k][k]
        for i in range(k + 1, n):
            mi = m[i]
            mik = mi[k]
            mk = m[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pkk - mik * mk[j]) // prev
            mi[k] = 0
        prev = pkk
    return sign * m[-1][-1]


def rank_and_det(a: IntMatrix) -> tuple[int, int | None]:
    return rank_of(a), (det(a) if a.is_square else None)


def is_unimodular(a: IntMatrix) -> bool:
    return a.is_square and abs(det(a)) == 1


def cokernel_order(a: IntMatrix) -> int | None:
    """Order of Z^cols / rowspan(a); None marks an infinite cokernel.

    An infinite cokernel is a legitimate result, not an error: callers use it
    as the signal that a candidate map is not rationally invertible.
    """
    if a.cols == 0:
        return 1
    divisors = snf(a).divisors
    nonzero = [d for d in divisors if d]
    if len(nonzero) < a.cols:
        return None
    return prod(nonzero)


def solve_left(basis: IntMatrix, vectors: IntMatrix) -> IntMatrix:
    """Solve X @ basis == vectors exactly over Z.

    `basis` must have independent rows.  Raises ValueError when some vector
    is not in the integral row span (for saturated bases this only happens
    when the vector is outside the rational span).
    """
    if basis.cols != vectors.cols:
        raise ValueError("column count mismatch in solve_left")
    h, u = hnf(basis)
    pivots: list[tuple[int, int]] = []
    for i, row in enumerate(h.data):
        c = next((j for j, v in enumerate(row) if v), None)
        if c is not None:
            pivots.append((i, c))
    if len(pivots) != basis.rows:
        raise ValueError("basis rows are linearly dependent")
    sols = []
    for v in vectors.data:
        y = [0] * basis.rows
        r = list(v)
        for i, c in pivots:
            num = r[c]
            p = h.data[i][c]
            if num % p:
                raise ValueError("no integral solution")
            q = num // p
            y[i] = q
            if q:
                hrow = h.data[i]
                for j in range(c, basis.cols):
                    r[j] -= q * hrow[j]
        if any(r):
            raise ValueError("vector outside the row span")
        sols.append(y)
    return IntMatrix(sols, cols=basis.rows) @ u


def solve_rational(a: Sequence[Sequence[int | Fraction]],
                   b: Sequence[int | Fraction]) -> list[Fraction]:
    """Solve the square system sum_j a[i][j] * x[j] == b[i] over Q."""
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise ValueError("solve_rational requires a square system")
    m = [[Fraction(x) for x in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col]), None)
        if pivot is None:
            raise ValueError("singular system")
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [m[i][n] for i in range(n)]
