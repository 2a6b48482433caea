"""Exact dense linear algebra over the rationals.

Matrices are immutable row-major grids of :class:`fractions.Fraction`.
Subspaces are stored by a reduced row-echelon basis, so two subspaces are
equal exactly when their basis matrices are identical.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class AmbientMismatch(ValueError):
    """Two subspaces (or a vector and a subspace) live in different spaces."""


def _rat(x) -> Fraction:
    return x if type(x) is Fraction else Fraction(x)


class Mat:
    """An immutable ``rows x cols`` matrix of rationals."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable], rows: Optional[int] = None,
                 cols: Optional[int] = None):
        grid = tuple(tuple(_rat(x) for x in row) for row in data)
        if rows is None:
            rows = len(grid)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise ValueError(f"ragged or mis-sized matrix data for {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.data = grid

    @classmethod
    def _raw(cls, grid: tuple, rows: int, cols: int) -> "Mat":
        m = object.__new__(cls)
        m.rows, m.cols, m.data = rows, cols, grid
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls._raw(tuple((ZERO,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls._raw(tuple(tuple(ONE if i == j else ZERO for j in range(n))
                              for i in range(n)), n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Mat":
        cols = len(columns)
        return cls._raw(tuple(tuple(_rat(columns[j][i]) for j in range(cols))
                              for i in range(rows)), rows, cols)

    @classmethod
    def from_flat(cls, flat: Sequence, rows: int, cols: int) -> "Mat":
        return cls._raw(tuple(tuple(_rat(flat[i * cols + j]) for j in range(cols))
                              for i in range(rows)), rows, cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list:
        return [self.col(j) for j in range(self.cols)]

    def flat(self) -> tuple:
        return tuple(x for r in self.data for x in r)

    def tolist(self) -> list:
        return [list(r) for r in self.data]

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    @property
    def T(self) -> "Mat":
        return Mat._raw(tuple(zip(*self.data)) if self.rows else
                        tuple(() for _ in range(self.cols)), self.cols, self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.data)
        return f"Mat({self.rows}x{self.cols}: [{body}])"

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return Mat._raw(tuple(tuple(a + b for a, b in zip(r, s))
                              for r, s in zip(self.data, other.data)), self.rows, self.cols)

    def __sub__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        return Mat._raw(tuple(tuple(a - b for a, b in zip(r, s))
                              for r, s in zip(self.data, other.data)), self.rows, self.cols)

    def __neg__(self) -> "Mat":
        return Mat._raw(tuple(tuple(-a for a in r) for r in self.data), self.rows, self.cols)

    def scale(self, c) -> "Mat":
        c = _rat(c)
        return Mat._raw(tuple(tuple(c * a for a in r) for r in self.data), self.rows, self.cols)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.rows == 0 or other.cols == 0:
            return Mat.zeros(self.rows, other.cols)
        if self.cols == 0:
            return Mat.zeros(self.rows, other.cols)
        ocols = list(zip(*other.data))
        out = []
        for r in self.data:
            nz = [(k, a) for k, a in enumerate(r) if a]
            if not nz:
                out.append((ZERO,) * other.cols)
                continue
            out.append(tuple(sum((a * c[k] for k, a in nz), ZERO) for c in ocols))
        return Mat._raw(tuple(out), self.rows, other.cols)

    def apply(self, vec: Sequence) -> tuple:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        nz = [(k, v) for k, v in enumerate(vec) if v]
        return tuple(sum((r[k] * v for k, v in nz), ZERO) for r in self.data)

    def is_zero(self) -> bool:
        return not any(x for r in self.data for x in r)

    def rank(self) -> int:
        return len(rref(self)[1])

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), ZERO)


def hstack(mats: Sequence[Mat], rows: int) -> Mat:
    """Concatenate matrices side by side; ``rows`` is used when ``mats`` is empty."""
    if not mats:
        return Mat.zeros(rows, 0)
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise ValueError("hstack row mismatch")
    cols = sum(m.cols for m in mats)
    return Mat._raw(tuple(tuple(x for m in mats for x in m.data[i]) for i in range(rows)),
                    rows, cols)


def vstack(mats: Sequence[Mat], cols: int) -> Mat:
    if not mats:
        return Mat.zeros(0, cols)
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise ValueError("vstack column mismatch")
    return Mat._raw(tuple(r for m in mats for r in m.data), sum(m.rows for m in mats), cols)


def block_diag(mats: Sequence[Mat]) -> Mat:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = []
    off = 0
    for m in mats:
        left = (ZERO,) * off
        right = (ZERO,) * (cols - off - m.cols)
        for r in m.data:
            out.append(left + r + right)
        off += m.cols
    return Mat._raw(tuple(out), rows, cols)


def _rref_rows(rows: list, ncols: int) -> list:
    """In-place Gauss-Jordan on a list of row lists; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = None
        for i in range(r, nrows):
            if rows[i][c]:
                p = i
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        piv = pr[c]
        if piv != 1:
            inv = 1 / piv
            pr = [x * inv for x in pr]
            rows[r] = pr
        nz = [(k, pr[k]) for k in range(c, ncols) if pr[k]]
        for i in range(nrows):
            if i == r:
                continue
            ri = rows[i]
            f = ri[c]
            if f:
                for k, v in nz:
                    ri[k] -= f * v
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Mat):
    """Reduced row-echelon form of ``m`` and its pivot columns."""
    rows = [list(r) for r in m.data]
    pivots = _rref_rows(rows, m.cols)
    return Mat._raw(tuple(tuple(r) for r in rows), m.rows, m.cols), pivots


def rank(m: Mat) -> int:
    return m.rank()


def _canonical_rows(vectors: Iterable[Sequence], n: int) -> tuple:
    rows = [[_rat(x) for x in v] for v in vectors]
    if any(len(r) != n for r in rows):
        raise AmbientMismatch(f"vector length differs from ambient dimension {n}")
    pivots = _rref_rows(rows, n)
    return tuple(tuple(rows[i]) for i in range(len(pivots))), tuple(pivots)


class Subspace:
    """A subspace of ``Q^n`` held by its canonical reduced row-echelon basis."""

    __slots__ = ("ambient_dim", "rows", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        self.ambient_dim = ambient_dim
        self.rows, self.pivots = _canonical_rows(vectors, ambient_dim)

    @classmethod
    def _from_canonical(cls, n: int, rows: tuple, pivots: tuple) -> "Subspace":
        s = object.__new__(cls)
        s.ambient_dim, s.rows, s.pivots = n, rows, pivots
        return s

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls._from_canonical(n, (), ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls._from_canonical(n, Mat.identity(n).data, tuple(range(n)))

    @classmethod
    def row_space(cls, m: Mat) -> "Subspace":
        return cls(m.cols, m.data)

    @classmethod
    def column_space(cls, m: Mat) -> "Subspace":
        return cls(m.rows, m.T.data)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> Mat:
        return Mat._raw(self.rows, len(self.rows), self.ambient_dim)

    def vectors(self) -> list:
        return list(self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.rows))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(f"ambient dimensions {self.ambient_dim} and {other.ambient_dim}")

    def reduce(self, vec: Sequence) -> list:
        """Remainder of ``vec`` after clearing the pivot coordinates."""
        if len(vec) != self.ambient_dim:
            raise AmbientMismatch(f"vector of length {len(vec)} in ambient {self.ambient_dim}")
        v = [_rat(x) for x in vec]
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if f:
                for k in range(p, self.ambient_dim):
                    if row[k]:
                        v[k] -= f * row[k]
        return v

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))

    __contains__ = contains

    def coordinates(self, vec: Sequence) -> Optional[tuple]:
        """Coefficients of ``vec`` in the canonical basis, or None if outside."""
        if not self.contains(vec):
            return None
        return tuple(_rat(vec[p]) for p in self.pivots)

    def combine(self, coords: Sequence) -> tuple:
        out = [ZERO] * self.ambient_dim
        for c, row in zip(coords, self.rows):
            if c:
                for k, x in enumerate(row):
                    if x:
                        out[k] += c * x
        return tuple(out)

    def complement_indices(self) -> list:
        piv = set(self.pivots)
        return [j for j in range(self.ambient_dim) if j not in piv]

    def quotient_coordinates(self, vec: Sequence) -> tuple:
        """Coordinates of ``vec`` modulo this subspace, on the canonical complement."""
        v = self.reduce(vec)
        return tuple(v[j] for j in self.complement_indices())

    def issubset(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(r) for r in self.rows)

    __le__ = issubset

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if not other.rows:
            return self
        if not self.rows:
            return other
        return Subspace(self.ambient_dim, self.rows + other.rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection, from the kernel of the stacked system [U; -V]."""
        self._check(other)
        if not self.rows or not other.rows:
            return Subspace.zero(self.ambient_dim)
        stacked = Mat._raw(self.rows + tuple(tuple(-x for x in r) for r in other.rows),
                           self.dim + other.dim, self.ambient_dim)
        ker = kernel(stacked.T)
        vecs = [self.combine(k[:self.dim]) for k in ker.rows]
        return Subspace(self.ambient_dim, vecs)

    __and__ = intersect

    def is_zero(self) -> bool:
        return not self.rows


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, vectors)


def subspace_sum(spaces: Iterable[Subspace], ambient_dim: int) -> Subspace:
    vecs = []
    for s in spaces:
        if s.ambient_dim != ambient_dim:
            raise AmbientMismatch(f"ambient dimensions {s.ambient_dim} and {ambient_dim}")
        vecs.extend(s.rows)
    return Subspace(ambient_dim, vecs)


def kernel(m: Mat) -> Subspace:
    """Canonical basis of the right null space of ``m``."""
    red, pivots = rref(m)
    n = m.cols
    pset = set(pivots)
    vecs = []
    for f in range(n):
        if f in pset:
            continue
        v = [ZERO] * n
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -red.data[i][f]
        vecs.append(v)
    return Subspace(n, vecs)


def image(m: Mat) -> Subspace:
    return Subspace.column_space(m)


def solve(a: Mat, b: Sequence) -> Optional[tuple]:
    """Some ``x`` with ``a x = b``, or None when the system is inconsistent."""
    if len(b) != a.rows:
        raise ValueError("right-hand side length differs from row count")
    rows = [list(r) + [_rat(bi)] for r, bi in zip(a.data, b)]
    pivots = _rref_rows(rows, a.cols + 1)
    if pivots and pivots[-1] == a.cols:
        return None
    x = [ZERO] * a.cols
    for i, p in enumerate(pivots):
        x[p] = rows[i][a.cols]
    return tuple(x)


def solve_matrix(a: Mat, b: Mat) -> Optional[Mat]:
    """Some ``X`` with ``a X = b``, column by column."""
    if a.rows != b.rows:
        raise ValueError("row count mismatch")
    rows = [list(r) + list(s) for r, s in zip(a.data, b.data)]
    pivots = _rref_rows(rows, a.cols + b.cols)
    if any(p >= a.cols for p in pivots):
        return None
    out = [[ZERO] * b.cols for _ in range(a.cols)]
    for i, p in enumerate(pivots):
        out[p] = rows[i][a.cols:]
    return Mat(out, a.cols, b.cols)


def inverse(m: Mat) -> Optional[Mat]:
    if m.rows != m.cols:
        return None
    x = solve_matrix(m, Mat.identity(m.rows))
    if x is None or m.rank() != m.rows:
        return None
    return x


def is_invertible(m: Mat) -> bool:
    return m.rows == m.cols and m.rank() == m.rows


def minimal_polynomial(m: Mat) -> list:
    """Monic minimal polynomial of a square matrix, coefficients lowest degree first."""
    n = m.rows
    if m.rows != m.cols:
        raise ValueError("minimal polynomial of a non-square matrix")
    powers = [Mat.identity(n)]
    while True:
        span_rows = Mat([p.flat() for p in powers], len(powers), n * n)
        nxt = powers[-1] @ m
        coeffs = solve(span_rows.T, nxt.flat())
        if coeffs is not None:
            return [-c for c in coeffs] + [ONE]
        powers.append(nxt)


def poly_eval(coeffs: Sequence, m: Mat) -> Mat:
    """Evaluate a polynomial (lowest degree first) at a square matrix by Horner."""
    n = m.rows
    acc = Mat.zeros(n, n)
    ident = Mat.identity(n)
    for c in reversed(coeffs):
        acc = acc @ m + ident.scale(c)
    return acc
