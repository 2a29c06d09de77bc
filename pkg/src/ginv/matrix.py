"""Immutable dense matrices over an exact involutive field."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch, FieldMismatch, NotIdempotent, NotSquare
from .fields import FieldSpec, Scalar


class Matrix:
    """A rows x cols matrix whose entries are raw values of ``field``.

    Instances are immutable and hashable; equality is exact and structural.
    ``a @ b`` is the ring product and ``a.star()`` the conjugate transpose.
    """

    __slots__ = ("field", "rows", "cols", "data", "_hash")

    def __init__(self, field: FieldSpec, rows: int, cols: int, data: Sequence):
        if rows < 0 or cols < 0:
            raise DimensionMismatch("matrix dimensions must be non-negative")
        data = tuple(data)
        if len(data) != rows * cols:
            raise DimensionMismatch(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(data)}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data
        self._hash = None

    # -- construction ------------------------------------------------------
    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Iterable]) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise DimensionMismatch("matrix needs at least one row")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        data = [field.coerce(x) for r in rows for x in r]
        return cls(field, len(rows), ncols, data)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, n, n, [o if i == j else z for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(field, rows, cols, [field.zero] * (rows * cols))

    # -- access ------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def raw(self, i: int, j: int):
        return self.data[i * self.cols + j]

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return Scalar(self.field, self.data[i * self.cols + j])

    def row_lists(self) -> list[list]:
        c = self.cols
        return [list(self.data[i * c:(i + 1) * c]) for i in range(self.rows)]

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for x in self.data)

    # -- equality / hashing ------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.rows, self.cols, self.data))
        return self._hash

    def __repr__(self):
        fmt = self.field.format_entry
        body = ", ".join("[" + ", ".join(fmt(x) for x in r) + "]" for r in self.row_lists())
        return f"Matrix({self.field.name}, [{body}])"

    # -- arithmetic --------------------------------------------------------
    def _check_same(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field.name} vs {other.field.name}")
        if other.shape != self.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        add = self.field.add
        return Matrix(self.field, self.rows, self.cols, map(add, self.data, other.data))

    def __sub__(self, other):
        self._check_same(other)
        sub = self.field.sub
        return Matrix(self.field, self.rows, self.cols, map(sub, self.data, other.data))

    def __neg__(self):
        return Matrix(self.field, self.rows, self.cols, map(self.field.neg, self.data))

    def __matmul__(self, other):
        return mat_mul(self, other)

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        mul = self.field.mul
        return Matrix(self.field, self.rows, self.cols, (mul(c, x) for x in self.data))

    def __pow__(self, k: int):
        if not self.is_square:
            raise NotSquare("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix powers are not defined")
        result = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> "Matrix":
        r, c, d = self.rows, self.cols, self.data
        return Matrix(self.field, c, r, [d[i * c + j] for j in range(c) for i in range(r)])

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def star(self) -> "Matrix":
        """Conjugate transpose, the involution of the matrix ring."""
        r, c, d = self.rows, self.cols, self.data
        conj = self.field.conj
        return Matrix(self.field, c, r, [conj(d[i * c + j]) for j in range(c) for i in range(r)])

    @property
    def H(self) -> "Matrix":
        return self.star()

    def rank(self) -> int:
        return rref_rank(self)[1]

    def one(self) -> "Matrix":
        """The identity of the ring this (square) matrix lives in."""
        if not self.is_square:
            raise NotSquare("no ring identity for a non-square matrix")
        return Matrix.identity(self.field, self.rows)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not isinstance(b, Matrix):
        return NotImplemented
    if a.field != b.field:
        raise FieldMismatch(f"{a.field.name} vs {b.field.name}")
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    f = a.field
    dot = f.dot
    n, m, p = a.rows, a.cols, b.cols
    ad, bd = a.data, b.data
    bcols = [bd[j::p] for j in range(p)]
    out = []
    for i in range(n):
        row = ad[i * m:(i + 1) * m]
        out.extend(dot(row, col) for col in bcols)
    return Matrix(f, n, p, out)


def mat_star(a: Matrix) -> Matrix:
    return a.star()


def _rref_in_place(field: FieldSpec, rows: list[list], pivot_cols: int) -> list[int]:
    """Gauss-Jordan on a list of row lists, choosing pivots among the first
    ``pivot_cols`` columns only. Returns the pivot column indices."""
    add, mul, neg, inv, zero = field.add, field.mul, field.neg, field.inv, field.zero
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(pivot_cols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if rows[i][c] != zero), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        s = inv(rows[r][c])
        prow = [mul(s, x) for x in rows[r]]
        rows[r] = prow
        for i in range(nrows):
            if i != r and rows[i][c] != zero:
                fct = neg(rows[i][c])
                rows[i] = [add(x, mul(fct, y)) for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def rref_rank(a: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns of ``a``."""
    rows = a.row_lists()
    pivots = _rref_in_place(a.field, rows, a.cols)
    return Matrix(a.field, a.rows, a.cols, [x for r in rows for x in r]), len(pivots), pivots


def rref_transform(a: Matrix) -> tuple[Matrix, Matrix, list[int]]:
    """Return ``(R, E, pivots)`` with ``E`` invertible and ``E @ a == R`` in RREF."""
    f, m, n = a.field, a.rows, a.cols
    z, o = f.zero, f.one
    rows = [r + [o if i == j else z for j in range(m)] for i, r in enumerate(a.row_lists())]
    pivots = _rref_in_place(f, rows, n)
    R = Matrix(f, m, n, [x for r in rows for x in r[:n]])
    E = Matrix(f, m, m, [x for r in rows for x in r[n:]])
    return R, E, pivots


def rank_factorization(a: Matrix) -> tuple[Matrix, Matrix]:
    """Full-rank factorization ``a = F @ G``.

    ``F`` is made of the pivot columns of ``a`` and ``G`` of the nonzero rows of
    its RREF. For a zero matrix both factors have an empty inner dimension.
    """
    R, r, pivots = rref_rank(a)
    f = a.field
    F = Matrix(f, a.rows, r, [a.raw(i, j) for i in range(a.rows) for j in pivots])
    G = Matrix(f, r, a.cols, R.data[: r * a.cols])
    return F, G


def inverse(a: Matrix) -> Matrix | None:
    """Ordinary two-sided inverse, or None when ``a`` is singular."""
    if not a.is_square:
        raise NotSquare(f"{a.shape} matrix has no two-sided inverse")
    R, E, pivots = rref_transform(a)
    return E if len(pivots) == a.rows else None


def solve_right(b: Matrix, a: Matrix) -> Matrix | None:
    """Some ``X`` with ``b @ X == a``, or None if there is none.

    Free variables are set to zero, so the answer is deterministic.
    """
    if b.field != a.field:
        raise FieldMismatch(f"{b.field.name} vs {a.field.name}")
    if b.rows != a.rows:
        raise DimensionMismatch(f"b has {b.rows} rows but a has {a.rows}")
    f = b.field
    n, k = b.cols, a.cols
    rows = [rb + ra for rb, ra in zip(b.row_lists(), a.row_lists())]
    pivots = _rref_in_place(f, rows, n)
    r = len(pivots)
    zero = f.zero
    for row in rows[r:]:
        if any(x != zero for x in row[n:]):
            return None
    out = [[zero] * k for _ in range(n)]
    for i, c in enumerate(pivots):
        out[c] = rows[i][n:]
    return Matrix(f, n, k, [x for row in out for x in row])


def solve_left(b: Matrix, a: Matrix) -> Matrix | None:
    """Some ``Y`` with ``Y @ b == a``, or None; transposes into :func:`solve_right`."""
    y = solve_right(b.transpose(), a.transpose())
    return None if y is None else y.transpose()


def is_idempotent(p: Matrix) -> bool:
    return p.is_square and p @ p == p


@dataclass(frozen=True)
class BlockDecomposition:
    """The four ``p x q`` blocks of ``a`` for idempotents ``p`` and ``q``."""

    p: Matrix
    q: Matrix
    a11: Matrix
    a12: Matrix
    a21: Matrix
    a22: Matrix

    def reconstruct(self) -> Matrix:
        return self.a11 + self.a12 + self.a21 + self.a22


def block_decompose(p: Matrix, q: Matrix, a: Matrix) -> BlockDecomposition:
    if not is_idempotent(p):
        raise NotIdempotent("p is not a square idempotent")
    if not is_idempotent(q):
        raise NotIdempotent("q is not a square idempotent")
    if p.rows != a.rows or q.rows != a.cols:
        raise DimensionMismatch(f"p {p.shape}, q {q.shape} do not fit a {a.shape}")
    ip = p.one() - p
    iq = q.one() - q
    pa, ipa = p @ a, ip @ a
    return BlockDecomposition(p, q, pa @ q, pa @ iq, ipa @ q, ipa @ iq)


def enumerate_matrices(field: FieldSpec, rows: int, cols: int | None = None) -> Iterator[Matrix]:
    """Every rows x cols matrix over a finite field, each exactly once."""
    cols = rows if cols is None else cols
    elems = list(field.elements())
    for entries in itertools.product(elems, repeat=rows * cols):
        yield Matrix(field, rows, cols, entries)
