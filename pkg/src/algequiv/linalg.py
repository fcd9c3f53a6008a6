"""Dense matrices over GF(p).

Entries are stored as lists of reduced Python ints.  Products are
accumulated as unbounded ints and reduced once per dot product, which is
both exact and the fastest pure-Python formulation.
"""

from __future__ import annotations

from operator import mul
from typing import Iterable, Sequence

from .errors import DimensionMismatch, ModulusMismatch, Singular
from .field import FieldElement, PrimeModulus, inv_mod

__all__ = [
    "FieldMatrix",
    "identity",
    "zeros",
    "mat_mul",
    "transpose",
    "submatrix",
    "mat_inverse",
    "determinant",
    "all_column_deleted_minors",
    "congruence",
    "det_rows",
    "column_deleted_minors_rows",
]


class FieldMatrix:
    """An immutable rows x cols matrix of residues mod ``field.p``."""

    __slots__ = ("field", "_rows", "_ncols")

    def __init__(self, field: PrimeModulus, rows: Iterable[Iterable], ncols: int | None = None):
        p = field.p
        data = []
        for row in rows:
            out = []
            for x in row:
                if isinstance(x, FieldElement):
                    if x.modulus.p != p:
                        raise ModulusMismatch(f"entry mod {x.modulus.p} in matrix mod {p}")
                    out.append(x.residue)
                else:
                    out.append(int(x) % p)
            data.append(out)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise DimensionMismatch("ragged rows")
        self.field = field
        self._rows = data
        self._ncols = ncols

    @classmethod
    def _raw(cls, field: PrimeModulus, rows: list, ncols: int) -> "FieldMatrix":
        # trusted constructor: rows already reduced and owned by the new matrix
        obj = cls.__new__(cls)
        obj.field = field
        obj._rows = rows
        obj._ncols = ncols
        return obj

    @property
    def shape(self) -> tuple[int, int]:
        return len(self._rows), self._ncols

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def T(self) -> "FieldMatrix":
        return transpose(self)

    def __getitem__(self, idx) -> FieldElement:
        i, j = idx
        return FieldElement(self._rows[i][j], self.field)

    def value(self, i: int, j: int) -> int:
        return self._rows[i][j]

    def row(self, i: int) -> tuple:
        return tuple(self._rows[i])

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return (
            self.field.p == other.field.p
            and self.shape == other.shape
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.field.p, tuple(map(tuple, self._rows))))

    def is_symmetric(self) -> bool:
        n, m = self.shape
        return n == m and all(
            self._rows[i][j] == self._rows[j][i] for i in range(n) for j in range(i)
        )

    def __repr__(self):
        return f"FieldMatrix(mod {self.field}, {self._rows!r})"


def _check_field(a: FieldMatrix, b: FieldMatrix):
    if a.field.p != b.field.p:
        raise ModulusMismatch(f"matrices mod {a.field.p} and mod {b.field.p}")


def identity(n: int, m: PrimeModulus) -> FieldMatrix:
    return FieldMatrix._raw(m, [[int(i == j) for j in range(n)] for i in range(n)], n)


def zeros(rows: int, cols: int, m: PrimeModulus) -> FieldMatrix:
    return FieldMatrix._raw(m, [[0] * cols for _ in range(rows)], cols)


def mat_mul(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    _check_field(a, b)
    if a.ncols != b.nrows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    p = a.field.p
    cols = list(zip(*b._rows)) if b.nrows else [()] * b.ncols
    rows = [[sum(map(mul, r, c)) % p for c in cols] for r in a._rows]
    return FieldMatrix._raw(a.field, rows, b.ncols)


def transpose(a: FieldMatrix) -> FieldMatrix:
    rows = [list(c) for c in zip(*a._rows)] if a.nrows else [[] for _ in range(a.ncols)]
    return FieldMatrix._raw(a.field, rows, a.nrows)


def submatrix(a: FieldMatrix, rowset: Sequence[int], colset: Sequence[int]) -> FieldMatrix:
    """Rows and columns picked in the given order; duplicates are rejected."""
    for name, idx, bound in (("row", rowset, a.nrows), ("column", colset, a.ncols)):
        if len(set(idx)) != len(idx):
            raise IndexError(f"duplicate {name} index in {list(idx)}")
        for i in idx:
            if not 0 <= i < bound:
                raise IndexError(f"{name} index {i} out of range for size {bound}")
    rows = [[a._rows[i][j] for j in colset] for i in rowset]
    return FieldMatrix._raw(a.field, rows, len(colset))


def congruence(b: FieldMatrix, s: FieldMatrix) -> FieldMatrix:
    """Return B^T S B."""
    _check_field(b, s)
    n = s.nrows
    if s.ncols != n or b.nrows != n:
        raise DimensionMismatch(f"congruence needs square S and B with {n} rows")
    return mat_mul(transpose(b), mat_mul(s, b))


def det_rows(rows: list[list[int]], p: int) -> int:
    """Determinant of a square list-of-lists; ``rows`` is consumed."""
    n = len(rows)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        prow = rows[c]
        pv = prow[c]
        det = det * pv % p
        inv = inv_mod(pv, p)
        for r in range(c + 1, n):
            row = rows[r]
            f = row[c]
            if f:
                f = f * inv % p
                for j in range(c + 1, n):
                    row[j] = (row[j] - f * prow[j]) % p
    return det % p


def determinant(a: FieldMatrix) -> FieldElement:
    if a.nrows != a.ncols:
        raise DimensionMismatch(f"determinant of non-square {a.shape} matrix")
    return FieldElement(det_rows(a.tolist(), a.field.p), a.field)


def mat_inverse(a: FieldMatrix) -> FieldMatrix:
    """Gauss-Jordan inverse; raises :class:`Singular` when det(A) = 0."""
    n = a.nrows
    if a.ncols != n:
        raise DimensionMismatch(f"inverse of non-square {a.shape} matrix")
    p = a.field.p
    aug = [r + [int(i == j) for j in range(n)] for i, r in enumerate(a.tolist())]
    width = 2 * n
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c]), None)
        if piv is None:
            raise Singular("matrix is singular over GF(%d)" % p)
        aug[c], aug[piv] = aug[piv], aug[c]
        prow = aug[c]
        inv = inv_mod(prow[c], p)
        for j in range(c, width):
            prow[j] = prow[j] * inv % p
        for r in range(n):
            if r == c:
                continue
            row = aug[r]
            f = row[c]
            if f:
                for j in range(c, width):
                    row[j] = (row[j] - f * prow[j]) % p
    return FieldMatrix._raw(a.field, [row[n:] for row in aug], n)


def column_deleted_minors_rows(rows: list[list[int]], p: int) -> list[int]:
    """All k+1 maximal minors of a k x (k+1) list-of-lists; ``rows`` is consumed.

    Entry j is the determinant with column j deleted.  One forward
    elimination brings the first k columns to upper-triangular form U
    (row operations scale every maximal minor by the same sign).  Then

        minor_j = sign * U[0,0]...U[j-1,j-1] * det(U[j:, j+1:])

    and the trailing blocks det(U[j:, j+1:]) are obtained right to left,
    each from the previous one by eliminating a single new row against the
    already reduced rows below it (the left-right mirrored elimination).
    That second phase is O(k^2); if it meets a zero pivot we fall back to
    direct determinants for the remaining blocks.
    """
    k = len(rows)
    if any(len(r) != k + 1 for r in rows):
        raise DimensionMismatch("expected a k x (k+1) matrix")
    if k == 0:
        return [1]

    sign = 1
    for c in range(k):
        piv = next((r for r in range(c, k) if rows[r][c]), None)
        if piv is None:
            # first k columns singular: no triangular shortcut; the swaps so far
            # flipped every minor by ``sign``
            return [sign * v % p for v in _column_deleted_minors_direct(rows, p)]
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        prow = rows[c]
        inv = inv_mod(prow[c], p)
        for r in range(c + 1, k):
            row = rows[r]
            f = row[c]
            if f:
                f = f * inv % p
                row[c] = 0
                for j in range(c + 1, k + 1):
                    row[j] = (row[j] - f * prow[j]) % p

    prefix = [1] * (k + 1)
    for i in range(k):
        prefix[i + 1] = prefix[i] * rows[i][i] % p

    out = [0] * (k + 1)
    out[k] = sign * prefix[k] % p

    # x[r]: pivot of reduced row r in column r+1; the reduced row r has
    # nonzeros only in columns r (the original U[r, r]) and r+1.
    x = [0] * k
    x_inv = [0] * k
    block_det = 1  # det(U[j+1:, j+2:]), empty block for j = k-1
    for j in range(k - 1, -1, -1):
        t = rows[j]
        # sweep columns k .. j+2, each owned by reduced row c-1
        val = t[k]
        for c in range(k, j + 1, -1):
            if val:
                f = val * x_inv[c - 1] % p
                val = (t[c - 1] - f * rows[c - 1][c - 1]) % p
            else:
                val = t[c - 1]
        x[j] = val
        block_det = block_det * val % p
        out[j] = sign * prefix[j] * block_det % p
        if val == 0:
            for jj in range(j - 1, -1, -1):
                block = [list(r[jj + 1:]) for r in rows[jj:]]
                out[jj] = sign * prefix[jj] * det_rows(block, p) % p
            break
        x_inv[j] = inv_mod(val, p)
    return out


def _column_deleted_minors_direct(rows: list[list[int]], p: int) -> list[int]:
    k = len(rows)
    return [
        det_rows([r[:j] + r[j + 1:] for r in rows], p) for j in range(k + 1)
    ]


def all_column_deleted_minors(m: FieldMatrix) -> list[FieldElement]:
    """Determinants of ``m`` with column j deleted, for j = 0..k."""
    k = m.nrows
    if m.ncols != k + 1:
        raise DimensionMismatch(f"expected a k x (k+1) matrix, got {m.shape}")
    vals = column_deleted_minors_rows(m.tolist(), m.field.p)
    return [FieldElement(v, m.field) for v in vals]
