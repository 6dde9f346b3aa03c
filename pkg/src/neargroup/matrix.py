"""Small dense matrices over an exact scalar type.

Entries are duck-typed: anything supporting +, -, *, / (and right-hand
variants against int) works, so the same code runs over Fraction,
Cyclotomic, or formal symbolic scalars.  Sizes here are tiny (a few dozen
rows at most), so everything is plain lists of lists.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from fractions import Fraction


def _exact(v):
    # int entries would produce floats under /, so promote them.
    return Fraction(v) if isinstance(v, int) else v


class Matrix:
    __slots__ = ("_rows", "_cols", "_data")

    def __init__(self, rows: Sequence[Sequence]) -> None:
        self._data = [list(r) for r in rows]
        self._rows = len(self._data)
        self._cols = len(self._data[0]) if self._data else 0
        if any(len(r) != self._cols for r in self._data):
            raise ValueError("ragged rows")

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return self._rows, self._cols

    def __getitem__(self, key: tuple[int, int]):
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> list:
        return list(self._data[i])

    def col(self, j: int) -> list:
        return [r[j] for r in self._data]

    @classmethod
    def build(cls, rows: int, cols: int, entry: Callable[[int, int], object]) -> Matrix:
        return cls([[entry(i, j) for j in range(cols)] for i in range(rows)])

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> Matrix:
        return cls([[0] * (cols if cols is not None else rows) for _ in range(rows)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> Matrix:
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> Matrix:
        """Matrix sending basis vector j to basis vector perm[j]."""
        n = len(perm)
        return cls([[1 if perm[j] == i else 0 for j in range(n)] for i in range(n)])

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)]
        )

    def __sub__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)]
        )

    def __neg__(self) -> Matrix:
        return Matrix([[-a for a in r] for r in self._data])

    def scale(self, scalar) -> Matrix:
        return Matrix([[scalar * a for a in r] for r in self._data])

    def __matmul__(self, other: Matrix) -> Matrix:
        if self._cols != other._rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        bt = list(zip(*other._data))
        out = []
        for ra in self._data:
            row = []
            for cb in bt:
                acc = 0
                for a, b in zip(ra, cb):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out)

    __mul__ = __matmul__

    def transpose(self) -> Matrix:
        return Matrix(list(zip(*self._data)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return all(
            a == b for ra, rb in zip(self._data, other._data) for a, b in zip(ra, rb)
        )

    __hash__ = None  # unhashable

    def is_zero(self) -> bool:
        return all(not a for r in self._data for a in r)

    def is_identity(self) -> bool:
        if self._rows != self._cols:
            return False
        return all(
            (a == 1 if i == j else not a)
            for i, r in enumerate(self._data)
            for j, a in enumerate(r)
        )

    def det(self):
        """Exact determinant by fraction-free elimination."""
        if self._rows != self._cols:
            raise ValueError("determinant of a non-square matrix")
        n = self._rows
        if n == 0:
            return 1
        m = [[_exact(a) for a in r] for r in self._data]
        sign = 1
        prev = None  # None marks the initial divisor 1
        for k in range(n - 1):
            pivot = next((i for i in range(k, n) if m[i][k]), None)
            if pivot is None:
                return m[0][0] * 0
            if pivot != k:
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                    m[i][j] = num if prev is None else num / prev
                m[i][k] = 0
            prev = m[k][k]
        return m[n - 1][n - 1] * sign

    def inverse(self) -> Matrix:
        if self._rows != self._cols:
            raise ValueError("inverse of a non-square matrix")
        n = self._rows
        aug = [
            [_exact(a) for a in r] + [1 if i == j else 0 for j in range(n)]
            for i, r in enumerate(self._data)
        ]
        for c in range(n):
            pivot = next((i for i in range(c, n) if aug[i][c]), None)
            if pivot is None:
                raise ZeroDivisionError("matrix is singular")
            aug[c], aug[pivot] = aug[pivot], aug[c]
            inv = aug[c][c]
            aug[c] = [v / inv for v in aug[c]]
            for i in range(n):
                if i != c and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [v - f * w for v, w in zip(aug[i], aug[c])]
        return Matrix([r[n:] for r in aug])

    def kronecker(self, other: Matrix) -> Matrix:
        """Tensor product with row/column pairs ordered left-factor-major."""
        out = []
        for ra in self._data:
            for rb in other._data:
                out.append([a * b for a in ra for b in rb])
        return Matrix(out)

    def direct_sum(self, other: Matrix) -> Matrix:
        out = []
        for r in self._data:
            out.append(list(r) + [0] * other._cols)
        for r in other._data:
            out.append([0] * self._cols + list(r))
        return Matrix(out)

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(a) for a in r) + "]" for r in self._data)

    def __repr__(self) -> str:
        return f"Matrix({self._data!r})"
