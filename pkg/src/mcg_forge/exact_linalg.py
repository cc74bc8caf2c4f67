"""Exact rational dense linear algebra.

Everything here works over :class:`fractions.Fraction`; no floating point is
ever involved.  Rank is computed by fraction-free (Bareiss) elimination on an
integer rescaling of the matrix, which keeps entry growth polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence


class ShapeError(ValueError):
    """Raised when matrix shapes are incompatible."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not allowed")
    return Fraction(x)


@dataclass(frozen=True)
class ExactMatrix:
    """Dense ``rows x cols`` matrix of rationals, stored row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, cols or 0, ())
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, tuple(_frac(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], dim: int) -> "ExactMatrix":
        if not columns:
            return cls(dim, 0, ())
        if any(len(c) != dim for c in columns):
            raise ShapeError("column length does not match ambient dimension")
        return cls.from_rows([[c[i] for c in columns] for i in range(dim)])

    # -- access --------------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def column(self, j: int) -> list[Fraction]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.entries)

    # -- arithmetic ----------------------------------------------------------

    def _check_same(self, other: "ExactMatrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError(
                f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        return ExactMatrix(self.rows, self.cols,
                           tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        return ExactMatrix(self.rows, self.cols,
                           tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "ExactMatrix":
        c = _frac(c)
        return ExactMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        if self.is_integral() and other.is_integral():
            # integer fast path; results are converted back once
            ai = [int(x) for x in a]
            cols = [[int(b[k * p + j]) for k in range(m)] for j in range(p)]
            out = []
            for i in range(n):
                ri = ai[i * m:(i + 1) * m]
                for col in cols:
                    out.append(Fraction(sum(x * y for x, y in zip(ri, col) if x)))
            return ExactMatrix(n, p, tuple(out))
        out = []
        for i in range(n):
            ri = a[i * m:(i + 1) * m]
            for j in range(p):
                s = Fraction(0)
                for k in range(m):
                    x = ri[k]
                    if x:
                        y = b[k * p + j]
                        if y:
                            s += x * y
                out.append(s)
        return ExactMatrix(n, p, tuple(out))

    def __pow__(self, k: int) -> "ExactMatrix":
        if not self.is_square or k < 0:
            raise ShapeError("power needs a square matrix and k >= 0")
        result = ExactMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows,
                           tuple(self.entries[i * self.cols + j]
                                 for j in range(self.cols) for i in range(self.rows)))

    T = property(transpose)

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.rows != other.rows:
            raise ShapeError("hstack needs equal row counts")
        return ExactMatrix.from_rows([list(self.row(i)) + list(other.row(i))
                                      for i in range(self.rows)]) if self.rows else \
            ExactMatrix(0, self.cols + other.cols, ())

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[x.numerator, x.denominator] for x in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ExactMatrix":
        try:
            rows, cols = int(obj["rows"]), int(obj["cols"])
            entries = tuple(Fraction(int(n), int(d)) for n, d in obj["entries"])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed matrix JSON: {exc}") from exc
        return cls(rows, cols, entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"


def _integer_rows(A: ExactMatrix) -> list[list[int]]:
    out = []
    for i in range(A.rows):
        row = A.row(i)
        m = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * m) for x in row])
    return out


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination (mutates ``rows``)."""
    if not rows or not rows[0]:
        return 0
    n, m = len(rows), len(rows[0])
    prev = 1
    r = 0
    for c in range(m):
        if r == n:
            break
        piv = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, n):
            ri = rows[i]
            f = ri[c]
            for j in range(c + 1, m):
                # exact division is guaranteed by Sylvester's identity
                ri[j] = (p * ri[j] - f * rows[r][j]) // prev
            ri[c] = 0
        prev = p
        r += 1
    return r


def rank(A: ExactMatrix) -> int:
    return bareiss_rank(_integer_rows(A))


def kernel_dim(A: ExactMatrix) -> int:
    return A.cols - rank(A)


def _hconcat(mats: Sequence[ExactMatrix]) -> ExactMatrix:
    d = mats[0].rows
    rows = [[x for M in mats for x in M.row(i)] for i in range(d)]
    return ExactMatrix(d, sum(M.cols for M in mats), tuple(x for r in rows for x in r))


def range_sum_dim(mats: Sequence[ExactMatrix]) -> int:
    """Dimension of the sum of the column spaces of ``mats``."""
    if not mats:
        return 0
    d = mats[0].rows
    if any(M.rows != d or M.cols != mats[0].cols for M in mats):
        raise ShapeError("range_sum_dim needs matrices of one common shape")
    return rank(_hconcat(mats))


def span_dim(vectors: Sequence[Sequence], dim: int) -> int:
    if not vectors:
        return 0
    return rank(ExactMatrix.from_columns(vectors, dim))


def subspace_intersection_dim(u_span: Sequence[Sequence], v_span: Sequence[Sequence],
                              dim: int | None = None) -> int:
    """``dim(U ∩ V)`` for ``U, V`` given by spanning vectors, via dim U + dim V - dim(U+V)."""
    lengths = {len(v) for v in list(u_span) + list(v_span)}
    if dim is None:
        if len(lengths) != 1:
            raise ShapeError("cannot infer a common ambient dimension")
        dim = lengths.pop()
    elif lengths - {dim}:
        raise ShapeError("spanning vectors of the wrong length")
    du = span_dim(u_span, dim)
    dv = span_dim(v_span, dim)
    duv = span_dim(list(u_span) + list(v_span), dim)
    return du + dv - duv


def jordan_flag(A: ExactMatrix, lam=0) -> list[int]:
    """Dimensions ``dim ker (A - lam)^k`` for k = 0, 1, ... until they stabilize."""
    if not A.is_square:
        raise ShapeError("jordan_flag needs a square matrix")
    n = A.rows
    B = A - ExactMatrix.identity(n).scale(_frac(lam))
    dims = [0]
    P = ExactMatrix.identity(n)
    for _ in range(n):
        P = P @ B
        k = kernel_dim(P)
        if k == dims[-1]:
            break
        dims.append(k)
    return dims


def is_square_zero(A: ExactMatrix) -> bool:
    if not A.is_square:
        raise ShapeError("is_square_zero needs a square matrix")
    return (A @ A).is_zero()


def det(A: ExactMatrix) -> Fraction:
    """Determinant by fraction-free elimination."""
    if not A.is_square:
        raise ShapeError("det needs a square matrix")
    n = A.rows
    if n == 0:
        return Fraction(1)
    rows = [list(A.row(i)) for i in range(n)]
    sign = 1
    prev = Fraction(1)
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        p = rows[c][c]
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                rows[i][j] = (p * rows[i][j] - rows[i][c] * rows[c][j]) / prev
            rows[i][c] = Fraction(0)
        prev = p
    return sign * rows[n - 1][n - 1]


def matrices_from_blocks(blocks: Iterable[ExactMatrix]) -> ExactMatrix:
    """Block-diagonal matrix."""
    blocks = list(blocks)
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    rows = [[Fraction(0)] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                rows[r0 + i][c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return ExactMatrix(n, m, tuple(x for r in rows for x in r))
