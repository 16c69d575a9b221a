"""Exact rational square matrices.

A :class:`RationalMatrix` is stored as a grid of Python integers together
with one positive common denominator, kept in lowest terms.  Products then
reduce to big-integer arithmetic, which keeps repeated powering cheap.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from operator import mul
from typing import Iterable, Sequence


class MatrixFormatError(ValueError):
    """Raised for malformed matrix documents or non-square inputs."""


class RationalMatrix:
    __slots__ = ("n", "_num", "_den")

    def __init__(self, num: Sequence[Sequence[int]], den: int = 1):
        n = len(num)
        rows = tuple(tuple(int(x) for x in row) for row in num)
        if any(len(row) != n for row in rows):
            raise MatrixFormatError("matrix is not square")
        if den <= 0:
            raise MatrixFormatError("denominator must be positive")
        g = 1 if den == 1 else reduce(gcd, (x for row in rows for x in row), den)
        if g > 1:
            rows = tuple(tuple(x // g for x in row) for row in rows)
            den //= g
        self.n = n
        self._num = rows
        self._den = den

    @classmethod
    def from_integers(cls, rows: Sequence[Sequence[int]]) -> RationalMatrix:
        return cls(rows, 1)

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence[Fraction | int | str]]) -> RationalMatrix:
        fr = [[Fraction(x) for x in row] for row in rows]
        den = reduce(lcm, (x.denominator for row in fr for x in row), 1)
        return cls([[x.numerator * (den // x.denominator) for x in row] for row in fr], den)

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> RationalMatrix:
        return cls([[0] * n for _ in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return Fraction(self._num[i][j], self._den)

    def rows(self) -> list[list[Fraction]]:
        return [[Fraction(x, self._den) for x in row] for row in self._num]

    def integer_rows(self) -> tuple[tuple[int, ...], ...]:
        """Entries as ints; only valid when every entry is integral."""
        if self._den != 1:
            raise ValueError("matrix has non-integral entries")
        return self._num

    def is_symmetric(self) -> bool:
        return all(self._num[i][j] == self._num[j][i] for i in range(self.n) for j in range(i))

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(list(zip(*self._num)), self._den)

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other._num))
        prod = [[sum(map(mul, row, col)) for col in cols] for row in self._num]
        return RationalMatrix(prod, self._den * other._den)

    def __neg__(self) -> RationalMatrix:
        return RationalMatrix([[-x for x in row] for row in self._num], self._den)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((self._num, self._den))

    def __repr__(self):
        return f"RationalMatrix({[[str(x) for x in row] for row in self.rows()]})"


def entry_sum(a: RationalMatrix) -> Fraction:
    return Fraction(sum(sum(row) for row in a._num), a._den)


def row_sums(a: RationalMatrix) -> tuple[Fraction, ...]:
    return tuple(Fraction(sum(row), a._den) for row in a._num)


def col_sums(a: RationalMatrix) -> tuple[Fraction, ...]:
    return tuple(Fraction(sum(col), a._den) for col in zip(*a._num))


def power(a: RationalMatrix, p: int) -> RationalMatrix:
    """``a**p`` by repeated squaring; ``power(a, 0)`` is the identity."""
    if p < 0:
        raise ValueError("exponent must be nonnegative")
    result = RationalMatrix.identity(a.n)
    base = a
    while p:
        if p & 1:
            result = result @ base
        p >>= 1
        if p:
            base = base @ base
    return result


def is_sum_symmetric(a: RationalMatrix) -> bool:
    return row_sums(a) == col_sums(a)


_RATIONAL = re.compile(r"-?\d+(/\d+)?")


def parse_rational(token: str) -> Fraction:
    """Parse ``p``, ``-p`` or ``p/q`` (decimal digits, ``q > 0``)."""
    if not _RATIONAL.fullmatch(token):
        raise MatrixFormatError(f"bad rational {token!r}")
    if "/" in token:
        p, q = token.split("/")
        if int(q) == 0:
            raise MatrixFormatError(f"zero denominator in {token!r}")
        return Fraction(int(p), int(q))
    return Fraction(int(token))


def format_rational(x: Fraction | int) -> str:
    """Reduced ``p/q`` form; integers render without a denominator."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_matrix(text: str) -> RationalMatrix:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MatrixFormatError("empty document")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "matrix" or not header[1].isdigit():
        raise MatrixFormatError(f"bad header {lines[0]!r}")
    n = int(header[1])
    if len(lines) - 1 != n:
        raise MatrixFormatError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        tokens = line.split()
        if len(tokens) != n:
            raise MatrixFormatError(f"row {line!r} does not have {n} entries")
        rows.append([parse_rational(t) for t in tokens])
    return RationalMatrix.from_entries(rows)


def format_matrix(a: RationalMatrix) -> str:
    lines = [f"matrix {a.n}"]
    lines.extend(" ".join(format_rational(x) for x in row) for row in a.rows())
    return "\n".join(lines) + "\n"


def dot(xs: Iterable[Fraction], ys: Iterable[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(xs, ys, strict=True)), Fraction(0))
