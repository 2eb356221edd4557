"""Hosoya triangle entries from the closed form ``H(r, k) = F(k) * F(r - k)``.

The recursive construction lives in :mod:`hosoya.oracle`; nothing here
uses it, so the two can be cross-checked against each other.
"""

from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass

from .errors import CoordinateError
from .fib import TABLE


class GridPoint(namedtuple("GridPoint", "r k")):
    """Row ``r`` and position ``k`` of a triangle entry, ``0 <= k <= r``."""

    __slots__ = ()

    def __new__(cls, r: int, k: int):
        if k < 0 or k > r:
            raise CoordinateError(f"point ({r}, {k}) is outside the triangle")
        return super().__new__(cls, r, k)

    def mirror(self) -> "GridPoint":
        return GridPoint(self.r, self.r - self.k)

    @property
    def x(self) -> float:
        """Horizontal position in the centered layout, in cell units."""
        return self.k - self.r / 2


@dataclass(frozen=True)
class HosoyaEntry:
    point: GridPoint
    value: int


@dataclass(frozen=True)
class TriangleWindow:
    first_row: int
    last_row: int
    rows: list[list[int]]

    def __iter__(self):
        return iter(zip(range(self.first_row, self.last_row + 1), self.rows))


def hosoya(r: int, k: int) -> int:
    """H(r, k) for integer coordinates."""
    if k < 0 or k > r:
        raise CoordinateError(f"point ({r}, {k}) is outside the triangle")
    # both indices are non-negative here, so the raw table can be indexed
    values = TABLE._values
    if r >= len(values):
        TABLE.ensure(2 * r + 1)
        values = TABLE._values
    return values[k] * values[r - k]


def entry(p: GridPoint) -> int:
    return hosoya(p[0], p[1])


def row(r: int) -> list[int]:
    """Row ``r`` as a dense, palindromic list of ``r + 1`` values."""
    if r < 0:
        raise CoordinateError(f"row {r} is negative")
    TABLE.ensure(r + 1)
    f = TABLE
    return [f[k] * f[r - k] for k in range(r + 1)]


def window(first_row: int, last_row: int) -> TriangleWindow:
    if first_row < 0 or last_row < first_row:
        raise CoordinateError(f"bad row range {first_row}..{last_row}")
    return TriangleWindow(first_row, last_row,
                          [row(r) for r in range(first_row, last_row + 1)])


def diagonal(d: int, length: int) -> list[int]:
    """``H(d + t, t)`` for ``t < length``: the Fibonacci numbers scaled by F(d)."""
    if d < 0 or length < 0:
        raise ValueError("diagonal index and length must be non-negative")
    return [hosoya(d + t, t) for t in range(length)]


class ClosedForm:
    """Evaluator backend used by the identity catalog in production.

    :class:`hosoya.oracle.RecursiveTable` exposes the same three methods.
    """

    name = "closed-form"

    H = staticmethod(hosoya)

    @staticmethod
    def F(n: int) -> int:
        values = TABLE._values
        if 0 <= n < len(values):
            return values[n]
        return TABLE[n]

    @staticmethod
    def L(n: int) -> int:
        return TABLE[n - 1] + TABLE[n + 1]


CLOSED_FORM = ClosedForm()
