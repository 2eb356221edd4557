"""Recursion-only construction of the Hosoya triangle.

The table is grown from the four seeds ``H(0,0) = H(1,0) = H(1,1) = 0``,
``H(2,1) = 1`` using

    A:  H(r, k) = H(r-1, k)   + H(r-2, k)      (needs k <= r - 2)
    B:  H(r, k) = H(r-1, k-1) + H(r-2, k-2)    (needs k >= 2)

and never touches the closed form. Where both recursions apply they must
agree, and the build fails loudly if they do not.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CoordinateError, OracleInconsistency
from .triangle import hosoya

SEEDS = {(0, 0): 0, (1, 0): 0, (1, 1): 0, (2, 1): 1}


@dataclass
class RecursiveTable:
    max_row: int
    values: list[list[int]] = field(repr=False)
    overlap_checks: int = 0

    name = "oracle"

    def H(self, r: int, k: int) -> int:
        if k < 0 or k > r:
            raise CoordinateError(f"point ({r}, {k}) is outside the triangle")
        if r > self.max_row:
            raise CoordinateError(f"row {r} is beyond the oracle table (max_row={self.max_row})")
        return self.values[r][k]

    def F(self, n: int) -> int:
        # F(n) = H(n + 1, 1) since F(1) = 1
        m = abs(n)
        value = self.H(m + 1, 1)
        if n < 0 and m % 2 == 0:
            return -value
        return value

    def L(self, n: int) -> int:
        return self.F(n - 1) + self.F(n + 1)

    def row(self, r: int) -> list[int]:
        return list(self.values[r])

    def __len__(self) -> int:
        return sum(len(v) for v in self.values)


def _down_column(rows, r, k):
    # recursion A; defined for k <= r - 2
    return rows[r - 1][k] + rows[r - 2][k] if k <= r - 2 else None


def _down_diagonal(rows, r, k):
    # recursion B; defined for k >= 2
    return rows[r - 1][k - 1] + rows[r - 2][k - 2] if k >= 2 else None


def build(max_row: int, seeds: dict[tuple[int, int], int] | None = None) -> RecursiveTable:
    """Build rows ``0 .. max_row`` from the seeds and the two recursions."""
    if max_row < 2:
        raise ValueError("max_row must be at least 2")
    seeds = SEEDS if seeds is None else seeds
    rows: list[list[int]] = [[seeds[0, 0]], [seeds[1, 0], seeds[1, 1]]]
    checks = 0
    for r in range(2, max_row + 1):
        current: list[int] = []
        rows.append(current)
        for k in range(r + 1):
            a = _down_column(rows, r, k)
            b = _down_diagonal(rows, r, k)
            if a is not None and b is not None:
                checks += 1
                if a != b:
                    raise OracleInconsistency(
                        f"recursions disagree at ({r}, {k}): {a} != {b}")
            value = a if a is not None else b
            if value is None:
                value = seeds[r, k]
            elif (r, k) in seeds and seeds[r, k] != value:
                raise OracleInconsistency(f"seed ({r}, {k}) contradicts the recursion")
            current.append(value)
    return RecursiveTable(max_row, rows[: max_row + 1], checks)


@dataclass
class CrossCheck:
    entries: int
    mismatches: list[tuple[int, int]]

    @property
    def count(self) -> int:
        return len(self.mismatches)


def cross_check(table: RecursiveTable) -> CrossCheck:
    """Compare every table entry with the closed form."""
    mismatches = []
    entries = 0
    for r, values in enumerate(table.values):
        for k, value in enumerate(values):
            entries += 1
            if hosoya(r, k) != value:
                mismatches.append((r, k))
    return CrossCheck(entries, mismatches)
