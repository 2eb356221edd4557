"""Exact Fibonacci and Lucas numbers for any signed index.

Negative indices follow the negafibonacci rule ``F(-n) = (-1)**(n+1) * F(n)``
and the matching Lucas rule ``L(-n) = (-1)**n * L(n)``.

    >>> fib(10), fib(-4)
    (55, -3)
    >>> lucas(5), lucas(-2)
    (11, 3)
"""

from __future__ import annotations

import threading


def _fib_pair(n: int) -> tuple[int, int]:
    """Return ``(F(n), F(n+1))`` for ``n >= 0`` by fast doubling."""
    a, b = 0, 1
    for bit in bin(n)[2:]:
        # F(2m) = F(m) * (2F(m+1) - F(m)),  F(2m+1) = F(m)^2 + F(m+1)^2
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def _negafib_sign(n: int) -> int:
    # sign applied to F(|n|) when n < 0
    return 1 if n % 2 else -1


def fib(n: int) -> int:
    """Return the Fibonacci number F(n); ``n`` may be negative."""
    if n >= 0:
        return _fib_pair(n)[0]
    return _negafib_sign(n) * _fib_pair(-n)[0]


def lucas(n: int) -> int:
    """Return the Lucas number L(n) with L(0) = 2, L(1) = 1."""
    m = abs(n)
    f, g = _fib_pair(m)
    value = 2 * g - f
    if n < 0 and m % 2:
        return -value
    return value


class FibTable:
    """Append-only ascending table of Fibonacci numbers.

    Meant for dense sweeps that touch contiguous index ranges. Reads never
    lock; growth is serialized so concurrent readers only ever observe a
    fully built prefix.
    """

    def __init__(self, size: int = 64):
        self._values = [0, 1]
        self._lock = threading.Lock()
        self.ensure(size)

    def __len__(self) -> int:
        return len(self._values)

    def ensure(self, size: int) -> None:
        """Grow the table so that indices ``0 .. size-1`` are available."""
        if size <= len(self._values):
            return
        with self._lock:
            values = self._values
            a, b = values[-2], values[-1]
            while len(values) < size:
                a, b = b, a + b
                values.append(b)

    def __getitem__(self, n: int) -> int:
        m = -n if n < 0 else n
        values = self._values
        if m >= len(values):
            self.ensure(max(m + 1, 2 * len(values)))
            values = self._values
        value = values[m]
        if n < 0 and not m % 2:
            return -value
        return value

    def fib(self, n: int) -> int:
        return self[n]

    def lucas(self, n: int) -> int:
        return self[n - 1] + self[n + 1]

    def values(self, start: int, stop: int) -> list[int]:
        """F(start), ..., F(stop - 1) as a list."""
        return [self[n] for n in range(start, stop)]


# Shared by the triangle and the identity catalog.
TABLE = FibTable(512)
