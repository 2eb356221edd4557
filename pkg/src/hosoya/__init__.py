"""Exact computations on the Hosoya triangle and its Fibonacci identities."""

from .errors import CoordinateError, DomainError, HosoyaError, OracleInconsistency
from .fib import FibTable, fib, lucas
from .identities import CATALOG, sweep, verify
from .triangle import GridPoint, diagonal, entry, hosoya, row, window

__all__ = [
    "CATALOG", "CoordinateError", "DomainError", "FibTable", "GridPoint", "HosoyaError",
    "OracleInconsistency", "diagonal", "entry", "fib", "hosoya", "lucas", "row", "sweep",
    "verify", "window",
]
__version__ = "0.1.0"
