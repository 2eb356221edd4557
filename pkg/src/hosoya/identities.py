"""Catalog of Hosoya-triangle identities with exact verification and sweeps.

Each identity is a chain of members that must all be equal. Members are
computed through an *evaluator* exposing ``H(r, k)``, ``F(n)`` and
``L(n)``; the production evaluator is :data:`hosoya.triangle.CLOSED_FORM`
and :class:`hosoya.oracle.RecursiveTable` can be swapped in to recheck
any identity against the recursion-built table.

Rows whose published statement does not survive exact evaluation carry
``status == "corrected"``. For those rows the verified chain is the
corrected one and the published chain is kept alongside as ``paper``, so
each divergence is reported with a concrete witness instead of being
patched over silently.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Mapping, Sequence

from .errors import DomainError
from .geometry import (
    braid_coords,
    hockey_stick_coords,
    long_zigzag_coords,
    zigzag_6k5_coords,
)
from .reports import IdentityReport, SweepReport
from .triangle import CLOSED_FORM

Params = dict[str, Any]
Chain = Callable[[Any, Params], list]

_SAFE = {"__builtins__": {}, "min": min, "max": max, "abs": abs}


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


@dataclass
class Identity:
    id: str
    params: tuple[str, ...]
    status: str
    claim: str
    anchor: str
    domain: tuple[str, ...]
    chain: Chain
    grid: dict[str, str]
    paper: Chain | None = None
    paper_claim: str | None = None
    paper_domain: tuple[str, ...] | None = None
    paper_grid: dict[str, str] | None = None
    defaults: dict[str, Any] = field(default_factory=dict)
    _compiled: dict = field(default_factory=dict, init=False, repr=False)

    def constraints(self, paper_form: bool = False):
        key = bool(paper_form)
        if key not in self._compiled:
            exprs = self.paper_domain if paper_form and self.paper_domain is not None else self.domain
            self._compiled[key] = [(e, compile(e, f"<{self.id}>", "eval")) for e in exprs]
        return self._compiled[key]

    def predicate(self, paper_form: bool = False) -> Callable[..., bool]:
        """All domain constraints fused into one keyword-argument function."""
        key = ("fused", bool(paper_form))
        if key not in self._compiled:
            exprs = [text for text, _ in self.constraints(paper_form)]
            body = " and ".join(f"({e})" for e in exprs) or "True"
            args = ", ".join(self.params)
            self._compiled[key] = eval(f"lambda {args}: {body}", dict(_SAFE))
        return self._compiled[key]

    def violated(self, params: Params, paper_form: bool = False) -> str | None:
        """The first violated domain constraint, or ``None``."""
        for text, code in self.constraints(paper_form):
            if not eval(code, _SAFE, params):
                return text
        return None

    def complete(self, params: Mapping[str, Any]) -> Params:
        missing = [p for p in self.params if p not in params and p not in self.defaults]
        if missing:
            raise DomainError(self.id, "missing parameter(s): " + ", ".join(missing), params)
        unknown = [p for p in params if p not in self.params]
        if unknown:
            raise DomainError(self.id, "unknown parameter(s): " + ", ".join(unknown), params)
        full = dict(self.defaults)
        full.update(params)
        return full


# -- chains ---------------------------------------------------------------------

def _rung_sum(ev, p):
    k, j = p["k"], p["j"]
    return [ev.H(k, j) + ev.H(k + 2, j + 1), ev.F(k + 1)]


def _rect_diff(ev, k, j, i, r):
    return ev.H(k + 2 * r, j + r) - ev.H(k + 2 * r, j + i + r)


def _rect_shift(ev, p):
    k, j, i, r = p["k"], p["j"], p["i"], p["r"]
    return [_rect_diff(ev, k, j, i, 0), _sign(r) * _rect_diff(ev, k, j, i, r)]


def _rect_shift_paper(ev, p):
    k, j, i, r = p["k"], p["j"], p["i"], p["r"]
    return [_rect_diff(ev, k, j, i, 0), _sign(r + 1) * _rect_diff(ev, k, j, i, r)]


def _rect_closed(ev, p):
    k, j, i = p["k"], p["j"], p["i"]
    return [_rect_diff(ev, k, j, i, 0), _sign(j + 1) * ev.H(k - 2 * j, i)]


def _rect_closed_paper(ev, p):
    k, j, i, r = p["k"], p["j"], p["i"], p["r"]
    s = _sign(r + 1)
    return [_rect_diff(ev, k, j, i, 0), s * _rect_diff(ev, k, j, i, r), s * ev.H(k - 2 * j, i)]


def _alt_rung_abs(ev, p):
    k, j, r, n = p["k"], p["j"], p["r"], p["n"]
    top = sum(_sign(t) * ev.H(k, j + t) for t in range(2 * n))
    low = sum(_sign(t) * ev.H(k + 2 * r, j + t + r) for t in range(2 * n))
    return [abs(top), abs(low)]


def _even_rung_sum(ev, p):
    k, j, m, n = p["k"], p["j"], p["m"], p["n"]
    H = ev.H
    return [sum(H(k + 2 * t, j + t) for t in range(2 * n)),
            sum(H(k + 2 * t, j + m + t) for t in range(2 * n))]


def _odd_run_length(ev, p):
    k, j, n, i = p["k"], p["j"], p["n"], p["i"]
    H = ev.H
    return [H(k + 2 * i, j + i) - H(k, j),
            H(k + 2 * i, j + n + i) - H(k, j + n),
            H(k + 2 * i, i)]


def _column_diff(ev, p):
    r, k, j = p["r"], p["k"], p["j"]
    H = ev.H
    return [H(r + k, j) - H(r, j), ev.F(j) * (H(r + k - j + 1, 1) - H(r - j + 1, 1))]


def _diagonal_sum(ev, p):
    k, j, m = p["k"], p["j"], p["m"]
    H = ev.H
    return [sum(H(k + i, j + i) for i in range(m + 1)),
            ev.F(k - j) * sum(H(j + i + 1, 1) for i in range(m + 1))]


def _cassini(ev, p):
    k = p["k"]
    return [ev.H(2 * k, k) - ev.H(2 * k, k - 1), _sign(k - 1)]


def _catalan(ev, p):
    k, j = p["k"], p["j"]
    return [ev.H(2 * k, k) - ev.H(2 * k, k - j), _sign(k - j) * ev.H(2 * j, j)]


def _docagne(ev, p):
    k, j = p["k"], p["j"]
    return [ev.H(k + j + 1, k) - ev.H(k + j + 1, j), _sign(j) * ev.H(k - j + 1, k - j)]


def _johnson(ev, p):
    k, j, r, i, l = p["k"], p["j"], p["r"], p["i"], p["l"]
    H = ev.H
    return [H(k + j, j) - H(r + i, i),
            _sign(l) * (H(k + j - 2 * l, j - l) - H(r + i - 2 * l, i - l)),
            _sign(i) * H(k + j - 2 * i, j - i)]


def _zigzag_parallel(ev, p):
    a, b, j = p["a"], p["b"], p["j"]
    F, s = ev.F, _sign(j)
    return [F(a) * (F(b + j) + s * F(b - j)),
            F(b) * (F(a + j) + s * F(a - j)),
            F(a) * F(b) * ev.L(j)]


def _zigzag_parallel_paper(ev, p):
    a, b, j = p["a"], p["b"], p["j"]
    F = ev.F
    return [F(a) * (F(b - j) - F(b + j)), F(b) * (F(a - j) - F(a + j))]


def _long_zigzag_alt(ev, p):
    coords = long_zigzag_coords(p["r"], p["k"], p["n"], p["first"])
    H = ev.H
    vals = [H(r, k) for r, k in coords]
    # vals[1::2] are p_2, p_4, ..., p_{n-1}
    return [sum(vals[1::2]), vals[-1] - vals[0]]


def column_sum_closed(s: int, k: int, F=CLOSED_FORM.F) -> int:
    """Closed form of ``sum_{j<2k} F(a+j) F(c+j)`` where ``s = a + c``."""
    ne = s // 2
    if s % 2:
        return F(ne + 2 * k) ** 2 - F(ne) ** 2
    return F(ne + 2 * k) * F(ne + 2 * k - 1) - F(ne) * F(ne - 1)


def column_sum_paper(a: int, b: int, k: int, F=CLOSED_FORM.F) -> int:
    ne = (a + b) // 2
    if (a + b) % 2:
        return F(k + ne) ** 2 - F(ne) ** 2
    return F(ne + k) * F(ne + k - 1) - F(ne) * F(ne - 1)


def _column_sums(ev, p):
    a, b, c, d, k = p["a"], p["b"], p["c"], p["d"], p["k"]
    F = ev.F
    return (sum(F(a + j) * F(c + j) for j in range(2 * k)),
            sum(F(b + j) * F(d + j) for j in range(2 * k)))


def _zigzag_column_sum(ev, p):
    left, right = _column_sums(ev, p)
    return [left, right, column_sum_closed(p["a"] + p["c"], p["k"], ev.F)]


def _zigzag_column_sum_paper(ev, p):
    left, right = _column_sums(ev, p)
    return [left, right, column_sum_paper(p["a"], p["b"], p["k"], ev.F)]


def _zigzag_balance(ev, p):
    H = ev.H
    left = right = 0
    for role, (r, k) in zigzag_6k5_coords(p["r"], p["c"], p["k"]):
        v = H(r, k)
        if role in ("p1", "p2", "left"):
            left += v
        elif role in ("p3", "p4", "right"):
            right += v
        else:  # p5 and the middle column belong to both zigzags
            left += v
            right += v
    return [left, right]


def hockey_stick_case(k: int, n: int, side: str) -> int:
    """Which of the five hockey-stick cases ``(k, n, side)`` falls under."""
    if k == 2:
        return 5
    even = n % 2 == 0
    if side == "left":
        return 1 if even else 3
    return 2 if even else 4


def _hockey_stick(ev, p):
    k, n, side = p["k"], p["n"], p["side"]
    H = ev.H
    shaft, (_, (br, bk)) = hockey_stick_coords(k, n)
    if side == "right":
        shaft = [(r, r - c) for r, c in shaft]
        bk = br - bk
    total = sum(H(r, c) for r, c in shaft)
    if k == 2:
        return [total, H(br, min(bk, br - bk)), H(br, max(bk, br - bk))]
    return [total, H(br, bk)]


def _braid_signed(ev, p):
    H = ev.H
    sides = {"left": 0, "right": 0}
    for role, (r, k) in braid_coords(p["n"], p["m"], p["l"]):
        side = role.rstrip("+-")
        sides[side] += -H(r, k) if role.endswith("-") else H(r, k)
    return [sides["left"], sides["right"]]


def _braid_term_sum(ev, m, l):
    F = ev.F
    return sum(F(m - t) + _sign(t) * F(m + t) for t in range(1, l + 1))


def _braid_normalized(ev, p):
    m, r, l = p["m"], p["r"], p["l"]
    return [ev.F(r) * _braid_term_sum(ev, m, l), ev.F(m) * _braid_term_sum(ev, r, l)]


def braid_closed_value(l: int, L=CLOSED_FORM.L) -> int:
    """``sum_{t=1..l} (-1)^t L(t)``, the common braid ratio."""
    return _sign(l) * L(l - 1) + 1


def braid_closed_paper(l: int, F=CLOSED_FORM.F) -> int:
    if l % 2:
        return F(l) + F(l - 2) + 1
    half = l // 2
    return 5 * F(half - 1) * F(half) + 1 + _sign(half)


def _braid_closed(ev, p):
    m, l = p["m"], p["l"]
    return [_braid_term_sum(ev, m, l), ev.F(m) * braid_closed_value(l, ev.L)]


def _braid_closed_paper(ev, p):
    m, l = p["m"], p["l"]
    return [_braid_term_sum(ev, m, l), ev.F(m) * braid_closed_paper(l, ev.F)]


def _rhombus_det(ev, p):
    n, r = p["n"], p["r"]
    H = ev.H
    det = H(n, r) * H(n + 1, r + 1) - H(n, r + 1) * H(n + 1, r)
    return [det, _sign(n - r + 1) * ev.F(r) * ev.F(r + 1)]


def _triangle_abc(ev, n, r):
    return ev.H(n + 1, r - 1) + ev.H(n, r) - ev.H(n + 2, r + 1)


def _triangle_config(ev, p):
    n, r = p["n"], p["r"]
    return [_triangle_abc(ev, n, r), _sign(r) * ev.F(n - 2 * r)]


def _triangle_config_paper(ev, p):
    n, r = p["n"], p["r"]
    return [_triangle_abc(ev, n, r), ev.F(2 * r - n + 1)]


# OEIS labels for ladders whose seeds F(d+1), F(d) match a named sequence.
NAMED_LADDERS = {
    1: ("A000045", "Fibonacci numbers"),
    2: ("A000032", "Lucas numbers"),
    3: ("A013655", "sum of Fibonacci and Lucas numbers"),
    6: ("A206610", "generalized Fibonacci with a=13, b=8"),
}


def ladder_sequence(d: int, count: int, ev=CLOSED_FORM) -> list[int]:
    """``F(d+1), F(d)``, then the rung sums of the oblique ladder for ``d``."""
    seq = [ev.F(d + 1), ev.F(d)]
    t = 1
    while len(seq) < count:
        seq.append(ev.H(t + d + 1, t) + ev.H(t + d + 1, t + 1))
        t += 1
    return seq[:count]


def generalized_fibonacci(a: int, b: int, count: int) -> list[int]:
    seq = [a, b]
    while len(seq) < count:
        seq.append(seq[-1] + seq[-2])
    return seq[:count]


def _gen_fib_ladder(ev, p):
    d, n = p["d"], p["n"]
    return [tuple(ladder_sequence(d, n, ev)),
            tuple(generalized_fibonacci(ev.F(d + 1), ev.F(d), n))]


# -- catalog ----------------------------------------------------------------------

CATALOG: dict[str, Identity] = {}


def _add(ident: Identity) -> None:
    CATALOG[ident.id] = ident


_add(Identity(
    "RUNG_SUM", ("k", "j"), "as-stated",
    "H(k,j) + H(k+2,j+1) = F(k+1)",
    "A two-point rung of a horizontal ladder sums to a Fibonacci number",
    ("k >= 1", "0 <= j <= k - 1"), _rung_sum,
    {"k": "1..150", "j": "0..k-1"},
))
_add(Identity(
    "RECTANGLE_SHIFT", ("k", "j", "i", "r"), "corrected",
    "H(k,j) - H(k,j+i) = (-1)^r (H(k+2r,j+r) - H(k+2r,j+i+r))",
    "Rectangle property: every rung of a vertical ladder has the same length",
    ("k >= 0", "j >= 0", "i >= 0", "j + i <= k", "r >= 0"), _rect_shift,
    {"k": "0..80", "j": "0..k", "i": "0..k-j", "r": "0..10"},
    paper=_rect_shift_paper,
    paper_claim="H(k,j) - H(k,j+i) = (-1)^(r+1) (H(k+2r,j+r) - H(k+2r,j+i+r))",
))
_add(Identity(
    "RECTANGLE_CLOSED", ("k", "j", "i", "r"), "corrected",
    "H(k,j) - H(k,j+i) = (-1)^(j+1) H(k-2j,i)",
    "Rectangle property, closed form from the rung with a zero end point",
    ("k >= 0", "j >= 0", "i >= 0", "2*j + i <= k", "r >= 0"), _rect_closed,
    {"k": "0..80", "j": "0..k//2", "i": "0..k-2*j", "r": "0..10"},
    paper=_rect_closed_paper,
    paper_claim="H(k,j) - H(k,j+i) = (-1)^(r+1) (H(k+2r,j+r) - H(k+2r,j+i+r)) = (-1)^(r+1) H(k-2j,i)",
    defaults={"r": 0},
))
_add(Identity(
    "ALT_RUNG_ABS", ("k", "j", "r", "n"), "as-stated",
    "|sum_{t<2n} (-1)^t H(k,j+t)| = |sum_{t<2n} (-1)^t H(k+2r,j+t+r)|",
    "Alternating sums along rungs of a vertical ladder agree up to sign",
    ("r >= 1", "k >= 1", "j >= 0", "n >= 1", "2*n - 1 <= k", "j + 2*n - 1 <= k"), _alt_rung_abs,
    {"k": "1..60", "j": "0..k-1", "r": "1..5", "n": "1..5"},
))
_add(Identity(
    "EVEN_RUNG_SUM", ("k", "j", "m", "n"), "as-stated",
    "sum_{t<2n} H(k+2t,j+t) = sum_{t<2n} H(k+2t,j+m+t)",
    "Vertical rungs with an even number of points have equal sums",
    ("m >= 1", "k >= 1", "j >= 0", "n >= 1", "2*n - 1 <= k", "j + m <= k"), _even_rung_sum,
    {"k": "1..60", "j": "0..k-1", "m": "1..10", "n": "1..5"},
))
_add(Identity(
    "ODD_RUN_LENGTH", ("k", "j", "n", "i"), "corrected",
    "H(k+2i,j+i) - H(k,j) = H(k+2i,j+n+i) - H(k,j+n) = H(k+2i,i)   (i even)",
    "Vertical rungs with an odd number of points have the same length",
    ("k >= 0", "j >= 0", "n >= 0", "j + n <= k", "i >= 0", "i % 2 == 0"), _odd_run_length,
    {"k": "0..60", "j": "0..k", "n": "0..k-j", "i": "0..10"},
    paper=_odd_run_length,
    paper_claim="H(k+2i,j+i) - H(k,j) = H(k+2i,j+n+i) - H(k,j+n) = H(k+2i,i)   (i odd)",
    paper_domain=("k >= 0", "j >= 0", "n >= 0", "j + n <= k", "i >= 1", "i % 2 == 1"),
    paper_grid={"k": "0..60", "j": "0..k", "n": "0..k-j", "i": "1..9"},
))
_add(Identity(
    "COLUMN_DIFF", ("r", "k", "j"), "as-stated",
    "H(r+k,j) - H(r,j) = F(j) (H(r+k-j+1,1) - H(r-j+1,1))",
    "Rung lengths of an oblique ladder scale by a Fibonacci number",
    ("r >= 1", "k >= 1", "j >= 1", "j <= r"), _column_diff,
    {"r": "1..60", "k": "1..20", "j": "1..r"},
))
_add(Identity(
    "DIAGONAL_SUM", ("k", "j", "m"), "as-stated",
    "sum_{i<=m} H(k+i,j+i) = F(k-j) sum_{i<=m} H(j+i+1,1)",
    "Oblique rung sums are Fibonacci multiples of the second rung",
    ("j >= 1", "k > j", "m >= 0"), _diagonal_sum,
    {"k": "1..40", "j": "1..k-1", "m": "0..20"},
))
_add(Identity(
    "CASSINI", ("k",), "as-stated",
    "H(2k,k) - H(2k,k-1) = (-1)^(k-1)",
    "Cassini identity from a two-point rung on the central vertical line",
    ("k >= 1",), _cassini,
    {"k": "1..200"},
))
_add(Identity(
    "CATALAN", ("k", "j"), "as-stated",
    "H(2k,k) - H(2k,k-j) = (-1)^(k-j) H(2j,j)",
    "Catalan identity from a rung on the central vertical line",
    ("k >= 1", "0 <= j <= k"), _catalan,
    {"k": "1..100", "j": "0..k"},
))
_add(Identity(
    "DOCAGNE", ("k", "j"), "as-stated",
    "H(k+j+1,k) - H(k+j+1,j) = (-1)^j H(k-j+1,k-j)",
    "d'Ocagne identity from a rung whose ladder starts at the top",
    ("k >= 1", "0 <= j <= k"), _docagne,
    {"k": "1..100", "j": "0..k"},
))
_add(Identity(
    "JOHNSON", ("k", "j", "r", "i", "l"), "as-stated",
    "H(k+j,j) - H(r+i,i) = (-1)^l (H(k+j-2l,j-l) - H(r+i-2l,i-l)) = (-1)^i H(k+j-2i,j-i)",
    "Johnson identity from rung lengths of a vertical ladder",
    ("k >= 0", "j >= 0", "r >= 0", "i >= 0", "k + j == r + i", "i < j", "0 <= l <= i", "i <= k"),
    _johnson,
    {"k": "0..80", "j": "0..80-k", "i": "0..j-1", "r": "k+j-i", "l": "0..i"},
))
_add(Identity(
    "ZIGZAG_PARALLEL", ("a", "b", "j"), "corrected",
    "F(a) (F(b+j) + (-1)^j F(b-j)) = F(b) (F(a+j) + (-1)^j F(a-j)) = F(a) F(b) L(j)",
    "Line AB is parallel to the line through the origin and C",
    ("a >= 1", "b >= 1", "0 <= j <= min(a, b)"), _zigzag_parallel,
    {"a": "1..40", "b": "1..40", "j": "0..min(a,b)"},
    paper=_zigzag_parallel_paper,
    paper_claim="F(a) (F(b-j) - F(b+j)) = F(b) (F(a-j) - F(a+j))",
))
_add(Identity(
    "LONG_ZIGZAG_ALT", ("r", "k", "n", "first"), "as-stated",
    "p_2 + p_4 + ... + p_(n-1) = p_n - p_1",
    "Long zigzag corollary: alternating points sum to last minus first",
    ("0 <= k <= r", "n >= 3", "n % 2 == 1", "first in ('slash', 'backslash')"), _long_zigzag_alt,
    {"r": "0..150", "k": "0..r", "n": "3..41", "first": "slash,backslash"},
))
_add(Identity(
    "ZIGZAG_COLUMN_SUM", ("a", "b", "c", "d", "k"), "corrected",
    "sum_{j<2k} F(a+j)F(c+j) = sum_{j<2k} F(b+j)F(d+j) = closed(a+c, k)",
    "Long zigzag corollary: columns forming a rectangle have the same sum",
    ("a >= 1", "b >= 1", "c >= 1", "d >= 1", "a + c == b + d", "k >= 1"), _zigzag_column_sum,
    {"a": "1..30", "b": "1..30", "c": "1..30", "d": "a+c-b", "k": "1..8"},
    paper=_zigzag_column_sum_paper,
    paper_claim="... = F(k+ne)^2 - F(ne)^2 if a+b odd, F(ne+k)F(ne+k-1) - F(ne)F(ne-1) if even, ne = (a+b)//2",
))
_add(Identity(
    "ZIGZAG_BALANCE", ("r", "c", "k"), "as-stated",
    "sum(left zigzag) = sum(right zigzag) over a 6k+5 zigzag with apex (r, c)",
    "Zigzag property",
    ("k >= 1", "c >= 2", "c <= r - 2"), _zigzag_balance,
    {"r": "4..100", "c": "2..r-2", "k": "1..10"},
))
_add(Identity(
    "HOCKEY_STICK", ("k", "n", "side"), "as-stated",
    "s_1 + ... + s_n = blade (b_L or b_R by side and parity; b_L = b_R when k = 2)",
    "Hockey stick property",
    ("k >= 2", "n >= 1", "side in ('left', 'right')"), _hockey_stick,
    {"k": "2..60", "n": "1..25", "side": "left,right"},
))
_add(Identity(
    "BRAID_SIGNED", ("n", "m", "l"), "as-stated",
    "sum_{t<=l} H(n-t,m-t) + sum_{1<=t<=l} (-1)^t H(n+t,m+t) = "
    "sum_{t<=l} H(n-t,m) + sum_{1<=t<=l} (-1)^t H(n+t,m)",
    "Signed summation over the braid squares",
    ("0 <= m <= n", "0 <= l <= min(m, n - m)"), _braid_signed,
    {"n": "0..80", "m": "0..n", "l": "0..min(m,n-m)"},
))
_add(Identity(
    "BRAID_NORMALIZED", ("m", "r", "l"), "as-stated",
    "F(r) sum_{t=1..l} (F(m-t) + (-1)^t F(m+t)) = F(m) sum_{t=1..l} (F(r-t) + (-1)^t F(r+t))",
    "Braid sum with the common point removed, cross-multiplied",
    ("l >= 0", "m >= l + 1", "r >= l + 1"), _braid_normalized,
    {"l": "0..15", "m": "l+1..40", "r": "l+1..40"},
))
_add(Identity(
    "BRAID_CLOSED", ("m", "l"), "corrected",
    "sum_{t=1..l} (F(m-t) + (-1)^t F(m+t)) = F(m) ((-1)^l L(l-1) + 1)",
    "Closed form of the normalized braid sum",
    ("l >= 0", "m >= l + 1"), _braid_closed,
    {"l": "0..20", "m": "l+1..40"},
    paper=_braid_closed_paper,
    paper_claim="... = F(m) (F(l) + F(l-2) + 1) for odd l, F(m) (5 F(l/2-1) F(l/2) + 1 + (-1)^(l/2)) for even l",
    paper_domain=("l >= 1", "m >= l + 1"),
))
_add(Identity(
    "RHOMBUS_DET", ("n", "r"), "as-stated",
    "H(n,r) H(n+1,r+1) - H(n,r+1) H(n+1,r) = (-1)^(n-r+1) F(r) F(r+1)",
    "Rhombus property: the 2x2 determinant is a product of consecutive Fibonacci numbers",
    ("r >= 1", "r < n"), _rhombus_det,
    {"n": "1..100", "r": "1..n-1"},
))
_add(Identity(
    "TRIANGLE_CONFIG", ("n", "r"), "corrected",
    "H(n+1,r-1) + H(n,r) - H(n+2,r+1) = (-1)^r F(n-2r)",
    "Triangle configuration: a + b - c is a Fibonacci number",
    ("1 <= r <= n",), _triangle_config,
    {"n": "1..60", "r": "1..n"},
    paper=_triangle_config_paper,
    paper_claim="H(n+1,r-1) + H(n,r) - H(n+2,r+1) = F(2r-n+1)",
))
_add(Identity(
    "GEN_FIB_LADDER", ("d", "n"), "as-stated",
    "F(d+1), F(d), rung sums of the oblique ladder d = G with G(t+2) = G(t+1) + G(t)",
    "Oblique ladders give generalized Fibonacci sequences",
    ("d >= 1", "n >= 2"), _gen_fib_ladder,
    {"d": "1,2,3,6", "n": "20"},
))


def get(identity_id: str) -> Identity:
    try:
        return CATALOG[identity_id.upper()]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}; known: {', '.join(CATALOG)}") from None


# -- verification -----------------------------------------------------------------

def _all_equal(members: Sequence) -> bool:
    if len(members) == 2:
        return members[0] == members[1]
    first = members[0]
    return all(m == first for m in members[1:])


def verify(identity_id: str, params: Mapping[str, Any], *, paper_form: bool = False,
           ev=CLOSED_FORM) -> IdentityReport:
    """Evaluate one instance exactly.

    With ``paper_form=True`` the published chain of a corrected row is
    evaluated under its own hypotheses; otherwise the corrected chain is
    verified and the published one is evaluated alongside (when its
    hypotheses hold) and summarized in ``note``.
    """
    ident = get(identity_id)
    p = ident.complete(params)
    use_paper = paper_form and ident.paper is not None
    bad = ident.violated(p, use_paper)
    if bad is not None:
        raise DomainError(ident.id, bad, p)
    chain = ident.paper if use_paper else ident.chain
    members = chain(ev, p)
    holds = _all_equal(members)
    note = ""
    paper_members = paper_holds = None
    if ident.paper is not None and not use_paper:
        if ident.violated(p, True) is None:
            paper_members = ident.paper(ev, p)
            paper_holds = _all_equal(paper_members)
            note = ("paper-stated form also holds" if paper_holds
                    else "paper-stated form fails; corrected form " + ("holds" if holds else "fails"))
        else:
            note = "paper-stated form not applicable: violates '%s'" % ident.violated(p, True)
    elif use_paper:
        note = "paper-stated form " + ("holds" if holds else "fails")
        paper_members, paper_holds = members, holds
    if ident.id == "HOCKEY_STICK":
        note = f"case {hockey_stick_case(p['k'], p['n'], p['side'])}" + (f"; {note}" if note else "")
    form = "paper" if use_paper else ident.status
    return IdentityReport(ident.id, {k: p[k] for k in ident.params}, list(members), holds, note,
                          form=form, paper_members=paper_members, paper_holds=paper_holds)


# -- grids ------------------------------------------------------------------------

def _parse_value(text: str, bound: Params):
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return eval(compile(text, "<range>", "eval"), _SAFE, dict(bound))
    except NameError as exc:
        raise ValueError(f"range bound {text!r} refers to an unbound parameter ({exc})") from None
    except SyntaxError:
        raise ValueError(f"cannot parse range bound {text!r}") from None


def _values(spec, bound: Params) -> Sequence:
    """Expand one parameter's range spec given the already-bound parameters."""
    if isinstance(spec, range):
        return spec
    if isinstance(spec, int):
        return (spec,)
    if not isinstance(spec, str):
        return tuple(spec)
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return range(_parse_value(lo, bound), _parse_value(hi, bound) + 1)
    if "," in spec and "(" not in spec:
        out = []
        for item in spec.split(","):
            item = item.strip()
            try:
                out.append(int(item))
            except ValueError:
                out.append(item)
        return out
    value = spec.strip()
    if value.isidentifier() and value not in bound:
        return (value,)
    return (_parse_value(value, bound),)


def iter_grid(ranges: Mapping[str, Any]) -> Iterator[Params]:
    """Cartesian grid in the order of ``ranges``; later bounds may use earlier names."""
    names = list(ranges)

    def walk(idx: int, bound: Params):
        if idx == len(names):
            yield dict(bound)
            return
        name = names[idx]
        for v in _values(ranges[name], bound):
            bound[name] = v
            yield from walk(idx + 1, bound)
        bound.pop(name, None)

    yield from walk(0, {})


def describe_grid(ranges: Mapping[str, Any]) -> dict[str, str]:
    out = {}
    for name, spec in ranges.items():
        if isinstance(spec, range):
            out[name] = f"{spec.start}..{spec.stop - 1}" if spec.step == 1 else str(list(spec))
        elif isinstance(spec, (list, tuple)):
            out[name] = ",".join(str(v) for v in spec)
        else:
            out[name] = str(spec)
    return out


WITNESS_LIMIT = 25


def sweep(identity_id: str, ranges: Mapping[str, Any] | None = None, *, paper_form: bool = False,
          ev=CLOSED_FORM, witness_limit: int = WITNESS_LIMIT) -> SweepReport:
    """Verify an identity over every grid point that satisfies its domain.

    ``ranges`` maps parameter names to ``"lo..hi"`` strings (bounds may be
    expressions in earlier parameters), comma lists, ints, ranges or
    sequences. Omitted ranges default to the row's acceptance grid.
    Failures are stored in full; published-form failures of corrected rows
    are counted and the first ``witness_limit`` kept as witnesses.
    """
    ident = get(identity_id)
    use_paper = paper_form and ident.paper is not None
    if ranges is None:
        ranges = ident.paper_grid if use_paper and ident.paper_grid else ident.grid
    ranges = dict(ranges)
    for name, value in ident.defaults.items():
        ranges.setdefault(name, value)
    missing = [p for p in ident.params if p not in ranges]
    if missing:
        raise DomainError(ident.id, "no range for parameter(s): " + ", ".join(missing))
    in_domain = ident.predicate(use_paper)
    in_paper_domain = ident.predicate(True)
    names = ident.params
    chain = ident.paper if use_paper else ident.chain
    shadow = ident.paper if (ident.paper is not None and not use_paper) else None

    instances = 0
    failures: list[Params] = []
    paper_instances = paper_failures = 0
    witnesses: list[Params] = []
    started = time.perf_counter()
    for p in iter_grid(ranges):
        args = {k: p[k] for k in names}
        if not in_domain(**args):
            continue
        instances += 1
        if not _all_equal(chain(ev, p)):
            failures.append(args)
        if shadow is not None and in_paper_domain(**args):
            paper_instances += 1
            if not _all_equal(shadow(ev, p)):
                paper_failures += 1
                if len(witnesses) < witness_limit:
                    witnesses.append(args)
    if use_paper:
        paper_instances, paper_failures = instances, len(failures)
        witnesses = failures[:witness_limit]
    elapsed = time.perf_counter() - started
    failures.sort(key=lambda d: tuple(_sort_key(d[k]) for k in ident.params))
    return SweepReport(
        ident.id, describe_grid(ranges), instances, failures, elapsed,
        form="paper" if use_paper else ident.status,
        paper_instances=paper_instances if ident.paper is not None else None,
        paper_failures=paper_failures if ident.paper is not None else None,
        paper_witnesses=witnesses if ident.paper is not None else None,
        evaluator=getattr(ev, "name", type(ev).__name__),
    )


def _sort_key(v):
    return (0, v, "") if isinstance(v, int) else (1, 0, str(v))
