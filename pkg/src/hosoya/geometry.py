"""Geometric configurations in the Hosoya triangle as explicit point sets.

Conventions
-----------
Entry ``(r, k)`` is drawn at ``x = k - r/2``, ``y = r``. Under that layout

* a *slash* run keeps ``k`` fixed: ``(r, k), (r+1, k), (r+2, k)``;
* a *backslash* run steps ``k`` with ``r``: ``(r, k), (r+1, k+1), ...``;
* a *vertical* run moves two rows down and one position right:
  ``(r, k), (r+2, k+1), (r+4, k+2), ...`` (constant ``x``).

Every constructor raises :class:`~hosoya.errors.CoordinateError` when a
point would fall outside the triangle. Nothing is clamped.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CoordinateError
from .triangle import GridPoint, entry


class ConfigKind(str, enum.Enum):
    VERTICAL_RUN = "VERTICAL_RUN"
    HORIZONTAL_RUNG = "HORIZONTAL_RUNG"
    DIAGONAL = "DIAGONAL"
    OBLIQUE_LADDER = "OBLIQUE_LADDER"
    LONG_ZIGZAG = "LONG_ZIGZAG"
    ZIGZAG_6K5 = "ZIGZAG_6K5"
    HOCKEY_STICK = "HOCKEY_STICK"
    BRAID_TERMS = "BRAID_TERMS"
    RHOMBUS = "RHOMBUS"
    TRIANGLE_CONFIG = "TRIANGLE_CONFIG"


@dataclass
class PointSet:
    """Ordered points with their triangle values and optional role labels."""

    points: list[tuple[GridPoint, int]]
    roles: list[str | None] = field(default_factory=list)
    kind: str | None = None

    @classmethod
    def build(cls, coords: Iterable[tuple[int, int]], roles: Sequence[str | None] | None = None,
              kind: str | None = None) -> "PointSet":
        pts = [GridPoint(r, k) for r, k in coords]
        if roles is None:
            roles = [None] * len(pts)
        elif len(roles) != len(pts):
            raise ValueError("one role per point is required")
        return cls([(p, entry(p)) for p in pts], list(roles), kind)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def coords(self) -> list[GridPoint]:
        return [p for p, _ in self.points]

    @property
    def values(self) -> list[int]:
        return [v for _, v in self.points]

    def with_role(self, role: str) -> list[tuple[GridPoint, int]]:
        return [pv for pv, rl in zip(self.points, self.roles) if rl == role]

    def role_sum(self, *roles: str) -> int:
        wanted = set(roles)
        return sum(v for (_, v), rl in zip(self.points, self.roles) if rl in wanted)

    def mirror(self) -> "PointSet":
        """Reflect through the central axis, swapping left/right role tags."""
        swap = {"left": "right", "right": "left", "b_L": "b_R", "b_R": "b_L"}
        roles = [swap.get(r, r) if r else r for r in self.roles]
        return PointSet([(p.mirror(), v) for p, v in self.points], roles, self.kind)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "points": [
                {"r": p.r, "k": p.k, "value": str(v), **({"role": rl} if rl else {})}
                for (p, v), rl in zip(self.points, self.roles)
            ],
        }


@dataclass(frozen=True)
class Rung:
    """Points along one rung. ``length`` is last value minus first value."""

    points: tuple[GridPoint, ...]
    values: tuple[int, ...]

    @property
    def length(self) -> int:
        return self.values[-1] - self.values[0]

    @property
    def absolute_length(self) -> int:
        return abs(self.length)

    @property
    def total(self) -> int:
        return sum(self.values)


# -- coordinate generators (no value lookups) ---------------------------------

def vertical_coords(r: int, k: int, count: int) -> list[tuple[int, int]]:
    return [(r + 2 * t, k + t) for t in range(count)]


def long_zigzag_coords(r: int, k: int, n: int, first_run: str = "slash") -> list[tuple[int, int]]:
    """Path where each overlapping triple lies on one diagonal run.

    Runs alternate between slash and backslash, starting with ``first_run``.
    """
    if first_run not in ("slash", "backslash"):
        raise ValueError(f"first_run must be 'slash' or 'backslash', not {first_run!r}")
    if n < 1:
        raise ValueError("a long zigzag needs at least one point")
    coords = [(r, k)]
    slash = first_run == "slash"
    while len(coords) < n:
        # each run adds two points past its first one
        for _ in range(2):
            if len(coords) == n:
                break
            r += 1
            if not slash:
                k += 1
            coords.append((r, k))
        slash = not slash
    return coords


def hockey_stick_coords(k: int, n: int) -> tuple[list[tuple[int, int]], tuple[str, tuple[int, int]]]:
    """Left-side shaft ``H(k+2i-2, i)``, i = 1..n, and its blade point."""
    if k < 2:
        raise CoordinateError("hockey-stick base row must be at least 2")
    if n < 1:
        raise ValueError("the shaft needs at least one point")
    shaft = [(k + 2 * i - 2, i) for i in range(1, n + 1)]
    m = n // 2
    if n % 2 == 0:
        blade = ("b_L", (k + 4 * m - 1, 2 * m))
    else:
        blade = ("b_R", (k + 4 * m + 1, 2 * m + 2))
    return shaft, blade


def zigzag_6k5_coords(r: int, c: int, k: int) -> list[tuple[str, tuple[int, int]]]:
    head = [
        ("p1", (r - 2, c - 2)),
        ("p2", (r - 1, c - 1)),
        ("p3", (r - 2, c)),
        ("p4", (r - 1, c)),
        ("p5", (r, c)),
    ]
    cols = []
    for role, (r0, k0) in (("left", (r + 1, c)), ("middle", (r + 2, c + 1)), ("right", (r + 1, c + 1))):
        cols.extend((role, pt) for pt in vertical_coords(r0, k0, 2 * k))
    return head + cols


def braid_coords(n: int, m: int, l: int) -> list[tuple[str, tuple[int, int]]]:
    """Points of the signed braid summation, tagged by side and sign."""
    out = []
    for t in range(l + 1):
        out.append(("left", (n - t, m - t)))
    for t in range(1, l + 1):
        out.append(("left+" if t % 2 == 0 else "left-", (n + t, m + t)))
    for t in range(l + 1):
        out.append(("right", (n - t, m)))
    for t in range(1, l + 1):
        out.append(("right+" if t % 2 == 0 else "right-", (n + t, m)))
    return out


# -- point-set constructors ----------------------------------------------------

def vertical_run(start: GridPoint, count: int) -> PointSet:
    """``count`` vertically aligned points from ``start`` downward."""
    if count < 1:
        raise ValueError("count must be positive")
    return PointSet.build(vertical_coords(start[0], start[1], count), kind=ConfigKind.VERTICAL_RUN.value)


def horizontal_rung(start: GridPoint, width: int) -> PointSet:
    r, k = start
    return PointSet.build([(r, k + t) for t in range(width)], kind=ConfigKind.HORIZONTAL_RUNG.value)


def diagonal_run(d: int, count: int) -> PointSet:
    """The ``d``-th backslash diagonal, ``H(d + t, t)``."""
    return PointSet.build([(d + t, t) for t in range(count)], kind=ConfigKind.DIAGONAL.value)


def oblique_ladder(d: int, rungs: int) -> list[Rung]:
    """Backslash ladder whose rung ``t`` is ``{H(t+d+1, t), H(t+d+1, t+1)}``.

    Rung values are ``{F(t) F(d+1), F(t+1) F(d)}``; the rung sums continue
    the generalized Fibonacci sequence seeded by ``F(d+1), F(d)``.
    """
    if d < 1 or rungs < 1:
        raise ValueError("oblique ladder needs d >= 1 and at least one rung")
    out = []
    for t in range(1, rungs + 1):
        pts = (GridPoint(t + d + 1, t), GridPoint(t + d + 1, t + 1))
        out.append(Rung(pts, tuple(entry(p) for p in pts)))
    return out


def long_zigzag(start: GridPoint, n: int, first_run: str = "slash") -> PointSet:
    coords = long_zigzag_coords(start[0], start[1], n, first_run)
    return PointSet.build(coords, [f"p{i}" for i in range(1, n + 1)], kind=ConfigKind.LONG_ZIGZAG.value)


def zigzag_6k5(apex: GridPoint, k: int) -> PointSet:
    """Zigzag with a five-point head at ``apex`` and three columns of ``2k`` points.

    Left zigzag: p1, p2, p5, left and middle columns.
    Right zigzag: p3, p4, p5, right and middle columns.
    """
    if k < 1:
        raise ValueError("block count must be positive")
    tagged = zigzag_6k5_coords(apex[0], apex[1], k)
    return PointSet.build([pt for _, pt in tagged], [role for role, _ in tagged],
                          kind=ConfigKind.ZIGZAG_6K5.value)


def zigzag_sides(ps: PointSet) -> tuple[int, int]:
    """(left-zigzag sum, right-zigzag sum) of a 6k+5 configuration."""
    left = ps.role_sum("p1", "p2", "p5", "left", "middle")
    right = ps.role_sum("p3", "p4", "p5", "right", "middle")
    return left, right


def hockey_stick(k: int, count: int, side: str = "left") -> PointSet:
    """Shaft of ``count`` points starting at ``H(k, 1)`` plus the blade.

    ``side='right'`` mirrors the left configuration. ``side='center'``
    requires ``k == 2`` and carries both blade points, which coincide in value.
    """
    shaft, (blade_role, blade) = hockey_stick_coords(k, count)
    coords = shaft + [blade]
    roles = ["shaft"] * len(shaft) + [blade_role]
    if side == "center":
        if k != 2:
            raise ValueError("a central hockey stick has base row 2")
        r, bk = blade
        other = (r, r - bk)
        pair = sorted([blade, other], key=lambda p: p[1])
        coords = shaft + pair
        roles = ["shaft"] * len(shaft) + ["b_L", "b_R"]
        return PointSet.build(coords, roles, kind=ConfigKind.HOCKEY_STICK.value)
    ps = PointSet.build(coords, roles, kind=ConfigKind.HOCKEY_STICK.value)
    if side == "left":
        return ps
    if side == "right":
        return ps.mirror()
    raise ValueError(f"side must be 'left', 'right' or 'center', not {side!r}")


def braid_terms(n: int, m: int, l: int) -> PointSet:
    """Points entering the signed braid summation around ``H(n, m)``."""
    tagged = braid_coords(n, m, l)
    return PointSet.build([pt for _, pt in tagged], [role for role, _ in tagged],
                          kind=ConfigKind.BRAID_TERMS.value)


def rhombus(n: int, r: int) -> PointSet:
    """The 2x2 window ``H(n, r), H(n, r+1), H(n+1, r), H(n+1, r+1)``."""
    coords = [(n, r), (n, r + 1), (n + 1, r), (n + 1, r + 1)]
    return PointSet.build(coords, ["top-left", "top-right", "bottom-left", "bottom-right"],
                          kind=ConfigKind.RHOMBUS.value)


def triangle_config(n: int, r: int, orientation: str = "left") -> PointSet:
    """Points ``a = H(n+1, r-1)``, ``b = H(n, r)``, ``c = H(n+2, r+1)``."""
    if r < 1:
        raise CoordinateError("triangle configuration needs r >= 1")
    ps = PointSet.build([(n + 1, r - 1), (n, r), (n + 2, r + 1)], ["a", "b", "c"],
                        kind=ConfigKind.TRIANGLE_CONFIG.value)
    if orientation == "left":
        return ps
    if orientation == "right":
        return ps.mirror()
    raise ValueError(f"orientation must be 'left' or 'right', not {orientation!r}")


# -- specs ----------------------------------------------------------------------

@dataclass
class ConfigSpec:
    """A named configuration, e.g. ``ConfigSpec.parse("vertical_run:r=2,k=1,count=3")``."""

    kind: ConfigKind
    parameters: dict[str, int | str] = field(default_factory=dict)

    @property
    def anchor(self) -> GridPoint | None:
        p = self.parameters
        if "r" in p and "k" in p and self.kind in _ANCHORED:
            return GridPoint(int(p["r"]), int(p["k"]))
        return None

    @classmethod
    def parse(cls, text: str) -> "ConfigSpec":
        name, _, rest = text.partition(":")
        try:
            kind = ConfigKind(name.strip().upper())
        except ValueError:
            known = ", ".join(k.value.lower() for k in ConfigKind)
            raise ValueError(f"unknown configuration {name!r} (known: {known})") from None
        params: dict[str, int | str] = {}
        for item in filter(None, (s.strip() for s in rest.split(","))):
            key, eq, value = item.partition("=")
            if not eq:
                raise ValueError(f"expected key=value, got {item!r}")
            value = value.strip()
            try:
                params[key.strip()] = int(value)
            except ValueError:
                params[key.strip()] = value
        return cls(kind, params)

    def materialize(self) -> PointSet:
        p = self.parameters
        try:
            builder = _BUILDERS[self.kind]
        except KeyError:
            raise ValueError(f"{self.kind.value} has no point-set form") from None
        try:
            return builder(p)
        except KeyError as exc:
            raise ValueError(f"{self.kind.value.lower()} needs parameter {exc.args[0]!r}") from None


_ANCHORED = {ConfigKind.VERTICAL_RUN, ConfigKind.HORIZONTAL_RUNG, ConfigKind.LONG_ZIGZAG}


def _ladder_points(p) -> PointSet:
    coords, roles = [], []
    for t, rung in enumerate(oblique_ladder(p["d"], p.get("rungs", p.get("count", 5))), start=1):
        coords.extend(rung.points)
        roles.extend([f"rung{t}-left", f"rung{t}-right"])
    return PointSet.build(coords, roles, kind=ConfigKind.OBLIQUE_LADDER.value)


_BUILDERS = {
    ConfigKind.VERTICAL_RUN: lambda p: vertical_run(GridPoint(p["r"], p["k"]), p.get("count", 3)),
    ConfigKind.HORIZONTAL_RUNG: lambda p: horizontal_rung(GridPoint(p["r"], p["k"]), p.get("width", 2)),
    ConfigKind.DIAGONAL: lambda p: diagonal_run(p["d"], p.get("count", 6)),
    ConfigKind.OBLIQUE_LADDER: _ladder_points,
    ConfigKind.LONG_ZIGZAG: lambda p: long_zigzag(GridPoint(p["r"], p["k"]), p.get("n", 5),
                                                  p.get("first", "slash")),
    ConfigKind.ZIGZAG_6K5: lambda p: zigzag_6k5(GridPoint(p["r"], p["c"]), p.get("count", 1)),
    ConfigKind.HOCKEY_STICK: lambda p: hockey_stick(p["k"], p.get("count", 3), p.get("side", "left")),
    ConfigKind.BRAID_TERMS: lambda p: braid_terms(p["n"], p["m"], p["l"]),
    ConfigKind.RHOMBUS: lambda p: rhombus(p["n"], p["r"]),
    ConfigKind.TRIANGLE_CONFIG: lambda p: triangle_config(p["n"], p["r"], p.get("orientation", "left")),
}
