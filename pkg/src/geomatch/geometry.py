"""Exact planar primitives over integer points.

Two predicate backends coexist.  Convex and wheel point sets are answered
combinatorially from their cyclic labels (their stored coordinates only
approximate a regular polygon and exist for drawing).  R-position and
general sets use exact integer determinants, and a zero determinant is a
hard error rather than a tie-break.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

COORD_LIMIT = 1 << 25


class GeneralPositionError(ValueError):
    """Three collinear points met where general position is assumed."""


class Config(str, enum.Enum):
    CONVEX = "convex"
    WHEEL = "wheel"
    RPOSITION = "rposition"
    GENERAL = "general"


@dataclass(frozen=True)
class Point:
    x: int
    y: int

    def __post_init__(self) -> None:
        for v in (self.x, self.y):
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"coordinates must be integers, got {v!r}")
            if abs(v) > COORD_LIMIT:
                raise ValueError(f"coordinate {v} exceeds the bound 2^25")


class Edge(NamedTuple):
    a: int
    b: int

    @classmethod
    def of(cls, u: int, v: int) -> "Edge":
        if u == v:
            raise ValueError(f"degenerate edge ({u}, {v})")
        return cls(u, v) if u < v else cls(v, u)

    def other(self, v: int) -> int:
        return self.b if v == self.a else self.a


@dataclass(frozen=True)
class Line:
    """The line a*x + b*y = c in gcd-reduced canonical form."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a == 0 and self.b == 0:
            raise ValueError("line normal must be non-zero")

    @classmethod
    def make(cls, a: int, b: int, c: int) -> "Line":
        g = math.gcd(math.gcd(a, b), c)
        a, b, c = a // g, b // g, c // g
        if a < 0 or (a == 0 and b < 0):
            a, b, c = -a, -b, -c
        return cls(a, b, c)

    @classmethod
    def through(cls, p: Point, q: Point) -> "Line":
        a = q.y - p.y
        b = p.x - q.x
        return cls.make(a, b, a * p.x + b * p.y)

    def value(self, p: Point) -> int:
        return self.a * p.x + self.b * p.y - self.c

    def side(self, p: Point) -> int:
        v = self.value(p)
        return (v > 0) - (v < 0)

    def parallel_to(self, other: "Line") -> bool:
        return self.a * other.b - self.b * other.a == 0


@dataclass(frozen=True)
class PointSet:
    """An even set of labelled points tagged with its configuration.

    For wheels the centre must be the last index; the circle points are
    indices ``0 .. size-2`` in counterclockwise order.
    """

    points: tuple[Point, ...]
    config: Config
    labels: tuple[str, ...] = ()
    center: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "config", Config(self.config))
        size = len(self.points)
        if size < 4 or size % 2:
            raise ValueError(f"point set size must be even and >= 4, got {size}")
        if self.config is Config.WHEEL:
            if self.center != size - 1:
                raise ValueError("wheel centre must be the last point index")
        elif self.center is not None:
            raise ValueError("only wheel point sets carry a centre")
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.config, size))
        elif len(self.labels) != size:
            raise ValueError("labels must match the number of points")
        else:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def n(self) -> int:
        return len(self.points) // 2

    @property
    def circle_count(self) -> int:
        """Number of points on the cyclic hull for the combinatorial backends."""
        if self.config is Config.WHEEL:
            return self.size - 1
        return self.size

    @property
    def combinatorial(self) -> bool:
        return self.config in (Config.CONVEX, Config.WHEEL)


def default_labels(config: Config, size: int) -> tuple[str, ...]:
    if config is Config.WHEEL:
        return tuple(f"v{i}" for i in range(size - 1)) + ("x",)
    return tuple(f"v{i}" for i in range(size))


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of (q - p) x (r - p); +1 means counterclockwise."""
    d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return (d > 0) - (d < 0)


def _cyclic_orient(i: int, j: int, k: int, m: int) -> int:
    return 1 if (j - i) % m < (k - i) % m else -1


def orient_idx(ps: PointSet, i: int, j: int, k: int) -> int:
    """Orientation of three distinct points of ``ps`` by index.

    Never returns 0: collinearity raises GeneralPositionError.
    """
    if i == j or j == k or i == k:
        raise ValueError(f"indices must be distinct: {(i, j, k)}")
    if ps.config is Config.CONVEX:
        return _cyclic_orient(i, j, k, ps.size)
    if ps.config is Config.WHEEL:
        m = ps.size - 1
        c = ps.center
        if c not in (i, j, k):
            return _cyclic_orient(i, j, k, m)
        # rotate the triple so the centre comes first; rotation keeps the sign
        if j == c:
            i, j, k = j, k, i
        elif k == c:
            i, j, k = k, i, j
        return 1 if (k - j) % m <= m // 2 else -1
    s = orient(ps.points[i], ps.points[j], ps.points[k])
    if s == 0:
        raise GeneralPositionError(f"points {i}, {j}, {k} are collinear")
    return s


def proper_cross_exact(e1: Edge, e2: Edge, ps: PointSet) -> bool:
    """True iff the open segments intersect, from exact coordinates."""
    if set(e1) & set(e2):
        return False
    p1, p2 = ps.points[e1.a], ps.points[e1.b]
    q1, q2 = ps.points[e2.a], ps.points[e2.b]
    o1 = orient(p1, p2, q1)
    o2 = orient(p1, p2, q2)
    o3 = orient(q1, q2, p1)
    o4 = orient(q1, q2, p2)
    if 0 in (o1, o2, o3, o4):
        raise GeneralPositionError(f"segments {tuple(e1)} and {tuple(e2)} are degenerate")
    return o1 != o2 and o3 != o4


def chords_cross_cyclic(a: int, b: int, c: int, d: int, m: int) -> bool:
    """True iff chord cd separates a from b on a convex m-cycle."""
    if len({a % m, b % m, c % m, d % m}) != 4:
        raise ValueError(f"chord endpoints must be distinct: {(a, b, c, d)}")
    span = (b - a) % m

    def inside(v: int) -> bool:
        return 0 < (v - a) % m < span

    return inside(c) != inside(d)


def radial_crosses_chord(c: int, a: int, b: int, m: int) -> bool:
    """True iff the segment from the centre to circle point c crosses chord ab.

    That happens exactly when c lies strictly inside the minor arc of ab.
    """
    if m % 2 == 0:
        raise ValueError("radial crossing needs an odd circle count")
    if len({a % m, b % m, c % m}) != 3:
        raise ValueError(f"indices must be distinct: {(c, a, b)}")
    span = (b - a) % m
    if span - 1 > m - span - 1:
        a, b = b, a
        span = m - span
    return 0 < (c - a) % m < span


def edges_cross(e1: Edge, e2: Edge, ps: PointSet) -> bool:
    if e1.a in e2 or e1.b in e2:
        return False
    if ps.config is Config.CONVEX:
        return chords_cross_cyclic(e1.a, e1.b, e2.a, e2.b, ps.size)
    if ps.config is Config.WHEEL:
        m = ps.size - 1
        x = ps.center
        r1, r2 = x in e1, x in e2
        if r1 and r2:
            return False
        if r1:
            return radial_crosses_chord(e1.other(x), e2.a, e2.b, m)
        if r2:
            return radial_crosses_chord(e2.other(x), e1.a, e1.b, m)
        return chords_cross_cyclic(e1.a, e1.b, e2.a, e2.b, m)
    return proper_cross_exact(e1, e2, ps)


def hull_indices(ps: PointSet, subset: Iterable[int] | None = None) -> list[int]:
    """Counterclockwise hull of a subset by gift wrapping over orient_idx."""
    idx = sorted(set(range(ps.size) if subset is None else subset))
    if len(idx) <= 2:
        return idx
    if ps.combinatorial:
        circle = [i for i in idx if i != ps.center]
        start = circle[0]
    else:
        start = min(idx, key=lambda i: (ps.points[i].x, ps.points[i].y))
    hull = [start]
    cur = start
    while True:
        cand = idx[0] if idx[0] != cur else idx[1]
        for r in idx:
            if r == cur or r == cand:
                continue
            if orient_idx(ps, cur, cand, r) < 0:
                cand = r
        if cand == start:
            break
        hull.append(cand)
        cur = cand
        if len(hull) > len(idx):
            raise RuntimeError("gift wrapping failed to close")
    return hull


def convex_hull(ps: PointSet) -> list[int]:
    if ps.combinatorial:
        return list(range(ps.circle_count))
    return hull_indices(ps)


def boundary_edges_of(ps: PointSet) -> set[Edge]:
    hull = convex_hull(ps)
    return {Edge.of(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))}


def sides_of(ps: PointSet, e: Edge, among: Iterable[int] | None = None) -> tuple[set[int], set[int]]:
    """Split the other points by the supporting line of ``e`` into (left, right)."""
    left: set[int] = set()
    right: set[int] = set()
    pool = range(ps.size) if among is None else among
    for r in pool:
        if r in e:
            continue
        (left if orient_idx(ps, e.a, e.b, r) > 0 else right).add(r)
    return left, right


def collinear_triple(points: Sequence[Point]) -> tuple[int, int, int] | None:
    """First collinear index triple, or None when in general position."""
    m = len(points)
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                if orient(points[i], points[j], points[k]) == 0:
                    return (i, j, k)
    return None
