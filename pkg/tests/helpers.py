"""Shared builders for the test suite."""

import math

from geomatch.configurations import RPositionCertificate, gen_convex, unbounded_sign_vectors
from geomatch.geometry import Config, Line, Point, PointSet


def exact_copy(ps):
    """The same coordinates under the exact-determinant backend."""
    return PointSet(ps.points, Config.GENERAL)


def pts(*coords, config=Config.GENERAL):
    return PointSet(tuple(Point(x, y) for x, y in coords), config)


def convex_as_rposition(two_n):
    """A convex polygon with n lines through the origin between its points."""
    poly = gen_convex(two_n)
    ps = PointSet(poly.points, Config.RPOSITION)
    n = two_n // 2
    lines = []
    for j in range(n):
        theta = -math.pi / 2 + math.pi / two_n + math.pi * j / n
        dx, dy = round(1000 * math.cos(theta)), round(1000 * math.sin(theta))
        lines.append(Line.make(dy, -dx, 0))
    vectors = unbounded_sign_vectors(lines)
    assign = [vectors.index(tuple(ln.side(p) for ln in lines)) for p in ps.points]
    return ps, RPositionCertificate(tuple(lines), tuple(assign))
