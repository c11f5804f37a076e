"""Generators and validity checks for the supported point configurations."""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass

from .geometry import (
    Config,
    GeneralPositionError,
    Line,
    Point,
    PointSet,
    collinear_triple,
    orient,
    orient_idx,
)

RENDER_RADIUS = 10**6


class ConfigurationError(ValueError):
    """A generator could not produce a valid point set."""


@dataclass(frozen=True)
class RPositionCertificate:
    """Lines whose unbounded regions each hold one point.

    ``region_assignment[i]`` is the counterclockwise index of the unbounded
    region containing point i, counted from the first ray direction at or
    after angle 0.
    """

    lines: tuple[Line, ...]
    region_assignment: tuple[int, ...]


def _require_even(two_n: int, minimum: int) -> None:
    if not isinstance(two_n, int) or two_n % 2 or two_n < minimum:
        raise ConfigurationError(f"size must be an even integer >= {minimum}, got {two_n!r}")


def _polygon(m: int, radius: int, phase: float = 0.0) -> list[Point]:
    return [
        Point(round(radius * math.cos(phase + 2 * math.pi * i / m)), round(radius * math.sin(phase + 2 * math.pi * i / m)))
        for i in range(m)
    ]


def gen_convex(two_n: int) -> PointSet:
    _require_even(two_n, 4)
    return PointSet(_polygon(two_n, RENDER_RADIUS, -math.pi / 2), Config.CONVEX)


def gen_wheel(two_n: int) -> PointSet:
    _require_even(two_n, 6)
    m = two_n - 1
    pts = _polygon(m, RENDER_RADIUS, -math.pi / 2) + [Point(0, 0)]
    return PointSet(pts, Config.WHEEL, center=m)


def embedding_agrees(ps: PointSet) -> bool:
    """Check the drawing coordinates against the combinatorial predicates.

    Every triple's exact orientation must equal the cyclic/radial answer;
    this certifies the rendering polygon is strictly convex with the
    centre (for wheels) in the right place.
    """
    m = ps.size
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                if orient(ps.points[i], ps.points[j], ps.points[k]) != orient_idx(ps, i, j, k):
                    return False
    return True


# -- R-position -------------------------------------------------------------


def _half(v: tuple[int, int]) -> int:
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _angle_cmp(u: tuple[int, int], v: tuple[int, int]) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    cr = u[0] * v[1] - u[1] * v[0]
    return -1 if cr > 0 else (1 if cr < 0 else 0)


def ray_directions(lines: tuple[Line, ...] | list[Line]) -> list[tuple[int, int]]:
    """Both direction vectors of every line, sorted counterclockwise from angle 0."""
    rays = []
    for ln in lines:
        rays.append((-ln.b, ln.a))
        rays.append((ln.b, -ln.a))
    return sorted(rays, key=functools.cmp_to_key(_angle_cmp))


def unbounded_sign_vectors(lines: tuple[Line, ...] | list[Line]) -> list[tuple[int, ...]]:
    """Side vectors of the unbounded regions, in counterclockwise order.

    Region k lies between rays k and k+1; the sum of those two integer ray
    vectors points strictly inside its cone, so evaluating each line's
    normal against it gives the region's side at infinity exactly.
    """
    rays = ray_directions(lines)
    out = []
    for k in range(len(rays)):
        (x1, y1), (x2, y2) = rays[k], rays[(k + 1) % len(rays)]
        dx, dy = x1 + x2, y1 + y2
        out.append(tuple((ln.a * dx + ln.b * dy > 0) - (ln.a * dx + ln.b * dy < 0) for ln in lines))
    return out


def r_position_diagnostics(ps: PointSet, cert: RPositionCertificate) -> list[str]:
    """Everything wrong with a certificate; empty means it is valid."""
    problems: list[str] = []
    lines = cert.lines
    if len(lines) != ps.n:
        return [f"expected {ps.n} lines, got {len(lines)}"]
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            if lines[i].parallel_to(lines[j]):
                problems.append(f"lines {i} and {j} are parallel")
    if problems:
        return problems
    assign = cert.region_assignment
    if sorted(assign) != list(range(ps.size)):
        return ["region assignment is not a bijection onto the unbounded regions"]
    for i in range(ps.size):
        if (assign[(i + 1) % ps.size] - assign[i]) % ps.size != 1:
            problems.append(f"points {i} and {i + 1} are not in consecutive regions")
    expected = unbounded_sign_vectors(lines)
    for i, p in enumerate(ps.points):
        sv = tuple(ln.side(p) for ln in lines)
        if 0 in sv:
            problems.append(f"point {i} lies on line {sv.index(0)}")
        elif sv != expected[assign[i]]:
            problems.append(f"point {i} is not inside region {assign[i]}")
    return problems


def check_r_position(ps: PointSet, cert: RPositionCertificate) -> bool:
    return not r_position_diagnostics(ps, cert)


def _random_lines(n: int, rng: random.Random) -> list[Line]:
    while True:
        lines = []
        for j in range(n):
            theta = math.pi * (j + 0.5 + 0.6 * (rng.random() - 0.5)) / n
            dx, dy = round(1000 * math.cos(theta)), round(1000 * math.sin(theta))
            px, py = rng.randint(-50, 50), rng.randint(-50, 50)
            lines.append(Line.make(dy, -dx, dy * px - dx * py))
        if all(not lines[i].parallel_to(lines[j]) for i in range(n) for j in range(i + 1, n)):
            return lines


def gen_r_position(
    two_n: int, seed: int = 0, *, radius: int = RENDER_RADIUS, spread: float = 0.0, tries: int = 32
) -> tuple[PointSet, RPositionCertificate]:
    """Random R-position set: one point per unbounded region of n random lines.

    Each point sits on the angular bisector of its region's cone at distance
    ``radius * (1 - spread * u)`` for uniform u, so ``spread=0`` yields a set
    in convex position.
    """
    _require_even(two_n, 4)
    n = two_n // 2
    rng = random.Random(seed)
    failure = "no attempt made"
    for _ in range(tries):
        lines = _random_lines(n, rng)
        rays = ray_directions(lines)
        pts = []
        for k in range(two_n):
            a1 = math.atan2(rays[k][1], rays[k][0])
            a2 = math.atan2(rays[(k + 1) % two_n][1], rays[(k + 1) % two_n][0])
            gap = (a2 - a1) % (2 * math.pi)
            phi = a1 + gap / 2
            r = radius * (1 - spread * rng.random())
            pts.append(Point(round(r * math.cos(phi)), round(r * math.sin(phi))))
        triple = collinear_triple(pts)
        if triple is not None:
            failure = f"collinear points {triple}"
            continue
        ps = PointSet(pts, Config.RPOSITION)
        cert = RPositionCertificate(tuple(lines), tuple(range(two_n)))
        problems = r_position_diagnostics(ps, cert)
        if not problems:
            return ps, cert
        failure = problems[0]
    raise ConfigurationError(f"R-position generation failed after {tries} tries: {failure}")


_TWELVE_POINTS = (
    (260, -150), (150, 0), (130, 75), (150, 260), (0, 150), (-75, 130),
    (-260, 150), (-150, 0), (-130, -75), (-150, -260), (0, -150), (75, -130),
)
_TWELVE_SEGMENTS = (
    ((-12, 50), (12, -50)), ((50, 10), (-50, -10)), ((40, 30), (-40, -30)),
    ((13, 54), (-13, -54)), ((50, -12), (-50, 12)), ((37, -40), (-37, 40)),
)


def rposition_twelve() -> tuple[PointSet, RPositionCertificate]:
    """A fixed twelve-point R-position set that is not in convex position.

    Six triangles around the origin, each with one tip pushed outwards; six
    lines through the origin leave one point in every unbounded region.
    """
    ps = PointSet(tuple(Point(x, y) for x, y in _TWELVE_POINTS), Config.RPOSITION)
    lines = tuple(Line.through(Point(*a), Point(*b)) for a, b in _TWELVE_SEGMENTS)
    return ps, RPositionCertificate(lines, tuple((i + 10) % 12 for i in range(12)))


def rpost_hypothesis_violations(ps: PointSet) -> list[tuple[int, int]]:
    """Index pairs (i, j) breaking the same-side condition.

    For every i and every j = i + d (mod 2n) with odd d in 1..n, points i
    and j must lie on the same side of the line through i-1 and j+1.
    Pairs are taken in the index order of ``ps``.
    """
    m = ps.size
    bad = []
    for i in range(m):
        for d in range(1, ps.n + 1, 2):
            j = (i + d) % m
            a, b = (i - 1) % m, (j + 1) % m
            if orient_idx(ps, a, b, i) != orient_idx(ps, a, b, j):
                bad.append((i, j))
    return bad


def check_rpost_hypothesis(ps: PointSet) -> bool:
    return not rpost_hypothesis_violations(ps)


# -- general position ---------------------------------------------------------


def gen_general(two_n: int, seed: int = 0, *, box: int = 1 << 12, tries: int = 10_000) -> PointSet:
    """Uniform integer points in [0, box)^2, no three collinear, distinct x."""
    _require_even(two_n, 4)
    rng = random.Random(seed)
    pts: list[Point] = []
    xs: set[int] = set()
    budget = tries
    while len(pts) < two_n:
        if budget == 0:
            raise ConfigurationError(f"could not place {two_n} points in general position")
        budget -= 1
        p = Point(rng.randrange(box), rng.randrange(box))
        if p.x in xs:
            continue
        if any(orient(pts[i], pts[j], p) == 0 for i in range(len(pts)) for j in range(i + 1, len(pts))):
            continue
        pts.append(p)
        xs.add(p.x)
    return PointSet(pts, Config.GENERAL)


def gen_prism(two_n: int, *, radius: int = RENDER_RADIUS) -> PointSet:
    """Nested regular polygons: outer cycle o0.., inner cycle i0.. at half radius.

    The inner polygon is turned by half a step so no spoke is radial.
    """
    _require_even(two_n, 8)
    if two_n % 4:
        raise ConfigurationError("prism size must be divisible by 4 (even cycle length)")
    c = two_n // 2
    outer = _polygon(c, radius)
    inner = _polygon(c, radius // 2, math.pi / c)
    pts = outer + inner
    triple = collinear_triple(pts)
    if triple is not None:
        raise ConfigurationError(f"prism drawing has collinear points {triple}")
    labels = tuple(f"o{i}" for i in range(c)) + tuple(f"i{i}" for i in range(c))
    return PointSet(pts, Config.GENERAL, labels=labels)


def is_prism_layout(ps: PointSet) -> bool:
    c = ps.size // 2
    return ps.labels == tuple(f"o{i}" for i in range(c)) + tuple(f"i{i}" for i in range(c))


def ensure_general_position(ps: PointSet) -> None:
    triple = collinear_triple(ps.points)
    if triple is not None:
        raise GeneralPositionError(f"points {triple} are collinear")


def validate_pointset(ps: PointSet, cert: RPositionCertificate | None = None) -> bool:
    """Configuration-specific validity of a point set."""
    if ps.combinatorial:
        return embedding_agrees(ps)
    if collinear_triple(ps.points) is not None:
        return False
    if ps.config is Config.RPOSITION and cert is not None:
        return check_r_position(ps, cert)
    return True
