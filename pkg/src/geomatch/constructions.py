"""Explicit matching families and the recursive separating-line construction.

A *stone* is the one edge of a bridge matching whose ends lie on the same
side of the splitting line: when the larger side has two points more than
the smaller, those two are matched to each other.
"""

from __future__ import annotations

import functools
import itertools
import math
from typing import Iterable, Iterator, Sequence

from .configurations import (
    _angle_cmp,
    check_rpost_hypothesis,
    gen_convex,
    gen_wheel,
    is_prism_layout,
    rpost_hypothesis_violations,
)
from .geometry import Config, Edge, GeneralPositionError, Line, PointSet, edges_cross, orient
from .matching import Matching, MatchingFamily


class ConstructionError(ValueError):
    """A construction's precondition does not hold for the given input."""


def _as_pointset(arg: int | PointSet, factory, config: Config) -> PointSet:
    if isinstance(arg, PointSet):
        if arg.config is not config:
            raise ConstructionError(f"expected a {config.value} point set, got {arg.config.value}")
        return arg
    return factory(arg)


# -- parallel classes -----------------------------------------------------------


def parallel_classes(two_n: int) -> list[frozenset[Edge]]:
    """Classes {a+b = 2i+1 mod 2n}, i = 0..n-1, over indices 0..2n-1."""
    n = two_n // 2
    classes: list[set[Edge]] = [set() for _ in range(n)]
    for a in range(two_n):
        for b in range(a + 1, two_n):
            s = (a + b) % two_n
            if s % 2:
                classes[(s - 1) // 2].add(Edge(a, b))
    return [frozenset(c) for c in classes]


def is_p_parallel(e: Edge | tuple[int, int], boundary: Edge | tuple[int, int], two_n: int) -> bool:
    """Whether e is parallel to the boundary edge (i, i+1) of a convex 2n-gon."""
    bi, bj = sorted(boundary)
    if not (bj - bi == 1 or (bi, bj) == (0, two_n - 1)):
        raise ValueError(f"{tuple(boundary)} is not a boundary edge")
    return (e[0] + e[1]) % two_n == (bi + bj) % two_n


def convex_family(arg: int | PointSet) -> MatchingFamily:
    ps = _as_pointset(arg, gen_convex, Config.CONVEX)
    ms = tuple(Matching(c) for c in parallel_classes(ps.size))
    return MatchingFamily(ms, "convex-parallel", {"two_n": ps.size})


def rposition_family(ps: PointSet) -> MatchingFamily:
    """Parity classes on an R-position set, checked with exact predicates."""
    if ps.config is not Config.RPOSITION:
        raise ConstructionError("rposition_family needs an rposition point set")
    if not check_rpost_hypothesis(ps):
        bad = rpost_hypothesis_violations(ps)
        raise ConstructionError(f"same-side hypothesis fails at index pairs {bad[:4]}")
    ms = []
    for i, cls in enumerate(parallel_classes(ps.size)):
        es = sorted(cls)
        for e1, e2 in itertools.combinations(es, 2):
            if edges_cross(e1, e2, ps):
                raise ConstructionError(f"class {i}: edges {tuple(e1)} and {tuple(e2)} cross")
        ms.append(Matching(cls))
    return MatchingFamily(tuple(ms), "rposition-parallel", {"two_n": ps.size})


# -- wheels ---------------------------------------------------------------------


def _wheel_matching(pairs: Iterable[tuple[int, int]], center: int, radial: int, mod: int) -> Matching:
    edges = {Edge.of(radial % mod, center)}
    for a, b in pairs:
        edges.add(Edge.of(a % mod, b % mod))
    return Matching(frozenset(edges))


def wheel_family_b2(arg: int | PointSet) -> MatchingFamily:
    """ceil(n/2) matchings with two boundary edges each on a 2n-point wheel."""
    if isinstance(arg, int) and arg < 3:
        raise ConstructionError("wheel_family_b2 needs n >= 3")
    ps = _as_pointset(arg if not isinstance(arg, int) else 2 * arg, gen_wheel, Config.WHEEL)
    n = ps.n
    if n < 3:
        raise ConstructionError("wheel_family_b2 needs n >= 3")
    mod = 2 * n - 1
    delta = n % 2
    half = (n - delta) // 2
    ms = []
    for i in range(1, (n + 1) // 2 + 1):
        pairs = []
        for j in range(1, half + 1):
            pairs.append((i + j - 1, n - j + i - delta))
            pairs.append((n - 1 - delta + i + j, i - j - 1))
        ms.append(_wheel_matching(pairs, ps.center, i - 1, mod))
    return MatchingFamily(tuple(ms), "wheel-b2", {"n": n})


def _b3_first(n: int) -> list[tuple[int, int]]:
    m, r = divmod(n, 3)
    if r == 0:
        return (
            [(3 * m - i, 3 * m - 1 + i) for i in range(1, m)]
            + [(j, 2 * m + 1 - j) for j in range(1, m + 1)]
            + [(-j, j - 2 * m - 1) for j in range(1, m + 1)]
        )
    if r == 1:
        return (
            [(3 * m - 1 - i, 3 * m - 2 + i) for i in range(1, m + 1)]
            + [(j, 2 * m - 1 - j) for j in range(1, m)]
            + [(-q, q - 2 * m - 3) for q in range(1, m + 2)]
        )
    return (
        [(3 * m + 2 - i, 3 * m + 1 + i) for i in range(1, m + 2)]
        + [(j, 2 * m + 1 - j) for j in range(1, m + 1)]
        + [(-j, j - 2 * m - 1) for j in range(1, m + 1)]
    )


def wheel_family_b3(arg: int | PointSet) -> MatchingFamily:
    """ceil(2n/3) - 1 matchings with three boundary edges each, for n >= 8."""
    if isinstance(arg, int) and arg < 8:
        raise ConstructionError("wheel_family_b3 needs n >= 8")
    ps = _as_pointset(arg if not isinstance(arg, int) else 2 * arg, gen_wheel, Config.WHEEL)
    n = ps.n
    if n < 8:
        raise ConstructionError("wheel_family_b3 needs n >= 8")
    mod = 2 * n - 1
    k = math.ceil(2 * n / 3) - 1
    base = _b3_first(n)
    ms = []
    for p in range(1, k + 1):
        s = 2 * p - 2
        m = _wheel_matching(((a + s, b + s) for a, b in base), ps.center, s, mod)
        if len(m) != n:
            raise ConstructionError(f"b=3 matching {p} has {len(m)} distinct edges, expected {n}")
        ms.append(m)
    return MatchingFamily(tuple(ms), "wheel-b3", {"n": n})


# -- prism ----------------------------------------------------------------------


def prism_family(ps: PointSet) -> MatchingFamily:
    """Spokes, even cycle edges and odd cycle edges of the nested-polygon prism."""
    c = ps.size // 2
    if not is_prism_layout(ps):
        raise ConstructionError("prism_family needs a point set from gen_prism")
    if c % 2:
        raise ConstructionError("prism cycle length must be even")
    spokes = Matching(frozenset(Edge(i, c + i) for i in range(c)))

    def cycle_edges(parity: int) -> Matching:
        es = set()
        for i in range(parity, c, 2):
            es.add(Edge.of(i, (i + 1) % c))
            es.add(Edge.of(c + i, c + (i + 1) % c))
        return Matching(frozenset(es))

    return MatchingFamily((spokes, cycle_edges(0), cycle_edges(1)), "prism", {"cycle": c})


# -- separating lines and bridge matchings ---------------------------------------------


def _directions() -> Iterator[tuple[int, int]]:
    """Primitive integer directions in order of growing size, starting with (1, 0)."""
    yield (1, 0)
    yield (0, 1)
    for s in itertools.count(2):
        for p in range(1, s):
            q = s - p
            if math.gcd(p, q) == 1:
                yield (p, q)
                yield (p, -q)


def _dot(ps: PointSet, i: int, d: tuple[int, int]) -> int:
    p = ps.points[i]
    return p.x * d[0] + p.y * d[1]


def _cut(ps: PointSet, order: Sequence[int], d: tuple[int, int], t: int) -> tuple[Line, list[int], list[int]]:
    """Line normal to d between the t-th and (t+1)-th points of ``order``."""
    lo, hi = _dot(ps, order[t - 1], d), _dot(ps, order[t], d)
    line = Line.make(2 * d[0], 2 * d[1], lo + hi)
    return line, list(order[:t]), list(order[t:])


def find_separating_line(
    ps: PointSet, subset: Iterable[int], n1: int, n2: int, *, max_tries: int = 2000
) -> tuple[Line, list[int], list[int]]:
    """A line with n1 points of ``subset`` strictly on one side and n2 on the other.

    Returns the line with the two index lists; the first n1 are the lower
    points along the first direction whose projections are all distinct.
    """
    idx = sorted(set(subset))
    if n1 + n2 != len(idx) or n1 < 1 or n2 < 1:
        raise ConstructionError(f"cannot split {len(idx)} points into {n1} + {n2}")
    for d in itertools.islice(_directions(), max_tries):
        keys = {_dot(ps, i, d) for i in idx}
        if len(keys) == len(idx):
            order = sorted(idx, key=lambda i: _dot(ps, i, d))
            return _cut(ps, order, d, n1)
    raise ConstructionError("no direction with distinct projections found")


def _exact_orient(ps: PointSet, i: int, j: int, k: int) -> int:
    s = orient(ps.points[i], ps.points[j], ps.points[k])
    if s == 0:
        raise GeneralPositionError(f"points {i}, {j}, {k} are collinear")
    return s


def _hull(ps: PointSet, idx: Sequence[int]) -> list[int]:
    """Counterclockwise hull of the given indices (monotone chain, exact)."""
    pts = sorted(set(idx), key=lambda i: (ps.points[i].x, ps.points[i].y))
    if len(pts) <= 2:
        return pts

    def chain(seq):
        out: list[int] = []
        for i in seq:
            while len(out) >= 2 and _exact_orient(ps, out[-2], out[-1], i) < 0:
                out.pop()
            out.append(i)
        return out

    lower, upper = chain(pts), chain(reversed(pts))
    return lower[:-1] + upper[:-1]


def tangent_pair(ps: PointSet, s1: Iterable[int], s2: Iterable[int], line: Line) -> tuple[int, int]:
    """The bridge (u1 in s1, u2 in s2) on the +u side, u the direction of ``line``.

    Taken as the edge of the merged hull that crosses the line with outward
    normal pointing along u = (-b, a); every other point is then strictly on
    the far side, against u.
    """
    a_side, b_side = set(s1), set(s2)
    if not a_side or not b_side:
        raise ConstructionError("tangent_pair needs two non-empty sides")
    u = (-line.b, line.a)
    hull = _hull(ps, sorted(a_side | b_side))
    if len(hull) == 2:
        p, q = hull
        return (p, q) if p in a_side else (q, p)
    for k in range(len(hull)):
        p, q = hull[k], hull[(k + 1) % len(hull)]
        if (p in a_side) == (q in a_side):
            continue
        ex = ps.points[q].x - ps.points[p].x
        ey = ps.points[q].y - ps.points[p].y
        if ey * u[0] - ex * u[1] > 0:
            return (p, q) if p in a_side else (q, p)
    raise ConstructionError("no bridge found; the line does not separate the sides")


def tangent_pair_bruteforce(ps: PointSet, s1: Iterable[int], s2: Iterable[int], line: Line) -> tuple[int, int]:
    """Pairwise search for the same bridge, used to cross-check tangent_pair."""
    a_side, b_side = sorted(set(s1)), sorted(set(s2))
    if not a_side or not b_side:
        raise ConstructionError("tangent_pair needs two non-empty sides")
    u = (-line.b, line.a)
    rest = a_side + b_side
    for p in a_side:
        for q in b_side:
            # orient the pair so that u points to its right-hand side
            ex = ps.points[q].x - ps.points[p].x
            ey = ps.points[q].y - ps.points[p].y
            sgn = 1 if ey * u[0] - ex * u[1] > 0 else -1
            if all(_exact_orient(ps, p, q, r) == sgn for r in rest if r not in (p, q)):
                return (p, q)
    raise ConstructionError("no bridge found; the line does not separate the sides")


def cross_match(ps: PointSet, big: Iterable[int], small: Iterable[int], line: Line) -> Matching:
    """Match ``small`` into ``big`` by repeated top bridges; a leftover pair becomes the stone."""
    s1, s2 = set(big), set(small)
    if len(s1) - len(s2) not in (0, 2):
        raise ConstructionError(f"side sizes {len(s1)} and {len(s2)} differ by neither 0 nor 2")
    edges = set()
    while s2:
        u1, u2 = tangent_pair(ps, s1, s2, line)
        edges.add(Edge.of(u1, u2))
        s1.remove(u1)
        s2.remove(u2)
    stones = frozenset()
    if s1:
        stone = Edge.of(*sorted(s1))
        edges.add(stone)
        stones = frozenset({stone})
    return Matching(frozenset(edges), stones)


def split_sizes(m: int) -> tuple[int, int]:
    """Even (larger, smaller) side sizes for a block of m points."""
    if m % 2 or m < 2:
        raise ConstructionError(f"block size must be even and positive, got {m}")
    h = m // 2
    return (h, h) if h % 2 == 0 else (h + 1, h - 1)


def algorithm_a(ps: PointSet, block: Iterable[int] | None = None) -> Matching:
    """Non-crossing perfect matching of a block by separating-line bridges."""
    idx = sorted(set(range(ps.size) if block is None else block))
    if len(idx) == 2:
        return Matching(frozenset({Edge.of(*idx)}))
    big, small = split_sizes(len(idx))
    line, s1, s2 = find_separating_line(ps, idx, big, small)
    return cross_match(ps, s1, s2, line)


def _rot_cw(w: tuple[int, int]) -> tuple[int, int]:
    return (w[1], -w[0])


def _rot_ccw(w: tuple[int, int]) -> tuple[int, int]:
    return (-w[1], w[0])


def stone_direction(ps: PointSet, block: Iterable[int], stone: Edge, *, max_tries: int = 500) -> tuple[int, int]:
    """Integer d along which both stone ends project strictly below the rest.

    Projections on d are also pairwise distinct over the block.
    """
    idx = sorted(set(block))
    u, v = stone
    if u not in idx or v not in idx:
        raise ConstructionError(f"stone {tuple(stone)} is not inside the block")
    others = [r for r in idx if r not in stone]
    if not others:
        return (1, 0)
    ws = []
    for r in others:
        for s in stone:
            ws.append((ps.points[r].x - ps.points[s].x, ps.points[r].y - ps.points[s].y))
    ws.sort(key=functools.cmp_to_key(_angle_cmp))
    w_max = w_min = None
    for k in range(len(ws)):
        a, b = ws[k], ws[(k + 1) % len(ws)]
        if a[0] * b[1] - a[1] * b[0] < 0:
            w_max, w_min = a, b
            break
    if w_max is None:
        raise ConstructionError(f"no line separates stone {tuple(stone)} from the rest of its block")
    e1, e2 = _rot_cw(w_max), _rot_ccw(w_min)
    for s in itertools.count(2):
        if s - 1 > max_tries:
            break
        for p in range(1, s):
            d = (p * e1[0] + (s - p) * e2[0], p * e1[1] + (s - p) * e2[1])
            g = math.gcd(*d)
            d = (d[0] // g, d[1] // g)
            if not all(d[0] * w[0] + d[1] * w[1] > 0 for w in ws):
                continue
            if len({_dot(ps, i, d) for i in idx}) == len(idx):
                return d
    raise ConstructionError("no stone direction with distinct projections found")


def generic_directions(ps: PointSet, idx: Sequence[int]) -> list[tuple[int, int]]:
    """One integer direction inside every open cell between critical directions.

    Critical directions are normal to some pair of points; inside each cell
    the projection order of ``idx`` is fixed and strict, so together these
    directions realise every line-separable prefix.
    """
    crit = []
    for i, j in itertools.combinations(idx, 2):
        w = (ps.points[j].x - ps.points[i].x, ps.points[j].y - ps.points[i].y)
        crit.append(_rot_ccw(w))
        crit.append(_rot_cw(w))
    crit.sort(key=functools.cmp_to_key(_angle_cmp))
    out = []
    for k in range(len(crit)):
        a, b = crit[k], crit[(k + 1) % len(crit)]
        if a[0] * b[1] - a[1] * b[0] <= 0:
            continue
        d = (a[0] + b[0], a[1] + b[1])
        g = math.gcd(*d)
        out.append((d[0] // g, d[1] // g))
    return out


def stone_split(ps: PointSet, block: Iterable[int], stone: Edge) -> tuple[list[int], list[int], Line]:
    """Split a block into (B1, B2) with the stone ends as the two lowest points of B2.

    |B2| is m/2 when m/2 is even and m/2 - 1 otherwise, so B2 is the smaller
    (or equal) part.  Raises ConstructionError when no line cuts the stone
    pair off from the rest of the block.
    """
    idx = sorted(set(block))
    big, small = split_sizes(len(idx))
    if small < 2:
        raise ConstructionError(f"block of {len(idx)} points is too small to keep its stone apart")
    d = stone_direction(ps, idx, stone)
    order = sorted(idx, key=lambda i: _dot(ps, i, d))
    line, b2, b1 = _cut(ps, order, d, small)
    return b1, b2, line


def _prefix_split(ps: PointSet, idx: list[int], stone: Edge) -> tuple[list[int], list[int], Line] | None:
    """Any separable smaller part of the standard size that holds both stone ends."""
    big, small = split_sizes(len(idx))
    for d in generic_directions(ps, idx):
        order = sorted(idx, key=lambda i: _dot(ps, i, d))
        if set(stone) <= set(order[:small]):
            line, b2, b1 = _cut(ps, order, d, small)
            return b1, b2, line
    return None


def _avoiding_split(ps: PointSet, idx: list[int], stone: Edge) -> tuple[list[int], list[int], Line, Matching] | None:
    """Any standard-size split whose bridge matching does not reuse the stone."""
    big, small = split_sizes(len(idx))
    for d in generic_directions(ps, idx):
        order = sorted(idx, key=lambda i: _dot(ps, i, d))
        for t in {small, big}:
            line, lo, hi = _cut(ps, order, d, t)
            b1, b2 = (hi, lo) if t == small else (lo, hi)
            m = cross_match(ps, b1, b2, line)
            if stone not in m.edges:
                return b1, b2, line, m
    return None


def _split_live(
    ps: PointSet, block: list[int], live: Edge, final: bool
) -> tuple[list[int], list[int], Line, Matching, str]:
    try:
        b1, b2, line = stone_split(ps, block, live)
        return b1, b2, line, cross_match(ps, b1, b2, line), "stone-extreme"
    except ConstructionError:
        pass
    found = _prefix_split(ps, block, live)
    if found is not None:
        b1, b2, line = found
        return b1, b2, line, cross_match(ps, b1, b2, line), "stone-prefix"
    if final:
        # no later round will split this block, so only the stone edge itself must be avoided
        avoid = _avoiding_split(ps, block, live)
        if avoid is not None:
            return (*avoid, "stone-avoided")
    raise ConstructionError(f"no admissible split keeps stone {tuple(live)} apart in block {block}")


def _line_json(line: Line) -> list[int]:
    return [line.a, line.b, line.c]


def general_family(ps: PointSet, rounds: int | None = None) -> MatchingFamily:
    """floor(log2 n) edge-disjoint non-crossing perfect matchings.

    Round one runs algorithm_a on the whole set.  Every later round splits
    each block in two and bridges across the split.  A block carrying a live
    stone is split so the stone stays together in the smaller part, and the
    fresh stone (if any) arises in the larger part.  Every edge of a round
    joins the two parts of its block, except fresh stones, so no edge of an
    earlier round can recur.
    """
    for i, j, k in itertools.combinations(range(ps.size), 3):
        if orient(ps.points[i], ps.points[j], ps.points[k]) == 0:
            raise GeneralPositionError(f"points {i}, {j}, {k} are collinear")
    n = ps.n
    k = n.bit_length() - 1 if rounds is None else rounds
    if k < 1:
        raise ConstructionError("general_family needs n >= 2")
    blocks: list[tuple[list[int], Edge | None]] = [(list(range(ps.size)), None)]
    matchings = []
    tree = []
    for rnd in range(1, k + 1):
        edges: set[Edge] = set()
        stones: set[Edge] = set()
        children: list[tuple[list[int], Edge | None]] = []
        for block, live in sorted(blocks, key=lambda b: b[0][0]):
            record = {"round": rnd, "block": sorted(block), "stone": None if live is None else list(live)}
            if len(block) == 2:
                if live is not None or rnd < k:
                    raise ConstructionError(f"round {rnd}: block {block} is too small for the remaining rounds")
                edges.add(Edge.of(*block))
                record.update(split="pair", line=None, parts=[sorted(block)], new_stone=None)
                tree.append(record)
                continue
            if live is not None:
                b1, b2, line, m, how = _split_live(ps, block, live, rnd == k)
            else:
                big, small = split_sizes(len(block))
                line, b1, b2 = find_separating_line(ps, block, big, small)
                m, how = cross_match(ps, b1, b2, line), "even"
            new = next(iter(m.stones), None)
            record.update(
                split=how,
                line=_line_json(line),
                parts=[sorted(b1), sorted(b2)],
                new_stone=None if new is None else list(new),
            )
            tree.append(record)
            edges |= m.edges
            stones |= m.stones
            children.append((sorted(b1), new))
            # a stone stays live only while both of its ends share a block
            children.append((sorted(b2), live if live is not None and set(live) <= set(b2) else None))
        matchings.append(Matching(frozenset(edges), frozenset(stones)))
        blocks = children
    return MatchingFamily(tuple(matchings), "general-recursive", {"two_n": ps.size, "rounds": k}, tuple(tree))
