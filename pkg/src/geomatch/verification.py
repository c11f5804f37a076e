"""Verdicts on matchings, families and their union graphs.

Each boolean check has a ``find_*`` companion returning a witness (the
crossing pair, triangle, odd-side edge ...) or None, which the CLI report
prints on failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .geometry import Config, Edge, PointSet, boundary_edges_of, convex_hull, edges_cross, sides_of
from .matching import Matching, MatchingFamily


class VerificationError(ValueError):
    pass


@dataclass
class GeomGraph:
    n_vertices: int
    adj: list[set[int]]
    attribution: dict[Edge, int] = field(default_factory=dict)
    pointset: PointSet | None = None

    @property
    def edges(self) -> list[Edge]:
        return sorted(self.attribution)

    @property
    def n_edges(self) -> int:
        return len(self.attribution)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


# -- single matchings ---------------------------------------------------------


def find_matching_defect(m: Matching, ps: PointSet) -> str | None:
    seen: dict[int, Edge] = {}
    for e in m.sorted_edges():
        for v in e:
            if not 0 <= v < ps.size:
                return f"vertex {v} out of range in edge {tuple(e)}"
            if v in seen:
                return f"vertex {v} covered by {tuple(seen[v])} and {tuple(e)}"
            seen[v] = e
    missing = [v for v in range(ps.size) if v not in seen]
    if missing:
        return f"vertices {missing} uncovered"
    return None


def is_perfect_matching(m: Matching, ps: PointSet) -> bool:
    return find_matching_defect(m, ps) is None


def find_crossing(edges: Iterable[Edge], ps: PointSet) -> tuple[Edge, Edge] | None:
    es = sorted(edges)
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            if edges_cross(es[i], es[j], ps):
                return es[i], es[j]
    return None


def is_noncrossing(m: Matching, ps: PointSet) -> bool:
    return find_crossing(m.edges, ps) is None


def find_odd_split(m: Matching, ps: PointSet) -> Edge | None:
    """A matching edge between hull vertices that leaves odd parts, if any."""
    hull = set(convex_hull(ps))
    for e in m.sorted_edges():
        if e.a in hull and e.b in hull:
            left, right = sides_of(ps, e)
            if len(left) % 2 or len(right) % 2:
                return e
    return None


def count_boundary_edges(m: Matching, ps: PointSet) -> int:
    return len(m.edges & boundary_edges_of(ps))


# -- families -----------------------------------------------------------------


def find_shared_edge(f: MatchingFamily) -> tuple[Edge, int, int] | None:
    owner: dict[Edge, int] = {}
    for i, m in enumerate(f.matchings):
        for e in m.sorted_edges():
            if e in owner:
                return e, owner[e], i
            owner[e] = i
    return None


def family_edge_disjoint(f: MatchingFamily) -> bool:
    return find_shared_edge(f) is None


def union_graph(f: MatchingFamily, ps: PointSet | None = None) -> GeomGraph:
    shared = find_shared_edge(f)
    if shared is not None:
        e, i, j = shared
        raise VerificationError(f"edge {tuple(e)} is in matchings {i} and {j}")
    if ps is not None:
        nv = ps.size
    else:
        nv = max((e.b for m in f.matchings for e in m.edges), default=-1) + 1
    adj: list[set[int]] = [set() for _ in range(nv)]
    attribution: dict[Edge, int] = {}
    for i, m in enumerate(f.matchings):
        for e in m.edges:
            adj[e.a].add(e.b)
            adj[e.b].add(e.a)
            attribution[e] = i
    return GeomGraph(nv, adj, attribution, ps)


def find_triangle(g: GeomGraph) -> tuple[int, int, int] | None:
    for e in g.edges:
        common = g.adj[e.a] & g.adj[e.b]
        if common:
            return (e.a, e.b, min(common))
    return None


def is_triangle_free(g: GeomGraph) -> bool:
    return find_triangle(g) is None


class Maximality(NamedTuple):
    turan_count: bool
    abstract_maximal: bool

    def __bool__(self) -> bool:
        return self.turan_count and self.abstract_maximal


def find_addable_pair(g: GeomGraph) -> tuple[int, int] | None:
    """A non-adjacent pair whose edge would not close a triangle."""
    for u in range(g.n_vertices):
        for v in range(u + 1, g.n_vertices):
            if v not in g.adj[u] and not (g.adj[u] & g.adj[v]):
                return (u, v)
    return None


def is_maximal_triangle_free(g: GeomGraph) -> Maximality:
    """Turán count (n^2 edges on 2n vertices) and abstract maximality."""
    half, odd = divmod(g.n_vertices, 2)
    turan = g.n_edges == half * (half + odd)
    return Maximality(turan, find_addable_pair(g) is None)


def find_union_crossing(f: MatchingFamily, ps: PointSet) -> tuple[Edge, Edge] | None:
    return find_crossing((e for m in f.matchings for e in m.edges), ps)


def is_plane_union(f: MatchingFamily, ps: PointSet) -> bool:
    if not family_edge_disjoint(f):
        raise VerificationError("family is not edge-disjoint")
    return find_union_crossing(f, ps) is None


# -- wheel-specific -------------------------------------------------------------


def _boundary_index(boundary: Edge, modulus: int) -> int:
    a, b = boundary
    if b == a + 1:
        return a
    if (a, b) == (0, modulus - 1):
        return modulus - 1
    raise ValueError(f"{tuple(boundary)} is not a boundary edge of a {modulus}-cycle")


def is_p1_parallel(e: Edge, boundary: Edge, n: int) -> bool:
    """k+l = 2i+1 (mod 2n) with k+l <= 2n-1, for i in (n-1)/2 .. n-1."""
    if n % 2 == 0:
        raise ValueError("p1-parallelism is defined for odd n")
    i = _boundary_index(boundary, 2 * n - 1)
    if not (n - 1) // 2 <= i <= n - 1:
        raise ValueError(f"boundary index {i} outside the p1 range")
    s = e.a + e.b
    return s % (2 * n) == (2 * i + 1) % (2 * n) and s <= 2 * n - 1


def is_p2_parallel(e: Edge, boundary: Edge, n: int) -> bool:
    """k+l = 2i+1 (mod 2n-1) on the upper arc, for i in 3(n-1)/2 .. 2n-2.

    The upper-arc condition is read as k+l >= 2n-1; every edge nested
    around a boundary edge of that arc satisfies it.
    """
    if n % 2 == 0:
        raise ValueError("p2-parallelism is defined for odd n")
    i = _boundary_index(boundary, 2 * n - 1)
    if not 3 * (n - 1) // 2 <= i <= 2 * n - 2:
        raise ValueError(f"boundary index {i} outside the p2 range")
    s = e.a + e.b
    return s % (2 * n - 1) == (2 * i + 1) % (2 * n - 1) and s >= 2 * n - 1


def _require_wheel(ps: PointSet | None) -> PointSet:
    if ps is None or ps.config is not Config.WHEEL:
        raise ValueError("radial queries need a wheel point set")
    return ps


def radial_edges(g: GeomGraph) -> list[int]:
    ps = _require_wheel(g.pointset)
    if ps.center >= g.n_vertices:
        return []
    return sorted(g.adj[ps.center])


def radial_consecutive(g: GeomGraph) -> bool:
    ps = _require_wheel(g.pointset)
    radials = set(radial_edges(g))
    m = ps.circle_count
    if len(radials) <= 1 or len(radials) == m:
        return True
    # a cyclic run has exactly one member whose predecessor is missing
    starts = [r for r in radials if (r - 1) % m not in radials]
    return len(starts) == 1


def exists_separating_diagonal(g: GeomGraph, run: Sequence[int]) -> bool:
    """Whether some edge of a convex union graph cuts off exactly ``run``.

    ``run`` must be consecutive hull vertices with 1 <= len < 2n.  The edge's
    endpoints lie outside the run, one side of it holds exactly the run and
    the other side the remaining vertices.
    """
    ps = g.pointset
    if ps is None or ps.config is not Config.CONVEX:
        raise ValueError("separating diagonals are defined on convex point sets")
    m = ps.size
    k = set(run)
    if not 1 <= len(k) < m or len(k) != len(run):
        raise ValueError("run must be a proper non-empty set of vertices")
    start = run[0]
    if any((start + t) % m not in k for t in range(len(k))):
        raise ValueError("run must list consecutive vertices starting from its first element")
    for e in g.edges:
        if e.a in k or e.b in k:
            continue
        left, right = sides_of(ps, e)
        if left == k or right == k:
            return True
    return False


# -- reports ----------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: object = None

    def to_json(self) -> dict:
        out: dict = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


DEFAULT_CHECKS = ("perfect", "noncrossing", "edge-disjoint", "triangle-free", "even-split")
KNOWN_CHECKS = DEFAULT_CHECKS + ("maximal", "plane", "radial-consecutive", "boundary-count")


def _pairs(edges: Iterable[Edge]) -> list[list[int]]:
    return [[e.a, e.b] for e in edges]


def run_checks(ps: PointSet, f: MatchingFamily, checks: Iterable[str] = DEFAULT_CHECKS) -> list[CheckResult]:
    """Evaluate named checks; ``boundary-count=N`` demands N per matching."""
    results: list[CheckResult] = []
    disjoint: bool | None = None
    for raw in checks:
        name, _, arg = raw.partition("=")
        if name == "perfect":
            bad = [(i, find_matching_defect(m, ps)) for i, m in enumerate(f.matchings)]
            bad = [(i, why) for i, why in bad if why]
            results.append(CheckResult(raw, not bad, {"matching": bad[0][0], "defect": bad[0][1]} if bad else None))
        elif name == "noncrossing":
            wit = None
            for i, m in enumerate(f.matchings):
                pair = find_crossing(m.edges, ps)
                if pair:
                    wit = {"matching": i, "crossing": _pairs(pair)}
                    break
            results.append(CheckResult(raw, wit is None, wit))
        elif name == "edge-disjoint":
            shared = find_shared_edge(f)
            disjoint = shared is None
            wit = None if shared is None else {"edge": list(shared[0]), "matchings": [shared[1], shared[2]]}
            results.append(CheckResult(raw, disjoint, wit))
        elif name == "even-split":
            wit = None
            for i, m in enumerate(f.matchings):
                e = find_odd_split(m, ps)
                if e is not None:
                    wit = {"matching": i, "edge": list(e)}
                    break
            results.append(CheckResult(raw, wit is None, wit))
        elif name in ("triangle-free", "maximal", "radial-consecutive"):
            if disjoint is None:
                disjoint = family_edge_disjoint(f)
            if not disjoint:
                results.append(CheckResult(raw, False, {"reason": "family is not edge-disjoint"}))
                continue
            g = union_graph(f, ps)
            if name == "triangle-free":
                tri = find_triangle(g)
                results.append(CheckResult(raw, tri is None, None if tri is None else {"triangle": list(tri)}))
            elif name == "maximal":
                verdict = is_maximal_triangle_free(g)
                wit = None
                if not verdict:
                    wit = {"edges": g.n_edges, "turan_count": verdict.turan_count, "abstract_maximal": verdict.abstract_maximal}
                    pair = find_addable_pair(g)
                    if pair:
                        wit["addable"] = list(pair)
                results.append(CheckResult(raw, bool(verdict) and is_triangle_free(g), wit))
            else:
                ok = radial_consecutive(g)
                results.append(CheckResult(raw, ok, None if ok else {"radials": radial_edges(g)}))
        elif name == "plane":
            pair = find_union_crossing(f, ps)
            results.append(CheckResult(raw, pair is None, None if pair is None else {"crossing": _pairs(pair)}))
        elif name == "boundary-count":
            want = int(arg)
            counts = [count_boundary_edges(m, ps) for m in f.matchings]
            ok = all(c == want for c in counts)
            results.append(CheckResult(raw, ok, None if ok else {"counts": counts}))
        else:
            raise ValueError(f"unknown check {raw!r}")
    return results
