"""Brute-force ground truth on small point sets.

Nothing here relies on the constructions: non-crossing perfect matchings
are enumerated directly from the crossing predicate, and packings are found
by exhaustive clique search over them.
"""

from __future__ import annotations

import enum
import math
import os
import time
from dataclasses import dataclass, field
from typing import Iterator

from .geometry import Config, Edge, PointSet, boundary_edges_of, edges_cross
from .matching import Matching, MatchingFamily

DEFAULT_SIZE_LIMIT = 16
SIZE_LIMIT_ENV = "GEOMATCH_SIZE_LIMIT"
DEFAULT_WITNESS_CAP = 64


class OracleSizeError(ValueError):
    """The point set is larger than the enumeration guard allows."""


class Constraint(str, enum.Enum):
    NONE = "none"
    TRIANGLE_FREE = "trianglefree"
    PLANE_TRIANGLE_FREE = "plane-trianglefree"

    @classmethod
    def parse(cls, value: "Constraint | str | None") -> "Constraint":
        if value is None:
            return cls.NONE
        if isinstance(value, cls):
            return value
        aliases = {
            "none": cls.NONE,
            "trianglefree": cls.TRIANGLE_FREE,
            "triangle-free": cls.TRIANGLE_FREE,
            "trianglefreeunion": cls.TRIANGLE_FREE,
            "plane-trianglefree": cls.PLANE_TRIANGLE_FREE,
            "plane-triangle-free": cls.PLANE_TRIANGLE_FREE,
            "planetrianglefreeunion": cls.PLANE_TRIANGLE_FREE,
        }
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise ValueError(f"unknown constraint {value!r}") from None


def size_limit() -> int:
    raw = os.environ.get(SIZE_LIMIT_ENV)
    if raw is None:
        return DEFAULT_SIZE_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SIZE_LIMIT_ENV} must be an integer, got {raw!r}") from None


def _guard(ps: PointSet, override: bool) -> None:
    limit = size_limit()
    if ps.size > limit and not override:
        raise OracleSizeError(
            f"{ps.size} points exceed the oracle limit of {limit}; "
            f"pass override (--force) or raise {SIZE_LIMIT_ENV}"
        )


class _Pairs:
    """Index and crossing bitmasks for every pair of points."""

    def __init__(self, ps: PointSet) -> None:
        self.ps = ps
        m = ps.size
        self.edges = [Edge(a, b) for a in range(m) for b in range(a + 1, m)]
        self.index = {e: i for i, e in enumerate(self.edges)}
        self.cross = [0] * len(self.edges)
        for i, e in enumerate(self.edges):
            for j in range(i + 1, len(self.edges)):
                f = self.edges[j]
                if edges_cross(e, f, ps):
                    self.cross[i] |= 1 << j
                    self.cross[j] |= 1 << i

    def id(self, e: Edge) -> int:
        return self.index[e]


def _enumerate(pairs: _Pairs) -> list[tuple[int, ...]]:
    m = pairs.ps.size
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def rec(free: int, mask: int) -> None:
        if not free:
            out.append(tuple(chosen))
            return
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        w_bits = rest
        while w_bits:
            w = (w_bits & -w_bits).bit_length() - 1
            w_bits &= w_bits - 1
            eid = pairs.index[Edge(v, w)]
            if pairs.cross[eid] & mask:
                continue
            chosen.append(eid)
            rec(rest & ~(1 << w), mask | (1 << eid))
            chosen.pop()

    rec((1 << m) - 1, 0)
    return out


def enumerate_ncpms(ps: PointSet, *, override: bool = False) -> list[Matching]:
    """All non-crossing perfect matchings, in lexicographic order of sorted edge lists."""
    _guard(ps, override)
    pairs = _Pairs(ps)
    return [Matching(frozenset(pairs.edges[i] for i in ids)) for ids in _enumerate(pairs)]


@dataclass
class PackingResult:
    max_size: int
    witness_families: list[MatchingFamily]
    constraint: Constraint
    exhaustive: bool
    ncpm_count: int = 0
    stats: dict = field(default_factory=dict)


class _Search:
    """Edge-disjoint subfamilies of the NCPM list under a union constraint."""

    def __init__(self, ps: PointSet, constraint: Constraint, override: bool) -> None:
        _guard(ps, override)
        self.ps = ps
        self.constraint = constraint
        self.pairs = _Pairs(ps)
        self.ids = _enumerate(self.pairs)
        self.masks = []
        self.cross_masks = []
        for ids in self.ids:
            mask = 0
            cm = 0
            for e in ids:
                mask |= 1 << e
                cm |= self.pairs.cross[e]
            self.masks.append(mask)
            self.cross_masks.append(cm)
        count = len(self.ids)
        plane = constraint is Constraint.PLANE_TRIANGLE_FREE
        # pairwise compatibility: edge-disjoint and, for plane packings, crossing-free
        self.compat = [0] * count
        for i in range(count):
            for j in range(i + 1, count):
                if self.masks[i] & self.masks[j]:
                    continue
                if plane and self.cross_masks[i] & self.masks[j]:
                    continue
                self.compat[i] |= 1 << j
                self.compat[j] |= 1 << i
        self.nodes = 0

    def _adds_triangle(self, adj: list[int], k: int) -> bool:
        for e in self.ids[k]:
            a, b = self.pairs.edges[e]
            if adj[a] & adj[b]:
                return True
        return False

    def _with(self, adj: list[int], k: int) -> list[int]:
        new = list(adj)
        for e in self.ids[k]:
            a, b = self.pairs.edges[e]
            new[a] |= 1 << b
            new[b] |= 1 << a
        return new

    def families(self, target: int) -> Iterator[tuple[int, ...]]:
        """Every subfamily of exactly ``target`` matchings meeting the constraint."""
        check_tri = self.constraint is not Constraint.NONE
        chosen: list[int] = []

        def rec(cand: int, adj: list[int]) -> Iterator[tuple[int, ...]]:
            self.nodes += 1
            if len(chosen) == target:
                yield tuple(chosen)
                return
            if len(chosen) + bin(cand).count("1") < target:
                return
            bits = cand
            while bits:
                k = (bits & -bits).bit_length() - 1
                bits &= bits - 1
                if check_tri and self._adds_triangle(adj, k):
                    continue
                chosen.append(k)
                yield from rec(bits & self.compat[k], self._with(adj, k) if check_tri else adj)
                chosen.pop()

        yield from rec((1 << len(self.ids)) - 1, [0] * self.ps.size)

    def maximum(self, cap: int | None) -> tuple[int, list[tuple[int, ...]], bool]:
        check_tri = self.constraint is not Constraint.NONE
        best = 0
        found: list[tuple[int, ...]] = []
        complete = True
        chosen: list[int] = []

        def rec(cand: int, adj: list[int]) -> None:
            nonlocal best, found, complete
            self.nodes += 1
            size = len(chosen)
            if size > best:
                best, found = size, [tuple(chosen)]
            elif size == best and size > 0:
                if cap is None or len(found) < cap:
                    found.append(tuple(chosen))
                else:
                    complete = False
            bound = size + bin(cand).count("1")
            collecting = cap is None or len(found) < cap
            if bound < best or (bound == best and not collecting):
                if bound == best:
                    complete = False
                return
            bits = cand
            while bits:
                k = (bits & -bits).bit_length() - 1
                bits &= bits - 1
                if check_tri and self._adds_triangle(adj, k):
                    continue
                chosen.append(k)
                rec(bits & self.compat[k], self._with(adj, k) if check_tri else adj)
                chosen.pop()

        rec((1 << len(self.ids)) - 1, [0] * self.ps.size)
        return best, found, complete

    def family(self, ids: tuple[int, ...], method: str) -> MatchingFamily:
        ms = tuple(Matching(frozenset(self.pairs.edges[e] for e in self.ids[k])) for k in ids)
        return MatchingFamily(ms, method, {"constraint": self.constraint.value})


def max_packing(
    ps: PointSet,
    constraint: Constraint | str | None = None,
    *,
    witness_cap: int | None = DEFAULT_WITNESS_CAP,
    exhaustive: bool = False,
    override: bool = False,
) -> PackingResult:
    """Largest edge-disjoint family of NCPMs whose union meets the constraint.

    With ``exhaustive=True`` every maximum family is returned; otherwise at
    most ``witness_cap`` are kept and the result says whether that was all.
    """
    c = Constraint.parse(constraint)
    search = _Search(ps, c, override)
    t0 = time.perf_counter()
    best, found, complete = search.maximum(None if exhaustive else witness_cap)
    fams = [search.family(ids, "oracle-packing") for ids in found]
    stats = {"nodes": search.nodes, "seconds": round(time.perf_counter() - t0, 3)}
    return PackingResult(best, fams, c, complete, len(search.ids), stats)


def families_of_size(
    ps: PointSet, size: int, constraint: Constraint | str | None = None, *, override: bool = False
) -> Iterator[MatchingFamily]:
    search = _Search(ps, Constraint.parse(constraint), override)
    for ids in search.families(size):
        yield search.family(ids, "oracle-family")


def convex_parity_edges(two_n: int) -> frozenset[Edge]:
    """Every pair of a convex 2n-gon whose index sum is odd."""
    return frozenset(Edge(a, b) for a in range(two_n) for b in range(a + 1, two_n) if (a + b) % 2)


def all_max_packings_union_check(ps: PointSet, n: int | None = None, *, override: bool = False) -> bool:
    """Every edge-disjoint family of n NCPMs on convex 2n points unions to the parity graph."""
    if ps.config is not Config.CONVEX:
        raise ValueError("all_max_packings_union_check needs a convex point set")
    n = ps.n if n is None else n
    if n != ps.n:
        raise ValueError(f"n={n} does not match the point set size {ps.size}")
    target = convex_parity_edges(ps.size)
    seen = False
    for fam in families_of_size(ps, n, None, override=override):
        seen = True
        if frozenset(fam.all_edges()) != target:
            return False
    return seen


# -- wheel biconditional --------------------------------------------------------


@dataclass
class WheelEquivalenceReport:
    n: int
    k: int
    mode: str
    status: str
    families: int = 0
    two_boundary: int = 0
    consecutive: int = 0
    counterexamples: list[MatchingFamily] = field(default_factory=list)
    reason: str = ""
    seconds: float = 0.0

    @property
    def holds(self) -> bool:
        return self.status == "passed"


def _radials_consecutive(radials: set[int], m: int) -> bool:
    if len(radials) <= 1 or len(radials) == m:
        return True
    return sum(1 for r in radials if (r - 1) % m not in radials) == 1


def wheel_equivalence_report(
    n: int, *, time_budget: float | None = None, counterexample_cap: int = 8, override: bool = False
) -> WheelEquivalenceReport:
    """Test 'every matching has two boundary edges iff radials are consecutive'.

    Every family of k = ceil(n/2) edge-disjoint NCPMs with triangle-free union
    on the 2n-point wheel is examined.  Odd n is the theorem's setting; even
    n is run the same way as an exploratory report.  If ``time_budget``
    seconds elapse the report is marked skipped with the reason.
    """
    from .configurations import gen_wheel

    if n < 3:
        raise ValueError("wheel equivalence needs n >= 3")
    k = math.ceil(n / 2)
    mode = "theorem" if n % 2 else "exploratory"
    rep = WheelEquivalenceReport(n, k, mode, "running")
    ps = gen_wheel(2 * n)
    boundary = boundary_edges_of(ps)
    m = ps.circle_count
    t0 = time.perf_counter()
    for fam in families_of_size(ps, k, Constraint.TRIANGLE_FREE, override=override):
        rep.families += 1
        two = all(len(mt.edges & boundary) == 2 for mt in fam.matchings)
        radials = {e.a for mt in fam.matchings for e in mt.edges if e.b == ps.center}
        cons = _radials_consecutive(radials, m)
        rep.two_boundary += two
        rep.consecutive += cons
        if two != cons and len(rep.counterexamples) < counterexample_cap:
            rep.counterexamples.append(fam)
        if time_budget is not None and time.perf_counter() - t0 > time_budget:
            rep.status = "skipped"
            rep.reason = f"time budget of {time_budget}s exhausted after {rep.families} families"
            break
    else:
        if rep.families == 0:
            rep.status = "skipped"
            rep.reason = "no family of the required size exists"
        else:
            rep.status = "failed" if rep.counterexamples else "passed"
    rep.seconds = round(time.perf_counter() - t0, 3)
    return rep


def wheel_equivalence_check(n: int, *, time_budget: float | None = None) -> bool:
    """True iff the biconditional held on every family; odd n only."""
    if n % 2 == 0:
        raise ValueError("the biconditional is stated for odd n; use wheel_equivalence_report for even n")
    return wheel_equivalence_report(n, time_budget=time_budget).holds
