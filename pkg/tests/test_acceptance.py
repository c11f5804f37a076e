"""Acceptance criteria, one test (or parametrized group) per criterion."""

import math
import random
import time

import pytest

from geomatch.configurations import (
    check_rpost_hypothesis,
    embedding_agrees,
    gen_convex,
    gen_general,
    gen_prism,
    gen_r_position,
    gen_wheel,
    rposition_twelve,
)
from geomatch.constructions import (
    convex_family,
    general_family,
    prism_family,
    rposition_family,
    wheel_family_b2,
    wheel_family_b3,
)
from geomatch.geometry import Config, Edge, PointSet, edges_cross, proper_cross_exact
from geomatch.oracle import Constraint, all_max_packings_union_check, enumerate_ncpms, max_packing, wheel_equivalence_report
from geomatch.verification import (
    count_boundary_edges,
    exists_separating_diagonal,
    find_odd_split,
    is_maximal_triangle_free,
    is_plane_union,
    is_triangle_free,
    radial_consecutive,
    run_checks,
    union_graph,
)

criterion = pytest.mark.criterion


def wheel_edges(n, pairs):
    x = 2 * n - 1
    return {Edge.of(x if a == "x" else a, x if b == "x" else b) for a, b in pairs}


def verified(ps, fam):
    results = run_checks(ps, fam, ["perfect", "noncrossing", "edge-disjoint", "triangle-free"])
    return [r.to_json() for r in results if not r.passed]


@criterion(1, "convex packing number is n and every maximum packing unions to C_{2n,n}")
def test_ac1_convex_packing_and_uniqueness():
    t0 = time.perf_counter()
    for two_n in (4, 6, 8, 10):
        ps = gen_convex(two_n)
        assert max_packing(ps, None).max_size == two_n // 2
        assert all_max_packings_union_check(ps, two_n // 2)
    assert time.perf_counter() - t0 < 60


@criterion(2, "convex_family(12) is the 36-edge maximal triangle-free C_{12,6}")
def test_ac2_convex_construction():
    ps = gen_convex(12)
    fam = convex_family(ps)
    g = union_graph(fam, ps)
    assert g.n_edges == 36
    assert is_triangle_free(g)
    verdict = is_maximal_triangle_free(g)
    assert verdict.turan_count and verdict.abstract_maximal
    assert set(g.edges) == {Edge(a, b) for a in range(12) for b in range(a + 1, 12) if (a + b) % 2}
    assert not verified(ps, fam)


WHEEL7_FIRST = [(0, "x"), (1, 6), (2, 5), (3, 4), (7, 12), (8, 11), (9, 10)]


@criterion(3, "wheel b=2 family: ceil(n/2) matchings, 2 boundary edges, consecutive radials")
@pytest.mark.parametrize("n", range(3, 16))
def test_ac3_wheel_b2(n):
    ps = gen_wheel(2 * n)
    fam = wheel_family_b2(ps)
    assert len(fam) == math.ceil(n / 2)
    for m in fam:
        assert count_boundary_edges(m, ps) == 2
        assert sum(ps.center in e for e in m.edges) == 1
    g = union_graph(fam, ps)
    assert is_triangle_free(g) and radial_consecutive(g)
    assert not verified(ps, fam)
    if n == 7:
        assert fam[0].edges == wheel_edges(7, WHEEL7_FIRST)


B3_FIRST = {
    9: [(0, "x"), (8, 9), (7, 10), (1, 6), (2, 5), (3, 4), (16, 11), (15, 12), (14, 13)],
    8: [(0, "x"), (7, 8), (6, 9), (5, 10), (1, 4), (2, 3), (14, 11), (13, 12)],
    10: [(0, "x"), (7, 8), (6, 9), (5, 10), (1, 4), (2, 3), (18, 11), (17, 12), (16, 13), (15, 14)],
}


@criterion(4, "wheel b=3 family: ceil(2n/3)-1 matchings with 3 boundary edges each")
@pytest.mark.parametrize("n", range(8, 16))
def test_ac4_wheel_b3(n):
    ps = gen_wheel(2 * n)
    fam = wheel_family_b3(ps)
    assert len(fam) == math.ceil(2 * n / 3) - 1
    assert all(count_boundary_edges(m, ps) == 3 for m in fam)
    assert is_triangle_free(union_graph(fam, ps))
    assert not verified(ps, fam)
    if n in B3_FIRST:
        assert fam[0].edges == wheel_edges(n, B3_FIRST[n])


@criterion(5, "wheel biconditional (two boundary edges iff consecutive radials)")
@pytest.mark.parametrize("n", [3, 5])
def test_ac5_wheel_biconditional(n):
    rep = wheel_equivalence_report(n, time_budget=600)
    if rep.status == "skipped":
        pytest.skip(f"n={n}: {rep.reason}")
    assert rep.status == "passed", rep.counterexamples
    assert rep.families > 0


def _rposition_sets():
    sets = []
    for two_n in (8, 10, 12):
        for spread in (0.0, 0.2):
            for seed in range(10):
                sets.append(gen_r_position(two_n, seed, spread=spread)[0])
    sets.append(rposition_twelve()[0])
    return sets


@criterion(6, "R-position families: n matchings, n^2-edge maximal triangle-free union")
def test_ac6_rposition():
    for ps in _rposition_sets():
        assert ps.config is Config.RPOSITION  # exact-coordinate predicates
        assert check_rpost_hypothesis(ps)
        fam = rposition_family(ps)
        assert len(fam) == ps.n
        g = union_graph(fam, ps)
        assert g.n_edges == ps.n**2
        verdict = is_maximal_triangle_free(g)
        assert verdict.turan_count and verdict.abstract_maximal
        assert not verified(ps, fam)


@criterion(7, "general position: floor(log2 n) verified matchings on 400 random sets")
@pytest.mark.parametrize("two_n", [8, 12, 16, 24])
def test_ac7_general_position(two_n):
    failures = []
    for seed in range(100):
        ps = gen_general(two_n, seed)
        fam = general_family(ps)
        k = int(math.floor(math.log2(two_n // 2)))
        bad = verified(ps, fam)
        if len(fam) != k or bad:
            failures.append((seed, len(fam), bad))
    assert failures == []


def _structured_sets():
    out = [gen_convex(t) for t in range(4, 14, 2)]
    out += [gen_wheel(t) for t in range(6, 16, 2)]
    out += [gen_r_position(t, s, spread=sp)[0] for t in (8, 10, 12) for s in range(2) for sp in (0.0, 0.2)]
    out += [rposition_twelve()[0], gen_prism(8), gen_prism(12)]
    return out


@criterion(8, "every hull-to-hull edge of every enumerated NCPM splits the rest evenly")
def test_ac8_even_split():
    violations = []
    sets = [gen_general(8, 5000 + s) for s in range(50)] + _structured_sets()
    for ps in sets:
        for m in enumerate_ncpms(ps):
            e = find_odd_split(m, ps)
            if e is not None:
                violations.append((ps.config.value, ps.size, m.sorted_edges(), e))
    assert violations == []


@criterion(9, "plane packings: in [2,3] for general 8-sets, <=2 convex, prism attains 3")
def test_ac9_plane_packing_bounds():
    values = [max_packing(gen_general(8, s), Constraint.PLANE_TRIANGLE_FREE).max_size for s in range(20)]
    assert all(2 <= v <= 3 for v in values), values
    for two_n in (8, 10):
        assert max_packing(gen_convex(two_n), Constraint.PLANE_TRIANGLE_FREE).max_size <= 2
    ps = gen_prism(8)
    fam = prism_family(ps)
    assert len(fam) == 3
    assert is_plane_union(fam, ps)
    assert is_triangle_free(union_graph(fam, ps))
    assert not verified(ps, fam)
    assert max_packing(ps, Constraint.PLANE_TRIANGLE_FREE).max_size == 3


@criterion(10, "separating diagonal exists iff the run K has even length")
@pytest.mark.parametrize("n", [3, 4, 5])
def test_ac10_separating_diagonal(n):
    ps = gen_convex(2 * n)
    g = union_graph(convex_family(ps), ps)
    for start in range(2 * n):
        for length in range(1, 2 * n):
            run = [(start + t) % (2 * n) for t in range(length)]
            assert exists_separating_diagonal(g, run) == (length % 2 == 0), run


@criterion(11, "combinatorial and exact crossing predicates agree on 10,000 edge pairs")
def test_ac11_backend_agreement():
    rng = random.Random(20240611)
    embeddings = {}
    for m in range(5, 26):
        ps = gen_wheel(m + 1) if m % 2 else gen_convex(m)
        assert embedding_agrees(ps)
        embeddings[m] = (ps, PointSet(ps.points, Config.GENERAL))
    disagreements = 0
    for trial in range(10_000):
        ps, exact = embeddings[5 + trial % 21]
        a, b, c, d = rng.sample(range(ps.size), 4)
        e, f = Edge.of(a, b), Edge.of(c, d)
        if edges_cross(e, f, ps) != proper_cross_exact(e, f, exact):
            disagreements += 1
    assert disagreements == 0
