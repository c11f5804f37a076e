import pytest

from geomatch.configurations import (
    ConfigurationError,
    RPositionCertificate,
    check_r_position,
    check_rpost_hypothesis,
    embedding_agrees,
    gen_convex,
    gen_general,
    gen_prism,
    gen_r_position,
    gen_wheel,
    is_prism_layout,
    r_position_diagnostics,
    rposition_twelve,
    rpost_hypothesis_violations,
    validate_pointset,
)
from geomatch.geometry import Config, Point, PointSet, collinear_triple, convex_hull
from geomatch.serialization import digest, dumps, pointset_to_json

from helpers import convex_as_rposition


def test_gen_convex():
    ps = gen_convex(12)
    assert ps.size == 12 and ps.config is Config.CONVEX
    assert ps.labels == tuple(f"v{i}" for i in range(12))
    assert gen_convex(4).size == 4
    with pytest.raises(ConfigurationError):
        gen_convex(3)


def test_gen_wheel():
    assert gen_wheel(14).circle_count == 13
    assert gen_wheel(18).circle_count == 17
    with pytest.raises(ConfigurationError):
        gen_wheel(4)


@pytest.mark.parametrize("two_n", range(4, 32, 2))
def test_combinatorial_drawings_agree(two_n):
    assert embedding_agrees(gen_convex(two_n))
    if two_n >= 6:
        assert embedding_agrees(gen_wheel(two_n))


def test_gen_r_position():
    ps, cert = gen_r_position(12, seed=1)
    assert check_r_position(ps, cert)
    ps4, cert4 = gen_r_position(4, seed=5)
    assert ps4.size == 4 and len(cert4.lines) == 2 and check_r_position(ps4, cert4)
    with pytest.raises(ConfigurationError):
        gen_r_position(7)


def test_gen_r_position_deterministic():
    a = gen_r_position(10, seed=3, spread=0.2)
    b = gen_r_position(10, seed=3, spread=0.2)
    assert a == b


def test_check_r_position_convex_polygon():
    ps, cert = convex_as_rposition(12)
    assert check_r_position(ps, cert)
    assert check_rpost_hypothesis(ps)


def test_check_r_position_rejects_swap():
    ps, cert = gen_r_position(12, seed=1)
    swapped = list(cert.region_assignment)
    swapped[0], swapped[5] = swapped[5], swapped[0]
    bad = RPositionCertificate(cert.lines, tuple(swapped))
    assert not check_r_position(ps, bad)
    assert r_position_diagnostics(ps, bad)
    assert not check_r_position(ps, RPositionCertificate(cert.lines[:-1], cert.region_assignment))


def test_check_r_position_rejects_parallel_lines():
    ps, cert = gen_r_position(8, seed=2)
    lines = (cert.lines[0], cert.lines[0]) + cert.lines[2:]
    assert any("parallel" in p for p in r_position_diagnostics(ps, RPositionCertificate(lines, cert.region_assignment)))


def test_twelve_point_layout():
    ps, cert = rposition_twelve()
    assert check_r_position(ps, cert)
    assert check_rpost_hypothesis(ps)
    assert len(convex_hull(ps)) < 12  # not in convex position
    assert collinear_triple(ps.points) is None


def test_hypothesis_holds_in_convex_position():
    for two_n in (8, 10, 12, 16):
        for seed in range(5):
            ps, _ = gen_r_position(two_n, seed)
            assert check_rpost_hypothesis(ps)


@pytest.mark.parametrize("slot", range(12))
def test_hypothesis_fails_on_relabelled_wheel(slot):
    w = gen_wheel(12)
    circle = list(w.points[:-1])
    order = circle[:slot] + [w.points[-1]] + circle[slot:]
    ps = PointSet(tuple(order), Config.RPOSITION)
    assert not check_rpost_hypothesis(ps)
    assert rpost_hypothesis_violations(ps)


def test_gen_general():
    ps = gen_general(16, 7)
    assert collinear_triple(ps.points) is None
    assert len({p.x for p in ps.points}) == 16
    with pytest.raises(ConfigurationError):
        gen_general(2)


def test_gen_general_snapshot():
    # frozen from a reference run; guards against sampler drift
    assert digest(dumps(pointset_to_json(gen_general(8, 0)))) == SNAPSHOT_8_0
    assert digest(dumps(pointset_to_json(gen_general(16, 7)))) == SNAPSHOT_16_7


SNAPSHOT_8_0 = "20fd57b42525ce251034de82b025e6dd93bd6e3edef670e3f1687c0f2850bcfb"
SNAPSHOT_16_7 = "6f8352df3b41c2547d276d532108c7345b4d6d1cebe7fe5599d7b42d2b9d0194"


def test_gen_prism():
    ps = gen_prism(8)
    assert ps.size == 8 and is_prism_layout(ps)
    assert collinear_triple(gen_prism(12).points) is None
    with pytest.raises(ConfigurationError):
        gen_prism(10)


def test_validate_pointset():
    assert validate_pointset(gen_convex(10))
    assert validate_pointset(gen_general(10, 2))
    ps, cert = gen_r_position(8, 1)
    assert validate_pointset(ps, cert)
    line = PointSet((Point(0, 0), Point(1, 1), Point(2, 2), Point(3, 0)), Config.GENERAL)
    assert not validate_pointset(line)
