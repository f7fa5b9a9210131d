import random

import pytest

from burniat import cases as C
from burniat import fans as F
from burniat import groups as G
from burniat import lattice as L

Z2 = L.Sublattice.full(2)


def plain(rays):
    return [F.TypedRay(tuple(r), "") for r in rays]


def test_ray_census():
    sizes = {k: len(v) for k, v in F.ray_orbits().items()}
    assert sizes == {"A": 2, "B": 12, "C": 16, "D": 12}
    assert len(F.all_rays()) == 42


def test_classify_ray():
    assert F.classify_ray((-2, 0, 0, 0)) == "A"
    assert F.classify_ray((0, 1, 0, -1)) == "D"
    with pytest.raises(F.NotARay):
        F.classify_ray((3, 1, 0, 0))


def test_overlapping_cones_rejected():
    fan = F.Fan.from_cones(Z2, plain([(1, 0), (0, 1), (1, 1)]), [((1, 0), (0, 1)), ((1, 0), (1, 1))])
    assert not F.validate_fan(fan)
    with pytest.raises(F.InvalidFan, match="common face"):
        F.check_fan(fan)


def test_reference_fans():
    assert F.validate_fan(F.P1_FAN) and F.is_complete(F.P1_FAN)
    assert F.validate_fan(F.HEXAGON_FAN) and F.is_complete(F.HEXAGON_FAN)
    assert len(F.OCTAGON_FAN.max_cones) == 8


def test_single_cone_not_complete():
    fan = F.Fan.from_cones(Z2, plain([(1, 0), (0, 1)]), [((1, 0), (0, 1))])
    assert F.validate_fan(fan)
    assert not F.is_complete(fan)


def test_smoothness():
    assert not F.is_smooth_cone(F.Cone(Z2, ((1, 0), (1, 2))))
    assert F.is_smooth_cone(F.Cone(Z2, ((1, 0), (1, 1))))


def test_hexagon_completion_from_one_cone():
    rays = plain([(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)])
    fan = F.complete_from_seed(Z2, rays, [((1, 0), (1, 1))])
    assert len(fan.max_cones) == 6
    assert F.is_complete(fan)
    assert F.fan_isomorphic_2d(fan, F.HEXAGON_FAN) is not None


def test_completion_determinism_under_seed_permutation():
    spec = C.case_spec("5")
    rays = F.restrict_rays(F.all_rays(), spec.sublattice)
    group = C.relabeling_group("5").group
    seeds = list(C.DEG5_SEED_CONES.values())
    reference = C.build_case_fan("5").dumps()
    rng = random.Random(0)
    for _ in range(2):
        rng.shuffle(seeds)
        shuffled = [tuple(rng.sample(c, len(c))) for c in seeds]
        fan = F.complete_from_seed(spec.sublattice, list(reversed(rays)), shuffled, group)
        assert fan.dumps() == reference


def test_deg5_completion_adds_one_bcd_orbit():
    seeded = C.seed_orbit_cones()
    assert len(seeded) == 26
    fan = C.build_case_fan("5")
    final = {tuple(sorted(fan.rays[i] for i in c)) for c in fan.max_cones}
    added = final - seeded
    assert len(added) == 6
    e1, e2, e3 = C.E1, C.E2, C.E3
    extra = tuple(sorted((e1, C._half(e1, e3), C._half(e1, e2, -1))))
    assert extra in added
    group = C.relabeling_group("5").group
    assert {tuple(sorted(g.act(v) for v in extra)) for g in group} == added
    index = {r: i for i, r in enumerate(fan.rays)}
    for c in added:
        assert "".join(sorted(fan.ray_types[index[v]] for v in c)) == "BCD"


def test_json_round_trip_bytes():
    for case in C.CaseId:
        text = C.build_case_fan(case).dumps()
        again = F.Fan.loads(text)
        F.check_fan(again)
        assert again.dumps() == text


def test_isomorphism_symmetry_and_failure():
    square = F.standard_fan(2, [(1, 0), (0, 1), (-1, 0), (0, -1)])
    assert F.fan_isomorphic_2d(square, F.HEXAGON_FAN) is None
    for fan in (C.build_case_fan("4a"), C.build_case_fan("4b")):
        target = F.HEXAGON_FAN if len(fan.rays) == 6 else F.OCTAGON_FAN
        assert F.fan_isomorphic_2d(fan, target) is not None
        assert F.fan_isomorphic_2d(target, fan) is not None


def test_4b_ray_orbits():
    fan = C.build_case_fan("4b")
    orbits = F.orbits_of_rays(fan, C.relabeling_group("4b").group)
    assert sorted(len(o.rays) for o in orbits) == [2, 2, 4]
    assert sorted(o.kind for o in orbits) == ["B", "C", "D"]


def test_euler_characteristic_deg5():
    assert F.euler_characteristic(C.build_case_fan("5")) == (18, 48, 32)


def test_orbits_require_invariant_fan():
    fan = C.build_case_fan("4b")
    with pytest.raises(F.FanError):
        F.orbits_of_rays(fan, G.gamma6())
