import pytest

from burniat import cases as C
from burniat import lattice as L


@pytest.mark.parametrize("case", list(C.CaseId))
def test_sublattice_matches_closed_form(case):
    spec = C.case_spec(case)
    assert spec.sublattice == C.CLOSED_FORM_LATTICES[case]
    assert spec.sublattice.rank == spec.degree - 2
    assert spec.sublattice.is_saturated_in(L.N_6)


def test_case_parsing():
    assert C.CaseId.parse("deg4a") is C.CaseId.DEG4A
    assert C.CaseId.parse("5") is C.CaseId.DEG5
    with pytest.raises(ValueError):
        C.CaseId.parse("7")


def test_triples():
    assert C.triple_of(C.monomial(2, 1, 1)) == ("R2", "G1", "B1")
    with pytest.raises(ValueError):
        C.triple_of((1, 1, 0, 0, 1, 0))


@pytest.mark.parametrize("case", list(C.CaseId))
def test_case_fan_rays_in_sublattice(case):
    fan = C.build_case_fan(case)
    sub = C.case_spec(case).sublattice
    assert all(r in sub for r in fan.rays)
    assert "A" not in fan.ray_types


def test_group_data():
    expect = {"3": (6, 3, 2), "4a": (12, 2, 6), "4b": (4, 1, 4), "5": (6, 1, 6)}
    for case, (order, kernel, quotient) in expect.items():
        rg = C.relabeling_group(case)
        assert (rg.group.order, rg.kernel.order, rg.faithful_quotient_order) == (order, kernel, quotient)


def test_deg3_kernel_is_color_cycle():
    rg = C.relabeling_group("3")
    assert all(g.order() in (1, 3) for g in rg.kernel)


def test_extended_4a():
    ext = C.extended_group_4a()
    z = C.center_4a()
    assert ext.order == 24 and z.order == 2
    assert C.relabeling_group("4a").kernel == z


def test_fcurves():
    assert [len(C.f_curves_in_case(c)) for c in C.CaseId] == [0, 0, 1, 3]
    for c in C.CaseId:
        assert len(C.f_curves_in_case(c)) + len(C.transversal_fcurves(c)) == 6


def test_fcurve_exponents():
    inside = C.f_curves_in_case("5")
    assert {fc.torus_exponents.index(-1) for fc in inside} == {1, 2, 3}


def test_boundary_counts():
    totals = {c.value: C.boundary_divisors(c).total for c in C.CaseId}
    assert totals == {"3": 2, "4a": 1, "4b": 5, "5": 7}
    assert C.boundary_divisors("4a").points == {"E": 1}
    assert C.boundary_divisors("5").divisors == {"B": 1, "C": 1, "D": 1, "E": 1, "G": 1, "H": 2}
