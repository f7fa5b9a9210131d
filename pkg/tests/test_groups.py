import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burniat import cases as C
from burniat import groups as G
from burniat import lattice as L

GAMMA6 = G.gamma6()

even_vectors = st.lists(st.integers(-5, 5), min_size=4, max_size=4).filter(lambda v: sum(v) % 2 == 0)


def test_order_and_generators():
    assert GAMMA6.order == 48
    assert G.COLOR_CYCLE.order() == 3
    for s in (G.S_R, G.S_G, G.S_B, G.CREMONA):
        assert s.order() == 2


def test_representation_is_homomorphism():
    for a, b in itertools.product(GAMMA6, repeat=2):
        ab = a * b
        assert G.matmul(a.matrix_N6, b.matrix_N6) == ab.matrix_N6
        assert G.matmul(a.matrix_NY, b.matrix_NY) == ab.matrix_NY


def test_matrices_intertwine_quotient():
    for g in GAMMA6:
        assert L.matmul(g.matrix_N6, L.QUOTIENT_MATRIX) == L.matmul(L.QUOTIENT_MATRIX, g.matrix_NY)
        assert abs(L.det(g.matrix_N6)) == 1


def test_faithful_on_quotient():
    assert len({g.matrix_N6 for g in GAMMA6}) == 48


def test_generator_matrices():
    assert G.S_R.matrix_N6 == ((1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    assert G.CREMONA.matrix_N6 == tuple(tuple(-x for x in r) for r in L.identity(4))


@settings(max_examples=60, deadline=None)
@given(even_vectors)
def test_orbit_stabilizer(v):
    orbit = G.orbit_vectors(GAMMA6, v)
    stab = G.vector_stabilizer(GAMMA6, v)
    assert len(orbit) * stab.order == GAMMA6.order
    assert all(w in L.N_6 for w in orbit)


def test_orbit_stabilizer_on_basic_vectors():
    for v in ((2, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 1), (0, 1, 0, 1)):
        assert len(G.orbit_vectors(GAMMA6, v)) * G.vector_stabilizer(GAMMA6, v).order == 48


def test_inverse_and_identity():
    for g in GAMMA6:
        assert (g * g.inverse()).is_identity
        assert G.matmul(g.matrix_N6, g.inverse().matrix_N6) == L.identity(4)


def test_perm_from_cycles_formats():
    a = G.perm_from_cycles("(R0R1)(G2G3)")
    b = G.perm_from_cycles("(R0 R1)(G2 G3)")
    assert a == b


def test_sigma_involution_mixing_boundary():
    assert (G.SIGMA * G.SIGMA).is_identity
    assert G.SIGMA.matrix_N6 is None
    with pytest.raises(G.MissingMatrix):
        G.SIGMA.act((1, 1, 0, 0))


def test_extend_rejects_color_mixing():
    bad = G.GroupElement(G.perm_from_cycles("(R0 G0)"))
    with pytest.raises(G.NotPartitionPreserving):
        G.extend_group(GAMMA6, bad)


def test_triple_stabilizer_validates_colors():
    with pytest.raises(G.GroupError):
        G.stabilizer_of_triple_set(GAMMA6, [("R1", "R2", "B1")])


def test_gamma5_permutes_last_coordinates_up_to_sign():
    group = C.relabeling_group(C.CaseId.DEG5).group
    assert group.order == 6 and group.is_abelian()
    allowed = set()
    for p in itertools.permutations(range(3)):
        m = [[1, 0, 0, 0]] + [[0] + [1 if p[i] == j else 0 for j in range(3)] for i in range(3)]
        allowed.add(tuple(map(tuple, m)))
        allowed.add(tuple(tuple(-x for x in r) for r in m))
    assert all(g.matrix_N6 in allowed for g in group)
    assert G.CREMONA in group


def test_kernel_requires_invariance():
    sub = L.Sublattice.from_generators(4, [(1, -1, 0, 0)])
    with pytest.raises(G.DoesNotPreserve):
        G.kernel_of_lattice_action(GAMMA6, sub)


def test_small_group_labels():
    assert G.identify_small_group(GAMMA6) == "unrecognized(48)"
    assert G.identify_small_group(G.PermGroup.generate([G.S_R, G.S_G])) == "C2×C2"
    assert G.identify_small_group(G.PermGroup.generate([G.COLOR_CYCLE])) == "C3"


def test_restricted_matrix_4b_is_diagonal_signs():
    sub = C.case_spec("4b").sublattice
    group = C.relabeling_group("4b").group
    mats = {G.restricted_matrix(g, sub) for g in group}
    assert mats == {((a, 0), (0, b)) for a in (1, -1) for b in (1, -1)}
