import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from burniat import lattice as L

small = st.integers(-6, 6)


def matrices(max_rows=4, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def _sympy_factors(a):
    d = sympy_snf(sympy.Matrix(a), domain=sympy.ZZ)
    return tuple(abs(int(d[i, i])) for i in range(min(d.shape)) if d[i, i] != 0)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_snf_matches_sympy(a):
    u, d, v = L.smith_normal_form(a)
    assert L.matmul(L.matmul(u, a), v) == d
    assert abs(L.det(u)) == 1 and abs(L.det(v)) == 1
    diag = [d[i][i] for i in range(min(len(d), len(d[0]))) if d[i][i]]
    assert all(b % a_ == 0 for a_, b in zip(diag, diag[1:]))
    assert L.invariant_factors(a) == _sympy_factors(a)


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_hnf_spans_same_lattice(a):
    ncols = len(a[0])
    h = L.hermite_normal_form(a, ncols)
    sub = L.Sublattice(ncols, h)
    assert all(tuple(row) in sub for row in a)
    back = L.Sublattice.from_generators(ncols, a)
    assert back.basis == h
    # HNF is idempotent and insensitive to row order
    assert L.hermite_normal_form(h, ncols) == h
    assert L.hermite_normal_form(list(reversed(a)), ncols) == h


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_kernel_is_kernel(a):
    ncols = len(a[0])
    ker = L.integer_kernel(a, ncols)
    for k in ker:
        assert L.matvec(a, k) == (0,) * len(a)
    assert len(ker) == ncols - sympy.Matrix(a).rank()
    # saturated: the kernel equals its rational span intersected with Z^n
    if ker:
        assert L.Sublattice(ncols, ker).is_saturated_in(L.Sublattice.full(ncols))


@settings(max_examples=100, deadline=None)
@given(st.lists(small, min_size=4, max_size=4))
def test_coordinates_round_trip(v):
    v = tuple(v)
    if sum(v) % 2:
        with pytest.raises(L.NotMember):
            L.N_6.coordinates(v)
    else:
        assert L.N_6.from_coordinates(L.N_6.coordinates(v)) == v


def test_quotient_lattice_basis():
    assert L.N_6.basis == ((1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1), (0, 0, 0, 2))
    assert L.N_6.index_in(L.Sublattice.full(4)) == 2


def test_two_z_squared_from_congruences():
    sub = L.sublattice_from_congruences(2, [((1, 0), 2), ((0, 1), 2)])
    assert sub == L.Sublattice.from_generators(2, [(2, 0), (0, 2)])
    # independent check by enumeration of residues
    for v in itertools.product(range(-4, 5), repeat=2):
        assert (v in sub) == (v[0] % 2 == 0 and v[1] % 2 == 0)


def test_even_sum_by_enumeration():
    for v in itertools.product(range(-2, 3), repeat=4):
        assert (v in L.N_6) == (sum(v) % 2 == 0)


def test_exact_sequence():
    image, kernel = L.image_and_kernel(L.QUOTIENT_MAP)
    assert image == L.N_6
    assert kernel == L.N_SIGMA
    assert L.invariant_factors(L.QUOTIENT_MATRIX) == (1, 1, 1, 2)


def test_map_rejects_bad_codomain():
    with pytest.raises(L.LatticeError):
        L.LatticeMap(((1, 0, 0, 0),), L.Sublattice.full(4), L.Sublattice.from_generators(1, [(2,)]))


def test_character_pushforward_examples():
    assert L.character_pushforward((1, 0, 1, 0, 1, 0)) == L.Covector((1, 1, 1, 1), 2)
    assert L.character_pushforward((0, 1, 0, 1, 0, 1)) == L.Covector((1, -1, -1, -1), 2)
    assert L.character_pushforward((1, 0, 0, 1, 0, 1)).values == tuple(
        Fraction(x, 2) for x in (1, 1, -1, -1)
    )


def test_pushforward_inverts_pullback():
    for e in itertools.product((0, 1), repeat=6):
        try:
            m = L.character_pushforward(e)
        except L.LatticeError:
            continue
        assert L.character_pullback(m) == tuple(Fraction(x) for x in e)


def test_pushforward_rejects_non_invariant():
    with pytest.raises(L.NotInvariant):
        L.character_pushforward((1, 0, 0, 0, 0, 0))
    with pytest.raises(L.LatticeError):
        L.character_pushforward((1, 0, 1))


def test_covector_pairing():
    c = L.Covector((1, 1, 1, 1), 2)
    assert c.pair((1, 1, 0, 0)) == 1
    with pytest.raises(L.LatticeError):
        c.pair((1, 0, 0, 0))
    assert L.Covector.from_json(c.to_json()) == c
    assert L.Covector((2, 4), 2).is_integral


def test_sublattice_json_round_trip():
    sub = L.N_6
    assert L.Sublattice.from_json(sub.to_json()) == sub


def test_primitive_generator():
    assert L.N_6.primitive_generator((2, 2, 0, 0)) == (1, 1, 0, 0)
    assert L.N_6.primitive_generator((2, 0, 0, 0)) == (2, 0, 0, 0)
