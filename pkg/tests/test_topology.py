from fractions import Fraction

import pytest

from nonkahler.exact import RationalMatrix
from nonkahler.kummer import (
    THETA_FORM,
    GaussianMatrix2,
    IntersectionForm,
    kummer_action,
    wedge_pairing,
)
from nonkahler.io import parse_matrix
from nonkahler.topology import (
    GateError,
    MabCohomology,
    build_mab_ring,
    check_gate,
    formality_witness,
    formality_witness_for_action,
    hard_lefschetz,
    lefschetz_matrix,
    symplectic_class,
    wang_cohomology,
)

from conftest import SPOT_MATRICES, numeric_nullity


@pytest.mark.parametrize("text", ["1,0;0,1", "-1,0;0,-1", "i,0;0,-i", "1,1;0,1", "0,-1;1,0"])
def test_gate_rejects_small_trace(text):
    a = parse_matrix(text)
    with pytest.raises(GateError, match=r"\|tr\(A\)\| > 2"):
        check_gate(a)
    with pytest.raises(GateError):
        build_mab_ring(a)


@pytest.mark.parametrize("text, betti", [
    ("1,1;1,2", (1, 2, 11, 20, 11, 2, 1)),
    ("1+1i,1i;1,1", (1, 2, 7, 12, 7, 2, 1)),
    ("2,-1+4i;1,2i", (1, 2, 13, 24, 13, 2, 1)),
])
def test_betti_spot_values(text, betti):
    assert build_mab_ring(parse_matrix(text)).betti == betti


@pytest.mark.parametrize("text", SPOT_MATRICES)
def test_betti_against_float_wang_sequence(text):
    g = kummer_action(parse_matrix(text)).matrix
    k = numeric_nullity(g - RationalMatrix.identity(22))
    # b_j(N) = 1, 1, k, k, 1, 1 and M = S^1 x N
    bn = [1, 1, k, k, 1, 1]
    expected = tuple(sum(bn[j - i] for i in (0, 1) if 0 <= j - i < 6) for j in range(7))
    assert wang_cohomology(g).betti_n == tuple(bn)
    assert build_mab_ring(parse_matrix(text)).betti == expected


def test_wang_identity_monodromy():
    w = wang_cohomology(RationalMatrix.identity(22))
    assert w.betti_n == (1, 1, 22, 22, 1, 1)
    assert w.euler_characteristic() == 0


@pytest.mark.parametrize("text", SPOT_MATRICES[:3])
def test_ring_axioms(text):
    ring = build_mab_ring(parse_matrix(text))
    assert ring.is_graded_commutative()
    assert ring.is_associative()
    top = ring.top_class()
    s1, s2, k = ring.index(1, "1"), ring.index(2, "1"), ring.index(0, "k")
    prod = ring.multiply(ring.multiply({s1: 1}, {s2: 1}), {k: 1})
    assert prod == {top: 1}


def test_theta_square_under_default_form():
    ring = build_mab_ring(parse_matrix("1,1;1,2"))
    w = symplectic_class(ring)
    assert w.d == 4
    # the unscaled wedge pairing alone gives theta ^ theta = 2 vol
    theta = list(THETA_FORM)
    assert sum(theta[i] * wedge_pairing()[i, j] * theta[j] for i in range(6) for j in range(6)) == 2


@pytest.mark.parametrize("scales, d", [((1, 1), 2), ((2, 2), 4), ((7, 3), 6)])
def test_d_scales_with_torus_block_only(scales, d):
    ring = build_mab_ring(parse_matrix("1,1;1,2"), IntersectionForm(*scales))
    assert symplectic_class(ring).d == d


@pytest.mark.parametrize("text", SPOT_MATRICES)
def test_hard_lefschetz_passes(text):
    ring = build_mab_ring(parse_matrix(text))
    w = symplectic_class(ring)
    rep = hard_lefschetz(ring, w)
    assert rep.verdict and rep.failed_degrees() == []
    assert [m.rank for m in rep.maps] == [ring.betti[2], ring.betti[1], 1]


def test_omega_cubed_is_three_d():
    ring = build_mab_ring(parse_matrix("1,1;1,2"))
    w = symplectic_class(ring)
    l3 = lefschetz_matrix(ring, w.omega, 3)
    assert l3.tolist() == [[3 * w.d]]


def test_lefschetz_fails_without_theta():
    ring = build_mab_ring(parse_matrix("1,1;1,2"))
    bare = symplectic_class(ring).without_theta(ring)
    rep = hard_lefschetz(ring, bare)
    assert not rep.verdict
    assert 3 in rep.failed_degrees()


@pytest.mark.parametrize("scales", [(1, 1), (1, 9), (5, 2)])
def test_lefschetz_invariant_under_rescaling(scales):
    a = parse_matrix("1+1i,1i;1,1")
    ring = build_mab_ring(a, IntersectionForm(*scales))
    assert hard_lefschetz(ring, symplectic_class(ring)).verdict


@pytest.mark.parametrize("text", SPOT_MATRICES)
def test_formality_witness_holds(text):
    f = formality_witness(parse_matrix(text))
    assert f.verdict and f.failed_degree() is None
    assert f.b1_is_one and f.semisimple_at_one


def test_formality_fails_for_unipotent_jordan_block():
    rows = [[int(i == j) for j in range(22)] for i in range(22)]
    rows[0][1] = 1
    f = formality_witness_for_action(RationalMatrix.from_rows(rows))
    assert not f.verdict
    assert f.failed_degree() == 1
    assert not f.semisimple_at_one


def test_identity_monodromy_still_formal():
    f = formality_witness_for_action(RationalMatrix.identity(22))
    assert f.verdict


def test_ring_from_gram_small_example():
    # a toy fibre with V of rank 1 and cup square 1
    ring = MabCohomology.from_gram([[Fraction(1)]], theta_coords=(1,))
    assert ring.betti == (1, 2, 2, 2, 2, 2, 1)
    assert ring.is_associative() and ring.is_graded_commutative()
    w = symplectic_class(ring)
    assert w.d == 1 and hard_lefschetz(ring, w).verdict
