import dataclasses
from fractions import Fraction

import numpy as np
import pytest

from nonkahler.certify import (
    CONCLUSION,
    Verdict,
    certify_nonkahler,
    compare_homotopy_types,
    enumerate_family,
    gated_family,
    group_by_factor,
    jump_loci,
)
from nonkahler.exact import GaussianInt, IntPolynomial
from nonkahler.kummer import GaussianMatrix2, kummer_action
from nonkahler.io import parse_matrix
from nonkahler.topology import GateError

from conftest import FAMILY, SPOT_MATRICES, as_gaussian_matrix, brute_force_gated, sympy_charpoly


def largest_float_eigenvalue(a: GaussianMatrix2) -> float:
    g = kummer_action(a).matrix
    ev = np.linalg.eigvals(np.array([[float(x) for x in r] for r in g.tolist()]))
    return max(abs(ev))


@pytest.mark.parametrize("text", SPOT_MATRICES)
def test_certificate_contents(text):
    a = parse_matrix(text)
    c = certify_nonkahler(a)
    assert c.validate()
    assert c.witness_root.lo > 1
    assert c.witness_root.width() < Fraction(1, 1000)
    assert c.char_poly_h2.try_div(c.non_cyclotomic_factor) is not None
    assert list(c.char_poly_h2.coeffs) == sympy_charpoly(kummer_action(a).matrix.tolist())
    assert float(c.witness_root.lo) <= largest_float_eigenvalue(a) <= float(c.witness_root.hi)
    assert c.conclusion == CONCLUSION


def test_certificate_validation_catches_tampering():
    c = certify_nonkahler(parse_matrix("1,1;1,2"))
    bad_factor = dataclasses.replace(c, non_cyclotomic_factor=IntPolynomial((1, -6, 1)))
    assert not bad_factor.validate()
    iv = c.witness_root
    moved = dataclasses.replace(iv, lo=iv.hi, hi=iv.hi + 1)
    assert not dataclasses.replace(c, witness_root=moved).validate()


@pytest.mark.parametrize("n", range(3, 7))
def test_family_factor_and_root(n):
    c = certify_nonkahler(parse_matrix(FAMILY[n]))
    # trace n, so the quadratic factor is t^2 - (n^2 - 2) t + 1
    assert c.non_cyclotomic_factor == IntPolynomial((1, -(n * n - 2), 1))
    r = ((n * n - 2) + ((n * n - 2) ** 2 - 4) ** 0.5) / 2
    assert float(c.witness_root.lo) < r < float(c.witness_root.hi)


def test_certify_gate():
    with pytest.raises(GateError):
        certify_nonkahler(GaussianMatrix2.identity())


def test_compare_family_members():
    a3, a4 = parse_matrix(FAMILY[3]), parse_matrix(FAMILY[4])
    v = compare_homotopy_types(a3, a4)
    assert v.verdict is Verdict.DISTINCT
    assert v.message == "Distinct homotopy types"
    assert (v.factor_a, v.factor_b) == (IntPolynomial((1, -7, 1)), IntPolynomial((1, -14, 1)))
    w = compare_homotopy_types(a4, a3)
    assert w.verdict is v.verdict and w.ordering == "greater" and v.ordering == "less"


def test_compare_negation_and_self():
    a = parse_matrix("1+1i,1i;1,1")
    v = compare_homotopy_types(a, -a)
    assert v.verdict is Verdict.INCONCLUSIVE_EQUAL_RADII
    assert any("M(A) = M(-A)" in n for n in v.notes)
    assert compare_homotopy_types(a, a).verdict is Verdict.INCONCLUSIVE_EQUAL_RADII


def test_compare_agrees_with_float_spectral_radius():
    mats = [parse_matrix(t) for t in SPOT_MATRICES]
    for a in mats:
        for b in mats:
            v = compare_homotopy_types(a, b)
            ra, rb = largest_float_eigenvalue(a), largest_float_eigenvalue(b)
            if abs(ra - rb) > 1e-6:
                assert v.verdict is Verdict.DISTINCT
                assert v.ordering == ("less" if ra < rb else "greater")
            else:
                assert v.verdict is Verdict.INCONCLUSIVE_EQUAL_RADII


def test_jump_loci_family_member():
    a = parse_matrix("1,1;1,2")
    j = jump_loci(a)
    assert j.character_torus_rank == 2 and j.component_description == "{1} x C*"
    assert j.non_cyclotomic_factor == IntPolynomial((1, -7, 1))
    assert j.cyclotomic_part * j.non_cyclotomic_factor == j.char_poly_even
    assert j.cyclotomic_multiplicities == {1: 12, 3: 5}
    small, large = j.non_unitary_points
    assert large == certify_nonkahler(a).witness_root
    assert small.hi < 1 < large.lo


def test_jump_loci_unit_circle_pair():
    j = jump_loci(parse_matrix("1+1i,1i;1,1"))
    assert j.inversion_closed()
    ev = np.roots(list(reversed(j.non_cyclotomic_factor.coeffs)))
    on_circle = [z for z in ev if abs(abs(z) - 1) < 1e-9]
    assert len(on_circle) == 2 and all(abs(z.imag) > 1e-6 for z in on_circle)
    assert len(j.non_unitary_points) == 2


def test_jump_loci_identity_ungated():
    j = jump_loci(GaussianMatrix2.identity(), gate=False)
    assert j.non_cyclotomic_factor == IntPolynomial((1,))
    assert j.non_unitary_points == ()
    with pytest.raises(GateError):
        jump_loci(GaussianMatrix2.identity())


def test_enumeration_height_one_against_brute_force():
    members = enumerate_family(1)
    brute = [as_gaussian_matrix(t) for t in brute_force_gated(1)]
    # brute force lists both A and -A
    keys = {m.matrix.sort_key() for m in members}
    for b in brute:
        assert b.sort_key() in keys or (-b).sort_key() in keys
    assert 2 * len(members) == len(brute)
    for m in members:
        assert m.matrix.det() == GaussianInt(1, 0) and m.trace_norm_squared > 4
        assert (-m.matrix).sort_key() not in keys


def test_enumeration_order_and_grouping():
    members = enumerate_family(2)
    keys = [m.matrix.sort_key() for m in members]
    assert keys == sorted(keys)
    assert any(m.matrix == parse_matrix("1,1;1,2") for m in members)
    groups = group_by_factor(members)
    assert sum(len(v) for v in groups.values()) == len(members)
    assert len(groups) < len(members)
    for k, ms in groups.items():
        assert all(m.factor.coeffs == k for m in ms)


def test_parallel_enumeration_preserves_order():
    seq = enumerate_family(1)
    par = enumerate_family(1, workers=2)
    assert [m.matrix for m in seq] == [m.matrix for m in par]
    assert [m.witness_root for m in seq] == [m.witness_root for m in par]


def test_gated_family_representatives():
    fam = gated_family(1)
    assert all(a.sort_key() > (-a).sort_key() for a in fam)
    assert parse_matrix("1,1;1,2") in gated_family(2)


def test_enumeration_rejects_bad_height():
    with pytest.raises(ValueError):
        enumerate_family(0)
