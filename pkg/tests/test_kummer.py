import itertools

import numpy as np
import pytest
import sympy

from nonkahler.exact import IntPolynomial, RationalMatrix, char_poly, det
from nonkahler.kummer import (
    DEFAULT_FORM,
    GaussianMatrix2,
    IntersectionForm,
    InvalidInputError,
    eigen_profile,
    eta_class,
    exterior_square_action,
    fixed_subspace,
    kummer_action,
    realify,
    theta_class,
    two_torsion_permutation,
    wedge_pairing,
)
from nonkahler.io import parse_matrix

from conftest import (
    SPOT_MATRICES,
    T,
    float_matrix,
    half_point_images,
    numeric_nullity,
    sympy_charpoly,
    sympy_cyclotomic_split,
)


def conjugate_quadratic_product(a: GaussianMatrix2) -> list[int]:
    """(t^2 - tr t + 1)(t^2 - conj(tr) t + 1), the char poly of A and its conjugate together."""
    tr = complex(a.trace())
    tau = sympy.Integer(int(tr.real)) + sympy.I * int(tr.imag)
    e = sympy.expand((T ** 2 - tau * T + 1) * (T ** 2 - sympy.conjugate(tau) * T + 1))
    return [int(c) for c in reversed(sympy.Poly(e, T).all_coeffs())]


def test_rejects_non_unimodular():
    with pytest.raises(InvalidInputError, match="determinant"):
        GaussianMatrix2(1, 0, 0, 2)


@pytest.mark.parametrize("text", SPOT_MATRICES + ["1,0;0,1", "i,0;0,-i"])
def test_realified_char_poly_is_conjugate_product(text):
    a = parse_matrix(text)
    r = realify(a)
    assert det(r.m) == 1
    assert list(char_poly(r.m).coeffs) == conjugate_quadratic_product(a)


def test_realified_spot_value():
    r = realify(parse_matrix("1+1i,1i;1,1"))
    assert char_poly(r.m) == IntPolynomial((1, -4, 7, -4, 1))


@pytest.mark.parametrize("text", SPOT_MATRICES + ["1,0;0,1", "0,-1;1,0", "i,1;-1,0"])
def test_two_torsion_permutation_against_complex_arithmetic(text):
    a = parse_matrix(text)
    perm = two_torsion_permutation(a)
    assert list(perm.images) == half_point_images(a)
    assert perm.images[0] == 0


@pytest.mark.parametrize("text, cycle_type", [
    ("1,1;1,2", (1, 3, 3, 3, 3, 3)),
    ("1+1i,1i;1,1", (1, 3, 6, 6)),
    ("1,0;0,1", (1,) * 16),
])
def test_cycle_types(text, cycle_type):
    assert two_torsion_permutation(parse_matrix(text)).cycle_type() == cycle_type


def test_permutation_matrix_convention():
    perm = two_torsion_permutation(parse_matrix("1,1;1,2"))
    g = perm.pullback_matrix()
    for j, k in enumerate(perm.images):
        assert g[j, k] == 1
    assert list(char_poly(g).coeffs) == list(perm.char_poly().coeffs)


@pytest.mark.parametrize("text", SPOT_MATRICES)
def test_exterior_square_spectrum_is_pairwise_products(text):
    r = realify(parse_matrix(text))
    ev = np.linalg.eigvals(float_matrix(r.m))
    prods = np.array([ev[i] * ev[j] for i, j in itertools.combinations(range(4), 2)])
    ext = np.linalg.eigvals(float_matrix(exterior_square_action(r)))
    # match as multisets via the monic polynomials they define
    assert np.allclose(np.poly(prods), np.poly(ext), atol=1e-6)


def test_exterior_square_spot_value():
    r = realify(parse_matrix("1,1;1,2"))
    expected = IntPolynomial((-1, 1)) ** 4 * IntPolynomial((1, -7, 1))
    assert char_poly(exterior_square_action(r)) == expected


@pytest.mark.parametrize("text", SPOT_MATRICES)
def test_theta_and_eta_fixed(text):
    g = kummer_action(parse_matrix(text)).matrix
    for v in (theta_class(), eta_class()):
        assert tuple(g @ list(v)) == tuple(v)


def test_wedge_pairing_entries():
    w = wedge_pairing()
    # e12<->e34 +1, e13<->e24 -1, e14<->e23 +1
    assert (w[0, 5], w[1, 4], w[2, 3]) == (1, -1, 1)
    assert w == w.T


def test_intersection_form_signature_against_numpy():
    q = DEFAULT_FORM.q
    ev = np.linalg.eigvalsh(float_matrix(q))
    assert DEFAULT_FORM.signature() == (int((ev > 0).sum()), int((ev < 0).sum())) == (3, 19)


@pytest.mark.parametrize("scales", [(1, 1), (2, 2), (3, 5)])
def test_form_preserved_for_any_scaling(scales):
    form = IntersectionForm(*scales)
    for text in SPOT_MATRICES:
        assert kummer_action(parse_matrix(text), form).preserves_form()


@pytest.mark.parametrize("text", SPOT_MATRICES)
def test_h2_char_poly_against_sympy(text):
    g = kummer_action(parse_matrix(text))
    assert list(g.char_poly().coeffs) == sympy_charpoly(g.matrix.tolist())


@pytest.mark.parametrize("text", SPOT_MATRICES)
def test_cyclotomic_split_against_sympy_factorization(text):
    a = parse_matrix(text)
    prof = eigen_profile(kummer_action(a), a)
    cyc, rest = sympy_cyclotomic_split(list(prof.char_poly.coeffs))
    assert list(prof.cyclotomic_part.coeffs) == cyc
    assert list(prof.rest.coeffs) == rest


@pytest.mark.parametrize("text, dim_v", [("1,1;1,2", 10), ("1+1i,1i;1,1", 6), ("2,-1+4i;1,2i", 12)])
def test_fixed_dimension_against_float_rank(text, dim_v):
    g = kummer_action(parse_matrix(text)).matrix
    assert fixed_subspace(g).dim == dim_v
    assert numeric_nullity(g - RationalMatrix.identity(22)) == dim_v


def test_eigen_profile_identity_is_unipotent():
    a = GaussianMatrix2.identity()
    prof = eigen_profile(kummer_action(a), a)
    assert prof.rest == IntPolynomial((1,))
    assert prof.cyclotomic_multiplicities == {1: 22}
    assert prof.large_root is None


def test_eigen_profile_unit_circle_eigenvalues():
    a = parse_matrix("1+1i,1i;1,1")
    prof = eigen_profile(kummer_action(a), a)
    assert prof.rest == IntPolynomial((1, -5, 4, -5, 1))
    # the cyclotomic part sits on the circle by construction; the factor contributes 2 more
    ev = np.roots(list(reversed(prof.rest.coeffs)))
    off_circle = [z for z in ev if abs(abs(z) - 1) > 1e-9]
    assert len(off_circle) == 2
    assert prof.unit_modulus_count == 20
    assert prof.large_root.lo > 1
