"""
Headline verdicts: nonkählerness certificates, homotopy-type discrimination
by spectral radius, and the finite part of the cohomology jump loci.

A certificate exhibits a real eigenvalue r > 1 of the monodromy on H^2(K)
as a root of an explicit non-cyclotomic integer factor of its
characteristic polynomial, isolated in an interval with rational lower
endpoint > 1.  Such an eigenvalue is not a root of unity, which rules out
M(A) x Y being homotopy equivalent to a compact Kähler manifold.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .exact import (
    GaussianInt,
    IntPolynomial,
    RationalMatrix,
    char_poly,
    cyclotomic_factors,
    cyclotomic_split,
    root_comparison,
)
from .exact.roots import IsolatingInterval, sign_variations, sturm_chain
from .kummer import (
    ConsistencyError,
    GaussianMatrix2,
    InvalidInputError,
    kummer_action,
    reciprocal_root_pair,
)
from .topology import GateError, check_gate

DEFAULT_WIDTH = Fraction(1, 1000)

CONCLUSION = ("M(A) x Y is not homotopy equivalent to any compact Kähler manifold "
              "for any topological space Y")


@dataclass(frozen=True)
class NonkahlerCertificate:
    matrix: GaussianMatrix2
    trace_norm_squared: int
    char_poly_h2: IntPolynomial
    non_cyclotomic_factor: IntPolynomial
    witness_root: IsolatingInterval
    conclusion: str = CONCLUSION

    def validate(self) -> bool:
        """Re-check every claim of the certificate from its own data."""
        f, iv = self.non_cyclotomic_factor, self.witness_root
        if self.trace_norm_squared != self.matrix.trace_norm_squared() or self.trace_norm_squared <= 4:
            return False
        if self.char_poly_h2.try_div(f) is None:
            return False
        if iv.poly != f or not iv.lo > 1:
            return False
        # simple root: the factor changes sign across the interval
        if f(iv.lo) * f(iv.hi) >= 0:
            return False
        chain = sturm_chain(f)
        return sign_variations(chain, iv.lo) - sign_variations(chain, iv.hi) == 1


def h2_char_poly(a: GaussianMatrix2) -> IntPolynomial:
    return kummer_action(a).char_poly()


def certify_nonkahler(a: GaussianMatrix2, width=DEFAULT_WIDTH) -> NonkahlerCertificate:
    check_gate(a)
    p = h2_char_poly(a)
    _, rest = cyclotomic_split(p)
    try:
        large, _ = reciprocal_root_pair(rest, width)
    except ConsistencyError as exc:
        raise ConsistencyError("no real eigenvalue > 1 despite |tr(A)| > 2: %s" % exc) from exc
    cert = NonkahlerCertificate(a, a.trace_norm_squared(), p, rest, large)
    if not cert.validate():
        raise ConsistencyError("certificate for %s failed self-validation" % a)
    return cert


# --------------------------------------------------------------------------- spectral radius comparison


class Verdict(enum.Enum):
    DISTINCT = "Distinct"
    INCONCLUSIVE_EQUAL_RADII = "InconclusiveEqualRadii"


@dataclass(frozen=True)
class HomotopyVerdict:
    verdict: Verdict
    factor_a: IntPolynomial
    factor_b: IntPolynomial
    ordering: str
    transcript: tuple[str, ...]
    notes: tuple[str, ...]

    @property
    def message(self) -> str:
        if self.verdict is Verdict.DISTINCT:
            return "Distinct homotopy types"
        return "Inconclusive: equal spectral radii"


def compare_homotopy_types(a1: GaussianMatrix2, a2: GaussianMatrix2) -> HomotopyVerdict:
    for a in (a1, a2):
        check_gate(a)
    _, f1 = cyclotomic_split(h2_char_poly(a1))
    _, f2 = cyclotomic_split(h2_char_poly(a2))
    cmp = root_comparison(f1, f2)
    notes = []
    if cmp.ordering.value == "equal":
        verdict = Verdict.INCONCLUSIVE_EQUAL_RADII
        notes.append("equal spectral radii do not imply homotopy equivalence")
        if a2 == -a1:
            notes.append("A2 = -A1, and M(A) = M(-A)")
        elif a2 == a1:
            notes.append("identical inputs")
    else:
        verdict = Verdict.DISTINCT
        notes.append("different spectral radii, so M(A1) and M(A2) are not homotopy equivalent")
    return HomotopyVerdict(verdict, f1, f2, cmp.ordering.value, cmp.steps, tuple(notes))


# --------------------------------------------------------------------------- jump loci


@dataclass(frozen=True)
class JumpLociReport:
    character_torus_rank: int
    component_description: str
    char_poly_even: IntPolynomial
    cyclotomic_part: IntPolynomial
    cyclotomic_multiplicities: dict
    non_cyclotomic_factor: IntPolynomial
    non_unitary_points: tuple[IsolatingInterval, ...]

    def inversion_closed(self) -> bool:
        return self.non_cyclotomic_factor.is_self_reciprocal()


def even_monodromy(a: GaussianMatrix2) -> RationalMatrix:
    """The 24x24 monodromy on H^0 + H^2 + H^4 of K."""
    one = RationalMatrix.identity(1)
    return RationalMatrix.block_diag(one, kummer_action(a).matrix, one)


def jump_loci(a: GaussianMatrix2, width=DEFAULT_WIDTH, gate: bool = True) -> JumpLociReport:
    """
    Finite part of the jump loci of M(A) inside Char = C* x C*.

    All loci lie in {1} x C*; the points there are inverses of monodromy
    eigenvalues, and since the eigenvalue set is closed under inversion the
    same factorization describes both.  ``gate=False`` skips the trace
    hypothesis (only meaningful for testing degenerate inputs).
    """
    if gate:
        check_gate(a)
    p = char_poly(even_monodromy(a))
    cyc, rest = cyclotomic_split(p)
    points: tuple = ()
    if rest.degree > 0:
        large, small = reciprocal_root_pair(rest, width)
        points = (small, large)
    return JumpLociReport(2, "{1} x C*", p, cyc, cyclotomic_factors(p), rest, points)


# --------------------------------------------------------------------------- family enumeration


@dataclass(frozen=True)
class FamilyMember:
    matrix: GaussianMatrix2
    trace_norm_squared: int
    factor: IntPolynomial
    witness_root: IsolatingInterval


def _gaussians(h: int):
    return [GaussianInt(x, y) for x in range(-h, h + 1) for y in range(-h, h + 1)]


def sl2_candidates(h: int) -> list[GaussianMatrix2]:
    """All of SL(2, Z[i]) with every entry of height <= h, lexicographic order."""
    vals = _gaussians(h)
    out = []
    one = GaussianInt(1, 0)
    for a11, a12, a21 in iproduct(vals, repeat=3):
        rhs = one + a12 * a21
        if a11.is_zero():
            if rhs.is_zero():
                out.extend(GaussianMatrix2(a11, a12, a21, d) for d in vals)
            continue
        d = rhs.exact_div(a11)
        if d is not None and d.height() <= h:
            out.append(GaussianMatrix2(a11, a12, a21, d))
    out.sort(key=GaussianMatrix2.sort_key)
    return out


def gated_family(h: int) -> list[GaussianMatrix2]:
    """
    Gated candidates, one per pair {A, -A}.

    The kept representative is the one whose first nonzero coordinate in
    (Re a11, Im a11, Re a12, ...) is positive, so [[1,1],[1,2]] is listed
    rather than its negative.
    """
    return [a for a in sl2_candidates(h) if a.passes_gate() and a.sort_key() > (-a).sort_key()]


def _member(args) -> FamilyMember:
    a, width = args
    cert = certify_nonkahler(a, width)
    return FamilyMember(a, cert.trace_norm_squared, cert.non_cyclotomic_factor, cert.witness_root)


def enumerate_family(height: int, width=DEFAULT_WIDTH, workers: int = 1) -> list[FamilyMember]:
    if height < 1:
        raise ValueError("height bound must be >= 1")
    mats = gated_family(height)
    jobs = [(a, width) for a in mats]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            return list(ex.map(_member, jobs, chunksize=64))
    return [_member(j) for j in jobs]


def group_by_factor(members) -> dict[tuple[int, ...], list[FamilyMember]]:
    """Members sharing a non-cyclotomic factor (hence a spectral radius), first-seen order."""
    groups: dict = {}
    for m in members:
        groups.setdefault(m.factor.coeffs, []).append(m)
    return groups


__all__ = [
    "CONCLUSION", "DEFAULT_WIDTH", "FamilyMember", "GateError", "HomotopyVerdict",
    "InvalidInputError", "JumpLociReport", "NonkahlerCertificate", "Verdict",
    "certify_nonkahler", "compare_homotopy_types", "enumerate_family", "even_monodromy",
    "gated_family", "group_by_factor", "jump_loci", "sl2_candidates",
]
