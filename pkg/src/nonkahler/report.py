"""
Full analysis of one matrix and its rendering as JSON documents or text.

Machine-readable output carries no floats: rationals are "p/q" strings in
lowest terms and polynomials are ascending integer coefficient lists.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .certify import (
    FamilyMember,
    HomotopyVerdict,
    JumpLociReport,
    NonkahlerCertificate,
    certify_nonkahler,
    group_by_factor,
    jump_loci,
)
from .config import Settings
from .exact import IntPolynomial, char_poly
from .exact.roots import IsolatingInterval
from .io import render_matrix
from .kummer import EigenProfile, GaussianMatrix2, eigen_profile, kummer_action, realify
from .topology import (
    FormalityWitness,
    LefschetzReport,
    SymplecticClass,
    WangProfile,
    check_gate,
    formality_witness_for_action,
    hard_lefschetz,
    ring_from_action,
    symplectic_class,
    wang_cohomology,
)

SCHEMA_VERSION = "1.0"

OPEN_QUESTION = ("Not computed: whether M(A) is real-homotopy equivalent to some compact "
                 "Kähler manifold.")


@dataclass(frozen=True)
class Analysis:
    matrix: GaussianMatrix2
    source: str
    settings: Settings
    realified_char_poly: IntPolynomial
    cycle_type: tuple[int, ...]
    perm_char_poly: IntPolynomial
    ext_char_poly: IntPolynomial
    form_preserved: bool
    eigen: EigenProfile
    wang: WangProfile
    betti: tuple[int, ...]
    symplectic: SymplecticClass
    lefschetz: LefschetzReport
    formality: FormalityWitness
    certificate: NonkahlerCertificate
    jump: JumpLociReport


def analyze(a: GaussianMatrix2, settings: Settings | None = None, source: str | None = None) -> Analysis:
    settings = settings or Settings()
    check_gate(a)
    width = settings.refine_width
    g = kummer_action(a, settings.form)
    ring = ring_from_action(g)
    w = symplectic_class(ring)
    return Analysis(
        matrix=a,
        source=source if source is not None else render_matrix(a),
        settings=settings,
        realified_char_poly=char_poly(realify(a).m),
        cycle_type=g.perm.cycle_type(),
        perm_char_poly=g.perm.char_poly(),
        ext_char_poly=char_poly(g.ext_block),
        form_preserved=g.preserves_form(),
        eigen=eigen_profile(g, a, width),
        wang=wang_cohomology(g),
        betti=ring.betti,
        symplectic=w,
        lefschetz=hard_lefschetz(ring, w),
        formality=formality_witness_for_action(g.matrix),
        certificate=certify_nonkahler(a, width),
        jump=jump_loci(a, width),
    )


# --------------------------------------------------------------------------- encoding helpers


def rat(x) -> str:
    x = Fraction(x)
    return "%d/%d" % (x.numerator, x.denominator)


def poly(p: IntPolynomial) -> list[int]:
    return list(p.coeffs)


def interval(iv: IsolatingInterval) -> dict:
    return {"lo": rat(iv.lo), "hi": rat(iv.hi), "poly": poly(iv.poly)}


def multiplicities(d: dict) -> dict:
    return {str(n): d[n] for n in sorted(d)}


def matrix_echo(a: GaussianMatrix2, source: str) -> dict:
    return {
        "text": source,
        "canonical": render_matrix(a),
        "entries": [[str(z) for z in row] for row in a.rows()],
        "traceNormSquared": a.trace_norm_squared(),
    }


def normalization_notes(s: Settings, d: Fraction) -> list[str]:
    return [
        "intersection form: divisor block -%d*I16, torus block %d*(wedge pairing)"
        % (s.divisor_scale, s.torus_scale),
        "theta^2 = d*kappa with d = %s under this form; only d > 0 is independent of the scaling"
        % rat(d),
        "signature of the intersection form is (3, 19) for every positive choice of scales",
        "fixed-subspace basis coordinates and the cup-pairing Gram matrix depend on the scaling; "
        "Betti numbers, hard Lefschetz and formality verdicts do not",
    ]


def certificate_doc(c: NonkahlerCertificate) -> dict:
    return {
        "input": render_matrix(c.matrix),
        "traceNormSquared": c.trace_norm_squared,
        "charPolyH2": poly(c.char_poly_h2),
        "nonCyclotomicFactor": poly(c.non_cyclotomic_factor),
        "witnessRoot": interval(c.witness_root),
        "conclusion": c.conclusion,
    }


def jump_doc(j: JumpLociReport) -> dict:
    return {
        "characterTorusRank": j.character_torus_rank,
        "component": j.component_description,
        "charPolyEven": poly(j.char_poly_even),
        "cyclotomicPart": poly(j.cyclotomic_part),
        "cyclotomicMultiplicities": multiplicities(j.cyclotomic_multiplicities),
        "nonCyclotomicFactor": poly(j.non_cyclotomic_factor),
        "inversionClosed": j.inversion_closed(),
        "nonUnitaryPoints": [interval(iv) for iv in j.non_unitary_points],
    }


def analysis_doc(an: Analysis) -> dict:
    s = an.settings
    warnings = []
    if s.refine_width != Fraction(1, 1000):
        warnings.append("interval width overridden to %s" % rat(s.refine_width))
    ev = an.eigen
    return {
        "schemaVersion": SCHEMA_VERSION,
        "command": "analyze",
        "input": matrix_echo(an.matrix, an.source),
        "settings": {"refineWidth": rat(s.refine_width), "divisorScale": s.divisor_scale,
                     "torusScale": s.torus_scale},
        "monodromy": {
            "realifiedCharPoly": poly(an.realified_char_poly),
            "cycleType": list(an.cycle_type),
            "permutationCharPoly": poly(an.perm_char_poly),
            "exteriorCharPoly": poly(an.ext_char_poly),
            "h2CharPoly": poly(ev.char_poly),
            "cyclotomicPart": poly(ev.cyclotomic_part),
            "cyclotomicMultiplicities": multiplicities(ev.cyclotomic_multiplicities),
            "nonCyclotomicFactor": poly(ev.rest),
            "unitModulusCount": ev.unit_modulus_count,
            "semisimpleAtOne": ev.semisimple_at_one,
            "formPreserved": an.form_preserved,
        },
        "betti": list(an.betti),
        "mappingTorus": {
            "betti": list(an.wang.betti_n),
            "kernelDims": list(an.wang.kernel_dims),
            "cokernelDims": list(an.wang.cokernel_dims),
            "fixedDim": an.betti[2] - 1,
        },
        "lefschetz": {
            "verdict": "pass" if an.lefschetz.verdict else "fail",
            "d": rat(an.symplectic.d),
            "thetaCoordinates": [rat(c) for c in an.symplectic.theta_coords],
            "maps": [{"j": m.j, "sourceDegree": 3 - m.j, "targetDegree": 3 + m.j,
                      "sourceDim": m.matrix.cols, "targetDim": m.matrix.rows,
                      "rank": m.rank, "isomorphism": m.isomorphism}
                     for m in an.lefschetz.maps],
        },
        "formality": {
            "verdict": "pass" if an.formality.verdict else "fail",
            "b1IsOne": an.formality.b1_is_one,
            "s2Isomorphisms": list(an.formality.s2_isomorphisms),
            "semisimpleAtOne": an.formality.semisimple_at_one,
            "justification": list(an.formality.justification),
        },
        "certificate": certificate_doc(an.certificate),
        "jumpLoci": jump_doc(an.jump),
        "normalizationNotes": normalization_notes(s, an.symplectic.d),
        "remarks": [OPEN_QUESTION],
        "warnings": warnings,
    }


def certify_doc(c: NonkahlerCertificate, source: str) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "command": "certify",
        "input": matrix_echo(c.matrix, source),
        "certificate": certificate_doc(c),
        "normalizationNotes": [],
        "warnings": [],
    }


def compare_doc(v: HomotopyVerdict, a: GaussianMatrix2, b: GaussianMatrix2, sa: str, sb: str) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "command": "compare",
        "inputs": [matrix_echo(a, sa), matrix_echo(b, sb)],
        "verdict": v.verdict.value,
        "message": v.message,
        "ordering": v.ordering,
        "factors": [poly(v.factor_a), poly(v.factor_b)],
        "transcript": list(v.transcript),
        "notes": list(v.notes),
        "normalizationNotes": [],
        "warnings": [],
    }


def enumerate_doc(height: int, members: list[FamilyMember]) -> dict:
    groups = group_by_factor(members)
    return {
        "schemaVersion": SCHEMA_VERSION,
        "command": "enumerate",
        "height": height,
        "count": len(members),
        "groupCount": len(groups),
        "members": [{"matrix": render_matrix(m.matrix),
                     "traceNormSquared": m.trace_norm_squared,
                     "nonCyclotomicFactor": poly(m.factor),
                     "witnessRoot": interval(m.witness_root)} for m in members],
        "groups": [{"nonCyclotomicFactor": list(k),
                    "members": [render_matrix(m.matrix) for m in ms]}
                   for k, ms in groups.items()],
        "normalizationNotes": [],
        "warnings": [],
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# --------------------------------------------------------------------------- text


def _approx(iv: IsolatingInterval) -> str:
    return "(%s, %s) ≈ %.6f" % (iv.lo, iv.hi, iv.approx())


def _yes(b: bool) -> str:
    return "pass" if b else "FAIL"


def render_certificate_text(c: NonkahlerCertificate) -> list[str]:
    return [
        "Nonkähler certificate",
        "  |tr A|^2 = %d > 4" % c.trace_norm_squared,
        "  H^2 char poly: %s" % c.char_poly_h2,
        "  non-cyclotomic factor: %s" % c.non_cyclotomic_factor,
        "  witness root r in %s, r > 1" % _approx(c.witness_root),
        "  " + c.conclusion,
    ]


def render_text(an: Analysis) -> str:
    ev = an.eigen
    lines = [
        "M(A) for A = %s" % render_matrix(an.matrix),
        "  |tr A|^2 = %d" % an.matrix.trace_norm_squared(),
        "  realified char poly: %s" % an.realified_char_poly,
        "  two-torsion cycle type: %s" % "+".join(map(str, an.cycle_type)),
        "  exterior-square char poly: %s" % an.ext_char_poly,
        "  H^2 char poly: %s" % ev.char_poly,
        "  cyclotomic multiplicities: %s" % ", ".join(
            "Phi_%d^%d" % (n, k) for n, k in sorted(ev.cyclotomic_multiplicities.items())),
        "  non-cyclotomic factor: %s" % ev.rest,
        "  dim V (fixed H^2 classes) = %d" % (an.betti[2] - 1),
        "",
        "Betti numbers of M(A): %s" % list(an.betti),
        "Betti numbers of N: %s" % list(an.wang.betti_n),
        "",
        "Hard Lefschetz (omega = s1 s2 + theta, theta^2 = %s kappa): %s"
        % (an.symplectic.d, _yes(an.lefschetz.verdict)),
    ]
    for m in an.lefschetz.maps:
        lines.append("  j=%d: H^%d -> H^%d, %dx%d, rank %d  %s" % (
            m.j, 3 - m.j, 3 + m.j, m.matrix.rows, m.matrix.cols, m.rank, _yes(m.isomorphism)))
    lines += ["", "Formality witness: %s" % _yes(an.formality.verdict)]
    lines += ["  " + s for s in an.formality.justification]
    lines += [""] + render_certificate_text(an.certificate)
    j = an.jump
    lines += [
        "",
        "Jump loci: all in %s inside Char(M(A)) = (C*)^%d" % (j.component_description,
                                                             j.character_torus_rank),
        "  non-cyclotomic point factor: %s (self-reciprocal: %s)" % (
            j.non_cyclotomic_factor, "yes" if j.inversion_closed() else "no"),
    ]
    lines += ["  point in %s" % _approx(iv) for iv in j.non_unitary_points]
    lines += ["", "Normalization notes:"]
    lines += ["  " + s for s in normalization_notes(an.settings, an.symplectic.d)]
    lines += ["", OPEN_QUESTION]
    return "\n".join(lines) + "\n"


def render_compare_text(v: HomotopyVerdict) -> str:
    lines = [v.message,
             "  factor A: %s" % v.factor_a,
             "  factor B: %s" % v.factor_b,
             "  largest root of A is %s that of B" % {
                 "less": "less than", "greater": "greater than", "equal": "equal to"}[v.ordering]]
    lines += ["  " + n for n in v.notes]
    return "\n".join(lines) + "\n"


def render_enumerate_text(height: int, members: list[FamilyMember]) -> str:
    groups = group_by_factor(members)
    lines = ["height <= %d: %d matrices, %d distinct non-cyclotomic factors"
             % (height, len(members), len(groups))]
    for k, ms in groups.items():
        r = ms[0].witness_root
        lines.append("%s  r ≈ %.6f  (%d)" % (IntPolynomial(k), r.approx(), len(ms)))
        lines += ["    " + render_matrix(m.matrix) for m in ms]
    return "\n".join(lines) + "\n"
