"""
Cohomology of the mapping torus N of A_K and of M(A) = S^1 x N.

Betti numbers of N come from the Wang sequence of N -> S^1 with fibre K
(odd cohomology of K vanishes).  The ring H*(M(A); Q) is modelled as

    Lambda(s1, s2) (x) (Q 1 + V + Q kappa),

V the monodromy-fixed part of H^2(K), kappa the fibre orientation class,
with v.w = Q(v, w) kappa on V.  This reconstruction of the products is a
modelling choice (the degree-3/4 description needs A diagonalizable, which
the trace gate guarantees) and is flagged as such in reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import RationalMatrix, rank, solve_in_span
from .kummer import (
    ConsistencyError,
    DEFAULT_FORM,
    GaussianMatrix2,
    IntersectionForm,
    KummerAction,
    fixed_subspace,
    kummer_action,
    semisimple_at_one,
    theta_class,
)


class GateError(ValueError):
    """The input violates the hypothesis |tr(A)| > 2."""

    def __init__(self, a: GaussianMatrix2 | None = None, detail: str = ""):
        msg = "hypothesis |tr(A)| > 2 fails"
        if a is not None:
            msg += ": |tr(A)|^2 = %d <= 4 for A = %s" % (a.trace_norm_squared(), a)
        if detail:
            msg += " (%s)" % detail
        super().__init__(msg)
        self.matrix = a


def check_gate(a: GaussianMatrix2) -> None:
    if not a.passes_gate():
        raise GateError(a)


# --------------------------------------------------------------------------- Wang sequence


@dataclass(frozen=True)
class WangProfile:
    betti_n: tuple[int, ...]
    kernel_dims: tuple[int, ...]
    cokernel_dims: tuple[int, ...]

    def euler_characteristic(self) -> int:
        return sum((-1) ** j * b for j, b in enumerate(self.betti_n))


def wang_from_actions(actions: Sequence[RationalMatrix]) -> WangProfile:
    """
    Betti numbers of a mapping torus from the monodromy on each H^j(F).

    b_j(N) = dim ker(g_j - I) + dim coker(g_{j-1} - I).
    """
    kers, cokers = [], []
    for g in actions:
        n = g.rows
        r = rank(g - RationalMatrix.identity(n)) if n else 0
        kers.append(n - r)
        cokers.append(n - r)
    top = len(actions)
    betti = [kers[j] + (cokers[j - 1] if j else 0) for j in range(top)] + [cokers[-1]]
    return WangProfile(tuple(betti), tuple(kers), tuple(cokers))


def fibre_actions(h2: RationalMatrix) -> list[RationalMatrix]:
    """Monodromy on H^0..H^4 of K: identity on H^0 and H^4, nothing in odd degree."""
    one = RationalMatrix.identity(1)
    empty = RationalMatrix.zeros(0)
    return [one, empty, h2, empty, one]


def wang_cohomology(g: KummerAction | RationalMatrix) -> WangProfile:
    h2 = g.matrix if isinstance(g, KummerAction) else g
    return wang_from_actions(fibre_actions(h2))


# --------------------------------------------------------------------------- ring model

# exterior part: bitmask over (s1, s2)
_EXT = (0, 1, 2, 3)
_EXT_LABEL = {0: "", 1: "s1", 2: "s2", 3: "s1*s2"}
_EXT_DEG = {0: 0, 1: 1, 2: 1, 3: 2}


def _ext_mul(m1: int, m2: int) -> tuple[int, int]:
    """(sign, mask) of the product of two exterior monomials; sign 0 if it vanishes."""
    if m1 & m2:
        return 0, 0
    # only s2 * s1 needs a transposition
    sign = -1 if (m1 & 2 and m2 & 1) else 1
    return sign, m1 | m2


@dataclass(frozen=True)
class BasisElement:
    ext: int            # exterior monomial in s1, s2
    fibre: int | str    # 1, index into V, or "k"
    degree: int
    label: str


@dataclass
class MabCohomology:
    """
    Graded basis and cup-product structure constants of H*(M(A); Q).

    ``table[(i, j)] = (k, c)`` means basis_i * basis_j = c * basis_k; pairs
    whose product is zero are absent.
    """

    v_basis: tuple[tuple, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    basis: list[BasisElement] = field(init=False)
    table: dict = field(init=False, repr=False)
    theta_coords: tuple | None = None
    form: IntersectionForm = DEFAULT_FORM

    def __post_init__(self):
        m = len(self.gram)
        fibres = [(0, "1")] + [(2, "v%d" % (i + 1)) for i in range(m)] + [(4, "k")]
        keys = ["1"] + list(range(m)) + ["k"]
        basis = []
        for ext in _EXT:
            for key, (fdeg, flabel) in zip(keys, fibres):
                parts = [p for p in (_EXT_LABEL[ext], flabel if key != "1" else "") if p]
                basis.append(BasisElement(ext, key, _EXT_DEG[ext] + fdeg, "*".join(parts) or "1"))
        # within a degree: s1 s2 part before fibre part, s1 before s2
        basis.sort(key=lambda b: (b.degree, b.degree - _EXT_DEG[b.ext]))
        self.basis = basis
        self._index = {(b.ext, b.fibre): i for i, b in enumerate(basis)}
        self.table = self._build_table()

    @classmethod
    def from_gram(cls, gram, theta_coords=None) -> "MabCohomology":
        """A ring with the given pairing on V, bypassing the Kummer construction."""
        gram = tuple(tuple(Fraction(x) for x in row) for row in gram)
        basis = tuple(tuple(1 if i == j else 0 for j in range(len(gram))) for i in range(len(gram)))
        return cls(basis, gram, theta_coords=theta_coords)

    @property
    def m(self) -> int:
        return len(self.gram)

    @property
    def betti(self) -> tuple[int, ...]:
        out = [0] * 7
        for b in self.basis:
            out[b.degree] += 1
        return tuple(out)

    def degree_indices(self, d: int) -> list[int]:
        return [i for i, b in enumerate(self.basis) if b.degree == d]

    def index(self, ext: int, fibre) -> int:
        return self._index[(ext, fibre)]

    def _fibre_mul(self, f1, f2):
        if f1 == "1":
            return f2, Fraction(1)
        if f2 == "1":
            return f1, Fraction(1)
        if f1 == "k" or f2 == "k":
            return None, 0
        c = self.gram[f1][f2]
        return ("k", c) if c else (None, 0)

    def _build_table(self) -> dict:
        table = {}
        for i, x in enumerate(self.basis):
            for j, y in enumerate(self.basis):
                sign, ext = _ext_mul(x.ext, y.ext)
                if not sign:
                    continue
                # fibre classes are even, so moving x.fibre past y.ext costs no sign
                f, c = self._fibre_mul(x.fibre, y.fibre)
                if f is None:
                    continue
                table[(i, j)] = (self._index[(ext, f)], sign * c)
        return table

    def multiply(self, x: dict, y: dict) -> dict:
        """Product of two elements given as {basis index: coefficient}."""
        out: dict = {}
        for i, a in x.items():
            if not a:
                continue
            for j, b in y.items():
                if not b:
                    continue
                hit = self.table.get((i, j))
                if hit is None:
                    continue
                k, c = hit
                out[k] = out.get(k, 0) + a * b * c
        return {k: v for k, v in out.items() if v}

    def power(self, x: dict, n: int) -> dict:
        out = {self.index(0, "1"): Fraction(1)}
        for _ in range(n):
            out = self.multiply(out, x)
        return out

    def top_class(self) -> int:
        return self.index(3, "k")

    def is_graded_commutative(self) -> bool:
        for i, x in enumerate(self.basis):
            for j, y in enumerate(self.basis):
                lhs = self.table.get((i, j))
                rhs = self.table.get((j, i))
                if lhs is None or rhs is None:
                    if lhs is not rhs:
                        return False
                    continue
                sign = -1 if (x.degree % 2 and y.degree % 2) else 1
                if lhs[0] != rhs[0] or lhs[1] != sign * rhs[1]:
                    return False
        return True

    def is_associative(self) -> bool:
        n = len(self.basis)
        get = self.table.get
        for i in range(n):
            for j in range(n):
                ij = get((i, j))
                for k in range(n):
                    jk = get((j, k))
                    left = None
                    if ij is not None:
                        t = get((ij[0], k))
                        if t is not None:
                            left = (t[0], ij[1] * t[1])
                    right = None
                    if jk is not None:
                        t = get((i, jk[0]))
                        if t is not None:
                            right = (t[0], jk[1] * t[1])
                    if left != right:
                        return False
        return True


def v_gram(v_basis: Sequence[Sequence], form: IntersectionForm) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(form.pair(x, y)) for y in v_basis) for x in v_basis)


def build_mab_ring(a: GaussianMatrix2, form: IntersectionForm = DEFAULT_FORM) -> MabCohomology:
    check_gate(a)
    g = kummer_action(a, form)
    return ring_from_action(g)


def ring_from_action(g: KummerAction) -> MabCohomology:
    fixed = fixed_subspace(g)
    theta = solve_in_span(fixed.basis, theta_class())
    if theta is None:
        raise ConsistencyError("theta is not fixed by the monodromy")
    return MabCohomology(fixed.basis, v_gram(fixed.basis, g.form), theta_coords=theta, form=g.form)


# --------------------------------------------------------------------------- symplectic class


@dataclass(frozen=True)
class SymplecticClass:
    """[omega] = s1 s2 + theta, as coordinates in the degree-2 basis."""

    theta_coords: tuple
    d: Fraction
    omega: dict

    def without_theta(self, ring: MabCohomology) -> "SymplecticClass":
        return SymplecticClass(tuple(0 for _ in self.theta_coords), Fraction(0),
                               {ring.index(3, "1"): Fraction(1)})


def symplectic_class(ring: MabCohomology) -> SymplecticClass:
    if ring.theta_coords is None:
        raise ConsistencyError("ring carries no theta class")
    theta = {ring.index(0, i): Fraction(c) for i, c in enumerate(ring.theta_coords) if c}
    sq = ring.multiply(theta, theta)
    kappa = ring.index(0, "k")
    if set(sq) - {kappa}:
        raise ConsistencyError("theta^2 is not a multiple of the fibre class")
    d = sq.get(kappa, Fraction(0))
    omega = dict(theta)
    omega[ring.index(3, "1")] = Fraction(1)
    return SymplecticClass(tuple(ring.theta_coords), Fraction(d), omega)


# --------------------------------------------------------------------------- hard Lefschetz


@dataclass(frozen=True)
class LefschetzMap:
    j: int
    matrix: RationalMatrix
    rank: int
    isomorphism: bool


@dataclass(frozen=True)
class LefschetzReport:
    maps: tuple[LefschetzMap, ...]

    @property
    def verdict(self) -> bool:
        return all(m.isomorphism for m in self.maps)

    def failed_degrees(self) -> list[int]:
        return [m.j for m in self.maps if not m.isomorphism]


def lefschetz_matrix(ring: MabCohomology, omega: dict, j: int) -> RationalMatrix:
    src = ring.degree_indices(3 - j)
    dst = ring.degree_indices(3 + j)
    pos = {k: r for r, k in enumerate(dst)}
    wj = ring.power(omega, j)
    rows = [[0] * len(src) for _ in dst]
    for col, b in enumerate(src):
        for k, c in ring.multiply(wj, {b: Fraction(1)}).items():
            rows[pos[k]][col] = c
    if not dst:
        return RationalMatrix(0, len(src), ())
    return RationalMatrix.from_rows(rows)


def hard_lefschetz(ring: MabCohomology, w: SymplecticClass) -> LefschetzReport:
    maps = []
    for j in (1, 2, 3):
        mat = lefschetz_matrix(ring, w.omega, j)
        r = rank(mat) if mat.rows and mat.cols else 0
        iso = mat.is_square() and r == mat.rows
        maps.append(LefschetzMap(j, mat, r, iso))
    return LefschetzReport(tuple(maps))


# --------------------------------------------------------------------------- formality


@dataclass(frozen=True)
class FormalityWitness:
    b1_is_one: bool
    s2_isomorphisms: tuple[bool, bool, bool]
    semisimple_at_one: bool
    justification: tuple[str, ...]

    @property
    def verdict(self) -> bool:
        return self.b1_is_one and all(self.s2_isomorphisms) and self.semisimple_at_one

    def failed_degree(self) -> int | None:
        for j, ok in enumerate(self.s2_isomorphisms):
            if not ok:
                return j
        return None


def s2_cup_is_isomorphism(g: RationalMatrix) -> bool:
    """
    Whether s2 cup: ker(g - I) -> coker(g - I) is bijective.

    In the Wang sequence this map is the composite of the inclusion of the
    fixed vectors with the quotient by im(g - I).
    """
    n = g.rows
    d = g - RationalMatrix.identity(n)
    kernel = fixed_subspace(g).basis
    image_rank = rank(d)
    if len(kernel) != n - image_rank:
        return False
    if not kernel:
        return True
    cols = [list(v) for v in kernel] + [list(d.column(j)) for j in range(n)]
    induced = rank(RationalMatrix.from_columns(cols)) - image_rank
    return induced == len(kernel)


def formality_witness_for_action(h2: RationalMatrix) -> FormalityWitness:
    actions = fibre_actions(h2)
    wang = wang_from_actions(actions)
    isos = tuple(s2_cup_is_isomorphism(actions[2 * j]) for j in range(3))
    ss = semisimple_at_one(h2)
    if isos[1] != ss:
        raise ConsistencyError("s2-cup bijectivity and semisimplicity at 1 disagree")
    notes = (
        "b1(N) = %d" % wang.betti_n[1],
        "s2 cup: H^0(N) -> H^1(N) %s" % ("bijective" if isos[0] else "NOT bijective"),
        "s2 cup: H^2(N) -> H^3(N) %s" % ("bijective" if isos[1] else "NOT bijective"),
        "s2 cup: H^4(N) -> H^5(N) %s" % ("bijective" if isos[2] else "NOT bijective"),
        "eigenvalue 1 of the H^2 monodromy is %s" % ("semisimple" if ss else "NOT semisimple"),
        "degree <= 2 minimal model generators a (deg 1), b_1..b_k (deg 2) with zero differential, "
        "so N is 2-formal",
        "a compact orientable 5-manifold is formal iff it is 2-formal; S^1 is formal, "
        "hence M(A) = S^1 x N is formal",
    )
    return FormalityWitness(wang.betti_n[1] == 1, isos, ss, notes)


def formality_witness(a: GaussianMatrix2) -> FormalityWitness:
    return formality_witness_for_action(kummer_action(a).matrix)
