"""Pre-Lie algebras, their representations, L-dendriform algebras and pre-Lie matched pairs."""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from fractions import Fraction

import numpy as np

from .exact import (
    qeinsum,
    AnySpace, LinearMap, ScalarLike, det, direct_sum, frozen, inverse, scalar, zeros,
)
from .lie import BilinearForm, BilinearProduct, LieAlgebra, Representation
from .report import CheckReport, StructureError, collect, timed
from .rota_baxter import RBLieAlgebra, check_admissible, check_rb_representation, rb_defect


def left_assoc(c1: np.ndarray, c2: np.ndarray) -> np.ndarray:
    """(e_i c1 e_j) c2 e_k as [i, j, k, :]."""
    return qeinsum("ijl,lkm->ijkm", c1, c2)


def right_assoc(c1: np.ndarray, c2: np.ndarray) -> np.ndarray:
    """e_i c1 (e_j c2 e_k) as [i, j, k, :]."""
    return qeinsum("jkl,ilm->ijkm", c2, c1)


def _swap(t: np.ndarray) -> np.ndarray:
    return t.transpose(1, 0, 2, 3)


def prelie_defect(c: np.ndarray) -> np.ndarray:
    x, y = left_assoc(c, c), right_assoc(c, c)
    return x - y - _swap(x) + _swap(y)


def check_prelie(p: BilinearProduct) -> CheckReport:
    out = CheckReport("prelie")
    with timed(out):
        labels = p.space.basis
        # the defect is antisymmetric in the first two slots
        collect(out, "left-symmetry", prelie_defect(p.entries), [labels] * 3, labels,
                keep=lambda t: t[0] < t[1])
    return out


@dataclass(frozen=True, eq=False)
class PreLieAlgebra:
    circ: BilinearProduct
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool) -> None:
        if verify:
            r = check_prelie(self.circ)
            if not r.passed:
                raise StructureError("not a pre-Lie algebra", r)

    @property
    def space(self) -> AnySpace:
        return self.circ.space

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def c(self) -> np.ndarray:
        return self.circ.entries


def multiplication_operators(p: BilinearProduct) -> tuple[np.ndarray, np.ndarray]:
    """Left and right multiplication matrices, L[i] = L(e_i), R[j] = R(e_j)."""
    return p.left_mult(), p.right_mult()


def induce_prelie(rb: RBLieAlgebra) -> PreLieAlgebra:
    if rb.weight != 0:
        raise StructureError("the induced pre-Lie product needs weight zero")
    c = qeinsum("ai,ajk->ijk", rb.P.matrix, rb.lie.c)
    return PreLieAlgebra(BilinearProduct(rb.space, c))


def subadjacent_lie(p: PreLieAlgebra | BilinearProduct) -> LieAlgebra:
    prod = p.circ if isinstance(p, PreLieAlgebra) else p
    return LieAlgebra(prod.commutator())


def left_invariance_defect(c: np.ndarray, b: np.ndarray) -> np.ndarray:
    """B(e_i o e_j, e_k) + B(e_j, e_i o e_k)."""
    return qeinsum("ijl,lk->ijk", c, b) + qeinsum("jl,ikl->ijk", b, c)


def check_left_invariant_form(p: PreLieAlgebra | BilinearProduct, B: BilinearForm) -> CheckReport:
    prod = p.circ if isinstance(p, PreLieAlgebra) else p
    out = CheckReport("left-invariant-form")
    with timed(out):
        labels = prod.space.basis
        collect(out, "left-invariance", left_invariance_defect(prod.entries, B.matrix)[..., None],
                [labels] * 3, ["value"])
    return out


# -- representations -------------------------------------------------------------


def prelie_rep_defects(c: np.ndarray, l: np.ndarray, r: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    ll = qeinsum("iab,jbc->ijac", l, l)
    lc = qeinsum("ijk,kab->ijab", c, l)
    d1 = ll - lc - _swap(ll) + _swap(lc)
    d2 = (qeinsum("iab,jbc->ijac", l, r) - qeinsum("jab,ibc->ijac", r, l)
          - qeinsum("ijk,kab->ijab", c, r) + qeinsum("jab,ibc->ijac", r, r))
    return d1, d2


@dataclass(frozen=True, eq=False)
class PreLieRepresentation:
    algebra: PreLieAlgebra
    module: AnySpace
    l: np.ndarray
    r: np.ndarray
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool) -> None:
        n, m = self.algebra.dim, self.module.dim
        for name in ("l", "r"):
            arr = frozen(np.asarray(getattr(self, name), dtype=object))
            if arr.shape != (n, m, m):
                raise ValueError(f"{name} matrices must have shape {(n, m, m)}")
            object.__setattr__(self, name, arr)
        if verify:
            rep = check_prelie_representation(self)
            if not rep.passed:
                raise StructureError("not a pre-Lie representation", rep)


def check_prelie_representation(rep: PreLieRepresentation) -> CheckReport:
    out = CheckReport("prelie-representation")
    with timed(out):
        d1, d2 = prelie_rep_defects(rep.algebra.c, rep.l, rep.r)
        labels = rep.algebra.space.basis
        m = rep.module.basis
        mat = [f"{a}<-{b}" for a in m for b in m]
        collect(out, "prelie-rep-1", d1, [labels] * 2, mat, keep=lambda t: t[0] < t[1])
        collect(out, "prelie-rep-2", d2, [labels] * 2, mat)
    return out


def regular_prelie_representation(p: PreLieAlgebra) -> PreLieRepresentation:
    L, R = multiplication_operators(p.circ)
    return PreLieRepresentation(p, p.space, L, R, verify=False)


def star(ops: np.ndarray) -> np.ndarray:
    """Dual action: f* = -f^T per basis element."""
    return -ops.transpose(0, 2, 1)


def dual_prelie_representation(rep: PreLieRepresentation) -> PreLieRepresentation:
    # with f* = -f^T the right action of the dual is -r*, i.e. r^T
    return PreLieRepresentation(rep.algebra, rep.module.dual(),
                                star(rep.l) - star(rep.r), -star(rep.r), verify=False)


def induced_prelie_representation(rb: RBLieAlgebra, rep: Representation) -> PreLieRepresentation:
    r = check_rb_representation(rb, rep)
    if not r.passed:
        raise StructureError("needs a Rota-Baxter representation", r)
    l = qeinsum("ki,kab->iab", rb.P.matrix, rep.rho)
    rr = -qeinsum("iab,bc->iac", rep.rho, rep.alpha.matrix)
    return PreLieRepresentation(induce_prelie(rb), rep.module, l, rr, verify=False)


# -- L-dendriform algebras ---------------------------------------------------------


def ldend_defects(tr: np.ndarray, tl: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    la, ra = left_assoc, right_assoc
    d1 = (la(tr, tr) + la(tl, tr) + _swap(ra(tr, tr)) - _swap(la(tl, tr))
          - _swap(la(tr, tr)) - ra(tr, tr))
    d2 = (la(tr, tl) + _swap(ra(tl, tr)) + _swap(ra(tl, tl)) - _swap(la(tl, tl))
          - ra(tr, tl))
    return d1, d2


def check_ldendriform_products(tri_r: BilinearProduct, tri_l: BilinearProduct) -> CheckReport:
    out = CheckReport("ldendriform")
    with timed(out):
        labels = tri_r.space.basis
        d1, d2 = ldend_defects(tri_r.entries, tri_l.entries)
        collect(out, "ldend-1", d1, [labels] * 3, labels)
        collect(out, "ldend-2", d2, [labels] * 3, labels)
        out.info["special"] = tri_l.is_antisymmetric()
    return out


@dataclass(frozen=True, eq=False)
class LDendriformAlgebra:
    tri_r: BilinearProduct
    tri_l: BilinearProduct
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool) -> None:
        if self.tri_r.space != self.tri_l.space:
            raise ValueError("products live on different spaces")
        if verify:
            r = check_ldendriform_products(self.tri_r, self.tri_l)
            if not r.passed:
                raise StructureError("not an L-dendriform algebra", r)

    @property
    def space(self) -> AnySpace:
        return self.tri_r.space

    @property
    def special(self) -> bool:
        return self.tri_l.is_antisymmetric()

    def vertical(self) -> BilinearProduct:
        return self.tri_r + self.tri_l

    def horizontal(self) -> BilinearProduct:
        return BilinearProduct(self.space, self.tri_r.entries - self.tri_l.entries.transpose(1, 0, 2))


def check_ldendriform(a: LDendriformAlgebra) -> CheckReport:
    return check_ldendriform_products(a.tri_r, a.tri_l)


def check_special_ldendriform(a: LDendriformAlgebra, circ: BilinearProduct | None = None) -> CheckReport:
    """L-dendriform identities, antisymmetry of the left product, and compatibility with circ."""
    out = check_ldendriform(a)
    sp = out.add(CheckReport("special"))
    labels = a.space.basis
    t = a.tri_l.entries
    collect(sp, "antisymmetry", t + t.transpose(1, 0, 2), [labels] * 2, labels,
            keep=lambda x: x[0] <= x[1])
    if circ is not None:
        comp = out.add(CheckReport("compatible"))
        collect(comp, "compatible", a.vertical().entries - circ.entries, [labels] * 2, labels)
    return out


def horizontal_vertical(a: LDendriformAlgebra) -> tuple[PreLieAlgebra, PreLieAlgebra]:
    return PreLieAlgebra(a.horizontal()), PreLieAlgebra(a.vertical())


def skew_sym_op_defect(c: np.ndarray, tl: np.ndarray) -> np.ndarray:
    """x<(y<z) + y<(x o z) - z<(x o y) - x o (y<z) as [x, y, z, :]."""
    t1 = right_assoc(tl, tl)
    t2 = _swap(right_assoc(tl, c))
    t3 = qeinsum("ijl,klm->ijkm", c, tl)
    t4 = right_assoc(c, tl)
    return t1 + t2 - t3 - t4


def special_from_admissible(rb: RBLieAlgebra, Q: LinearMap) -> LDendriformAlgebra:
    r = check_admissible(rb, Q)
    if not r.passed:
        raise StructureError("companion operator is not admissible", r)
    circ = induce_prelie(rb).circ
    tl = -qeinsum("ijk,lk->ijl", rb.lie.c, Q.matrix)
    tri_l = BilinearProduct(rb.space, tl)
    return LDendriformAlgebra(circ - tri_l, tri_l)


def special_from_left_invariant_form(p: PreLieAlgebra, B: BilinearForm, verify: bool = True) -> LDendriformAlgebra:
    if det(B.matrix) == 0:
        raise StructureError("form is degenerate")
    r = check_left_invariant_form(p, B)
    if not r.passed:
        raise StructureError("form is not left-invariant", r)
    # B(e_i < e_j, e_k) = B(e_i, e_k o e_j): solve B^T u = w for each (i, j)
    w = qeinsum("il,kjl->ijk", B.matrix, p.c)
    tl = qeinsum("kl,ijl->ijk", inverse(B.matrix.T), w)
    tri_l = BilinearProduct(p.space, tl)
    return LDendriformAlgebra(p.circ - tri_l, tri_l, verify=verify)


# -- Rota-Baxter pre-Lie algebras ---------------------------------------------------


def check_rb_prelie(p: PreLieAlgebra | BilinearProduct, lam: ScalarLike, P: LinearMap) -> CheckReport:
    prod = p.circ if isinstance(p, PreLieAlgebra) else p
    out = CheckReport("rb-prelie")
    with timed(out):
        labels = prod.space.basis
        collect(out, "rota-baxter", rb_defect(prod.entries, P.matrix, scalar(lam)),
                [labels] * 2, labels)
    return out


@dataclass(frozen=True, eq=False)
class RBPreLieAlgebra:
    prelie: PreLieAlgebra
    weight: Fraction
    P: LinearMap
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool) -> None:
        object.__setattr__(self, "weight", scalar(self.weight))
        if verify:
            r = check_rb_prelie(self.prelie, self.weight, self.P)
            if not r.passed:
                raise StructureError("not a Rota-Baxter pre-Lie algebra", r)

    @property
    def space(self) -> AnySpace:
        return self.prelie.space


def left_regular_rep(lie: LieAlgebra, p: PreLieAlgebra, alpha: LinearMap | None = None) -> Representation:
    """(L_o, alpha; A) as a representation of the sub-adjacent Lie algebra."""
    return Representation(lie, p.space, p.circ.left_mult(), alpha=alpha, verify=False)


def subadjacent_rb(p: PreLieAlgebra, lam: ScalarLike, P: LinearMap) -> RBLieAlgebra:
    from .cybe import OOperatorInstance, check_O_operator

    r = check_rb_prelie(p, lam, P)
    if not r.passed:
        raise StructureError("not a Rota-Baxter operator on the pre-Lie algebra", r)
    rb = RBLieAlgebra(subadjacent_lie(p), lam, P)
    rep = left_regular_rep(rb.lie, p, alpha=P)
    rr = check_rb_representation(rb, rep)
    if not rr.passed:
        raise StructureError("left multiplications fail as a Rota-Baxter representation", rr)
    ro = check_O_operator(OOperatorInstance(rb, rep, LinearMap.identity(p.space)))
    if not ro.passed:
        raise StructureError("identity fails as an O-operator", ro)
    return rb


def induced_rb_prelie_from_O(rb: RBLieAlgebra, rep: Representation, T: LinearMap) -> RBPreLieAlgebra:
    from .cybe import OOperatorInstance, check_O_operator

    r = check_O_operator(OOperatorInstance(rb, rep, T))
    if not r.passed:
        raise StructureError("not an O-operator", r)
    c = qeinsum("ka,kpb->abp", T.matrix, rep.rho)
    return RBPreLieAlgebra(PreLieAlgebra(BilinearProduct(rep.module, c)), rb.weight, rep.alpha)


# -- matched pairs of pre-Lie algebras -------------------------------------------------


def _mp_prelie_defects(cA, cB, lA, rA, lB, rB) -> tuple[np.ndarray, np.ndarray]:
    """First two matched-pair equations as [x, a, b, :] with x in A and a, b in B.

    lA, rA: A -> End(B); lB, rB: B -> End(A). The remaining two equations
    are these with A and B exchanged.
    """
    lhs1 = qeinsum("ipq,abq->iabp", lA, cB)
    t1 = qeinsum("aki,kpb->iabp", lB - rB, lA)
    t2 = qeinsum("iqa,qbp->iabp", lA - rA, cB)
    t3 = qeinsum("bki,kpa->iabp", rB, rA)
    t4 = qeinsum("iqb,aqp->iabp", lA, cB)
    d1 = lhs1 - (-t1 + t2 + t3 + t4)
    kB = cB - cB.transpose(1, 0, 2)
    lhs2 = qeinsum("ipq,abq->iabp", rA, kB)
    s1 = qeinsum("bki,kpa->iabp", lB, rA)
    s2 = qeinsum("aki,kpb->iabp", lB, rA)
    s3 = qeinsum("iqb,aqp->iabp", rA, cB)
    s4 = qeinsum("iqa,bqp->iabp", rA, cB)
    d2 = lhs2 - (s1 - s2 + s3 - s4)
    return d1, d2


@dataclass(frozen=True, eq=False)
class MatchedPairPreLie:
    A: PreLieAlgebra
    B: PreLieAlgebra
    l_A: np.ndarray  # A acting on B
    r_A: np.ndarray
    l_B: np.ndarray  # B acting on A
    r_B: np.ndarray
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool) -> None:
        for name in ("l_A", "r_A", "l_B", "r_B"):
            object.__setattr__(self, name, frozen(np.asarray(getattr(self, name), dtype=object)))
        if verify:
            r = check_matched_pair_prelie(self)
            if not r.passed:
                raise StructureError("not a matched pair of pre-Lie algebras", r)


def check_matched_pair_prelie(mp: MatchedPairPreLie) -> CheckReport:
    out = CheckReport("matched-pair-prelie")
    with timed(out):
        A, B = mp.A, mp.B
        out.add(check_prelie(A.circ)).name = "prelie-A"
        out.add(check_prelie(B.circ)).name = "prelie-B"
        out.add(check_prelie_representation(
            PreLieRepresentation(A, B.space, mp.l_A, mp.r_A, verify=False))).name = "rep-A-on-B"
        out.add(check_prelie_representation(
            PreLieRepresentation(B, A.space, mp.l_B, mp.r_B, verify=False))).name = "rep-B-on-A"
        compat = out.add(CheckReport("compatibility"))
        d1, d2 = _mp_prelie_defects(A.c, B.c, mp.l_A, mp.r_A, mp.l_B, mp.r_B)
        d3, d4 = _mp_prelie_defects(B.c, A.c, mp.l_B, mp.r_B, mp.l_A, mp.r_A)
        ab = [A.space.basis, B.space.basis, B.space.basis]
        ba = [B.space.basis, A.space.basis, A.space.basis]
        collect(compat, "mp-prelie-1", d1, ab, B.space.basis)
        collect(compat, "mp-prelie-2", d2, ab, B.space.basis)
        collect(compat, "mp-prelie-3", d3, ba, A.space.basis)
        collect(compat, "mp-prelie-4", d4, ba, A.space.basis)
    return out


def prelie_bowtie_product(mp: MatchedPairPreLie, name: str | None = None) -> BilinearProduct:
    A, B = mp.A, mp.B
    n, m = A.dim, B.dim
    space = direct_sum(A.space, B.space, name)
    c = zeros(n + m, n + m, n + m)
    c[:n, :n, :n] = A.c
    c[n:, n:, n:] = B.c
    # e_i o f_b = r_B(f_b) e_i + l_A(e_i) f_b
    c[:n, n:, :n] = mp.r_B.transpose(2, 0, 1)
    c[:n, n:, n:] = mp.l_A.transpose(0, 2, 1)
    # f_a o e_j = l_B(f_a) e_j + r_A(e_j) f_a
    c[n:, :n, :n] = mp.l_B.transpose(0, 2, 1)
    c[n:, :n, n:] = mp.r_A.transpose(2, 0, 1)
    return BilinearProduct(space, c)


def prelie_bowtie(mp: MatchedPairPreLie, name: str | None = None) -> PreLieAlgebra:
    return PreLieAlgebra(prelie_bowtie_product(mp, name), verify=False)
