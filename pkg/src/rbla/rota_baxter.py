"""Rota-Baxter operators, their representations and admissible companions."""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from fractions import Fraction

import numpy as np

from .exact import LinearMap, ScalarLike, det, direct_sum_map, eye, is_zero, qeinsum, scalar
from .lie import (
    BilinearProduct, LieAlgebra, MatchedPairLie, Representation, adjoint_rep,
    bowtie_bracket, check_lie, check_matched_pair_lie, check_representation,
    dual_matrices, dual_representation, semidirect_bracket,
)
from .report import CheckReport, StructureError, collect, timed


def rb_defect(c: np.ndarray, p: np.ndarray, lam: Fraction) -> np.ndarray:
    """P e_i * P e_j - P(e_i * P e_j) - P(P e_i * e_j) - lam P(e_i * e_j) as [i, j, :]."""
    lhs = qeinsum("ai,bj,abk->ijk", p, p, c)
    inner = (qeinsum("bj,ibk->ijk", p, c) + qeinsum("ai,ajk->ijk", p, c) + lam * c)
    return lhs - qeinsum("ijk,lk->ijl", inner, p)


def _product(g) -> BilinearProduct:
    return g.bracket if isinstance(g, LieAlgebra) else g


def check_rb_operator(g: LieAlgebra | BilinearProduct, lam: ScalarLike, P: LinearMap) -> CheckReport:
    out = CheckReport("rota-baxter")
    with timed(out):
        prod = _product(g)
        labels = prod.space.basis
        d = rb_defect(prod.entries, P.matrix, scalar(lam))
        anti = prod.is_antisymmetric()
        collect(out, "rota-baxter", d, [labels, labels], labels,
                keep=(lambda t: t[0] < t[1]) if anti else None)
    return out


@dataclass(frozen=True, eq=False)
class RBLieAlgebra:
    lie: LieAlgebra
    weight: Fraction
    P: LinearMap
    Q: LinearMap | None = None
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool) -> None:
        object.__setattr__(self, "weight", scalar(self.weight))
        for op in (self.P, self.Q):
            if op is not None and (op.domain != self.lie.space or op.codomain != self.lie.space):
                raise ValueError("operators must act on the algebra")
        if verify:
            r = check_rb_operator(self.lie, self.weight, self.P)
            if not r.passed:
                raise StructureError("not a Rota-Baxter operator", r)
            if self.Q is not None:
                r = check_admissible(self, self.Q)
                if not r.passed:
                    raise StructureError("companion operator is not admissible", r)

    @property
    def space(self):
        return self.lie.space

    @property
    def dim(self) -> int:
        return self.lie.dim

    def with_Q(self, Q: LinearMap | None, verify: bool = True) -> "RBLieAlgebra":
        return RBLieAlgebra(self.lie, self.weight, self.P, Q, verify=verify)

    def identity(self) -> LinearMap:
        return LinearMap.identity(self.space)


def rb_rep_defect(c: np.ndarray, rho: np.ndarray, p: np.ndarray, a: np.ndarray,
                  lam: Fraction) -> np.ndarray:
    """rho(P x) alpha(v) - alpha(rho(P x) v) - alpha(rho(x) alpha(v)) - lam alpha(rho(x) v).

    Returned as [i, b, :] for x = e_i and v = v_b.
    """
    rp = qeinsum("ki,kab->iab", p, rho)
    d = (qeinsum("iab,bc->iac", rp, a) - qeinsum("ab,ibc->iac", a, rp)
         - qeinsum("ab,ibc,cd->iad", a, rho, a) - lam * qeinsum("ab,ibc->iac", a, rho))
    return d.transpose(0, 2, 1)


def check_rb_representation(rb: RBLieAlgebra, rep: Representation) -> CheckReport:
    if rep.alpha is None:
        raise ValueError("Rota-Baxter representation needs an alpha operator")
    out = CheckReport("rb-representation")
    with timed(out):
        d = rb_rep_defect(rb.lie.c, rep.rho, rb.P.matrix, rep.alpha.matrix, rb.weight)
        collect(out, "rb-representation", d, [rb.space.basis, rep.module.basis], rep.module.basis)
    return out


def admissible_defect(rho: np.ndarray, p: np.ndarray, b: np.ndarray, lam: Fraction) -> np.ndarray:
    """beta(rho(Px)v) - rho(Px)beta(v) - beta(rho(x)beta(v)) - lam rho(x)beta(v) as [i, b, :]."""
    rp = qeinsum("ki,kab->iab", p, rho)
    d = (qeinsum("ab,ibc->iac", b, rp) - qeinsum("iab,bc->iac", rp, b)
         - qeinsum("ab,ibc,cd->iad", b, rho, b) - lam * qeinsum("iab,bc->iac", rho, b))
    return d.transpose(0, 2, 1)


def check_admissible(rb: RBLieAlgebra, rep: Representation | LinearMap | None = None) -> CheckReport:
    """Admissibility of beta for (rho; V); a bare map or None means Q with the adjoint."""
    if rep is None:
        if rb.Q is None:
            raise ValueError("no companion operator to check")
        rep = rb.Q
    if isinstance(rep, LinearMap):
        rep = adjoint_rep(rb.lie, beta=rep)
    if rep.beta is None:
        raise ValueError("admissibility check needs a beta operator")
    out = CheckReport("admissible")
    with timed(out):
        direct = out.add(CheckReport("admissible-direct"))
        d = admissible_defect(rep.rho, rb.P.matrix, rep.beta.matrix, rb.weight)
        collect(direct, "admissible", d, [rb.space.basis, rep.module.basis], rep.module.basis)
        dual = dual_representation(rep).with_ops(alpha=rep.beta.T)
        via_dual = check_rb_representation(rb, dual)
        via_dual.name = "dual-rb-representation"
        out.info["direct"] = direct.passed
        out.info["dual_route"] = via_dual.passed
        if direct.passed != via_dual.passed:
            out.add(via_dual)
    return out


def standard_admissibles(rb: RBLieAlgebra) -> list[LinearMap]:
    ident = rb.identity()
    lam = rb.weight
    return [-rb.P - lam * ident, -lam * ident, LinearMap.zero(rb.space)]


def semidirect_operator(rb: RBLieAlgebra, rep: Representation, space) -> LinearMap:
    return direct_sum_map(rb.P, rep.alpha, space)


def semidirect_product_rb(rb: RBLieAlgebra, rep: Representation, name: str | None = None) -> RBLieAlgebra:
    r = check_rb_representation(rb, rep)
    if not r.passed:
        raise StructureError("semidirect product needs a Rota-Baxter representation", r)
    prod = semidirect_bracket(rb.lie, rep, name)
    lie = LieAlgebra(prod, verify=False)
    return RBLieAlgebra(lie, rb.weight, semidirect_operator(rb, rep, prod.space), verify=False)


def check_rep_equivalence(rb: RBLieAlgebra, rep1: Representation, rep2: Representation,
                          phi: LinearMap) -> CheckReport:
    if det(phi.matrix) == 0:
        raise StructureError("equivalence map is singular")
    out = CheckReport("rep-equivalence")
    with timed(out):
        f = phi.matrix
        d = qeinsum("ab,ibc->iac", f, rep1.rho) - qeinsum("iab,bc->iac", rep2.rho, f)
        collect(out, "intertwining", d.transpose(0, 2, 1), [rb.space.basis, rep1.module.basis],
                rep2.module.basis)
        if rep1.alpha is not None and rep2.alpha is not None:
            da = f.dot(rep1.alpha.matrix) - rep2.alpha.matrix.dot(f)
            collect(out, "operator-intertwining", da.T, [rep1.module.basis], rep2.module.basis)
    return out


# -- matched pairs of Rota-Baxter Lie algebras ---------------------------------


@dataclass(frozen=True, eq=False)
class MatchedPairRB:
    g: RBLieAlgebra
    h: RBLieAlgebra
    rho_g: Representation  # g on h, alpha = P_h
    rho_h: Representation  # h on g, alpha = P_g
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool) -> None:
        if self.g.weight != self.h.weight:
            raise ValueError("mixed weights in a matched pair")
        if verify:
            r = check_matched_pair_rb(self)
            if not r.passed:
                raise StructureError("not a matched pair of Rota-Baxter Lie algebras", r)

    @classmethod
    def from_actions(cls, g: RBLieAlgebra, h: RBLieAlgebra, rg: np.ndarray, rh: np.ndarray,
                     verify: bool = True) -> "MatchedPairRB":
        rho_g = Representation(g.lie, h.space, rg, alpha=h.P, verify=False)
        rho_h = Representation(h.lie, g.space, rh, alpha=g.P, verify=False)
        return cls(g, h, rho_g, rho_h, verify=verify)

    def lie_pair(self) -> MatchedPairLie:
        return MatchedPairLie(self.g.lie, self.h.lie, self.rho_g, self.rho_h, verify=False)


def check_matched_pair_rb(mp: MatchedPairRB) -> CheckReport:
    out = CheckReport("matched-pair-rb")
    with timed(out):
        out.add(check_matched_pair_lie(mp.lie_pair()))
        out.add(check_rb_operator(mp.g.lie, mp.g.weight, mp.g.P)).name = "rota-baxter-g"
        out.add(check_rb_operator(mp.h.lie, mp.h.weight, mp.h.P)).name = "rota-baxter-h"
        rg = mp.rho_g.with_ops(alpha=mp.h.P)
        rh = mp.rho_h.with_ops(alpha=mp.g.P)
        out.add(check_rb_representation(mp.g, rg)).name = "rb-rep-g-on-h"
        out.add(check_rb_representation(mp.h, rh)).name = "rb-rep-h-on-g"
    return out


def rb_bowtie(mp: MatchedPairRB, name: str | None = None) -> RBLieAlgebra:
    prod = bowtie_bracket(mp.g.lie, mp.h.lie, mp.rho_g.rho, mp.rho_h.rho, name)
    return RBLieAlgebra(LieAlgebra(prod, verify=False), mp.g.weight,
                        direct_sum_map(mp.g.P, mp.h.P, prod.space), verify=False)


def check_rb_lie_structure(rb: RBLieAlgebra) -> CheckReport:
    """Lie identity plus Rota-Baxter identity, without assuming either."""
    out = CheckReport("rb-lie-algebra")
    out.add(check_lie(rb.lie.bracket))
    out.add(check_rb_operator(rb.lie, rb.weight, rb.P))
    return out


# -- admissibility on semidirect products ------------------------------------


def adm_sd_defect(rho: np.ndarray, a: np.ndarray, b: np.ndarray, q: np.ndarray,
                  lam: Fraction) -> np.ndarray:
    """beta(rho(x)alpha(v)) - beta(rho(Qx)v) - rho(Qx)alpha(v) - lam rho(Qx)v as [i, b, :]."""
    rq = qeinsum("ki,kab->iab", q, rho)
    d = (qeinsum("ab,ibc,cd->iad", b, rho, a) - qeinsum("ab,ibc->iac", b, rq)
         - qeinsum("iab,bc->iac", rq, a) - lam * rq)
    return d.transpose(0, 2, 1)


def check_admSD_compat(rb: RBLieAlgebra, rep: Representation, Q: LinearMap) -> CheckReport:
    """Three-way comparison for admissibility on both semidirect products.

    Route (a): Q+beta admissible to (g x_rho V, P+alpha). Route (b): Q+alpha*
    admissible to (g x_rho* V*, P+beta*). Route (c): the four componentwise
    conditions. The report passes when all three pass; ``info["agree"]``
    records whether the three verdicts coincide.
    """
    if rep.alpha is None or rep.beta is None:
        raise ValueError("needs a representation with alpha and beta")
    out = CheckReport("adm-sd")
    with timed(out):
        lam = rb.weight
        g_rb = rb.with_Q(None, verify=False)

        side_a = CheckReport("semidirect-rho")
        sd = RBLieAlgebra(LieAlgebra(semidirect_bracket(rb.lie, rep), verify=False), lam,
                          direct_sum_map(rb.P, rep.alpha, semidirect_bracket(rb.lie, rep).space),
                          verify=False)
        side_a.add(check_rb_operator(sd.lie, lam, sd.P))
        side_a.add(check_admissible(sd, direct_sum_map(Q, rep.beta, sd.space)))

        side_b = CheckReport("semidirect-dual")
        drep = dual_representation(rep)
        prod_b = semidirect_bracket(rb.lie, drep)
        sdb = RBLieAlgebra(LieAlgebra(prod_b, verify=False), lam,
                           direct_sum_map(rb.P, rep.beta.T, prod_b.space), verify=False)
        side_b.add(check_rb_operator(sdb.lie, lam, sdb.P))
        side_b.add(check_admissible(sdb, direct_sum_map(Q, rep.alpha.T, prod_b.space)))

        side_c = CheckReport("conditions")
        c1 = side_c.add(check_rb_representation(g_rb, rep))
        c1.name = "i-rb-representation"
        c2 = side_c.add(check_admissible(g_rb, Q))
        c2.name = "ii-admissible-Q"
        c3 = side_c.add(check_admissible(g_rb, rep.with_ops(beta=rep.beta)))
        c3.name = "iii-admissible-beta"
        c4 = side_c.add(CheckReport("iv-compatibility"))
        d = adm_sd_defect(rep.rho, rep.alpha.matrix, rep.beta.matrix, Q.matrix, lam)
        collect(c4, "adm-sd-compat", d, [rb.space.basis, rep.module.basis], rep.module.basis)

        for side in (side_a, side_b, side_c):
            out.add(side)
        verdicts = {"a": side_a.passed, "b": side_b.passed, "c": side_c.passed}
        out.info["verdicts"] = verdicts
        out.info["agree"] = len(set(verdicts.values())) == 1
    return out
