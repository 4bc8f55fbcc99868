"""Coboundary constructions: delta_r, the CYBE and its admissible variant, O-operators."""

from __future__ import annotations

from dataclasses import InitVar, dataclass

import numpy as np

from .bialgebra import (
    RBLieBialgebra, SLDBialgebra, _c2, _c3, _pushed, bialgebra_compat_defect, check_lie_coalgebra,
    check_rb_lie_bialgebra, dualize_coproduct, induce_sld_bialgebra, induction_coproducts,
    rb_coalgebra_defect,
)
from .exact import Coproduct, LinearMap, Space, Tensor2, Tensor3, direct_sum_map, qeinsum, zeros
from .lie import LieAlgebra, Representation, adjoint_rep, check_lie, dual_representation
from .prelie import (
    LDendriformAlgebra, PreLieAlgebra, RBPreLieAlgebra, check_special_ldendriform, induce_prelie,
    left_regular_rep, special_from_admissible, subadjacent_rb,
)
from .report import CheckReport, StructureError, collect, timed
from .rota_baxter import (
    RBLieAlgebra, adm_sd_defect, admissible_defect, check_admissible, check_rb_representation,
    semidirect_product_rb,
)


def _as_array(r: Tensor2 | np.ndarray) -> np.ndarray:
    return r.coeffs if isinstance(r, Tensor2) else r


# -- coboundaries and the CYBE -------------------------------------------------------


def coboundary_coeffs(c: np.ndarray, r: np.ndarray) -> np.ndarray:
    """delta_r(e_i) = (ad e_i (x) 1 + 1 (x) ad e_i) r as [i, a, b]."""
    ad = c.transpose(0, 2, 1)
    return qeinsum("ipa,ab->ipb", ad, r) + qeinsum("ab,iqb->iaq", r, ad)


def coboundary_delta(g: LieAlgebra, r: Tensor2 | np.ndarray) -> Coproduct:
    return Coproduct(g.space, coboundary_coeffs(g.c, _as_array(r)))


def triple_terms(c13: np.ndarray, c23a: np.ndarray, c23b: np.ndarray,
                 r: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """r12 * r13, r12 * r23, r13 * r23 for the given products."""
    t12_13 = qeinsum("pq,ts,ptk->kqs", r, r, c13)
    t12_23 = qeinsum("pq,ts,qtk->pks", r, r, c23a)
    t13_23 = qeinsum("pq,ts,qsk->ptk", r, r, c23b)
    return t12_13, t12_23, t13_23


def cybe_coeffs(c: np.ndarray, r: np.ndarray) -> np.ndarray:
    a, b, d = triple_terms(c, c, c, r)
    return a + b + d


def cybe_tensor(g: LieAlgebra, r: Tensor2 | np.ndarray) -> Tensor3:
    s = g.space
    return Tensor3((s, s, s), cybe_coeffs(g.c, _as_array(r)))


def check_invariance_conditions(g: LieAlgebra, r: Tensor2 | np.ndarray) -> CheckReport:
    """Conditions under which delta_r gives a Lie bialgebra."""
    r = _as_array(r)
    out = CheckReport("coboundary-invariance")
    with timed(out):
        ad = g.ad()
        s = r + r.T
        e1 = qeinsum("ipa,ab->ipb", ad, s) + qeinsum("ab,iqb->iaq", s, ad)
        collect(out.add(CheckReport("symmetric-part")), "symmetric-part-invariance", e1,
                [g.space.basis], _c2(g.space))
        t = cybe_coeffs(g.c, r)
        e2 = (qeinsum("ipa,abc->ipbc", ad, t) + qeinsum("iqb,abc->iaqc", ad, t)
              + qeinsum("isc,abc->iabs", ad, t))
        collect(out.add(CheckReport("cybe-invariance")), "cybe-invariance", e2,
                [g.space.basis], _c3(g.space))
    return out


@dataclass(frozen=True, eq=False)
class CYBESolution:
    rb: RBLieAlgebra
    Q: LinearMap
    r: Tensor2
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool) -> None:
        if not isinstance(self.r, Tensor2):
            object.__setattr__(self, "r", Tensor2(self.rb.space, self.rb.space, self.r))
        if verify:
            rep = check_admissible_cybe(self)
            if not rep.passed:
                raise StructureError("not a solution of the admissible CYBE", rep)

    @property
    def antisymmetric(self) -> bool:
        return self.r.is_antisymmetric()


def side_conditions(p: np.ndarray, q: np.ndarray, r: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(P(x)id - id(x)Q) r and (Q(x)id - id(x)P) r."""
    return p.dot(r) - r.dot(q.T), q.dot(r) - r.dot(p.T)


def check_admissible_cybe(sol: CYBESolution) -> CheckReport:
    out = CheckReport("admissible-cybe")
    with timed(out):
        g = sol.rb.lie
        s = g.space
        r = sol.r.coeffs
        t = cybe_coeffs(g.c, r)
        collect(out.add(CheckReport("cybe")), "cybe", t[..., None], [s.basis] * 3, ["value"])
        e2, e3 = side_conditions(sol.rb.P.matrix, sol.Q.matrix, r)
        c2 = out.add(CheckReport("side-P"))
        collect(c2, "side-P", e2[..., None], [s.basis] * 2, ["value"])
        c3 = out.add(CheckReport("side-Q"))
        collect(c3, "side-Q", e3[..., None], [s.basis] * 2, ["value"])
        anti = sol.antisymmetric
        out.info["antisymmetric"] = anti
        if anti:
            out.info["side_conditions_agree"] = c2.passed == c3.passed
            if c2.passed != c3.passed:
                out.add(CheckReport("side-conditions-disagree", violations=list(c2.violations)))
            # operator form: T_r a weak O-operator for (ad*, Q*)
            op = check_O_operator(solution_operator_instance(sol), full=False)
            out.info["operator_route"] = op.info["weak"]
            if op.info["weak"] != (not out.all_violations()):
                op.name = "operator-route-disagrees"
                out.add(op)
    return out


def solution_operator_instance(sol: CYBESolution) -> "OOperatorInstance":
    g = sol.rb.lie
    rep = dual_representation(adjoint_rep(g)).with_ops(alpha=sol.Q.T)
    T = LinearMap(rep.module, g.space, sol.r.coeffs.T)
    return OOperatorInstance(sol.rb.with_Q(None, verify=False), rep, T)


def coboundary_conditions_general(rb: RBLieAlgebra, r: Tensor2 | np.ndarray) -> CheckReport:
    """The two operator identities equivalent to the Rota-Baxter coalgebra and compatibility axioms."""
    if rb.Q is None:
        raise ValueError("needs the companion Q")
    r = _as_array(r)
    g = rb.lie
    d = coboundary_delta(g, r)
    lie = check_lie(dualize_coproduct(d))
    if not lie.passed:
        v = lie.all_violations()[0]
        raise StructureError(f"dual of delta_r is not a Lie algebra (witness {','.join(v.witness)})", lie)
    out = CheckReport("coboundary-conditions")
    with timed(out):
        p, q, lam = rb.P.matrix, rb.Q.matrix, rb.weight
        ad = g.ad()
        s2, s3 = side_conditions(p, q, r)
        qad = qeinsum("pa,iab->ipb", q, ad)
        pad = qeinsum("pa,iab->ipb", p, ad)
        adq, adp = _pushed(ad, q), _pushed(ad, p)
        x = qad - adq
        # the two terms enter with opposite signs: the difference equals the
        # Rota-Baxter coalgebra defect of delta_r exactly once Q is admissible
        left, right = qeinsum("ab,iqb->iaq", s3, x), qeinsum("ipa,ab->ipb", x, s2)
        e1 = left - right
        out.info["summed_form"] = not np.count_nonzero(left + right)
        y = qeinsum("ab,iqb->iaq", s2, adp + qad + lam * ad)
        e2 = y + qeinsum("ipa,ab->ipb", adp - pad, s2)
        basis = g.space.basis
        c1 = out.add(CheckReport("condition-coalgebra"))
        collect(c1, "coboundary-condition-1", e1, [basis], _c2(g.space))
        c2 = out.add(CheckReport("condition-compatibility"))
        collect(c2, "coboundary-condition-2", e2, [basis], _c2(g.space))
        rbco = not np.count_nonzero(rb_coalgebra_defect(d.coeffs, q, lam))
        comp = not np.count_nonzero(bialgebra_compat_defect(d.coeffs, p, q, lam))
        out.info["rb_coalgebra"] = rbco
        out.info["compatibility"] = comp
        out.info["agree"] = (rbco == c1.passed) and (comp == c2.passed)
    return out


def build_coboundary_rb_bialgebra(sol: CYBESolution) -> RBLieBialgebra:
    rep = check_admissible_cybe(sol)
    if not rep.passed:
        raise StructureError("r does not solve the admissible CYBE", rep)
    if not sol.antisymmetric:
        raise StructureError("r must be antisymmetric")
    adm = check_admissible(sol.rb.with_Q(None, verify=False), sol.Q)
    if not adm.passed:
        raise StructureError("Q is not admissible", adm)
    return RBLieBialgebra(sol.rb.with_Q(sol.Q, verify=False), coboundary_delta(sol.rb.lie, sol.r))


# -- O-operators -----------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class OOperatorInstance:
    rb: RBLieAlgebra
    rep: Representation
    T: LinearMap

    def __post_init__(self) -> None:
        if self.rep.alpha is None:
            raise ValueError("the representation needs its operator alpha")


def o_operator_defect(c: np.ndarray, rho: np.ndarray, m: np.ndarray) -> np.ndarray:
    """[Tu,Tv] - T(rho(Tu)v - rho(Tv)u) as [u, v, :]."""
    lhs = qeinsum("ai,bj,abk->ijk", m, m, c)
    act = qeinsum("ai,apj->ijp", m, rho)
    return lhs - qeinsum("kp,ijp->ijk", m, act - act.transpose(1, 0, 2))


def check_O_operator(inst: OOperatorInstance, full: bool = True) -> CheckReport:
    out = CheckReport("o-operator")
    with timed(out):
        g, rep, m = inst.rb.lie, inst.rep, inst.T.matrix
        vb = rep.module.basis
        e1 = out.add(CheckReport("o-operator-identity"))
        collect(e1, "o-operator", o_operator_defect(g.c, rep.rho, m), [vb] * 2, g.space.basis)
        e2 = out.add(CheckReport("operator-compatibility"))
        collect(e2, "PT=Talpha", (inst.rb.P.matrix.dot(m) - m.dot(rep.alpha.matrix)).T, [vb],
                g.space.basis)
        weak = e1.passed and e2.passed
        rr = check_rb_representation(inst.rb, rep)
        out.info["weak"] = weak
        out.info["rb_representation"] = rr.passed
        out.info["full"] = weak and rr.passed
        if full:
            out.add(rr)
    return out


def embed_operator(T: LinearMap, space: Space) -> Tensor2:
    """r = T - tau(T) with T read as an element of g (x) V* inside the double."""
    n, m = T.matrix.shape
    r = zeros(n + m, n + m)
    r[:n, n:] = T.matrix
    r[n:, :n] = -T.matrix.T
    return Tensor2(space, space, r)


def _dual_double(inst: OOperatorInstance, beta: LinearMap) -> RBLieAlgebra:
    drep = dual_representation(inst.rep).with_ops(alpha=beta.T)
    return semidirect_product_rb(inst.rb.with_Q(None, verify=False), drep)


def lift_O_operator(inst: OOperatorInstance, Q: LinearMap, beta: LinearMap,
                    strict: bool = True) -> CYBESolution:
    """r = T - tau(T) on g x_rho* V* with operator P + beta* and companion Q + alpha*.

    With ``strict`` the preconditions are enforced; otherwise the candidate is
    returned unchecked so failing preconditions can be compared with the
    solution check.
    """
    m = inst.T.matrix
    comm = (m.dot(beta.matrix) - Q.matrix.dot(m)).T
    if strict:
        pre = CheckReport("lift-preconditions")
        collect(pre, "Tbeta=QT", comm, [inst.rep.module.basis], inst.rb.space.basis)
        adm = admissible_defect(inst.rep.rho, inst.rb.P.matrix, beta.matrix, inst.rb.weight)
        collect(pre, "beta-admissible", adm, [inst.rb.space.basis, inst.rep.module.basis],
                inst.rep.module.basis)
        if not pre.passed:
            raise StructureError("lift preconditions fail", pre)
    double = _dual_double(inst, beta)
    companion = direct_sum_map(Q, inst.rep.alpha.T, double.space)
    return CYBESolution(double, companion, embed_operator(inst.T, double.space), verify=False)


ADMISSIBLE_PAIRS = ("zero", "weight", "operator")


def standard_pairs(inst: OOperatorInstance) -> list[tuple[str, LinearMap, LinearMap]]:
    """The (Q, beta) choices (0,0), (-lam id, -lam id), (-P - lam id, -alpha - lam id)."""
    lam = inst.rb.weight
    g, v = inst.rb.space, inst.rep.module
    ig, iv = LinearMap.identity(g), LinearMap.identity(v)
    return [
        ("zero", LinearMap.zero(g), LinearMap.zero(v)),
        ("weight", -lam * ig, -lam * iv),
        ("operator", -inst.rb.P - lam * ig, -inst.rep.alpha - lam * iv),
    ]


def bialgebras_from_O(inst: OOperatorInstance) -> list[RBLieBialgebra]:
    r = check_O_operator(inst)
    if not r.passed:
        raise StructureError("not an O-operator", r)
    return [build_coboundary_rb_bialgebra(lift_O_operator(inst, Q, beta))
            for _, Q, beta in standard_pairs(inst)]


def prelie_instance(a: RBPreLieAlgebra) -> OOperatorInstance:
    rb = subadjacent_rb(a.prelie, a.weight, a.P)
    rep = left_regular_rep(rb.lie, a.prelie, alpha=a.P)
    return OOperatorInstance(rb, rep, LinearMap.identity(a.space))


def canonical_r_from_prelie(a: RBPreLieAlgebra) -> tuple[CYBESolution, list[RBLieBialgebra]]:
    inst = prelie_instance(a)
    bialgebras = bialgebras_from_O(inst)
    _, Q, beta = standard_pairs(inst)[0]
    return lift_O_operator(inst, Q, beta), bialgebras


# -- special L-dendriform coboundaries -----------------------------------------------


def sld_equation_defect(tr: np.ndarray, tl: np.ndarray, r: np.ndarray) -> np.ndarray:
    """r12 o r23 + r13 o r23 - r12 < r13."""
    c = tr + tl
    a, b, d = triple_terms(tl, c, c, r)
    return b + d - a


def check_sld_equation(a: LDendriformAlgebra, r: Tensor2 | np.ndarray) -> CheckReport:
    out = CheckReport("sld-equation")
    with timed(out):
        s = a.space
        e = sld_equation_defect(a.tri_r.entries, a.tri_l.entries, _as_array(r))
        collect(out, "sld-equation", e[..., None], [s.basis] * 3, ["value"])
    return out


def coboundary_sld_coeffs(tr: np.ndarray, tl: np.ndarray, r: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    c = tr + tl
    Lr, Lc = tr.transpose(0, 2, 1), c.transpose(0, 2, 1)
    ad = (c - c.transpose(1, 0, 2)).transpose(0, 2, 1)
    Dl = qeinsum("ipa,ab->ipb", Lr, r) + qeinsum("ab,iqb->iaq", r, ad)
    Nb = -(qeinsum("ipa,ab->ipb", Lc, r) + qeinsum("ab,iqb->iaq", r, Lc))
    return Dl, Nb


def coboundary_sld(a: LDendriformAlgebra, r: Tensor2 | np.ndarray) -> SLDBialgebra:
    r = _as_array(r)
    if np.count_nonzero(r + r.T):
        raise StructureError("r must be antisymmetric")
    eq = check_sld_equation(a, r)
    if not eq.passed:
        raise StructureError("r does not satisfy the special L-dendriform equation", eq)
    Dl, Nb = coboundary_sld_coeffs(a.tri_r.entries, a.tri_l.entries, r)
    return SLDBialgebra(a, Coproduct(a.space, Dl), Coproduct(a.space, Nb))


def check_cob_sp_identity(rb: RBLieAlgebra, Q: LinearMap, r: Tensor2 | np.ndarray) -> CheckReport:
    """Reduction of the special L-dendriform equation to (Q (x) id (x) id) of the CYBE tensor.

    The reduction uses (Q(x)id - id(x)P) r = 0; ``info["hypothesis"]``
    records whether that side condition holds, and the identity is only
    claimed under it.
    """
    r = _as_array(r)
    out = CheckReport("cob-sp-identity")
    with timed(out):
        g = rb.lie
        s = g.space
        circ = qeinsum("ai,ajk->ijk", rb.P.matrix, g.c)
        tl = -qeinsum("ijk,lk->ijl", g.c, Q.matrix)
        lhs = sld_equation_defect(circ - tl, tl, r)
        rhs = qeinsum("pa,abc->pbc", Q.matrix, cybe_coeffs(g.c, r))
        _, e3 = side_conditions(rb.P.matrix, Q.matrix, r)
        hyp = not np.count_nonzero(e3)
        out.info["hypothesis"] = hyp
        diff = lhs - rhs
        out.info["identity_holds"] = not np.count_nonzero(diff)
        if hyp:
            collect(out, "cob-sp-identity", diff[..., None], [s.basis] * 3, ["value"])
    return out


def verify_same_construction(b: RBLieBialgebra, r: Tensor2 | np.ndarray) -> CheckReport:
    """The induced and the coboundary special L-dendriform coproducts agree."""
    r = _as_array(r)
    out = CheckReport("same-construction")
    with timed(out):
        if b.weight != 0:
            raise StructureError("needs weight zero")
        s = b.rb.space
        Dl, Nb = induction_coproducts(b.rb, b.delta.coeffs)
        ld = special_from_admissible(b.rb, b.Q)
        Dl2, Nb2 = coboundary_sld_coeffs(ld.tri_r.entries, ld.tri_l.entries, r)
        collect(out, "Delta", Dl - Dl2, [s.basis], _c2(s))
        collect(out, "Nabla", Nb - Nb2, [s.basis], _c2(s))
    return out


# -- special L-dendriform bialgebras from O-operators ----------------------------------


def sld_hypotheses(inst: OOperatorInstance, Q: LinearMap, beta: LinearMap) -> CheckReport:
    rb, rep = inst.rb, inst.rep
    out = CheckReport("sld-from-O-hypotheses")
    with timed(out):
        if rb.weight != 0:
            out.add(CheckReport("weight-zero", violations=[_violation("weight")]))
        out.add(check_admissible(rb.with_Q(None, verify=False), Q)).name = "Q-admissible"
        beta_adm = out.add(CheckReport("beta-admissible"))
        vb = rep.module.basis
        collect(beta_adm, "admissible", admissible_defect(rep.rho, rb.P.matrix, beta.matrix, rb.weight),
                [rb.space.basis, vb], vb)
        sd = out.add(CheckReport("semidirect-compatibility"))
        collect(sd, "adm-sd", adm_sd_defect(rep.rho, rep.alpha.matrix, beta.matrix, Q.matrix, rb.weight),
                [rb.space.basis, vb], vb)
        out.add(check_O_operator(inst))
        comm = out.add(CheckReport("Tbeta=QT"))
        m = inst.T.matrix
        collect(comm, "Tbeta=QT", (m.dot(beta.matrix) - Q.matrix.dot(m)).T, [vb], rb.space.basis)
    return out


def _violation(tag: str):
    from .report import Violation
    return Violation(tag, (), ())


def sld_from_O(inst: OOperatorInstance, Q: LinearMap, beta: LinearMap) -> SLDBialgebra:
    hyp = sld_hypotheses(inst, Q, beta)
    if not hyp.passed:
        raise StructureError("hypotheses fail", hyp)
    sol = lift_O_operator(inst, Q, beta)
    b = build_coboundary_rb_bialgebra(sol)
    return induce_sld_bialgebra(b)


def cor_cons1(rb: RBLieAlgebra, Q: LinearMap) -> SLDBialgebra:
    """T = P on the adjoint representation with alpha = P and beta = Q."""
    inst = OOperatorInstance(rb.with_Q(None, verify=False), adjoint_rep(rb.lie, alpha=rb.P), rb.P)
    return sld_from_O(inst, Q, Q)


def cor_cons2(a: RBPreLieAlgebra) -> list[SLDBialgebra]:
    """T = id on (L_o, P; A) with (Q, beta) = (-P, -P) and (0, 0)."""
    inst = prelie_instance(a)
    P = inst.rb.P
    zero = LinearMap.zero(inst.rb.space)
    return [sld_from_O(inst, -P, -inst.rep.alpha), sld_from_O(inst, zero, zero)]


def iterate_family(rb: RBLieAlgebra, rounds: int = 2) -> list[tuple[str, SLDBialgebra]]:
    """Four special L-dendriform bialgebras per round, then pass to (g', P)."""
    out: list[tuple[str, SLDBialgebra]] = []
    current = rb.with_Q(None, verify=False)
    for k in range(rounds):
        out.append((f"round{k}-cons1-minusP", cor_cons1(current, -current.P)))
        out.append((f"round{k}-cons1-zero", cor_cons1(current, LinearMap.zero(current.space))))
        pre = RBPreLieAlgebra(induce_prelie(current), 0, current.P)
        c3, c4 = cor_cons2(pre)
        out.append((f"round{k}-cons2-minusP", c3))
        out.append((f"round{k}-cons2-zero", c4))
        current = subadjacent_rb(pre.prelie, 0, current.P)
    return out
