"""Shared instance corpus and biconditional evaluators.

Each evaluator returns ``(left, right)`` verdicts for one instance; the
biconditional holds when they are equal, whether both pass or both fail.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from rbla.bialgebra import coadjoint_matched_pair, dualize_coproduct
from rbla.cybe import CYBESolution, check_admissible_cybe, coboundary_delta
from rbla.exact import LinearMap, Tensor2, direct_sum_map, qarray
from rbla.fixtures import AB2, ab2, na2_corpus, sl2_form, sl2_rb
from rbla.lie import LieAlgebra, adjoint_operator_wrt_form, adjoint_rep, check_lie, semidirect_bracket
from rbla.rota_baxter import (
    RBLieAlgebra, check_admSD_compat, check_admissible, check_matched_pair_rb, check_rb_operator,
    check_rb_representation, rb_bowtie, standard_admissibles,
)

SEED = 20261016


def corpus_rbs(limit: int | None = None) -> list[tuple[str, RBLieAlgebra]]:
    """Every FIX-NA2 corpus member, FIX-AB2 operators and FIX-SL2."""
    out = [(f"na2[{e.weight}]{e.matrix}", e.rb()) for e in na2_corpus()]
    rng = random.Random(SEED)
    for k in range(6):
        m = [[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)]
        lam = Fraction(rng.choice([0, 1, -1]))
        out.append((f"ab2[{lam}]{m}", RBLieAlgebra(ab2(), lam, LinearMap(AB2, AB2, m))))
    out.append(("sl2", sl2_rb()))
    return out[:limit] if limit else out


def perturbed(m: LinearMap, rng: random.Random) -> LinearMap:
    a = np.array(m.matrix, dtype=object)
    i, j = rng.randrange(a.shape[0]), rng.randrange(a.shape[1])
    a[i, j] += rng.choice([-1, 1])
    return LinearMap(m.domain, m.codomain, qarray(a))


def candidate_companions(rb: RBLieAlgebra, rng: random.Random) -> list[LinearMap]:
    """Admissible ones and plausible non-admissible ones."""
    out = list(standard_admissibles(rb))
    out.append(LinearMap.identity(rb.space))
    out.append(perturbed(-rb.P - rb.weight * rb.identity(), rng))
    out.append(rb.P)
    if rb.space.basis == ("x", "h", "y"):
        out.append(adjoint_operator_wrt_form(rb.lie, sl2_form(), rb.P))
    return out


# -- (a) admissibility versus the dual Rota-Baxter representation -----------------------------


def admissible_vs_dual(rb: RBLieAlgebra, Q: LinearMap) -> tuple[bool, bool]:
    r = check_admissible(rb, Q)
    return r.info["direct"], r.info["dual_route"]


# -- (b) semidirect product versus Rota-Baxter representation --------------------------------


def semidirect_vs_rep(rb: RBLieAlgebra, alpha: LinearMap) -> tuple[bool, bool]:
    rep = adjoint_rep(rb.lie, alpha=alpha)
    is_rep = check_rb_representation(rb, rep).passed
    prod = semidirect_bracket(rb.lie, rep)
    op = direct_sum_map(rb.P, alpha, prod.space)
    is_rb = check_rb_operator(LieAlgebra(prod, verify=False), rb.weight, op).passed
    return is_rep, is_rb


# -- (c) Rota-Baxter bowtie versus matched pair ------------------------------------------------


def some_r(space, rng: random.Random) -> Tensor2:
    n = space.dim
    a = np.empty((n, n), dtype=object)
    for i in range(n):
        a[i, i] = Fraction(0)
        for j in range(i + 1, n):
            v = Fraction(rng.randint(-2, 2))
            a[i, j], a[j, i] = v, -v
    return Tensor2(space, space, a)


def bowtie_vs_matched_pair(rb: RBLieAlgebra, Q: LinearMap, r: Tensor2):
    """None when the two halves are not Rota-Baxter Lie algebras to begin with."""
    gstar = dualize_coproduct(coboundary_delta(rb.lie, r))
    if not check_lie(gstar).passed or not check_rb_operator(gstar, rb.weight, Q.T).passed:
        return None
    mp = coadjoint_matched_pair(rb, Q, gstar)
    bow = rb_bowtie(mp)
    is_mp = check_matched_pair_rb(mp).passed
    is_bowtie = check_lie(bow.lie.bracket).passed and check_rb_operator(bow.lie, bow.weight, bow.P).passed
    return is_mp, is_bowtie


# -- (d) admissible CYBE: tensor form versus operator form ------------------------------------


def tensor_vs_operator(rb: RBLieAlgebra, Q: LinearMap, r: Tensor2) -> tuple[bool, bool]:
    rep = check_admissible_cybe(CYBESolution(rb.with_Q(None, verify=False), Q, r, verify=False))
    return rep.passed, rep.info["operator_route"]


# -- (e) three-way admissibility on semidirect products ---------------------------------------


def adm_sd_three_way(rb: RBLieAlgebra, alpha: LinearMap, beta: LinearMap, Q: LinearMap) -> dict:
    rep = adjoint_rep(rb.lie, alpha=alpha, beta=beta)
    return check_admSD_compat(rb, rep, Q).info["verdicts"]


def run_biconditionals(limit: int | None = None) -> dict[str, list[tuple[str, bool, bool]]]:
    """Evaluate all five biconditionals over the corpus; returns per-suite records."""
    rng = random.Random(SEED)
    out: dict[str, list] = {k: [] for k in "abcde"}
    for name, rb in corpus_rbs(limit):
        lam, ident = rb.weight, rb.identity()
        for k, Q in enumerate(candidate_companions(rb, rng)):
            out["a"].append((f"{name} Q{k}", *admissible_vs_dual(rb, Q)))
        for k, alpha in enumerate([rb.P, LinearMap.zero(rb.space), -lam * ident, perturbed(rb.P, rng), ident]):
            out["b"].append((f"{name} alpha{k}", *semidirect_vs_rep(rb, alpha)))
        for k, Q in enumerate(candidate_companions(rb, rng)[:4]):
            v = bowtie_vs_matched_pair(rb, Q, some_r(rb.space, rng))
            if v is not None:
                out["c"].append((f"{name} Q{k}", *v))
        for k, Q in enumerate([-rb.P - lam * ident, LinearMap.zero(rb.space), perturbed(-rb.P, rng)]):
            out["d"].append((f"{name} r{k}", *tensor_vs_operator(rb, Q, some_r(rb.space, rng))))
        pairs = [(LinearMap.zero(rb.space), LinearMap.zero(rb.space), LinearMap.zero(rb.space)),
                 (-lam * ident, -lam * ident, -lam * ident),
                 (rb.P, -rb.P - lam * ident, -rb.P - lam * ident),
                 (rb.P, perturbed(-rb.P - lam * ident, rng), -rb.P - lam * ident)]
        for k, (alpha, beta, Q) in enumerate(pairs):
            v = adm_sd_three_way(rb, alpha, beta, Q)
            out["e"].append((f"{name} sd{k} a/b", v["a"], v["b"]))
            out["e"].append((f"{name} sd{k} b/c", v["b"], v["c"]))
    return out
