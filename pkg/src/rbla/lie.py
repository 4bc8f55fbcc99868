"""Lie algebras by structure constants, representations, forms and matched pairs."""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .exact import (
    qeinsum,
    AnySpace, LinearMap, ScalarLike, Space, Vector, det, direct_sum, frozen,
    inverse, is_zero, scalar, zeros,
)
from .report import CheckReport, StructureError, collect, timed


@dataclass(frozen=True, eq=False)
class BilinearProduct:
    """Structure constants: e_i . e_j = sum_k entries[i, j, k] e_k."""

    space: AnySpace
    entries: np.ndarray

    def __post_init__(self) -> None:
        n = self.space.dim
        c = frozen(np.asarray(self.entries, dtype=object))
        if c.shape != (n, n, n):
            raise ValueError(f"structure constants must have shape {(n, n, n)}")
        object.__setattr__(self, "entries", c)

    @classmethod
    def zero(cls, space: AnySpace) -> "BilinearProduct":
        n = space.dim
        return cls(space, zeros(n, n, n))

    @classmethod
    def from_table(cls, space: AnySpace,
                   table: Iterable[tuple[str, str, dict[str, ScalarLike]]],
                   antisymmetrize: bool = False) -> "BilinearProduct":
        """Build from (left, right, {label: coeff}) entries; omitted entries are zero."""
        n = space.dim
        c = zeros(n, n, n)
        for a, b, value in table:
            i, j = space.index(a), space.index(b)
            for lab, v in value.items():
                k = space.index(lab)
                c[i, j, k] += scalar(v)
                if antisymmetrize and i != j:
                    c[j, i, k] -= scalar(v)
        return cls(space, c)

    def __call__(self, u: Vector, v: Vector) -> Vector:
        if u.space != self.space or v.space != self.space:
            raise ValueError("arguments are not in the product's space")
        return Vector(self.space, qeinsum("i,j,ijk->k", u.coords, v.coords, self.entries))

    def __add__(self, other: "BilinearProduct") -> "BilinearProduct":
        return BilinearProduct(self.space, self.entries + other.entries)

    def __sub__(self, other: "BilinearProduct") -> "BilinearProduct":
        return BilinearProduct(self.space, self.entries - other.entries)

    def __neg__(self) -> "BilinearProduct":
        return BilinearProduct(self.space, -self.entries)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, BilinearProduct) and other.space == self.space
                and bool(np.all(other.entries == self.entries)))

    def commutator(self) -> "BilinearProduct":
        return BilinearProduct(self.space, self.entries - self.entries.transpose(1, 0, 2))

    def is_antisymmetric(self) -> bool:
        return is_zero(self.entries + self.entries.transpose(1, 0, 2))

    def left_mult(self) -> np.ndarray:
        """L[i] is the matrix of y -> e_i . y."""
        return self.entries.transpose(0, 2, 1)

    def right_mult(self) -> np.ndarray:
        """R[j] is the matrix of x -> x . e_j."""
        return self.entries.transpose(1, 2, 0)

    def table(self) -> dict[tuple[str, str], Vector]:
        b = self.space.basis
        return {(b[i], b[j]): Vector(self.space, self.entries[i, j])
                for i in range(len(b)) for j in range(len(b))}


def transform_product(c: np.ndarray, m: np.ndarray, left: bool = False,
                      right: bool = False, out: bool = False) -> np.ndarray:
    """Precompose arguments and/or postcompose output of a product with matrix m."""
    if left:
        c = qeinsum("ai,ajk->ijk", m, c)
    if right:
        c = qeinsum("bj,ibk->ijk", m, c)
    if out:
        c = qeinsum("ijk,lk->ijl", c, m)
    return c


def lie_defects(c: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Antisymmetry defect [i, j, :] and Jacobi defect [i, j, k, :]."""
    anti = c + c.transpose(1, 0, 2)
    x = qeinsum("ijl,lkm->ijkm", c, c)
    jac = x + x.transpose(1, 2, 0, 3) + x.transpose(2, 0, 1, 3)
    return anti, jac


def check_lie(p: BilinearProduct) -> CheckReport:
    rep = CheckReport("lie")
    with timed(rep):
        labels = p.space.basis
        anti, jac = lie_defects(p.entries)
        collect(rep, "antisymmetry", anti, [labels, labels], labels,
                keep=lambda t: t[0] <= t[1])
        antisym = not rep.violations
        # for an antisymmetric product the Jacobi defect is alternating
        keep = (lambda t: t[0] < t[1] < t[2]) if antisym else None
        collect(rep, "jacobi", jac, [labels] * 3, labels, keep=keep)
    return rep


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    bracket: BilinearProduct
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool) -> None:
        if verify:
            r = check_lie(self.bracket)
            if not r.passed:
                raise StructureError("not a Lie algebra", r)

    @property
    def space(self) -> AnySpace:
        return self.bracket.space

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def c(self) -> np.ndarray:
        return self.bracket.entries

    def ad(self) -> np.ndarray:
        return self.bracket.left_mult()


def bracket_eval(g: LieAlgebra, u: Vector, v: Vector) -> Vector:
    return g.bracket(u, v)


def rep_defect(c: np.ndarray, rho: np.ndarray) -> np.ndarray:
    """rho([e_i, e_j]) - [rho(e_i), rho(e_j)] as [i, j, :, :]."""
    lhs = qeinsum("ijk,kab->ijab", c, rho)
    prod = qeinsum("iab,jbc->ijac", rho, rho)
    return lhs - (prod - prod.transpose(1, 0, 2, 3))


@dataclass(frozen=True, eq=False)
class Representation:
    """rho[i] is the matrix of rho(e_i) on the module; alpha/beta are optional companions."""

    algebra: LieAlgebra
    module: AnySpace
    rho: np.ndarray
    alpha: LinearMap | None = None
    beta: LinearMap | None = None
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool) -> None:
        n, m = self.algebra.dim, self.module.dim
        r = frozen(np.asarray(self.rho, dtype=object))
        if r.shape != (n, m, m):
            raise ValueError(f"representation matrices must have shape {(n, m, m)}")
        object.__setattr__(self, "rho", r)
        for op in (self.alpha, self.beta):
            if op is not None and (op.domain != self.module or op.codomain != self.module):
                raise ValueError("companion operator must act on the module")
        if verify:
            rep = check_representation(self)
            if not rep.passed:
                raise StructureError("not a representation", rep)

    def with_ops(self, alpha: LinearMap | None = None, beta: LinearMap | None = None,
                 verify: bool = False) -> "Representation":
        return Representation(self.algebra, self.module, self.rho, alpha, beta, verify=verify)

    def of(self, x: np.ndarray) -> np.ndarray:
        """Matrix of rho(x) for a coordinate vector x."""
        return qeinsum("k,kab->ab", x, self.rho)

    def rho_map(self, i: int) -> LinearMap:
        return LinearMap(self.module, self.module, self.rho[i])


def check_representation(rep: Representation) -> CheckReport:
    out = CheckReport("representation")
    with timed(out):
        g = rep.algebra
        d = rep_defect(g.c, rep.rho)
        m = rep.module.basis
        labels = [f"{a}<-{b}" for a in m for b in m]
        collect(out, "homomorphism", d, [g.space.basis] * 2, labels,
                keep=lambda t: t[0] < t[1] or not g.bracket.is_antisymmetric())
    return out


def adjoint_rep(g: LieAlgebra, alpha: LinearMap | None = None,
                beta: LinearMap | None = None) -> Representation:
    return Representation(g, g.space, g.ad(), alpha, beta, verify=False)


def dual_matrices(rho: np.ndarray) -> np.ndarray:
    return -rho.transpose(0, 2, 1)


def dual_representation(rep: Representation) -> Representation:
    return Representation(rep.algebra, rep.module.dual(), dual_matrices(rep.rho), verify=False)


def semidirect_bracket(g: LieAlgebra, rep: Representation, name: str | None = None) -> BilinearProduct:
    """[x+u, y+v] = [x,y] + rho(x)v - rho(y)u on g (+) V, g basis first."""
    n, m = g.dim, rep.module.dim
    space = direct_sum(g.space, rep.module, name)
    c = zeros(n + m, n + m, n + m)
    c[:n, :n, :n] = g.c
    # [e_i, v_b] = rho(e_i) v_b, column b of rho[i]
    c[:n, n:, n:] = rep.rho.transpose(0, 2, 1)
    c[n:, :n, n:] = -rep.rho.transpose(2, 0, 1)
    return BilinearProduct(space, c)


def semidirect_product_lie(g: LieAlgebra, rep: Representation, name: str | None = None) -> LieAlgebra:
    r = check_representation(rep)
    if not r.passed:
        raise StructureError("semidirect product needs a representation", r)
    return LieAlgebra(semidirect_bracket(g, rep, name), verify=False)


@dataclass(frozen=True, eq=False)
class BilinearForm:
    space: AnySpace
    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = frozen(np.asarray(self.matrix, dtype=object))
        if m.shape != (self.space.dim, self.space.dim):
            raise ValueError("form matrix does not match the space")
        object.__setattr__(self, "matrix", m)

    def __call__(self, u: Vector, v: Vector) -> Fraction:
        return Fraction(u.coords.dot(self.matrix).dot(v.coords))

    def __rmul__(self, s: ScalarLike) -> "BilinearForm":
        return BilinearForm(self.space, self.matrix * scalar(s))

    def is_symmetric(self) -> bool:
        return is_zero(self.matrix - self.matrix.T)

    def is_nondegenerate(self) -> bool:
        return det(self.matrix) != 0


def invariance_defect(c: np.ndarray, b: np.ndarray) -> np.ndarray:
    """B([e_i,e_j],e_k) - B(e_i,[e_j,e_k])."""
    return qeinsum("ijl,lk->ijk", c, b) - qeinsum("il,jkl->ijk", b, c)


def check_bilinear_form(g: LieAlgebra, B: BilinearForm, invariant: bool = True,
                        nondegenerate: bool = True, symmetric: bool = True) -> CheckReport:
    out = CheckReport("bilinear-form")
    with timed(out):
        labels = g.space.basis
        inv = CheckReport("invariance")
        collect(inv, "invariance", invariance_defect(g.c, B.matrix)[..., None],
                [labels] * 3, ["value"])
        flags = {"invariant": inv.passed, "nondegenerate": B.is_nondegenerate(),
                 "symmetric": B.is_symmetric()}
        out.info.update(flags)
        if invariant:
            out.add(inv)
        if nondegenerate and not flags["nondegenerate"]:
            out.violations.append(_flag_violation("nondegeneracy"))
        if symmetric and not flags["symmetric"]:
            sym = CheckReport("symmetry")
            collect(sym, "symmetry", (B.matrix - B.matrix.T)[..., None], [labels] * 2, ["value"],
                    keep=lambda t: t[0] < t[1])
            out.add(sym)
    return out


def _flag_violation(name: str):
    from .report import Violation
    return Violation(name, (), ())


def adjoint_operator_wrt_form(g: LieAlgebra | AnySpace, B: BilinearForm, P: LinearMap) -> LinearMap:
    """P-hat with B(P x, y) = B(x, P-hat y), i.e. B^-1 P^T B."""
    if not B.is_nondegenerate():
        raise StructureError("adjoint operator needs a nondegenerate form")
    m = inverse(B.matrix).dot(P.matrix.T).dot(B.matrix)
    return LinearMap(P.domain, P.codomain, m)


# -- matched pairs --------------------------------------------------------------


def matched_pair_lie_defects(cg: np.ndarray, ch: np.ndarray, rg: np.ndarray,
                             rh: np.ndarray) -> np.ndarray:
    """First compatibility equation as [x, a, b, :] for x in g and a, b in h.

    rg[i] acts on h, rh[a] acts on g. The second equation is the same
    expression with the roles of g and h exchanged.
    """
    t1 = qeinsum("ipq,abq->iabp", rg, ch)
    t2 = qeinsum("iqa,qbp->iabp", rg, ch)
    t3 = qeinsum("iqb,aqp->iabp", rg, ch)
    t4 = qeinsum("aki,kpb->iabp", rh, rg)
    t5 = qeinsum("bki,kpa->iabp", rh, rg)
    return t1 - t2 - t3 + t4 - t5


@dataclass(frozen=True, eq=False)
class MatchedPairLie:
    g: LieAlgebra
    h: LieAlgebra
    rho_g: Representation  # g acting on h
    rho_h: Representation  # h acting on g
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool) -> None:
        if self.rho_g.module != self.h.space or self.rho_h.module != self.g.space:
            raise ValueError("actions must be on the partner spaces")
        if verify:
            r = check_matched_pair_lie(self)
            if not r.passed:
                raise StructureError("not a matched pair of Lie algebras", r)


def check_matched_pair_lie(mp: MatchedPairLie) -> CheckReport:
    out = CheckReport("matched-pair-lie")
    with timed(out):
        g, h = mp.g, mp.h
        out.add(check_lie(g.bracket)).name = "lie-g"
        out.add(check_lie(h.bracket)).name = "lie-h"
        out.add(check_representation(mp.rho_g)).name = "rep-g-on-h"
        out.add(check_representation(mp.rho_h)).name = "rep-h-on-g"
        compat = out.add(CheckReport("compatibility"))
        d1 = matched_pair_lie_defects(g.c, h.c, mp.rho_g.rho, mp.rho_h.rho)
        d2 = matched_pair_lie_defects(h.c, g.c, mp.rho_h.rho, mp.rho_g.rho)
        collect(compat, "matched-pair-1", d1, [g.space.basis, h.space.basis, h.space.basis],
                h.space.basis)
        collect(compat, "matched-pair-2", d2, [h.space.basis, g.space.basis, g.space.basis],
                g.space.basis)
    return out


def bowtie_bracket(g: LieAlgebra, h: LieAlgebra, rg: np.ndarray, rh: np.ndarray,
                   name: str | None = None) -> BilinearProduct:
    n, m = g.dim, h.dim
    space = direct_sum(g.space, h.space, name)
    c = zeros(n + m, n + m, n + m)
    c[:n, :n, :n] = g.c
    c[n:, n:, n:] = h.c
    # [e_i, f_b] = -rho_h(f_b) e_i + rho_g(e_i) f_b
    c[:n, n:, :n] = -rh.transpose(2, 0, 1)
    c[:n, n:, n:] = rg.transpose(0, 2, 1)
    # [f_a, e_j] = rho_h(f_a) e_j - rho_g(e_j) f_a
    c[n:, :n, :n] = rh.transpose(0, 2, 1)
    c[n:, :n, n:] = -rg.transpose(2, 0, 1)
    return BilinearProduct(space, c)


def bowtie_lie(mp: MatchedPairLie, name: str | None = None) -> LieAlgebra:
    return LieAlgebra(bowtie_bracket(mp.g, mp.h, mp.rho_g.rho, mp.rho_h.rho, name), verify=False)
