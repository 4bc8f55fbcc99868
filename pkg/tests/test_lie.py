from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracle
from conftest import matrices, table_of
from rbla.bialgebra import coadjoint_matched_pair, dualize_coproduct
from rbla.cybe import coboundary_delta
from rbla.exact import LinearMap, Vector, det, eye, inverse, qarray
from rbla.fixtures import SL2, sl2, sl2_form, sl2_operator, sl2_rb
from rbla.lie import (
    BilinearForm, BilinearProduct, LieAlgebra, MatchedPairLie, Representation, adjoint_operator_wrt_form,
    adjoint_rep, bowtie_lie, bracket_eval, check_bilinear_form, check_lie, check_matched_pair_lie,
    check_representation, dual_matrices, dual_representation, semidirect_product_lie, transform_product,
)
from rbla.report import StructureError


def witnesses(report, equation=None):
    return [v.witness for v in report.all_violations() if equation is None or v.equation == equation]


def conjugated_sl2(a):
    """sl2 transported along the basis change a (columns are the new basis)."""
    c = transform_product(transform_product(sl2().c, a, left=True, right=True), inverse(a), out=True)
    return BilinearProduct(SL2, c)


def test_sl2_is_lie(g_sl2):
    assert check_lie(g_sl2.bracket).passed
    assert np.count_nonzero(g_sl2.c.reshape(9, 3).any(axis=1)) == 6


def test_corrupted_bracket_reports_jacobi_witness():
    bad = BilinearProduct.from_table(SL2, [("h", "x", {"x": 2}), ("h", "y", {"y": -2}), ("x", "y", {"x": 1})],
                                     antisymmetrize=True)
    rep = check_lie(bad)
    assert not rep.passed
    assert witnesses(rep, "jacobi") == [("x", "h", "y")]
    with pytest.raises(StructureError):
        LieAlgebra(bad)


def test_non_antisymmetric_product_fails():
    p = BilinearProduct.from_table(SL2, [("x", "x", {"h": 1})])
    assert ("x", "x") in witnesses(check_lie(p), "antisymmetry")


def test_bracket_evaluation(g_sl2):
    x, h, y = (Vector.basis_vector(SL2, i) for i in range(3))
    assert bracket_eval(g_sl2, h, x) == Vector.from_dict(SL2, {"x": 2})
    assert bracket_eval(g_sl2, x + y, h) == Vector.from_dict(SL2, {"x": -2, "y": 2})


def test_adjoint_matrices(g_sl2):
    ad = g_sl2.ad()
    assert np.array_equal(ad[SL2.index("h")], np.diag([2, 0, -2]))
    assert all(np.trace(ad[i]) == 0 for i in range(3))
    assert check_representation(adjoint_rep(g_sl2)).passed


def test_broken_representation_witness(g_sl2):
    rho = np.array(g_sl2.ad(), dtype=object)
    rho[0] = eye(3)
    rep = Representation(g_sl2, SL2, rho, verify=False)
    r = check_representation(rep)
    assert not r.passed
    assert ("x", "h") in witnesses(r)


def test_coadjoint(g_sl2):
    star = dual_representation(adjoint_rep(g_sl2))
    assert np.array_equal(star.rho[SL2.index("h")], np.diag([-2, 0, 2]))
    assert check_representation(star).passed


@given(matrices(3, elements=st.integers(-2, 2).map(Fraction)))
def test_representation_axiom_survives_dualizing(m):
    # dualizing an honest representation stays honest; dualizing a broken one stays broken
    g = sl2()
    rho = np.array(g.ad(), dtype=object)
    rho[1] = m
    rep = Representation(g, SL2, qarray(rho), verify=False)
    assert check_representation(rep).passed == check_representation(dual_representation(rep)).passed


def test_semidirect_with_coadjoint(g_sl2):
    d = semidirect_product_lie(g_sl2, dual_representation(adjoint_rep(g_sl2)))
    assert d.dim == 6 and check_lie(d.bracket).passed
    # [x, y*] is the y*-column of ad*(x) = -ad(x)^T
    col = d.c[SL2.index("x"), 3 + SL2.index("y")]
    expected = -g_sl2.ad()[SL2.index("x")].T[:, SL2.index("y")]
    assert np.array_equal(col[3:], expected) and not col[:3].any()
    # the same bracket from the oracle
    basis, table = oracle.coadjoint_double(list(SL2.basis), table_of(g_sl2.bracket))
    assert table_of(d.bracket) == {k: v for k, v in table.items()}


def test_form(g_sl2):
    r = check_bilinear_form(g_sl2, sl2_form())
    assert r.passed and r.info == {"invariant": True, "nondegenerate": True, "symmetric": True}


def test_broken_form_witness(g_sl2):
    m = np.array(sl2_form().matrix, dtype=object)
    m[1, 1] = Fraction(1)
    r = check_bilinear_form(g_sl2, BilinearForm(SL2, m))
    assert not r.passed and ("x", "y", "h") in witnesses(r, "invariance")


def test_adjoint_operator_published_values():
    ph = adjoint_operator_wrt_form(sl2(), sl2_form(), sl2_operator())
    assert ph.columns_dict() == {
        "x": {"x": -3, "h": 2, "y": 1},
        "h": {"x": -4, "h": 2},
        "y": {"x": 1, "y": 1},
    }
    assert ph @ sl2_operator() == sl2_operator() @ ph


def test_adjoint_operator_matches_oracle():
    B = [[int(v) for v in row] for row in sl2_form().matrix]
    P = {k: {a: Fraction(c) for a, c in v.items()} for k, v in sl2_operator().columns_dict().items()}
    ph = adjoint_operator_wrt_form(sl2(), sl2_form(), sl2_operator()).columns_dict()
    assert ph == oracle.form_adjoint(list(SL2.basis), B, P)


@given(matrices(3))
def test_adjoint_operator_defining_identity(m):
    P = LinearMap(SL2, SL2, m)
    B = sl2_form()
    ph = adjoint_operator_wrt_form(SL2, B, P)
    # B(P u, v) = B(u, Phat v) on all basis pairs
    assert np.array_equal(m.T.dot(B.matrix), B.matrix.dot(ph.matrix))


@given(matrices(3, elements=st.integers(-2, 2).map(Fraction)))
def test_jacobi_is_basis_independent(a):
    if det(a) == 0:
        return
    assert check_lie(conjugated_sl2(a)).passed


@given(st.integers(0, 26), st.integers(-2, 2))
def test_lie_verdict_matches_oracle(pos, delta):
    c = np.array(sl2().c, dtype=object)
    i, rest = divmod(pos, 9)
    j, k = divmod(rest, 3)
    c[i, j, k] += delta
    if i != j:
        c[j, i, k] -= delta
    p = BilinearProduct(SL2, c)
    t = table_of(p)
    anti = all(oracle.add(t[(a, b)], t[(b, a)]) == {} for a in SL2.basis for b in SL2.basis)
    assert check_lie(p).passed == (anti and not oracle.jacobi_failures(list(SL2.basis), t))


def test_matched_pair_from_a_bialgebra():
    rb = sl2_rb()
    d = coboundary_delta(sl2(), _sl2_r())
    mp = coadjoint_matched_pair(rb, -rb.P, dualize_coproduct(d))
    assert check_matched_pair_lie(mp.lie_pair()).passed
    # the bowtie bracket is a Lie algebra on g + g*
    assert check_lie(bowtie_lie(mp.lie_pair()).bracket).passed


def _sl2_r():
    # an arbitrary antisymmetric tensor on sl2: the coboundary is always a cocycle
    from rbla.exact import Tensor2
    return Tensor2.from_entries(SL2, SL2, [("x", "y", 1), ("y", "x", -1), ("h", "x", 2), ("x", "h", -2)])


def test_matched_pair_rejects_wrong_action(g_sl2):
    rho = dual_matrices(g_sl2.ad())
    bad = np.array(rho, dtype=object)
    bad[0, 0, 0] += 1
    h = LieAlgebra(BilinearProduct.zero(SL2.dual()))
    mp = MatchedPairLie(g_sl2, h, Representation(g_sl2, SL2.dual(), bad, verify=False),
                        Representation(h, SL2, np.zeros((3, 3, 3), dtype=object) + Fraction(0), verify=False),
                        verify=False)
    assert not check_matched_pair_lie(mp).passed
