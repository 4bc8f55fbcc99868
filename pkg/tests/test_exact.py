from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import matrices, rationals, small
from rbla.exact import (
    LinearMap, Space, Tensor2, Tensor3, Vector, cyclic_shift, cyclic_sum, det, direct_sum, flip, format_combination,
    inverse, map_from_tensor, nullspace, qarray, qeinsum, rank, scalar, solve, tensor_from_map, transpose_map,
)
from rbla.fixtures import SL2, sl2_operator


@pytest.mark.parametrize("text,value", [("3", 3), ("-2/6", Fraction(-1, 3)), (" 7 / 2 ", Fraction(7, 2)), ("+0", 0)])
def test_scalar_accepts_exact_forms(text, value):
    assert scalar(text) == value


@pytest.mark.parametrize("bad", ["0.5", "1e3", "1/", "x", "", "nan"])
def test_scalar_rejects_inexact_strings(bad):
    with pytest.raises(ValueError):
        scalar(bad)


@pytest.mark.parametrize("bad", [0.5, True, None, 1j])
def test_scalar_rejects_other_types(bad):
    with pytest.raises(TypeError):
        scalar(bad)


def test_arrays_are_frozen():
    a = qarray([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        a[0, 0] = Fraction(5)


@given(matrices(3, elements=rationals), matrices(3, elements=rationals), matrices(3, elements=rationals))
def test_qeinsum_matches_plain_fraction_einsum(a, b, c):
    plain = np.einsum("ij,jk,kl->il", a, b, c)
    assert np.array_equal(qeinsum("ij,jk,kl->il", a, b, c), plain)
    assert all(isinstance(v, Fraction) for v in qeinsum("ij,jk->ik", a, b).flat)


@given(matrices(3, elements=rationals))
def test_inverse_round_trip(m):
    if det(m) == 0:
        assert rank(m) < 3
        with pytest.raises(ValueError):
            inverse(m)
        return
    assert np.array_equal(m.dot(inverse(m)), np.eye(3, dtype=int))


@given(matrices(3, 4))
def test_nullspace_is_annihilated_and_rank_nullity(m):
    ns = nullspace(m)
    assert len(ns) == 4 - rank(m)
    for v in ns:
        assert not np.any(m.dot(v))


@given(matrices(3, elements=rationals), st.lists(rationals, min_size=3, max_size=3))
def test_solve(m, rhs):
    if det(m) == 0:
        return
    x = solve(m, qarray(rhs))
    assert list(m.dot(x)) == rhs


def test_direct_sum_primes_clashing_labels():
    s = direct_sum(SL2, Space("k", ("x", "x'")))
    assert s.basis == ("x", "h", "y", "x'", "x''")


def test_dual_basis_labels():
    assert SL2.dual().basis == ("x*", "h*", "y*")
    assert SL2.dual().dual() == SL2


def test_transpose_of_sl2_operator():
    P = sl2_operator()
    Pt = transpose_map(P)
    # <P*(x*), h> = <x*, P(h)> = 0 since P(h) = 2h + 4y
    assert Pt.matrix[SL2.index("h"), SL2.index("x")] == 0
    assert np.array_equal(Pt.matrix, P.matrix.T)


@given(matrices(3), matrices(3))
def test_transpose_reverses_composition(a, b):
    T, S = LinearMap(SL2, SL2, a), LinearMap(SL2, SL2, b)
    assert transpose_map(T @ S) == transpose_map(S) @ transpose_map(T)


def test_flip_on_operator_tensor():
    t = tensor_from_map(LinearMap(SL2.dual(), SL2, sl2_operator().matrix))
    f = flip(t)
    for i in range(3):
        for j in range(3):
            assert f.coeffs[j, i] == t.coeffs[i, j]
    assert flip(f) == t


def test_cyclic_sum_of_a_pure_tensor():
    x, h, y = (Vector.basis_vector(SL2, i) for i in range(3))
    t = Tensor3.pure(x, h, y)
    total = cyclic_sum(t.coeffs)
    expected = Tensor3.pure(x, h, y) + Tensor3.pure(y, x, h) + Tensor3.pure(h, y, x)
    assert np.array_equal(total, expected.coeffs)
    assert cyclic_shift(cyclic_shift(cyclic_shift(t))) == t


@given(matrices(3))
def test_map_tensor_round_trip(m):
    T = LinearMap(SL2.dual(), SL2, m)
    assert map_from_tensor(tensor_from_map(T)) == T


def test_vectors_and_formatting():
    v = Vector.from_dict(SL2, {"x": -3, "h": 2, "y": 1})
    assert format_combination(v.coords, SL2.basis) == "-3x+2h+y"
    assert format_combination(qarray([0, Fraction(1, 2), -1]), SL2.basis) == "(1/2)h-y"
    assert (v - v).is_zero()


def test_tensor_antisymmetry():
    t = Tensor2.from_entries(SL2, SL2, [("x", "h", 1), ("h", "x", -1)])
    assert t.is_antisymmetric()
    assert not Tensor2.from_entries(SL2, SL2, [("x", "h", 1)]).is_antisymmetric()


@given(small, small)
def test_linear_map_arithmetic(a, b):
    P = sl2_operator()
    I = LinearMap.identity(SL2)
    assert (a * P + b * I) @ I == a * P + b * I
    assert -(-P) == P
