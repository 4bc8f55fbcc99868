from fractions import Fraction

import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from rbla.exact import LinearMap, Space, qarray
from rbla.fixtures import sl2, sl2_operator, sl2_rb
from rbla.lie import BilinearProduct, LieAlgebra

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=15, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


# -- conversions to the oracle's dict representation ---------------------------------------


def table_of(p: BilinearProduct) -> dict:
    b = p.space.basis
    return {(b[i], b[j]): {b[k]: Fraction(p.entries[i, j, k]) for k in range(len(b)) if p.entries[i, j, k]}
            for i in range(len(b)) for j in range(len(b))}


def op_of(m: LinearMap) -> dict:
    dom, cod = m.domain.basis, m.codomain.basis
    return {dom[j]: {cod[i]: Fraction(m.matrix[i, j]) for i in range(len(cod)) if m.matrix[i, j]}
            for j in range(len(dom))}


def tensor_of(coeffs: np.ndarray, left, right) -> dict:
    return {(left[i], right[j]): Fraction(coeffs[i, j]) for i in range(len(left)) for j in range(len(right))
            if coeffs[i, j]}


# -- strategies ------------------------------------------------------------------------------

small = st.integers(min_value=-3, max_value=3).map(Fraction)
rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)


def matrices(n: int, m: int | None = None, elements=small):
    m = n if m is None else m
    return st.lists(st.lists(elements, min_size=m, max_size=m), min_size=n, max_size=n).map(qarray)


def operators(space: Space, elements=small):
    return matrices(space.dim, elements=elements).map(lambda a: LinearMap(space, space, a))


weights = st.sampled_from([Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2)])


@pytest.fixture(scope="session")
def g_sl2() -> LieAlgebra:
    return sl2()


@pytest.fixture(scope="session")
def P_sl2() -> LinearMap:
    return sl2_operator()


@pytest.fixture(scope="session")
def rb_sl2():
    return sl2_rb()


@pytest.fixture(scope="session")
def chain():
    """The weight-0 chain on sl2: T = P on the adjoint module lifted with Q = beta = -P.

    Returns the O-operator instance, the CYBE solution on the 6-dim double and
    the coboundary bialgebra built from it.
    """
    from rbla.cybe import OOperatorInstance, build_coboundary_rb_bialgebra, lift_O_operator
    from rbla.lie import adjoint_rep

    rb = sl2_rb()
    inst = OOperatorInstance(rb, adjoint_rep(rb.lie, alpha=rb.P), rb.P)
    sol = lift_O_operator(inst, -rb.P, -rb.P)
    return inst, sol, build_coboundary_rb_bialgebra(sol)
