import random
from math import comb

import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from conftest import PARAM_CHOICES, params_strategy, small_rationals
from rsfusion.exactring import Params, SingularPoint
from rsfusion.linalg import LinOp, TensorSpace
from rsfusion.qalgebra import (
    braid_checks,
    coproduct_action,
    defining_rep,
    fundamental_module_dim,
    is_invariant,
    jimbo_rcheck,
    rcheck,
    rcheck_at,
    rcheck_xy,
    rcheck_xy_display,
    rcheck_z,
    relation_suite,
    spectral_ybe,
    special_point_identification,
    sym2_basis,
    tensor_rep,
    two_parameter_ybe,
    wedge2_basis,
    weight_eigenvalues,
)


@pytest.mark.parametrize("params", PARAM_CHOICES)
@pytest.mark.parametrize("n", [2, 3, 4])
def test_defining_rep_relations(params, n):
    res = relation_suite(defining_rep(n, params), n, params)
    assert all(res.values()), res


@given(params_strategy())
@settings(max_examples=10)
def test_defining_rep_relations_random(params):
    assert all(relation_suite(defining_rep(3, params), 3, params).values())


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_tensor_rep_relations(P, n, m):
    assert all(relation_suite(tensor_rep(n, m, P), n, P).values())


def test_equal_diagonal_omega_prime_breaks_r4(P):
    # omega'_j = s E_jj + s E_{j+1,j+1} + ..., with s in both slots
    n = 3
    ops = dict(defining_rep(n, P))
    sp = TensorSpace(n, 1)
    for j in range(1, n):
        vals = [mpq(1)] * n
        vals[j - 1] = vals[j] = P.s
        ops[f"w{j}'"] = LinOp(sp, {k: {k: vals[k]} for k in range(n)})
        ops[f"w{j}'^-1"] = LinOp(sp, {k: {k: 1 / vals[k]} for k in range(n)})
    res = relation_suite(ops, n, P)
    assert not res["R4"] and not res["R3"]


def test_rcheck_n2_by_hand(P):
    r, s = P.r, P.s
    # basis order 11, 12, 21, 22; columns are images of basis vectors
    dense = [
        [1, 0, 0, 0],
        [0, 0, 1 / s, 0],
        [0, r, 1 - r / s, 0],
        [0, 0, 0, 1],
    ]
    assert rcheck(2, P).to_dense() == [[mpq(x) for x in row] for row in dense]


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_rcheck_commutes_with_action(P, n, m):
    for i in range(1, m):
        R = rcheck_at(i, n, m, P)
        for g, op in tensor_rep(n, m, P).items():
            assert R @ op == op @ R, (i, g)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_braid_and_quadratic(P, n):
    assert all(braid_checks(n, 3, P).values())


@given(small_rationals(nonzero=True), small_rationals(nonzero=True))
@settings(max_examples=10)
def test_spectral_ybe(z, w):
    assert spectral_ybe(2, z, w, Params(2, 3))


@given(st.lists(small_rationals(nonzero=True), min_size=3, max_size=3, unique=True))
@settings(max_examples=10)
def test_two_parameter_ybe(xyz):
    assert two_parameter_ybe(2, *xyz, Params(mpq(1, 2), 5))


def test_ybe_n3_seeded(P):
    rng = random.Random(0)
    for _ in range(2):
        z, w = (mpq(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(2))
        assert spectral_ybe(3, z, w, P)


def test_zero_spectral_parameter():
    for P in PARAM_CHOICES:
        assert rcheck_z(3, 0, P) == rcheck(3, P)


@pytest.mark.parametrize("q", [mpq(2), mpq(3, 2)])
def test_jimbo_specialization(q):
    P = Params(q, 1 / q)
    for z in [mpq(0), mpq(1, 3), mpq(5)]:
        assert rcheck_z(3, z, P) == jimbo_rcheck(3, z, q)


def test_rcheck_xy_singular(P):
    with pytest.raises(SingularPoint):
        rcheck_xy(2, 2, 2, P)


def test_expanded_xy_display_disagrees(P):
    assert rcheck_xy_display(2, 1, 3, P) != rcheck_xy(2, 1, 3, P)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_special_points(n):
    for P in PARAM_CHOICES:
        res = special_point_identification(n, P)
        assert res["as set"]
        assert res["image(1,s/r) == kernel(1,r/s)"] and res["image(1,r/s) == kernel(1,s/r)"]
        assert res["S2 invariant"] and res["L2 invariant"]
        assert res["image(1,s/r)"] == "S2" and not res["S2 at (1,r/s)"]


def test_sym_wedge_dims(P):
    assert len(sym2_basis(4, P)) == comb(5, 2) and len(wedge2_basis(4, P)) == comb(4, 2)
    reps = tensor_rep(3, 2, P)
    assert is_invariant(sym2_basis(3, P), reps)
    sp = TensorSpace(3, 2)
    assert not is_invariant([{sp.index((1, 2)): mpq(1)}], reps)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_fundamental_dims(P, n):
    for k in range(1, n + 1):
        assert fundamental_module_dim(n, k, P) == comb(n, k)


def test_weight_eigenvalues_on_basis(P):
    # v_1 (x) v_1 (x) v_2 has weight (2, 1, 0)
    n, m = 3, 3
    sp = TensorSpace(n, m)
    v = sp.basis_vector((1, 1, 2))
    for i, (a, b) in enumerate(weight_eigenvalues((2, 1, 0), P), 1):
        assert coproduct_action(f"w{i}", n, m, P).apply(v) == {k: c * a for k, c in v.items()}
        assert coproduct_action(f"w{i}'", n, m, P).apply(v) == {k: c * b for k, c in v.items()}


def test_unknown_generator(P):
    with pytest.raises(KeyError):
        coproduct_action("x1", 2, 2, P)
