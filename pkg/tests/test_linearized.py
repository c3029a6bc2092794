import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affine_ff import (
    EquationParams,
    LinearizedPoly,
    NotADivisor,
    as_matrix,
    compose,
    enumerate_field,
    eval_general,
    eval_S,
    eval_T,
    make_field,
    scalar_mul,
)
from affine_ff.linearized import apply_matrix, family_map

GF4 = make_field(2, 2)
GF8 = make_field(2, 3)
GF9 = make_field(3, 2)


def test_params_derived_values():
    par = EquationParams(3, 6, 12, 4)
    assert (par.d, par.e, par.L) == (6, 2, 12)
    assert par.k_over_L == 1 and not par.p_divides_kL
    assert par.kl_even is False and par.de_even is False and par.nd_even is False
    with pytest.raises(NotADivisor):
        EquationParams(3, 2, 3, 2)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("n", range(1, 9))
def test_params_invariants(p, n):
    for l in range(1, 5):
        for m in (1, 2, 3, 4, 6):
            par = EquationParams(p, n, l * m, l)
            assert n % par.d == 0 and par.d % par.e == 0
            assert par.L % par.l == 0 and par.k % par.L == 0
            assert par.d * par.l == par.e * par.L  # d/e == L/l


def test_eval_T_examples():
    x = GF9([1, 2])
    assert eval_T(x, 3, 3) == x
    assert eval_T(GF8.gen(), 1, 3) == GF8.zero()
    assert eval_T(GF9.gen(), 1, 2) == GF9.zero()
    with pytest.raises(NotADivisor):
        eval_T(x, 2, 3)


def test_eval_S_examples():
    x = GF9([1, 2])
    assert eval_S(x, 2, 2) == x
    assert eval_S(GF9.gen(), 1, 2) == GF9([0, 2])
    with pytest.raises(NotADivisor):
        eval_S(x, 3, 4)


@pytest.mark.parametrize("n", [1, 3, 4, 6])
def test_S_equals_T_in_characteristic_two(n):
    spec = make_field(2, n)
    for x in enumerate_field(spec):
        for l, k in [(1, 2), (1, 3), (2, 6), (3, 12)]:
            assert eval_S(x, l, k) == eval_T(x, l, k)


def test_eval_general_examples():
    x = GF4.gen()
    assert eval_general(LinearizedPoly(GF4, ()), x) == GF4.zero()
    assert eval_general(LinearizedPoly.identity(GF4), x) == x
    assert eval_general(LinearizedPoly(GF4, (GF4.one(), GF4.one())), x) == GF4.one()


def test_as_matrix_examples():
    ident = as_matrix(lambda x: x, GF9)
    assert ident.rows == ((1, 0), (0, 1))
    zero = as_matrix(lambda x: x.spec.zero(), GF9)
    assert zero.rows == ((0, 0), (0, 0))
    M = as_matrix(family_map("T", 1, 2), GF4)
    for j, b in enumerate(GF4.basis()):
        assert M.columns()[j] == eval_T(b, 1, 2).coeffs
    # x + x^2 on GF(4): 1 -> 0, alpha -> 1
    assert M.columns() == [(0, 0), (1, 0)]


@pytest.mark.parametrize("p, n", [(2, 5), (3, 4), (5, 3), (7, 2)])
@pytest.mark.parametrize("family, l, k", [("T", 1, 3), ("S", 2, 6), ("S", 1, 4), ("T", 3, 12)])
def test_matrix_agrees_with_evaluation(p, n, family, l, k):
    spec = make_field(p, n)
    fn = family_map(family, l, k)
    M = as_matrix(fn, spec)
    rng = random.Random(p * 100 + n)
    points = spec.basis() + [spec([rng.randrange(p) for _ in range(n)]) for _ in range(50)]
    for x in points:
        assert apply_matrix(M, x) == fn(x)


@pytest.mark.parametrize("p, n", [(2, 4), (3, 3), (5, 2), (7, 3)])
@pytest.mark.parametrize("l, k", [(1, 2), (2, 6), (1, 5)])
def test_polynomial_forms_match_direct_evaluation(p, n, l, k):
    spec = make_field(p, n)
    tp, sp = LinearizedPoly.of_T(spec, l, k), LinearizedPoly.of_S(spec, l, k)
    rng = random.Random(7)
    for _ in range(30):
        x = spec([rng.randrange(p) for _ in range(n)])
        assert tp(x) == eval_T(x, l, k)
        assert sp(x) == eval_S(x, l, k)


def test_compose_examples():
    spec = make_field(3, 4)
    f = LinearizedPoly(spec, (spec([1, 2]), spec([0, 0, 1]), spec(2)))
    assert compose(LinearizedPoly.identity(spec), f)(spec([2, 1, 1])) == f(spec([2, 1, 1]))
    rng = random.Random(3)
    g = LinearizedPoly(spec, tuple(spec([rng.randrange(3) for _ in range(4)]) for _ in range(3)))
    fg = compose(f, g)
    for _ in range(50):
        x = spec([rng.randrange(3) for _ in range(4)])
        assert fg(x) == f(g(x))


@pytest.mark.parametrize("p, n", [(2, 6), (3, 4), (5, 3), (7, 2)])
def test_compose_reproduces_transitivity(p, n):
    spec = make_field(p, n)
    rng = random.Random(11)
    for m, l, k in [(1, 2, 4), (1, 3, 6), (2, 4, 8)]:
        lhs = compose(LinearizedPoly.of_T(spec, l, k), LinearizedPoly.of_T(spec, m, l))
        assert lhs == LinearizedPoly.of_T(spec, m, k)
        # T_l^k o S_l^2l = S_k^2k
        lhs = compose(LinearizedPoly.of_T(spec, l, k), LinearizedPoly.of_S(spec, l, 2 * l))
        for _ in range(30):
            x = spec([rng.randrange(p) for _ in range(n)])
            assert lhs(x) == eval_S(x, k, 2 * k)


SPECS = [make_field(2, 6), make_field(3, 4), make_field(5, 3), make_field(7, 2), make_field(3, 6)]


@settings(max_examples=150, deadline=None)
@given(
    st.sampled_from(SPECS),
    st.sampled_from(["T", "S"]),
    st.integers(1, 4),
    st.integers(1, 6),
    st.randoms(use_true_random=False),
)
def test_maps_are_fp_linear(spec, family, l, ratio, rnd):
    fn = family_map(family, l, l * ratio)
    x = spec([rnd.randrange(spec.p) for _ in range(spec.n)])
    y = spec([rnd.randrange(spec.p) for _ in range(spec.n)])
    c = rnd.randrange(spec.p)
    assert fn(x + y) == fn(x) + fn(y)
    assert fn(scalar_mul(c, x)) == scalar_mul(c, fn(x))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(SPECS), st.integers(1, 3), st.integers(1, 3), st.integers(1, 4), st.randoms(use_true_random=False))
def test_composition_identities(spec, m, r1, r2, rnd):
    l, k = m * r1, m * r1 * r2
    x = spec([rnd.randrange(spec.p) for _ in range(spec.n)])
    assert eval_T(eval_T(x, m, l), l, k) == eval_T(x, m, k)
    if (l // m) % 2 == 0:
        assert eval_T(eval_S(x, m, l), l, k) == eval_S(x, m, k)
    else:
        assert eval_S(eval_S(x, m, l), l, k) == eval_S(x, m, k)
    lhs = eval_S(eval_T(x, l, 2 * l), l, k)
    assert lhs == (eval_S(x, k, 2 * k) if (k // l) % 2 == 0 else eval_T(x, k, 2 * k))
    assert eval_T(eval_S(x, l, 2 * l), l, k) == eval_S(x, k, 2 * k)
    n = spec.n
    nk = n * k // gcd(n, k)
    d = gcd(n, k)
    assert eval_T(x, k, nk) == eval_T(x, d, n)
    if (nk // k) % 2 == 0:
        assert eval_S(x, k, nk) == eval_S(x, d, n)
