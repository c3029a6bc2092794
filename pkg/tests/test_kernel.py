import pytest

from _grid import expected_kernel_dims, field, grid
from affine_ff import (
    EquationParams,
    ParamMismatch,
    Subspace,
    enumerate_field,
    eval_S,
    eval_T,
    image_subspace,
    kernel_S,
    kernel_T,
    make_field,
    subfield_basis,
)
from affine_ff.kernel import kernel_S_case, kernel_T_case
from affine_ff.linearized import S

GF4 = make_field(2, 2)
GF9 = make_field(3, 2)


def _brute_kernel(spec, fn):
    return {x for x in enumerate_field(spec) if not fn(x)}


def test_image_subspace_examples():
    sub = subfield_basis(make_field(3, 4), 2)
    assert image_subspace(lambda x: x, sub) == sub
    assert image_subspace(lambda x: x.spec.zero(), sub) == Subspace.zero(sub.spec)
    img = image_subspace(S(1, 2), Subspace.full(GF9))
    assert set(img.elements()) == {GF9(0), GF9.gen(), 2 * GF9.gen()}


def test_kernel_T_examples():
    spec = make_field(5, 3)
    assert kernel_T(EquationParams(5, 3, 2, 2), spec).dim == 0
    ker = kernel_T(EquationParams(3, 2, 2, 1), GF9)
    assert set(ker.elements()) == _brute_kernel(GF9, lambda x: x + x**3)
    assert set(ker.elements()) == {GF9(0), GF9.gen(), 2 * GF9.gen()}
    ker = kernel_T(EquationParams(2, 2, 2, 1), GF4)
    assert set(ker.elements()) == {GF4(0), GF4(1)} == _brute_kernel(GF4, lambda x: x + x**2)


def test_kernel_S_examples():
    gf3 = make_field(3, 1)
    for l, k in [(1, 1), (1, 3), (2, 6), (1, 9)]:
        assert kernel_S(EquationParams(3, 1, k, l), gf3).dim == 0
    ker = kernel_S(EquationParams(3, 2, 2, 1), GF9)
    assert set(ker.elements()) == {GF9(0), GF9(1), GF9(2)} == _brute_kernel(GF9, lambda x: x - x**3)
    par = EquationParams(3, 2, 3, 1)
    assert (par.d, par.e, par.L, par.k_over_L) == (1, 1, 1, 3)
    ker = kernel_S(par, GF9)
    assert set(ker.elements()) == {GF9(0), GF9.gen(), 2 * GF9.gen()}
    assert set(ker.elements()) == _brute_kernel(GF9, lambda x: 2 * x - x**3)


def test_kernel_param_mismatch():
    with pytest.raises(ParamMismatch):
        kernel_T(EquationParams(3, 3, 2, 1), GF9)
    with pytest.raises(ParamMismatch):
        kernel_S(EquationParams(5, 2, 2, 1), GF9)


@pytest.mark.parametrize("p, n, k, l", [t for t in grid() if t[0] ** t[1] <= 729])
def test_kernels_on_small_grid(p, n, k, l):
    spec = field(p, n)
    par = EquationParams(p, n, k, l)
    kt, ks = kernel_T(par, spec), kernel_S(par, spec)
    assert (kt.dim, ks.dim) == expected_kernel_dims(p, n, k, l)
    assert (kernel_T_case(par).dim, kernel_S_case(par).dim) == (kt.dim, ks.dim)
    for v in kt.basis:
        assert not eval_T(v, l, k)
    for v in ks.basis:
        assert not eval_S(v, l, k)
    assert set(kt.elements()) == _brute_kernel(spec, lambda x: eval_T(x, l, k))
    assert set(ks.elements()) == _brute_kernel(spec, lambda x: eval_S(x, l, k))
    if p == 2:
        assert ks == kt


def test_every_S_case_is_exercised():
    keys = {kernel_S_case(EquationParams(p, n, k, l)).key for p, n, k, l in grid() if p != 2}
    assert keys == {
        "S/even/de-even/p|k/L",
        "S/even/de-even/p!|k/L",
        "S/even/de-odd",
        "S/odd/nd-odd",
        "S/odd/nd-even/p|k/L",
        "S/odd/nd-even/p!|k/L",
    }
