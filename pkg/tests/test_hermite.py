from fractions import Fraction
from math import factorial

import pytest
import sympy

from monoclif.bargmann import l2_inner_product
from monoclif.calculus import HALF, GaussianSection, weighted_dirac
from monoclif.clifford import MultiVector
from monoclif.hermite import (
    NotMonogenicError,
    basis_section,
    clifford_hermite,
    multi_hermite,
    scalar_basis_section,
    scalar_hermite,
)
from monoclif.polynomial import CliffPoly, constant, norm_squared, variable, vector_mul, vector_variable
from monoclif.sampling import random_plane_wave, rng_for

from conftest import axis_wave, scalar


def _sympy_hermite(k):
    x = sympy.Symbol("x")
    expr = sympy.simplify((-1) ** k * sympy.exp(x ** 2 / 2) * sympy.diff(sympy.exp(-x ** 2 / 2), x, k))
    coeffs = sympy.Poly(expr, x).all_coeffs()[::-1]
    return [Fraction(int(c.p), int(c.q)) for c in coeffs]


@pytest.mark.parametrize("k", range(9))
def test_scalar_hermite_matches_definition(k):
    assert scalar_hermite(k) == _sympy_hermite(k)


def test_scalar_hermite_examples():
    assert scalar_hermite(0) == [1]
    assert scalar_hermite(1) == [0, 1]
    assert scalar_hermite(2) == [-1, 0, 1]


@pytest.mark.parametrize("ks", [(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 0, 1), (0, 3), (2, 2)])
def test_multi_hermite_matches_definition(ks):
    m = len(ks)
    xs = sympy.symbols(f"x1:{m + 1}")
    w = sympy.exp(-sum(v ** 2 for v in xs) / 2)
    d = w
    for v, k in zip(xs, ks):
        d = sympy.diff(d, v, k)
    expr = sympy.expand(sympy.simplify((-1) ** sum(ks) * d / w))
    expected = CliffPoly(m)
    for monom, c in sympy.Poly(expr, *xs).terms():
        expected = expected + CliffPoly(m, "x", {tuple(monom): Fraction(int(c.p), int(c.q))})
    assert multi_hermite(ks) == expected


def test_multi_hermite_examples():
    assert multi_hermite((0, 0, 0)) == constant(3)
    assert multi_hermite((1, 0, 0)) == variable(3, 1)
    assert multi_hermite((1, 1, 0)) == variable(3, 1) * variable(3, 2)


def test_clifford_hermite_examples():
    for m in (2, 3, 4):
        for k in range(4):
            assert clifford_hermite(0, k, m).coeffs == (1,)
            assert clifford_hermite(1, k, m).coeffs == (0, 1)
            assert clifford_hermite(2, k, m).coeffs == (2 * k + m, 0, 1)
    assert clifford_hermite(2, 1, 3).coeffs == (5, 0, 1)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_clifford_hermite_parity_and_leading(m):
    for s in range(7):
        for k in range(4):
            a = clifford_hermite(s, k, m).coeffs
            assert len(a) == s + 1 and a[s] == 1
            assert all(c == 0 for j, c in enumerate(a) if (j - s) % 2)


@pytest.mark.parametrize("m", [2, 3])
def test_defining_relation(m):
    rng = rng_for(11, "hermite", m)
    for k in range(4):
        P = random_plane_wave(m, k, rng)
        g = GaussianSection(P, HALF)
        for s in range(5):
            H = clifford_hermite(s, k, m).apply(P)
            assert g.poly == (H if s % 2 == 0 else -H)
            g = weighted_dirac(g)


def test_basis_section_examples():
    P = axis_wave(3)
    assert basis_section(0, 1, P).poly == P
    assert basis_section(1, 0, constant(3)).poly == vector_variable(3)
    got = basis_section(2, 1, P)
    assert got.c == Fraction(1, 4)
    assert got.poly == vector_mul(vector_mul(P, "left"), "left") + P.scale(5)
    assert got.poly == P.scale(5) - norm_squared(3) * P


def test_basis_section_rejects_non_monogenic():
    with pytest.raises(NotMonogenicError):
        basis_section(1, 1, variable(3, 1))
    with pytest.raises(NotMonogenicError):
        basis_section(1, 2, axis_wave(3))
    with pytest.raises(NotMonogenicError):
        basis_section(0, 0, CliffPoly(3))


def test_one_dimensional_orthogonality():
    for l in range(7):
        for k in range(7):
            got = l2_inner_product(scalar_basis_section((l,)), scalar_basis_section((k,)))
            assert got == scalar(1, factorial(k) if l == k else 0)


def test_multi_index_norms():
    for ks in [(0, 0), (1, 2), (3, 0, 1), (2, 2, 1)]:
        psi = scalar_basis_section(ks)
        expected = 1
        for k in ks:
            expected *= factorial(k)
        assert l2_inner_product(psi, psi) == MultiVector.scalar(len(ks), expected)
