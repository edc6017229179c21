from fractions import Fraction
from math import factorial

import pytest
import sympy
from hypothesis import given, strategies as st

from monoclif.bargmann import (
    WeightError,
    bargmann_inner_product,
    complex_moment,
    gaussian_moment,
    heat_flow,
    isometry_check,
    l2_inner_product,
    monogenic_part_of_transform,
    segal_bargmann,
    segal_bargmann_moments,
    hermite_shift_check,
    weierstrass,
)
from monoclif.calculus import HALF, QUARTER, GaussianSection
from monoclif.fischer import fischer_inner_product
from monoclif.hermite import basis_section, scalar_basis_section
from monoclif.kernels import plane_wave
from monoclif.polynomial import CliffPoly, constant, variable, vector_mul, vector_power_mul, vector_variable
from monoclif.sampling import random_monogenic, random_plane_wave, rng_for

from conftest import e, axis_wave, scalar, xvar
from strategies import dims, polys


def _moment_recursion(n):
    # mu_0 = 1, mu_1 = 0, mu_n = (n - 1) mu_{n-2}
    mu = [1, 0]
    for j in range(2, n + 1):
        mu.append((j - 1) * mu[j - 2])
    return mu[n]


@pytest.mark.parametrize("n", range(12))
def test_gaussian_moment_1d(n):
    assert gaussian_moment((n,)) == _moment_recursion(n)


@pytest.mark.parametrize("n", [0, 2, 3, 4, 6])
def test_gaussian_moment_by_integration(n):
    x = sympy.Symbol("x", real=True)
    val = sympy.integrate(x ** n * sympy.exp(-x ** 2 / 2), (x, -sympy.oo, sympy.oo)) / sympy.sqrt(2 * sympy.pi)
    assert gaussian_moment((n,)) == Fraction(int(sympy.nsimplify(val)))


def test_gaussian_moment_examples():
    assert gaussian_moment((0, 0, 0)) == 1
    assert gaussian_moment((2, 0, 0)) == 1
    assert gaussian_moment((1, 0, 0)) == 0
    assert gaussian_moment((2, 4)) == 3


def test_complex_moment():
    assert complex_moment((2, 1), (2, 1)) == 2
    assert complex_moment((1, 0), (0, 1)) == 0


def psi(k):
    return scalar_basis_section((k,))


def test_l2_examples():
    one = GaussianSection(constant(2), QUARTER)
    assert l2_inner_product(one, one) == scalar(2, 1)
    assert l2_inner_product(psi(1), psi(2)) == scalar(1, 0)
    assert l2_inner_product(psi(2), psi(2)) == scalar(1, 2)
    with pytest.raises(WeightError):
        l2_inner_product(GaussianSection(constant(2), HALF), one)


def test_l2_is_conjugate_linear_in_first_slot():
    f = GaussianSection(constant(2, e(2, 1)), QUARTER)
    g = GaussianSection(constant(2, e(2, 2)), QUARTER)
    assert l2_inner_product(f, g) == (-e(2, 1)) * e(2, 2)


@pytest.mark.parametrize("k", range(9))
def test_transform_of_psi_k(k):
    assert segal_bargmann(psi(k)) == variable(1, 1, "z") ** k


def test_transform_examples():
    for ks in [(1, 2), (0, 3, 1), (2, 0, 2)]:
        expected = constant(len(ks), role="z")
        for j, k in enumerate(ks):
            expected = expected * variable(len(ks), j + 1, "z") ** k
        assert segal_bargmann(scalar_basis_section(ks)) == expected
    for m in (2, 3):
        for k in range(5):
            got = segal_bargmann(GaussianSection(axis_wave(m) ** k, QUARTER))
            assert got == axis_wave(m, "z") ** k
    with pytest.raises(WeightError):
        segal_bargmann(GaussianSection(constant(1), HALF))


def test_weierstrass_is_transform():
    P = variable(2, 1) ** 2
    assert weierstrass(P) == variable(2, 1, "z") ** 2 + constant(2, 1, "z")
    assert heat_flow(P, Fraction(1)) == P + constant(2, 2)


@given(dims.flatmap(lambda m: polys(m, max_deg=5)))
def test_heat_and_moment_routes_agree(p):
    f = GaussianSection(p, QUARTER)
    assert segal_bargmann(f) == segal_bargmann_moments(f)


def test_bargmann_inner_product_examples():
    z = variable(1, 1, "z")
    for l in range(5):
        for k in range(5):
            assert bargmann_inner_product(z ** l, z ** k) == scalar(1, factorial(k) if l == k else 0)
    z1e1 = xvar(3, 1, e(3, 1), role="z")
    assert bargmann_inner_product(z1e1, z1e1) == scalar(3, 1)


def test_isometry_examples():
    assert isometry_check(psi(0), psi(1)) == (scalar(1, 0), scalar(1, 0))
    assert isometry_check(psi(2), psi(2)) == (scalar(1, 2), scalar(1, 2))
    rng = rng_for(2, "iso")
    for s in range(3):
        for k in range(3):
            f = basis_section(s, k, random_plane_wave(3, k, rng))
            lhs, rhs = isometry_check(f, f)
            assert lhs == rhs


@pytest.mark.parametrize("m", [2, 3])
def test_isometry_on_general_sections(m):
    # B is an isometry on all of L^2, not only on basis sections
    rng = rng_for(4, "iso-general", m)
    from monoclif.sampling import random_polynomial

    for _ in range(4):
        f = GaussianSection(random_polynomial(m, 3, rng, complex_=True), QUARTER)
        g = GaussianSection(random_polynomial(m, 3, rng, complex_=True), QUARTER)
        lhs, rhs = isometry_check(f, g)
        assert lhs == rhs


def test_hermite_shift_examples():
    P = axis_wave(2)
    lhs, rhs = hermite_shift_check(0, 1, P)
    assert lhs == rhs == segal_bargmann(GaussianSection(P, QUARTER))
    lhs, rhs = hermite_shift_check(1, 1, P)
    zP = vector_mul(axis_wave(2, "z"), "left")
    assert lhs == rhs == zP
    rng = rng_for(9, "t32")
    lhs, rhs = hermite_shift_check(2, 2, random_monogenic(3, 2, rng))
    assert lhs == rhs


@pytest.mark.parametrize("m", [2, 3])
def test_transform_of_basis_sections(m):
    rng = rng_for(6, "t34", m)
    for s in range(4):
        for k in range(4):
            for P in (random_plane_wave(m, k, rng), random_monogenic(m, k, rng, complex_=True)):
                got = segal_bargmann(basis_section(s, k, P))
                assert got == vector_power_mul(P.with_role("z"), s, "left")


def test_monogenic_part_examples():
    P = plane_wave([Fraction(3, 5), Fraction(4, 5), 0], [Fraction(-4, 5), Fraction(3, 5), 0], 3)
    assert monogenic_part_of_transform(GaussianSection(P, QUARTER)) == P.with_role("z")
    assert not monogenic_part_of_transform(GaussianSection(vector_variable(3), QUARTER))
    assert monogenic_part_of_transform(GaussianSection(constant(3), QUARTER)) == constant(3, role="z")


@given(dims.flatmap(lambda m: st.tuples(polys(m), polys(m))))
def test_bargmann_fischer_identity(pq):
    R, S = pq
    assert fischer_inner_product(R, S) == bargmann_inner_product(R.with_role("z"), S.with_role("z"))


def test_empty_polynomial_transform():
    assert not segal_bargmann(GaussianSection(CliffPoly(2), QUARTER))
