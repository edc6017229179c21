from fractions import Fraction

import pytest
from hypothesis import given

from monoclif.calculus import (
    HALF,
    QUARTER,
    GaussianSection,
    dirac_left,
    dirac_right,
    euler_degree,
    laplacian,
    weighted_dirac,
)
from monoclif.kernels import plane_wave, zonal_fischer
from monoclif.polynomial import (
    BiPoly,
    bilinear_pairing,
    constant,
    norm_squared,
    variable,
    vector_mul,
    vector_power_mul,
    vector_variable,
)

from conftest import e, axis_wave
from strategies import dims, polys


def test_dirac_left_examples():
    assert dirac_left(variable(3, 1)) == constant(3, e(3, 1))
    assert not dirac_left(axis_wave(3))
    assert dirac_left(norm_squared(3)) == vector_variable(3).scale(2)


def test_dirac_right_examples():
    u1 = variable(3, 1, "u")
    assert dirac_right(u1) == constant(3, e(3, 1), "u")
    xu = bilinear_pairing(3)
    got = dirac_right(xu, 1)
    x_as_bi = BiPoly(3, ("x", "u"), {((1, 0, 0), (0, 0, 0)): e(3, 1), ((0, 1, 0), (0, 0, 0)): e(3, 2),
                                     ((0, 0, 1), (0, 0, 0)): e(3, 3)})
    assert got == x_as_bi
    for m in (2, 3, 4):
        assert not dirac_right(zonal_fischer(1, m)[0], 1)


def test_laplacian_examples():
    assert laplacian(variable(2, 1) ** 2) == constant(2, 2)
    assert not laplacian(plane_wave([0, 0, 1], [1, 0, 0], 3))


def test_euler_degree_examples():
    assert euler_degree(variable(3, 1) * variable(3, 2)) == 2
    assert euler_degree(constant(3) + variable(3, 1)) is None
    P = plane_wave([Fraction(3, 5), Fraction(4, 5), 0], [Fraction(-4, 5), Fraction(3, 5), 0], 3)
    assert euler_degree(P) == 3


def test_weighted_dirac_examples():
    g = weighted_dirac(GaussianSection(constant(3), HALF))
    assert g.poly == -vector_variable(3) and g.c == HALF
    for k in range(4):
        P = axis_wave(3) ** k
        once = weighted_dirac(GaussianSection(P, HALF))
        assert once.poly == -vector_mul(P, "left")
        twice = weighted_dirac(once)
        expected = P.scale(2 * k + 3) - norm_squared(3) * P
        assert twice.poly == expected


def test_weighted_dirac_quarter_weight():
    # c = 1/4 gives d(P) - x P / 2
    g = weighted_dirac(GaussianSection(variable(2, 1), QUARTER))
    assert g.poly == constant(2, e(2, 1)) - vector_mul(variable(2, 1), "left").scale(Fraction(1, 2))


def test_section_rejects_bad_weight():
    with pytest.raises(ValueError):
        GaussianSection(constant(2), 0)
    with pytest.raises(ValueError):
        GaussianSection(constant(2, role="z"), HALF)


@given(dims.flatmap(polys))
def test_dirac_squared_is_minus_laplacian(p):
    assert dirac_left(dirac_left(p)) == -laplacian(p)
    assert dirac_right(dirac_right(p)) == -laplacian(p)


@given(dims.flatmap(lambda m: polys(m, max_terms=3)))
def test_dirac_of_vector_times(p):
    # d(x f) = -m f - 2 E f - x d f, checked on each homogeneous component
    for k, f in p.homogeneous_components().items():
        lhs = dirac_left(vector_mul(f, "left"))
        rhs = f.scale(-(p.m + 2 * k)) - vector_mul(dirac_left(f), "left")
        assert lhs == rhs


@given(dims.flatmap(polys))
def test_euler_degree_on_components(p):
    for k, f in p.homogeneous_components().items():
        assert euler_degree(f) == k


def test_vector_power_dirac_beta_values():
    P = axis_wave(3)
    assert dirac_left(vector_power_mul(P, 3, "left")) == vector_power_mul(P, 2, "left").scale(-7)
