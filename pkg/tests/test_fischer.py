from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from monoclif.calculus import dirac_left, laplacian
from monoclif.clifford import MultiVector
from monoclif.fischer import (
    InhomogeneousError,
    NotHarmonicError,
    beta,
    fischer_decompose,
    fischer_gaussian_identity_check,
    fischer_inner_product,
    fischer_summands,
    is_monogenic,
    monogenic_projection,
    truncated_projection,
)
from monoclif.kernels import plane_wave
from monoclif.polynomial import CliffPoly, constant, variable, vector_mul, vector_power_mul, vector_variable
from monoclif.sampling import random_harmonic, random_homogeneous, random_monogenic, rng_for

from conftest import e, axis_wave, scalar, xvar
from strategies import dims, polys


def test_beta_values():
    for k in range(4):
        for m in (2, 3, 5):
            assert beta(1, k, m) == -(2 * k + m)
            assert beta(2, k, m) == -2
            assert beta(4, k, m) == -4
            assert beta(3, k, m) == -(2 + 2 * k + m)
    with pytest.raises(ValueError):
        beta(0, 1, 3)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_beta_matches_dirac(m):
    for k in range(4):
        P = plane_wave([0] * (m - 2) + [1, 0], [0] * (m - 2) + [0, 1], k)
        for s in range(1, 6):
            lhs = dirac_left(vector_power_mul(P, s, "left"))
            assert lhs == vector_power_mul(P, s - 1, "left").scale(beta(s, k, m))


def test_fischer_product_examples():
    x1 = variable(3, 1)
    assert fischer_inner_product(x1, x1) == scalar(3, 1)
    for l in range(5):
        for k in range(5):
            got = fischer_inner_product(variable(1, 1) ** l, variable(1, 1) ** k)
            assert got == scalar(1, factorial(k) if l == k else 0)
    x1e1 = xvar(3, 1, e(3, 1))
    assert fischer_inner_product(x1e1, x1e1) == scalar(3, 1)


def test_fischer_product_coefficient_side():
    # [a, b] = a^dagger b for constants, so the dagger factor sits on the left
    a, b = e(3, 1, 2), e(3, 2) + e(3, 1, 3)
    assert fischer_inner_product(constant(3, a), constant(3, b)) == (-a) * b


def test_decompose_examples():
    parts = fischer_decompose(vector_variable(3))
    assert parts.k == 1 and not parts.parts[0] and parts.parts[1] == constant(3)
    for m in (2, 3, 4):
        parts = fischer_decompose(variable(m, 1))
        M1 = variable(m, 1) + vector_mul(constant(m, e(m, 1)), "left").scale(Fraction(1, m))
        assert parts.parts[0] == M1
        assert parts.parts[1] == constant(m, e(m, 1, c=Fraction(-1, m)))
        assert not dirac_left(M1)


def test_decompose_constant():
    parts = fischer_decompose(constant(3, 5))
    assert parts.k == 0 and list(parts.parts) == [constant(3, 5)]


def test_decompose_inhomogeneous():
    with pytest.raises(InhomogeneousError):
        fischer_decompose(constant(2) + variable(2, 1))


def test_projection_examples():
    P = axis_wave(3) ** 2
    assert monogenic_projection(P) == P
    M1 = variable(3, 1) + vector_mul(constant(3, e(3, 1)), "left").scale(Fraction(1, 3))
    assert monogenic_projection(variable(3, 1)) == M1
    xP = vector_mul(axis_wave(3), "left")
    assert truncated_projection(xP, 2) == xP
    assert not truncated_projection(xP, 1)
    f = constant(3) + variable(3, 2) + variable(3, 1) ** 2
    assert truncated_projection(f, 1) == monogenic_projection(f)
    assert truncated_projection(f, 4) == f
    with pytest.raises(ValueError):
        truncated_projection(f, 0)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_decompose_round_trip_and_monogenic(m):
    rng = rng_for(7, "fischer", m)
    for k in range(6):
        for _ in range(3):
            R = random_homogeneous(m, k, rng, 4, complex_=True)
            parts = fischer_decompose(R)
            assert parts.reassemble() == R
            assert all(is_monogenic(M) for M in parts.parts)


@pytest.mark.parametrize("m", [2, 3])
def test_decompose_uniqueness(m):
    rng = rng_for(3, "unique", m)
    for j in range(4):
        for a in range(3):
            M = random_monogenic(m, a, rng)
            parts = fischer_decompose(vector_power_mul(M, j, "left"))
            assert parts.k == a + j
            for s, part in enumerate(parts.parts):
                assert part == (M if s == j else CliffPoly(m))


def test_fischer_summands_reassemble():
    rng = rng_for(1, "summands")
    f = CliffPoly(3)
    for k in range(4):
        f = f + random_homogeneous(3, k, rng, 2)
    total = CliffPoly(3)
    for j, piece in fischer_summands(f).items():
        total = total + piece
    assert total == f


def test_gaussian_identity_examples():
    R = xvar(3, 1, e(3, 1)) - xvar(3, 2, e(3, 2))
    lhs, rhs = fischer_gaussian_identity_check(R, R)
    assert lhs == rhs
    P = plane_wave([Fraction(3, 5), Fraction(4, 5), 0], [Fraction(-4, 5), Fraction(3, 5), 0], 2)
    lhs, rhs = fischer_gaussian_identity_check(P, P)
    assert lhs == rhs
    assert fischer_gaussian_identity_check(constant(3), constant(3)) == (scalar(3, 1), scalar(3, 1))
    with pytest.raises(NotHarmonicError):
        fischer_gaussian_identity_check(variable(2, 1) ** 2, constant(2))


def test_gaussian_identity_fails_off_harmonics():
    # |x|^2 paired with 1: Fischer gives 0, the Gaussian integral gives m
    from monoclif.bargmann import gaussian_pairing
    from monoclif.polynomial import norm_squared

    R = norm_squared(3)
    assert laplacian(R)
    assert fischer_inner_product(R, constant(3)) == MultiVector(3)
    assert gaussian_pairing(R, constant(3)) == scalar(3, 3)


@given(dims.flatmap(lambda m: st.tuples(polys(m), polys(m))))
def test_different_degrees_pair_to_zero(pq):
    p, q = pq
    for a, P in p.homogeneous_components().items():
        for b, Q in q.homogeneous_components().items():
            if a != b:
                assert not fischer_inner_product(P, Q)


@given(dims.flatmap(lambda m: st.tuples(polys(m), polys(m))))
def test_fischer_product_hermitian_symmetry(pq):
    from monoclif.clifford import hermitian_conjugate

    p, q = pq
    assert fischer_inner_product(p, q) == hermitian_conjugate(fischer_inner_product(q, p))


@pytest.mark.parametrize("m", [2, 3])
def test_gaussian_identity_on_random_harmonics(m):
    rng = rng_for(5, "harm", m)
    for _ in range(5):
        R, S = random_harmonic(m, 3, rng), random_harmonic(m, 3, rng)
        lhs, rhs = fischer_gaussian_identity_check(R, S)
        assert lhs == rhs
