"""Seeded random generators of small exact test objects."""

from __future__ import annotations

import random
from fractions import Fraction

from .clifford import CRational, MultiVector
from .fischer import monogenic_projection
from .kernels import random_plane_wave
from .polynomial import CliffPoly, _add_into, vector_power_mul


def rng_for(seed: int, *salt) -> random.Random:
    return random.Random(repr((seed,) + salt))


def random_scalar(rng: random.Random, complex_: bool = False, span: int = 3) -> CRational:
    re = Fraction(rng.randint(-span, span), rng.choice((1, 1, 2, 3)))
    im = rng.randint(-span, span) if complex_ and rng.random() < 0.5 else 0
    return CRational(re, im)


def random_multivector(m: int, rng: random.Random, nblades: int = 4, complex_: bool = False) -> MultiVector:
    terms: dict = {}
    for _ in range(nblades):
        _add_into(terms, rng.randrange(1 << m), random_scalar(rng, complex_))
    return MultiVector(m, terms)


def random_homogeneous(m: int, k: int, rng: random.Random, nterms: int = 4, complex_: bool = False, role: str = "x") -> CliffPoly:
    flat: dict = {}
    for _ in range(nterms):
        exp = [0] * m
        for _ in range(k):
            exp[rng.randrange(m)] += 1
        c = random_scalar(rng, complex_)
        if c:
            _add_into(flat, (tuple(exp), rng.randrange(1 << m)), c)
    return CliffPoly._raw(m, (role,), flat)


def random_polynomial(m: int, max_deg: int, rng: random.Random, nterms: int = 5, complex_: bool = False, role: str = "x") -> CliffPoly:
    out = CliffPoly(m, role)
    for _ in range(nterms):
        out = out + random_homogeneous(m, rng.randint(0, max_deg), rng, 1, complex_, role)
    return out


def random_monogenic(m: int, k: int, rng: random.Random, complex_: bool = False) -> CliffPoly:
    """Nonzero homogeneous monogenic of degree k (projection of a random polynomial)."""
    for _ in range(50):
        P = monogenic_projection(random_homogeneous(m, k, rng, 4, complex_))
        if P:
            return P
    return random_plane_wave(m, k, rng)


def random_s_monogenic(m: int, s: int, deg: int, rng: random.Random) -> CliffPoly:
    """sum_{j<s} x^j M_{d-j} with random monogenic M's, total degree exactly ``deg``."""
    out = CliffPoly(m)
    for j in range(min(s, deg + 1)):
        M = random_plane_wave(m, deg - j, rng) if rng.random() < 0.5 else random_monogenic(m, deg - j, rng)
        out = out + vector_power_mul(M, j, "left")
    return out


def random_harmonic(m: int, max_deg: int, rng: random.Random, complex_: bool = True) -> CliffPoly:
    """Harmonic polynomial as a sum of M_a + x M_b terms (both summand types are harmonic)."""
    out = CliffPoly(m)
    for _ in range(2):
        a = rng.randint(0, max_deg)
        out = out + random_monogenic(m, a, rng, complex_)
        if a >= 1:
            out = out + vector_power_mul(random_monogenic(m, a - 1, rng, complex_), 1, "left")
    return out
