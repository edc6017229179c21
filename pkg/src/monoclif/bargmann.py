"""Segal-Bargmann and Weierstrass transforms on polynomial x Gaussian sections.

All integrals are normalized moment functionals, so no irrational prefactor
ever appears:

    real:     mu(x^a)          = (2 pi)^{-m/2} int x^a e^{-|x|^2/2} dx
    complex:  nu(zbar^a z^b)   = pi^{-m} int zbar^a z^b e^{-|z|^2} dx dy
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .calculus import QUARTER, GaussianSection, laplacian
from .clifford import MultiVector, blade_product
from .fischer import monogenic_projection
from .hermite import basis_section
from .polynomial import (
    CliffPoly,
    _add_into,
    _SparsePoly,
    hermitian_conjugate_poly,
    partial,
    vector_power_mul,
)


class WeightError(ValueError):
    """A Gaussian section carried the wrong weight for the requested operation."""


@lru_cache(maxsize=None)
def _moment_1d(n: int) -> int:
    # mu_{2n} = (2n-1) mu_{2n-2}
    if n % 2:
        return 0
    out = 1
    for j in range(n - 1, 0, -2):
        out *= j
    return out


def gaussian_moment(alpha) -> Fraction:
    """Normalized real Gaussian moment: prod_j (alpha_j - 1)!! for even alpha, else 0."""
    return Fraction(prod(_moment_1d(a) for a in alpha))


def complex_moment(alpha, beta) -> Fraction:
    """pi^{-m} int zbar^alpha z^beta e^{-|z|^2}: the angular integral forces alpha = beta,
    the radial one gives int_0^inf e^{-r^2} r^{2a} 2r dr = a!."""
    if tuple(alpha) != tuple(beta):
        return Fraction(0)
    return Fraction(prod(factorial(a) for a in alpha))


def gaussian_integral(p: _SparsePoly, group: int = 0):
    """Apply mu in the variables of ``group``; other variables stay formal."""
    sl = p.group_slice(group)
    out: dict = {}
    for (exp, mask), c in p.raw_items():
        mom = gaussian_moment(exp[sl])
        if mom:
            _add_into(out, (exp[: sl.start] + exp[sl.stop:], mask), c * mom)
    if len(p.roles) == 1:
        return MultiVector._raw(p.m, {b: v for (_, b), v in out.items()})
    return CliffPoly._raw(p.m, (p.roles[1 - group],), out)


def gaussian_pairing(P: CliffPoly, Q: CliffPoly) -> MultiVector:
    """(2 pi)^{-m/2} int P(x)^dagger Q(x) e^{-|x|^2/2} dx."""
    return gaussian_integral(hermitian_conjugate_poly(P).mul(Q))


def _require_quarter(*sections: GaussianSection):
    for g in sections:
        if g.c != QUARTER:
            raise WeightError(f"expected Gaussian weight 1/4, got {g.c}")


def l2_inner_product(f: GaussianSection, g: GaussianSection) -> MultiVector:
    """<f, g> for f = P e^{-|x|^2/4}, g = Q e^{-|x|^2/4}; the weights combine to e^{-|x|^2/2}."""
    _require_quarter(f, g)
    return gaussian_pairing(f.poly, g.poly)


def heat_flow(P: CliffPoly, t: Fraction = Fraction(1, 2)) -> CliffPoly:
    """e^{t Delta} P = sum_n t^n Delta^n P / n!, a finite sum on polynomials."""
    out = P
    term = P
    n = 0
    coeff = Fraction(1)
    while True:
        term = laplacian(term)
        if not term:
            break
        n += 1
        coeff = coeff * t / n
        out = out + term.scale(coeff)
    return out


def segal_bargmann(f: GaussianSection) -> CliffPoly:
    """B[P e^{-|x|^2/4}](z) = sum_n Delta^n P(z) / (2^n n!).

    The kernel times the section weight is exp(-(z-x).(z-x)/2), i.e. the
    transform is the heat semigroup at time 1/2 evaluated at z.
    """
    _require_quarter(f)
    return heat_flow(f.poly).with_role("z")


def segal_bargmann_moments(f: GaussianSection) -> CliffPoly:
    """Independent route: B[f](z) = sum_a (d^a P)(z) mu(a) / a! (Taylor shift under the moments)."""
    _require_quarter(f)
    P = f.poly
    m = P.m
    out = P.zero_like()
    deg = P.degree()
    for alpha in _even_multi_indices(m, deg):
        d = P
        for j, a in enumerate(alpha):
            d = partial(d, j, a)
        if not d:
            continue
        w = gaussian_moment(alpha) / prod(factorial(a) for a in alpha)
        out = out + d.scale(w)
    return out.with_role("z")


def _even_multi_indices(m: int, max_deg: int):
    def rec(j, left):
        if j == m:
            yield ()
            return
        for a in range(0, left + 1, 2):
            for rest in rec(j + 1, left - a):
                yield (a,) + rest

    yield from rec(0, max(max_deg, 0))


def weierstrass(g: CliffPoly) -> CliffPoly:
    """W[g] = B[g e^{-|x|^2/4}]."""
    return segal_bargmann(GaussianSection(g, QUARTER))


def bargmann_inner_product(f: CliffPoly, g: CliffPoly) -> MultiVector:
    """pi^{-m} int f(z)^dagger g(z) e^{-|z|^2}, sesquilinear in the first slot."""
    if f.m != g.m:
        raise ValueError(f"dimension mismatch: m={f.m} vs m={g.m}")
    m = f.m
    by_exp: dict = {}
    for (exp, mask), c in g.raw_items():
        by_exp.setdefault(exp, []).append((mask, c))
    out: dict = {}
    for (ea, ma), ca in hermitian_conjugate_poly(f).raw_items():
        for eb, lst in by_exp.items():
            w = complex_moment(ea, eb)
            if not w:
                continue
            for mb, cb in lst:
                sign, nm = blade_product(ma, mb)
                v = ca * cb * w
                _add_into(out, nm, v if sign > 0 else -v)
    return MultiVector._raw(m, out)


def isometry_check(f: GaussianSection, g: GaussianSection) -> tuple[MultiVector, MultiVector]:
    return l2_inner_product(f, g), bargmann_inner_product(segal_bargmann(f), segal_bargmann(g))


def hermite_shift_check(s: int, k: int, P: CliffPoly) -> tuple[CliffPoly, CliffPoly]:
    """(B[psi_{s,k} P], z^s B[P e^{-|x|^2/4}]) computed independently."""
    lhs = segal_bargmann(basis_section(s, k, P))
    rhs = vector_power_mul(segal_bargmann(GaussianSection(P, QUARTER)), s, "left")
    return lhs, rhs


def monogenic_part_of_transform(f: GaussianSection) -> CliffPoly:
    _require_quarter(f)
    return monogenic_projection(segal_bargmann(f))
