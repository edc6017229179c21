"""Monogenic plane waves, zonal spherical monogenics and the Fourier-Borel / B_s kernels.

Zonal monogenics Z_{k,s}(x, u) are produced by three routes:

* ``fischer``    Fischer-decompose <x,u>^k / k! in x and strip u^s on the right;
* ``recursion``  Z_{k,s} = Z_{k-s,0} / (beta_{s,k-s} ... beta_{1,k-s});
* ``gegenbauer`` closed form of Z_k in Gegenbauer polynomials (m >= 3).

The infinite kernels E_s and B_s are only ever handled as explicit truncations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .bargmann import gaussian_integral, segal_bargmann
from .calculus import QUARTER, GaussianSection, dirac_left, dirac_power, dirac_right
from .clifford import MultiVector, dot_and_wedge, geometric_product
from .fischer import beta, fischer_decompose, fischer_inner_product, is_monogenic
from .polynomial import (
    BiPoly,
    CliffPoly,
    bilinear_pairing,
    bivector_wedge,
    divide_by_norm_squared,
    embed,
    hermitian_conjugate_poly,
    norm_squared,
    vector_power_mul,
)

ROUTES = ("fischer", "recursion", "gegenbauer")


class RouteError(ValueError):
    """The requested zonal route does not support these parameters."""


class FrameError(ValueError):
    """Plane-wave parameters are not an orthonormal pair."""


# ---- plane waves -----------------------------------------------------------

def _as_vector(v, m: int | None = None) -> MultiVector:
    if isinstance(v, MultiVector):
        if not v.is_vector():
            raise FrameError("plane-wave directions must be 1-vectors")
        return v
    return MultiVector.vector(len(v) if m is None else m, list(v))


def plane_wave(t, s, k: int) -> CliffPoly:
    """(<x,t> - t s <x,s>)^k for orthonormal rational 1-vectors t, s."""
    t = _as_vector(t)
    s = _as_vector(s, t.m)
    m = t.m
    tt, _ = dot_and_wedge(t, t)
    ss, _ = dot_and_wedge(s, s)
    ts, _ = dot_and_wedge(t, s)
    if tt != 1 or ss != 1 or ts != 0:
        raise FrameError("t and s must be orthogonal unit vectors")
    bivec = geometric_product(t, s)
    terms = {}
    for j in range(m):
        exp = [0] * m
        exp[j] = 1
        coeff = MultiVector.scalar(m, t.coefficient((j + 1,))) - bivec.scale(s.coefficient((j + 1,)))
        terms[tuple(exp)] = coeff
    return CliffPoly(m, "x", terms) ** k


def givens_frame(m: int, rotations: Sequence[tuple[int, int, tuple[int, int, int]]] = ()) -> list[list[Fraction]]:
    """Rows of an exactly orthogonal rational matrix.

    Starts from the identity and applies plane rotations (i, j, (a, b, c)) with
    a^2 + b^2 = c^2, i.e. cos = a/c and sin = b/c in the (i, j) coordinate plane.
    """
    rows = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    for i, j, (a, b, c) in rotations:
        if a * a + b * b != c * c:
            raise FrameError(f"({a}, {b}, {c}) is not a Pythagorean triple")
        cs, sn = Fraction(a, c), Fraction(b, c)
        for r in rows:
            ri, rj = r[i], r[j]
            r[i], r[j] = cs * ri - sn * rj, sn * ri + cs * rj
    return rows


PYTHAGOREAN_TRIPLES = ((3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29))


def random_frame(m: int, rng, n_rotations: int = 3) -> list[list[Fraction]]:
    rots = []
    for _ in range(n_rotations):
        i, j = rng.sample(range(m), 2)
        a, b, c = rng.choice(PYTHAGOREAN_TRIPLES)
        if rng.random() < 0.5:
            a, b = b, a
        if rng.random() < 0.5:
            b = -b
        rots.append((i, j, (a, b, c)))
    return givens_frame(m, rots)


def random_plane_wave(m: int, k: int, rng) -> CliffPoly:
    rows = random_frame(m, rng)
    i, j = rng.sample(range(m), 2)
    return plane_wave(rows[i], rows[j], k)


# ---- zonal monogenics ---------------------------------------------------------

def _pairing_power(k: int, m: int) -> BiPoly:
    """<x,u>^k / k!"""
    return (bilinear_pairing(m) ** k) / factorial(k)


def strip_right_vector_power(p: BiPoly, s: int, group: int = 1) -> BiPoly:
    """Solve Z u^s = p for Z, using u^{-1} = -u / |u|^2."""
    out = p
    for _ in range(s):
        out = -divide_by_norm_squared(vector_power_mul(out, 1, "right", group), group)
    return out


@lru_cache(maxsize=None)
def zonal_fischer(k: int, m: int) -> tuple[BiPoly, ...]:
    """[Z_{k,0}, ..., Z_{k,k}] from the Fischer decomposition of <x,u>^k / k! in x."""
    parts = fischer_decompose(_pairing_power(k, m), group=0, degree=k)
    out = []
    for s, M in enumerate(parts.parts):
        Z = strip_right_vector_power(M, s)
        if vector_power_mul(Z, s, "right", 1) != M:
            raise ArithmeticError(f"Fischer part {s} of degree {k} is not of the form Z u^{s}")
        out.append(Z)
    return tuple(out)


def beta_product(k: int, s: int, m: int) -> Fraction:
    """beta_{s,k-s} ... beta_{1,k-s}."""
    out = Fraction(1)
    for j in range(1, s + 1):
        out *= beta(j, k - s, m)
    return out


def zonal_recursion(k: int, s: int, base: BiPoly) -> BiPoly:
    """Z_{k,s} = Z_{k-s,0} / (beta_{s,k-s} ... beta_{1,k-s}) with ``base`` = Z_{k-s,0}."""
    if k < s:
        raise ValueError(f"need k >= s, got k={k}, s={s}")
    if s == 0:
        return base
    return base / beta_product(k, s, base.m)


def gegenbauer_poly(k: int, alpha) -> list[Fraction]:
    """Ascending coefficients of C_k^alpha(t) via the three-term recurrence."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("Gegenbauer parameter must be positive")
    if k < 0:
        return []
    prev = [Fraction(1)]
    if k == 0:
        return prev
    cur = [Fraction(0), 2 * alpha]
    for n in range(2, k + 1):
        nxt = [Fraction(0)] * (n + 1)
        for j, c in enumerate(cur):
            nxt[j + 1] += 2 * (n + alpha - 1) * c / n
        for j, c in enumerate(prev):
            nxt[j] -= (n + 2 * alpha - 2) * c / n
        prev, cur = cur, nxt
    return cur


def _homogenized_gegenbauer(k: int, alpha: Fraction, m: int) -> BiPoly:
    """(|x||u|)^k C_k^alpha(<x,u>/(|x||u|)), which only has even powers of |x||u|."""
    xu = bilinear_pairing(m)
    nx = embed(norm_squared(m, "x"), ("x", "u"), 0)
    nu = embed(norm_squared(m, "u"), ("x", "u"), 1)
    radial = nx.mul(nu)
    out = xu.zero_like()
    for p, c in enumerate(gegenbauer_poly(k, alpha)):
        if c:
            # parity: p = k - 2i
            out = out + (xu ** p).mul(radial ** ((k - p) // 2)).scale(c)
    return out


def gamma_ratio(k: int, m: int) -> Fraction:
    """Gamma(m/2 - 1) / Gamma(k + m/2) as a telescoping product of half-integers."""
    base = Fraction(m, 2) - 1
    if base <= 0:
        raise RouteError("the Gegenbauer closed form needs m >= 3")
    out = Fraction(1)
    for j in range(k + 1):
        out /= base + j
    return out


@lru_cache(maxsize=None)
def zonal_gegenbauer(k: int, m: int) -> BiPoly:
    """Z_k(x,u) from the closed form

        Gamma(m/2-1) / (2^{k+1} Gamma(k+m/2)) (|x||u|)^k
            [(k+m-2) C_k^{m/2-1}(t) + (m-2) (x^u)/(|x||u|) C_{k-1}^{m/2}(t)].
    """
    if m < 3:
        raise RouteError("the Gegenbauer closed form needs m >= 3")
    pref = gamma_ratio(k, m) / 2 ** (k + 1)
    out = _homogenized_gegenbauer(k, Fraction(m, 2) - 1, m).scale(k + m - 2)
    if k >= 1:
        wedge_part = bivector_wedge(m).mul(_homogenized_gegenbauer(k - 1, Fraction(m, 2), m))
        out = out + wedge_part.scale(m - 2)
    return out.scale(pref)


def zonal(k: int, s: int, m: int, route: str = "fischer") -> BiPoly:
    if route not in ROUTES:
        raise RouteError(f"unknown route {route!r}; choose from {ROUTES}")
    if not 0 <= s <= k:
        raise ValueError(f"need 0 <= s <= k, got k={k}, s={s}")
    if route == "fischer":
        return zonal_fischer(k, m)[s]
    if route == "recursion":
        return zonal_recursion(k, s, zonal_fischer(k - s, m)[0])
    return zonal_recursion(k, s, zonal_gegenbauer(k - s, m))


@dataclass(frozen=True)
class ZonalTable:
    """All Z_{k,s}, 0 <= s <= k <= K, for one dimension and route."""

    m: int
    K: int
    route: str
    entries: dict = field(default_factory=dict)

    def __getitem__(self, ks: tuple[int, int]) -> BiPoly:
        return self.entries[ks]


def build_zonal_table(m: int, K: int, route: str = "fischer") -> ZonalTable:
    if route == "gegenbauer" and m < 3:
        raise RouteError("the Gegenbauer closed form needs m >= 3")
    entries = {(k, s): zonal(k, s, m, route) for k in range(K + 1) for s in range(k + 1)}
    return ZonalTable(m, K, route, entries)


@lru_cache(maxsize=None)
def default_table(m: int, K: int) -> ZonalTable:
    return build_zonal_table(m, K, "fischer")


# ---- Fourier-Borel kernel truncations ------------------------------------------

@dataclass(frozen=True)
class KernelTruncation:
    """E_s^{<=K}(x,u) = sum_{k=s}^{K} Z_{k,s}(x,u)."""

    s: int
    K: int
    value: BiPoly


def fourier_borel_truncation(s: int, K: int, m: int, table: ZonalTable | None = None) -> KernelTruncation:
    if K < s:
        raise ValueError(f"need K >= s, got K={K}, s={s}")
    if table is None:
        table = default_table(m, K)
    if table.K < K or table.m != m:
        raise ValueError("zonal table does not cover the requested truncation")
    val = BiPoly(m)
    for k in range(s, K + 1):
        val = val + table[(k, s)]
    return KernelTruncation(s, K, val)


def exp_pairing_taylor(K: int, m: int) -> BiPoly:
    """sum_{k<=K} <x,u>^k / k!"""
    out = BiPoly(m)
    for k in range(K + 1):
        out = out + _pairing_power(k, m)
    return out


def reproducing_check(P: CliffPoly, table: ZonalTable, kernel: str = "zonal") -> tuple[CliffPoly, CliffPoly]:
    """([K(u,x)^dagger, P(x)], P(u)) with K = Z_k or the truncation E^{<=K}.

    Z(u,x) is the table entry with u substituted into the first slot; the Fischer
    pairing runs over x, leaving u formal.
    """
    k = P.degree()
    if not is_monogenic(P) or P.homogeneous_component(k) != P:
        raise ValueError("P must be monogenic and homogeneous")
    if k > table.K:
        raise ValueError(f"table degree {table.K} < polynomial degree {k}")
    if kernel == "zonal":
        ker = table[(k, 0)]
    elif kernel == "fourier_borel":
        ker = fourier_borel_truncation(0, table.K, table.m, table).value
    else:
        raise ValueError(f"unknown kernel {kernel!r}")
    ker_ux = ker.with_roles(("u", "x"))
    lhs = fischer_inner_product(hermitian_conjugate_poly(ker_ux), P, group=1)
    return lhs, P.with_role("u")


# ---- B_s kernel -----------------------------------------------------------------

def bs_kernel(s: int, K: int, m: int, table: ZonalTable | None = None) -> BiPoly:
    """B_s(z,x) = sum_{j<s} z^j sum_{l<=j/2} E_{j-2l}(z,x) x^{j-2l} / (2^l l!), E's truncated at K."""
    if s < 1:
        raise ValueError("s must be >= 1")
    if K < s:
        raise ValueError(f"need K >= s, got K={K}, s={s}")
    if table is None:
        table = default_table(m, K)
    roles = ("z", "x")
    out = BiPoly(m, roles)
    for j in range(s):
        inner = BiPoly(m, roles)
        for l in range(j // 2 + 1):
            i = j - 2 * l
            E = fourier_borel_truncation(i, K, m, table).value.with_roles(roles)
            term = vector_power_mul(E, i, "right", 1)
            inner = inner + term / (2 ** l * factorial(l))
        out = out + vector_power_mul(inner, j, "left", 0)
    return out


def exp_kernel_taylor(K: int, z_cap: int, m: int) -> BiPoly:
    """Bihomogeneous components of exp(-z.z/2 + x.z) with x-degree <= K and z-degree <= z_cap."""
    roles = ("z", "x")
    zz = embed(norm_squared(m, "z"), roles, 0)
    xz = bilinear_pairing(m, roles)
    out = BiPoly(m, roles)
    for b in range(K + 1):
        xb = (xz ** b) / factorial(b)
        for l in range((z_cap - b) // 2 + 1):
            out = out + xb.mul(zz ** l).scale(Fraction((-1) ** l, 2 ** l * factorial(l)))
    return out


class NotSMonogenicError(ValueError):
    pass


def weierstrass_kernel_check(g: CliffPoly, s: int, K: int, table: ZonalTable | None = None) -> tuple[CliffPoly, CliffPoly]:
    """(W[g](z), (2 pi)^{-m/2} int B_s(z,x) g(x) e^{-|x|^2/2} dx) for s-monogenic g."""
    if dirac_power(g, s):
        raise NotSMonogenicError(f"g is not {s}-monogenic")
    if g.degree() > K - (s - 1):
        raise ValueError(f"deg g = {g.degree()} exceeds K - (s-1) = {K - s + 1}")
    lhs = segal_bargmann(GaussianSection(g, QUARTER))
    ker = bs_kernel(s, K, g.m, table)
    rhs = gaussian_integral(ker.mul(embed(g, ("z", "x"), 1)), group=1)
    return lhs, rhs


def two_sided_monogenic(Z: BiPoly) -> bool:
    """d_x Z = 0 and Z d_u = 0."""
    return not dirac_left(Z, 0) and not dirac_right(Z, 1)
