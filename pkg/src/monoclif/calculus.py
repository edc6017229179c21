"""Dirac, Laplace and Euler operators; Gaussian-weighted polynomial sections."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .clifford import blade_product
from .polynomial import CliffPoly, _add_into, _SparsePoly, partial, vector_mul


def _dirac(p: _SparsePoly, group: int, side: str) -> _SparsePoly:
    off = p.group_slice(group).start
    out: dict = {}
    for (exp, mask), c in p.raw_items():
        for j in range(p.m):
            e = exp[off + j]
            if not e:
                continue
            gen = 1 << j
            sign, nm = blade_product(gen, mask) if side == "left" else blade_product(mask, gen)
            ne = exp[: off + j] + (e - 1,) + exp[off + j + 1:]
            v = c * e
            _add_into(out, (ne, nm), v if sign > 0 else -v)
    return p._like(out)


def dirac_left(p: _SparsePoly, group: int = 0) -> _SparsePoly:
    """sum_j e_j d/dx_j p, generators acting from the left."""
    return _dirac(p, group, "left")


def dirac_right(p: _SparsePoly, group: int | None = None) -> _SparsePoly:
    """sum_j (d/du_j p) e_j. Defaults to the last variable group."""
    if group is None:
        group = len(p.roles) - 1
    return _dirac(p, group, "right")


def dirac_power(p: _SparsePoly, s: int, group: int = 0) -> _SparsePoly:
    for _ in range(s):
        p = dirac_left(p, group)
    return p


def laplacian(p: _SparsePoly, group: int = 0) -> _SparsePoly:
    off = p.group_slice(group).start
    out = p.zero_like()
    for j in range(p.m):
        out = out + partial(p, off + j, 2)
    return out


def euler_degree(p: _SparsePoly, group: int = 0) -> int | None:
    """k when sum_j x_j d/dx_j p = k p, else None (inhomogeneous).

    The zero polynomial reports degree 0.
    """
    off = p.group_slice(group).start
    euler: dict = {}
    for (exp, mask), c in p.raw_items():
        k = sum(exp[off: off + p.m])
        if k:
            _add_into(euler, (exp, mask), c * k)
    if not p:
        return 0
    (exp0, _), _ = next(iter(p.raw_items()))
    k = sum(exp0[off: off + p.m])
    if p._like(euler) == p.scale(k):
        return k
    return None


@dataclass(frozen=True)
class GaussianSection:
    """poly(x) * exp(-c |x|^2) with rational c > 0, never expanded."""

    poly: CliffPoly
    c: Fraction

    def __post_init__(self):
        c = Fraction(self.c)
        if c <= 0:
            raise ValueError(f"Gaussian weight must be positive, got {c}")
        if self.poly.role != "x":
            raise ValueError("Gaussian sections live in the x variables")
        object.__setattr__(self, "c", c)

    @property
    def m(self) -> int:
        return self.poly.m


QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


def weighted_dirac(g: GaussianSection) -> GaussianSection:
    """d_x(P e^{-c|x|^2}) = (d_x P - 2c x P) e^{-c|x|^2}."""
    p = dirac_left(g.poly) - vector_mul(g.poly, "left").scale(2 * g.c)
    return GaussianSection(p, g.c)


def reweight(g: GaussianSection, c) -> GaussianSection:
    """Same polynomial part under a different Gaussian weight (explicit conversion)."""
    return GaussianSection(g.poly, Fraction(c))
