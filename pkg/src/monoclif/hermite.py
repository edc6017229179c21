"""Scalar, multi-index and Clifford-Hermite polynomials and the L^2 basis sections."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .calculus import QUARTER, GaussianSection, euler_degree
from .fischer import beta, is_monogenic
from .polynomial import CliffPoly, vector_power_mul


class NotMonogenicError(ValueError):
    pass


def scalar_hermite(k: int) -> list[Fraction]:
    """Coefficients (ascending powers) of the probabilists' Hermite polynomial H_k.

    H_k(x) e^{-x^2/2} = (-1)^k d^k/dx^k e^{-x^2/2}; uses H_{k+1} = x H_k - H_k'.
    """
    if k < 0:
        raise ValueError("Hermite order must be nonnegative")
    h = [Fraction(1)]
    for _ in range(k):
        nxt = [Fraction(0)] + h
        for j in range(1, len(h)):
            nxt[j - 1] -= j * h[j]
        h = nxt
    return h


def multi_hermite(ks: Sequence[int], role: str = "x") -> CliffPoly:
    """H_{k_1..k_m}(x) = H_{k_1}(x_1) ... H_{k_m}(x_m)."""
    m = len(ks)
    terms: dict[tuple[int, ...], Fraction] = {(0,) * m: Fraction(1)}
    for j, k in enumerate(ks):
        h = scalar_hermite(k)
        nxt: dict = {}
        for exp, c in terms.items():
            for p, a in enumerate(h):
                if a:
                    e = list(exp)
                    e[j] = p
                    e = tuple(e)
                    nxt[e] = nxt.get(e, 0) + c * a
        terms = nxt
    return CliffPoly(m, role, {e: c for e, c in terms.items() if c})


@dataclass(frozen=True)
class HermiteCoeffs:
    """H_{s,k}(x) = sum_j coeffs[j] x^j in powers of the vector variable."""

    s: int
    k: int
    m: int
    coeffs: tuple

    def apply(self, P: CliffPoly) -> CliffPoly:
        """Expand H_{s,k}(x) P(x) as a CliffPoly."""
        out = P.zero_like()
        for j, a in enumerate(self.coeffs):
            if a:
                out = out + vector_power_mul(P, j, "left").scale(a)
        return out


def clifford_hermite(s: int, k: int, m: int) -> HermiteCoeffs:
    """Coefficients of H_{s,k} from (-1)^s d_x^s (P_k e^{-|x|^2/2}).

    d_x(a x^j P_k e^{-|x|^2/2}) = (a beta(j,k) x^{j-1} - a x^{j+1}) P_k e^{-|x|^2/2},
    so the recursion only needs the beta constants and never a concrete P_k.
    """
    if s < 0 or k < 0:
        raise ValueError("s and k must be nonnegative")
    a = [Fraction(1)]
    for _ in range(s):
        nxt = [Fraction(0)] * (len(a) + 1)
        for j, c in enumerate(a):
            if not c:
                continue
            if j >= 1:
                nxt[j - 1] += c * beta(j, k, m)
            nxt[j + 1] -= c
        a = nxt
    if s % 2:
        a = [-c for c in a]
    return HermiteCoeffs(s, k, m, tuple(a))


def basis_section(s: int, k: int, P: CliffPoly) -> GaussianSection:
    """psi_{s,k} P_k = H_{s,k}(x) P_k(x) e^{-|x|^2/4}."""
    deg = euler_degree(P)
    if not P or deg != k or not is_monogenic(P):
        raise NotMonogenicError(f"P must be a nonzero monogenic homogeneous polynomial of degree {k}")
    return GaussianSection(clifford_hermite(s, k, P.m).apply(P), QUARTER)


def scalar_basis_section(ks: Sequence[int]) -> GaussianSection:
    """psi_{k_1..k_m} = H_{k_1..k_m}(x) e^{-|x|^2/4}."""
    return GaussianSection(multi_hermite(ks), QUARTER)
