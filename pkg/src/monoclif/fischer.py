"""Fischer decomposition, monogenic projections and the Fischer inner product.

Every homogeneous R of degree k splits uniquely as R = sum_s x^s M_{k-s} with
monogenic M's. The split is computed by the beta-triangular recursion: the
Dirac derivative of x^s M_{k-s} is beta(s, k-s) x^{s-1} M_{k-s}, so the parts
of R at positions s >= 1 are read off from the parts of d_x R.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .calculus import dirac_left, euler_degree, laplacian
from .clifford import MultiVector, hermitian_conjugate
from .polynomial import CliffPoly, _add_into, _SparsePoly, partial, vector_power_mul


class InhomogeneousError(ValueError):
    """Input polynomial is not homogeneous in the decomposition variables."""


class InvariantViolation(AssertionError):
    """An internal algebraic invariant failed; indicates a bug, not bad input."""


class NotHarmonicError(ValueError):
    pass


def beta(s: int, k: int, m: int) -> Fraction:
    """Constant with d_x(x^s P_k) = beta * x^{s-1} P_k for monogenic P_k of degree k."""
    if s < 1:
        raise ValueError("beta is defined for s >= 1")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if s % 2 == 0:
        return Fraction(-s)
    return Fraction(-(s - 1 + 2 * k + m))


@dataclass(frozen=True)
class FischerParts:
    """parts[s] is M_{k-s}; the decomposed input equals sum_s x^s parts[s]."""

    k: int
    parts: list = field(default_factory=list)
    group: int = 0

    def term(self, s: int) -> _SparsePoly:
        return vector_power_mul(self.parts[s], s, "left", self.group)

    def reassemble(self) -> _SparsePoly:
        out = self.parts[0].zero_like()
        for s in range(len(self.parts)):
            out = out + self.term(s)
        return out


def fischer_decompose(R: _SparsePoly, group: int = 0, degree: int | None = None) -> FischerParts:
    k = euler_degree(R, group)
    if k is None:
        raise InhomogeneousError("Fischer decomposition needs a homogeneous polynomial")
    if degree is not None:
        if R and k != degree:
            raise InhomogeneousError(f"polynomial has degree {k}, expected {degree}")
        k = degree
    return _decompose(R, k, group)


def _decompose(R: _SparsePoly, k: int, group: int) -> FischerParts:
    if k == 0:
        return FischerParts(0, [R], group)
    m = R.m
    sub = _decompose(dirac_left(R, group), k - 1, group)
    parts = [None] * (k + 1)
    rest = R
    for s in range(1, k + 1):
        Ms = sub.parts[s - 1] / beta(s, k - s, m)
        parts[s] = Ms
        rest = rest - vector_power_mul(Ms, s, "left", group)
    if dirac_left(rest, group):
        raise InvariantViolation(f"leading Fischer part of degree {k} is not monogenic")
    parts[0] = rest
    return FischerParts(k, parts, group)


def fischer_summands(f: _SparsePoly, group: int = 0) -> dict[int, _SparsePoly]:
    """Map j -> x^j f_j collected over all homogeneous components of f."""
    out: dict[int, _SparsePoly] = {}
    for k, comp in f.homogeneous_components(group).items():
        fp = _decompose(comp, k, group)
        for j in range(k + 1):
            if fp.parts[j]:
                t = fp.term(j)
                out[j] = out[j] + t if j in out else t
    return out


def monogenic_projection(f: _SparsePoly, group: int = 0) -> _SparsePoly:
    out = f.zero_like()
    for k, comp in f.homogeneous_components(group).items():
        out = out + _decompose(comp, k, group).parts[0]
    return out


def truncated_projection(f: _SparsePoly, s: int, group: int = 0) -> _SparsePoly:
    """Keep the Fischer summands x^j f_j with j <= s-1."""
    if s < 1:
        raise ValueError("truncated projection needs s >= 1")
    out = f.zero_like()
    for j, t in fischer_summands(f, group).items():
        if j < s:
            out = out + t
    return out


def is_monogenic(p: _SparsePoly, group: int = 0) -> bool:
    return not dirac_left(p, group)


def fischer_inner_product(R: _SparsePoly, S: CliffPoly, group: int = 0):
    """[R, S] = R(d)^dagger S |_{x=0}.

    Each monomial x^a of R becomes the derivative d^a applied to S; the
    Hermitian-conjugated coefficient multiplies the result from the left.
    When R carries a second variable group it stays formal and the result is
    a CliffPoly in that role; otherwise a MultiVector is returned.
    """
    if R.m != S.m:
        raise ValueError(f"dimension mismatch: m={R.m} vs m={S.m}")
    sl = R.group_slice(group)
    m = R.m
    cache: dict = {}

    def derivative_at_zero(alpha) -> MultiVector:
        if alpha not in cache:
            d = S
            for j, a in enumerate(alpha):
                if a:
                    d = partial(d, j, a)
            cache[alpha] = d.constant_term()
        return cache[alpha]

    out: dict = {}
    for (exp, mask), c in R.raw_items():
        val = derivative_at_zero(exp[sl])
        if not val:
            continue
        coeff = hermitian_conjugate(MultiVector._raw(m, {mask: c}))
        prod = coeff * val
        rest = exp[: sl.start] + exp[sl.stop:]
        for b, v in prod.items():
            _add_into(out, (rest, b), v)
    if len(R.roles) == 1:
        return MultiVector._raw(m, {b: v for (_, b), v in out.items()})
    other = R.roles[1 - group]
    return CliffPoly._raw(m, (other,), out)


def fischer_gaussian_identity_check(R: CliffPoly, S: CliffPoly) -> tuple[MultiVector, MultiVector]:
    """Both sides of [R,S] = (2 pi)^{-m/2} int R^dagger S e^{-|x|^2/2} for harmonic R, S."""
    from .bargmann import gaussian_pairing

    if laplacian(R) or laplacian(S):
        raise NotHarmonicError("the Fischer-Gaussian identity requires harmonic polynomials")
    return fischer_inner_product(R, S), gaussian_pairing(R, S)

