"""Sparse polynomials in commuting real variables with C_m coefficients.

A ``CliffPoly`` uses one m-tuple of variables (role x, u or z); a ``BiPoly``
uses two independent m-tuples, e.g. (x, u) for zonal kernels or (z, x) for
the Segal-Bargmann kernels. Variables commute with everything, so all
noncommutativity lives in the coefficients.

Internally terms are a flat map ``(exponents, blade_mask) -> CRational`` where
``exponents`` concatenates the exponent tuples of every variable group.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Mapping, Sequence

from .clifford import (
    ONE,
    CRational,
    DimensionError,
    MultiVector,
    Scalar,
    blade_product,
    check_dim,
    conjugation_sign,
)

ROLES = ("x", "u", "z")
DEGREE_CAP = 24


class DegreeCapError(ValueError):
    """A product would exceed the configured total-degree cap."""


class RoleError(ValueError):
    """Polynomials with incompatible variable roles were combined."""


Monomial = tuple[int, ...]


def _add_into(out: dict, key, c: CRational):
    v = out.get(key)
    if v is None:
        out[key] = c
    else:
        v = v + c
        if v:
            out[key] = v
        else:
            del out[key]


class _SparsePoly:
    __slots__ = ("m", "roles", "_terms")

    def __init__(self, m: int, roles: tuple[str, ...], terms: dict | None = None):
        check_dim(m)
        for r in roles:
            if r not in ROLES:
                raise RoleError(f"unknown variable role {r!r}")
        if len(set(roles)) != len(roles):
            raise RoleError(f"variable roles must be distinct, got {roles}")
        self.m = m
        self.roles = tuple(roles)
        self._terms = {}
        if terms:
            n = m * len(roles)
            for (exp, mask), c in terms.items():
                exp = tuple(exp)
                if len(exp) != n or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent tuple {exp} for {n} variables")
                if not 0 <= mask < (1 << m):
                    raise DimensionError(f"blade mask {mask} invalid for m={m}")
                c = CRational.coerce(c)
                if c:
                    _add_into(self._terms, (exp, mask), c)

    @classmethod
    def _raw(cls, m: int, roles: tuple[str, ...], terms: dict):
        obj = object.__new__(cls)
        obj.m = m
        obj.roles = roles
        obj._terms = terms
        return obj

    def _like(self, terms: dict):
        return type(self)._raw(self.m, self.roles, terms)

    @property
    def nvars(self) -> int:
        return self.m * len(self.roles)

    def group_slice(self, group: int) -> slice:
        if not 0 <= group < len(self.roles):
            raise RoleError(f"group {group} out of range for roles {self.roles}")
        return slice(group * self.m, (group + 1) * self.m)

    def group_of(self, role: str) -> int:
        try:
            return self.roles.index(role)
        except ValueError:
            raise RoleError(f"role {role!r} not among {self.roles}") from None

    def raw_items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _compatible(self, other):
        if type(self) is not type(other):
            raise RoleError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if self.m != other.m:
            raise DimensionError(f"dimension mismatch: m={self.m} vs m={other.m}")
        if self.roles != other.roles:
            raise RoleError(f"role mismatch: {self.roles} vs {other.roles}")

    # ---- ring structure -------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, _SparsePoly):
            return NotImplemented
        self._compatible(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            _add_into(out, k, c)
        return self._like(out)

    def __neg__(self):
        return self._like({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, _SparsePoly):
            return NotImplemented
        self._compatible(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            _add_into(out, k, -c)
        return self._like(out)

    def scale(self, k: Scalar):
        k = CRational.coerce(k)
        if not k:
            return self._like({})
        return self._like({key: c * k for key, c in self._terms.items()})

    def __truediv__(self, k):
        if isinstance(k, (int, Fraction, CRational)):
            return self._like({key: c / k for key, c in self._terms.items()})
        return NotImplemented

    def mul_left_by(self, a: MultiVector):
        """a * p with the multivector acting on coefficients from the left."""
        if a.m != self.m:
            raise DimensionError(f"dimension mismatch: m={a.m} vs m={self.m}")
        out: dict = {}
        for bb, ca in a.items():
            for (exp, mask), c in self._terms.items():
                sign, nm = blade_product(bb, mask)
                v = ca * c
                _add_into(out, (exp, nm), v if sign > 0 else -v)
        return self._like(out)

    def mul_right_by(self, a: MultiVector):
        if a.m != self.m:
            raise DimensionError(f"dimension mismatch: m={a.m} vs m={self.m}")
        out: dict = {}
        for bb, ca in a.items():
            for (exp, mask), c in self._terms.items():
                sign, nm = blade_product(mask, bb)
                v = c * ca
                _add_into(out, (exp, nm), v if sign > 0 else -v)
        return self._like(out)

    def mul(self, other):
        self._compatible(other)
        if self._terms and other._terms and self.total_degree() + other.total_degree() > DEGREE_CAP:
            raise DegreeCapError(f"product degree exceeds cap {DEGREE_CAP}")
        out: dict = {}
        for (ea, ma), ca in self._terms.items():
            for (eb, mb), cb in other._terms.items():
                sign, nm = blade_product(ma, mb)
                v = ca * cb
                _add_into(out, (tuple(x + y for x, y in zip(ea, eb)), nm), v if sign > 0 else -v)
        return self._like(out)

    def __mul__(self, other):
        if isinstance(other, _SparsePoly):
            return self.mul(other)
        if isinstance(other, MultiVector):
            return self.mul_right_by(other)
        if isinstance(other, (int, Fraction, CRational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, MultiVector):
            return self.mul_left_by(other)
        if isinstance(other, (int, Fraction, CRational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = self.one_like()
        for _ in range(n):
            out = out.mul(self)
        return out

    def one_like(self):
        return self._like({((0,) * self.nvars, 0): ONE})

    def zero_like(self):
        return self._like({})

    def __eq__(self, other):
        if isinstance(other, _SparsePoly):
            return (
                type(self) is type(other)
                and self.m == other.m
                and self.roles == other.roles
                and self._terms == other._terms
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.roles, frozenset(self._terms.items())))

    # ---- gradings -------------------------------------------------------
    def degree(self, group: int | None = None) -> int:
        """Maximum total degree (in one group, or overall). Zero polynomial -> -1."""
        if not self._terms:
            return -1
        sl = slice(None) if group is None else self.group_slice(group)
        return max(sum(exp[sl]) for exp, _ in self._terms)

    def total_degree(self) -> int:
        return self.degree(None)

    def homogeneous_component(self, k: int, group: int | None = None):
        sl = slice(None) if group is None else self.group_slice(group)
        return self._like({key: c for key, c in self._terms.items() if sum(key[0][sl]) == k})

    def homogeneous_components(self, group: int | None = None) -> dict[int, "_SparsePoly"]:
        sl = slice(None) if group is None else self.group_slice(group)
        out: dict[int, dict] = {}
        for key, c in self._terms.items():
            out.setdefault(sum(key[0][sl]), {})[key] = c
        return {k: self._like(t) for k, t in sorted(out.items())}

    def is_real(self) -> bool:
        return all(not c.im for c in self._terms.values())

    def sorted_terms(self):
        """Terms in canonical graded-lexicographic order (degree, then exponent, then blade)."""
        return sorted(
            self._terms.items(),
            key=lambda kv: (sum(kv[0][0]), tuple(-e for e in kv[0][0]), kv[0][1]),
        )

    def __repr__(self):
        return f"{type(self).__name__}(m={self.m}, roles={self.roles}, {self})"

    def __str__(self):
        if not self._terms:
            return "0"
        names = [f"{r}{j + 1}" for r in self.roles for j in range(self.m)]
        grouped: dict[Monomial, dict[int, CRational]] = {}
        for (exp, mask), c in self.sorted_terms():
            grouped.setdefault(exp, {})[mask] = c
        parts = []
        for exp, blades in grouped.items():
            mono = "*".join(
                (n if e == 1 else f"{n}^{e}") for n, e in zip(names, exp) if e
            )
            coeff = str(MultiVector._raw(self.m, blades))
            if len(blades) > 1:
                coeff = f"({coeff})"
            parts.append(f"{coeff}*{mono}" if mono else coeff)
        return " + ".join(parts)


class CliffPoly(_SparsePoly):
    """Polynomial in one m-tuple of variables with multivector coefficients."""

    __slots__ = ()

    def __init__(self, m: int, role: str = "x", terms: Mapping | None = None):
        flat = {}
        if terms:
            for exp, coeff in terms.items():
                exp = tuple(exp)
                if isinstance(coeff, MultiVector):
                    if coeff.m != m:
                        raise DimensionError(f"coefficient has m={coeff.m}, expected {m}")
                    for mask, c in coeff.items():
                        _add_into(flat, (exp, mask), c)
                else:
                    c = CRational.coerce(coeff)
                    if c:
                        _add_into(flat, (exp, 0), c)
        super().__init__(m, (role,), flat)

    @property
    def role(self) -> str:
        return self.roles[0]

    @property
    def terms(self) -> dict[Monomial, MultiVector]:
        grouped: dict[Monomial, dict[int, CRational]] = {}
        for (exp, mask), c in self._terms.items():
            grouped.setdefault(exp, {})[mask] = c
        return {exp: MultiVector._raw(self.m, b) for exp, b in grouped.items()}

    def coefficient(self, exp: Sequence[int]) -> MultiVector:
        exp = tuple(exp)
        return MultiVector._raw(
            self.m, {mask: c for (e, mask), c in self._terms.items() if e == exp}
        )

    def constant_term(self) -> MultiVector:
        return self.coefficient((0,) * self.m)

    def with_role(self, role: str) -> "CliffPoly":
        if role not in ROLES:
            raise RoleError(f"unknown variable role {role!r}")
        return CliffPoly._raw(self.m, (role,), dict(self._terms))


class BiPoly(_SparsePoly):
    """Polynomial in two independent m-tuples of variables (default roles x, u)."""

    __slots__ = ()

    def __init__(self, m: int, roles: tuple[str, str] = ("x", "u"), terms: Mapping | None = None):
        if len(roles) != 2:
            raise RoleError("BiPoly needs exactly two variable roles")
        flat = {}
        if terms:
            for (ex, eu), coeff in terms.items():
                exp = tuple(ex) + tuple(eu)
                if isinstance(coeff, MultiVector):
                    for mask, c in coeff.items():
                        _add_into(flat, (exp, mask), c)
                else:
                    c = CRational.coerce(coeff)
                    if c:
                        _add_into(flat, (exp, 0), c)
        super().__init__(m, tuple(roles), flat)

    @property
    def terms(self) -> dict[tuple[Monomial, Monomial], MultiVector]:
        m = self.m
        grouped: dict = {}
        for (exp, mask), c in self._terms.items():
            grouped.setdefault((exp[:m], exp[m:]), {})[mask] = c
        return {k: MultiVector._raw(m, b) for k, b in grouped.items()}

    def with_roles(self, roles: tuple[str, str]) -> "BiPoly":
        if len(roles) != 2 or len(set(roles)) != 2 or any(r not in ROLES for r in roles):
            raise RoleError(f"bad roles {roles}")
        return BiPoly._raw(self.m, tuple(roles), dict(self._terms))

    def swap_groups(self) -> "BiPoly":
        """Exchange the two variable tuples: F(a, b) -> F(b, a) with roles kept in place."""
        m = self.m
        return BiPoly._raw(
            m, self.roles, {(exp[m:] + exp[:m], mask): c for (exp, mask), c in self._terms.items()}
        )


# ---- constructors -------------------------------------------------------

def constant(m: int, value: Scalar | MultiVector = 1, role: str = "x") -> CliffPoly:
    coeff = value if isinstance(value, MultiVector) else MultiVector.scalar(m, value)
    return CliffPoly(m, role, {(0,) * m: coeff})


def variable(m: int, j: int, role: str = "x") -> CliffPoly:
    """The scalar coordinate variable x_j (1-based)."""
    exp = [0] * m
    exp[j - 1] = 1
    return CliffPoly(m, role, {tuple(exp): 1})


def vector_variable(m: int, role: str = "x") -> CliffPoly:
    """The grade-1 polynomial x = x_1 e_1 + ... + x_m e_m."""
    terms = {}
    for j in range(m):
        exp = [0] * m
        exp[j] = 1
        terms[(tuple(exp), 1 << j)] = ONE
    return CliffPoly._raw(check_dim(m), (role,), terms)


def norm_squared(m: int, role: str = "x") -> CliffPoly:
    """|x|^2 = x_1^2 + ... + x_m^2."""
    terms = {}
    for j in range(m):
        exp = [0] * m
        exp[j] = 2
        terms[(tuple(exp), 0)] = ONE
    return CliffPoly._raw(check_dim(m), (role,), terms)


def embed(p: CliffPoly, roles: tuple[str, str], group: int) -> BiPoly:
    """View a one-group polynomial as a BiPoly constant in the other group."""
    if p.role != roles[group]:
        raise RoleError(f"role {p.role!r} does not match target group role {roles[group]!r}")
    z = (0,) * p.m
    if group == 0:
        terms = {(exp + z, mask): c for (exp, mask), c in p.raw_items()}
    else:
        terms = {(z + exp, mask): c for (exp, mask), c in p.raw_items()}
    return BiPoly._raw(p.m, tuple(roles), terms)


def bilinear_pairing(m: int, roles: tuple[str, str] = ("x", "u")) -> BiPoly:
    """<x, u> = sum_j x_j u_j as a BiPoly."""
    terms = {}
    for j in range(m):
        exp = [0] * (2 * m)
        exp[j] = 1
        exp[m + j] = 1
        terms[(tuple(exp), 0)] = ONE
    return BiPoly._raw(check_dim(m), tuple(roles), terms)


def bivector_wedge(m: int, roles: tuple[str, str] = ("x", "u")) -> BiPoly:
    """x ^ u = sum_{j<k} (x_j u_k - x_k u_j) e_j e_k."""
    terms: dict = {}
    for j in range(m):
        for k in range(j + 1, m):
            mask = (1 << j) | (1 << k)
            for a, b, sign in ((j, k, ONE), (k, j, -ONE)):
                exp = [0] * (2 * m)
                exp[a] = 1
                exp[m + b] = 1
                _add_into(terms, (tuple(exp), mask), sign)
    return BiPoly._raw(check_dim(m), tuple(roles), terms)


# ---- operations -----------------------------------------------------------

def vector_mul(p: _SparsePoly, side: str = "left", group: int = 0) -> _SparsePoly:
    """x*p (side='left') or p*x (side='right') for the vector variable of ``group``."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if p and p.total_degree() + 1 > DEGREE_CAP:
        raise DegreeCapError(f"degree exceeds cap {DEGREE_CAP}")
    off = p.group_slice(group).start
    out: dict = {}
    for (exp, mask), c in p.raw_items():
        for j in range(p.m):
            gen = 1 << j
            if side == "left":
                sign, nm = blade_product(gen, mask)
            else:
                sign, nm = blade_product(mask, gen)
            e = list(exp)
            e[off + j] += 1
            _add_into(out, (tuple(e), nm), c if sign > 0 else -c)
    return p._like(out)


def vector_power_mul(p: _SparsePoly, n: int, side: str = "left", group: int = 0) -> _SparsePoly:
    for _ in range(n):
        p = vector_mul(p, side, group)
    return p


def partial(p: _SparsePoly, var: int, times: int = 1) -> _SparsePoly:
    """Partial derivative along the flat variable index ``var`` (0-based)."""
    if times == 0:
        return p
    out: dict = {}
    for (exp, mask), c in p.raw_items():
        e = exp[var]
        if e < times:
            continue
        f = factorial(e) // factorial(e - times)
        ne = exp[:var] + (e - times,) + exp[var + 1:]
        _add_into(out, (ne, mask), c * f)
    return p._like(out)


def hermitian_conjugate_poly(p: _SparsePoly) -> _SparsePoly:
    """Coefficientwise Hermitian conjugate; the (real) variables are untouched."""
    return p._like(
        {
            (exp, mask): (c.conjugate() if conjugation_sign(mask) > 0 else -c.conjugate())
            for (exp, mask), c in p.raw_items()
        }
    )


def evaluate(p: CliffPoly, point: Sequence[Scalar]) -> MultiVector:
    """Substitute a point of C^m for the variables."""
    if len(point) != p.m:
        raise DimensionError(f"expected {p.m} coordinates, got {len(point)}")
    pt = [CRational.coerce(v) for v in point]
    out: dict = {}
    for (exp, mask), c in p.raw_items():
        v = c
        for x, e in zip(pt, exp):
            for _ in range(e):
                v = v * x
        if v:
            _add_into(out, mask, v)
    return MultiVector._raw(p.m, out)


def divide_by_norm_squared(p: _SparsePoly, group: int = 0) -> _SparsePoly:
    """Exact quotient p / |v|^2 for the variables of ``group``.

    Reduction uses u_1^2 as leading monomial; a nonzero remainder raises.
    """
    off = p.group_slice(group).start
    m = p.m
    work = dict(p._terms)
    quot: dict = {}
    while True:
        key = next((k for k in work if k[0][off] >= 2), None)
        if key is None:
            break
        c = work[key]
        exp, mask = key
        q = list(exp)
        q[off] -= 2
        q = tuple(q)
        _add_into(quot, (q, mask), c)
        for j in range(m):
            e = list(q)
            e[off + j] += 2
            _add_into(work, (tuple(e), mask), -c)
    if work:
        raise ArithmeticError("polynomial is not divisible by the squared norm")
    return p._like(quot)
