"""Exact arithmetic in the real and complexified Clifford algebras R_m, C_m.

Generators satisfy e_j e_k + e_k e_j = -2 delta_jk. Blades are stored as
bitmasks (bit j-1 set means e_j is a factor); the canonical blade order is
increasing generator index.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

MIN_DIM = 1
MAX_DIM = 8


class DimensionError(ValueError):
    """Values living in Clifford algebras of different dimension were mixed."""


class GradeError(ValueError):
    """An operation required a multivector of a specific grade."""


class CRational:
    """Complex rational number ``re + i*im`` with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> "CRational":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @classmethod
    def coerce(cls, value) -> "CRational":
        if isinstance(value, CRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls._make(Fraction(value), _ZERO)
        if isinstance(value, str):
            return cls._make(Fraction(value), _ZERO)
        raise TypeError(f"cannot interpret {value!r} as an exact complex rational")

    def __add__(self, other):
        if not isinstance(other, CRational):
            try:
                other = CRational.coerce(other)
            except TypeError:
                return NotImplemented
        return CRational._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, CRational):
            try:
                other = CRational.coerce(other)
            except TypeError:
                return NotImplemented
        return CRational._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return CRational.coerce(other) - self

    def __neg__(self):
        return CRational._make(-self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, CRational):
            if isinstance(other, (int, Fraction)):
                return CRational._make(self.re * other, self.im * other)
            return NotImplemented
        if not self.im and not other.im:
            return CRational._make(self.re * other.re, _ZERO)
        return CRational._make(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CRational._make(self.re / other, self.im / other)
        other = CRational.coerce(other)
        den = other.re * other.re + other.im * other.im
        if not den:
            raise ZeroDivisionError("division by zero complex rational")
        return self * CRational._make(other.re / den, -other.im / den)

    def conjugate(self) -> "CRational":
        return CRational._make(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, CRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return f"CRational({self.re})"
        return f"CRational({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}i)"


_ZERO = Fraction(0)
ZERO = CRational._make(_ZERO, _ZERO)
ONE = CRational._make(Fraction(1), _ZERO)
I = CRational._make(_ZERO, Fraction(1))

Scalar = Union[int, Fraction, CRational]


def mask_from_indices(indices: Iterable[int], m: int) -> int:
    """Bitmask of a blade given strictly increasing 1-based generator indices."""
    mask = 0
    last = 0
    for j in indices:
        if not last < j <= m:
            raise ValueError(f"blade indices must be strictly increasing in 1..{m}, got {list(indices)}")
        mask |= 1 << (j - 1)
        last = j
    return mask


def indices_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def grade_of(mask: int) -> int:
    return bin(mask).count("1")


@lru_cache(maxsize=None)
def blade_product(a: int, b: int) -> tuple[int, int]:
    """Return (sign, mask) with e_a * e_b = sign * e_mask."""
    swaps = 0
    x = a >> 1
    while x:
        swaps += bin(x & b).count("1")
        x >>= 1
    # each shared generator contracts as e_j e_j = -1
    swaps += bin(a & b).count("1")
    return (-1 if swaps & 1 else 1), a ^ b


def conjugation_sign(mask: int) -> int:
    """Sign of the Clifford conjugate of a blade: reversal with e_j -> -e_j."""
    k = grade_of(mask)
    return -1 if (k * (k + 1) // 2) & 1 else 1


def all_blades(m: int) -> list[int]:
    return list(range(1 << m))


def check_dim(m: int) -> int:
    if not isinstance(m, int) or not MIN_DIM <= m <= MAX_DIM:
        raise DimensionError(f"dimension m must be an integer in [{MIN_DIM}, {MAX_DIM}], got {m!r}")
    return m


class MultiVector:
    """Element of C_m as a sparse map blade-mask -> CRational.

    Instances are treated as immutable; zero coefficients are never stored.
    """

    __slots__ = ("m", "_terms")

    def __init__(self, m: int, terms: Mapping[int, Scalar] | None = None):
        check_dim(m)
        self.m = m
        clean = {}
        if terms:
            limit = 1 << m
            for mask, c in terms.items():
                if not 0 <= mask < limit:
                    raise DimensionError(f"blade mask {mask} invalid for m={m}")
                c = CRational.coerce(c)
                if c:
                    clean[mask] = c
        self._terms = clean

    @classmethod
    def _raw(cls, m: int, terms: dict) -> "MultiVector":
        obj = object.__new__(cls)
        obj.m = m
        obj._terms = terms
        return obj

    @classmethod
    def scalar(cls, m: int, value: Scalar = 1) -> "MultiVector":
        return cls(m, {0: value})

    @classmethod
    def blade(cls, m: int, indices: Sequence[int], coeff: Scalar = 1) -> "MultiVector":
        return cls(m, {mask_from_indices(indices, m): coeff})

    @classmethod
    def vector(cls, m: int, coords: Sequence[Scalar]) -> "MultiVector":
        if len(coords) != m:
            raise DimensionError(f"expected {m} coordinates, got {len(coords)}")
        return cls(m, {1 << j: c for j, c in enumerate(coords)})

    @property
    def terms(self) -> dict[int, CRational]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, indices: Sequence[int] = ()) -> CRational:
        return self._terms.get(mask_from_indices(indices, self.m), ZERO)

    def scalar_part(self) -> CRational:
        return self._terms.get(0, ZERO)

    def grades(self) -> set[int]:
        return {grade_of(mask) for mask in self._terms}

    def is_vector(self) -> bool:
        return all(grade_of(mask) == 1 for mask in self._terms)

    def is_real(self) -> bool:
        return all(not c.im for c in self._terms.values())

    def grade_part(self, k: int) -> "MultiVector":
        return MultiVector._raw(self.m, {b: c for b, c in self._terms.items() if grade_of(b) == k})

    def _check(self, other: "MultiVector"):
        if self.m != other.m:
            raise DimensionError(f"dimension mismatch: m={self.m} vs m={other.m}")

    def __add__(self, other):
        if not isinstance(other, MultiVector):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for b, c in other._terms.items():
            v = out.get(b)
            v = c if v is None else v + c
            if v:
                out[b] = v
            else:
                out.pop(b, None)
        return MultiVector._raw(self.m, out)

    def __neg__(self):
        return MultiVector._raw(self.m, {b: -c for b, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiVector):
            return NotImplemented
        return self + (-other)

    def scale(self, k: Scalar) -> "MultiVector":
        k = CRational.coerce(k)
        if not k:
            return MultiVector._raw(self.m, {})
        return MultiVector._raw(self.m, {b: c * k for b, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, MultiVector):
            return geometric_product(self, other)
        if isinstance(other, (int, Fraction, CRational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CRational)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CRational)):
            return MultiVector._raw(self.m, {b: c / other for b, c in self._terms.items()})
        return NotImplemented

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, MultiVector):
            return self.m == other.m and self._terms == other._terms
        if isinstance(other, (int, Fraction, CRational)):
            c = CRational.coerce(other)
            if not c:
                return not self._terms
            return self._terms == {0: c}
        return NotImplemented

    def __hash__(self):
        return hash((self.m, frozenset(self._terms.items())))

    def __repr__(self):
        return f"MultiVector(m={self.m}, {self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for b in sorted(self._terms, key=lambda b: (grade_of(b), indices_from_mask(b))):
            name = "".join(f"e{j}" for j in indices_from_mask(b))
            parts.append(f"{self._terms[b]}{'*' + name if name else ''}")
        return " + ".join(parts)


def geometric_product(a: MultiVector, b: MultiVector) -> MultiVector:
    """Bilinear associative Clifford product."""
    a._check(b)
    out: dict[int, CRational] = {}
    for ba, ca in a._terms.items():
        for bb, cb in b._terms.items():
            sign, mask = blade_product(ba, bb)
            c = ca * cb
            if sign < 0:
                c = -c
            v = out.get(mask)
            out[mask] = c if v is None else v + c
    return MultiVector._raw(a.m, {k: v for k, v in out.items() if v})


def conjugate(a: MultiVector) -> MultiVector:
    """Clifford conjugation: e_j -> -e_j with reversal; complex scalars untouched."""
    return MultiVector._raw(
        a.m, {b: (c if conjugation_sign(b) > 0 else -c) for b, c in a._terms.items()}
    )


def hermitian_conjugate(c: MultiVector) -> MultiVector:
    """c = a + ib  ->  conj(a) - i conj(b)."""
    return MultiVector._raw(
        c.m,
        {b: (v.conjugate() if conjugation_sign(b) > 0 else -v.conjugate()) for b, v in c._terms.items()},
    )


def dot_and_wedge(x: MultiVector, y: MultiVector) -> tuple[CRational, MultiVector]:
    """Split the product of two 1-vectors as xy = -<x,y> + x^y."""
    if not (x.is_vector() and y.is_vector()):
        raise GradeError("dot_and_wedge needs pure grade-1 arguments")
    xy = geometric_product(x, y)
    yx = geometric_product(y, x)
    dot = -(xy + yx).scalar_part() / 2
    wedge = (xy - yx) / 2
    return dot, wedge


def basis_vector(m: int, j: int) -> MultiVector:
    return MultiVector._raw(check_dim(m), {1 << (j - 1): ONE})
