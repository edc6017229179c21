from fractions import Fraction

from hypothesis import strategies as st

from monoclif.clifford import CRational, MultiVector
from monoclif.polynomial import CliffPoly

small_fraction = st.builds(Fraction, st.integers(-4, 4), st.sampled_from([1, 2, 3]))
real_scalar = st.builds(lambda q: CRational(q), small_fraction)
complex_scalar = st.builds(CRational, small_fraction, small_fraction)


def multivectors(m, max_blades=8, complex_=True):
    coeff = complex_scalar if complex_ else real_scalar
    return st.dictionaries(st.integers(0, (1 << m) - 1), coeff, max_size=max_blades).map(
        lambda d: MultiVector(m, d)
    )


def vectors(m):
    return st.lists(st.integers(-5, 5), min_size=m, max_size=m).map(lambda c: MultiVector.vector(m, c))


def polys(m, max_deg=3, max_terms=4, role="x", complex_=True):
    coeff = complex_scalar if complex_ else real_scalar
    exps = st.lists(st.integers(0, max_deg), min_size=m, max_size=m).filter(lambda e: sum(e) <= max_deg)
    term = st.tuples(exps.map(tuple), st.integers(0, (1 << m) - 1), coeff)

    def build(terms):
        out = CliffPoly(m, role)
        for exp, mask, c in terms:
            out = out + CliffPoly(m, role, {exp: MultiVector(m, {mask: c})})
        return out

    return st.lists(term, max_size=max_terms).map(build)


dims = st.sampled_from([2, 3, 4])
