"""Exact Clifford analysis: Fischer decomposition, Clifford-Hermite bases and
Segal-Bargmann transforms of monogenic functions."""

from .bargmann import (
    bargmann_inner_product,
    gaussian_moment,
    isometry_check,
    l2_inner_product,
    monogenic_part_of_transform,
    segal_bargmann,
    segal_bargmann_moments,
    hermite_shift_check,
    weierstrass,
)
from .calculus import GaussianSection, dirac_left, dirac_right, euler_degree, laplacian, weighted_dirac
from .clifford import (
    CRational,
    MultiVector,
    conjugate,
    dot_and_wedge,
    geometric_product,
    hermitian_conjugate,
)
from .fischer import (
    FischerParts,
    beta,
    fischer_decompose,
    fischer_inner_product,
    monogenic_projection,
    truncated_projection,
)
from .hermite import basis_section, clifford_hermite, multi_hermite, scalar_hermite
from .kernels import (
    bs_kernel,
    fourier_borel_truncation,
    gegenbauer_poly,
    plane_wave,
    reproducing_check,
    weierstrass_kernel_check,
    zonal_fischer,
    zonal_gegenbauer,
    zonal_recursion,
)
from .polynomial import BiPoly, CliffPoly, constant, evaluate, variable, vector_mul, vector_variable

__all__ = [
    "BiPoly",
    "CRational",
    "CliffPoly",
    "FischerParts",
    "GaussianSection",
    "MultiVector",
    "bargmann_inner_product",
    "basis_section",
    "beta",
    "bs_kernel",
    "clifford_hermite",
    "conjugate",
    "constant",
    "dirac_left",
    "dirac_right",
    "dot_and_wedge",
    "euler_degree",
    "evaluate",
    "fischer_decompose",
    "fischer_inner_product",
    "fourier_borel_truncation",
    "gaussian_moment",
    "gegenbauer_poly",
    "geometric_product",
    "hermite_shift_check",
    "hermitian_conjugate",
    "isometry_check",
    "l2_inner_product",
    "laplacian",
    "monogenic_part_of_transform",
    "monogenic_projection",
    "multi_hermite",
    "plane_wave",
    "reproducing_check",
    "scalar_hermite",
    "segal_bargmann",
    "segal_bargmann_moments",
    "truncated_projection",
    "variable",
    "vector_mul",
    "vector_variable",
    "weierstrass",
    "weierstrass_kernel_check",
    "weighted_dirac",
    "zonal_fischer",
    "zonal_gegenbauer",
    "zonal_recursion",
]

__version__ = "0.1.0"
