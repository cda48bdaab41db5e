"""Numerical local Hilbert functions from dual spaces of polynomial ideals.

Given generators of an ideal and a (possibly approximate) point, the package
computes Macaulay and Sylvester dual spaces numerically, discovers the
g-corners of the local initial ideal, and derives the Hilbert function,
Hilbert polynomial and local dimension.  An exact rational oracle based on
Mora's normal form is included for verification.
"""

from .errors import (
    DegreeCapExceeded,
    DualHilbertError,
    InconsistentCornerError,
    NumericalError,
    ParseError,
    PointNotOnVarietyError,
    RankDecisionError,
)
from .gcorners import (
    GCornerRecord,
    GCornerSearch,
    HilbertData,
    find_gcorners,
    hilbert_data,
    hilbert_polynomial,
    hilbert_value,
    minimal_gcorners,
    search_gcorners,
)
from .linalg import CoefficientMatrix, DualBasis, numerical_kernel, reduce_lead_terms
from .macaulay import macaulay_array, truncated_dual
from .monomials import LocalOrder, MonomialBasis, monomial_basis
from .mourrain import mourrain_dual, mourrain_extend_basis
from .oracle import brute_hilbert, exact_kernel, local_buchberger, mora_normal_form, spair
from .parser import SystemSpec, parse_polynomial, parse_system
from .polynomial import (
    DualFunctional,
    Polynomial,
    compare_monomials,
    dehomogenize,
    dual_apply,
    dual_derivative,
    format_dual,
    format_polynomial,
    homogenize,
    translate_to_origin,
)
from .sbasis import membership, recover_sbasis_element, standard_basis
from .sylvester import embedded_truncated_dual, sylvester_array, sylvester_dual

__version__ = "0.1.0"
