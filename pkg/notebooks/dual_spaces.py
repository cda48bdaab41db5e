"""
Truncated dual spaces of a local ideal
======================================

Compare the truncated dual of ``<x - y^3, x^2>`` at the origin with the
kernel of its Sylvester array, degree by degree.
"""

import numpy as np

from dualhilbert import macaulay_array, parse_polynomial, sylvester_dual, truncated_dual
from dualhilbert.polynomial import format_dual

F = [parse_polynomial(s, ["x", "y"]) for s in ("x - y^3", "x^2")]
tol = 1e-8

###############################################################################
# The Macaulay array at degree 3
# ------------------------------
# Rows are monomial multiples of the generators whose lead term has degree at
# most 3.  Columns run from the highest-degree monomials down to 1.

m = macaulay_array(F, 3)
print(m.shape)
print(np.real(m.numeric()).astype(int))

###############################################################################
# Its kernel, reduced so that every element has a distinct lead monomial

for p in truncated_dual(F, 3, tol).functionals():
    print("  ", format_dual(p, ["x", "y"]))

###############################################################################
# Growth of the two duals
# -----------------------
# The truncated dual counts the staircase below ``{x, y^6}``, so its
# dimension reaches 6 and stops.  The Sylvester dual keeps only rows whose
# every term fits in the degree, so it is larger and catches up later.

for d in range(9):
    td = truncated_dual(F, d, tol).dimension
    sd = sylvester_dual(F, d, tol).dimension
    print(f"degree {d}: truncated {td:2d}   sylvester {sd:2d}")
