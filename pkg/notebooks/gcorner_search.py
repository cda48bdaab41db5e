"""
Finding g-corners degree by degree
==================================

Run the g-corner search on ``<x^2 - x*y^3, x^4>`` and turn the corners into
Hilbert data and a standard basis.
"""

from dualhilbert import (
    hilbert_data,
    minimal_gcorners,
    parse_polynomial,
    search_gcorners,
    standard_basis,
)
from dualhilbert.polynomial import format_polynomial

XY = ["x", "y"]
F = [parse_polynomial(s, XY) for s in ("x^2 - x*y^3", "x^4")]
tol = 1e-8

###############################################################################
# Each record is a monomial missing from the Sylvester dual at the degree it
# was first seen.  Every new record doubles the search horizon.

search = search_gcorners(F, tol)
for r in search.records:
    print(f"{format_polynomial(parse_polynomial('1', XY).mul_monomial(r.corner), XY):>8}"
          f"  found at degree {r.found_at}")
print("last degree visited:", search.degrees[-1])

###############################################################################
# Minimal corners and the staircase they cut out

corners = minimal_gcorners(search.records)
h = hilbert_data(corners, 2)
print("corners:", corners)
print("hilbert values:", h.values)
print("hilbert polynomial:", h.polynomial_str, " dimension:", h.dimension)

###############################################################################
# A staircase picture: ``#`` marks monomials x^a y^b outside the initial ideal

for b in range(11, -1, -1):
    row = ""
    for a in range(5):
        inside = any(a >= c[0] and b >= c[1] for c in corners)
        row += " ." if inside else " #"
    print(f"y^{b:<2}{row}")

###############################################################################
# Standard basis elements recovered from the duals where their corners appeared

for g in standard_basis(F, tol, reduced=True):
    print("  ", format_polynomial(g.cleanup(1e-10), XY))
