"""Truncated dual spaces from Macaulay arrays (Dayton-Zeng)."""

from __future__ import annotations

from .linalg import CoefficientMatrix, numerical_kernel, reduce_lead_terms
from .monomials import LocalOrder, monomial_basis, monomials_of_degree


def _order_for(F, order):
    return order or LocalOrder(F[0].nvars)


def macaulay_array(F, d, order=None):
    """Coefficient matrix of every ``x^a f`` with ``|a| + deg in_>(f) <= d``.

    Rows are ordered by generator, then by the degree of the multiplier, then
    in decreasing local order of the multiplier.  Columns are the monomials
    of degree ``<= d`` in decreasing dual order.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    order = _order_for(F, order)
    n = order.nvars
    columns = monomial_basis(order, d)
    rows, labels = [], []
    for k, f in enumerate(F):
        if not f:
            continue
        low = sum(f.lead_monomial(order))
        for s in range(d - low + 1):
            for a in sorted(monomials_of_degree(n, s), key=order.key, reverse=True):
                rows.append(f.mul_monomial(a))
                labels.append((a, k))
    return CoefficientMatrix.from_polynomials(rows, columns, labels)


def truncated_dual(F, d, tol, order=None):
    """Reduced basis of the functionals of degree ``<= d`` annihilating ``<F>``."""
    order = _order_for(F, order)
    m = macaulay_array(F, d, order)
    kernel = numerical_kernel(m, tol)
    return reduce_lead_terms(kernel, m.columns, tol, degree=d)
