"""Sylvester arrays and the Sylvester dual ``S_0^(d)[F]``."""

from __future__ import annotations

from .linalg import CoefficientMatrix, DualBasis, numerical_kernel, reduce_lead_terms
from .monomials import (
    LocalOrder,
    apply_map,
    monomial_basis,
    monomials_of_degree,
    restriction_map,
)


def sylvester_array(F, d, order=None):
    """Coefficient matrix of every ``x^a f`` all of whose terms have degree ``<= d``.

    The rows are the Macaulay rows whose top-degree term also fits; multipliers
    are enumerated by increasing degree and stop once ``|a| + deg f > d``.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    order = order or LocalOrder(F[0].nvars)
    n = order.nvars
    columns = monomial_basis(order, d)
    rows, labels = [], []
    for k, f in enumerate(F):
        if not f:
            continue
        top = f.degree()
        for s in range(d - top + 1):
            for a in sorted(monomials_of_degree(n, s), key=order.key, reverse=True):
                rows.append(f.mul_monomial(a))
                labels.append((a, k))
    return CoefficientMatrix.from_polynomials(rows, columns, labels)


def sylvester_dual(F, d, tol, order=None):
    """Reduced kernel basis of :func:`sylvester_array`.

    Unlike the truncated dual this depends on the generators themselves and
    is not nested across degrees.
    """
    order = order or LocalOrder(F[0].nvars)
    m = sylvester_array(F, d, order)
    kernel = numerical_kernel(m, tol)
    return reduce_lead_terms(kernel, m.columns, tol, degree=d)


def max_ecart(F, order=None):
    order = order or LocalOrder(F[0].nvars)
    return max((f.ecart(order) for f in F if f), default=0)


def embedded_truncated_dual(sdual, e):
    """Elements of a reduced Sylvester dual at degree ``d`` with lead degree ``<= d - e``.

    These span the truncated dual of the ideal at degree ``d - e``.
    """
    if not sdual.reduced:
        raise ValueError("the Sylvester dual must be reduced")
    cut = sdual.degree - e
    keep = [sum(m) <= cut for m in sdual.leads]
    out = sdual.select(keep)
    if cut < 0:
        return DualBasis(out.vectors[:, :0], sdual.columns, cut, sdual.tol, True, [])
    columns = monomial_basis(sdual.columns.order, cut)
    vectors = apply_map(out.vectors, restriction_map(columns.order, sdual.degree, cut),
                        len(columns))
    positions = [columns.index[sdual.columns[k]] for k in out.lead_positions]
    return DualBasis(vectors, columns, cut, sdual.tol, True, positions)
