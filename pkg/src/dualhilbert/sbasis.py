"""Standard bases recovered from Sylvester duals, and bounded-degree membership."""

from __future__ import annotations

import numpy as np

from .errors import InconsistentCornerError
from .gcorners import minimal_gcorners, search_gcorners
from .linalg import numerical_kernel
from .monomials import LocalOrder, monomial_divides
from .polynomial import Polynomial

MEMBER = "member"
NON_MEMBER = "non-member"
OUT_OF_RANGE = "out-of-range"


def recover_sbasis_element(sdual, corner, order=None, tol=None):
    """Polynomial in the ideal with lead monomial ``corner``, from ``S_0^(d)[F]``.

    Columns are the monomials ``m`` with ``deg m <= d`` and ``m < corner``,
    together with ``corner`` itself so that a kernel element can lead with it.
    Among the kernel elements with coefficient 1 at ``corner`` the one of least
    2-norm is returned.
    """
    columns = sdual.columns
    order = order or columns.order
    tol = sdual.tol if tol is None else tol
    corner = tuple(corner)
    if sum(corner) > sdual.degree:
        raise ValueError(f"corner {corner} exceeds the dual degree {sdual.degree}")
    ck = order.key(corner)
    keep = [k for k, m in enumerate(columns.monomials) if order.key(m) <= ck]
    sub = sdual.vectors[:, keep]
    kernel = numerical_kernel(sub, tol) if sub.shape[0] else np.eye(len(keep), dtype=complex)
    pos = keep.index(columns.index[corner])
    # projection of e_corner onto the kernel, rescaled to unit lead coefficient
    weight = kernel[:, pos].conj()
    if np.linalg.norm(weight) <= tol:
        raise InconsistentCornerError(f"no kernel element with lead monomial {corner}")
    g = weight @ kernel
    g = g / g[pos]
    g[pos] = 1
    full = np.zeros(len(columns), dtype=complex)
    full[keep] = g
    return Polynomial.from_vector(full, columns, tol)


def standard_basis(F, tol, strategy="mourrain", order=None, reduced=False, **kwargs):
    """One recovered element per g-corner record.

    With ``reduced`` only elements whose lead monomial is a minimal g-corner
    are kept.
    """
    F = [f for f in F if f]
    order = order or LocalOrder(F[0].nvars)
    search = search_gcorners(F, tol, strategy, order, keep_duals=True, **kwargs)
    return standard_basis_from_search(search, tol, order, reduced)


def standard_basis_from_search(search, tol, order, reduced=False):
    """Recover elements from the duals a search kept (``keep_duals=True``)."""
    records = search.records
    if reduced:
        keep = set(minimal_gcorners(records))
        first = {}
        for r in records:
            if r.corner in keep:
                first.setdefault(r.corner, r)
        records = [r for r in records if first.get(r.corner) is r]
    return [recover_sbasis_element(search.duals[r.found_at], r.corner, order, tol)
            for r in records]


def membership(f, sdual, tol):
    """Decide ``f`` in the ideal using the Sylvester dual at degree ``d``.

    Returns ``"out-of-range"`` when ``f`` has a term above degree ``d``,
    ``"member"`` when every ``|p(f)| <= tol * ||p|| * ||f||``, and
    ``"non-member"`` otherwise.
    """
    if f.degree() > sdual.degree:
        return OUT_OF_RANGE
    if not f:
        return MEMBER
    fv = f.vector(sdual.columns)
    values = sdual.vectors @ fv
    norms = np.linalg.norm(sdual.vectors, axis=1)
    if np.all(np.abs(values) <= tol * norms * np.linalg.norm(fv)):
        return MEMBER
    return NON_MEMBER


def leads_generate(leads, corners):
    """True when every corner is divisible by some lead monomial."""
    return all(any(monomial_divides(a, c) for a in leads) for c in corners)
