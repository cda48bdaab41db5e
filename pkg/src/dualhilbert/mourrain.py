"""Mourrain's integration method for building dual bases degree by degree.

Plain mode grows the truncated dual ``D_0^(d)[I]``.  Homogeneous mode works
with the ideal generated by the homogenized generators, stored dehomogenized:
a degree-``d`` slice element is a vector over monomials of degree ``<= d``,
where the coefficient of ``∂^a`` stands for ``∂_t^(d-|a|) ∂^a``.  The slices
coincide with the Sylvester duals without building Sylvester arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DualBasis, numerical_kernel, orthonormal_rows, reduce_lead_terms
from .monomials import (
    LocalOrder,
    apply_map,
    derivative_map,
    monomial_basis,
    restriction_map,
    shift_map,
)

T = "t"


@dataclass(frozen=True)
class IntegrationFrame:
    """Snapshot used to extend a dual basis by one degree.

    ``basis`` holds orthonormal rows spanning the previous space (degree
    ``d - 1``).  ``lower`` spans the space all derivatives of ``basis`` fall
    into, and ``mu[i][j]`` are the coordinates of ``d_i basis[j]`` in
    ``lower``.  In plain mode ``lower`` is ``basis`` itself.
    """

    order: LocalOrder
    degree: int
    basis: np.ndarray
    lower: np.ndarray
    lower_degree: int
    mu: dict
    homogeneous: bool = False

    @property
    def variables(self):
        n = self.order.nvars
        return ([T] if self.homogeneous else []) + list(range(n))

    @classmethod
    def build(cls, order, degree, basis, lower=None, lower_degree=None, homogeneous=False):
        """Frame for extending ``basis`` (degree ``degree - 1`` space) to ``degree``."""
        prev = degree - 1
        if lower is None:
            lower, lower_degree = basis, prev
        mu = {}
        frame = cls(order, degree, basis, lower, lower_degree, mu, homogeneous)
        if prev >= 1 and basis.shape[0] and lower.shape[0]:
            for v in frame.variables:
                dv = _derivative(order, basis, prev, v, homogeneous, lower_degree)
                mu[v] = dv @ lower.conj().T
        return frame


def _derivative(order, vectors, degree, v, homogeneous, target_degree):
    """Apply ``d_v`` to rows over degree ``<= degree``; result over ``<= target_degree``."""
    size = len(monomial_basis(order, degree - 1))
    if v == T:
        # d_t lowers the ∂_t power: the t-free (top degree) terms drop out
        out = apply_map(vectors, restriction_map(order, degree, degree - 1), size)
    else:
        out = apply_map(vectors, derivative_map(order, degree, v), size)
    return _embed(order, out, degree - 1, target_degree)


def _embed(order, vectors, degree, target_degree):
    if degree == target_degree:
        return vectors
    src = monomial_basis(order, degree)
    dst = monomial_basis(order, target_degree)
    out = np.zeros((vectors.shape[0], len(dst)), dtype=vectors.dtype)
    idx = [dst.index[m] for m in src.monomials]
    out[:, idx] = vectors
    return out


def _integrals(frame):
    """Candidate columns ``∫_v beta_j`` over monomials of degree ``<= d``.

    ``∫_i beta = ∂_i * beta|_{∂_{i+1} = ... = ∂_n = 0}``; in homogeneous mode
    ``t`` comes first, so ``∫_t beta`` keeps only the ``∂_t``-power term,
    which is the coefficient of ``1`` after dehomogenizing.
    """
    order, d = frame.order, frame.degree
    size = len(monomial_basis(order, d))
    blocks = []
    for v in frame.variables:
        if v == T:
            prev = monomial_basis(order, d - 1)
            out = np.zeros((frame.basis.shape[0], size), dtype=complex)
            one = monomial_basis(order, d).index[(0,) * order.nvars]
            out[:, one] = frame.basis[:, prev.index[(0,) * order.nvars]]
            blocks.append(out)
        else:
            blocks.append(apply_map(frame.basis, shift_map(order, d, v), size))
    return blocks


def mourrain_extend(frame, F, tol):
    """Solve for the degree-``d`` functionals whose derivatives land in the frame.

    Unknowns ``lam[v][j]`` are grouped by variable, then by basis index.  Rows
    impose commutation ``d_i d_l p = d_l d_i p`` through the coordinates
    ``mu`` and annihilation of the generators.  Returns the orthonormal rows
    of the solution space (not merged with the previous basis).
    """
    order, d = frame.order, frame.degree
    r = frame.basis.shape[0]
    variables = frame.variables
    nv = len(variables)
    if r == 0:
        return np.zeros((0, len(monomial_basis(order, d))), dtype=complex)
    blocks = _integrals(frame)
    cand = np.concatenate(blocks, axis=0)  # (nv * r, size): row (v, j)
    rows = []
    if frame.mu:
        rl = frame.lower.shape[0]
        for a in range(nv):
            for b in range(a + 1, nv):
                vi, vl = variables[a], variables[b]
                block = np.zeros((rl, nv * r), dtype=complex)
                block[:, b * r:(b + 1) * r] = frame.mu[vi].T
                block[:, a * r:(a + 1) * r] = -frame.mu[vl].T
                rows.append(block)
    columns = monomial_basis(order, d)
    for f in F:
        if not f:
            continue
        if frame.homogeneous and f.degree() != d:
            continue
        fv = f.vector(columns)
        nrm = np.linalg.norm(fv)
        if nrm == 0:
            continue
        rows.append((cand @ (fv / nrm))[None, :])
    if rows:
        system = np.concatenate(rows, axis=0)
    else:
        system = np.zeros((0, nv * r), dtype=complex)
    lam = numerical_kernel(system, tol)
    if lam.shape[0] == 0:
        return np.zeros((0, len(columns)), dtype=complex)
    return orthonormal_rows(lam @ cand, tol)


def _has_unit(F, tol):
    for f in F:
        if f and abs(complex(f.constant_term())) > tol * max(f.norm(), 1e-300):
            return True
    return False


def mourrain_steps(F, tol, order=None, homogeneous=False):
    """Yield ``(d, orthonormal rows)`` for ``d = 0, 1, 2, ...``.

    Plain mode yields a basis of ``D_0^(d)[I]``; homogeneous mode yields the
    degree-``d`` slice.  The sequence never ends; the caller stops it.
    """
    order = order or LocalOrder(F[0].nvars)
    one = np.ones((1, 1), dtype=complex)
    if _has_unit(F, tol):
        empty = np.zeros((0, 1), dtype=complex)
        yield 0, empty
        d = 1
        while True:
            yield d, np.zeros((0, len(monomial_basis(order, d))), dtype=complex)
            d += 1
    yield 0, one
    prev, prev2 = one, None
    d = 1
    while True:
        if homogeneous:
            frame = IntegrationFrame.build(order, d, prev, prev2, d - 2, homogeneous=True)
            cur = mourrain_extend(frame, F, tol)
        else:
            frame = IntegrationFrame.build(order, d, prev)
            new = mourrain_extend(frame, F, tol)
            old = _embed(order, prev, d - 1, d)
            cur = orthonormal_rows(np.concatenate([old, new], axis=0), tol)
        yield d, cur
        prev2, prev = prev, cur
        d += 1


def mourrain_dual(F, d, tol, order=None, homogeneous=False):
    """Reduced dual basis at degree ``d`` by repeated integration.

    Plain mode returns ``D_0^(d)[I]``; homogeneous mode returns the degree-``d``
    slice, which equals the Sylvester dual ``S_0^(d)[F]``.
    """
    order = order or LocalOrder(F[0].nvars)
    for k, rows in mourrain_steps(F, tol, order, homogeneous):
        if k == d:
            return reduce_lead_terms(rows, monomial_basis(order, d), tol, degree=d)


def mourrain_extend_basis(previous, F, tol, order=None):
    """One plain step: extend a basis of ``D_0^(d-1)[I]`` to a reduced basis of ``D_0^(d)[I]``.

    Pass an empty basis of degree ``-1`` to seed degree 0.
    """
    order = order or previous.columns.order
    d = previous.degree + 1
    columns = monomial_basis(order, d)
    if previous.dimension == 0:
        if d > 0 or _has_unit(F, tol):
            return DualBasis(np.zeros((0, len(columns)), dtype=complex), columns, d, tol, True, [])
        return reduce_lead_terms(np.ones((1, 1), dtype=complex), columns, tol, degree=0)
    basis = orthonormal_rows(previous.vectors, tol)
    frame = IntegrationFrame.build(order, d, basis)
    new = mourrain_extend(frame, F, tol)
    merged = np.concatenate([_embed(order, basis, d - 1, d), new], axis=0)
    return reduce_lead_terms(merged, columns, tol, degree=d)
