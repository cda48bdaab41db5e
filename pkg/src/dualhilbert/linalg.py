"""Dense kernels by SVD and lead-term reduction of dual bases."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import NumericalError, RankDecisionError
from .monomials import MonomialBasis
from .polynomial import DualFunctional, Polynomial


@dataclass
class CoefficientMatrix:
    """Rows are polynomials, columns are monomials of degree ``<= d``.

    ``entries[i, j]`` is the coefficient of ``columns[j]`` in ``rows[i]``,
    i.e. the dual monomial of column ``j`` applied to row ``i``.  Exact inputs
    give an object array of :class:`~fractions.Fraction`, otherwise the array
    is complex.
    """

    entries: np.ndarray
    rows: list
    columns: MonomialBasis
    labels: list = field(default_factory=list)

    @classmethod
    def from_polynomials(cls, polys, columns, labels=None):
        exact = bool(polys) and all(f.is_exact for f in polys)
        if exact:
            entries = np.empty((len(polys), len(columns)), dtype=object)
            entries[:] = Fraction(0)
            for i, f in enumerate(polys):
                for m, c in f.terms.items():
                    k = columns.index.get(m)
                    if k is not None:
                        entries[i, k] = Fraction(c)
        else:
            entries = np.zeros((len(polys), len(columns)), dtype=complex)
            for i, f in enumerate(polys):
                entries[i] = f.vector(columns)
        return cls(entries, list(polys), columns, list(labels or []))

    @property
    def shape(self):
        return self.entries.shape

    @property
    def is_exact(self):
        return self.entries.dtype == object

    def numeric(self):
        if self.is_exact:
            return self.entries.astype(float).astype(complex)
        return self.entries


def _svd(a, full=True):
    """Singular values and right singular vectors, retrying on LAPACK failure.

    The divide-and-conquer driver occasionally fails to converge on highly
    structured matrices; the conjugate transpose usually succeeds.
    """
    try:
        _, s, vh = np.linalg.svd(a, full_matrices=full)
        return s, vh
    except np.linalg.LinAlgError:
        pass
    try:
        u, s, _ = np.linalg.svd(a.conj().T, full_matrices=full)
    except np.linalg.LinAlgError as e:
        raise NumericalError("singular value decomposition did not converge") from e
    return s, u.conj().T


def numerical_kernel(m, tol, absolute=False):
    """Orthonormal kernel basis of ``m`` from its singular value decomposition.

    Parameters
    ----------
    m : CoefficientMatrix or array_like
        The constraint matrix; rows are constraints.
    tol : float
        Singular values ``<= tol * sigma_max`` are treated as zero.  With
        ``absolute=True`` the cut is ``tol`` itself.

    Returns
    -------
    ndarray of shape ``(k, ncols)``
        Rows are orthonormal kernel vectors.  A zero matrix or a matrix with no
        rows has the full space as kernel.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    a = m.numeric() if isinstance(m, CoefficientMatrix) else np.asarray(m)
    a = np.atleast_2d(a) if a.ndim == 1 else a
    rows, cols = a.shape
    if not np.all(np.isfinite(a)):
        raise NumericalError("matrix has non-finite entries")
    if rows == 0 or cols == 0:
        return np.eye(cols, dtype=complex)
    a = a.astype(complex)
    if not np.any(a.imag):
        a = a.real
    if rows > cols:
        # same right singular vectors, smaller decomposition
        a = np.linalg.qr(a, mode="r")
    s, vh = _svd(a)
    smax = s[0] if s.size else 0.0
    if smax == 0:
        return np.eye(cols, dtype=complex)
    cut = tol if absolute else tol * smax
    rank = int(np.sum(s > cut))
    return vh[rank:].conj().astype(complex)


def orthonormal_rows(vectors, tol):
    """Orthonormal basis (as rows) of the span of the rows of ``vectors``.

    Directions with singular value ``<= tol * sigma_max`` are dropped.
    """
    v = np.atleast_2d(np.asarray(vectors, dtype=complex))
    if v.shape[0] == 0:
        return v.reshape(0, v.shape[1])
    s, vh = _svd(v, full=False)
    if s.size == 0 or s[0] == 0:
        return np.zeros((0, v.shape[1]), dtype=complex)
    rank = int(np.sum(s > tol * s[0]))
    return vh[:rank]


@dataclass
class DualBasis:
    """A basis of a space of dual functionals as coefficient rows over ``columns``.

    When ``reduced`` is set the lead dual monomials (leftmost nonzero entries)
    are pairwise distinct, lead coefficients are 1, and every element vanishes
    at the other elements' lead positions.
    """

    vectors: np.ndarray
    columns: MonomialBasis
    degree: int
    tol: float
    reduced: bool = False
    lead_positions: list = field(default_factory=list)

    def __len__(self):
        return self.vectors.shape[0]

    @property
    def dimension(self):
        return len(self)

    @property
    def leads(self):
        """Lead dual monomials, in basis order."""
        if self.reduced:
            return [self.columns[k] for k in self.lead_positions]
        return [self.columns[_leftmost(v, self.tol)] for v in self.vectors]

    @property
    def lead_set(self):
        return set(self.leads)

    def functionals(self, tol=None):
        tol = self.tol if tol is None else tol
        return [DualFunctional.from_vector(v, self.columns, tol) for v in self.vectors]

    def select(self, mask):
        keep = [i for i, k in enumerate(mask) if k]
        return DualBasis(self.vectors[keep], self.columns, self.degree, self.tol, self.reduced,
                         [self.lead_positions[i] for i in keep] if self.reduced else [])

    def orthonormal(self):
        return orthonormal_rows(self.vectors, self.tol) if len(self) else self.vectors

    def apply(self, f):
        """Values ``p(f)`` for every element ``p``; terms of ``f`` above the columns are ignored."""
        return self.vectors @ f.vector(self.columns)


def _leftmost(v, tol):
    mags = np.abs(v)
    big = np.nonzero(mags > tol * mags.max())[0]
    return int(big[0])


def reduce_lead_terms(vectors, columns, tol, degree=None):
    """Reduce a spanning set of dual functionals to distinct unit lead terms.

    Columns are scanned in decreasing dual order.  The remaining span is kept
    as orthonormal rows; a column becomes a lead when some unit vector of the
    remaining span has an entry larger than ``tol`` there.  That vector is
    split off with a Householder reflection, and every other row is zeroed in
    that column.  Columns that fail the test are set to zero in the remaining
    span.  A final back-substitution clears each lead column from the other
    elements and normalizes lead coefficients to 1.

    Raises
    ------
    RankDecisionError
        If some direction of the span is never assigned a lead, i.e. the
        tolerance is too large for the data.
    """
    if isinstance(vectors, DualBasis):
        degree = vectors.degree if degree is None else degree
        vectors = vectors.vectors
    w = orthonormal_rows(vectors, tol) if np.asarray(vectors).shape[0] else \
        np.zeros((0, len(columns)), dtype=complex)
    w = w.copy()
    extracted = []
    positions = []
    for j in range(w.shape[1]):
        if w.shape[0] == 0:
            break
        c = w[:, j]
        norm = np.linalg.norm(c)
        if norm <= tol:
            w[:, j] = 0
            continue
        # Householder reflection sending c to norm * e_0
        phase = c[0] / abs(c[0]) if abs(c[0]) > 0 else 1.0
        u = c.copy()
        u[0] += phase * norm
        u /= np.linalg.norm(u)
        w = w - 2.0 * np.outer(u, u.conj() @ w)
        extracted.append(w[0].copy())
        positions.append(j)
        w = w[1:]
        if w.shape[0]:
            w[:, j] = 0
    if w.shape[0]:
        raise RankDecisionError(
            f"{w.shape[0]} basis direction(s) annihilated at tolerance {tol:g}")
    if not extracted:
        return DualBasis(np.zeros((0, len(columns)), dtype=complex), columns,
                         columns.degree if degree is None else degree, tol, True, [])
    e = np.array(extracted)
    for r, p in enumerate(positions):
        e[r, :p] = 0
    e = np.linalg.solve(e[:, positions], e)
    for r, p in enumerate(positions):
        e[r, :p] = 0
        e[r, positions] = 0
        e[r, p] = 1
    order = np.argsort(positions)
    e = e[order]
    positions = [positions[k] for k in order]
    return DualBasis(e, columns, columns.degree if degree is None else degree, tol, True,
                     positions)


def exact_vectors_to_functionals(rows, columns):
    return [DualFunctional({columns[k]: c for k, c in enumerate(r) if c != 0}, columns.nvars)
            for r in rows]


def polynomial_from_vector(v, columns, tol=None):
    return Polynomial.from_vector(v, columns, tol)
