"""G-corner search from Sylvester duals, and Hilbert data of monomial staircases."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from .errors import PointNotOnVarietyError
from .monomials import (
    LocalOrder,
    monomial_basis,
    monomial_degree,
    monomial_divides,
    monomial_lcm,
)
from .mourrain import _has_unit, mourrain_steps
from .linalg import reduce_lead_terms
from .sylvester import max_ecart, sylvester_dual

log = logging.getLogger(__name__)

STRATEGIES = ("mourrain", "sylvester")
MAX_CORNERS = 20


@dataclass(frozen=True)
class GCornerRecord:
    """A dehomogenized g-corner and the total degree at which it was found."""

    corner: tuple
    found_at: int

    @property
    def t_degree(self):
        return self.found_at - monomial_degree(self.corner)


@dataclass
class GCornerSearch:
    """Everything the search produced, beyond the records themselves."""

    records: list
    degrees: list
    d_max: int
    ecart: int
    duals: dict = field(default_factory=dict)
    final_dual: object = None
    truncated: bool = False


def _covered(m, d, records):
    for r in records:
        if monomial_divides(r.corner, m) and monomial_degree(m) - monomial_degree(r.corner) <= d - r.found_at:
            return True
    return False


def _lcm_bound(records):
    """Largest degree of an lcm of two recorded corners of the homogenized ideal."""
    best = 0
    for a in records:
        for b in records:
            lcm = monomial_lcm(a.corner, b.corner)
            best = max(best, monomial_degree(lcm) + max(a.t_degree, b.t_degree))
    return best


def _sylvester_duals(F, tol, order):
    d = 0
    while True:
        yield d, sylvester_dual(F, d, tol, order)
        d += 1


def _mourrain_duals(F, tol, order):
    for d, rows in mourrain_steps(F, tol, order, homogeneous=True):
        yield d, reduce_lead_terms(rows, monomial_basis(order, d), tol, degree=d)


def search_gcorners(F, tol, strategy="mourrain", order=None, max_degree=None,
                    stopping="double", keep_duals=False):
    """Discover every g-corner of the homogenized ideal degree by degree.

    At each degree ``d`` the reduced Sylvester dual is computed and every
    monomial of degree ``<= d`` missing from its lead set is recorded as
    ``(m, d)`` unless an earlier record ``(c, e)`` has ``c | m`` with
    ``deg(m / c) <= d - e``.  The search runs while ``d <= d_max`` where
    ``d_max`` starts at twice the largest lead-term degree of the generators
    (and at least the largest generator degree) and is raised to ``2d``
    whenever a new record appears at degree ``d``.

    Parameters
    ----------
    F : list of Polynomial
        Generators, already translated so the point of interest is the origin.
    tol : float
        Relative tolerance for all rank decisions.
    strategy : {"mourrain", "sylvester"}
        How the Sylvester duals are computed.
    max_degree : int, optional
        Hard cap on the search degree; hitting it sets ``truncated``.
    stopping : {"double", "lcm"}
        ``"lcm"`` replaces ``2d`` by the largest pairwise lcm degree of the
        recorded corners of the homogenized ideal.
    keep_duals : bool
        Keep the reduced dual at every degree where records were found.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if stopping not in ("double", "lcm"):
        raise ValueError(f"unknown stopping rule {stopping!r}")
    F = [f for f in F if f]
    if not F:
        raise ValueError("need at least one nonzero generator")
    order = order or LocalOrder(F[0].nvars)
    if _has_unit(F, tol):
        raise PointNotOnVarietyError()
    top = max(f.degree() for f in F)
    d_max = max(2 * max(sum(f.lead_monomial(order)) for f in F), top)
    duals = _mourrain_duals(F, tol, order) if strategy == "mourrain" else \
        _sylvester_duals(F, tol, order)

    records, degrees, kept = [], [], {}
    last = None
    truncated = False
    for d, sdual in duals:
        if d > d_max:
            break
        if max_degree is not None and d > max_degree:
            truncated = True
            break
        degrees.append(d)
        last = sdual
        present = set(sdual.lead_positions)
        found = []
        for k, m in enumerate(sdual.columns.monomials):
            if k in present:
                continue
            if not _covered(m, d, records):
                found.append(GCornerRecord(m, d))
        if found:
            if any(sum(r.corner) == 0 for r in found):
                raise PointNotOnVarietyError()
            log.debug("degree %d: new corners %s", d, [r.corner for r in found])
            records.extend(found)
            if keep_duals:
                kept[d] = sdual
            if stopping == "lcm":
                d_max = max(d, top, _lcm_bound(records))
            elif d_max < 2 * d:
                d_max = 2 * d
    return GCornerSearch(records, degrees, d_max, max_ecart(F, order), kept, last, truncated)


def find_gcorners(F, tol, strategy="mourrain", order=None, **kwargs):
    """List of :class:`GCornerRecord` for the ideal generated by ``F`` at the origin."""
    return search_gcorners(F, tol, strategy, order, **kwargs).records


def minimal_gcorners(records):
    """Divisibility-minimal corners, sorted; accepts records or bare monomials."""
    mons = sorted({r.corner if isinstance(r, GCornerRecord) else tuple(r) for r in records})
    return [m for m in mons
            if not any(o != m and monomial_divides(o, m) for o in mons)]


def _check_corners(gcorners):
    if len(gcorners) > MAX_CORNERS:
        raise ValueError(
            f"{len(gcorners)} g-corners exceed the inclusion-exclusion limit of {MAX_CORNERS}")


def _subset_lcm_degrees(gcorners, n):
    """Signed lcm degrees ``[(sign, deg lcm(S))]`` over all subsets ``S``."""
    _check_corners(gcorners)
    out = [(1, 0)]
    for k in range(1, len(gcorners) + 1):
        for sub in combinations(gcorners, k):
            lcm = (0,) * n
            for m in sub:
                lcm = monomial_lcm(lcm, m)
            out.append(((-1) ** k, sum(lcm)))
    return out


def _binom(p, q):
    return comb(p, q) if p >= q >= 0 else 0


def hilbert_value(gcorners, n, d):
    """Number of degree-``d`` monomials in ``n`` variables outside the staircase."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return sum(s * _binom(d - L + n - 1, n - 1) for s, L in _subset_lcm_degrees(gcorners, n))


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _binomial_poly(L, n):
    """Coefficients in ``d`` of ``C(d - L + n - 1, n - 1)`` as a polynomial."""
    p = [Fraction(1)]
    for k in range(1, n):
        p = _poly_mul(p, [Fraction(k - L), Fraction(1)])
    scale = Fraction(1, factorial(n - 1))
    return [c * scale for c in p]


def hilbert_polynomial(gcorners, n):
    """Exact coefficients (constant term first) of the Hilbert polynomial."""
    total = [Fraction(0)] * n
    for s, L in _subset_lcm_degrees(gcorners, n):
        for i, c in enumerate(_binomial_poly(L, n)):
            total[i] += s * c
    while len(total) > 1 and total[-1] == 0:
        total.pop()
    return total


def evaluate_polynomial(coeffs, d):
    return sum(c * d ** i for i, c in enumerate(coeffs))


def format_hilbert_polynomial(coeffs, var="d"):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mon = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        body = str(mag) if (not mon or mag != 1) else ""
        body = f"{body}*{mon}" if body and mon else (body or mon)
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append((" - " if c < 0 else " + ") + body)
    return "".join(terms) or "0"


@dataclass
class HilbertData:
    """Hilbert function summary of a local ideal from its g-corners.

    ``reported_bound`` is the degree of the lcm of all g-corners and
    ``values`` lists the Hilbert function below it; ``tight_bound`` is
    ``reported_bound - n + 1``, from which on the Hilbert polynomial agrees
    with the Hilbert function.  ``dimension`` is ``-1`` for an isolated point.
    """

    gcorners: list
    nvars: int
    values: list
    reported_bound: int
    tight_bound: int
    polynomial: list
    dimension: int

    def value(self, d):
        return hilbert_value(self.gcorners, self.nvars, d)

    def polynomial_at(self, d):
        return evaluate_polynomial(self.polynomial, d)

    @property
    def polynomial_str(self):
        return format_hilbert_polynomial(self.polynomial)

    @property
    def regularity(self):
        """Least ``r`` such that the polynomial matches the function from ``r`` on."""
        r = self.tight_bound
        while r > 0 and self.value(r - 1) == self.polynomial_at(r - 1):
            r -= 1
        return max(r, 0)


def hilbert_data(gcorners, n):
    gcorners = minimal_gcorners(gcorners)
    _check_corners(gcorners)
    lcm = (0,) * n
    for m in gcorners:
        lcm = monomial_lcm(lcm, m)
    L = sum(lcm)
    reported = L if gcorners else 1
    values = [hilbert_value(gcorners, n, d) for d in range(reported)]
    poly = hilbert_polynomial(gcorners, n)
    dimension = -1 if all(c == 0 for c in poly) else len(poly)
    return HilbertData(gcorners, n, values, reported, L - n + 1, poly, dimension)
