"""Shared fixtures-as-functions for the test suite."""

import random
from fractions import Fraction

import numpy as np

from dualhilbert import LocalOrder, Polynomial, parse_polynomial
from dualhilbert.errors import DegreeCapExceeded
from dualhilbert.linalg import CoefficientMatrix, numerical_kernel, reduce_lead_terms
from dualhilbert.monomials import monomial_basis, monomials_of_degree
from dualhilbert.oracle import local_buchberger
from dualhilbert.polynomial import homogenize

XY = ["x", "y"]


def P(text, variables=XY):
    return parse_polynomial(text, variables)


def mac_example():
    return [P("x - y^3"), P("x^2")]


def main_example():
    return [P("x^2 - x*y^3"), P("x^4")]


def figure_ideal():
    return [P("x^2 - y^2"), P("y^3")]


def leads(dual):
    return sorted(dual.leads)


def monomials_upto(n, d):
    return [m for k in range(d + 1) for m in monomials_of_degree(n, k)]


def _random_poly(rng, n):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        deg = rng.randint(1, 5)
        m = rng.choice(monomials_of_degree(n, deg))
        c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2, 3]))
        terms[m] = terms.get(m, 0) + c
    return Polynomial(terms, n)


def random_system(seed, cap=8):
    """Small exact system with zero constant terms, or ``None`` if the oracle
    basis exceeds ``cap`` or the system is degenerate."""
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    F = [f for f in (_random_poly(rng, n) for _ in range(rng.randint(1, 3))) if f]
    if not F:
        return None
    try:
        G = local_buchberger(F, LocalOrder(n), degree_cap=cap)
    except DegreeCapExceeded:
        return None
    return F, G


def predicted_search_depth(F, cap=14):
    """Last degree the g-corner search visits, from the exact standard basis
    of the homogenized ideal; ``None`` if that basis exceeds ``cap``."""
    order = LocalOrder(F[0].nvars)
    ext = order.extended()
    try:
        H = local_buchberger([homogenize(f, order)[0] for f in F], ext, degree_cap=cap)
    except DegreeCapExceeded:
        return None
    start = max(2 * max(sum(f.lead_monomial(order)) for f in F), max(f.degree() for f in F))
    return max(start, 2 * max(sum(g.lead_monomial(ext)) for g in H))


def random_suite(count=24, cap=8, max_depth=12):
    """The first ``count`` seeds whose oracle basis stays under ``cap`` and
    whose search depth stays at most ``max_depth``.  Deeper searches hit dual
    elements whose coefficients exceed ``1/tol`` and are excluded up front."""
    out = []
    seed = 0
    while len(out) < count:
        got = random_system(seed, cap)
        if got is not None:
            depth = predicted_search_depth(got[0])
            if depth is not None and depth <= max_depth:
                out.append((seed,) + got)
        seed += 1
    return out


def homogenized_slice_leads(F, d, tol=1e-8, order=None):
    """Lead set of the dehomogenized degree-``d`` slice of the dual of the
    ideal generated by the explicitly homogenized generators."""
    n = F[0].nvars
    order = order or LocalOrder(n)
    ext = order.extended()
    hom = [homogenize(f, order)[0] for f in F]
    rows = []
    for g in hom:
        s = d - g.degree()
        if s < 0:
            continue
        for a in monomials_of_degree(n + 1, s):
            rows.append(g.mul_monomial(a))
    cols = monomials_of_degree(n + 1, d)
    a = np.zeros((len(rows), len(cols)), dtype=complex)
    index = {m: k for k, m in enumerate(cols)}
    for i, r in enumerate(rows):
        for m, c in r.terms.items():
            a[i, index[m]] = complex(c)
    kernel = numerical_kernel(a, tol) if rows else np.eye(len(cols), dtype=complex)
    # dehomogenize the columns onto monomials of degree <= d
    target = monomial_basis(order, d)
    k = np.zeros((kernel.shape[0], len(target)), dtype=complex)
    for j, m in enumerate(cols):
        k[:, target.index[m[1:]]] = kernel[:, j]
    assert ext.nvars == n + 1
    return sorted(reduce_lead_terms(k, target, tol, degree=d).leads)
