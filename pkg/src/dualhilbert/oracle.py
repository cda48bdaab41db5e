"""Exact rational ground truth: S-pairs, Mora normal forms, local Buchberger,
fraction-free kernels and brute-force Hilbert counts.

Everything here works on :class:`~fractions.Fraction` coefficients and is
meant for small instances only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm as int_lcm

from .errors import DegreeCapExceeded
from .monomials import (
    LocalOrder,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomials_of_degree,
)
from .polynomial import Polynomial, coerce_exact


def _exact(f):
    return f if f.is_exact else coerce_exact(f)


def spair(f, g, order=None):
    """``(L / in f) f - (L / in g) g`` with ``L`` the lcm of the lead monomials.

    Lead coefficients are normalized first so the lead terms cancel.
    """
    if not f or not g:
        raise ValueError("S-pair of the zero polynomial")
    order = order or LocalOrder(f.nvars)
    mf, cf = f.lead_term(order)
    mg, cg = g.lead_term(order)
    L = monomial_lcm(mf, mg)
    return f.mul_monomial(monomial_div(L, mf), Fraction(1) / cf) - \
        g.mul_monomial(monomial_div(L, mg), Fraction(1) / cg)


def ecart(f, order):
    return f.degree() - sum(f.lead_monomial(order))


@dataclass
class NormalForm:
    """``nf = unit * f - sum(cofactors[i] * G[i])``."""

    nf: Polynomial
    unit: Polynomial
    cofactors: list


def mora_normal_form(f, G, order=None, check=True):
    """Mora's tangent cone normal form of ``f`` with respect to ``G``.

    The reducer set starts as ``G`` and is augmented with intermediate
    remainders whose écart is smaller than that of the chosen reducer.  Among
    candidate reducers the smallest écart wins, ties going to the reducer with
    the dual-greatest lead.  Returns only the normal form; see
    :func:`mora_reduce` for the unit and cofactors.
    """
    return mora_reduce(f, G, order, check).nf


def mora_reduce(f, G, order=None, check=True):
    f = _exact(f)
    G = [_exact(g) for g in G if g]
    n = f.nvars
    order = order or LocalOrder(n)
    zero = Polynomial({}, n)
    one = Polynomial.constant(Fraction(1), n)
    # each reducer carries (poly, unit, cofactors) with poly = unit*f - sum a_i G_i
    # for original reducers unit = 0 and cofactor e_i negated: G_i = 0*f - (-1)*G_i
    reducers = []
    for i, g in enumerate(G):
        cof = [zero] * len(G)
        cof[i] = Polynomial.constant(Fraction(-1), n)
        reducers.append((g, zero, cof))
    h, u, cof = f, one, [zero] * len(G)
    while h:
        mh = h.lead_monomial(order)
        cands = [r for r in reducers if monomial_divides(r[0].lead_monomial(order), mh)]
        if not cands:
            break
        g, gu, gcof = min(cands, key=lambda r: (ecart(r[0], order),
                                                order.key(r[0].lead_monomial(order))))
        if ecart(g, order) > ecart(h, order):
            reducers.append((h, u, cof))
        mg, cg = g.lead_term(order)
        q = monomial_div(mh, mg)
        c = h.terms[mh] / cg
        h = h - g.mul_monomial(q, c)
        u = u - gu.mul_monomial(q, c)
        cof = [a - b.mul_monomial(q, c) for a, b in zip(cof, gcof)]
    out = NormalForm(h, u, cof)
    if check:
        _check_normal_form(f, G, out, order)
    return out


def _check_normal_form(f, G, out, order):
    if out.unit.constant_term() == 0:
        raise AssertionError("Mora normal form produced a non-unit multiplier")
    recon = out.unit * f
    for a, g in zip(out.cofactors, G):
        recon = recon - a * g
    if recon != out.nf:
        raise AssertionError("normal form representation does not reconstruct")
    if not f:
        return
    mf = f.lead_monomial(order)
    if out.nf and order.compare(mf, out.nf.lead_monomial(order)) < 0:
        raise AssertionError("normal form lead exceeds the lead of f")
    for a, g in zip(out.cofactors, G):
        ag = a * g
        if ag and order.compare(mf, ag.lead_monomial(order)) < 0:
            raise AssertionError("cofactor product lead exceeds the lead of f")
    if out.nf:
        mn = out.nf.lead_monomial(order)
        if any(monomial_divides(g.lead_monomial(order), mn) for g in G):
            raise AssertionError("normal form lead is still reducible")


def local_buchberger(F, order=None, reduced=True, degree_cap=40):
    """Standard basis of ``<F>`` in the local ring under an anti-graded order.

    Adjoins nonzero normal forms of S-pairs until all vanish.  With
    ``reduced`` the result keeps one monic element per minimal lead monomial.

    Raises
    ------
    DegreeCapExceeded
        When a new basis element has a term above ``degree_cap``.
    """
    G = [_exact(f) for f in F if f]
    if not G:
        return []
    order = order or LocalOrder(G[0].nvars)
    pairs = [(i, j) for i in range(len(G)) for j in range(i)]
    while pairs:
        i, j = pairs.pop(0)
        s = spair(G[i], G[j], order)
        if not s:
            continue
        r = mora_normal_form(s, G, order, check=False)
        if r:
            if r.degree() > degree_cap:
                raise DegreeCapExceeded(f"standard basis element of degree {r.degree()} "
                                        f"exceeds the cap {degree_cap}")
            G.append(r.monic(order))
            k = len(G) - 1
            pairs.extend((k, l) for l in range(k))
    if reduced:
        G = minimal_basis(G, order)
    return G


def minimal_basis(G, order):
    """One monic element per minimal lead monomial, lowest-degree elements preferred."""
    G = sorted((g.monic(order) for g in G if g),
               key=lambda g: (order.key(g.lead_monomial(order)), -g.degree(), len(g)),
               reverse=True)
    out = []
    for g in G:
        m = g.lead_monomial(order)
        if not any(monomial_divides(h.lead_monomial(order), m) for h in out):
            out.append(g)
    return out


def standard_basis_corners(F, order=None, degree_cap=40):
    order = order or LocalOrder(F[0].nvars)
    return sorted(g.lead_monomial(order) for g in local_buchberger(F, order, True, degree_cap))


def is_member(f, G, order=None):
    return not mora_normal_form(f, G, order, check=False)


def _integer_row(r):
    den = 1
    for c in r:
        den = int_lcm(den, Fraction(c).denominator)
    out = {}
    for j, c in enumerate(r):
        v = int(Fraction(c) * den)
        if v:
            out[j] = v
    return _primitive(out)


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {j: v // g for j, v in row.items()} if g > 1 else row


def _combine(a, b, ca, cb):
    """``ca * a - cb * b`` on sparse integer rows, made primitive."""
    out = {j: ca * v for j, v in a.items()}
    for j, v in b.items():
        w = out.get(j, 0) - cb * v
        if w:
            out[j] = w
        else:
            out.pop(j, None)
    return _primitive(out)


def exact_rref(rows):
    """Reduced row echelon form over the rationals by fraction-free elimination.

    Rows are scaled to primitive integer vectors and eliminated by integer
    cross-multiplication, dividing out each row's content, so no fractions
    appear until the final normalization.  Pivots are taken in column order;
    among candidate pivot rows the sparsest is used.  Returns
    ``(rref_rows, pivot_columns)``.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pending = [r for r in (_integer_row(r) for r in rows) if r]
    pivots, done = [], []
    for c in range(ncols):
        cands = [k for k, r in enumerate(pending) if c in r]
        if not cands:
            continue
        k = min(cands, key=lambda k: len(pending[k]))
        p = pending.pop(k)
        pending = [r if c not in r else _combine(r, p, p[c], r[c]) for r in pending]
        pending = [r for r in pending if r]
        pivots.append(c)
        done.append(p)
        if not pending:
            break
    for i in range(len(done) - 1, -1, -1):
        c = pivots[i]
        for k in range(i):
            if c in done[k]:
                done[k] = _combine(done[k], done[i], done[i][c], done[k][c])
    out = []
    for r, c in zip(done, pivots):
        lead = r[c]
        row = [Fraction(0)] * ncols
        for j, v in r.items():
            row[j] = Fraction(v, lead)
        out.append(row)
    return out, pivots


def exact_kernel(m):
    """Exact kernel basis of a rational matrix (rows are constraints).

    Accepts a :class:`~dualhilbert.linalg.CoefficientMatrix` or a list of rows;
    with ``ncols`` columns and no rows the kernel is the whole space.
    """
    entries = m.entries.tolist() if hasattr(m, "entries") else [list(r) for r in m]
    ncols = m.shape[1] if hasattr(m, "shape") else (len(entries[0]) if entries else 0)
    rref, pivots = exact_rref(entries) if entries else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(rref, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def brute_hilbert(gcorners, n, d, budget=10 ** 6):
    """Count the degree-``d`` monomials divisible by no g-corner."""
    if comb(d + n - 1, n - 1) > budget:
        raise ValueError(f"enumeration of degree {d} in {n} variables exceeds the budget")
    return sum(1 for m in monomials_of_degree(n, d)
               if not any(monomial_divides(c, m) for c in gcorners))


def is_unit(f):
    return f.constant_term() != 0


__all__ = [
    "spair",
    "mora_normal_form",
    "mora_reduce",
    "local_buchberger",
    "minimal_basis",
    "standard_basis_corners",
    "exact_rref",
    "exact_kernel",
    "brute_hilbert",
]
