"""Sparse multivariate polynomials and dual functionals.

Coefficients are plain Python scalars.  Exact work uses
:class:`fractions.Fraction` (or ``int``); approximate work uses ``complex``.
Nothing here imposes a global tolerance: approximate cleanup always takes a
caller-supplied ``tol``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

import numpy as np

from .monomials import (
    LocalOrder,
    monomial_basis,
    monomial_degree,
    monomial_div,
    monomial_mul,
    unit,
)


def _is_exact(c):
    return isinstance(c, (int, Fraction)) and not isinstance(c, bool)


class _Terms:
    """Shared storage for a mapping from exponent tuples to nonzero scalars."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms=None, nvars=None):
        terms = dict(terms or {})
        if nvars is None:
            if not terms:
                raise ValueError("nvars is required for an empty term mapping")
            nvars = len(next(iter(terms)))
        for m in terms:
            if len(m) != nvars:
                raise ValueError(f"monomial {m} does not have {nvars} variables")
        self.terms = {tuple(m): c for m, c in terms.items() if c != 0}
        self.nvars = nvars

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coefficient(self, m):
        return self.terms.get(tuple(m), 0)

    @property
    def is_exact(self):
        return all(_is_exact(c) for c in self.terms.values())

    def degree(self):
        """Largest total degree of a term (``-1`` for zero)."""
        return max((monomial_degree(m) for m in self.terms), default=-1)

    def low_degree(self):
        return min((monomial_degree(m) for m in self.terms), default=-1)

    def norm(self):
        return float(np.sqrt(sum(abs(complex(c)) ** 2 for c in self.terms.values())))

    def max_abs(self):
        return max((abs(complex(c)) for c in self.terms.values()), default=0.0)

    def _new(self, terms):
        return type(self)(terms, self.nvars)

    def cleanup(self, tol):
        """Drop coefficients with magnitude ``<= tol * max |coefficient|``."""
        if tol <= 0:
            raise ValueError("tolerance must be positive")
        cut = tol * self.max_abs()
        return self._new({m: c for m, c in self.terms.items() if abs(complex(c)) > cut})

    def scale(self, c):
        return self._new({m: c * v for m, v in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return self._new(out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def vector(self, basis, dtype=complex):
        """Coefficient vector over a :class:`MonomialBasis`; higher-degree terms are dropped."""
        v = np.zeros(len(basis), dtype=dtype)
        for m, c in self.terms.items():
            k = basis.index.get(m)
            if k is not None:
                v[k] = c
        return v

    @classmethod
    def from_vector(cls, vector, basis, tol=None):
        """Build from coefficients over ``basis``; with ``tol``, drop entries ``<= tol * max``."""
        vector = np.asarray(vector)
        cut = 0.0
        if tol is not None and vector.size:
            cut = tol * float(np.max(np.abs(vector)))
        terms = {}
        for k, c in enumerate(vector):
            if c != 0 and abs(c) > cut:
                terms[basis[k]] = complex(c) if np.iscomplexobj(vector) else c
        return cls(terms, basis.nvars)


class Polynomial(_Terms):
    """A polynomial ``f = sum c_a x^a`` stored sparsely.

    >>> f = Polynomial({(2, 0): 1, (1, 3): -1})
    >>> f.lead_monomial()
    (2, 0)
    """

    __slots__ = ()

    @classmethod
    def constant(cls, c, nvars):
        return cls({unit(nvars): c}, nvars)

    @classmethod
    def monomial(cls, m, c=1):
        return cls({tuple(m): c}, len(m))

    @classmethod
    def variable(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, nvars)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            out = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = monomial_mul(m1, m2)
                    out[m] = out.get(m, 0) + c1 * c2
            return Polynomial(out, self.nvars)
        if isinstance(other, (int, float, complex, Fraction, np.number)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex, Fraction, np.number)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = Polynomial.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def mul_monomial(self, m, c=1):
        return Polynomial({monomial_mul(a, m): c * v for a, v in self.terms.items()}, self.nvars)

    def lead_monomial(self, order=None):
        """``in_>(f)``: the greatest monomial under the local order."""
        if not self.terms:
            raise ValueError("the zero polynomial has no lead monomial")
        order = order or LocalOrder(self.nvars)
        return order.greatest(self.terms)

    def lead_coefficient(self, order=None):
        return self.terms[self.lead_monomial(order)]

    def lead_term(self, order=None):
        m = self.lead_monomial(order)
        return m, self.terms[m]

    def ecart(self, order=None):
        """Degree of the highest term minus degree of the lead term."""
        return self.degree() - monomial_degree(self.lead_monomial(order))

    def monic(self, order=None):
        lc = self.lead_coefficient(order)
        if _is_exact(lc):
            return self.scale(Fraction(1) / lc)
        return self.scale(1 / lc)

    def constant_term(self):
        return self.terms.get(unit(self.nvars), 0)

    def evaluate(self, point):
        total = 0
        for m, c in self.terms.items():
            v = c
            for b, e in zip(point, m):
                if e:
                    v = v * b ** e
            total = total + v
        return total

    def __repr__(self):
        return f"Polynomial({self.terms!r}, nvars={self.nvars})"

    def __str__(self):
        return format_polynomial(self)


class DualFunctional(_Terms):
    """A finite combination ``sum c_a ∂^a`` of coefficient-extraction functionals."""

    __slots__ = ()

    def lead_monomial(self, order=None):
        """``in_≻(p)``: greatest dual monomial, i.e. the least monomial under ``>``."""
        if not self.terms:
            raise ValueError("the zero functional has no lead monomial")
        order = order or LocalOrder(self.nvars)
        return order.least(self.terms)

    def lead_coefficient(self, order=None):
        return self.terms[self.lead_monomial(order)]

    def __call__(self, f):
        return dual_apply(self, f)

    def __repr__(self):
        return f"DualFunctional({self.terms!r}, nvars={self.nvars})"

    def __str__(self):
        return format_dual(self)


def compare_monomials(order, a, b):
    """Return ``"less"``, ``"equal"`` or ``"greater"`` for ``a`` against ``b``."""
    return ("less", "equal", "greater")[order.compare(a, b) + 1]


def translate_to_origin(f, point):
    """Return ``f(x + b)`` by expanding each ``(x_i + b_i)^e`` binomially."""
    if len(point) != f.nvars:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {f.nvars} variables")
    n = f.nvars
    out = {}
    for m, c in f.terms.items():
        # partial products of the expansion over the first few variables
        partial = {unit(n): c}
        for i, e in enumerate(m):
            if e == 0:
                continue
            b = point[i]
            nxt = {}
            for a, v in partial.items():
                for k in range(e + 1):
                    coeff = comb(e, k) * (b ** (e - k) if e - k else 1)
                    if coeff == 0:
                        continue
                    t = list(a)
                    t[i] += k
                    t = tuple(t)
                    nxt[t] = nxt.get(t, 0) + v * coeff
            partial = nxt
        for a, v in partial.items():
            out[a] = out.get(a, 0) + v
    return Polynomial(out, n)


def homogenize(f, order=None):
    """Return ``(f^h, ecart)`` with the homogenizing variable ``t`` placed first.

    Each term is multiplied by the power of ``t`` raising it to the top degree.
    """
    if not f:
        raise ValueError("cannot homogenize the zero polynomial")
    top = f.degree()
    fh = Polynomial({(top - monomial_degree(m),) + m: c for m, c in f.terms.items()},
                    f.nvars + 1)
    order = order or LocalOrder(f.nvars)
    lead = fh.lead_monomial(order.extended())
    return fh, lead[0]


def dehomogenize(g):
    """Set the first variable (``t``) to 1."""
    out = {}
    for m, c in g.terms.items():
        out[m[1:]] = out.get(m[1:], 0) + c
    return Polynomial(out, g.nvars - 1)


def dual_apply(p, f):
    """``p(f) = sum_a p_a * f_a``."""
    if p.nvars != f.nvars:
        raise ValueError(f"variable count mismatch: {p.nvars} vs {f.nvars}")
    small, big = (p.terms, f.terms) if len(p.terms) <= len(f.terms) else (f.terms, p.terms)
    total = 0
    for m, c in small.items():
        v = big.get(m)
        if v is not None:
            total = total + c * v
    return total


def dual_derivative(i, p):
    """``d_i``: ``∂^a -> ∂^a / ∂_i`` when ``∂_i`` divides ``∂^a``, else drop the term."""
    if not 0 <= i < p.nvars:
        raise IndexError(f"variable index {i} out of range for {p.nvars} variables")
    e = [0] * p.nvars
    e[i] = 1
    e = tuple(e)
    out = {}
    for m, c in p.terms.items():
        if m[i]:
            out[monomial_div(m, e)] = c
    return DualFunctional(out, p.nvars)


def default_names(n):
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


def _format_scalar(c):
    if isinstance(c, Fraction):
        return str(c)
    if isinstance(c, int):
        return str(c)
    c = complex(c)
    if c.imag == 0:
        return repr(c.real) if c.real != int(c.real) or abs(c.real) >= 1e16 else str(int(c.real))
    return f"({c.real!r}{c.imag:+.17g}*i)"


def _format_monomial(m, names, prefix=""):
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(prefix + name)
        elif e > 1:
            parts.append(f"{prefix}{name}^{e}")
    return "*".join(parts)


def _format_terms(terms, names, order, prefix, reverse):
    if not terms:
        return "0"
    mons = sorted(terms, key=order.key, reverse=reverse)
    out = []
    for m in mons:
        c = terms[m]
        mon = _format_monomial(m, names, prefix)
        s = _format_scalar(c)
        negative = False
        if s.startswith("-") and not s.startswith("(-"):
            negative, s = True, s[1:]
        if mon and s == "1":
            body = mon
        elif mon:
            body = f"{s}*{mon}"
        else:
            body = s
        if not out:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


def format_polynomial(f, names=None, order=None):
    """Render with terms in decreasing local order; parseable by the system grammar."""
    names = names or default_names(f.nvars)
    order = order or LocalOrder(f.nvars)
    return _format_terms(f.terms, names, order, "", reverse=True)


def format_dual(p, names=None, order=None):
    """Render in ∂-notation with the lead (dual-greatest) term first."""
    names = names or default_names(p.nvars)
    order = order or LocalOrder(p.nvars)
    return _format_terms(p.terms, names, order, "d", reverse=False)


def coerce_exact(f):
    """Convert integer/float coefficients to :class:`Fraction`."""
    out = {}
    for m, c in f.terms.items():
        if isinstance(c, complex):
            if c.imag != 0:
                raise ValueError("complex coefficient has no exact rational form")
            c = c.real
        out[m] = Fraction(c)
    return Polynomial(out, f.nvars)


def coerce_complex(f):
    return Polynomial({m: complex(c) for m, c in f.terms.items()}, f.nvars)


def polynomial_vectors(polys, basis):
    return np.array([f.vector(basis) for f in polys]).reshape(len(polys), len(basis))


__all__ = [
    "Polynomial",
    "DualFunctional",
    "compare_monomials",
    "translate_to_origin",
    "homogenize",
    "dehomogenize",
    "dual_apply",
    "dual_derivative",
    "format_polynomial",
    "format_dual",
    "coerce_exact",
    "coerce_complex",
    "monomial_basis",
]
