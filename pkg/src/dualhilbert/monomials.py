"""Monomials as exponent tuples, anti-graded local orders, and monomial bases.

A monomial ``x^a`` is stored as a plain tuple of non-negative integers.  The
same tuples index dual monomials ``∂^a``; only the order used to pick lead
terms differs (the dual order is the reverse of the local order).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb

import numpy as np

Monomial = tuple  # tuple[int, ...]

TIEBREAKS = ("lex", "grevlex")


def monomial_degree(a):
    return sum(a)


def monomial_mul(a, b):
    return tuple(i + j for i, j in zip(a, b))


def monomial_div(a, b):
    """Return ``a / b``; ``b`` must divide ``a``."""
    q = tuple(i - j for i, j in zip(a, b))
    if any(e < 0 for e in q):
        raise ValueError(f"{b} does not divide {a}")
    return q


def monomial_divides(a, b):
    """True when ``a | b``."""
    return all(i <= j for i, j in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(i, j) for i, j in zip(a, b))


def unit(n):
    return (0,) * n


def variable(n, i):
    e = [0] * n
    e[i] = 1
    return tuple(e)


def monomials_of_degree(n, d):
    """All exponent tuples in ``n`` variables of total degree exactly ``d``."""
    if n == 0:
        return [()] if d == 0 else []
    out = []
    # stars and bars
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        e = []
        for b in bars:
            e.append(b - prev - 1)
            prev = b
        e.append(d + n - 1 - prev - 1)
        out.append(tuple(e))
    return out


def count_monomials(n, d):
    """Number of monomials in ``n`` variables of degree ``<= d``."""
    if d < 0:
        return 0
    return comb(d + n, n)


@dataclass(frozen=True)
class LocalOrder:
    """Anti-graded local order on monomials in ``nvars`` variables.

    Smaller total degree means greater monomial, so ``1 > x_i`` for every
    variable.  Within a degree the tiebreak is either lexicographic with
    ``x_1 > x_2 > ... > x_n`` or graded reverse lexicographic.
    """

    nvars: int
    tiebreak: str = "lex"

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("a local order needs at least one variable")
        if self.tiebreak not in TIEBREAKS:
            raise ValueError(f"unknown tiebreak {self.tiebreak!r}; expected one of {TIEBREAKS}")

    def key(self, a):
        """Sort key that increases with the order ``>``."""
        if self.tiebreak == "lex":
            return (-sum(a), a)
        return (-sum(a), tuple(-e for e in reversed(a)))

    def dual_key(self, a):
        """Sort key that increases with the reversed (dual) order."""
        if self.tiebreak == "lex":
            return (sum(a), tuple(-e for e in a))
        return (sum(a), tuple(reversed(a)))

    def compare(self, a, b):
        """Return -1, 0 or 1 as ``a < b``, ``a == b`` or ``a > b``."""
        if len(a) != self.nvars or len(b) != self.nvars:
            raise ValueError(
                f"monomials {a}, {b} do not have {self.nvars} variables")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def greatest(self, monomials):
        return max(monomials, key=self.key)

    def least(self, monomials):
        return min(monomials, key=self.key)

    def extended(self):
        """The order on ``n + 1`` variables with a homogenizing variable first.

        With ``t`` placed as variable 0, the lexicographic tiebreak makes a
        larger ``t``-degree win among monomials of equal total degree.
        """
        if self.tiebreak != "lex":
            raise ValueError("the homogenizing extension is defined for the lex tiebreak")
        return LocalOrder(self.nvars + 1, "lex")


DEFAULT_TIEBREAK = "lex"


class MonomialBasis:
    """All monomials of degree ``<= degree`` sorted descending in the dual order.

    Column ``0`` is the dual-greatest monomial (highest degree), so the lead
    dual monomial of a coefficient vector is its leftmost nonzero entry.
    """

    def __init__(self, order, degree):
        self.order = order
        self.nvars = order.nvars
        self.degree = degree
        mons = []
        for k in range(degree + 1):
            mons.extend(monomials_of_degree(self.nvars, k))
        mons.sort(key=order.dual_key, reverse=True)
        self.monomials = mons
        self.index = {m: i for i, m in enumerate(mons)}

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __getitem__(self, i):
        return self.monomials[i]

    def __repr__(self):
        return f"MonomialBasis(nvars={self.nvars}, degree={self.degree}, size={len(self)})"

    @cached_property
    def degrees(self):
        return np.array([sum(m) for m in self.monomials], dtype=int)


@lru_cache(maxsize=256)
def monomial_basis(order, degree):
    return MonomialBasis(order, degree)


@lru_cache(maxsize=1024)
def shift_map(order, degree, i):
    """Index pairs for the dual integration ``p -> ∂_i * p|_{∂_{i+1} = ... = 0}``.

    Maps coordinates over monomials of degree ``<= degree - 1`` to
    coordinates over monomials of degree ``<= degree``.
    """
    src = monomial_basis(order, degree - 1)
    dst = monomial_basis(order, degree)
    si, di = [], []
    for k, a in enumerate(src.monomials):
        if any(a[l] for l in range(i + 1, len(a))):
            continue
        b = list(a)
        b[i] += 1
        si.append(k)
        di.append(dst.index[tuple(b)])
    return np.array(si, dtype=int), np.array(di, dtype=int)


@lru_cache(maxsize=1024)
def derivative_map(order, degree, i):
    """Index pairs for ``d_i``: ``∂^a -> ∂^a / ∂_i`` on monomials of degree ``<= degree``.

    Targets live in the basis of degree ``<= degree - 1``.
    """
    src = monomial_basis(order, degree)
    dst = monomial_basis(order, max(degree - 1, 0))
    si, di = [], []
    for k, a in enumerate(src.monomials):
        if a[i] == 0:
            continue
        b = list(a)
        b[i] -= 1
        si.append(k)
        di.append(dst.index[tuple(b)])
    return np.array(si, dtype=int), np.array(di, dtype=int)


@lru_cache(maxsize=1024)
def restriction_map(order, degree, target_degree):
    """Index pairs keeping monomials of degree ``<= target_degree``."""
    src = monomial_basis(order, degree)
    dst = monomial_basis(order, target_degree)
    si = [k for k, a in enumerate(src.monomials) if sum(a) <= target_degree]
    di = [dst.index[src.monomials[k]] for k in si]
    return np.array(si, dtype=int), np.array(di, dtype=int)


def apply_map(vectors, index_map, size):
    """Scatter the columns of ``vectors`` (rows are vectors) through an index map."""
    si, di = index_map
    vectors = np.atleast_2d(vectors)
    out = np.zeros((vectors.shape[0], size), dtype=vectors.dtype)
    if len(si):
        out[:, di] = vectors[:, si]
    return out
