from fractions import Fraction

import pytest

from dualhilbert import LocalOrder, Polynomial
from dualhilbert.errors import DegreeCapExceeded
from dualhilbert.oracle import (
    brute_hilbert,
    exact_kernel,
    exact_rref,
    is_member,
    local_buchberger,
    mora_reduce,
    spair,
    standard_basis_corners,
)
from dualhilbert.polynomial import homogenize

from helpers import P, figure_ideal, mac_example, main_example, random_suite

TXY = ["t", "x", "y"]


def test_spair_examples():
    assert spair(P("x^2 - x*y^3"), P("x^4")) == P("-x^3*y^3")
    assert spair(P("x - y^3"), P("x^2")) == P("-x*y^3")
    with pytest.raises(ValueError):
        spair(P("x"), Polynomial({}, 2))


def test_normal_form_examples():
    F = main_example()
    r = mora_reduce(P("-x^3*y^3"), F)
    assert r.nf == P("-x*y^9")
    assert r.cofactors[0] == P("-x*y^3 - y^6")
    G = [P("x^2 - x*y^3")]
    r = mora_reduce(P("x^4"), G)
    assert r.nf == P("x*y^9")
    assert r.unit == Polynomial.constant(1, 2)


def test_normal_form_needs_a_unit_multiplier():
    # reducing x by x - x^2 requires multiplying by the unit 1 - x
    r = mora_reduce(P("x"), [P("x - x^2")])
    assert not r.nf
    assert r.unit.constant_term() != 0 and r.unit.degree() > 0


def test_local_buchberger_examples():
    assert local_buchberger(main_example()) == [P("x^2 - x*y^3"), P("x*y^9")]
    assert standard_basis_corners(mac_example()) == [(0, 6), (1, 0)]
    assert local_buchberger(figure_ideal()) == [P("x^2 - y^2"), P("y^3")]


def test_homogenized_standard_basis():
    order = LocalOrder(2)
    hom = [homogenize(f, order)[0] for f in main_example()]
    G = local_buchberger(hom, order.extended())
    leads = sorted(g.lead_monomial(order.extended()) for g in G)
    assert leads == sorted([(2, 2, 0), (0, 4, 0), (0, 3, 3), (0, 2, 6), (0, 1, 9)])
    assert P("t^2*x^2 - x*y^3", TXY) in G


def test_buchberger_criterion_holds():
    for F in (mac_example(), main_example(), figure_ideal()):
        G = local_buchberger(F, reduced=False)
        for i in range(len(G)):
            for j in range(i):
                assert is_member(spair(G[i], G[j]), G)


def test_buchberger_criterion_on_random_suite():
    for seed, F, G in random_suite(8):
        order = LocalOrder(F[0].nvars)
        full = local_buchberger(F, order, reduced=False)
        for f in F:
            assert is_member(f, full, order)


def test_degree_cap():
    with pytest.raises(DegreeCapExceeded):
        local_buchberger(main_example(), degree_cap=8)


def test_exact_kernel_examples():
    assert exact_kernel([[1, 2, 3], [2, 4, 7]]) == [[-2, 1, 0]]
    assert exact_kernel([[Fraction(1, 2), Fraction(1, 3)]]) == [[Fraction(-2, 3), 1]]
    assert exact_kernel([[1, 0], [0, 1]]) == []
    rows, piv = exact_rref([[2, 4], [1, 3]])
    assert piv == [0, 1] and rows == [[1, 0], [0, 1]]


def test_brute_hilbert_examples():
    assert brute_hilbert([(2, 0), (1, 9)], 2, 5) == 2
    assert brute_hilbert([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 2, 0), (0, 0, 1, 1)], 4, 2) == 1
    assert brute_hilbert([], 3, 2) == 6
    with pytest.raises(ValueError):
        brute_hilbert([], 10, 40, budget=100)
