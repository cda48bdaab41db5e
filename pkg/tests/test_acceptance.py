"""End-to-end acceptance checks; each test records one PASS/FAIL summary line."""

from functools import lru_cache
from pathlib import Path

import numpy as np

from dualhilbert import (
    find_gcorners,
    hilbert_data,
    hilbert_value,
    minimal_gcorners,
    mourrain_dual,
    parse_system,
    search_gcorners,
    standard_basis,
    sylvester_dual,
    truncated_dual,
)
from dualhilbert.cli import dualinfo_run
from dualhilbert.gcorners import evaluate_polynomial
from dualhilbert.monomials import monomial_divides
from dualhilbert.oracle import brute_hilbert, local_buchberger

from conftest import criterion
from helpers import (
    P,
    figure_ideal,
    homogenized_slice_leads,
    leads,
    mac_example,
    main_example,
    monomials_upto,
    random_suite,
)

DATA = Path(__file__).resolve().parents[1] / "data"
TOL = 1e-8


@lru_cache(maxsize=None)
def suite():
    return random_suite(24)


def _close(f, g, tol=1e-6):
    ms = set(f.terms) | set(g.terms)
    return all(abs(complex(f.coefficient(m)) - complex(g.coefficient(m))) <= tol for m in ms)


def _cyclic4(point=None):
    spec = parse_system((DATA / "cyclic4.sys").read_text())
    if point is not None:
        spec.point = tuple(point)
    return dualinfo_run(spec)


CYCLIC4_CORNERS = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 2, 0), (0, 0, 1, 1)]


def _check_cyclic4(r):
    assert sorted(r.g_corners) == sorted(CYCLIC4_CORNERS)
    assert r.hilbert.values == [1, 2, 1, 1, 1]
    assert r.hilbert.polynomial == [1]
    assert r.dimension == 1


def test_criterion_1_macaulay_regression():
    with criterion(1, "truncated dual of {x - y^3, x^2} at degree 3"):
        td = truncated_dual(mac_example(), 3, TOL)
        assert td.dimension == 4
        assert td.lead_set == {(0, 0), (0, 1), (0, 2), (0, 3)}
        top = td.functionals()[td.leads.index((0, 3))]
        assert abs(top.coefficient((0, 3)) - 1) < 1e-12
        assert abs(top.coefficient((1, 0)) - 1) <= 1e-6


def test_criterion_2_sylvester_regression():
    with criterion(2, "Sylvester dual of {x - y^3, x^2} at degree 3"):
        sd = sylvester_dual(mac_example(), 3, TOL)
        assert sd.dimension == 6
        assert sd.lead_set == {(0, 0), (0, 1), (1, 1), (0, 2), (1, 2), (0, 3)}


def test_criterion_3_main_example_end_to_end():
    with criterion(3, "g-corners, search depth and standard basis of {x^2 - x*y^3, x^4}"):
        s = search_gcorners(main_example(), TOL)
        assert {(r.corner, r.found_at) for r in s.records} == \
            {((2, 0), 4), ((4, 0), 4), ((3, 3), 6), ((2, 6), 8), ((1, 9), 10)}
        assert s.degrees == list(range(21))
        assert minimal_gcorners(s.records) == [(1, 9), (2, 0)]
        sb = standard_basis(main_example(), TOL, reduced=True)
        assert len(sb) == 2
        assert _close(sb[0], P("x^2 - x*y^3")) and _close(sb[1], P("x*y^9"))


def test_criterion_4_cyclic4():
    with criterion(4, "Cyclic4 at the approximate point, tolerance 1e-4"):
        r = _cyclic4()
        _check_cyclic4(r)
        assert r.regularity_bound == 5


def test_criterion_5_embedded_curve():
    with criterion(5, "embedded curve at (0.7071068, 0.7071068, 0), tolerance 1e-4"):
        spec = parse_system((DATA / "embedded_curve.sys").read_text())
        r = dualinfo_run(spec)
        assert r.regularity_bound == 4
        assert r.hilbert.values == [1, 3, 5, 6]
        assert r.hilbert.polynomial_str == "d + 3"
        assert r.dimension == 2


def test_criterion_6_zero_dimensional():
    with criterion(6, "{x^2 - y^2, y^3} has multiplicity 6 and corners {x^2, y^3}"):
        F = figure_ideal()
        dims = [truncated_dual(F, d, TOL).dimension for d in range(9)]
        assert dims[4:] == [6] * 5
        assert minimal_gcorners(find_gcorners(F, TOL)) == [(0, 3), (2, 0)]
        assert local_buchberger(F) == [P("x^2 - y^2"), P("y^3")]


def _complement(corners, n, d):
    return {m for m in monomials_upto(n, d) if not any(monomial_divides(c, m) for c in corners)}


def test_criterion_7_oracle_equivalence():
    with criterion(7, "random systems: corners, complementarity and Macaulay/Mourrain agreement"):
        cases = suite()
        assert len(cases) >= 20
        for seed, F, G in cases:
            n = F[0].nvars
            oracle = sorted(g.lead_monomial() for g in G)
            for strategy in ("mourrain", "sylvester"):
                assert minimal_gcorners(find_gcorners(F, TOL, strategy)) == oracle, (seed, strategy)
            for d in range(7):
                td = truncated_dual(F, d, TOL)
                assert td.lead_set == _complement(oracle, n, d), (seed, d)
                assert mourrain_dual(F, d, TOL).lead_set == td.lead_set, (seed, d)


def test_criterion_8_homogenization_harness():
    with criterion(8, "homogenized dual slices match Sylvester duals up to degree 6"):
        systems = [F for _, F, _ in suite()] + [main_example()]
        for F in systems:
            for d in range(7):
                assert homogenized_slice_leads(F, d) == leads(sylvester_dual(F, d, TOL)), (F, d)


def _regression_corner_sets():
    sets = [
        (2, [(2, 0), (1, 9)]),
        (2, [(1, 0), (0, 6)]),
        (2, [(2, 0), (0, 3)]),
        (4, CYCLIC4_CORNERS),
        (3, [(2, 0, 0), (1, 2, 0)]),
        (2, []),
    ]
    sets += [(F[0].nvars, [g.lead_monomial() for g in G]) for _, F, G in suite()]
    return sets


def test_criterion_9_hilbert_consistency():
    with criterion(9, "Hilbert function against brute force and the Hilbert polynomial"):
        for n, corners in _regression_corner_sets():
            h = hilbert_data(corners, n)
            top = h.tight_bound + 5
            for d in range(top + 1):
                assert hilbert_value(h.gcorners, n, d) == brute_hilbert(h.gcorners, n, d)
            for d in range(max(h.tight_bound, 0), top + 1):
                assert evaluate_polynomial(h.polynomial, d) == hilbert_value(h.gcorners, n, d)


def test_criterion_10_stability_under_point_noise():
    with criterion(10, "Cyclic4 outputs unchanged under 1e-8 noise on the point"):
        spec = parse_system((DATA / "cyclic4.sys").read_text())
        rng = np.random.default_rng(20240611)
        base = np.array([complex(c) for c in spec.point])
        for _ in range(3):
            noise = rng.standard_normal(4) + 1j * rng.standard_normal(4)
            noise *= 1e-8 / np.abs(noise)
            _check_cyclic4(_cyclic4(base + noise))
