import numpy as np
import pytest

from dualhilbert import (
    LocalOrder,
    macaulay_array,
    numerical_kernel,
    reduce_lead_terms,
    sylvester_array,
    sylvester_dual,
)
from dualhilbert.errors import NumericalError, RankDecisionError
from dualhilbert.linalg import orthonormal_rows
from dualhilbert.monomials import monomial_basis
from dualhilbert.oracle import exact_kernel, exact_rref

from helpers import P, figure_ideal, mac_example, main_example

XYZ = ["x", "y", "z"]


def test_kernel_examples():
    m = macaulay_array(mac_example(), 3)
    assert m.shape == (9, 10)
    assert numerical_kernel(m, 1e-8).shape == (4, 10)
    assert numerical_kernel(np.zeros((0, 5)), 1e-8).shape == (5, 5)
    assert numerical_kernel(np.eye(2), 1e-8).shape == (0, 2)
    assert numerical_kernel(np.zeros((3, 4)), 1e-8).shape == (4, 4)


def test_kernel_rejects_bad_input():
    with pytest.raises(NumericalError):
        numerical_kernel(np.array([[1.0, np.nan]]), 1e-8)
    with pytest.raises(ValueError):
        numerical_kernel(np.eye(2), 0)


def _regression_matrices():
    out = []
    for F in (mac_example(), main_example(), figure_ideal()):
        for d in range(2, 7):
            out.append(macaulay_array(F, d))
            out.append(sylvester_array(F, d))
    return out


def test_kernel_residual_and_orthonormality():
    for m in _regression_matrices():
        a = m.numeric()
        k = numerical_kernel(m, 1e-8)
        if a.shape[0] == 0:
            continue
        smax = np.linalg.norm(a, 2)
        assert np.all(np.linalg.norm(a @ k.T, axis=0) <= 10 * 1e-8 * smax)
        assert np.allclose(k @ k.conj().T, np.eye(len(k)))


def test_kernel_dimension_matches_exact():
    for m in _regression_matrices():
        assert len(exact_kernel(m)) == numerical_kernel(m, 1e-8).shape[0]


def test_reduce_examples():
    cols = monomial_basis(LocalOrder(2), 3)
    dy3, dx = cols.index[(0, 3)], cols.index[(1, 0)]
    v = np.zeros((2, len(cols)), dtype=complex)
    v[0, dy3] = v[0, dx] = 1
    v[1, dy3] = 1
    red = reduce_lead_terms(v, cols, 1e-8)
    assert sorted(red.leads) == [(0, 3), (1, 0)]
    assert red.reduced and red.dimension == 2
    # unit lead coefficients, and no element touches another's lead column
    block = red.vectors[:, red.lead_positions]
    assert np.allclose(block, np.eye(2))


def test_reduce_lead_of_mixed_element():
    cols = monomial_basis(LocalOrder(2), 4)
    v = np.zeros((1, len(cols)), dtype=complex)
    v[0, cols.index[(1, 3)]] = 1
    v[0, cols.index[(2, 0)]] = 1
    assert reduce_lead_terms(v, cols, 1e-8).leads == [(1, 3)]


def test_reduce_is_idempotent_and_preserves_span():
    sd = sylvester_dual(main_example(), 6, 1e-8)
    again = reduce_lead_terms(sd, sd.columns, 1e-8)
    assert again.leads == sd.leads
    a = orthonormal_rows(sd.vectors, 1e-8)
    b = orthonormal_rows(again.vectors, 1e-8)
    assert np.linalg.matrix_rank(np.vstack([a, b]), tol=1e-8) == len(a)


def test_reduce_rejects_oversized_tolerance():
    # a well-conditioned span spread so thinly that no column passes the test
    cols = monomial_basis(LocalOrder(1), 199)
    v = np.ones((2, 200), dtype=complex) / np.sqrt(200)
    v[1, 1::2] *= -1
    with pytest.raises(RankDecisionError):
        reduce_lead_terms(v, cols, 0.2)


def test_exact_rref_leads_match_numerical():
    m = sylvester_array(mac_example(), 3)
    rows, pivots = exact_rref(exact_kernel(m))
    assert sorted(m.columns[p] for p in pivots) == sorted(sylvester_dual(mac_example(), 3, 1e-8).leads)


def test_lead_sets_resolve_until_coefficient_growth_exceeds_inverse_tolerance():
    # the reduced duals of this system have coefficients growing like 6^k;
    # leads are recovered exactly while that growth stays below 1/tol
    F = [P("-1/3*z + 2*z^3", XYZ), P("-x*y - 1/2*x*y*z + 1/3*x*y^3*z", XYZ)]
    tol = 1e-8
    for d in (10, 13, 14):
        m = sylvester_array(F, d)
        rows, pivots = exact_rref(exact_kernel(m))
        growth = max(max(abs(float(c)) for c in r) for r in rows)
        exact = {m.columns[p] for p in pivots}
        numeric = sylvester_dual(F, d, tol).lead_set
        if growth < 1 / tol:
            assert numeric == exact
        else:
            assert d == 14 and numeric != exact
