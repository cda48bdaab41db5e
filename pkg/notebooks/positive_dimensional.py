"""
Hilbert data at points of positive-dimensional components
=========================================================

Run the full ``dualinfo`` pipeline on the bundled Cyclic4 and embedded-curve
systems, and check that small noise on the point changes nothing discrete.
"""

from pathlib import Path

import numpy as np

from dualhilbert import parse_system
from dualhilbert.cli import dualinfo_run

DATA = Path(__file__).resolve().parents[1] / "data"

###############################################################################
# Cyclic4 at an approximate point of a curve of solutions

spec = parse_system((DATA / "cyclic4.sys").read_text())
report = dualinfo_run(spec)
print(len(report.dual_basis), "dual elements up to degree", report.dual_degree)
print("g-corners:", report.g_corners)
print("hilbert values:", report.hilbert.values, " polynomial:", report.hilbert.polynomial_str)
print("regularity bound:", report.regularity_bound, " dimension:", report.dimension)

###############################################################################
# An embedded curve inside a plane

curve = dualinfo_run(parse_system((DATA / "embedded_curve.sys").read_text()))
print("g-corners:", curve.g_corners)
print("hilbert values:", curve.hilbert.values, " polynomial:", curve.hilbert.polynomial_str)
print("regularity bound:", curve.regularity_bound, " dimension:", curve.dimension)

###############################################################################
# Perturb the Cyclic4 point by 1e-8 and compare

rng = np.random.default_rng(0)
base = np.array([complex(c) for c in spec.point])
for trial in range(3):
    spec.point = tuple(base + 1e-8 * rng.standard_normal(4))
    r = dualinfo_run(spec)
    print(trial, r.g_corners, r.hilbert.values, r.hilbert.polynomial_str)
