"""The ``dualinfo`` command: local Hilbert data of a polynomial system at a point."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .errors import (
    DegreeCapExceeded,
    DualHilbertError,
    NumericalError,
    ParseError,
    PointNotOnVarietyError,
)
from .gcorners import hilbert_data, minimal_gcorners, search_gcorners, STRATEGIES
from .monomials import LocalOrder
from .parser import SystemSpec, _split_list, parse_scalar, parse_system
from .polynomial import Polynomial, format_dual, format_polynomial, translate_to_origin
from .sbasis import standard_basis_from_search
from .sylvester import embedded_truncated_dual

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NUMERICAL = 3
EXIT_NOT_ON_VARIETY = 4

SCHEMA_VERSION = "1.0"


@dataclass
class DualInfoFlags:
    strategy: str = "mourrain"
    standard_basis: bool = False
    max_degree: int = None
    stopping: str = "double"


@dataclass
class DualInfoReport:
    """Result of :func:`dualinfo_run`; ``dual_basis`` is a list of ``DualFunctional``."""

    variables: list
    point: tuple
    tolerance: float
    dual_basis: list
    dual_degree: int
    g_corners: list
    hilbert: object
    search_degree: int
    search_truncated: bool
    standard_basis: list = field(default=None)
    order: LocalOrder = None

    @property
    def regularity_bound(self):
        return self.hilbert.reported_bound

    @property
    def dimension(self):
        return self.hilbert.dimension

    def to_json(self):
        names = self.variables
        out = {
            "schema_version": SCHEMA_VERSION,
            "variables": list(names),
            "point": [_pair(c) for c in self.point],
            "tolerance": self.tolerance,
            "dual_degree": self.dual_degree,
            "dual_basis": [_terms_json(p, format_dual(p, names, self.order)) for p in self.dual_basis],
            "g_corners": [list(m) for m in self.g_corners],
            "regularity_bound": self.hilbert.reported_bound,
            "tight_bound": self.hilbert.tight_bound,
            "hilbert_values": list(self.hilbert.values),
            "hilbert_polynomial_coeffs": [str(c) for c in self.hilbert.polynomial],
            "hilbert_polynomial": self.hilbert.polynomial_str,
            "dimension": self.hilbert.dimension,
            "search_degree": self.search_degree,
            "search_truncated": self.search_truncated,
        }
        if self.standard_basis is not None:
            out["standard_basis"] = [_terms_json(g, format_polynomial(g, names, self.order))
                                     for g in self.standard_basis]
        return out

    def to_text(self):
        names = self.variables
        lines = [f"dual basis (degree {self.dual_degree}, {len(self.dual_basis)} elements):"]
        lines += ["  " + format_dual(p, names, self.order) for p in self.dual_basis]
        lines.append("g-corners: " + ", ".join(_monomial_str(m, names) for m in self.g_corners))
        lines.append(f"regularity bound: {self.hilbert.reported_bound} "
                     f"(tight: {self.hilbert.tight_bound})")
        lines.append("hilbert values: " + ", ".join(map(str, self.hilbert.values)))
        lines.append("hilbert polynomial: " + self.hilbert.polynomial_str)
        if self.hilbert.dimension < 0:
            lines.append("dimension: 0 (isolated point)")
        else:
            lines.append(f"dimension: {self.hilbert.dimension}")
        if self.standard_basis is not None:
            lines.append("standard basis:")
            lines += ["  " + format_polynomial(g, names, self.order) for g in self.standard_basis]
        if self.search_truncated:
            lines.append(f"search truncated at degree {self.search_degree}")
        return "\n".join(lines) + "\n"


def _pair(c):
    c = complex(c)
    return [c.real, c.imag]


def _terms_json(p, text):
    return {
        "text": text,
        "terms": [{"exponent": list(m), "coefficient": _pair(c)}
                  for m, c in sorted(p.terms.items())],
    }


def _monomial_str(m, names):
    return format_polynomial(Polynomial.monomial(m), names) if any(m) else "1"


def translated_generators(spec):
    """Generators moved so the point is the origin, with residual constants removed.

    Raises
    ------
    PointNotOnVarietyError
        When some constant term exceeds ``tolerance`` relative to the
        generator's coefficient norm.
    """
    tol = spec.tolerance
    n = spec.nvars
    out = []
    for g in spec.generators:
        f = translate_to_origin(g, spec.point)
        if not f:
            continue
        c = f.constant_term()
        if abs(complex(c)) > tol * f.norm():
            raise PointNotOnVarietyError()
        f = f - Polynomial.constant(c, n) if c else f
        if f:
            out.append(f)
    return out


def dualinfo_run(spec: SystemSpec, flags: DualInfoFlags = None) -> DualInfoReport:
    """Run the full pipeline on a parsed system."""
    flags = flags or DualInfoFlags()
    order = spec.local_order
    tol = spec.tolerance
    F = translated_generators(spec)
    if not F:
        raise NumericalError("every generator vanishes identically")
    max_degree = flags.max_degree if flags.max_degree is not None else spec.max_degree_override
    search = search_gcorners(F, tol, flags.strategy, order, max_degree=max_degree,
                             stopping=flags.stopping, keep_duals=flags.standard_basis)
    corners = sorted(minimal_gcorners(search.records), key=order.key, reverse=True)
    hd = hilbert_data(corners, spec.nvars)
    dual = embedded_truncated_dual(search.final_dual, search.ecart)
    sb = None
    if flags.standard_basis:
        sb = standard_basis_from_search(search, tol, order, reduced=True)
    return DualInfoReport(
        variables=list(spec.variables),
        point=spec.point,
        tolerance=tol,
        dual_basis=dual.functionals(tol),
        dual_degree=dual.degree,
        g_corners=corners,
        hilbert=hd,
        search_degree=search.degrees[-1] if search.degrees else -1,
        search_truncated=search.truncated,
        standard_basis=sb,
        order=order,
    )


def build_parser():
    p = argparse.ArgumentParser(
        prog="dualinfo",
        description="Local Hilbert function, g-corners and dual basis of a polynomial "
                    "system at a point.")
    p.add_argument("system", help="system file, or '-' for standard input")
    p.add_argument("--point", help="comma-separated coordinates, overriding 'point:'")
    p.add_argument("--tolerance", type=float, help="relative tolerance, overriding 'tolerance:'")
    p.add_argument("--strategy", choices=STRATEGIES, default="mourrain")
    p.add_argument("--standard-basis", action="store_true",
                   help="also recover the reduced standard basis")
    p.add_argument("--max-degree", type=int, help="hard cap on the search degree")
    p.add_argument("--order", choices=("lex", "grevlex"), help="tiebreak of the local order")
    p.add_argument("--output", choices=("text", "json"), default="text")
    return p


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _apply_overrides(spec, args):
    point = spec.point
    if args.point is not None:
        point = tuple(parse_scalar(s, 1, c) for s, c in _split_list(args.point, 1, 1))
    return SystemSpec(
        spec.variables, spec.generators, point,
        args.tolerance if args.tolerance is not None else spec.tolerance,
        args.order or spec.order, spec.max_degree_override, spec.lines)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        spec = _apply_overrides(parse_system(_read(args.system)), args)
    except ParseError as e:
        print(f"dualinfo: parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"dualinfo: {e}", file=sys.stderr)
        return EXIT_PARSE
    flags = DualInfoFlags(args.strategy, args.standard_basis, args.max_degree)
    try:
        report = dualinfo_run(spec, flags)
    except PointNotOnVarietyError as e:
        print(f"dualinfo: {e}", file=sys.stderr)
        return EXIT_NOT_ON_VARIETY
    except (NumericalError, DegreeCapExceeded, ValueError, DualHilbertError) as e:
        print(f"dualinfo: numerical failure: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    if args.output == "json":
        sys.stdout.write(json.dumps(report.to_json(), indent=2) + "\n")
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
