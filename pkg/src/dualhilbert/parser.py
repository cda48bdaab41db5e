"""Text grammar for polynomial systems.

A system file is a sequence of ``name: value`` sections::

    # comments run to the end of the line
    vars: x_1, x_2
    point: -1.0-.53734e-17*ii, 1
    tolerance: 1e-4
    order: lex
    max_degree: 30
    gens:
      x_1^2 - x_1*x_2^3
      x_1^4

Only ``vars:`` and ``gens:`` are required; ``gens:`` takes one polynomial per
line.  Expressions use ``+ - * / ^`` and parentheses, numeric literals
(``3``, ``2.5``, ``.5e-3``) and the imaginary unit ``i`` or ``ii``.  Products
must be written with ``*``; division is allowed by constants only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError
from .monomials import LocalOrder
from .polynomial import Polynomial, coerce_complex

IMAGINARY = ("i", "ii")
SECTIONS = ("vars", "point", "tolerance", "order", "max_degree", "gens")

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^(),])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str
    text: str
    column: int


def tokenize(text, line=1, column=1):
    """Split an expression into tokens; ``column`` is that of ``text[0]``."""
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, column + pos)
        if m.lastgroup != "ws":
            out.append(Token(m.lastgroup, m.group(), column + pos))
        pos = m.end()
    out.append(Token("end", "", column + len(text)))
    return out


class _Parser:
    """Recursive descent over::

        expr   := term (("+" | "-") term)*
        term   := unary (("*" | "/") unary)*
        unary  := ("+" | "-") unary | power
        power  := atom ("^" integer)?
        atom   := number | "i" | variable | "(" expr ")"
    """

    def __init__(self, tokens, variables, line):
        self.tokens = tokens
        self.pos = 0
        self.index = {v: k for k, v in enumerate(variables)}
        self.n = len(variables)
        self.line = line

    @property
    def tok(self):
        return self.tokens[self.pos]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return ParseError(msg, self.line, tok.column)

    def take(self):
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def parse(self):
        if self.tok.kind == "end":
            raise self.error("empty expression")
        p = self.expr()
        if self.tok.kind != "end":
            if self.tok.kind in ("num", "name") or self.tok.text == "(":
                raise self.error(f"expected an operator before {self.tok.text!r}; "
                                 "write products with '*'")
            raise self.error(f"unexpected {self.tok.text!r}")
        return p

    def expr(self):
        p = self.term()
        while self.tok.text in ("+", "-"):
            op = self.take().text
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.tok.text in ("*", "/"):
            op = self.take()
            q = self.unary()
            if op.text == "*":
                p = p * q
                continue
            if q.degree() > 0:
                raise self.error("division by a non-constant", op)
            c = q.constant_term()
            if c == 0:
                raise self.error("division by zero", op)
            p = p.scale(Fraction(1) / c if isinstance(c, Fraction) else 1 / c)
        return p

    def unary(self):
        if self.tok.text in ("+", "-"):
            op = self.take().text
            p = self.unary()
            return -p if op == "-" else p
        return self.power()

    def power(self):
        p = self.atom()
        if self.tok.text == "^":
            self.take()
            t = self.tok
            if t.kind != "num" or not t.text.isdigit():
                raise self.error("exponent must be a non-negative integer literal")
            self.take()
            p = p ** int(t.text)
        return p

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.take()
            return Polynomial.constant(Fraction(t.text), self.n)
        if t.kind == "name":
            self.take()
            if t.text in self.index:
                return Polynomial.variable(self.n, self.index[t.text])
            if t.text in IMAGINARY:
                return Polynomial.constant(1j, self.n)
            raise self.error(f"unknown variable {t.text!r}", t)
        if t.text == "(":
            self.take()
            p = self.expr()
            if self.tok.text != ")":
                raise self.error("expected ')'")
            self.take()
            return p
        if t.kind == "end":
            raise self.error("unexpected end of expression")
        raise self.error(f"unexpected {t.text!r}")


def _normalize(p):
    if all(isinstance(c, (int, Fraction)) for c in p.terms.values()):
        return Polynomial({m: Fraction(c) for m, c in p.terms.items()}, p.nvars)
    return coerce_complex(p)


def parse_polynomial(text, variables, line=1, column=1):
    """Parse one expression in the given variables.

    Coefficients are exact :class:`Fraction` unless the imaginary unit occurs,
    in which case all coefficients become complex.
    """
    p = _Parser(tokenize(text, line, column), list(variables), line).parse()
    return _normalize(p)


def parse_scalar(text, line=1, column=1):
    p = parse_polynomial(text, [], line, column)
    return p.constant_term() if p else Fraction(0)


@dataclass
class SystemSpec:
    """A parsed system: generators in ``variables`` plus evaluation options."""

    variables: list
    generators: list
    point: tuple = None
    tolerance: float = 1e-4
    order: str = "lex"
    max_degree_override: int = None
    lines: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        n = len(self.variables)
        if self.point is None:
            self.point = (Fraction(0),) * n
        self.point = tuple(self.point)
        if len(self.point) != n:
            raise ParseError(f"point has {len(self.point)} coordinates for {n} variables",
                             self.lines.get("point"))
        for g in self.generators:
            if g.nvars != n:
                raise ValueError("generator variable count does not match")
        if not self.tolerance > 0:
            raise ParseError("tolerance must be positive", self.lines.get("tolerance"))

    @property
    def nvars(self):
        return len(self.variables)

    @property
    def local_order(self):
        return LocalOrder(self.nvars, self.order)


def _split_list(body, line, column):
    """Comma-separated items with their starting columns."""
    out, start = [], 0
    depth = 0
    for k, ch in enumerate(body + ","):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            item = body[start:k]
            stripped = item.strip()
            if not stripped:
                raise ParseError("empty list item", line, column + start)
            out.append((stripped, column + start + len(item) - len(item.lstrip())))
            start = k + 1
    return out


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_HEADER = re.compile(r"\s*([A-Za-z_]+)\s*:")


def parse_system(text):
    """Parse a system file into a :class:`SystemSpec`.

    Raises
    ------
    ParseError
        With the 1-based line and column of the offending input.
    """
    sections = {}
    gens = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _HEADER.match(line)
        if m and m.group(1) in SECTIONS:
            name = m.group(1)
            if name in sections:
                raise ParseError(f"duplicate section {name!r}", lineno, m.start(1) + 1)
            body = line[m.end():]
            col = m.end() + 1
            sections[name] = (lineno, body, col)
            current = name
            if name == "gens" and body.strip():
                gens.append((lineno, body, col))
            continue
        if m and not line[:m.start(1)].strip() and current != "gens":
            raise ParseError(f"unknown section {m.group(1)!r}", lineno, m.start(1) + 1)
        if current != "gens":
            raise ParseError("text outside a section", lineno,
                             len(line) - len(line.lstrip()) + 1)
        gens.append((lineno, line, 1))

    if "vars" not in sections:
        raise ParseError("missing 'vars:' section", 1, 1)
    if "gens" not in sections:
        raise ParseError("missing 'gens:' section", 1, 1)

    lineno, body, col = sections["vars"]
    variables = []
    for name, c in _split_list(body, lineno, col):
        if not _IDENT.match(name) or name in IMAGINARY:
            raise ParseError(f"invalid variable name {name!r}", lineno, c)
        if name in variables:
            raise ParseError(f"duplicate variable {name!r}", lineno, c)
        variables.append(name)

    generators = [parse_polynomial(g, variables, ln, c) for ln, g, c in gens]
    if not generators:
        raise ParseError("no generators", sections["gens"][0], 1)

    kwargs = {"lines": {k: v[0] for k, v in sections.items()}}
    if "point" in sections:
        lineno, body, col = sections["point"]
        kwargs["point"] = tuple(parse_scalar(s, lineno, c) for s, c in _split_list(body, lineno, col))
    if "tolerance" in sections:
        lineno, body, col = sections["tolerance"]
        try:
            kwargs["tolerance"] = float(body.strip())
        except ValueError:
            raise ParseError(f"invalid tolerance {body.strip()!r}", lineno, col) from None
    if "order" in sections:
        lineno, body, col = sections["order"]
        if body.strip() not in ("lex", "grevlex"):
            raise ParseError("order must be 'lex' or 'grevlex'", lineno, col)
        kwargs["order"] = body.strip()
    if "max_degree" in sections:
        lineno, body, col = sections["max_degree"]
        if not body.strip().isdigit():
            raise ParseError("max_degree must be a non-negative integer", lineno, col)
        kwargs["max_degree_override"] = int(body.strip())
    return SystemSpec(variables, generators, **kwargs)


def format_system(spec):
    """Inverse of :func:`parse_system` up to whitespace and comments."""
    from .polynomial import format_polynomial, _format_scalar

    out = [f"vars: {', '.join(spec.variables)}"]
    out.append("point: " + ", ".join(_format_scalar(c) for c in spec.point))
    out.append(f"tolerance: {spec.tolerance!r}")
    out.append(f"order: {spec.order}")
    if spec.max_degree_override is not None:
        out.append(f"max_degree: {spec.max_degree_override}")
    out.append("gens:")
    order = spec.local_order
    out.extend("  " + format_polynomial(g, spec.variables, order) for g in spec.generators)
    return "\n".join(out) + "\n"
