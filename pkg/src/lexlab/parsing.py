"""Text input: rings, monomials, polynomials and comma-separated ideals."""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .ideals import MonomialIdeal
from .ring import Exp, Poly, RingSpec

_TOKEN = re.compile(r"(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[\^*+\-])|(?P<ws>\s+)|(?P<bad>.)")


def parse_ring(names: str) -> RingSpec:
    parts = [p.strip() for p in names.split(",") if p.strip()]
    if not parts:
        raise ParseError("no variable names given")
    try:
        return RingSpec(len(parts), tuple(parts))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _tokens(text: str):
    for m in _TOKEN.finditer(text):
        if m.lastgroup == "ws":
            continue
        if m.lastgroup == "bad":
            raise ParseError(f"unexpected character {m.group()!r}", m.start())
        yield (m.lastgroup, m.group(), m.start())
    yield ("end", "", len(text))


def parse_polynomial(text: str, ring: RingSpec) -> Poly:
    """Grammar: ['-'] term (('+'|'-') term)*, term = factor ('*' factor)*,
    factor = number | name ['^' exponent]."""
    toks = list(_tokens(text))
    pos = 0

    def peek():
        return toks[pos]

    def advance():
        nonlocal pos
        tok = toks[pos]
        pos += 1
        return tok

    var_index = {name: i for i, name in enumerate(ring.names)}

    def parse_factor() -> tuple[Exp, Fraction]:
        kind, value, at = advance()
        if kind == "num":
            return ring.unit_monomial(), Fraction(value.replace(" ", ""))
        if kind != "name":
            raise ParseError("expected a coefficient or variable", at)
        if value not in var_index:
            raise ParseError(f"unknown variable {value!r}", at)
        exp = 1
        if peek()[0] == "op" and peek()[1] == "^":
            advance()
            kind2, value2, at2 = advance()
            if kind2 != "num" or "/" in value2:
                raise ParseError("exponent must be a non-negative integer", at2)
            exp = int(value2)
        e = [0] * ring.n
        e[var_index[value]] = exp
        return tuple(e), Fraction(1)

    def parse_term() -> tuple[Exp, Fraction]:
        mono, coeff = parse_factor()
        while peek()[0] == "op" and peek()[1] == "*":
            advance()
            m2, c2 = parse_factor()
            mono = tuple(a + b for a, b in zip(mono, m2))
            coeff *= c2
        return mono, coeff

    terms: dict[Exp, Fraction] = {}
    sign = Fraction(1)
    kind, value, at = peek()
    if kind == "op" and value == "-":
        advance()
        sign = Fraction(-1)
    elif kind == "op":
        raise ParseError(f"term cannot start with {value!r}", at)
    while True:
        mono, coeff = parse_term()
        terms[mono] = terms.get(mono, Fraction(0)) + sign * coeff
        kind, value, at = peek()
        if kind == "end":
            break
        if kind != "op" or value not in "+-":
            raise ParseError(f"expected '+' or '-', got {value!r}", at)
        advance()
        sign = Fraction(1) if value == "+" else Fraction(-1)
    return Poly(ring.n, terms)


def parse_monomial(text: str, ring: RingSpec) -> Exp:
    poly = parse_polynomial(text, ring)
    if len(poly.terms) != 1:
        raise ParseError(f"{text.strip()!r} is not a monomial")
    (mono, coeff), = poly.terms.items()
    if coeff != 1:
        raise ParseError(f"{text.strip()!r} is not a monomial (coefficient {coeff})")
    return mono


def parse_ideal(text: str, ring: RingSpec):
    """Comma-separated generators.  Pure monomial input yields a MonomialIdeal;
    anything with more than one term per generator yields a polynomial list."""
    parts = [p for p in (s.strip() for s in text.split(",")) if p]
    if not parts:
        return MonomialIdeal(ring)
    polys = [parse_polynomial(p, ring) for p in parts]
    if all(len(p.terms) <= 1 for p in polys):
        gens = tuple(next(iter(p.terms)) for p in polys if not p.is_zero())
        return MonomialIdeal(ring, gens)
    return polys


def parse_window(text: str):
    m = re.fullmatch(r"\s*(-?\d+)\s*:\s*(-?\d+)\s*", text)
    if not m:
        raise ParseError(f"window must look like lo:hi, got {text!r}")
    return int(m.group(1)), int(m.group(2))
