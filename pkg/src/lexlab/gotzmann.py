"""Lex-segment ideals, Gotzmann representations and saturated-lex structure.

The lex ideal of I is spanned degree by degree by initial lex segments of the
same dimensions as I.  Its saturation is controlled by the canonical binomial
representation of the Hilbert polynomial, from which the generators and the
vanishing pattern of local cohomology can be read off directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import InternalInconsistency, MacaulayViolation
from .hilbert import (HilbertData, hilbert_series, macaulay_growth, poly_eval,
                      poly_add, poly_mul, poly_sub, poly_trim, values_from_numerator)
from .ideals import MonomialIdeal, graded_generator_counts, saturate
from .ring import Exp, RingSpec, enumerate_monomials, monomial_mul


# -- Gotzmann representation of a Hilbert polynomial --------------------------


@dataclass(frozen=True)
class GotzmannData:
    """Exponents a_1 >= ... >= a_l of the binomial representation, plus the
    derived v-vector whose entries count exponents by codimension slot."""

    n: int
    a: tuple[int, ...]
    v: tuple[int, ...]   # v[i-1] is the i-th entry, i = 1..n-1
    h: int               # largest index with v_h != 0 (0 when empty)
    l: int               # number of binomial summands

    def to_json(self) -> dict:
        return {"a": list(self.a), "v": list(self.v), "h": self.h, "l": self.l}


def binomial_in_x(a: int, shift: int) -> tuple[Fraction, ...]:
    """Coefficients of binom(X + a - shift, a) as a polynomial in X."""
    coeffs: tuple = (Fraction(1),)
    for t in range(1, a + 1):
        coeffs = poly_mul(coeffs, (Fraction(t - shift), Fraction(1)))
        coeffs = tuple(c / t for c in coeffs)
    return tuple(coeffs)


def _as_fraction_poly(p) -> tuple[Fraction, ...]:
    if isinstance(p, HilbertData):
        p = p.polynomial
    if isinstance(p, (int, Fraction)):
        p = (p,)
    return poly_trim(tuple(Fraction(c) for c in p))


def gotzmann_representation(p, n: int) -> GotzmannData:
    """Canonical decomposition of a Hilbert polynomial into shifted binomials.

    Rejects polynomials of degree > n-2 (the v-vector has no slot for them)
    and anything that is not the Hilbert polynomial of a saturated quotient.
    """
    remainder = _as_fraction_poly(p)
    if len(remainder) - 1 > n - 2:
        raise MacaulayViolation(
            f"polynomial degree {len(remainder) - 1} too large for {n} variables")
    exponents: list[int] = []
    index = 1
    while remainder:
        a = len(remainder) - 1
        lead = remainder[-1] * factorial(a)
        if lead.denominator != 1 or lead <= 0:
            raise MacaulayViolation("not a Gotzmann-representable Hilbert polynomial")
        for _ in range(int(lead)):
            remainder = poly_trim(poly_sub(remainder, binomial_in_x(a, index - 1)))
            exponents.append(a)
            index += 1
        if remainder and len(remainder) - 1 >= a:
            raise MacaulayViolation("not a Gotzmann-representable Hilbert polynomial")
    a_seq = tuple(exponents)
    check: tuple = ()
    for i, ai in enumerate(a_seq):
        check = poly_add(check, binomial_in_x(ai, i))
    if poly_trim(check) != _as_fraction_poly(p):
        raise InternalInconsistency("binomial representation does not reproduce input")
    v = [0] * max(n - 1, 0)
    for ai in a_seq:
        v[n - ai - 2] += 1   # slot n - a_j - 1, stored 0-based
    h = max((i + 1 for i, entry in enumerate(v) if entry), default=0)
    return GotzmannData(n, a_seq, tuple(v), h, len(a_seq))


def saturated_lex_generators(data: GotzmannData, ring: RingSpec | None = None) -> MonomialIdeal:
    """The saturated lex ideal whose quotient has the represented polynomial."""
    ring = ring or RingSpec(data.n)
    if ring.n != data.n:
        raise ValueError("ring size does not match the representation")
    v = data.v
    gens = []
    for t in range(1, data.h + 1):
        exp = [0] * ring.n
        for s in range(t - 1):
            exp[s] = v[s]
        exp[t - 1] = v[t - 1] + (1 if t < data.h else 0)
        gens.append(tuple(exp))
    if data.h == 0:
        gens.append(ring.unit_monomial())  # empty representation: unit ideal
    return MonomialIdeal(ring, tuple(gens))


def predict_lc_vanishing(data: GotzmannData) -> frozenset[int]:
    """Cohomological indices i in 0..n-1 with vanishing local cohomology of the
    saturated lex quotient; read off zero entries of the v-vector."""
    vanishing = {0}
    for i in range(1, data.n):
        slot = data.n - i
        if slot > data.h or data.v[slot - 1] == 0:
            vanishing.add(i)
    return frozenset(vanishing)


# -- lex ideals ----------------------------------------------------------------


def _segment(n: int, d: int, size: int) -> tuple[Exp, ...]:
    monos = enumerate_monomials(n, d)
    if size > len(monos):
        raise MacaulayViolation(f"degree-{d} segment of size {size} exceeds dim R_d")
    return monos[:size]


def _segments_to_ideal(ring: RingSpec, ideal_dims: list[int]) -> MonomialIdeal:
    """Build the lex ideal from dim I_d for d = 0..D, checking consistency."""
    n = ring.n
    gens: list[Exp] = []
    prev: set[Exp] = set()
    for d, dim_ideal in enumerate(ideal_dims):
        if d == 0:
            if dim_ideal != 0:
                raise MacaulayViolation("a proper ideal has no degree-0 part")
            continue
        seg = set(_segment(n, d, dim_ideal))
        shadow = {monomial_mul(u, ring.variable(i)) for u in prev for i in range(n)}
        if not shadow <= seg:
            raise MacaulayViolation(
                f"values violate Macaulay growth between degrees {d - 1} and {d}")
        gens.extend(sorted(seg - shadow))
        prev = seg
    return MonomialIdeal(ring, tuple(gens))


def lex_ideal(ideal: MonomialIdeal) -> MonomialIdeal:
    """The lex-segment ideal with the same Hilbert function as `ideal`."""
    if ideal.is_unit:
        raise ValueError("lex ideal of the unit ideal is not defined")
    if ideal.is_zero:
        return ideal
    ring = ideal.ring
    n = ring.n
    data = hilbert_series(ideal)
    gotz = gotzmann_representation(data.polynomial, n)
    last_dev = 0
    for d in range(len(data.values)):
        if data.values[d] != data.poly_value(d):
            last_dev = d
    stop = max(gotz.l, last_dev, ideal.max_generator_degree()) + 1
    upto = stop + 2
    values = values_from_numerator(data.numerator, n, upto)
    dims = [comb(d + n - 1, n - 1) - values[d] for d in range(upto + 1)]
    result = _segments_to_ideal(ring, dims)
    if result.max_generator_degree() > stop:
        raise InternalInconsistency(
            f"lex ideal of {ideal} produced generators beyond the stopping degree")
    return result


def lex_ideal_from_values(ring: RingSpec, values) -> MonomialIdeal:
    """Lex ideal from raw Hilbert function values for degrees 0..len-1.

    Generators are discovered through the provided window only; the data is
    validated against Macaulay growth.
    """
    values = list(values)
    if not values or values[0] != 1:
        raise MacaulayViolation("Hilbert function of a proper cyclic quotient starts at 1")
    n = ring.n
    for d, v in enumerate(values):
        if v < 0 or v > comb(d + n - 1, n - 1):
            raise MacaulayViolation(f"value {v} out of range in degree {d}")
    for d in range(1, len(values) - 1):
        if values[d + 1] > macaulay_growth(values[d], d):
            raise MacaulayViolation(
                f"growth {values[d]} -> {values[d + 1]} violates Macaulay's bound in degree {d}")
    dims = [comb(d + n - 1, n - 1) - v for d, v in enumerate(values)]
    return _segments_to_ideal(ring, dims)


def is_gotzmann(ideal: MonomialIdeal) -> bool:
    """Same number of minimal generators in each degree as the lex ideal."""
    if ideal.is_unit:
        raise ValueError("Gotzmann test needs a proper ideal")
    return graded_generator_counts(ideal) == graded_generator_counts(lex_ideal(ideal))


# -- the exchange property -----------------------------------------------------


@dataclass(frozen=True)
class ExchangeReport:
    holds: bool
    left: MonomialIdeal    # lex of the saturation
    right: MonomialIdeal   # saturation of the lex ideal

    def to_json(self) -> dict:
        return {"holds": self.holds, "left": str(self.left), "right": str(self.right)}


def exchange_property(ideal: MonomialIdeal) -> ExchangeReport:
    """Compare lex-then-saturate against saturate-then-lex, exactly."""
    if ideal.is_unit:
        raise ValueError("exchange property needs a proper ideal")
    sat = saturate(ideal)
    right = saturate(lex_ideal(ideal))
    if sat.is_unit:
        left = sat  # artinian quotient: both sides are the unit ideal
    else:
        left = lex_ideal(sat)
    return ExchangeReport(left == right, left, right)
