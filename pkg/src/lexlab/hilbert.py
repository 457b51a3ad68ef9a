"""Exact Hilbert functions, series numerators, Hilbert polynomials and
Macaulay's binomial calculus for monomial quotients R/I.

The series numerator N(t) with HS(R/I, t) = N(t) / (1-t)^n is unique, so the
two implemented strategies (variable-pivot recursion and inclusion-exclusion
over generator lcms) must produce identical coefficient vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import GeneratorCapExceeded, InternalInconsistency
from .ideals import MonomialIdeal, minimal_generators
from .ring import Exp, RingSpec, monomial_lcm, total_degree

# -- small dense integer/rational polynomial helpers (coefficient lists) -----


def poly_trim(p) -> tuple:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(p)


def poly_add(p, q) -> tuple:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return poly_trim(out)


def poly_sub(p, q) -> tuple:
    return poly_add(p, [-c for c in q])


def poly_mul(p, q) -> tuple:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_shift(p, k: int) -> tuple:
    """Multiply by t^k."""
    return poly_trim((0,) * k + tuple(p))


def poly_eval(p, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(tuple(p)):
        acc = acc * x + c
    return acc


# -- numerators ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _numerator_pivot(n: int, gens: tuple[Exp, ...]) -> tuple[int, ...]:
    if not gens:
        return (1,)
    if not any(gens[-1]):
        return ()  # unit ideal, zero quotient
    counts = [0] * n
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    if max(counts) <= 1:
        # pairwise coprime generators: the quotient is a complete intersection
        num = (1,)
        for g in gens:
            num = poly_mul(num, poly_sub((1,), poly_shift((1,), total_degree(g))))
        return num
    pivot = counts.index(max(counts))
    var = tuple(1 if t == pivot else 0 for t in range(n))
    plus = minimal_generators([var] + [g for g in gens if g[pivot] == 0])
    quotient = minimal_generators(
        tuple(e - 1 if t == pivot and e else e for t, e in enumerate(g)) for g in gens)
    return poly_add(_numerator_pivot(n, plus),
                    poly_shift(_numerator_pivot(n, quotient), 1))


def _numerator_inclusion_exclusion(n: int, gens: tuple[Exp, ...]) -> tuple[int, ...]:
    mu = len(gens)
    if mu > 20:
        raise GeneratorCapExceeded(
            f"inclusion-exclusion over {mu} generators needs 2^{mu} subsets")
    lcm_deg = [0] * (1 << mu)
    lcms: list[Exp] = [(0,) * n] * (1 << mu)
    coeffs = [0] * (sum(total_degree(g) for g in gens) + 1)
    coeffs[0] = 1
    for mask in range(1, 1 << mu):
        low = (mask & -mask).bit_length() - 1
        lcms[mask] = monomial_lcm(lcms[mask ^ (1 << low)], gens[low])
        lcm_deg[mask] = total_degree(lcms[mask])
        sign = -1 if bin(mask).count("1") % 2 else 1
        coeffs[lcm_deg[mask]] += sign
    return poly_trim(coeffs)


def hilbert_numerator(ideal: MonomialIdeal, strategy: str = "pivot") -> tuple[int, ...]:
    """N(t) with HS(R/I, t) = N(t)/(1-t)^n; empty tuple means N = 0."""
    if strategy == "pivot":
        return _numerator_pivot(ideal.ring.n, ideal.gens)
    if strategy == "inclusion-exclusion":
        return _numerator_inclusion_exclusion(ideal.ring.n, ideal.gens)
    raise ValueError(f"unknown strategy {strategy!r}")


def values_from_numerator(num, n: int, upto: int) -> list[int]:
    """Expand N(t)/(1-t)^n to the coefficient list for degrees 0..upto."""
    out = []
    for d in range(upto + 1):
        v = 0
        for k, c in enumerate(num):
            if c and k <= d:
                v += c * comb(d - k + n - 1, n - 1)
        out.append(v)
    return out


def hilbert_function(ideal: MonomialIdeal, d: int, strategy: str = "pivot") -> int:
    """dim_K (R/I)_d."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    num = hilbert_numerator(ideal, strategy)
    return values_from_numerator(num, ideal.ring.n, d)[d]


# -- Hilbert series data ------------------------------------------------------


@dataclass(frozen=True)
class HilbertData:
    """Window of Hilbert function values plus the exact rational-series data."""

    values: tuple[int, ...]              # dim (R/I)_d for d = 0..D
    numerator: tuple[int, ...]           # N(t) coefficients
    polynomial: tuple[Fraction, ...]     # P with P(d) = values[d] for d >= d0
    d0: int

    def poly_value(self, d) -> Fraction:
        return poly_eval(self.polynomial, Fraction(d))

    def to_json(self) -> dict:
        return {
            "values": list(self.values),
            "numerator": list(self.numerator),
            "polynomial": [[c.numerator, c.denominator] for c in self.polynomial],
            "d0": self.d0,
        }


def _interpolate(points) -> tuple[Fraction, ...]:
    """Lagrange interpolation through exact points [(x, y), ...]."""
    result: tuple = ()
    for i, (xi, yi) in enumerate(points):
        basis: tuple = (Fraction(1),)
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            basis = poly_mul(basis, (Fraction(-xj), Fraction(1)))
            denom *= Fraction(xi - xj)
        scaled = tuple(c * Fraction(yi) / denom for c in basis)
        result = poly_add(result, scaled)
    return tuple(Fraction(c) for c in result)


def hilbert_series(ideal: MonomialIdeal, window: int | None = None) -> HilbertData:
    """Exact series data; `window` is the top degree of the value table."""
    n = ideal.ring.n
    if window is None:
        window = ideal.max_generator_degree() + n
    if window < ideal.max_generator_degree() + n:
        raise ValueError("window must reach max generator degree + n")
    num = hilbert_numerator(ideal)
    d0 = max(len(num) - 1, 0)
    upto = max(window, d0 + n + 2)
    values = values_from_numerator(num, n, upto)
    pts = [(d, values[d]) for d in range(d0, d0 + n)]
    poly = poly_trim(_interpolate(pts))
    for d in range(d0, upto + 1):
        if poly_eval(poly, d) != values[d]:
            raise InternalInconsistency("Hilbert polynomial does not match values")
    return HilbertData(tuple(values[: window + 1]), num, poly, d0)


def dimension(ideal: MonomialIdeal) -> int:
    """Krull dimension of R/I, read off the pole order of the series at t=1."""
    if ideal.is_unit:
        raise ValueError("the zero ring has no dimension here")
    num = hilbert_numerator(ideal)
    _, vanishing = _strip_one_minus_t(num)
    return ideal.ring.n - vanishing


def multiplicity(ideal: MonomialIdeal) -> int:
    """Normalized leading coefficient of the Hilbert polynomial (length if artinian)."""
    if ideal.is_unit:
        raise ValueError("the zero ring has no multiplicity here")
    num = hilbert_numerator(ideal)
    reduced, _ = _strip_one_minus_t(num)
    e = sum(reduced)
    if e <= 0:
        raise InternalInconsistency("multiplicity must be positive for a proper ideal")
    return e


def _strip_one_minus_t(num) -> tuple[tuple[int, ...], int]:
    """Divide out (1-t) as often as possible; returns (quotient, exponent)."""
    current = poly_trim(num)
    count = 0
    while current and sum(current) == 0:
        q = []
        acc = 0
        for c in current[:-1]:
            acc += c
            q.append(acc)
        current = poly_trim(q)
        count += 1
    return current, count


# -- Macaulay binomial calculus -----------------------------------------------


@dataclass(frozen=True)
class MacaulayRep:
    """Greedy binomial decomposition of an integer in a fixed degree."""

    degree: int
    binomials: tuple[tuple[int, int], ...]  # (k_i, i), i descending from degree

    def value(self) -> int:
        return sum(comb(k, i) for k, i in self.binomials)

    def growth(self) -> int:
        return sum(comb(k + 1, i + 1) for k, i in self.binomials)


def macaulay_rep(a: int, d: int) -> MacaulayRep:
    if d < 1:
        raise ValueError("Macaulay representations need degree >= 1")
    if a < 0:
        raise ValueError("cannot represent a negative integer")
    rest = a
    parts: list[tuple[int, int]] = []
    i = d
    while rest > 0:
        k = i
        while comb(k + 1, i) <= rest:
            k += 1
        parts.append((k, i))
        rest -= comb(k, i)
        i -= 1
    rep = MacaulayRep(d, tuple(parts))
    if rep.value() != a:
        raise InternalInconsistency(f"binomial decomposition of {a} in degree {d} failed")
    return rep


def macaulay_growth(a: int, d: int) -> int:
    """Largest admissible value of the Hilbert function in degree d+1 given a in d."""
    return macaulay_rep(a, d).growth()
