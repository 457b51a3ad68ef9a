"""Degreewise enumeration of strongly stable ideals with prescribed Hilbert data."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Union

from .errors import MacaulayViolation
from .hilbert import hilbert_numerator, macaulay_growth, values_from_numerator
from .ideals import MonomialIdeal
from .ring import Exp, RingSpec, borel_move, enumerate_monomials, monomial_mul


@dataclass(frozen=True)
class FamilySpec:
    """A family target: Hilbert function values (window) or a source ideal,
    plus the largest degree where generators may appear."""

    ring: RingSpec
    target: Union[tuple[int, ...], MonomialIdeal]
    max_degree: int


def _target_values(spec: FamilySpec) -> list[int]:
    n = spec.ring.n
    if isinstance(spec.target, MonomialIdeal):
        upto = spec.max_degree + n + 2
        return values_from_numerator(hilbert_numerator(spec.target), n, upto)
    values = list(spec.target)
    if len(values) <= spec.max_degree:
        raise MacaulayViolation("target values must cover degrees up to max_degree")
    validate_hilbert_values(values, n)
    return values


def validate_hilbert_values(values, n: int) -> None:
    """Reject windows that no cyclic quotient can realize."""
    if not values or values[0] != 1:
        raise MacaulayViolation("a proper cyclic quotient has value 1 in degree 0")
    for d, v in enumerate(values):
        if v < 0 or v > comb(d + n - 1, n - 1):
            raise MacaulayViolation(f"value {v} impossible in degree {d}")
    for d in range(1, len(values) - 1):
        if values[d] == 0 and values[d + 1] != 0:
            raise MacaulayViolation(f"function restarts after vanishing in degree {d}")
        if values[d] and values[d + 1] > macaulay_growth(values[d], d):
            raise MacaulayViolation(
                f"growth {values[d]} -> {values[d + 1]} violates Macaulay's bound in degree {d}")


def _adjacent_successors(u: Exp) -> tuple[Exp, ...]:
    # moves toward earlier variables; enough for closure by transitivity
    return tuple(borel_move(u, j - 1, j) for j in range(1, len(u)) if u[j])


def borel_filters(n: int, d: int, forced: frozenset[Exp],
                  size: int | None = None) -> Iterator[frozenset[Exp]]:
    """All Borel-closed subsets of the degree-d monomials containing `forced`
    (and of the exact cardinality, when given), each exactly once."""
    monos = enumerate_monomials(n, d)  # lex-descending: successors come first
    succ = {u: _adjacent_successors(u) for u in monos}

    def rec(idx: int, chosen: set[Exp]) -> Iterator[frozenset[Exp]]:
        if size is not None:
            if len(chosen) > size or len(chosen) + (len(monos) - idx) < size:
                return
        if idx == len(monos):
            if size is None or len(chosen) == size:
                yield frozenset(chosen)
            return
        u = monos[idx]
        if all(s in chosen for s in succ[u]):
            chosen.add(u)
            yield from rec(idx + 1, chosen)
            chosen.discard(u)
        if u not in forced:
            yield from rec(idx + 1, chosen)

    yield from rec(0, set())


def _shadow(ring: RingSpec, layer: frozenset[Exp]) -> frozenset[Exp]:
    return frozenset(monomial_mul(u, v) for u in layer for v in ring.variables())


def enumerate_strongly_stable(spec: FamilySpec) -> Iterator[MonomialIdeal]:
    """Every strongly stable ideal matching the target values on their window,
    with minimal generators only in degrees <= max_degree."""
    ring = spec.ring
    n = ring.n
    values = _target_values(spec)
    top = len(values) - 1
    required = [comb(d + n - 1, n - 1) - values[d] for d in range(top + 1)]
    if required[0] != 0:
        raise MacaulayViolation("target leaves no room for a proper ideal")

    def rec(d: int, prev: frozenset[Exp], gens: tuple[Exp, ...]) -> Iterator[MonomialIdeal]:
        if d > top:
            yield MonomialIdeal(ring, gens)
            return
        shadow = _shadow(ring, prev)
        if d <= spec.max_degree:
            if required[d] < len(shadow):
                return
            for layer in borel_filters(n, d, shadow, required[d]):
                yield from rec(d + 1, layer, gens + tuple(sorted(layer - shadow)))
        else:
            if len(shadow) != required[d]:
                return
            yield from rec(d + 1, shadow, gens)

    yield from rec(1, frozenset(), ())


def all_strongly_stable(ring: RingSpec, max_degree: int) -> Iterator[MonomialIdeal]:
    """Every strongly stable ideal with minimal generators in degrees <= max_degree."""
    n = ring.n

    def rec(d: int, prev: frozenset[Exp], gens: tuple[Exp, ...]) -> Iterator[MonomialIdeal]:
        if d > max_degree:
            yield MonomialIdeal(ring, gens)
            return
        shadow = _shadow(ring, prev)
        for layer in borel_filters(n, d, shadow):
            yield from rec(d + 1, layer, gens + tuple(sorted(layer - shadow)))

    yield from rec(1, frozenset(), ())
