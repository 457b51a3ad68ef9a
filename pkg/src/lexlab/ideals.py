"""Monomial ideals by minimal generators; colon, saturation and Borel-fixedness."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistency
from .ring import (Exp, RingSpec, borel_move, monomial_colon, monomial_divides,
                   monomial_lcm, total_degree)


def minimal_generators(gens) -> tuple[Exp, ...]:
    """Drop generators divisible by another; result sorted lex-descending."""
    kept: list[Exp] = []
    for u in sorted(set(gens), key=lambda u: (sum(u), u)):
        if not any(monomial_divides(g, u) for g in kept):
            kept.append(u)
    kept.sort(reverse=True)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, canonically stored by its minimal generators.

    The empty generating set is the zero ideal; {1} is the unit ideal.
    Construction minimalizes, so equality is plain field equality.
    """

    ring: RingSpec
    gens: tuple[Exp, ...] = ()

    def __post_init__(self) -> None:
        for u in self.gens:
            if len(u) != self.ring.n or any(e < 0 for e in u):
                raise ValueError(f"bad exponent vector {u!r} for n={self.ring.n}")
        object.__setattr__(self, "gens", minimal_generators(self.gens))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return bool(self.gens) and not any(self.gens[-1])

    def contains(self, u: Exp) -> bool:
        return any(monomial_divides(g, u) for g in self.gens)

    def max_generator_degree(self) -> int:
        return max((total_degree(g) for g in self.gens), default=0)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(self.ring.monomial_str(g) for g in self.gens) + ")"


def maximal_ideal(ring: RingSpec) -> MonomialIdeal:
    return MonomialIdeal(ring, tuple(ring.variables()))


def minimalize(ring: RingSpec, gens) -> MonomialIdeal:
    return MonomialIdeal(ring, tuple(gens))


def contains(ideal: MonomialIdeal, u: Exp) -> bool:
    return ideal.contains(u)


def colon_by_monomial(ideal: MonomialIdeal, v: Exp) -> MonomialIdeal:
    return MonomialIdeal(ideal.ring, tuple(monomial_colon(g, v) for g in ideal.gens))


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.is_zero or b.is_zero:
        return MonomialIdeal(a.ring)
    gens = tuple(monomial_lcm(u, v) for u in a.gens for v in b.gens)
    return MonomialIdeal(a.ring, gens)


def colon(ideal: MonomialIdeal, other: MonomialIdeal) -> MonomialIdeal:
    """ideal : other, intersecting the colons by each generator of `other`."""
    if ideal.ring != other.ring:
        raise ValueError("colon of ideals over different rings")
    if other.is_zero:
        raise ValueError("colon by the zero ideal is undefined")
    result = None
    for v in other.gens:
        piece = colon_by_monomial(ideal, v)
        result = piece if result is None else intersect(result, piece)
    return result


def _saturate_by_colon(ideal: MonomialIdeal) -> MonomialIdeal:
    m = maximal_ideal(ideal.ring)
    cap = 10 * ideal.max_generator_degree() + 10
    current = ideal
    for _ in range(cap):
        nxt = colon(current, m)
        if nxt == current:
            return current
        current = nxt
    raise InternalInconsistency("saturation did not stabilize within the iteration cap")


def _saturate_stable(ideal: MonomialIdeal) -> MonomialIdeal:
    # for Borel-fixed ideals, saturating = setting the last variable to 1
    gens = tuple(g[:-1] + (0,) for g in ideal.gens)
    return MonomialIdeal(ideal.ring, gens)


def saturate(ideal: MonomialIdeal) -> MonomialIdeal:
    """The saturation with respect to the maximal ideal."""
    if ideal.is_zero or ideal.is_unit:
        return ideal
    if is_strongly_stable(ideal):
        fast = _saturate_stable(ideal)
        slow = _saturate_by_colon(ideal)
        if fast != slow:
            raise InternalInconsistency(
                f"saturation paths disagree on {ideal}: {fast} vs {slow}")
        return fast
    return _saturate_by_colon(ideal)


def strong_stability_witness(ideal: MonomialIdeal):
    """None when the ideal is strongly stable, else a failing (u, i, j) move.

    Checking the minimal generators suffices: a product inherits every move
    from its generator factor.
    """
    for u in ideal.gens:
        for j in range(len(u) - 1, 0, -1):
            if u[j] == 0:
                continue
            for i in range(j - 1, -1, -1):
                if not ideal.contains(borel_move(u, i, j)):
                    return (u, i, j)
    return None


def is_strongly_stable(ideal: MonomialIdeal) -> bool:
    return strong_stability_witness(ideal) is None


def graded_generator_counts(ideal: MonomialIdeal) -> dict[int, int]:
    counts: dict[int, int] = {}
    for g in ideal.gens:
        d = total_degree(g)
        counts[d] = counts.get(d, 0) + 1
    return dict(sorted(counts.items()))


def depth_positive_stable(ideal: MonomialIdeal) -> bool:
    """For a strongly stable ideal: does the quotient have positive depth?

    Equivalent to the last variable missing from every minimal generator,
    and cross-checked against the ideal being saturated.
    """
    if not is_strongly_stable(ideal):
        raise ValueError("depth_positive_stable requires a strongly stable ideal")
    answer = all(g[-1] == 0 for g in ideal.gens)
    if answer != (saturate(ideal) == ideal):
        raise InternalInconsistency(
            f"last-variable depth criterion disagrees with saturation on {ideal}")
    return answer
