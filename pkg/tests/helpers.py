"""Shared test oracles and samplers.

The oracles here are deliberately independent of the library: plain
enumeration, definition-level comparators and finite differencing.
"""

import random
from itertools import product
from math import comb

from lexlab import MonomialIdeal, RingSpec


# -- brute-force monomial enumeration and Hilbert counts -----------------------


def all_exponents(n, d):
    """Every exponent tuple of total degree d, by brute filtering."""
    return [e for e in product(range(d + 1), repeat=n) if sum(e) == d]


def divides(u, v):
    return all(a <= b for a, b in zip(u, v))


def brute_quotient_dim(ideal, d):
    """dim (R/I)_d by counting standard monomials."""
    gens = ideal.gens
    return sum(1 for e in all_exponents(ideal.ring.n, d)
               if not any(divides(g, e) for g in gens))


def brute_ideal_dim(ideal, d):
    n = ideal.ring.n
    return comb(d + n - 1, n - 1) - brute_quotient_dim(ideal, d)


def numerator_from_values(values, n):
    """Series numerator from quotient dimensions: convolve with (1-t)^n."""
    coeffs = []
    for k in range(len(values)):
        c = sum((-1) ** i * comb(n, i) * values[k - i] for i in range(min(k, n) + 1))
        coeffs.append(c)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


# -- definition-level order comparators ----------------------------------------


def lex_greater(u, v):
    for a, b in zip(u, v):
        if a != b:
            return a > b
    return False


def degrevlex_greater(u, v):
    if sum(u) != sum(v):
        return sum(u) > sum(v)
    for a, b in zip(reversed(u), reversed(v)):
        if a != b:
            return a < b
    return False


# -- samplers -------------------------------------------------------------------


def random_monomial(rng, n, max_deg, min_deg=1):
    d = rng.randint(min_deg, max_deg)
    e = [0] * n
    for _ in range(d):
        e[rng.randrange(n)] += 1
    return tuple(e)


def random_ideal(rng, ring, max_gens=4, max_deg=3):
    count = rng.randint(1, max_gens)
    gens = tuple(random_monomial(rng, ring.n, max_deg) for _ in range(count))
    return MonomialIdeal(ring, gens)


def borel_closure(monomials, n):
    """Close a set of exponent tuples under the moves X_i * u / X_j, i < j."""
    todo = list(monomials)
    seen = set(todo)
    while todo:
        u = todo.pop()
        for j in range(n):
            if u[j] == 0:
                continue
            for i in range(j):
                v = list(u)
                v[i] += 1
                v[j] -= 1
                v = tuple(v)
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
    return seen


def random_stable_ideal(rng, ring, max_gens=3, max_deg=3):
    """A strongly stable ideal: Borel closure of a few random monomials."""
    seeds = [random_monomial(rng, ring.n, max_deg) for _ in range(rng.randint(1, max_gens))]
    return MonomialIdeal(ring, tuple(borel_closure(seeds, ring.n)))
