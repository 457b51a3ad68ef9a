"""Exact integer linear algebra: fraction-free elimination for matrix ranks."""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def fraction_free_rank(rows) -> int:
    """Rank over Q of an integer matrix, by Bareiss one-step elimination.

    Intermediate entries are minors of the input, so every division below is
    exact and everything stays in (arbitrary-precision) integers.
    """
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        best = None
        for r in range(rank, len(m)):
            v = m[r][c]
            if v and (best is None or abs(v) < abs(m[best][c])):
                best = r
                if abs(v) == 1:
                    break
        if best is None:
            continue
        m[rank], m[best] = m[best], m[rank]
        piv_row = m[rank]
        piv = piv_row[c]
        for r in range(rank + 1, len(m)):
            row = m[r]
            f = row[c]
            for j in range(c, ncols):
                row[j] = (piv * row[j] - f * piv_row[j]) // prev
        prev = piv
        rank += 1
        if rank == len(m):
            break
    return rank


def rational_rows_to_int(rows) -> list[list[int]]:
    """Clear denominators row by row and strip common content."""
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in fr]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def sparse_rank(cells, nrows: int, ncols: int) -> int:
    """Rank of a sparse integer matrix given as (row, col, value) triples.

    Splits into connected components first; each component is eliminated
    independently, which keeps the dense work proportional to the block sizes.
    """
    cells = [(r, c, v) for r, c, v in cells if v]
    if not cells:
        return 0

    parent: dict[tuple[str, int], tuple[str, int]] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for r, c, _ in cells:
        union(("r", r), ("c", c))

    groups: dict[tuple[str, int], list[tuple[int, int, int]]] = {}
    for r, c, v in cells:
        groups.setdefault(find(("r", r)), []).append((r, c, v))

    total = 0
    for block in groups.values():
        rids = sorted({r for r, _, _ in block})
        cids = sorted({c for _, c, _ in block})
        ridx = {r: i for i, r in enumerate(rids)}
        cidx = {c: i for i, c in enumerate(cids)}
        dense = [[0] * len(cids) for _ in rids]
        for r, c, v in block:
            dense[ridx[r]][cidx[c]] += v
        total += fraction_free_rank(dense)
    return total
