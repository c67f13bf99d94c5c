"""Subspace arithmetic over a prime field GF(p).

Subspaces of GF(p)^d are stored as their reduced row echelon basis: a tuple
of row tuples, pivots strictly increasing, every pivot equal to 1 and the
only non-zero entry of its column.  The representation is unique, so two
subspaces are equal exactly when their tuples are equal.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

Row = tuple[int, ...]
Subspace = tuple[Row, ...]


def rref(rows: Iterable[Sequence[int]], p: int) -> Subspace:
    """Reduced row echelon basis of the span of ``rows`` over GF(p)."""
    work = [[x % p for x in r] for r in rows]
    if not work:
        return ()
    ncols = len(work[0])
    lead = 0
    for col in range(ncols):
        pivot = next((r for r in range(lead, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[lead], work[pivot] = work[pivot], work[lead]
        inv = pow(work[lead][col], -1, p)
        work[lead] = [(x * inv) % p for x in work[lead]]
        for r in range(len(work)):
            if r != lead and work[r][col]:
                f = work[r][col]
                work[r] = [(a - f * b) % p for a, b in zip(work[r], work[lead])]
        lead += 1
        if lead == len(work):
            break
    return tuple(tuple(r) for r in work[:lead])


def span_sum(a: Subspace, b: Subspace, p: int) -> Subspace:
    return rref(a + b, p)


def intersect(a: Subspace, b: Subspace, p: int, dim: int) -> Subspace:
    """Intersection of two subspaces (Zassenhaus)."""
    if not a or not b:
        return ()
    zero = (0,) * dim
    block = [r + r for r in a] + [r + zero for r in b]
    reduced = rref(block, p)
    meet = [r[dim:] for r in reduced if not any(r[:dim])]
    return rref(meet, p)


def contains(big: Subspace, small: Subspace, p: int) -> bool:
    return span_sum(big, small, p) == big


def full_space(dim: int) -> Subspace:
    return tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))


def iter_subspaces(p: int, dim: int, rank: int) -> Iterator[Subspace]:
    """All ``rank``-dimensional subspaces of GF(p)^dim in RREF lexicographic order."""
    out = []
    for pivots in combinations(range(dim), rank):
        free = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, dim) if c not in pivots]
        for values in product(range(p), repeat=len(free)):
            rows = [[0] * dim for _ in range(rank)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, c), v in zip(free, values):
                rows[i][c] = v
            out.append(tuple(tuple(r) for r in rows))
    return iter(sorted(out))


def gaussian_binomial(dim: int, rank: int, q: int) -> int:
    """Number of ``rank``-dimensional subspaces of a ``dim``-dimensional space over GF(q)."""
    if rank < 0 or rank > dim:
        return 0
    num = den = 1
    for i in range(rank):
        num *= q ** (dim - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_count(dim: int, q: int) -> int:
    return sum(gaussian_binomial(dim, r, q) for r in range(dim + 1))
