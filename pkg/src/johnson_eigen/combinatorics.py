"""Binomials and the combinadic (co-lex) bijection between w-subsets and dense indices.

Vertices of J(n,w) are represented throughout the package as plain int
bitmasks over coordinates 0..n-1 (bit j set means coordinate j is a one).
The co-lex rank of a subset is computable without knowing n, which is why
this order is used both in memory and on disk.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator

from .errors import ParameterError

# A vertex must fit in one machine word.
MAX_COORDS = 64


def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k < 0 or k > n. Requires n >= 0."""
    if n < 0:
        raise ParameterError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def vertex_from_elements(elements: Iterable[int]) -> int:
    """Bitmask with the given coordinates set. Coordinates must be distinct and < MAX_COORDS."""
    mask = 0
    count = 0
    for e in elements:
        if not 0 <= e < MAX_COORDS:
            raise ParameterError(f"coordinate {e} out of range 0..{MAX_COORDS - 1}")
        mask |= 1 << e
        count += 1
    if mask.bit_count() != count:
        raise ParameterError("duplicate coordinates in vertex")
    return mask


def vertex_elements(mask: int) -> tuple[int, ...]:
    """Sorted coordinates set in the bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def rank_subset(mask: int) -> int:
    """Co-lex combinadic rank: sum of C(c_k, k) over the sorted 0-based elements c_1 < ... < c_w."""
    r = 0
    k = 1
    while mask:
        low = mask & -mask
        r += math.comb(low.bit_length() - 1, k)
        k += 1
        mask ^= low
    return r


def unrank_subset(r: int, n: int, w: int) -> int:
    """Inverse of rank_subset on J(n,w); returns the vertex bitmask of co-lex rank r."""
    if n > MAX_COORDS:
        raise ParameterError(f"n={n} exceeds the {MAX_COORDS}-coordinate limit")
    if not 0 <= r < math.comb(n, w):
        raise ParameterError(f"rank {r} out of range for C({n},{w})={math.comb(n, w)}")
    mask = 0
    k = w
    c = n
    while k > 0:
        # largest c with C(c, k) <= r picks the top remaining element
        c -= 1
        while math.comb(c, k) > r:
            c -= 1
        mask |= 1 << c
        r -= math.comb(c, k)
        k -= 1
    return mask


def vertices_in_rank_order(n: int, w: int) -> Iterator[int]:
    """All w-subsets of {0..n-1} as bitmasks, in co-lex (rank) order."""
    if n > MAX_COORDS:
        raise ParameterError(f"n={n} exceeds the {MAX_COORDS}-coordinate limit")
    if w < 0 or w > n:
        return
    yield from _colex_masks(n, w)


def _colex_masks(n, w):
    if w == 0:
        yield 0
        return
    for top in range(w - 1, n):
        bit = 1 << top
        for rest in _colex_masks(top, w - 1):
            yield rest | bit
