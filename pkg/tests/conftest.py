"""Shared test helpers: seeded random functions and independent oracles.

The oracles here are deliberately separate implementations (textbook Fraction
elimination, plain zero-set enumeration) so package results are checked
against code that does not share their algorithmic shortcuts.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from johnson_eigen import JohnsonParams, SparseFunction
from johnson_eigen.spectral import EigenspaceBasis


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_rational(rng, lo=-9, hi=9, max_den=9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_member(space: EigenspaceBasis, rng) -> SparseFunction:
    """Random nonzero rational combination of the eigenspace basis columns."""
    while True:
        coeffs = [random_rational(rng) for _ in range(space.dimension)]
        if any(coeffs):
            f = space.member(coeffs)
            if not f.is_zero():
                return f


def random_sparse_function(params: JohnsonParams, rng, density=0.4) -> SparseFunction:
    entries = {}
    for x in params.vertices():
        if rng.random() < density:
            v = rng.randint(-5, 5)
            if v:
                entries[x] = v
    return SparseFunction(params, entries)


def block_symmetrized_function(params: JohnsonParams, rng) -> SparseFunction:
    """Random function constant on orbits of coordinate blocks.

    Coordinates are split into random blocks and the value depends only on
    how many ones fall in each block, so all within-block reductions vanish.
    Useful to exercise the nontrivial branch of zero-pair transitivity.
    """
    n = params.n
    coords = list(range(n))
    rng.shuffle(coords)
    blocks = []
    pos = 0
    while pos < n:
        size = min(rng.randint(1, 3), n - pos)
        blocks.append(coords[pos : pos + size])
        pos += size
    values: dict[tuple, int] = {}
    entries = {}
    for x in params.vertices():
        profile = tuple(sum((x >> c) & 1 for c in b) for b in blocks)
        if profile not in values:
            values[profile] = rng.randint(-4, 4)
        if values[profile]:
            entries[x] = values[profile]
    return SparseFunction(params, entries)


# -- independent oracles ------------------------------------------------------

def oracle_rank(rows) -> int:
    """Textbook Gaussian elimination over Fractions; rows is a list of sequences."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][c]
        m[rank] = [x / pv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _oracle_reduce_row(echelon, row):
    """Reduce an integer row against stored (row, pivot) pairs; None if dependent."""
    cur = list(row)
    for erow, p in echelon:
        if cur[p]:
            f, pv = cur[p], erow[p]
            cur = [pv * a - f * b for a, b in zip(cur, erow)]
    g = 0
    for x in cur:
        g = math.gcd(g, x)
        if g == 1:
            break
    if g == 0:
        return None
    return [x // g for x in cur] if g > 1 else cur


def exhaustive_min_support(space: EigenspaceBasis) -> int:
    """Unpruned zero-set enumeration: the largest row subset of rank < d.

    Every nonzero member's zero set has rank at most d-1 and conversely every
    such subset is contained in some member's zero set, so the minimum
    support is N minus the largest feasible subset size. No incumbent
    pruning, no rank shortcut: only the definitional cutoff at rank d.
    """
    basis = space.basis
    nverts, d = basis.rows, basis.cols
    rows = []
    for r in range(nverts):
        row = basis.row(r)
        den = math.lcm(*(x.denominator for x in row))
        rows.append([int(x * den) for x in row])
    best = [0]

    def visit(k, echelon, size):
        if k == nverts:
            best[0] = max(best[0], size)
            return
        reduced = _oracle_reduce_row(echelon, rows[k])
        if reduced is None:
            visit(k + 1, echelon, size + 1)
        elif len(echelon) + 1 <= d - 1:
            p = next(j for j, x in enumerate(reduced) if x)
            echelon.append((reduced, p))
            visit(k + 1, echelon, size + 1)
            echelon.pop()
        visit(k + 1, echelon, size)

    visit(0, [], 0)
    return nverts - best[0]


def dense_adjacency_by_definition(params: JohnsonParams):
    """Adjacency matrix built from the pairwise intersection rule only."""
    verts = list(params.vertices())
    return [
        [1 if x != y and (x & y).bit_count() == params.w - 1 else 0 for y in verts]
        for x in verts
    ], verts


def pascal_table(limit: int):
    """Binomial table up to row `limit` built by Pascal's rule alone."""
    table = [[1]]
    for n in range(1, limit + 1):
        prev = table[-1]
        row = [1]
        for k in range(1, n):
            row.append(prev[k - 1] + prev[k])
        row.append(1)
        table.append(row)
    return table


def colex_subsets(n: int, w: int):
    """All w-subsets of {0..n-1} sorted co-lexicographically, as element tuples."""
    return sorted(itertools.combinations(range(n), w), key=lambda s: tuple(reversed(s)))
