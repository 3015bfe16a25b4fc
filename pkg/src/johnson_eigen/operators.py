"""Structural operators between Johnson graphs: induction, reduction, zero-pair partition.

Induction I(f) sums f over weight-i subsets of each target vertex and shifts
the eigenvalue by (w-i)(n-i-w). Reduction fixes an ordered coordinate pair
(j1, j2), takes the difference of f over the two ways of placing a single
one there, and lands in J(n-2, w-1) one spectral index lower. Coordinates of
the smaller graph are the survivors renumbered in order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError
from .johnson import JohnsonParams, SparseFunction


def induce(f: SparseFunction, target_w: int) -> SparseFunction:
    """Upward induction from J(n,i) to J(n,w): g(x) = sum of f over weight-i subsets of x.

    A lambda-eigenfunction of J(n,i) induces a (lambda + (w-i)(n-i-w))-eigenfunction
    of J(n,w); the result may legitimately be zero.
    """
    n, i = f.params.n, f.params.w
    if target_w < i:
        raise ParameterError(f"upward induction needs target weight >= {i}, got {target_w}")
    if target_w > n:
        raise ParameterError(f"target weight {target_w} exceeds n={n}")
    target = JohnsonParams(n, target_w)
    extra = target_w - i
    acc: dict[int, Fraction] = {}
    for y, v in f.entries.items():
        comp = [c for c in range(n) if not (y >> c) & 1]
        for add in itertools.combinations(comp, extra):
            x = y
            for c in add:
                x |= 1 << c
            s = acc.get(x, 0) + v
            if s:
                acc[x] = s
            else:
                del acc[x]
    return SparseFunction(target, acc)


def induce_down_one(f: SparseFunction) -> SparseFunction:
    """One-step downward induction to J(n,w-1): g(x) = sum of f over supersets of x.

    Vanishes identically exactly when f is a (-w)-eigenfunction of J(n,w).
    """
    n, w = f.params.n, f.params.w
    if w == 0:
        raise ParameterError("cannot induce below weight 0")
    target = JohnsonParams(n, w - 1)
    acc: dict[int, Fraction] = {}
    for y, v in f.entries.items():
        ins = y
        while ins:
            abit = ins & -ins
            ins ^= abit
            x = y ^ abit
            s = acc.get(x, 0) + v
            if s:
                acc[x] = s
            else:
                del acc[x]
    return SparseFunction(target, acc)


def _delete_coordinate(mask: int, j: int) -> int:
    low = mask & ((1 << j) - 1)
    return low | ((mask >> (j + 1)) << j)


def reduce(f: SparseFunction, j1: int, j2: int) -> SparseFunction:
    """Reduction to J(n-2, w-1): difference of f over placing the single one at j1 vs j2.

    Only support vertices holding exactly one of j1, j2 contribute; the two
    coordinates are removed and the survivors renumbered order-preservingly.
    """
    n, w = f.params.n, f.params.w
    _check_reduction_coords(f.params, j1, j2)
    target = JohnsonParams(n - 2, w - 1)
    hi, lo = max(j1, j2), min(j1, j2)
    acc: dict[int, Fraction] = {}
    for x, v in f.entries.items():
        has1 = (x >> j1) & 1
        has2 = (x >> j2) & 1
        if has1 == has2:
            continue
        y = _delete_coordinate(_delete_coordinate(x, hi), lo)
        s = acc.get(y, 0) + (v if has1 else -v)
        if s:
            acc[y] = s
        else:
            del acc[y]
    return SparseFunction(target, acc)


def _check_reduction_coords(params: JohnsonParams, j1: int, j2: int) -> None:
    if params.w < 1 or params.n < 2:
        raise ParameterError(f"cannot reduce J({params.n},{params.w})")
    if params.w == params.n:
        raise ParameterError(f"reduction target J({params.n - 2},{params.w - 1}) does not exist")
    if j1 == j2:
        raise ParameterError("reduction needs two distinct coordinates")
    for j in (j1, j2):
        if not 0 <= j < params.n:
            raise ParameterError(f"coordinate {j} out of range 0..{params.n - 1}")


def iterated_reduce(f: SparseFunction, pairs) -> SparseFunction:
    """Compose reductions left to right; each pair indexes coordinates of the current graph."""
    for j1, j2 in pairs:
        f = reduce(f, j1, j2)
    return f


def survivor_coordinates(n: int, pairs) -> list[int]:
    """Original indices of the coordinates that survive iterated_reduce with these pairs.

    Position p of the final graph corresponds to original coordinate
    survivor_coordinates(n, pairs)[p], which is what lets reduction chains be
    stated against the coordinates of the starting graph.
    """
    survivors = list(range(n))
    for j1, j2 in pairs:
        if j1 == j2 or not (0 <= j1 < len(survivors)) or not (0 <= j2 < len(survivors)):
            raise ParameterError(f"bad reduction pair ({j1},{j2}) for {len(survivors)} coordinates")
        for j in sorted((j1, j2), reverse=True):
            del survivors[j]
    return survivors


def zero_pair(f: SparseFunction, j1: int, j2: int) -> bool:
    """True iff the (j1,j2) reduction of f vanishes; equivalently f is invariant
    under transposing the two coordinates."""
    return reduce(f, j1, j2).is_zero()


@dataclass(frozen=True)
class PartitionResult:
    """Coordinates grouped into maximal classes with all within-class reductions zero."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def t(self) -> int:
        return len(self.blocks)

    def singletons(self) -> list[int]:
        return sorted(b[0] for b in self.blocks if len(b) == 1)


def coordinate_partition(f: SparseFunction) -> PartitionResult:
    """Partition the coordinates by the zero-pair relation.

    The relation is transitive (two zero reductions sharing a coordinate force
    the third), so union-find over pairs in ascending order suffices and pairs
    already joined are skipped without re-testing.
    """
    n = f.params.n
    if f.params.w in (0, n):
        # single-vertex graph: every transposition fixes f
        return PartitionResult((tuple(range(n)),) if n else ())
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for j1 in range(n):
        for j2 in range(j1 + 1, n):
            r1, r2 = find(j1), find(j2)
            if r1 == r2:
                continue
            if zero_pair(f, j1, j2):
                if r1 > r2:
                    r1, r2 = r2, r1
                parent[r2] = r1
    groups: dict[int, list[int]] = {}
    for c in range(n):
        groups.setdefault(find(c), []).append(c)
    blocks = tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))
    return PartitionResult(blocks)
