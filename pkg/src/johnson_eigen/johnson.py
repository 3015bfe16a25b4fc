"""Matrix-free model of the Johnson graph J(n,w) and sparse rational functions on it.

Two w-subsets are adjacent when they share exactly w-1 elements, so J(n,w)
is regular of degree w(n-w). Functions are stored sparsely: only nonzero
values are kept, all of them exact Fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from collections.abc import Iterable, Iterator, Mapping

from .combinatorics import MAX_COORDS, rank_subset, vertices_in_rank_order
from .errors import ParameterError, ParamsMismatchError

Rational = Fraction | int


@dataclass(frozen=True)
class JohnsonParams:
    """Parameters (n, w) of a Johnson graph; 0 <= w <= n <= 64."""

    n: int
    w: int

    def __post_init__(self):
        if not 0 <= self.w <= self.n:
            raise ParameterError(f"need 0 <= w <= n, got n={self.n}, w={self.w}")
        if self.n > MAX_COORDS:
            raise ParameterError(f"n={self.n} exceeds the {MAX_COORDS}-coordinate limit")

    @property
    def num_vertices(self) -> int:
        return math.comb(self.n, self.w)

    @property
    def degree(self) -> int:
        return self.w * (self.n - self.w)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def check_vertex(self, x: int) -> None:
        if x < 0 or x.bit_count() != self.w or x >> self.n:
            raise ParameterError(f"bitmask {x:#b} is not a vertex of J({self.n},{self.w})")

    def vertices(self) -> Iterator[int]:
        return vertices_in_rank_order(self.n, self.w)


class SparseFunction:
    """Exact-rational function on the vertices of one J(n,w), stored by support.

    Zero values are never stored, so the support is exactly the key set of
    ``entries``. Instances are treated as immutable values; arithmetic
    returns new functions.
    """

    __slots__ = ("params", "entries")

    def __init__(self, params: JohnsonParams, entries: Mapping[int, Rational] | Iterable[tuple[int, Rational]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        table: dict[int, Fraction] = {}
        for x, v in items:
            params.check_vertex(x)
            fv = Fraction(v)
            if fv:
                table[x] = fv
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "entries", table)

    def __setattr__(self, name, value):
        raise AttributeError("SparseFunction is immutable")

    @classmethod
    def zero(cls, params: JohnsonParams) -> "SparseFunction":
        return cls(params)

    @classmethod
    def constant(cls, params: JohnsonParams, value: Rational) -> "SparseFunction":
        return cls(params, ((x, value) for x in params.vertices()))

    def __call__(self, x: int) -> Fraction:
        return self.entries.get(x, Fraction(0))

    @property
    def support(self) -> list[int]:
        """Support vertices in rank order."""
        return sorted(self.entries, key=rank_subset)

    @property
    def support_size(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseFunction):
            return NotImplemented
        return self.params == other.params and self.entries == other.entries

    def __hash__(self):
        return hash((self.params, frozenset(self.entries.items())))

    def __add__(self, other: "SparseFunction") -> "SparseFunction":
        check_same_params(self, other)
        table = dict(self.entries)
        for x, v in other.entries.items():
            s = table.get(x, 0) + v
            if s:
                table[x] = s
            else:
                table.pop(x, None)
        return SparseFunction(self.params, table)

    def __sub__(self, other: "SparseFunction") -> "SparseFunction":
        return self + other.scale(-1)

    def __neg__(self) -> "SparseFunction":
        return self.scale(-1)

    def scale(self, c: Rational) -> "SparseFunction":
        c = Fraction(c)
        if not c:
            return SparseFunction.zero(self.params)
        return SparseFunction(self.params, ((x, v * c) for x, v in self.entries.items()))

    def total(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0))

    def __repr__(self):
        return f"SparseFunction(J({self.params.n},{self.params.w}), {self.support_size} nonzeros)"


def check_same_params(f: SparseFunction, g: SparseFunction) -> None:
    if f.params != g.params:
        raise ParamsMismatchError(f"functions live on J{(f.params.n, f.params.w)} and J{(g.params.n, g.params.w)}")


def adjacent(x: int, y: int, params: JohnsonParams) -> bool:
    """True iff the two vertices share exactly w-1 common ones."""
    params.check_vertex(x)
    params.check_vertex(y)
    return (x & y).bit_count() == params.w - 1


def johnson_distance(x: int, y: int, params: JohnsonParams) -> int:
    """|supp(x) \\ supp(y)|, which is half the Hamming distance."""
    params.check_vertex(x)
    params.check_vertex(y)
    return (x & ~y).bit_count()


def neighbors(x: int, params: JohnsonParams) -> list[int]:
    """All vertices x - a + b for a in supp(x), b outside; exactly w(n-w) of them."""
    params.check_vertex(x)
    comp = params.full_mask() & ~x
    out = []
    ins = x
    while ins:
        abit = ins & -ins
        ins ^= abit
        base = x ^ abit
        outs = comp
        while outs:
            bbit = outs & -outs
            outs ^= bbit
            out.append(base | bbit)
    return out


def apply_adjacency(f: SparseFunction) -> SparseFunction:
    """g(x) = sum of f over the neighbors of x, computed by scattering the support.

    The result's support is contained in supp(f) united with its neighborhood.
    """
    params = f.params
    comp_all = params.full_mask()
    acc: dict[int, Fraction] = {}
    for y, v in f.entries.items():
        comp = comp_all & ~y
        ins = y
        while ins:
            abit = ins & -ins
            ins ^= abit
            base = y ^ abit
            outs = comp
            while outs:
                bbit = outs & -outs
                outs ^= bbit
                x = base | bbit
                s = acc.get(x, 0) + v
                if s:
                    acc[x] = s
                else:
                    del acc[x]
    return SparseFunction(params, acc)
