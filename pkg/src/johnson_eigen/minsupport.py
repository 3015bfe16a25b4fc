"""Exact minimum-support search over an eigenspace, by two independent algorithms.

Both algorithms work with the N x d basis matrix, one row per vertex in rank
order. A nonzero member of the span is determined (up to scale) by its zero
set Z, a set of rows of rank at most d-1; the support is N minus the size of
the largest achievable zero set.

  - branch and bound: depth-first over vertices in rank order, deciding
    "forced zero" vs "free"; the forced rows' rank is maintained
    incrementally, branches die when it reaches d, and once it reaches d-1
    the kernel vector is unique and is measured directly.
  - hyperplane enumeration: every (d-1)-subset of rows spanning rank exactly
    d-1 determines a kernel normal; count the rows orthogonal to it.

The branch and bound is complete and is the authority; the hyperplane scan
can miss zero sets of rank below d-1 and serves as the independent confirmer.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .canonical import build_canonical, default_pairing, match_canonical, support_size_bound
from .errors import OracleDisagreementError, ParameterError, SizeBudgetError
from .exact_linalg import int_nullspace_scaled
from .johnson import JohnsonParams, SparseFunction
from .spectral import EigenspaceBasis, eigenspace_basis, is_eigenfunction

DEFAULT_NODE_BUDGET = 5_000_000
DEFAULT_SUBSET_BUDGET = 100_000
DEFAULT_WITNESS_CAP = 16


@dataclass
class SearchStats:
    nodes: int = 0
    subsets: int = 0
    elapsed: float = 0.0


@dataclass
class SearchReport:
    """Outcome of a minimum-support search.

    attained_by_canonical: the minimum equals the bound and at least one
    reported witness is a scalar multiple of a canonical function.
    all_witnesses_canonical: additionally every reported witness is one,
    i.e. the equality characterization held on everything the search found.
    Both stay None when optimality was not proven or matching was not run.
    """

    params: JohnsonParams
    i: int
    lam: int
    min_support: int | None
    witnesses: list[SparseFunction]
    bound: int
    attained_by_canonical: bool | None
    proven_optimal: bool
    algorithm: str
    all_witnesses_canonical: bool | None = None
    stats: SearchStats = field(default_factory=SearchStats)


def _scaled_int_rows(basis) -> list[tuple[int, ...]]:
    """Each basis row rescaled to coprime integers; zero sets are unchanged."""
    rows = []
    for r in range(basis.rows):
        row = basis.row(r)
        den = math.lcm(*(x.denominator for x in row)) if row else 1
        ints = [int(x * den) for x in row]
        g = math.gcd(*ints) if any(ints) else 1
        rows.append(tuple(x // max(g, 1) for x in ints))
    return rows


class _IntEchelon:
    """Incremental exact echelon over integer rows with push/pop semantics."""

    def __init__(self, width: int):
        self.width = width
        self.rows: list[tuple[int, ...]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row) -> tuple[int, ...]:
        """Reduce a row against the stored rows; () means dependent."""
        cur = list(row)
        for stored, p in zip(self.rows, self.pivots):
            f = cur[p]
            if f:
                sp = stored[p]
                cur = [sp * a - f * b for a, b in zip(cur, stored)]
        g = 0
        for x in cur:
            if x:
                g = math.gcd(g, x)
                if g == 1:
                    break
        if g == 0:
            return ()
        if g > 1:
            cur = [x // g for x in cur]
        return tuple(cur)

    def push(self, reduced: tuple[int, ...]) -> None:
        p = next(j for j, x in enumerate(reduced) if x)
        self.rows.append(reduced)
        self.pivots.append(p)

    def pop(self) -> None:
        self.rows.pop()
        self.pivots.pop()

    def kernel(self) -> list[tuple[int, ...]]:
        """Integer basis of the kernel of the stored rows (ambient dimension = width)."""
        return int_nullspace_scaled([list(r) for r in self.rows], self.width)


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b) if x and y)


def _witness_values(basis, coeff: tuple[int, ...]) -> tuple[Fraction, ...]:
    """Exact value vector basis @ coeff, normalized to coprime integers with a
    positive value at the lowest-rank support vertex."""
    vals = []
    for r in range(basis.rows):
        row = basis.row(r)
        vals.append(sum((x * c for x, c in zip(row, coeff) if x and c), Fraction(0)))
    den = math.lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    g = math.gcd(*ints)
    if g:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(Fraction(x) for x in ints)


class _WitnessPool:
    """Distinct minimum-support value vectors, deduplicated up to scalar."""

    def __init__(self, basis, cap: int):
        self.basis = basis
        self.cap = cap
        self.best: int | None = None
        self.vectors: dict[tuple, None] = {}

    def offer(self, support: int, coeff: tuple[int, ...]) -> None:
        if self.best is None or support < self.best:
            self.best = support
            self.vectors = {}
        if support == self.best and len(self.vectors) < 4 * self.cap:
            self.vectors.setdefault(_witness_values(self.basis, coeff), None)

    def final_vectors(self) -> list[tuple]:
        return sorted(self.vectors)[: self.cap]


def _functions_from_vectors(params: JohnsonParams, vectors) -> list[SparseFunction]:
    verts = list(params.vertices())
    return [
        SparseFunction(params, {x: v for x, v in zip(verts, vals) if v})
        for vals in vectors
    ]


def min_support_bnb(
    space: EigenspaceBasis,
    node_budget: int = DEFAULT_NODE_BUDGET,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    upper_bound_hint: int | None = None,
) -> SearchReport:
    """Exact minimum support over all nonzero members of the eigenspace.

    Complete search: every zero pattern of a nonzero member corresponds to
    exactly one root-to-leaf path, the prune on forced rank d is definitional,
    the prune on frees > incumbent can only discard patterns with strictly
    larger support, and at rank d-1 the unique kernel vector is measured
    exactly, so ties at the incumbent are never lost. If the node budget runs
    out the best value found so far is returned flagged as not proven.
    """
    basis = space.basis
    nverts, d = basis.rows, basis.cols
    if d < 1:
        raise ParameterError("eigenspace is empty; nothing to search")
    t0 = time.perf_counter()
    rows = _scaled_int_rows(basis)
    ech = _IntEchelon(d)
    pool = _WitnessPool(basis, witness_cap)
    stats = SearchStats()
    incumbent = upper_bound_hint if upper_bound_hint is not None else nverts + 1
    exhausted = False

    def incumbent_now():
        return pool.best if pool.best is not None and pool.best < incumbent else incumbent

    def visit(k: int, frees: list[int]) -> None:
        nonlocal exhausted
        if exhausted:
            return
        stats.nodes += 1
        if stats.nodes > node_budget:
            exhausted = True
            return
        if len(frees) > incumbent_now():
            return
        rank = ech.rank
        if rank == d:
            return
        if rank == d - 1:
            kern = ech.kernel()
            c = kern[0]
            if any(_dot(rows[r], c) == 0 for r in frees):
                return
            support = sum(1 for r in range(nverts) if _dot(rows[r], c) != 0)
            if support <= incumbent_now():
                pool.offer(support, c)
            return
        if k == nverts:
            _handle_leaf(frees)
            return
        reduced = ech.reduce(rows[k])
        if not reduced:
            # dependent row: forcing it to zero is free
            visit(k + 1, frees)
        else:
            ech.push(reduced)
            visit(k + 1, frees)
            ech.pop()
        frees.append(k)
        visit(k + 1, frees)
        frees.pop()

    def _handle_leaf(frees: list[int]) -> None:
        kern = ech.kernel()
        for r in frees:
            if all(_dot(rows[r], c) == 0 for c in kern):
                return
        support = len(frees)
        if support > incumbent_now():
            return
        coeff = _generic_kernel_member(kern, rows, support, nverts)
        if coeff is not None:
            pool.offer(support, coeff)

    visit(0, [])
    stats.elapsed = time.perf_counter() - t0
    vectors = pool.final_vectors()
    return SearchReport(
        params=space.params,
        i=space.i,
        lam=space.lam,
        min_support=pool.best,
        witnesses=_functions_from_vectors(space.params, vectors),
        bound=support_size_bound(space.params.n, space.params.w, space.i),
        attained_by_canonical=None,
        proven_optimal=not exhausted,
        algorithm="bnb",
        stats=stats,
    )


def _generic_kernel_member(kern, rows, target_support, nverts):
    """A kernel combination whose zero set is exactly the common zero set.

    Combinations sum(t^j * kern[j]) avoid each bad hyperplane for all but
    deg < dim(kern) values of t, so small t are tried in order and the first
    one whose support matches is returned.
    """
    if len(kern) == 1:
        return kern[0]
    max_tries = (len(kern) - 1) * nverts + 1
    for t in range(1, max_tries + 1):
        coeff = [0] * len(kern[0])
        tj = 1
        for vec in kern:
            for pos, x in enumerate(vec):
                coeff[pos] += tj * x
            tj *= t
        c = tuple(coeff)
        if sum(1 for r in range(nverts) if _dot(rows[r], c) != 0) == target_support:
            return c
    return None


def min_support_hyperplane(
    space: EigenspaceBasis,
    subset_budget: int = DEFAULT_SUBSET_BUDGET,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    workers: int = 1,
) -> SearchReport:
    """Minimum support via enumeration of all C(N, d-1) row subsets.

    Complete whenever every inclusion-maximal zero set has rank exactly d-1;
    always cross-checked against the branch and bound before a result is
    treated as final.
    """
    basis = space.basis
    nverts, d = basis.rows, basis.cols
    if d < 2:
        raise ParameterError("instance shape unsupported; use bnb")
    total = math.comb(nverts, d - 1)
    if total > subset_budget:
        raise SizeBudgetError(
            f"hyperplane enumeration needs {total} subsets, over the budget {subset_budget}"
        )
    t0 = time.perf_counter()
    rows = _scaled_int_rows(basis)
    stats = SearchStats()
    pool = _WitnessPool(basis, witness_cap)
    if workers > 1 and total >= 4096:
        results = _hyperplane_parallel(rows, nverts, d, total, workers)
        for subsets_done, found in results:
            stats.subsets += subsets_done
            for support, coeff in found:
                pool.offer(support, coeff)
    else:
        subsets_done, found = _hyperplane_scan(rows, nverts, d, 0, total)
        stats.subsets = subsets_done
        for support, coeff in found:
            pool.offer(support, coeff)
    stats.elapsed = time.perf_counter() - t0
    vectors = pool.final_vectors()
    return SearchReport(
        params=space.params,
        i=space.i,
        lam=space.lam,
        min_support=pool.best,
        witnesses=_functions_from_vectors(space.params, vectors),
        bound=support_size_bound(space.params.n, space.params.w, space.i),
        attained_by_canonical=None,
        proven_optimal=True,
        algorithm="hyperplane",
        stats=stats,
    )


def _hyperplane_scan(rows, nverts, d, start, stop):
    """Scan combinations with lexicographic index in [start, stop)."""
    found = []
    best = -1
    done = 0
    it = itertools.islice(itertools.combinations(range(nverts), d - 1), start, stop)
    for subset in it:
        done += 1
        ech = _IntEchelon(d)
        for r in subset:
            red = ech.reduce(rows[r])
            if red:
                ech.push(red)
        if ech.rank != d - 1:
            continue
        c = ech.kernel()[0]
        zeros = sum(1 for r in range(nverts) if _dot(rows[r], c) == 0)
        support = nverts - zeros
        if best == -1 or support <= best:
            best = min(best, support) if best != -1 else support
            found.append((support, c))
    return done, found


def _hyperplane_parallel(rows, nverts, d, total, workers):
    import multiprocessing as mp

    chunks = []
    step = -(-total // workers)
    for w in range(workers):
        start, stop = w * step, min((w + 1) * step, total)
        if start < stop:
            chunks.append((rows, nverts, d, start, stop))
    ctx = mp.get_context("fork")
    with ctx.Pool(processes=len(chunks)) as pool:
        return pool.starmap(_hyperplane_scan, chunks)


def verify_bound(
    params: JohnsonParams,
    i: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    subset_budget: int = DEFAULT_SUBSET_BUDGET,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    workers: int = 1,
) -> SearchReport:
    """Run both oracles where applicable, cross-check them, and compare to the bound.

    The canonical function, when it exists, is verified as an eigenfunction
    and its support seeds the incumbent; it is a member of the eigenspace, so
    the search can never do worse. attained_by_canonical records whether the
    minimum equals the bound and every reported witness is a scalar multiple
    of a canonical function; it stays None if optimality was not proven.
    """
    space = eigenspace_basis(params, i)
    if space.dimension < 1:
        raise ParameterError(f"eigenspace of J({params.n},{params.w}) at index {i} is empty")
    hint = None
    canonical_exists = params.w - i <= params.n - 2 * i
    if canonical_exists:
        f_can = build_canonical(params, default_pairing(i))
        verdict = is_eigenfunction(f_can, space.lam)
        if not verdict.holds or verdict.is_zero:
            raise OracleDisagreementError("canonical function failed eigenfunction verification")
        hint = f_can.support_size

    report = min_support_bnb(space, node_budget, witness_cap, upper_bound_hint=hint)
    algorithms = ["bnb"]

    hyper = None
    if space.dimension >= 2 and math.comb(space.basis.rows, space.dimension - 1) <= subset_budget:
        hyper = min_support_hyperplane(space, subset_budget, witness_cap, workers)
        algorithms.append("hyperplane")
        if report.proven_optimal and hyper.min_support != report.min_support:
            raise OracleDisagreementError(
                f"bnb found {report.min_support} but hyperplane found {hyper.min_support} "
                f"on J({params.n},{params.w}) index {i}"
            )

    min_support = report.min_support
    witnesses = list(report.witnesses)
    if hyper is not None:
        # an exhausted bnb may trail the completed scan; keep the better value
        if not report.proven_optimal and (min_support is None or hyper.min_support < min_support):
            min_support = hyper.min_support
            witnesses = []
        if hyper.min_support == min_support:
            seen = {tuple(sorted(w.entries.items())) for w in witnesses}
            for w in hyper.witnesses:
                key = tuple(sorted(w.entries.items()))
                if key not in seen:
                    witnesses.append(w)
                    seen.add(key)
        witnesses = witnesses[:witness_cap]
    for w in witnesses:
        v = is_eigenfunction(w, space.lam)
        if not v.holds or v.is_zero or w.support_size != min_support:
            raise OracleDisagreementError("unsound witness produced by the search")

    attained = None
    all_canonical = None
    if report.proven_optimal:
        matches = [match_canonical(w, i) is not None for w in witnesses]
        hit_bound = min_support == report.bound and report.bound > 0
        attained = hit_bound and any(matches)
        all_canonical = hit_bound and bool(matches) and all(matches)

    merged_stats = SearchStats(
        nodes=report.stats.nodes,
        subsets=hyper.stats.subsets if hyper else 0,
        elapsed=report.stats.elapsed + (hyper.stats.elapsed if hyper else 0.0),
    )
    return SearchReport(
        params=params,
        i=i,
        lam=space.lam,
        min_support=min_support,
        witnesses=witnesses,
        bound=report.bound,
        attained_by_canonical=attained,
        proven_optimal=report.proven_optimal,
        algorithm="+".join(algorithms),
        all_witnesses_canonical=all_canonical,
        stats=merged_stats,
    )
