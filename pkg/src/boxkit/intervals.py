"""Interval representations, canonical interval supergraphs, and exact
boxicity for small graphs.

A graph is an interval graph iff it is realized by open intervals; with
all 2n endpoints pairwise distinct, u ~ v exactly when l(u) < r(v) and
l(v) < r(u).  Boxicity is the least k with g equal to the intersection
of k interval graphs on the same vertices (complete graphs get 0 by
convention, since an empty intersection imposes no constraint).

The search space collapses through one structural fact: among all
interval supergraphs of g whose right endpoints induce the vertex order
eta, there is a unique minimal one, I_eta, and it is contained in every
other.  So only canonical supergraphs, one per ordering, ever need to be
intersected, and minimizing edges of an interval supergraph becomes a
minimum over orderings that a subset DP solves exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import NamedTuple

import numpy as np

from .bitset import bits, full_mask, mask_of, popcount
from .errors import BudgetExceededError
from .graphs import Graph, is_complete
from .isoperimetry import PROFILE_MAX_VERTICES, _subset_table

BOX_MAX_VERTICES = 8
BOX_SEARCH_NODE_BUDGET = 10**6


@dataclass(frozen=True)
class IntervalRep:
    """One open interval (l, r) per vertex, as exact rationals.

    All 2n endpoints must be pairwise distinct; that keeps the adjacency
    predicate strict-inequality-only and the numbering by right endpoints
    free of ties.
    """

    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        endpoints = []
        for v, (lo, hi) in enumerate(self.intervals):
            if lo >= hi:
                raise ValueError(f"interval {v} has l >= r")
            endpoints.append(lo)
            endpoints.append(hi)
        if len(set(endpoints)) != len(endpoints):
            raise ValueError("duplicate interval endpoints")

    @property
    def n(self) -> int:
        return len(self.intervals)


@dataclass(frozen=True)
class Ordering:
    """A vertex numbering; ranks[v] is the position of v."""

    ranks: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.ranks) != list(range(len(self.ranks))):
            raise ValueError("ranks must be a permutation of 0..n-1")

    @property
    def n(self) -> int:
        return len(self.ranks)

    def sequence(self) -> tuple[int, ...]:
        """Vertices in increasing rank order."""
        seq = [0] * len(self.ranks)
        for v, r in enumerate(self.ranks):
            seq[r] = v
        return tuple(seq)

    @staticmethod
    def from_sequence(seq) -> "Ordering":
        ranks = [0] * len(seq)
        for pos, v in enumerate(seq):
            ranks[v] = pos
        return Ordering(tuple(ranks))


def prefix_masks(ordering: Ordering) -> list[int]:
    """Masks of the first k vertices, k = 1 .. n."""
    out = []
    acc = 0
    for v in ordering.sequence():
        acc |= 1 << v
        out.append(acc)
    return out


def realize(rep: IntervalRep, n: int) -> Graph:
    """Graph realized by an interval representation."""
    if rep.n != n:
        raise ValueError("representation size does not match vertex count")
    rows = [0] * n
    iv = rep.intervals
    for u in range(n):
        lu, ru = iv[u]
        for v in range(u + 1, n):
            lv, rv = iv[v]
            if lu < rv and lv < ru:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def induced_numbering(rep: IntervalRep) -> Ordering:
    """Vertices ranked by right endpoint."""
    order = sorted(range(rep.n), key=lambda v: rep.intervals[v][1])
    return Ordering.from_sequence(order)


class CanonicalSupergraph(NamedTuple):
    graph: Graph
    rep: IntervalRep


def canonical_supergraph(g: Graph, ordering: Ordering) -> CanonicalSupergraph:
    """The minimal interval supergraph of g inducing the given numbering.

    Vertex v gets r(v) = rank(v) and l(v) reaching left to the smallest
    rank in its closed neighborhood, nudged by -(v+1)/(n+1) so endpoints
    stay pairwise distinct without disturbing which integer ranks each
    interval covers.  Two vertices are then adjacent iff the later one's
    earliest neighbor sits at or before the other, which both contains g
    and stays minimal among supergraphs inducing this numbering.
    """
    n = g.n
    if ordering.n != n:
        raise ValueError("ordering size does not match graph")
    ranks = ordering.ranks
    intervals = []
    for v in range(n):
        reach = min(ranks[w] for w in bits(g.rows[v] | (1 << v)))
        lo = Fraction(reach) - Fraction(v + 1, n + 1)
        intervals.append((lo, Fraction(ranks[v])))
    rep = IntervalRep(tuple(intervals))
    return CanonicalSupergraph(realize(rep, n), rep)


class MinSupergraph(NamedTuple):
    edge_count: int
    ordering: Ordering


def boundary_size_counts(g: Graph) -> np.ndarray:
    """|Gamma(X)| for every subset mask X, indexed by mask."""
    if g.n > PROFILE_MAX_VERTICES:
        raise BudgetExceededError(
            f"subset table needs 2^{g.n} entries; capped at n <= {PROFILE_MAX_VERTICES}"
        )
    size = 1 << g.n
    idx = np.arange(size, dtype=np.uint64)
    union = _subset_table(g.rows, g.n, use_and=False)
    return np.bitwise_count(union & ~idx)


def min_interval_supergraph(g: Graph) -> MinSupergraph:
    """Fewest edges over all interval supergraphs of g.

    The edge count of the canonical supergraph for eta equals the sum of
    |Gamma(S_k)| over the proper prefixes S_k of eta, so the minimum over
    orderings is f(V) with f(S) = |Gamma(S)| + min over v in S of
    f(S - v).  Ties break toward the smallest vertex, making the
    returned ordering deterministic.
    """
    n = g.n
    sizes = boundary_size_counts(g)
    size = 1 << n
    f = [0] * size
    choice = [0] * size
    for s in range(1, size):
        best = None
        best_v = -1
        rest = s
        while rest:
            low = rest & -rest
            val = f[s ^ low]
            if best is None or val < best:
                best = val
                best_v = low
            rest ^= low
        f[s] = best + int(sizes[s])
        choice[s] = best_v
    seq_rev = []
    s = size - 1
    while s:
        v_bit = choice[s]
        seq_rev.append(v_bit.bit_length() - 1)
        s ^= v_bit
    ordering = Ordering.from_sequence(tuple(reversed(seq_rev)))
    return MinSupergraph(f[size - 1], ordering)


@dataclass(frozen=True)
class BoxCertificate:
    """k orderings whose canonical supergraphs intersect to the graph.

    k = 0 certifies a complete graph (empty intersection convention).
    """

    k: int
    orderings: tuple[Ordering, ...]
    reps: tuple[IntervalRep, ...]


def verify_box_certificate(g: Graph, cert: BoxCertificate) -> bool:
    """Exact re-check: edge intersection and numbering consistency."""
    if cert.k != len(cert.orderings) or cert.k != len(cert.reps):
        return False
    if cert.k == 0:
        return is_complete(g)
    inter = [full_mask(g.n) & ~(1 << v) for v in range(g.n)]
    for ordering, rep in zip(cert.orderings, cert.reps):
        if induced_numbering(rep) != ordering:
            return False
        realized = realize(rep, g.n)
        for v in range(g.n):
            inter[v] &= realized.rows[v]
    return tuple(inter) == g.rows


def _nonedge_list(g: Graph) -> list[tuple[int, int]]:
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                out.append((u, v))
    return out


def _coverage_catalog(g: Graph, nonedges) -> list[tuple[int, tuple[int, ...]]]:
    """For each distinct behavior, one ordering and the mask of non-edges
    its canonical supergraph omits.  Masks contained in another are
    dropped; any cover by a dropped mask is also a cover by its
    superset."""
    n = g.n
    closed = [g.rows[v] | (1 << v) for v in range(n)]
    seen: dict[int, tuple[int, ...]] = {}
    for seq in permutations(range(n)):
        ranks = [0] * n
        for pos, v in enumerate(seq):
            ranks[v] = pos
        reach = [min(ranks[w] for w in bits(closed[v])) for v in range(n)]
        killed = 0
        for i, (u, v) in enumerate(nonedges):
            if ranks[u] < ranks[v]:
                lo, hi = u, v
            else:
                lo, hi = v, u
            if reach[hi] > ranks[lo]:
                killed |= 1 << i
        if killed not in seen:
            seen[killed] = seq
    items = sorted(seen.items(), key=lambda kv: (-popcount(kv[0]), kv[0]))
    maximal: list[tuple[int, tuple[int, ...]]] = []
    for mask, seq in items:
        if any(mask | kept == kept for kept, _ in maximal):
            continue
        maximal.append((mask, seq))
    return maximal


def boxicity_le(g: Graph, k: int) -> BoxCertificate | None:
    """Certificate that boxicity(g) <= k, or None when it is not.

    Exhausts intersections of canonical supergraphs only, which loses no
    solutions.  Raises BudgetExceededError when the graph or the search
    outgrows the exact-oracle scale, never returning a guess.
    """
    if g.n > BOX_MAX_VERTICES:
        raise BudgetExceededError(f"exact boxicity capped at n <= {BOX_MAX_VERTICES}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if is_complete(g):
        return BoxCertificate(0, (), ())
    if k == 0:
        return None
    nonedges = _nonedge_list(g)
    catalog = _coverage_catalog(g, nonedges)
    target = full_mask(len(nonedges))
    best_pop = max(popcount(m) for m, _ in catalog)
    nodes = 0
    memo: set[tuple[int, int]] = set()

    def dfs(uncovered: int, depth: int) -> list[tuple[int, ...]] | None:
        nonlocal nodes
        if uncovered == 0:
            return []
        if depth == 0 or popcount(uncovered) > depth * best_pop:
            return None
        if (uncovered, depth) in memo:
            return None
        nodes += 1
        if nodes > BOX_SEARCH_NODE_BUDGET:
            raise BudgetExceededError("boxicity search node budget exhausted")
        for mask, seq in catalog:
            if mask & uncovered:
                found = dfs(uncovered & ~mask, depth - 1)
                if found is not None:
                    return [seq] + found
        memo.add((uncovered, depth))
        return None

    seqs = dfs(target, k)
    if seqs is None:
        return None
    orderings = tuple(Ordering.from_sequence(s) for s in seqs)
    reps = tuple(canonical_supergraph(g, o).rep for o in orderings)
    return BoxCertificate(len(orderings), orderings, reps)


class ExactBoxicity(NamedTuple):
    value: int
    certificate: BoxCertificate


def boxicity_exact(g: Graph, max_k: int | None = None) -> ExactBoxicity:
    """Smallest k admitting a certificate, searching k = 0, 1, 2, ...

    Boxicity never exceeds floor(n/2), so the default cap is exact; a
    caller-supplied max_k below that turns into a budget error when the
    true value lies beyond it.
    """
    limit = g.n // 2
    if max_k is not None:
        limit = min(limit, max_k)
    for k in range(limit + 1):
        cert = boxicity_le(g, k)
        if cert is not None:
            return ExactBoxicity(cert.k, cert)
    raise BudgetExceededError(f"boxicity exceeds the search cap {limit}")
