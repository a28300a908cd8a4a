"""Graph families: seeded random models, extremal constructions with
interval certificates, and exhaustive small-graph enumeration.

Random models draw from a per-sample xoshiro256** stream, so a
(model, parameters, seed) triple pins the graph exactly.  The tight
constructions return the graph together with explicit interval
representations realizing the claimed upper bound, checkable by exact
edge intersection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .bitset import full_mask
from .errors import BudgetExceededError
from .graphs import (
    BipartiteGraph,
    Graph,
    bipartite_from_edges,
    complement,
    cycle,
    from_edges,
    from_pair_mask,
)
from .intervals import IntervalRep, realize
from .rng import Xoshiro256StarStar

MODELS = ("gnp", "gnm", "regular", "bipartite_gnp", "bipartite_gnm")
REGULAR_RESTART_BUDGET = 10**6
ENUMERATION_MAX_VERTICES = 6


@dataclass(frozen=True)
class RandomModelSpec:
    """Everything that determines one random graph.

    For bipartite models n is the total vertex count and must be even;
    the sides get n/2 vertices each.
    """

    model: str
    n: int
    seed: int
    p: Fraction | None = None
    m: int | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}")
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.model.startswith("bipartite") and self.n % 2:
            raise ValueError("bipartite models need an even vertex count")
        if self.model.endswith("gnp"):
            if self.p is None or not 0 <= self.p <= 1:
                raise ValueError("gnp models need p in [0, 1]")
        if self.model.endswith("gnm") and self.m is None:
            raise ValueError("gnm models need an edge count m")
        if self.model == "regular" and (self.k is None or self.k < 0):
            raise ValueError("the regular model needs a degree k")

    def parameter(self) -> str:
        """The swept parameter as text, for result rows."""
        if self.model.endswith("gnp"):
            return str(self.p)
        if self.model.endswith("gnm"):
            return str(self.m)
        return str(self.k)


def _sample_gnp(rng: Xoshiro256StarStar, n: int, p: Fraction) -> Graph:
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.bernoulli(p.numerator, p.denominator):
                edges.append((u, v))
    return from_edges(n, edges)


def _sample_gnm(rng: Xoshiro256StarStar, n: int, m: int) -> Graph:
    slots = list(combinations(range(n), 2))
    if not 0 <= m <= len(slots):
        raise ValueError(f"m = {m} outside 0..{len(slots)}")
    for i in range(m):
        j = i + rng.below(len(slots) - i)
        slots[i], slots[j] = slots[j], slots[i]
    return from_edges(n, slots[:m])


def _sample_regular(rng: Xoshiro256StarStar, n: int, k: int) -> Graph:
    """Random k-regular graph by stub pairing.

    Colliding stub pairs are redrawn and the whole attempt restarts when
    no legal pair remains, so every returned graph is simple.  The
    distribution is the pairing model's up to the small bias of
    collision redraws.
    """
    if k >= n:
        raise ValueError("degree must be below n")
    if (n * k) % 2:
        raise ValueError("n * k must be even")
    if k == 0:
        return from_edges(n, [])
    for _ in range(REGULAR_RESTART_BUDGET):
        stubs = [v for v in range(n) for _ in range(k)]
        rng.shuffle(stubs)
        rows = [0] * n
        failures = 0
        while stubs and failures < 50:
            i = rng.below(len(stubs))
            j = rng.below(len(stubs) - 1)
            if j >= i:
                j += 1
            u, v = stubs[i], stubs[j]
            if u == v or rows[u] >> v & 1:
                failures += 1
                continue
            failures = 0
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            for idx in sorted((i, j), reverse=True):
                stubs[idx] = stubs[-1]
                stubs.pop()
        if not stubs:
            return Graph(n, tuple(rows))
        # dead end: the remaining stubs admit no legal pair often enough
    raise BudgetExceededError("regular sampling restart budget exhausted")


def _sample_bipartite_gnp(rng: Xoshiro256StarStar, n: int, p: Fraction) -> BipartiteGraph:
    half = n // 2
    edges = []
    for a in range(half):
        for b in range(half):
            if rng.bernoulli(p.numerator, p.denominator):
                edges.append((a, b))
    return bipartite_from_edges(half, half, edges)


def _sample_bipartite_gnm(rng: Xoshiro256StarStar, n: int, m: int) -> BipartiteGraph:
    half = n // 2
    slots = [(a, b) for a in range(half) for b in range(half)]
    if not 0 <= m <= len(slots):
        raise ValueError(f"m = {m} outside 0..{len(slots)}")
    for i in range(m):
        j = i + rng.below(len(slots) - i)
        slots[i], slots[j] = slots[j], slots[i]
    return bipartite_from_edges(half, half, slots[:m])


def sample(spec: RandomModelSpec) -> Graph | BipartiteGraph:
    """Draw the graph the spec pins down."""
    rng = Xoshiro256StarStar(spec.seed)
    if spec.model == "gnp":
        return _sample_gnp(rng, spec.n, spec.p)
    if spec.model == "gnm":
        return _sample_gnm(rng, spec.n, spec.m)
    if spec.model == "regular":
        return _sample_regular(rng, spec.n, spec.k)
    if spec.model == "bipartite_gnp":
        return _sample_bipartite_gnp(rng, spec.n, spec.p)
    return _sample_bipartite_gnm(rng, spec.n, spec.m)


# --- extremal constructions ---------------------------------------------

@dataclass(frozen=True)
class TightFamilyCertificate:
    """A constructed graph with interval representations witnessing the
    claimed upper bound and the matching claimed lower bound."""

    graph: Graph
    reps: tuple[IntervalRep, ...]
    claimed_lower: Fraction
    claimed_upper: int
    bipartite: BipartiteGraph | None = None

    def verify(self) -> bool:
        """Exact check that the representations intersect to the graph."""
        if len(self.reps) != self.claimed_upper:
            return False
        n = self.graph.n
        inter = [full_mask(n) & ~(1 << v) for v in range(n)]
        for rep in self.reps:
            realized = realize(rep, n)
            for v in range(n):
                inter[v] &= realized.rows[v]
        return tuple(inter) == self.graph.rows


def _offset(v: int, n: int) -> Fraction:
    # distinct per vertex, strictly inside (0, 1/2)
    return Fraction(v + 1, 2 * (n + 2))


def cobipartite_tight_family(k: int, l: int) -> TightFamilyCertificate:
    """Complete graph on 2kl vertices minus l disjoint k-by-k bicliques.

    The complement is (k)-biclique-regular, the graph itself is
    (n - k - 1)-regular, and l interval graphs suffice: representation i
    separates block pair i onto [0,1] and [2,3] while everything else
    straddles the middle.  Boxicity is exactly l once n / 2k = l is
    certified below it.
    """
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    n = 2 * k * l
    half = k * l

    def a_block(v: int) -> int | None:
        return v // k if v < half else None

    def b_block(v: int) -> int | None:
        return (v - half) // k if v >= half else None

    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            au, bu = a_block(u), b_block(u)
            av, bv = a_block(v), b_block(v)
            crossing = (au is not None and bv is not None and au == bv) or (
                bu is not None and av is not None and bu == av)
            if not crossing:
                edges.append((u, v))
    g = from_edges(n, edges)

    reps = []
    for i in range(l):
        intervals = []
        for v in range(n):
            d = _offset(v, n)
            if a_block(v) == i:
                intervals.append((Fraction(0) - d, Fraction(1) + d))
            elif b_block(v) == i:
                intervals.append((Fraction(2) - d, Fraction(3) + d))
            else:
                intervals.append((Fraction(1) - d, Fraction(2) + d))
        reps.append(IntervalRep(tuple(intervals)))
    return TightFamilyCertificate(
        graph=g,
        reps=tuple(reps),
        claimed_lower=Fraction(n, 2 * k),
        claimed_upper=l,
    )


def bipartite_tight_family(k: int, l: int) -> TightFamilyCertificate:
    """Balanced bipartite graph on 2kl vertices: block i of side A is
    adjacent to every B-block except block i.

    l + 2 interval graphs realize it: one per block pair as in the
    co-bipartite family, one spreading side A into disjoint intervals to
    cut all A-A pairs, and one spreading side B.  Boxicity sits between
    the certified l/2 and l + 2.
    """
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    half = k * l
    n = 2 * half
    edges = []
    for a in range(half):
        for b in range(half):
            if a // k != b // k:
                edges.append((a, b))
    gb = bipartite_from_edges(half, half, edges)
    g = gb.to_graph()

    reps = []
    for i in range(l):
        intervals = []
        for v in range(n):
            d = _offset(v, n)
            if v < half and v // k == i:
                intervals.append((Fraction(0) - d, Fraction(1) + d))
            elif v >= half and (v - half) // k == i:
                intervals.append((Fraction(2) - d, Fraction(3) + d))
            else:
                intervals.append((Fraction(-1) - d, Fraction(4) + d))
        reps.append(IntervalRep(tuple(intervals)))
    for spread_side in (0, 1):
        intervals = []
        for v in range(n):
            d = _offset(v, n)
            in_side = v < half if spread_side == 0 else v >= half
            if in_side:
                j = v if spread_side == 0 else v - half
                intervals.append((Fraction(2 * j) - d, Fraction(2 * j + 1) + d))
            else:
                intervals.append((Fraction(-1) - d, Fraction(2 * half) + d))
        reps.append(IntervalRep(tuple(intervals)))
    return TightFamilyCertificate(
        graph=g,
        reps=tuple(reps),
        claimed_lower=Fraction(l, 2),
        claimed_upper=l + 2,
        bipartite=gb,
    )


def complete_multipartite(part_size: int, parts: int) -> Graph:
    """Complete multipartite graph with the given number of equal parts."""
    if part_size < 1 or parts < 2:
        raise ValueError("need part_size >= 1 and parts >= 2")
    n = part_size * parts
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if u // part_size != v // part_size]
    return from_edges(n, edges)


def complement_cycle(n: int) -> Graph:
    if n < 4:
        raise ValueError("complement of a cycle needs n >= 4")
    return complement(cycle(n))


def petersen() -> Graph:
    """Outer 5-cycle, inner pentagram, spokes."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return from_edges(10, edges)


# --- exhaustive enumeration ----------------------------------------------

@lru_cache(maxsize=None)
def _canonical_pair_masks(n: int) -> tuple[int, ...]:
    """One canonical pair-bitmask per isomorphism class on n vertices.

    Canonical form is the numeric minimum, over all vertex permutations,
    of the bitmask indexed by the lexicographic pair order.  All 2^C(n,2)
    graphs are canonicalized at once with vectorized bit shuffles.
    """
    pair_index = {p: i for i, p in enumerate(combinations(range(n), 2))}
    n_pairs = len(pair_index)
    masks = np.arange(1 << n_pairs, dtype=np.uint32)
    canon = masks.copy()
    for perm in permutations(range(n)):
        permuted = np.zeros_like(masks)
        for (u, v), b in pair_index.items():
            target = pair_index[tuple(sorted((perm[u], perm[v])))]
            permuted |= ((masks >> np.uint32(b)) & np.uint32(1)) << np.uint32(target)
        np.minimum(canon, permuted, out=canon)
    return tuple(int(m) for m in sorted(set(canon.tolist())))


def enumerate_graphs(n: int):
    """Yield one representative per isomorphism class on n vertices."""
    if not 1 <= n <= ENUMERATION_MAX_VERTICES:
        raise BudgetExceededError(
            f"exhaustive enumeration capped at n <= {ENUMERATION_MAX_VERTICES}")
    for mask in _canonical_pair_masks(n):
        yield from_pair_mask(n, mask)


def isomorphism_class_count(n: int) -> int:
    return len(_canonical_pair_masks(n))
