"""Boxicity lower bounds from neighborhood expansion.

The driving quantities, for vertex sets S1 and S2 covering the graph:

  cross expansion  beta_t = (min over t-subsets S of S1 of |N[S] & S2|) / |S2|
  co-expansion     m_j    = min over j-subsets S of S2 of |N'(S, complement) & S1|

If boxicity were some small b, the interval geometry of an optimal
intersection would force a large subset of S2 (size about
t_star(b) = |S2| (1 - 2b(1 - beta_t))) whose complement-neighborhood
inside S1 is nevertheless thin.  Whenever the measured m-table is too
big for that, b is impossible.  Scanning b upward and returning the
first value not refuted yields a certified lower bound together with a
per-b trace a verifier can replay against the tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, floor

from .bitset import bits, full_mask, mask_of, members, popcount
from .errors import BudgetExceededError
from .graphs import (
    BipartiteGraph,
    Graph,
    bipartition,
    closed_neighborhood,
    complement,
    degree_summary,
    induced_subgraph,
    is_complete,
    open_neighborhood,
    strong_vertex_boundary,
    universal_vertices,
)
from .reports import BoundReport, bound_report, not_applicable

EXPANSION = "expansion"
UNIVERSAL = "universal"
BIPARTITE_UNIVERSAL = "bipartite_universal"
T_EXPANDER = "t_expander"

SUBSET_BUDGET = 10**7


def _check_budget(n: int, k: int) -> None:
    if comb(n, k) > SUBSET_BUDGET:
        raise BudgetExceededError(f"C({n},{k}) subsets exceed {SUBSET_BUDGET}")


def cross_expansion(g: Graph, subset_side: int, target_side: int, t: int) -> Fraction:
    """beta_t: worst closed-neighborhood coverage of the target side by
    any t vertices of the subset side."""
    size = popcount(subset_side)
    if not 1 <= t <= size:
        raise ValueError(f"t = {t} outside 1..{size}")
    if target_side == 0:
        raise ValueError("target side must be nonempty")
    _check_budget(size, t)
    pool = members(subset_side)
    best = None
    for combo in combinations(pool, t):
        covered = popcount(closed_neighborhood(g, mask_of(combo)) & target_side)
        if best is None or covered < best:
            best = covered
    return Fraction(best, popcount(target_side))


def co_expansion_table(g: Graph, subset_side: int, target_side: int,
                       j_max: int) -> tuple[int, ...]:
    """m_j for j = 1 .. j_max: worst complement-neighborhood reach into
    the target side from any j vertices of the subset side."""
    size = popcount(subset_side)
    if not 1 <= j_max <= size:
        raise ValueError(f"j_max = {j_max} outside 1..{size}")
    co = complement(g)
    pool = members(subset_side)
    table = []
    for j in range(1, j_max + 1):
        _check_budget(size, j)
        best = None
        for combo in combinations(pool, j):
            reach = popcount(open_neighborhood(co, mask_of(combo)) & target_side)
            if best is None or reach < best:
                best = reach
        table.append(best)
    return tuple(table)


@dataclass(frozen=True)
class ExpansionProfile:
    """Measured expansion data for one (s1, s2, t) instantiation."""

    s1: int
    s2: int
    t: int
    beta_t: Fraction
    m_table: tuple[int, ...]

    def alpha(self, j: int) -> Fraction:
        """Co-expansion rate m_j / j; infinite demand never measured, so
        j must be within the table."""
        if not 1 <= j <= len(self.m_table):
            raise ValueError(f"alpha({j}) outside the measured table")
        return Fraction(self.m_table[j - 1], j)


def expansion_profile(g: Graph, s1: int, s2: int, t: int,
                      j_max: int | None = None) -> ExpansionProfile:
    if j_max is None:
        j_max = popcount(s2)
    return ExpansionProfile(
        s1=s1,
        s2=s2,
        t=t,
        beta_t=cross_expansion(g, s1, s2, t),
        m_table=co_expansion_table(g, s2, s1, j_max),
    )


def is_t_expander(g: Graph, t: int) -> bool:
    """True when the complement has no complete bipartite t-by-t
    subgraph, i.e. no t vertices share t common complement-neighbors."""
    if t < 1:
        raise ValueError("t must be positive")
    if 2 * t > g.n:
        return True
    _check_budget(g.n, t)
    co = complement(g)
    for combo in combinations(range(g.n), t):
        if popcount(strong_vertex_boundary(co, mask_of(combo))) >= t:
            return False
    return True


def is_bipartite_t_expander(gb: BipartiteGraph, t: int) -> bool:
    """True when every t vertices of side A leave fewer than t vertices
    of side B with no edge into them."""
    if not 1 <= t <= gb.na:
        raise ValueError(f"t = {t} outside 1..{gb.na}")
    _check_budget(gb.na, t)
    full_b = full_mask(gb.nb)
    for combo in combinations(range(gb.na), t):
        reached = 0
        for a in combo:
            reached |= gb.rows[a]
        if popcount(full_b & ~reached) >= t:
            return False
    return True


@dataclass(frozen=True)
class ScanEntry:
    """One step of the infeasibility scan."""

    b: int
    t_star: Fraction
    m_value: int | None
    infeasible: bool


@dataclass(frozen=True)
class ExpansionCertificate:
    s1: int
    s2: int
    t: int
    beta_t: Fraction
    trace: tuple[ScanEntry, ...]
    bound: int
    vertex_labels: tuple[int, ...] | None = None


def certify_expansion_bound(g: Graph, s1: int, s2: int,
                            t: int) -> tuple[BoundReport, ExpansionCertificate]:
    """Scan b = 1, 2, ... and return the first not refuted.

    b is refuted when floor(t_star(b)) >= 1 and 2(t-1) b < m at that
    floor (for t = 1 this degenerates to the m-value being positive).
    Graphs satisfying the preconditions always admit a feasible b at or
    below max(|s1|, |s2|) / 2 + 1, so the scan terminates.
    """
    if s1 | s2 != g.vertices:
        raise ValueError("s1 and s2 must cover all vertices")
    if s1 == 0 or s2 == 0:
        raise ValueError("s1 and s2 must be nonempty")
    n1, n2 = popcount(s1), popcount(s2)
    if not 1 <= t <= n1:
        raise ValueError(f"t = {t} outside 1..{n1}")
    for u in bits(s2):
        if closed_neighborhood(g, 1 << u) & s1 == s1:
            raise ValueError(f"vertex {u} of s2 dominates s1")

    beta = cross_expansion(g, s1, s2, t)
    co = complement(g)
    pool = members(s2)
    m_cache: dict[int, int] = {}

    def m_at(j: int) -> int:
        if j not in m_cache:
            _check_budget(n2, j)
            best = None
            for combo in combinations(pool, j):
                reach = popcount(open_neighborhood(co, mask_of(combo)) & s1)
                if best is None or reach < best:
                    best = reach
            m_cache[j] = best
        return m_cache[j]

    cap = max(n1, n2) // 2 + 2
    trace = []
    b = 1
    while True:
        t_star = n2 * (1 - 2 * b * (1 - beta))
        floor_t = floor(t_star)
        if floor_t >= 1:
            m_value = m_at(floor_t)
            infeasible = 2 * (t - 1) * b < m_value
        else:
            m_value = None
            infeasible = False
        trace.append(ScanEntry(b, t_star, m_value, infeasible))
        if not infeasible:
            break
        b += 1
        if b > cap:
            raise AssertionError("scan passed its provable termination cap")

    cert = ExpansionCertificate(s1, s2, t, beta, tuple(trace), b)
    report = bound_report(EXPANSION, Fraction(b), cert)
    return report, cert


def universal_bound(g: Graph) -> BoundReport:
    """(n - universal_count) / (2 (n - min_degree - 1))."""
    if is_complete(g):
        return not_applicable(UNIVERSAL, "complete_graph")
    summary = degree_summary(g)
    value = Fraction(g.n - summary.universal_count,
                     2 * (g.n - summary.min_degree - 1))
    cert = {"universal_count": summary.universal_count,
            "min_degree": summary.min_degree}
    return bound_report(UNIVERSAL, value, cert)


def bipartite_universal_bound(gb: BipartiteGraph) -> BoundReport:
    """(|B| - u_B) / (2 (|B| - min_degree_A)) with u_B the count of
    B-vertices adjacent to all of A.

    Complete bipartite graphs drive both numerator and denominator to
    zero; the bound degenerates to 0 rather than failing, since 0 is a
    sound (if empty) statement.
    """
    full_a = full_mask(gb.na)
    u_b = sum(1 for b in range(gb.nb) if gb.column(b) == full_a)
    delta_a = min(r.bit_count() for r in gb.rows)
    numerator = gb.nb - u_b
    if numerator == 0:
        return bound_report(BIPARTITE_UNIVERSAL, Fraction(0),
                            {"u_b": u_b, "min_degree_a": delta_a},
                            notes=("degenerate: every B-vertex dominates A",))
    value = Fraction(numerator, 2 * (gb.nb - delta_a))
    return bound_report(BIPARTITE_UNIVERSAL, value,
                        {"u_b": u_b, "min_degree_a": delta_a})


def t_expander_bound(g: Graph, t: int) -> BoundReport:
    """n (n - max_degree - 1) / (2 (t-1) ((n-max_degree-1) + (n-min_degree-1)))
    whenever the graph is a t-expander; n / (4(t-1)) in the regular case.
    """
    if t < 2:
        return not_applicable(T_EXPANDER, "t_must_exceed_1")
    summary = degree_summary(g)
    if summary.max_degree == g.n - 1:
        return not_applicable(T_EXPANDER, "has_universal_vertex")
    if not is_t_expander(g, t):
        return not_applicable(T_EXPANDER, "not_t_expander")
    hi_slack = g.n - summary.max_degree - 1
    lo_slack = g.n - summary.min_degree - 1
    value = Fraction(g.n * hi_slack, 2 * (t - 1) * (hi_slack + lo_slack))
    cert = {"t": t, "min_degree": summary.min_degree, "max_degree": summary.max_degree}
    return bound_report(T_EXPANDER, value, cert)


def _strip_universal(g: Graph) -> tuple[Graph, tuple[int, ...]] | None:
    keep = g.vertices & ~universal_vertices(g)
    if keep == 0:
        return None
    return induced_subgraph(g, keep), members(keep)


def best_expansion_bound(g: Graph, t_max: int = 2) -> BoundReport:
    """Best scan bound over canonical (s1, s2) choices and t <= t_max.

    Choices: both sides equal to the graph minus its universal vertices,
    and for bipartite graphs each side against the other (dominating
    vertices dropped from the subset side).  Universal vertices never
    lower boxicity, so bounds for the stripped induced subgraph apply to
    the original graph.
    """
    if t_max < 1:
        raise ValueError("t_max must be positive")
    candidates: list[tuple[Graph, int, int, tuple[int, ...]]] = []
    stripped = _strip_universal(g)
    if stripped is not None:
        core, labels = stripped
        if not is_complete(core):
            candidates.append((core, core.vertices, core.vertices, labels))
    sides = bipartition(g)
    if sides is not None:
        for s1, s2 in (sides, sides[::-1]):
            drop = 0
            for u in bits(s2):
                if closed_neighborhood(g, 1 << u) & s1 == s1:
                    drop |= 1 << u
            s2_kept = s2 & ~drop
            if s2_kept == 0:
                continue
            keep = s1 | s2_kept
            labels = members(keep)
            sub = induced_subgraph(g, keep)
            relabel = {v: i for i, v in enumerate(labels)}
            sub_s1 = mask_of(relabel[v] for v in bits(s1))
            sub_s2 = mask_of(relabel[v] for v in bits(s2_kept))
            candidates.append((sub, sub_s1, sub_s2, labels))

    best: tuple[BoundReport, ExpansionCertificate] | None = None
    for sub, s1, s2, labels in candidates:
        for t in range(1, min(t_max, popcount(s1)) + 1):
            try:
                report, cert = certify_expansion_bound(sub, s1, s2, t)
            except ValueError:
                continue
            if best is None or cert.bound > best[1].bound:
                tagged = ExpansionCertificate(
                    cert.s1, cert.s2, cert.t, cert.beta_t, cert.trace,
                    cert.bound, vertex_labels=labels,
                )
                best = (bound_report(EXPANSION, Fraction(cert.bound), tagged), tagged)
    if best is None:
        return not_applicable(EXPANSION, "no_valid_instantiation")
    return best[0]
