"""Spectral lower bounds for regular graphs.

For a connected k-regular graph with second-largest adjacency eigenvalue
magnitude lam, neighborhood expansion is at least k^2/lam^2-fold until
sets get large, and chasing that growth through the strong-boundary
profile of the complement yields

    boxicity(g) >= (k^2/lam^2) / ln(1 + k^2/lam^2) * (n - k - 1) / (2n).

Eigenvalues come from the symmetric eigensolver with an explicitly
reported residual; downstream formulas convert them to exact rationals
so repeated runs emit identical bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import BipartiteGraph, Graph, degree_summary, is_complete, is_connected
from .reports import BoundReport, bound_report, not_applicable

SPECTRAL = "spectral"
BIPARTITE_SPECTRAL = "bipartite_spectral"

# Residual any reported spectrum must meet, and the magnitude below which
# an eigenvalue is treated as exactly zero (rejecting the bound rather
# than dividing by noise).
RESIDUAL_TOL = 1e-8
EIGENVALUE_ZERO_TOL = 1e-9


@dataclass(frozen=True)
class SpectralSummary:
    """Eigenvalues in descending order plus solver diagnostics.

    ``second_largest_abs`` and ``degree`` are filled by the adjacency
    wrapper for regular graphs and stay None for bare matrices.
    """

    eigenvalues: tuple[float, ...]
    residual: float
    second_largest_abs: float | None = None
    degree: int | None = None


def symmetric_eigenvalues(matrix: np.ndarray) -> SpectralSummary:
    """Full spectrum of a symmetric matrix, residual included."""
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T, atol=1e-12, rtol=0.0):
        raise ValueError("matrix must be symmetric")
    values, vectors = np.linalg.eigh(a)
    residual = float(np.abs(a @ vectors - vectors * values).max())
    order = np.argsort(values)[::-1]
    return SpectralSummary(tuple(float(values[i]) for i in order), residual)


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for v, row in enumerate(g.rows):
        for u in range(g.n):
            if row >> u & 1:
                a[v, u] = 1.0
    return a


def adjacency_spectrum(g: Graph) -> SpectralSummary:
    """Adjacency eigenvalues; for regular graphs also the second-largest
    magnitude, the quantity the expansion bounds consume."""
    summary = symmetric_eigenvalues(adjacency_matrix(g))
    degrees = degree_summary(g)
    if not degrees.is_regular:
        return summary
    ev = summary.eigenvalues
    second = max(abs(ev[1]), abs(ev[-1])) if g.n > 1 else 0.0
    return SpectralSummary(ev, summary.residual, second, degrees.min_degree)


def _growth_factor(ratio: Fraction) -> Fraction:
    """ratio / ln(1 + ratio), as an exact rational of the float result."""
    return Fraction(float(ratio) / math.log1p(float(ratio)))


def spectral_bound(g: Graph) -> BoundReport:
    """The display formula above; connected regular non-complete only."""
    summary = degree_summary(g)
    if is_complete(g):
        return not_applicable(SPECTRAL, "complete_graph")
    if not summary.is_regular:
        return not_applicable(SPECTRAL, "not_regular")
    if not is_connected(g):
        return not_applicable(SPECTRAL, "disconnected")
    spectrum = adjacency_spectrum(g)
    lam = spectrum.second_largest_abs
    if lam is None or lam < EIGENVALUE_ZERO_TOL:
        return not_applicable(SPECTRAL, "second_eigenvalue_zero")
    k = summary.min_degree
    ratio = Fraction(k * k) / Fraction(lam) ** 2
    value = _growth_factor(ratio) * Fraction(g.n - k - 1, 2 * g.n)
    cert = {"degree": k, "lambda": lam, "residual": spectrum.residual}
    return bound_report(SPECTRAL, value, cert)


def strongly_regular_secondary(k: int, a: int, c: int) -> float:
    """Largest non-principal eigenvalue magnitude from SRG parameters.

    Non-principal eigenvalues solve x^2 + (c - a)x + (c - k) = 0.  The
    parameter sanity checks (0 <= a <= k-2, 1 <= c <= k) also force real
    roots, so degenerate inputs such as complete graphs are rejected
    instead of producing a complex answer.
    """
    if k < 1 or a < 0 or a > k - 2 or c < 1 or c > k:
        raise ValueError(f"not parameters of a strongly regular graph: {(k, a, c)}")
    half_b = Fraction(c - a, 2)
    disc = half_b * half_b - (c - k)
    if disc < 0:
        raise ValueError(f"complex secondary eigenvalues for {(k, a, c)}")
    root = math.sqrt(float(disc))
    return max(abs(-float(half_b) + root), abs(-float(half_b) - root))


def gram_spectrum(gb: BipartiteGraph) -> SpectralSummary:
    """Eigenvalues of M M^T for the biadjacency matrix M.

    For a k-regular bipartite graph the largest is k^2; the second
    largest plays the role lambda^2 plays in the general case.
    """
    m = np.zeros((gb.na, gb.nb))
    for a, row in enumerate(gb.rows):
        for b in range(gb.nb):
            if row >> b & 1:
                m[a, b] = 1.0
    return symmetric_eigenvalues(m @ m.T)


def _bipartite_regular_degree(gb: BipartiteGraph) -> int | None:
    row_degs = {r.bit_count() for r in gb.rows}
    col_degs = {gb.column(b).bit_count() for b in range(gb.nb)}
    if gb.na == gb.nb and len(row_degs) == 1 and row_degs == col_degs:
        return row_degs.pop()
    return None


def tanner_bound(g: Graph | BipartiteGraph, x_size: int) -> Fraction:
    """Guaranteed open-neighborhood size of any x_size-subset.

    Regular graphs:      k^2 t / (lam^2 + (k^2 - lam^2) t / n)
    Regular bipartite,
    subsets of side A:   k^2 t / (lam' + (k^2 - lam') 2t / n)

    with n the total vertex count, lam the second-largest adjacency
    eigenvalue magnitude and lam' the second-largest eigenvalue of the
    biadjacency Gram matrix.
    """
    if isinstance(g, BipartiteGraph):
        k = _bipartite_regular_degree(g)
        if not k:
            raise ValueError("bipartite form needs a balanced regular bipartite graph")
        if g.na < 2:
            raise ValueError("bipartite form needs at least two vertices per side")
        if not 1 <= x_size <= g.na:
            raise ValueError(f"subset size {x_size} outside 1..{g.na}")
        lam_prime = Fraction(gram_spectrum(g).eigenvalues[1])
        n_total = g.na + g.nb
        denom = lam_prime + (k * k - lam_prime) * Fraction(2 * x_size, n_total)
        return Fraction(k * k * x_size) / denom
    summary = degree_summary(g)
    if not summary.is_regular or summary.min_degree == 0:
        raise ValueError("expansion estimate needs a regular graph with edges")
    if not 1 <= x_size <= g.n:
        raise ValueError(f"subset size {x_size} outside 1..{g.n}")
    spectrum = adjacency_spectrum(g)
    lam_sq = Fraction(spectrum.second_largest_abs) ** 2
    k = summary.min_degree
    denom = lam_sq + (k * k - lam_sq) * Fraction(x_size, g.n)
    return Fraction(k * k * x_size) / denom


def bipartite_spectral_bound(gb: BipartiteGraph) -> BoundReport:
    """k / (4 sqrt(lam')) for balanced regular bipartite graphs.

    Stated here as a lower bound; the matching upper bound that would
    make it tight is not certified by this package.
    """
    k = _bipartite_regular_degree(gb)
    if not k:
        return not_applicable(BIPARTITE_SPECTRAL, "not_regular_bipartite")
    if gb.na < 2:
        return not_applicable(BIPARTITE_SPECTRAL, "side_too_small")
    spectrum = gram_spectrum(gb)
    lam_prime = spectrum.eigenvalues[1]
    if lam_prime < EIGENVALUE_ZERO_TOL:
        return not_applicable(BIPARTITE_SPECTRAL, "second_gram_eigenvalue_zero")
    value = Fraction(k) / (4 * Fraction(math.sqrt(lam_prime)))
    cert = {"degree": k, "lambda_prime": lam_prime, "residual": spectrum.residual}
    return bound_report(BIPARTITE_SPECTRAL, value, cert,
                        notes=("lower bound only; tightness not certified",))


def random_regular_reference(n: int, k: int) -> Fraction:
    """Advisory curve: the spectral bound evaluated at lam = 2 sqrt(k-1),
    the almost-sure second eigenvalue scale of random k-regular graphs.
    Not a certified bound for any particular graph.
    """
    if k < 2 or n <= k + 1:
        raise ValueError("reference curve needs k >= 2 and n > k + 1")
    ratio = Fraction(k * k) / Fraction(4 * (k - 1))
    return _growth_factor(ratio) * Fraction(n - k - 1, 2 * n)
