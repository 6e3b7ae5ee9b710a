"""Distance matrices and certified distance spectral radius estimates.

The spectral radius of the (nonnegative, irreducible) distance matrix is
bracketed by Collatz-Wielandt ratios: for any positive vector x,
min_v (Dx)_v / x_v <= mu <= max_v (Dx)_v / x_v. Power iteration from the
all-ones vector tightens the bracket monotonically, so every estimate carries
a rigorous enclosure rather than a bare float. Comparisons between two graphs
are decided only when the brackets separate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import Graph, ParameterError, _iter_bits

MIN_TOL = 1e-12
DEFAULT_TOL = 1e-10
MAX_ITERATIONS = 10**6


class DisconnectedError(ValueError):
    """Distance matrix requested for a disconnected graph."""


class ConvergenceError(RuntimeError):
    """Bracket failed to reach the requested width; carries the last enclosure."""

    def __init__(self, lo: float, hi: float, iterations: int):
        super().__init__(
            f"bracket [{lo!r}, {hi!r}] wider than tolerance after {iterations} iterations"
        )
        self.lo = lo
        self.hi = hi
        self.iterations = iterations


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs shortest path distances as an int matrix; BFS per source."""
    n = g.n
    if n < 1:
        raise ParameterError("distance matrix needs at least one vertex")
    rows = g.rows
    full = g.full_mask
    dist = np.zeros((n, n), dtype=np.int64)
    for s in range(n):
        seen = 1 << s
        frontier = seen
        d = 0
        while frontier:
            if d:
                for v in _iter_bits(frontier):
                    dist[s, v] = d
            grown = 0
            for v in _iter_bits(frontier):
                grown |= rows[v]
            frontier = grown & ~seen
            seen |= frontier
            d += 1
        if seen != full:
            raise DisconnectedError(f"vertex {s} does not reach every vertex")
    return dist


def transmissions(g: Graph) -> list[int]:
    """Row sums of the distance matrix: sum of distances from each vertex."""
    return [int(r) for r in distance_matrix(g).sum(axis=1)]


def wiener_index(g: Graph) -> int:
    """Sum of distances over unordered vertex pairs."""
    return int(distance_matrix(g).sum()) // 2


def mu_lower_bound_wiener(g: Graph) -> Fraction:
    """Exact bound mu(G) >= 2W(G)/n (Rayleigh quotient of the all-ones vector)."""
    if g.n < 1:
        raise ParameterError("bound needs at least one vertex")
    return Fraction(2 * wiener_index(g), g.n)


@dataclass(frozen=True)
class SpectralEstimate:
    """Point estimate of the distance spectral radius with a rigorous bracket.

    `lo <= mu <= hi` holds exactly (up to float rounding of the ratio
    computations); `value` is the Rayleigh quotient of the final iterate and
    `residual` its infinity-norm eigen-residual.
    """

    value: float
    residual: float
    lo: float
    hi: float
    iterations: int

    @property
    def width(self) -> float:
        return self.hi - self.lo


def distance_spectral_radius(
    g: Graph, tol: float = DEFAULT_TOL, max_iterations: int = MAX_ITERATIONS
) -> SpectralEstimate:
    """Power iteration from the all-ones vector with Collatz-Wielandt brackets.

    The per-step bracket [min ratio, max ratio] always contains mu, so the
    running intersection narrows monotonically; iteration stops when its width
    drops to `tol`. The exact 2W/n lower bound clamps the floor, which also
    collapses the bracket immediately on transmission-regular graphs.
    """
    if g.n < 2:
        raise ParameterError(f"spectral radius needs n >= 2, got n={g.n}")
    if tol < MIN_TOL:
        raise ParameterError(f"tolerance below supported floor {MIN_TOL:g}")
    dist = distance_matrix(g).astype(np.float64)
    # 2W/n is exact here: distances are small ints, the sum is exact in binary
    wiener_floor = float(Fraction(int(dist.sum()), g.n))
    x = np.ones(g.n)
    lo = wiener_floor
    hi = float(dist.sum(axis=1).max())
    iterations = 0
    while iterations < max_iterations:
        y = dist @ x
        iterations += 1
        ratios = y / x
        lo = max(lo, float(ratios.min()))
        hi = min(hi, float(ratios.max()))
        x = y / np.linalg.norm(y)
        if hi - lo <= tol:
            break
    else:
        raise ConvergenceError(lo, hi, iterations)
    value = float(x @ (dist @ x))
    value = min(max(value, lo), hi)
    residual = float(np.abs(dist @ x - value * x).max())
    return SpectralEstimate(value=value, residual=residual, lo=lo, hi=hi, iterations=iterations)


class Ordering(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    INDETERMINATE = "indeterminate"


def compare_estimates(a: SpectralEstimate, b: SpectralEstimate) -> Ordering:
    """Strict comparison decided only by disjoint brackets; ties are indeterminate."""
    if a.lo > b.hi:
        return Ordering.GREATER
    if a.hi < b.lo:
        return Ordering.LESS
    return Ordering.INDETERMINATE


def compare_mu(g: Graph, h: Graph, tol: float = 1e-9) -> Ordering:
    """Order mu(G) vs mu(H) by certified brackets at the given refinement tolerance.

    INDETERMINATE never backs a strict claim: equal graphs stay indeterminate
    at any tolerance, and genuinely distinct radii separate once tol is small
    enough relative to their gap.
    """
    return compare_estimates(
        distance_spectral_radius(g, tol), distance_spectral_radius(h, tol)
    )
