"""Panelized Gauss-Legendre integration and density tail models.

The entropy integrands -rho*ln(rho) have logarithmic cusps at the zeros
of rho, so panel boundaries are placed on those zeros and the adjacent
panels are refined geometrically toward them.  Slowly decaying momentum
densities (bounded states have |ft|^2 ~ 1/p^4 tails) carry a structured
tail model used to pick truncation radii and to add closed-form tail
integrals for moments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

GAUSS_ORDER = 32
GRADE_DEPTH = 20  # geometric refinement levels toward a log cusp
_CHUNK_PANELS = 32768  # evaluation block size, keeps node arrays bounded


@lru_cache(maxsize=8)
def gauss_rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return nodes, weights


def panel_sum(f: Callable[[np.ndarray], np.ndarray], boundaries: np.ndarray,
              order: int = GAUSS_ORDER) -> float:
    """Fixed-order Gauss-Legendre sum over consecutive panels.

    boundaries must be increasing; f must accept an ndarray.  Long panel
    lists are evaluated in fixed-size blocks so memory stays bounded no
    matter how fine the subdivision gets.
    """
    b = np.asarray(boundaries, dtype=float)
    if b.size < 2:
        return 0.0
    x, w = gauss_rule(order)
    partials = []
    for start in range(0, b.size - 1, _CHUNK_PANELS):
        stop = min(start + _CHUNK_PANELS, b.size - 1)
        mid = 0.5 * (b[start + 1:stop + 1] + b[start:stop])
        half = 0.5 * (b[start + 1:stop + 1] - b[start:stop])
        nodes = mid[:, None] + half[:, None] * x[None, :]
        values = f(nodes.ravel()).reshape(nodes.shape)
        partials.append(float(np.sum((values @ w) * half)))
    return math.fsum(partials)


def halved(boundaries: np.ndarray) -> np.ndarray:
    """Boundary list with every panel split at its midpoint."""
    b = np.asarray(boundaries, dtype=float)
    mids = 0.5 * (b[1:] + b[:-1])
    return np.sort(np.concatenate([b, mids]))


def graded_boundaries(boundaries: np.ndarray, cusps: np.ndarray,
                      depth: int = GRADE_DEPTH) -> np.ndarray:
    """Insert geometrically shrinking sub-boundaries next to cusp points.

    Gauss nodes never hit a panel boundary, so an integrand that behaves
    like u^2*ln(u) at a cusp is integrated accurately once the adjacent
    panels shrink toward it.
    """
    b = np.asarray(boundaries, dtype=float)
    if len(cusps) == 0 or depth <= 0:
        return b
    cusp_set = set(float(c) for c in cusps)
    extra = []
    factors = 0.5 ** np.arange(1, depth + 1)
    for a, c in zip(b[:-1], b[1:]):
        width = c - a
        if width <= 0.0:
            continue
        if a in cusp_set:
            extra.append(a + width * factors)
        if c in cusp_set:
            extra.append(c - width * factors)
    if not extra:
        return b
    merged = np.unique(np.concatenate([b] + extra))
    return merged


@dataclass(frozen=True)
class GaussianTail:
    """Density decaying like exp(-rate * t^2) times a polynomial."""

    rate: float

    def radius(self) -> float:
        # e^{-rate r^2} < 1e-40 at r = 10/sqrt(rate); entropy and moment
        # integrands are negligible far before any stated tolerance.
        return 10.0 / math.sqrt(self.rate)

    def stretched(self, factor: float) -> "GaussianTail":
        return GaussianTail(self.rate / (factor * factor))


@dataclass(frozen=True)
class SincSquaredTail:
    """Momentum density of a hard-wall eigenstate.

    Exact form gamma(p) = amplitude * sinc((|p|-center)*half_width/pi)^2
    / (|p|+center)^2 with the numpy sinc convention.  Zeros sit on the
    lattice |p| = center + j*pi/half_width; the 1/p^4 envelope makes the
    moment integrals converge slowly, so the smooth part of the tail is
    added in closed form.
    """

    amplitude: float   # center^2 * (2*half_width) / pi for a normalized state
    center: float
    half_width: float

    @property
    def zero_spacing(self) -> float:
        return math.pi / self.half_width

    @property
    def _c_env(self) -> float:
        # envelope coefficient of the sin(d*L)^2/d^2 form
        return self.amplitude / (self.half_width * self.half_width)

    def zeros_up_to(self, radius: float) -> np.ndarray:
        """Nonnegative zero-lattice points not exceeding radius."""
        step = self.zero_spacing
        j_lo = -int(math.floor(self.center / step))
        j_hi = int(math.floor((radius - self.center) / step))
        pts = self.center + step * np.arange(j_lo, j_hi + 1)
        return pts[pts >= 0.0]

    def aligned_radius(self, target: float) -> float:
        """Smallest zero-lattice point >= target.

        Ending on a zero keeps the discarded oscillatory remainder of the
        closed-form tails at its minimum (the boundary term vanishes).
        """
        step = self.zero_spacing
        j = max(1, int(math.ceil((target - self.center) / step)))
        return self.center + j * step

    def entropy_radius(self, tail_budget: float) -> float:
        """Radius beyond which the remaining -gamma*ln(gamma) mass is
        below tail_budget, from the 1/p^4 envelope bound."""
        c = (16.0 / 9.0) * self._c_env
        r = max(2.0 * self.center, 10.0, (c / tail_budget) ** (1.0 / 3.0))
        for _ in range(4):
            log_term = max(4.0 * math.log(r) - math.log(c) + 4.0 / 3.0, 1.0)
            r = max(2.0 * self.center, 10.0,
                    (c * log_term / (3.0 * tail_budget)) ** (1.0 / 3.0))
        return r

    def moment_radius(self, tail_budget: float) -> float:
        """Radius making the discarded oscillatory remainder of the
        second-moment tail smaller than tail_budget."""
        k, twol = self.center, 2.0 * self.half_width
        # remainder after the closed-form tail: ~ c_env/(L^2 R^3) at an
        # aligned radius (integration by parts, boundary term zero)
        c = self._c_env / (self.half_width * self.half_width)
        r = (c / tail_budget) ** (1.0 / 3.0)
        return max(2.0 * k, 10.0, 64.0 * self.zero_spacing + k, r)

    def norm_tail(self, radius: float) -> float:
        """integral_R^inf of the smooth part of gamma, both tails combined."""
        k, r = self.center, radius
        one_sided = (self._c_env / 2.0) * (
            r / (2.0 * k * k * (r * r - k * k))
            + math.log((r - k) / (r + k)) / (4.0 * k ** 3))
        return 2.0 * one_sided

    def second_moment_tail(self, radius: float) -> float:
        """integral_R^inf of the smooth part of p^2*gamma, both tails."""
        k, r = self.center, radius
        one_sided = (self._c_env / 2.0) * (
            r / (2.0 * (r * r - k * k))
            + math.log((r + k) / (r - k)) / (4.0 * k))
        return 2.0 * one_sided

    def stretched(self, factor: float) -> "SincSquaredTail":
        return SincSquaredTail(
            amplitude=self.amplitude * factor,
            center=self.center * factor,
            half_width=self.half_width / factor,
        )
