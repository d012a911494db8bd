"""Numerical Fourier transform to momentum space.

Serves as the independent check on the closed-form momentum densities:
psi~(p) = (2 pi hbar)^(-1/2) integral psi(x) exp(-i p x / hbar) dx is
evaluated by panelized Gauss-Legendre quadrature with the panel width
tied to the oscillation half-period, refined by doubling until two
successive refinements agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError
from .quadrature import panel_sum

_TINY = 1e-30


@dataclass(frozen=True)
class FourierSpec:
    """Controls for the numerical transform.

    truncation_radius bounds the position integral to [-r, r] (a finite
    wavefunction support shrinks it further); tolerance is the absolute
    agreement required between successive panel refinements.
    """

    truncation_radius: float
    tolerance: float = 1e-10
    max_subdivisions: int = 20

    def __post_init__(self):
        if not (self.truncation_radius > 0.0):
            raise ValueError("truncation_radius must be positive")
        if not (self.tolerance > 0.0):
            raise ValueError("tolerance must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be at least 1")


def spec_for(psi, tolerance: float = 1e-10) -> FourierSpec:
    """FourierSpec sized from a wavefunction's own metadata.

    Uses the finite support half-width when there is one, otherwise the
    suggested decay radius.
    """
    radius = getattr(psi, "suggested_radius", None)
    support = getattr(psi, "support", None)
    if radius is None and support is not None and math.isfinite(support[1]):
        radius = support[1]
    if radius is None:
        raise ValueError("psi carries no support or radius metadata; "
                         "construct a FourierSpec explicitly")
    return FourierSpec(truncation_radius=float(radius), tolerance=tolerance)


def _domain(psi, spec: FourierSpec) -> tuple[float, float]:
    lo, hi = -spec.truncation_radius, spec.truncation_radius
    support = getattr(psi, "support", None)
    if support is not None:
        lo, hi = max(lo, support[0]), min(hi, support[1])
    if not (hi > lo):
        raise ValueError("empty integration domain")
    return lo, hi


def numerical_ft(psi: Callable, p: float, spec: FourierSpec,
                 hbar: float = 1.0) -> complex:
    """psi~(p) by adaptive panel quadrature.  psi must be vectorized.

    Raises ConvergenceError when doubling the panel count
    max_subdivisions times never brings two successive values within
    spec.tolerance.
    """
    lo, hi = _domain(psi, spec)
    width = hi - lo
    # resolve both the e^{-ipx/hbar} oscillation and the wavefunction
    half_period = math.pi * hbar / max(abs(p), _TINY)
    panels = max(16, int(math.ceil(width / min(half_period, width / 16.0))))
    norm = 1.0 / math.sqrt(2.0 * math.pi * hbar)
    w = p / hbar

    def integrand_re(x):
        return psi(x) * np.cos(w * x)

    def integrand_im(x):
        return -psi(x) * np.sin(w * x)

    previous = None
    estimate = math.inf
    for level in range(spec.max_subdivisions):
        boundaries = np.linspace(lo, hi, panels * 2 ** level + 1)
        value = complex(panel_sum(integrand_re, boundaries, order=16),
                        panel_sum(integrand_im, boundaries, order=16)) * norm
        if previous is not None:
            estimate = abs(value - previous)
            if estimate < spec.tolerance:
                return value
        previous = value
    raise ConvergenceError(
        f"Fourier transform did not converge at p={p!r}", estimate=estimate)


def parseval_check(psi: Callable, spec: FourierSpec,
                   hbar: float = 1.0) -> float:
    """integral |psi~(p)|^2 dp, computed numerically.

    Equals 1 for a normalized psi (Parseval).  The momentum radius is
    doubled until the integral stops changing at spec.tolerance; each
    sample of |psi~|^2 is its own adaptive position integral, so this is
    deliberately expensive and independent of any closed form.
    """
    lo, hi = _domain(psi, spec)
    half_extent = max(abs(lo), abs(hi))
    # |psi~|^2 features have momentum scale ~ pi*hbar/extent
    p_panel = math.pi * hbar / half_extent

    def ft_squared(p_values):
        return np.array([abs(numerical_ft(psi, float(p), spec, hbar)) ** 2
                         for p in np.atleast_1d(p_values)])

    radius = 64.0 * p_panel
    previous = None
    for _ in range(spec.max_subdivisions):
        boundaries = np.arange(
            -radius, radius + 0.5 * p_panel, p_panel)
        value = panel_sum(ft_squared, boundaries, order=8)
        if previous is not None and abs(value - previous) < spec.tolerance:
            return value
        previous = value
        radius *= 2.0
    raise ConvergenceError("Parseval integral did not converge",
                           estimate=abs(value - previous))
