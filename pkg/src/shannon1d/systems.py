"""Quantum states and probability densities for two exactly solvable
one-dimensional systems: the harmonic oscillator and the infinite
potential well (a particle in a hard-wall box centered at the origin).

Position densities are |psi_n(x)|^2; momentum densities are the squared
magnitude of the Fourier transform psi~(p) = (2 pi hbar)^{-1/2}
integral psi(x) exp(-i p x / hbar) dx.  Both families have closed forms:

 * oscillator: psi~_n keeps the Hermite-Gaussian shape with the width
   parameter beta = m*omega/hbar replaced by 1/(beta*hbar^2);
 * box: psi~_n is a pair of sinc-type lobes centered at p = +-hbar*k_n,
   evaluated here in a form that is manifestly finite at the lobe
   centers (the apparent poles are removable).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from .quadrature import GaussianTail, SincSquaredTail
from .units import UnitSystem, atomic_units

Space = str  # "position" | "momentum"


def hermite_eval(n: int, y):
    """Physicists' Hermite polynomial H_n(y) by the three-term upward
    recurrence H_{k+1} = 2 y H_k - 2 k H_{k-1}.  Vectorized over y."""
    if n < 0 or n != int(n):
        raise ValueError(f"order must be a nonnegative integer, got {n!r}")
    n = int(n)
    y = np.asarray(y, dtype=float)
    h_prev = np.ones_like(y)
    if n == 0:
        return h_prev if h_prev.ndim else float(h_prev)
    h = 2.0 * y
    for k in range(1, n):
        h, h_prev = 2.0 * y * h - 2.0 * k * h_prev, h
    return h if h.ndim else float(h)


def _hermite_roots(n: int) -> np.ndarray:
    if n == 0:
        return np.array([])
    coeffs = np.zeros(n + 1)
    coeffs[n] = 1.0
    return np.polynomial.hermite.hermroots(coeffs)


@dataclass(frozen=True)
class OscillatorState:
    """Eigenstate n of a harmonic oscillator with angular frequency omega."""

    n: int
    omega: float
    units: UnitSystem = field(default_factory=atomic_units)

    def __post_init__(self):
        if self.n < 0 or self.n != int(self.n):
            raise ValueError(f"n must be a nonnegative integer, got {self.n!r}")
        if not (self.omega > 0.0):
            raise ValueError(f"omega must be positive, got {self.omega!r}")

    @property
    def beta(self) -> float:
        """Gaussian width parameter m*omega/hbar."""
        return self.units.m * self.omega / self.units.hbar


@dataclass(frozen=True)
class BoxState:
    """Eigenstate n >= 1 of a hard-wall box of width xc centered at 0.

    Odd n are even (cosine) states, even n are odd (sine) states.
    """

    n: int
    xc: float
    units: UnitSystem = field(default_factory=atomic_units)

    def __post_init__(self):
        if self.n < 1 or self.n != int(self.n):
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if not (self.xc > 0.0):
            raise ValueError(f"xc must be positive, got {self.xc!r}")

    @property
    def kn(self) -> float:
        """Wave number n*pi/xc."""
        return self.n * math.pi / self.xc

    @property
    def parity(self) -> str:
        return "cosine" if self.n % 2 == 1 else "sine"


QuantumState = OscillatorState | BoxState


def oscillator_energy(state: OscillatorState) -> float:
    """E_n = hbar*omega*(n + 1/2)."""
    return state.units.hbar * state.omega * (state.n + 0.5)


def box_energy(state: BoxState) -> float:
    """E_n = pi^2 hbar^2 n^2 / (2 m xc^2)."""
    u = state.units
    return (math.pi * state.n * u.hbar / state.xc) ** 2 / (2.0 * u.m)


@dataclass(frozen=True)
class Density:
    """A normalized probability density on one coordinate axis.

    evaluator must accept an ndarray and is vectorized.  zeros lists the
    interior points where the density vanishes (quadrature panels split
    there); tail describes the decay outside any finite feature region;
    scale is the characteristic feature width used to size panels.
    """

    evaluator: Callable[[np.ndarray], np.ndarray]
    support: tuple[float, float]
    space: Space
    zeros: tuple[float, ...] = ()
    tail: GaussianTail | SincSquaredTail | None = None
    scale: float = 1.0

    def __call__(self, x):
        values = self.evaluator(np.asarray(x, dtype=float))
        return values if np.ndim(x) else float(values)

    def stretched(self, factor: float) -> "Density":
        """The same probability mass on a stretched axis:
        rho'(y) = rho(y/factor)/factor.  Norm and entropy content are
        preserved when the reference constant is scaled along."""
        if not (factor > 0.0):
            raise ValueError("stretch factor must be positive")
        inner = self.evaluator
        c = float(factor)

        def stretched_eval(x):
            return inner(np.asarray(x, dtype=float) / c) / c

        lo, hi = self.support
        return replace(
            self,
            evaluator=stretched_eval,
            support=(lo * c, hi * c),
            zeros=tuple(z * c for z in self.zeros),
            tail=self.tail.stretched(c) if self.tail is not None else None,
            scale=self.scale * c,
        )


def _oscillator_density(n: int, rate: float, space: Space) -> Density:
    # rho(t) = exp(2 ln A - y^2) H_n(y)^2 with y = sqrt(rate) t; the
    # normalization is built in log space to stay stable at larger n.
    sqrt_rate = math.sqrt(rate)
    log_a2 = (-n * math.log(2.0) - 0.5 * math.log(math.pi)
              - math.lgamma(n + 1) + 0.5 * math.log(rate))

    def rho(t):
        y = sqrt_rate * np.asarray(t, dtype=float)
        h = hermite_eval(n, y)
        return np.exp(log_a2 - y * y) * h * h

    zeros = tuple(float(r) / sqrt_rate for r in _hermite_roots(n))
    return Density(
        evaluator=rho,
        support=(-math.inf, math.inf),
        space=space,
        zeros=zeros,
        tail=GaussianTail(rate=rate),
        scale=1.0 / sqrt_rate,
    )


def oscillator_position_density(state: OscillatorState) -> Density:
    """|psi_n(x)|^2 for the oscillator, a Hermite-Gaussian with
    rate beta = m*omega/hbar."""
    return _oscillator_density(state.n, state.beta, "position")


def oscillator_momentum_density(state: OscillatorState) -> Density:
    """|psi~_n(p)|^2, the position form with beta -> 1/(beta*hbar^2)."""
    hbar = state.units.hbar
    return _oscillator_density(state.n, 1.0 / (state.beta * hbar * hbar),
                               "momentum")


def box_position_density(state: BoxState) -> Density:
    """(2/xc) cos^2(k_n x) for odd n, sin^2 for even n, inside the box."""
    n, xc = state.n, state.xc
    k = state.kn
    amp = 2.0 / xc
    half = xc / 2.0
    trig = np.cos if n % 2 == 1 else np.sin

    def rho(x):
        x = np.asarray(x, dtype=float)
        inside = np.abs(x) <= half
        return np.where(inside, amp * trig(k * x) ** 2, 0.0)

    # nodes every half wavelength starting from the left wall
    zeros = tuple(-half + j * xc / n for j in range(1, n))
    return Density(
        evaluator=rho,
        support=(-half, half),
        space="position",
        zeros=zeros,
        tail=None,
        scale=xc / n,
    )


def box_momentum_density(state: BoxState) -> Density:
    """|psi~_n(p)|^2 for the box in the removable-singularity-free form

        gamma(p) = (k^2 xc / pi) sinc((|p| - k) L / pi)^2 / (|p| + k)^2,

    k = n*pi/xc, L = xc/2, sinc(z) = sin(pi z)/(pi z).  Finite and smooth
    at the lobe centers p = +-hbar*k; zeros on |p| = k + j*pi/L."""
    hbar = state.units.hbar
    xc = state.xc
    k = state.kn            # wave number; momentum lobes sit at hbar*k
    half = xc / 2.0
    amp = k * k * xc / math.pi

    def gamma(p):
        q = np.abs(np.asarray(p, dtype=float)) / hbar
        lobe = np.sinc((q - k) * half / math.pi)
        return (amp / hbar) * lobe * lobe / (q + k) ** 2

    tail = SincSquaredTail(amplitude=amp, center=k, half_width=half)
    if hbar != 1.0:
        tail = tail.stretched(hbar)
    return Density(
        evaluator=gamma,
        support=(-math.inf, math.inf),
        space="momentum",
        zeros=(),  # the zero lattice is carried by the tail model
        tail=tail,
        scale=math.pi / half * hbar,
    )


@dataclass(frozen=True)
class Wavefunction:
    """Real position-space eigenfunction with truncation metadata for
    numerical Fourier transforms."""

    evaluator: Callable[[np.ndarray], np.ndarray]
    support: tuple[float, float]
    suggested_radius: float

    def __call__(self, x):
        values = self.evaluator(np.asarray(x, dtype=float))
        return values if np.ndim(x) else float(values)


def oscillator_wavefunction(state: OscillatorState) -> Wavefunction:
    """psi_n(x) = A_n exp(-beta x^2/2) H_n(sqrt(beta) x)."""
    n, beta = state.n, state.beta
    sqrt_beta = math.sqrt(beta)
    log_a = 0.5 * (-n * math.log(2.0) - 0.5 * math.log(math.pi)
                   - math.lgamma(n + 1) + 0.5 * math.log(beta))

    def psi(x):
        y = sqrt_beta * np.asarray(x, dtype=float)
        return np.exp(log_a - 0.5 * y * y) * hermite_eval(n, y)

    # Gaussian factor below 1e-40 beyond 10/sqrt(beta)
    return Wavefunction(psi, (-math.inf, math.inf), 10.0 / sqrt_beta)


def box_wavefunction(state: BoxState) -> Wavefunction:
    """sqrt(2/xc) cos(k_n x) for odd n, sin for even n, zero outside."""
    n, xc = state.n, state.xc
    k = state.kn
    amp = math.sqrt(2.0 / xc)
    half = xc / 2.0
    trig = np.cos if n % 2 == 1 else np.sin

    def psi(x):
        x = np.asarray(x, dtype=float)
        return np.where(np.abs(x) <= half, amp * trig(k * x), 0.0)

    return Wavefunction(psi, (-half, half), half)


def position_density(state: QuantumState) -> Density:
    if isinstance(state, OscillatorState):
        return oscillator_position_density(state)
    return box_position_density(state)


def momentum_density(state: QuantumState) -> Density:
    if isinstance(state, OscillatorState):
        return oscillator_momentum_density(state)
    return box_momentum_density(state)


def wavefunction(state: QuantumState) -> Wavefunction:
    if isinstance(state, OscillatorState):
        return oscillator_wavefunction(state)
    return box_wavefunction(state)
