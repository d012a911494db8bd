"""Shannon information entropies and standard-deviation uncertainty
measures.

Discrete:    S = -sum_i p_i log_b p_i, with 0*log(0) = 0.
Continuous:  S = -integral rho ln(rho) (differential entropy).
Modified dimensionless entropies referenced to a unit system:

    Sx = -integral rho(x) ln(a0 * rho(x)) dx
    Sp = -integral gamma(p) ln((hbar/a0) * gamma(p)) dp

Their sum St = Sx + Sp obeys the entropic uncertainty bound
St >= 1 + ln(pi), saturated by Gaussian states; the standard-deviation
product obeys dX*dP >= hbar/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import ConvergenceError, InvariantViolationError
from .quadrature import (GaussianTail, SincSquaredTail, graded_boundaries,
                         halved, panel_sum)
from .systems import (BoxState, Density, OscillatorState, QuantumState,
                      momentum_density, position_density)
from .units import UnitSystem, atomic_units

LN_PI = math.log(math.pi)
BBM_BOUND = 1.0 + LN_PI          # minimum of Sx + Sp, about 2.14473
DENSITY_FLOOR = 1e-300           # below this the entropy integrand is 0
GRADE_ZONE_PANELS = 48           # cusp panels refined around momentum lobes
MAX_TAIL_LOBES = 1_000_000       # cap on momentum zero-lattice points


@dataclass(frozen=True)
class QuadratureSpec:
    """Quadrature controls.

    abs_tolerance is the absolute convergence target of every integral;
    momentum_tail_radius overrides the automatic truncation radius for
    slowly decaying momentum densities (None means automatic).
    """

    abs_tolerance: float = 1e-10
    max_subdivisions: int = 8
    momentum_tail_radius: float | None = None

    def __post_init__(self):
        if not (self.abs_tolerance > 0.0):
            raise ValueError("abs_tolerance must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be at least 1")
        if self.momentum_tail_radius is not None \
                and not (self.momentum_tail_radius > 0.0):
            raise ValueError("momentum_tail_radius must be positive")


DEFAULT_QUADRATURE = QuadratureSpec()


@dataclass(frozen=True)
class EntropyReport:
    """Modified entropies of one state, in nats."""

    sx: float
    sp: float
    st: float
    bbm_margin: float    # st - (1 + ln pi), never meaningfully negative


@dataclass(frozen=True)
class UncertaintyReport:
    """Raw moments and standard deviations of one state."""

    mean_x: float
    mean_x2: float
    mean_p: float
    mean_p2: float
    dx: float
    dp: float
    product: float
    kennard_margin: float    # product - hbar/2


@dataclass(frozen=True, init=False)
class DiscreteDistribution:
    """A finite probability distribution.

    Probabilities must be nonnegative and sum to 1 within 1e-12.
    """

    probabilities: tuple[float, ...]

    def __init__(self, probabilities: Iterable[float]):
        object.__setattr__(self, "probabilities",
                           tuple(float(p) for p in probabilities))
        if not self.probabilities:
            raise ValueError("distribution needs at least one outcome")
        if any(p < 0.0 for p in self.probabilities):
            raise ValueError("probabilities must be nonnegative")
        total = math.fsum(self.probabilities)
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"probabilities sum to {total!r}, not 1")


def _validated_base(log_base: float) -> float:
    if not (log_base > 1.0):
        raise ValueError(f"log base must exceed 1, got {log_base!r}")
    return math.log(log_base)


def discrete_entropy(dist: DiscreteDistribution, log_base: float = 2.0) -> float:
    """Shannon entropy of a discrete distribution, default in bits.

    The base enters only as a final division, so entropies in two bases
    differ by exactly the ratio of the logarithms.
    """
    ln_base = _validated_base(log_base)
    nats = -math.fsum(p * math.log(p) for p in dist.probabilities if p > 0.0)
    return nats / ln_base


# ---------------------------------------------------------------------------
# panel construction


def _fill(anchors: np.ndarray, width: float) -> np.ndarray:
    """Subdivide each segment between anchors into near-equal panels of
    at most the given width, keeping every anchor bit-exact."""
    points = [float(anchors[0])]
    for a, b in zip(anchors[:-1], anchors[1:]):
        seg = b - a
        if seg <= 0.0:
            continue
        m = max(1, int(math.ceil(seg / width)))
        inner = a + seg * np.arange(1, m + 1) / m
        inner[-1] = b
        points.extend(float(t) for t in inner)
    return np.array(points)


def _check_tail_budget(radius: float, tail: SincSquaredTail) -> None:
    """Refuse truncation radii whose zero lattice could not be integrated
    in reasonable time or memory; the tolerance, not the state, is at
    fault, so this is a convergence failure rather than a usage error."""
    lobes = radius / tail.zero_spacing
    if lobes > MAX_TAIL_LOBES:
        raise ConvergenceError(
            f"momentum truncation radius {radius:.3e} covers about "
            f"{lobes:.3e} density lobes, beyond the supported panel "
            f"budget; loosen abs_tolerance or set momentum_tail_radius")


def _entropy_layout(density: Density, spec: QuadratureSpec):
    """Panel boundaries, cusp points, and (for slow tails) the truncation
    radius for an entropy integral."""
    lo, hi = density.support
    tail = density.tail
    if math.isfinite(lo) and math.isfinite(hi):
        anchors = np.unique(np.array([lo, *density.zeros, hi]))
        cusps = np.unique(np.array([lo, *density.zeros, hi]))
        return _fill(anchors, density.scale), cusps, None
    if isinstance(tail, GaussianTail):
        r = tail.radius()
        zeros = [z for z in density.zeros if -r < z < r]
        anchors = np.unique(np.array([-r, *zeros, r]))
        return _fill(anchors, density.scale), np.array(zeros), None
    if isinstance(tail, SincSquaredTail):
        budget = spec.abs_tolerance / 10.0
        target = spec.momentum_tail_radius or tail.entropy_radius(budget)
        _check_tail_budget(target, tail)
        radius = tail.aligned_radius(target)
        lattice = tail.zeros_up_to(radius)
        anchors = np.unique(np.concatenate([-lattice[::-1], [0.0], lattice]))
        zone = tail.center + GRADE_ZONE_PANELS * tail.zero_spacing
        cusps = lattice[lattice <= zone]
        cusps = np.unique(np.concatenate([-cusps, cusps]))
        return anchors, cusps, radius
    raise ValueError("density with unbounded support needs tail metadata")


def _verified_sum(f, boundaries: np.ndarray, cusps: np.ndarray,
                  spec: QuadratureSpec) -> float:
    b = graded_boundaries(boundaries, cusps)
    value = panel_sum(f, b)
    estimate = math.inf
    for _ in range(spec.max_subdivisions):
        b = halved(b)
        refined = panel_sum(f, b)
        estimate = abs(refined - value)
        value = refined
        if estimate <= spec.abs_tolerance:
            return value
    raise ConvergenceError("entropy quadrature did not converge",
                           estimate=estimate)


def _extend_lattice(tail: SincSquaredTail, inner: float, outer: float):
    """Zero-lattice points covering [inner, outer], inner included."""
    step = tail.zero_spacing
    j0 = int(round((inner - tail.center) / step))
    j1 = max(j0 + 1, int(math.ceil((outer - tail.center) / step)))
    lattice = tail.center + step * np.arange(j0, j1 + 1)
    return lattice, float(lattice[-1])


def _tail_extended(f, density: Density, radius: float, base: float,
                   spec: QuadratureSpec) -> float:
    """Add lattice-aligned panels beyond the initial radius until two
    successive radius doublings stop changing the integral."""
    tail = density.tail
    total = base
    inner = radius
    quiet = 0
    increment = math.inf
    for _ in range(2 * spec.max_subdivisions):
        _check_tail_budget(2.0 * inner, tail)
        positive, outer = _extend_lattice(tail, inner, 2.0 * inner)
        increment = panel_sum(f, positive) + panel_sum(f, -positive[::-1])
        total += increment
        quiet = quiet + 1 if abs(increment) <= spec.abs_tolerance else 0
        if quiet >= 2:
            return total
        inner = outer
    raise ConvergenceError("momentum tail did not converge",
                           estimate=abs(increment))


def _entropy_integral(density: Density, log_reference: float,
                      spec: QuadratureSpec) -> float:
    """-integral rho * (ln rho + log_reference), natural log."""

    def integrand(t):
        rho = density.evaluator(t)
        out = np.zeros_like(rho)
        mask = rho > DENSITY_FLOOR
        r = rho[mask]
        out[mask] = -r * (np.log(r) + log_reference)
        return out

    boundaries, cusps, radius = _entropy_layout(density, spec)
    value = _verified_sum(integrand, boundaries, cusps, spec)
    if radius is not None:
        value = _tail_extended(integrand, density, radius, value, spec)
    return value


# ---------------------------------------------------------------------------
# public entropy operations


def continuous_entropy(density: Density, spec: QuadratureSpec | None = None,
                       log_base: float = 2.0) -> float:
    """Differential entropy -integral rho log_b rho, default in bits.

    Densities with unbounded support must carry tail metadata (the
    constructors in systems always attach it).
    """
    spec = spec or DEFAULT_QUADRATURE
    ln_base = _validated_base(log_base)
    return _entropy_integral(density, 0.0, spec) / ln_base


def entropy_x(density: Density, units: UnitSystem | None = None,
              spec: QuadratureSpec | None = None) -> float:
    """Dimensionless position entropy -integral rho ln(a0 rho), in nats."""
    if density.space != "position":
        raise ValueError("entropy_x expects a position-space density")
    units = units or atomic_units()
    spec = spec or DEFAULT_QUADRATURE
    return _entropy_integral(density, math.log(units.a0), spec)


def entropy_p(density: Density, units: UnitSystem | None = None,
              spec: QuadratureSpec | None = None) -> float:
    """Dimensionless momentum entropy -integral gamma ln((hbar/a0) gamma)."""
    if density.space != "momentum":
        raise ValueError("entropy_p expects a momentum-space density")
    units = units or atomic_units()
    spec = spec or DEFAULT_QUADRATURE
    return _entropy_integral(density, math.log(units.momentum_reference), spec)


def entropy_sum(state: QuantumState, units: UnitSystem | None = None,
                spec: QuadratureSpec | None = None) -> EntropyReport:
    """Sx, Sp and St = Sx + Sp for one eigenstate.

    Raises InvariantViolationError if St lands below the entropic bound
    1 + ln(pi) by more than quadrature noise.
    """
    units = units or state.units
    spec = spec or DEFAULT_QUADRATURE
    sx = entropy_x(position_density(state), units, spec)
    sp = entropy_p(momentum_density(state), units, spec)
    st = sx + sp
    margin = st - BBM_BOUND
    if margin < -10.0 * spec.abs_tolerance:
        raise InvariantViolationError(
            f"entropy sum {st!r} violates the bound 1 + ln(pi) for {state!r}")
    return EntropyReport(sx=sx, sp=sp, st=st, bbm_margin=margin)


# ---------------------------------------------------------------------------
# moments


def _moment_layout(density: Density, spec: QuadratureSpec):
    lo, hi = density.support
    tail = density.tail
    if math.isfinite(lo) and math.isfinite(hi):
        anchors = np.unique(np.array([lo, *density.zeros, hi]))
        return _fill(anchors, density.scale), None
    if isinstance(tail, GaussianTail):
        r = tail.radius()
        zeros = [z for z in density.zeros if -r < z < r]
        anchors = np.unique(np.array([-r, *zeros, r]))
        return _fill(anchors, density.scale), None
    if isinstance(tail, SincSquaredTail):
        budget = min(spec.abs_tolerance, 1e-10)
        target = spec.momentum_tail_radius or tail.moment_radius(budget)
        _check_tail_budget(target, tail)
        radius = tail.aligned_radius(target)
        lattice = tail.zeros_up_to(radius)
        anchors = np.unique(np.concatenate([-lattice[::-1], [0.0], lattice]))
        return anchors, radius
    raise ValueError("density with unbounded support needs tail metadata")


def _moment_integral(density: Density, order: int,
                     spec: QuadratureSpec) -> float:
    if order == 0:
        def integrand(t):
            return density.evaluator(t)
    else:
        def integrand(t):
            return density.evaluator(t) * t ** order

    boundaries, radius = _moment_layout(density, spec)
    value = _verified_sum(integrand, boundaries, np.array([]), spec)
    if radius is not None:
        # smooth closed-form tails; the oscillatory remainder vanishes to
        # third order at a lattice-aligned radius
        if order == 0:
            value += density.tail.norm_tail(radius)
        elif order == 2:
            value += density.tail.second_moment_tail(radius)
        # odd orders: the lattice is symmetric and the density even, so
        # panel contributions cancel and the tail adds nothing
    return value


def moments(density: Density, spec: QuadratureSpec | None = None
            ) -> tuple[float, float]:
    """First and second raw moments (mean, mean square) by quadrature."""
    spec = spec or DEFAULT_QUADRATURE
    mean = _moment_integral(density, 1, spec)
    second = _moment_integral(density, 2, spec)
    return mean, second


def normalization(density: Density, spec: QuadratureSpec | None = None) -> float:
    """integral of the density; 1 for a proper probability density."""
    spec = spec or DEFAULT_QUADRATURE
    return _moment_integral(density, 0, spec)


def uncertainty(state: QuantumState, spec: QuadratureSpec | None = None
                ) -> UncertaintyReport:
    """Standard deviations dX, dP and their product for one state.

    Enforces the bound dX*dP >= hbar/2 up to quadrature noise.
    """
    spec = spec or DEFAULT_QUADRATURE
    hbar = state.units.hbar
    mean_x, mean_x2 = moments(position_density(state), spec)
    mean_p, mean_p2 = moments(momentum_density(state), spec)
    dx = math.sqrt(max(mean_x2 - mean_x * mean_x, 0.0))
    dp = math.sqrt(max(mean_p2 - mean_p * mean_p, 0.0))
    product = dx * dp
    margin = product - 0.5 * hbar
    if margin < -10.0 * spec.abs_tolerance:
        raise InvariantViolationError(
            f"uncertainty product {product!r} violates hbar/2 for {state!r}")
    return UncertaintyReport(
        mean_x=mean_x, mean_x2=mean_x2, mean_p=mean_p, mean_p2=mean_p2,
        dx=dx, dp=dp, product=product,
        kennard_margin=margin)
