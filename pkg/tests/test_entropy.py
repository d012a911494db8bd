import math

import numpy as np
import pytest

from shannon1d.entropy import (BBM_BOUND, DiscreteDistribution,
                               QuadratureSpec, continuous_entropy,
                               discrete_entropy, entropy_p, entropy_sum,
                               entropy_x, moments, normalization, uncertainty)
from shannon1d.errors import ConvergenceError
from shannon1d.systems import (BoxState, Density, OscillatorState,
                               momentum_density, position_density)
from shannon1d.units import rescaled

# high-precision values computed independently with mpmath (50 digits)
# and frozen here: oscillator position entropies at beta = 1 for
# n = 0, 1, 2, and well momentum entropies at xc = 1 for n = 1, 2, 3.
SX_OSC_BETA1 = (1.0723649429247, 1.34272778838618, 1.49860923325173)
SP_BOX_XC1 = (2.51889090702088, 2.91385652532748, 3.05999482224688)


# ---------------------------------------------------------------------------
# discrete entropy


def test_discrete_distribution_validation():
    with pytest.raises(ValueError):
        DiscreteDistribution([])
    with pytest.raises(ValueError):
        DiscreteDistribution([0.5, -0.1, 0.6])
    with pytest.raises(ValueError):
        DiscreteDistribution([0.3, 0.3])


def test_discrete_entropy_known_values():
    assert discrete_entropy(DiscreteDistribution([0.5, 0.5])) == 1.0
    assert discrete_entropy(DiscreteDistribution([1.0])) == 0.0
    assert discrete_entropy(DiscreteDistribution([1.0, 0.0])) == 0.0
    assert discrete_entropy(DiscreteDistribution([0.25] * 4)) == 2.0


def test_discrete_entropy_base_change_is_exact():
    dist = DiscreteDistribution([0.1, 0.2, 0.3, 0.4])
    # log base enters as a single division, so doubling the log of the
    # base halves the result exactly, with no quadrature re-run
    assert discrete_entropy(dist, 2.0) == 2.0 * discrete_entropy(dist, 4.0)
    assert discrete_entropy(dist, 2.0) == \
        discrete_entropy(dist, math.e) / math.log(2.0)


@pytest.mark.parametrize("base", [1.0, 0.5, 0.0, -2.0])
def test_log_base_must_exceed_one(base):
    dist = DiscreteDistribution([0.5, 0.5])
    with pytest.raises(ValueError):
        discrete_entropy(dist, base)


# ---------------------------------------------------------------------------
# continuous entropy


def _uniform_density(width):
    return Density(
        evaluator=lambda t: np.full(np.shape(t), 1.0 / width),
        support=(0.0, width), space="position", scale=width)


def test_continuous_entropy_uniform():
    # a unit-width box has zero differential entropy in any base
    assert continuous_entropy(_uniform_density(1.0)) == pytest.approx(
        0.0, abs=1e-12)
    # width 1/2: -integral 2 ln 2 = -ln 2 nats
    assert continuous_entropy(_uniform_density(0.5), log_base=math.e) == \
        pytest.approx(-math.log(2.0), abs=1e-12)


def test_continuous_entropy_gaussian():
    # ground-state density at beta = 1: S = (1/2) ln(pi e) nats
    density = position_density(OscillatorState(0, 1.0))
    nats = continuous_entropy(density, log_base=math.e)
    assert nats == pytest.approx(0.5 * (1.0 + math.log(math.pi)), abs=1e-10)


def test_continuous_entropy_bits_equal_nats_over_ln2():
    density = position_density(OscillatorState(1, 2.0))
    nats = continuous_entropy(density, log_base=math.e)
    bits = continuous_entropy(density)
    assert bits == nats / math.log(2.0)


def test_continuous_entropy_rejects_bad_base():
    with pytest.raises(ValueError):
        continuous_entropy(_uniform_density(1.0), log_base=1.0)


# ---------------------------------------------------------------------------
# modified entropies: oscillator


@pytest.mark.parametrize("n", [0, 1, 2])
def test_oscillator_position_entropy(n):
    value = entropy_x(position_density(OscillatorState(n, 1.0)))
    assert value == pytest.approx(SX_OSC_BETA1[n], abs=1e-10)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_oscillator_entropy_scale_law(n):
    # widening the density by 1/sqrt(omega) shifts Sx by -ln(omega)/2
    omega = 2.5
    value = entropy_x(position_density(OscillatorState(n, omega)))
    assert value == pytest.approx(
        SX_OSC_BETA1[n] - 0.5 * math.log(omega), abs=1e-9)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_oscillator_momentum_position_duality(n):
    # gamma at frequency omega is rho at frequency 1/omega
    omega = 0.5
    sp = entropy_p(momentum_density(OscillatorState(n, omega)))
    assert sp == pytest.approx(
        SX_OSC_BETA1[n] + 0.5 * math.log(omega), abs=1e-9)
    sx_dual = entropy_x(position_density(OscillatorState(n, 1.0 / omega)))
    assert sp == pytest.approx(sx_dual, abs=1e-10)


# ---------------------------------------------------------------------------
# modified entropies: well


def test_box_position_entropy_closed_form():
    # Sx = ln(2 xc) - 1 for every level
    for n, xc in ((1, 6.0), (2, 6.0), (3, 6.0), (1, 0.5)):
        value = entropy_x(position_density(BoxState(n, xc)))
        assert value == pytest.approx(math.log(2.0 * xc) - 1.0, abs=1e-8)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_box_momentum_entropy(n):
    value = entropy_p(momentum_density(BoxState(n, 1.0)))
    assert value == pytest.approx(SP_BOX_XC1[n - 1], abs=1e-8)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_box_momentum_entropy_translation_law(n):
    # Sp(n, xc) = Sp(n, 1) - ln(xc)
    xc = 6.0
    value = entropy_p(momentum_density(BoxState(n, xc)))
    assert value == pytest.approx(SP_BOX_XC1[n - 1] - math.log(xc), abs=1e-8)


def test_entropy_rejects_mismatched_space():
    state = OscillatorState(0, 1.0)
    with pytest.raises(ValueError):
        entropy_x(momentum_density(state))
    with pytest.raises(ValueError):
        entropy_p(position_density(state))


# ---------------------------------------------------------------------------
# entropy sum and the entropic bound


def test_entropy_sum_report_structure():
    report = entropy_sum(OscillatorState(1, 2.0))
    assert report.st == report.sx + report.sp
    assert report.bbm_margin == report.st - BBM_BOUND


def test_ground_state_saturates_entropic_bound():
    report = entropy_sum(OscillatorState(0, 1.0))
    assert abs(report.st - BBM_BOUND) < 1e-9
    # saturation is frequency independent
    report = entropy_sum(OscillatorState(0, 7.5))
    assert abs(report.st - BBM_BOUND) < 1e-9


@pytest.mark.parametrize("state", [
    OscillatorState(2, 0.06),
    BoxState(1, 0.5),
    BoxState(3, 9.005),
])
def test_entropy_sum_respects_bound(state):
    assert entropy_sum(state).bbm_margin > -1e-9


def test_unit_rescaling_invariance():
    # the same physical state expressed in rescaled units (lengths x2,
    # action x3, mass x1.5) must give identical dimensionless entropies
    u2 = rescaled(scale_length=2.0, scale_action=3.0, scale_mass=1.5)
    for n in (0, 1, 2):
        base = entropy_sum(OscillatorState(n, 2.5))
        other = entropy_sum(OscillatorState(n, 2.5 * 3.0 / (4.0 * 1.5), u2))
        assert other.sx == pytest.approx(base.sx, abs=1e-8)
        assert other.sp == pytest.approx(base.sp, abs=1e-8)
        assert other.st == pytest.approx(base.st, abs=1e-8)
    for n in (1, 2, 3):
        base = entropy_sum(BoxState(n, 6.0))
        other = entropy_sum(BoxState(n, 12.0, u2))
        assert other.sx == pytest.approx(base.sx, abs=1e-8)
        assert other.sp == pytest.approx(base.sp, abs=1e-8)


# ---------------------------------------------------------------------------
# moments and standard deviations


@pytest.mark.parametrize("n, omega", [(0, 1.0), (1, 1.0), (2, 0.5)])
def test_oscillator_moments(n, omega):
    mean, second = moments(position_density(OscillatorState(n, omega)))
    assert mean == pytest.approx(0.0, abs=1e-12)
    assert second == pytest.approx((n + 0.5) / omega, abs=1e-9)
    mean_p, second_p = moments(momentum_density(OscillatorState(n, omega)))
    assert mean_p == pytest.approx(0.0, abs=1e-12)
    assert second_p == pytest.approx((n + 0.5) * omega, abs=1e-9)


@pytest.mark.parametrize("n, xc", [(1, 1.0), (2, 6.0), (3, 0.5)])
def test_box_moments(n, xc):
    mean, second = moments(position_density(BoxState(n, xc)))
    assert mean == pytest.approx(0.0, abs=1e-12)
    expected = xc * xc * (1.0 / 12.0 - 1.0 / (2.0 * math.pi**2 * n**2))
    assert second == pytest.approx(expected, abs=1e-9)
    mean_p, second_p = moments(momentum_density(BoxState(n, xc)))
    assert mean_p == pytest.approx(0.0, abs=1e-10)
    assert second_p == pytest.approx((n * math.pi / xc) ** 2, abs=1e-8)


@pytest.mark.parametrize("state", [
    OscillatorState(0, 1.0),
    OscillatorState(2, 0.06),
    BoxState(1, 1.0),
    BoxState(3, 9.005),
])
def test_densities_are_normalized(state):
    assert normalization(position_density(state)) == pytest.approx(
        1.0, abs=1e-10)
    assert normalization(momentum_density(state)) == pytest.approx(
        1.0, abs=1e-10)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_oscillator_uncertainty_product(n):
    report = uncertainty(OscillatorState(n, 2.5))
    assert report.product == pytest.approx(n + 0.5, abs=1e-10)
    assert report.kennard_margin == report.product - 0.5
    assert report.kennard_margin >= -1e-12


def test_box_uncertainty():
    report = uncertainty(BoxState(1, 6.0))
    assert report.dx == pytest.approx(1.0845, abs=1e-4)
    assert report.dp == pytest.approx(math.pi / 6.0, abs=1e-8)
    assert report.kennard_margin >= -1e-12
    assert report.product == report.dx * report.dp


# ---------------------------------------------------------------------------
# quadrature controls


def test_quadrature_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(abs_tolerance=0.0)
    with pytest.raises(ValueError):
        QuadratureSpec(max_subdivisions=0)
    with pytest.raises(ValueError):
        QuadratureSpec(momentum_tail_radius=-1.0)


def test_unreachable_tolerance_raises():
    # the truncation radius this tolerance would need covers more
    # density lobes than the panel budget allows; fail fast and clearly
    spec = QuadratureSpec(abs_tolerance=1e-16, max_subdivisions=1)
    with pytest.raises(ConvergenceError, match="panel budget"):
        entropy_p(momentum_density(BoxState(3, 0.1)), spec=spec)


def test_starved_tail_extension_reports_estimate():
    # a deliberately short explicit radius with no refinement budget
    # cannot absorb the slowly decaying tail
    spec = QuadratureSpec(abs_tolerance=1e-14, max_subdivisions=1,
                          momentum_tail_radius=20.0)
    with pytest.raises(ConvergenceError) as info:
        entropy_p(momentum_density(BoxState(1, 1.0)), spec=spec)
    assert info.value.estimate is not None


def test_explicit_tail_radius_matches_automatic():
    density = momentum_density(BoxState(1, 1.0))
    automatic = entropy_p(density)
    pinned = entropy_p(density, spec=QuadratureSpec(momentum_tail_radius=50.0))
    assert pinned == pytest.approx(automatic, abs=1e-8)
