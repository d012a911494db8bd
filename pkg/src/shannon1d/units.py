"""Unit systems for dimensionless entropy evaluation.

Position densities are made dimensionless with a reference length a0,
momentum densities with the reference momentum hbar/a0.  All bundled
reference data uses atomic units (a0 = hbar = m = 1).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class UnitSystem:
    """Reference constants: length a0, action hbar, mass m."""

    a0: float = 1.0
    hbar: float = 1.0
    m: float = 1.0

    def __post_init__(self):
        for name in ("a0", "hbar", "m"):
            value = getattr(self, name)
            if not (value > 0.0):
                raise ValueError(f"{name} must be positive, got {value!r}")

    @property
    def momentum_reference(self) -> float:
        """Scale hbar/a0 used to nondimensionalize momentum densities."""
        return self.hbar / self.a0


def atomic_units() -> UnitSystem:
    """The default unit system, a0 = hbar = m = 1."""
    return UnitSystem(1.0, 1.0, 1.0)


def rescaled(scale_length: float = 1.0, scale_action: float = 1.0,
             scale_mass: float = 1.0) -> UnitSystem:
    """Atomic units with each reference constant multiplied by a factor.

    Entropies are invariant under such rescalings when the densities are
    transformed consistently (see Density.stretched); the test suite
    exercises exactly that.
    """
    if not (scale_length > 0 and scale_action > 0 and scale_mass > 0):
        raise ValueError("unit scale factors must be positive")
    return UnitSystem(a0=scale_length, hbar=scale_action, m=scale_mass)
