"""Shannon information entropies and uncertainty measures for 1D states.

Computes the dimensionless position- and momentum-space entropies Sx and
Sp, their sum St with its 1 + ln(pi) lower bound, and standard-deviation
uncertainty products for the harmonic oscillator and the particle in a
box.  See the `cli` module for the command-line surface.
"""

from .analysis import (CrossingResult, FigureData, Series, TableArtifact,
                       TableRow, ValidationEntry, ValidationReport,
                       figure_data, find_crossing, generate_table, make_state,
                       validate_reference_values)
from .entropy import (BBM_BOUND, DiscreteDistribution, EntropyReport,
                      QuadratureSpec, UncertaintyReport, continuous_entropy,
                      discrete_entropy, entropy_p, entropy_sum, entropy_x,
                      moments, normalization, uncertainty)
from .errors import (BracketError, ConvergenceError, InvariantViolationError,
                     ShannonError)
from .systems import (BoxState, OscillatorState, box_energy,
                      momentum_density, oscillator_energy, position_density,
                      wavefunction)
from .transform import FourierSpec, numerical_ft, parseval_check
from .units import UnitSystem, atomic_units

__version__ = "0.1.0"

__all__ = [
    "BBM_BOUND",
    "BoxState",
    "BracketError",
    "ConvergenceError",
    "CrossingResult",
    "DiscreteDistribution",
    "EntropyReport",
    "FigureData",
    "FourierSpec",
    "InvariantViolationError",
    "OscillatorState",
    "QuadratureSpec",
    "Series",
    "ShannonError",
    "TableArtifact",
    "TableRow",
    "UncertaintyReport",
    "UnitSystem",
    "ValidationEntry",
    "ValidationReport",
    "atomic_units",
    "box_energy",
    "continuous_entropy",
    "discrete_entropy",
    "entropy_p",
    "entropy_sum",
    "entropy_x",
    "figure_data",
    "find_crossing",
    "generate_table",
    "make_state",
    "momentum_density",
    "moments",
    "normalization",
    "numerical_ft",
    "oscillator_energy",
    "parseval_check",
    "position_density",
    "uncertainty",
    "validate_reference_values",
    "wavefunction",
    "__version__",
]
