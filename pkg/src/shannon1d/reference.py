"""Published reference values the package is expected to reproduce.

Every golden number used by the validation harness and the regression
tests lives here, in one manifest, each entry tagged with the dataset it
came from.  Values are quoted at the precision of the source (four
decimals), so comparisons use VALIDATION_TOL by default.

Entries carry a ``gated`` flag.  Gated values must be reproduced within
tolerance for ``validate`` to succeed.  Ungated values are quoted as
approximate by their source and disagree with a direct recomputation by
more than the table rounding scale; they are reported for inspection but
do not gate the run (see BOX_CROSSINGS below).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

VALIDATION_TOL = 5e-4  # source tables carry four decimals

OSCILLATOR_N = (0, 1, 2)
BOX_N = (1, 2, 3)

# Entropy sums are constant in the scale parameter; one triple per system.
OSCILLATOR_ST = (2.1447, 2.6855, 2.9972)
BOX_ST = (2.2120, 2.6070, 2.7531)


@dataclass(frozen=True)
class ReferenceRow:
    """One tabulated parameter value with per-state Sx, Sp, St."""

    parameter: float
    sx: tuple[float, float, float]
    sp: tuple[float, float, float]
    st: tuple[float, float, float]
    note: str = ""


# Dimensionless entropies of the harmonic oscillator versus angular
# frequency, states n = 0, 1, 2 (atomic units).  The omega = 2.5 row is
# not tabulated in the source; its n = 0 entries appear in the source
# text and the excited-state entries follow from the exact exchange
# identity Sx(omega) = Sp(1/omega), applied to the omega = 0.4 row.
TABLE1_ROWS: tuple[ReferenceRow, ...] = (
    ReferenceRow(0.0600, (2.4791, 2.7494, 2.9053), (-0.3343, -0.0640, 0.0919), OSCILLATOR_ST),
    ReferenceRow(0.0800, (2.3352, 2.6056, 2.7615), (-0.1905, 0.0799, 0.2357), OSCILLATOR_ST),
    ReferenceRow(0.2000, (1.8771, 2.1474, 2.3033), (0.2676, 0.5380, 0.6939), OSCILLATOR_ST),
    ReferenceRow(0.4000, (1.5305, 1.8009, 1.9568), (0.6142, 0.8846, 1.0405), OSCILLATOR_ST),
    ReferenceRow(0.5000, (1.4189, 1.6893, 1.8452), (0.7258, 0.9962, 1.1520), OSCILLATOR_ST),
    ReferenceRow(1.0000, (1.0724, 1.3427, 1.4986), (1.0724, 1.3427, 1.4986), OSCILLATOR_ST),
    ReferenceRow(2.0000, (0.7258, 0.9962, 1.1520), (1.4189, 1.6893, 1.8452), OSCILLATOR_ST),
    ReferenceRow(2.5000, (0.6142, 0.8846, 1.0405), (1.5305, 1.8009, 1.9568), OSCILLATOR_ST,
                 note="n=0 from source text; n=1,2 via Sx(omega)=Sp(1/omega)"),
    ReferenceRow(3.0000, (0.5231, 0.7934, 0.9493), (1.6217, 1.8920, 2.0479), OSCILLATOR_ST),
    ReferenceRow(4.0000, (0.3792, 0.6496, 0.8055), (1.7655, 2.0359, 2.1918), OSCILLATOR_ST),
    ReferenceRow(5.0000, (0.2676, 0.5380, 0.6939), (1.8771, 2.1474, 2.3033), OSCILLATOR_ST),
    ReferenceRow(6.0000, (0.1765, 0.4468, 0.6027), (1.9682, 2.2386, 2.3945), OSCILLATOR_ST),
    ReferenceRow(7.0000, (0.0994, 0.3698, 0.5257), (2.0453, 2.3157, 2.4716), OSCILLATOR_ST),
    ReferenceRow(8.0050, (0.0323, 0.3027, 0.4586), (2.1124, 2.3828, 2.5386), OSCILLATOR_ST),
)

# Dimensionless entropies of the particle in a box versus confinement
# distance, states n = 1, 2, 3 (atomic units).  Sx is identical across
# states at fixed width, so the triple repeats one value.
def _box_row(xc: float, sx: float, sp: tuple[float, float, float]) -> ReferenceRow:
    return ReferenceRow(xc, (sx, sx, sx), sp, BOX_ST)


TABLE2_ROWS: tuple[ReferenceRow, ...] = (
    _box_row(0.1000, -2.6094, (4.8215, 5.2164, 5.3625)),
    _box_row(0.2000, -1.9163, (4.1283, 4.5232, 4.6694)),
    _box_row(0.3000, -1.5108, (3.7229, 4.1178, 4.2639)),
    _box_row(0.4000, -1.2231, (3.4352, 3.8301, 3.9762)),
    _box_row(0.5000, -1.0000, (3.2120, 3.6070, 3.7531)),
    _box_row(1.0000, -0.3069, (2.5189, 2.9138, 3.0599)),
    _box_row(1.5009, 0.0992, (2.1128, 2.5077, 2.6538)),
    _box_row(2.0000, 0.3863, (1.8257, 2.2207, 2.3668)),
    _box_row(2.5000, 0.6094, (1.6026, 1.9975, 2.1437)),
    _box_row(3.0000, 0.7918, (1.4203, 1.8152, 1.9613)),
    _box_row(3.5000, 0.9459, (1.2661, 1.6611, 1.8072)),
    _box_row(4.0000, 1.0794, (1.1326, 1.5275, 1.6737)),
    _box_row(4.5000, 1.1972, (1.0148, 1.4098, 1.5559)),
    _box_row(5.0000, 1.3026, (0.9094, 1.3044, 1.4505)),
    _box_row(6.0000, 1.4849, (0.7271, 1.1221, 1.2682)),
    _box_row(7.0000, 1.6391, (0.5730, 0.9679, 1.1140)),
    _box_row(8.0000, 1.7726, (0.4394, 0.8344, 0.9805)),
    _box_row(9.0050, 1.8909, (0.3211, 0.7160, 0.8621)),
)

TABLE1_OMEGAS: tuple[float, ...] = tuple(r.parameter for r in TABLE1_ROWS)
TABLE2_XCS: tuple[float, ...] = tuple(r.parameter for r in TABLE2_ROWS)


@dataclass(frozen=True)
class SpreadReference:
    """Quoted standard deviations for one ground/low state."""

    parameter: float
    dx: float
    dp: float
    product: float


# Oscillator ground state at three frequencies: dX, dP, and their
# product, plus the matching entropies (source text, section on the
# harmonic potential).
OSCILLATOR_SPREADS: tuple[SpreadReference, ...] = (
    SpreadReference(0.5, dx=1.0000, dp=0.5000, product=0.5),
    SpreadReference(2.5, dx=0.4472, dp=1.1180, product=0.5),
    SpreadReference(5.0, dx=0.3162, dp=1.5811, product=0.5),
)

# Particle in a box at xc = 6: dX for n = 1, 2, 3 (source text, section
# on the infinite well).  dX varies with n even though Sx does not.
BOX_SPREAD_XC = 6.0
BOX_SPREAD_DX = (1.0845, 1.5950, 1.6725)


@dataclass(frozen=True)
class CrossingReference:
    """Quoted Sx = Sp crossing for one state.

    bracket is a sign-changing interval for the root finder.  Ungated
    entries are quoted as approximate by the source; recomputing the
    roots of Sx - Sp gives xc = 4.1077, 5.0046, 5.3840 with common
    entropy 1.1060, 1.3035, 1.3766, so the quoted coordinates are kept
    for reporting but excluded from the validation gate.
    """

    n: int
    parameter: float
    entropy: float
    bracket: tuple[float, float]
    gated: bool = True


OSCILLATOR_CROSSINGS: tuple[CrossingReference, ...] = (
    CrossingReference(0, 1.0000, 1.0724, (0.5, 2.0)),
    CrossingReference(1, 1.0000, 1.3427, (0.5, 2.0)),
    CrossingReference(2, 1.0000, 1.4986, (0.5, 2.0)),
)

BOX_CROSSINGS: tuple[CrossingReference, ...] = (
    CrossingReference(1, 4.0000, 1.0794, (3.0, 5.0), gated=False),
    CrossingReference(2, 5.0000, 1.3026, (4.0, 6.0), gated=False),
    CrossingReference(3, 5.3975, 1.3653, (5.0, 6.0), gated=False),
)


@dataclass(frozen=True)
class ReferenceValue:
    """A single golden number with provenance and gating."""

    key: str
    value: float
    source: str  # "table1" | "table2" | "text" | "crossing"
    gated: bool = True
    note: str = ""


def _table_values(rows: tuple[ReferenceRow, ...], source: str, label: str,
                  n_list: tuple[int, int, int]) -> Iterator[ReferenceValue]:
    for row in rows:
        for slot, n in enumerate(n_list):
            head = f"{source}:{label}={row.parameter:.4f}:n={n}"
            yield ReferenceValue(f"{head}:sx", row.sx[slot], source, note=row.note)
            yield ReferenceValue(f"{head}:sp", row.sp[slot], source, note=row.note)
            yield ReferenceValue(f"{head}:st", row.st[slot], source, note=row.note)


def iter_reference_values() -> Iterator[ReferenceValue]:
    """Yield every golden value in the manifest, tables first."""
    yield from _table_values(TABLE1_ROWS, "table1", "omega", OSCILLATOR_N)
    yield from _table_values(TABLE2_ROWS, "table2", "xc", BOX_N)
    for ref in OSCILLATOR_SPREADS:
        head = f"text:ho:omega={ref.parameter:.4f}:n=0"
        yield ReferenceValue(f"{head}:dx", ref.dx, "text")
        yield ReferenceValue(f"{head}:dp", ref.dp, "text")
        yield ReferenceValue(f"{head}:product", ref.product, "text")
    for n, dx in zip(BOX_N, BOX_SPREAD_DX):
        yield ReferenceValue(f"text:box:xc={BOX_SPREAD_XC:.4f}:n={n}:dx", dx, "text")
    for ref in OSCILLATOR_CROSSINGS:
        head = f"crossing:ho:n={ref.n}"
        yield ReferenceValue(f"{head}:omega", ref.parameter, "crossing", ref.gated)
        yield ReferenceValue(f"{head}:entropy", ref.entropy, "crossing", ref.gated)
    for ref in BOX_CROSSINGS:
        head = f"crossing:box:n={ref.n}"
        note = "quoted as approximate; excluded from the gate"
        yield ReferenceValue(f"{head}:xc", ref.parameter, "crossing", ref.gated, note)
        yield ReferenceValue(f"{head}:entropy", ref.entropy, "crossing", ref.gated, note)
