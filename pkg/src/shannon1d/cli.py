"""Command-line interface.

Subcommands: state, table, figure, crossing, validate.  Output formats
are text (human-readable), csv (delimited, `# key=value` metadata
header), and json (full-precision envelope).  All numeric flags take
atomic-unit values.

Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 validation
failure.  The environment variable SHANNON1D_ABS_TOL overrides the
default quadrature tolerance.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

import click

from . import reference
from .analysis import (FIGURE_IDS, FigureData, TableArtifact,
                       ValidationReport, canonical_system, figure_data,
                       find_crossing, generate_table, make_state,
                       validate_reference_values)
from .entropy import QuadratureSpec, entropy_sum, uncertainty
from .errors import ShannonError
from .units import atomic_units

SCHEMA_VERSION = "1"
ENV_ABS_TOL = "SHANNON1D_ABS_TOL"
DEFAULT_PRECISION = 4

_SYSTEM_CHOICES = ["ho", "box", "oscillator", "well"]


class _ValidationFailed(Exception):
    """Internal: maps a failed validation run to exit code 3."""


def _default_abs_tol() -> float:
    raw = os.environ.get(ENV_ABS_TOL)
    if raw is None:
        return 1e-10
    try:
        value = float(raw)
    except ValueError:
        raise click.UsageError(
            f"{ENV_ABS_TOL} must be a positive float, got {raw!r}") from None
    if value <= 0.0:
        raise click.UsageError(
            f"{ENV_ABS_TOL} must be a positive float, got {raw!r}")
    return value


def _quad_spec(tolerance: float | None) -> QuadratureSpec:
    tol = tolerance if tolerance is not None else _default_abs_tol()
    try:
        return QuadratureSpec(abs_tolerance=tol)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None


def _fmt(value: float, precision: int) -> str:
    text = f"{value:.{precision}f}"
    if float(text) == 0.0:
        text = text.replace("-", "", 1)  # never emit -0.0000
    return text


def _meta(command: str, spec: QuadratureSpec, precision: int,
          **extra) -> dict:
    meta: dict = {"schema_version": SCHEMA_VERSION, "command": command}
    meta.update(extra)
    units = atomic_units()
    meta["units"] = f"a0={units.a0};hbar={units.hbar};m={units.m}"
    meta["abs_tolerance"] = spec.abs_tolerance
    meta["max_subdivisions"] = spec.max_subdivisions
    meta["momentum_tail_radius"] = (
        "auto" if spec.momentum_tail_radius is None else spec.momentum_tail_radius)
    meta["precision"] = precision
    return meta


def _csv_text(meta: dict, header: list[str], rows: list[list[str]]) -> str:
    lines = [f"# {key}={value}" for key, value in meta.items()]
    lines.append(",".join(header))
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _json_text(meta: dict, payload) -> str:
    return json.dumps({**meta, "payload": payload}, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    path = Path(out)
    if path.parent != Path(""):
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="")


def _parameter_kind(system: str) -> str:
    return "omega" if canonical_system(system) == "ho" else "xc"


def _resolve_parameter(system: str, omega: float | None,
                       xc: float | None) -> float:
    kind = _parameter_kind(system)
    given = {"omega": omega, "xc": xc}
    value = given.pop(kind)
    other_name, other = next(iter(given.items()))
    if other is not None:
        raise click.UsageError(
            f"--{other_name} does not apply to system '{system}'")
    if value is None:
        raise click.UsageError(f"system '{system}' requires --{kind}")
    return value


def _parse_grid(raw: tuple[str, ...]) -> tuple[float, ...] | None:
    if not raw:
        return None
    values = []
    for chunk in raw:
        for piece in chunk.split(","):
            piece = piece.strip()
            if not piece:
                continue
            try:
                values.append(float(piece))
            except ValueError:
                raise click.UsageError(
                    f"grid values must be numbers, got {piece!r}") from None
    if not values:
        raise click.UsageError("empty --grid")
    return tuple(values)


def _format_option(choices: list[str], default: str):
    return click.option("--format", "fmt", type=click.Choice(choices),
                        default=default, show_default=True,
                        help="output format")


_out_option = click.option("--out", type=click.Path(dir_okay=False),
                           default=None, help="write output to this file")
_precision_option = click.option("--precision", type=int,
                                 default=DEFAULT_PRECISION, show_default=True,
                                 help="decimals in text/csv output")
_tolerance_option = click.option("--tolerance", type=float, default=None,
                                 help="quadrature absolute tolerance "
                                      f"(default 1e-10, or {ENV_ABS_TOL})")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli() -> None:
    """Entropic (Sx, Sp, St) and standard-deviation uncertainty measures
    for the 1D harmonic oscillator (`ho`) and the particle in a box
    (`box`), in atomic units."""


@cli.command()
@click.argument("system", type=click.Choice(_SYSTEM_CHOICES))
@click.option("--n", type=int, required=True, help="quantum number")
@click.option("--omega", type=float, default=None,
              help="oscillator angular frequency (a.u.)")
@click.option("--xc", type=float, default=None,
              help="box confinement distance (a.u.)")
@_format_option(["text", "csv", "json"], "text")
@_out_option
@_precision_option
@_tolerance_option
def state(system: str, n: int, omega: float | None, xc: float | None,
          fmt: str, out: str | None, precision: int,
          tolerance: float | None) -> None:
    """Entropy and uncertainty report for a single quantum state."""
    spec = _quad_spec(tolerance)
    parameter = _resolve_parameter(system, omega, xc)
    try:
        quantum_state = make_state(system, n, parameter)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    entropy = entropy_sum(quantum_state, spec=spec)
    spread = uncertainty(quantum_state, spec=spec)
    kind = _parameter_kind(system)
    meta = _meta("state", spec, precision, system=canonical_system(system),
                 n=n, **{kind: parameter})
    entropy_fields = ["sx", "sp", "st", "bbm_margin"]
    spread_fields = ["mean_x", "mean_x2", "mean_p", "mean_p2",
                     "dx", "dp", "product", "kennard_margin"]
    if fmt == "json":
        payload = {
            "system": canonical_system(system), "n": n, "parameter": parameter,
            "entropy": {f: getattr(entropy, f) for f in entropy_fields},
            "uncertainty": {f: getattr(spread, f) for f in spread_fields},
        }
        _emit(_json_text(meta, payload), out)
        return
    values = [(f, getattr(entropy, f)) for f in entropy_fields]
    values += [(f, getattr(spread, f)) for f in spread_fields]
    if fmt == "csv":
        header = ["system", "n", kind] + [name for name, _ in values]
        row = ([canonical_system(system), str(n), _fmt(parameter, precision)]
               + [_fmt(v, precision) for _, v in values])
        _emit(_csv_text(meta, header, [row]), out)
        return
    lines = [f"system = {canonical_system(system)}", f"n = {n}",
             f"{kind} = {_fmt(parameter, precision)}"]
    lines += [f"{name} = {_fmt(v, precision)}" for name, v in values]
    _emit("\n".join(lines) + "\n", out)


def _table_payload(table: TableArtifact) -> dict:
    return {
        "system": table.system,
        "n_list": list(table.n_list),
        "rows": [{"parameter": row.parameter, "sx": list(row.sx),
                  "sp": list(row.sp), "st": list(row.st)}
                 for row in table.rows],
    }


def _table_csv(table: TableArtifact, meta: dict, precision: int) -> str:
    header = ["parameter"]
    for quantity in ("sx", "sp", "st"):
        header += [f"{quantity}_n{n}" for n in table.n_list]
    rows = []
    for row in table.rows:
        cells = [_fmt(row.parameter, precision)]
        for triple in (row.sx, row.sp, row.st):
            cells += [_fmt(v, precision) for v in triple]
        rows.append(cells)
    return _csv_text(meta, header, rows)


@cli.command()
@click.argument("table_id", type=click.Choice(["1", "2"]))
@click.option("--grid", multiple=True,
              help="override the parameter grid (repeat or comma-separate)")
@_format_option(["csv", "json"], "csv")
@_out_option
@_precision_option
@_tolerance_option
def table(table_id: str, grid: tuple[str, ...], fmt: str, out: str | None,
          precision: int, tolerance: float | None) -> None:
    """Reproduce reference table 1 (oscillator) or 2 (box)."""
    spec = _quad_spec(tolerance)
    if table_id == "1":
        system, default_grid, ns = "ho", reference.TABLE1_OMEGAS, reference.OSCILLATOR_N
    else:
        system, default_grid, ns = "box", reference.TABLE2_XCS, reference.BOX_N
    chosen = _parse_grid(grid) or default_grid
    try:
        artifact = generate_table(system, chosen, ns, spec=spec)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    meta = _meta("table", spec, precision, table=int(table_id), system=system,
                 n_list=",".join(str(n) for n in ns), rows=len(artifact.rows))
    if fmt == "json":
        _emit(_json_text(meta, _table_payload(artifact)), out)
    else:
        _emit(_table_csv(artifact, meta, precision), out)


def _figure_payload(data: FigureData) -> dict:
    return {
        "figure_id": data.figure_id,
        "description": data.description,
        "series": [{"label": s.label, "panel": s.panel,
                    "x": list(s.x), "y": list(s.y)} for s in data.series],
    }


def _figure_csv(data: FigureData, meta: dict, precision: int) -> str:
    rows = []
    for series in data.series:
        for x, y in zip(series.x, series.y):
            rows.append([series.label, series.panel,
                         _fmt(x, precision), _fmt(y, precision)])
    return _csv_text(meta, ["series", "panel", "x", "y"], rows)


@cli.command()
@click.argument("figure_id", type=int)
@_format_option(["csv", "json"], "csv")
@_out_option
@_precision_option
@_tolerance_option
@click.option("--no-plot", is_flag=True,
              help="with --out, skip rendering the .png image")
def figure(figure_id: int, fmt: str, out: str | None, precision: int,
           tolerance: float | None, no_plot: bool) -> None:
    """Emit the dataset behind one of the standard figures (2-8).

    With --out, the delimited data is written to the given path and a
    rendered .png image is placed alongside it (disable with --no-plot).
    """
    if figure_id not in FIGURE_IDS:
        raise click.UsageError(
            f"unknown figure id {figure_id}; expected one of {FIGURE_IDS}")
    spec = _quad_spec(tolerance)
    data = figure_data(figure_id, spec=spec)
    meta = _meta("figure", spec, precision, figure=data.figure_id,
                 description=data.description)
    if fmt == "json":
        _emit(_json_text(meta, _figure_payload(data)), out)
    else:
        _emit(_figure_csv(data, meta, precision), out)
    if out is not None and not no_plot:
        from . import plotting

        image = plotting.render_figure(data, Path(out).with_suffix(".png"))
        click.echo(f"wrote {image}", err=True)


@cli.command()
@click.argument("system", type=click.Choice(_SYSTEM_CHOICES))
@click.option("--n", type=int, required=True, help="quantum number")
@click.option("--bracket", nargs=2, type=float, default=None,
              help="search interval LO HI (defaults to the reference bracket)")
@_format_option(["text", "csv", "json"], "text")
@_out_option
@_precision_option
@_tolerance_option
def crossing(system: str, n: int, bracket: tuple[float, float] | None,
             fmt: str, out: str | None, precision: int,
             tolerance: float | None) -> None:
    """Locate the parameter where Sx = Sp for one state."""
    spec = _quad_spec(tolerance)
    canonical = canonical_system(system)
    if bracket is None:
        refs = (reference.OSCILLATOR_CROSSINGS if canonical == "ho"
                else reference.BOX_CROSSINGS)
        by_n = {ref.n: ref.bracket for ref in refs}
        if n not in by_n:
            raise click.UsageError(
                f"no default bracket for {canonical} n={n}; pass --bracket LO HI")
        bracket = by_n[n]
    try:
        result = find_crossing(canonical, n, bracket, spec=spec)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    kind = _parameter_kind(canonical)
    meta = _meta("crossing", spec, precision, system=canonical, n=n,
                 bracket=f"{bracket[0]!r},{bracket[1]!r}")
    if fmt == "json":
        payload = {"system": canonical, "n": n, "bracket": list(result.bracket),
                   "parameter_value": result.parameter_value,
                   "entropy_value": result.entropy_value}
        _emit(_json_text(meta, payload), out)
        return
    if fmt == "csv":
        header = ["system", "n", "bracket_lo", "bracket_hi", kind, "entropy"]
        row = [canonical, str(n), _fmt(result.bracket[0], precision),
               _fmt(result.bracket[1], precision),
               _fmt(result.parameter_value, precision),
               _fmt(result.entropy_value, precision)]
        _emit(_csv_text(meta, header, [row]), out)
        return
    lines = [f"system = {canonical}", f"n = {n}",
             f"bracket = [{_fmt(result.bracket[0], precision)}, "
             f"{_fmt(result.bracket[1], precision)}]",
             f"{kind} = {_fmt(result.parameter_value, precision)}",
             f"entropy = {_fmt(result.entropy_value, precision)}"]
    _emit("\n".join(lines) + "\n", out)


def _validate_payload(report: ValidationReport) -> dict:
    return {
        "tolerance": report.tolerance,
        "passed": report.passed,
        "entries": [{"key": e.key, "expected": e.expected,
                     "computed": e.computed, "deviation": e.deviation,
                     "gated": e.gated, "passed": e.passed}
                    for e in report.entries],
        "trends": [{"key": t.key, "detail": t.detail, "passed": t.passed}
                   for t in report.trends],
    }


def _validate_csv(report: ValidationReport, meta: dict) -> str:
    header = ["kind", "key", "expected", "computed", "deviation", "gated",
              "passed", "detail"]
    rows = []
    for e in report.entries:
        rows.append(["value", e.key, repr(e.expected), repr(e.computed),
                     f"{e.deviation:.3e}", str(e.gated).lower(),
                     str(e.passed).lower(), ""])
    for t in report.trends:
        rows.append(["trend", t.key, "", "", "", "true",
                     str(t.passed).lower(), t.detail])
    return _csv_text(meta, header, rows)


def _validate_text(report: ValidationReport) -> str:
    gated = [e for e in report.entries if e.gated]
    ungated = [e for e in report.entries if not e.gated]
    lines = [f"tolerance = {report.tolerance!r}",
             f"gated values: {len(gated)} checked, "
             f"{sum(e.passed for e in gated)} passed"]
    for e in gated:
        if not e.passed:
            lines.append(f"  FAIL {e.key}: expected {e.expected!r}, "
                         f"computed {e.computed!r} (deviation {e.deviation:.3e})")
    if ungated:
        lines.append(f"ungated values: {len(ungated)} reported, not gated")
        for e in ungated:
            lines.append(f"  info {e.key}: expected {e.expected!r}, "
                         f"computed {e.computed!r} (deviation {e.deviation:.3e})")
    for t in report.trends:
        lines.append(f"trend {'ok ' if t.passed else 'FAIL'} {t.key}: {t.detail}")
    lines.append(f"result: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


@cli.command()
@click.option("--tolerance", type=float, default=reference.VALIDATION_TOL,
              show_default=True, help="comparison tolerance for golden values")
@click.option("--only", default=None,
              help="restrict to values whose source or key contains this text")
@_format_option(["text", "csv", "json"], "text")
@_out_option
@_precision_option
def validate(tolerance: float, only: str | None, fmt: str, out: str | None,
             precision: int) -> None:
    """Recompute every reference value and compare within tolerance.

    Exits 0 only if all gated values pass; quadrature precision follows
    SHANNON1D_ABS_TOL."""
    if tolerance <= 0.0:
        raise click.UsageError("--tolerance must be positive")
    spec = _quad_spec(None)
    report = validate_reference_values(spec=spec, tolerance=tolerance,
                                       only=only)
    meta = _meta("validate", spec, precision, tolerance=tolerance,
                 only="" if only is None else only)
    if fmt == "json":
        _emit(_json_text(meta, _validate_payload(report)), out)
    elif fmt == "csv":
        _emit(_validate_csv(report, meta), out)
    else:
        _emit(_validate_text(report), out)
    if not report.passed:
        failures = len(report.gated_failures)
        trend_failures = sum(not t.passed for t in report.trends)
        raise _ValidationFailed(
            f"validation failed: {failures} gated value(s) and "
            f"{trend_failures} trend check(s) out of tolerance {tolerance!r}")


def main(argv: list[str] | None = None) -> int:
    """Entry point mapping errors onto documented exit codes."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return int(exc.exit_code)
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    except _ValidationFailed as exc:
        click.echo(str(exc), err=True)
        return 3
    except ShannonError as exc:
        click.echo(f"numerical failure: {exc}", err=True)
        return 2
    return 0
