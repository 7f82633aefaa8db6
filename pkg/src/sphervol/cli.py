"""Command-line front end.

Usage:
    sphervol exists --n 3 --a 0.1 --c 0.1
    sphervol angles --n 3 --a 0.5 --c 0.5 --degrees
    sphervol volume --n 4 --a 0.6 --c 0.9 --method mc --samples 10000000 --seed 7
    sphervol tetra --a 1.5707963 --by both
    sphervol octa --A 3.14159265 --by angle
    sphervol region --n 5 --grid 50 --out region.csv
    sphervol verify --n 4 --a 0.6 --c 0.9
    sphervol trapezoid --x 0.8 --y 1.1 --z 0.6

Output is one ``key=value`` pair per line, or a single JSON object with
``--json``.  Floats are written with 17 significant digits.  Exit codes:
0 success, 2 usage error, 3 domain/region error, 4 convergence or check
failure.
"""

from __future__ import annotations

import csv
import json
import math
import sys
import time
from functools import wraps

import click

from . import antiprism, embedding, spherical_trig, verify, volume
from .errors import ConvergenceError, DomainError, InconsistencyError, RegionError

EXIT_DOMAIN = 3
EXIT_CHECK = 4

REGION_HEADER = ["cos_a", "cos_c", "inside", "m1", "m2", "m3", "volume"]


def format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def parse_value(text: str):
    """Inverse of :func:`format_value` for the types it emits."""
    if text == "":
        return None
    if text in ("true", "false"):
        return text == "true"
    for kind in (int, float):
        try:
            return kind(text)
        except ValueError:
            pass
    return text


def format_record(record: dict, as_json: bool = False) -> str:
    if as_json:
        return json.dumps(record)
    return "\n".join(f"{key}={format_value(val)}" for key, val in record.items())


def parse_record(text: str) -> dict:
    out = {}
    for line in text.splitlines():
        if line.strip():
            key, _, val = line.partition("=")
            out[key] = parse_value(val)
    return out


def _margins(m: antiprism.ExistenceMargins) -> dict:
    return {"m1": m.m1, "m2": m.m2, "m3": m.m3}


def command(fn):
    """Shared options and error-to-exit-code mapping for every subcommand."""

    @click.option("--json", "as_json", is_flag=True, help="Emit a single JSON object.")
    @click.option("--timing", is_flag=True, help="Append elapsed wall time (elapsed_s).")
    @wraps(fn)
    def wrapper(as_json, timing, **kwargs):
        start = time.perf_counter()
        try:
            record = fn(**kwargs)
        except RegionError as exc:
            err = {"error": "region", "message": str(exc)}
            if exc.margins is not None:
                err.update(_margins(exc.margins))
            click.echo(format_record(err, as_json), err=True)
            sys.exit(EXIT_DOMAIN)
        except DomainError as exc:
            click.echo(format_record({"error": "domain", "message": str(exc)}, as_json), err=True)
            sys.exit(EXIT_DOMAIN)
        except (ConvergenceError, InconsistencyError) as exc:
            click.echo(format_record({"error": "convergence", "message": str(exc)}, as_json), err=True)
            sys.exit(EXIT_CHECK)
        if record is None:
            return
        exit_code = record.pop("_exit", 0)
        if timing:
            record["elapsed_s"] = time.perf_counter() - start
        click.echo(format_record(record, as_json))
        sys.exit(exit_code)

    return wrapper


def spec_options(fn):
    fn = click.option("--c", "c", type=float, required=True, help="Lateral edge length (radians).")(fn)
    fn = click.option("--a", "a", type=float, required=True, help="n-gon edge length (radians).")(fn)
    fn = click.option("--n", "n", type=click.IntRange(min=2), required=True, help="Gonality n >= 2.")(fn)
    return fn


def _spec(n, a, c) -> antiprism.AntiprismSpec:
    return antiprism.AntiprismSpec(n, a, c)


@click.group()
def cli():
    """Existence, dihedral angles and volumes of spherical antiprisms."""


@cli.command()
@spec_options
@command
def exists(n, a, c):
    """Test whether A_n(a, c) exists and print the three existence margins."""
    m = antiprism.existence_margins(_spec(n, a, c))
    return {"n": n, "a": a, "c": c, "inside": m.admissible, **_margins(m)}


@cli.command()
@spec_options
@click.option("--degrees", is_flag=True, help="Also print the angles in degrees.")
@command
def angles(n, a, c, degrees):
    """Dihedral angles A (along a-edges) and C (along c-edges)."""
    d = antiprism.dihedral_angles(_spec(n, a, c))
    record = {"n": n, "a": a, "c": c, "A": d.A, "C": d.C}
    if degrees:
        record.update(A_deg=math.degrees(d.A), C_deg=math.degrees(d.C))
    return record


@cli.command(name="volume")
@spec_options
@click.option("--method", type=click.Choice(["quadrature", "mc"]), default="quadrature", show_default=True)
@click.option("--rel-tol", type=float, default=volume.DEFAULT_QUADRATURE.rel_tol, show_default=True)
@click.option("--abs-tol", type=float, default=volume.DEFAULT_QUADRATURE.abs_tol, show_default=True)
@click.option("--samples", type=click.IntRange(min=1), default=1_000_000, show_default=True)
@click.option("--seed", type=click.IntRange(min=0, max=2**64 - 1), envvar="SPHERVOL_SEED", default=0, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@command
def volume_cmd(n, a, c, method, rel_tol, abs_tol, samples, seed, workers):
    """Volume of A_n(a, c) by quadrature or by Monte-Carlo sampling."""
    spec = _spec(n, a, c)
    antiprism.require_exists(spec)
    if method == "mc":
        if antiprism.on_degenerate_boundary(spec):
            est = volume.VolumeEstimate(0.0, 0.0, "monte-carlo", 0)
        else:
            est = embedding.monte_carlo_volume(embedding.build(spec), embedding.McConfig(samples, seed), workers)
    else:
        est = volume.antiprism_volume(spec, volume.QuadratureConfig(rel_tol=rel_tol, abs_tol=abs_tol))
    record = {
        "n": n,
        "a": a,
        "c": c,
        "c0": antiprism.c_lower_bound(n, a),
        "value": est.value,
        "error_bound": est.error_bound,
        "method": est.method,
        "evaluations": est.evaluations,
    }
    if method == "mc":
        record["seed"] = seed
    return record


def _regular(name, edge_from_angle, angle_from_edge, by_edge, by_angle):
    @click.option("--a", "a", type=float, default=None, help="Edge length (radians).")
    @click.option("--A", "A", type=float, default=None, help="Dihedral angle (radians).")
    @click.option("--by", type=click.Choice(["edge", "angle", "both"]), default=None)
    @command
    def run(a, A, by):
        if (a is None) == (A is None):
            raise click.UsageError("give exactly one of --a or --A")
        if by is None:
            by = "edge" if a is not None else "angle"
        if a is None:
            a = edge_from_angle(A)
        elif by != "edge":
            A = angle_from_edge(a)
        record = {"a": a, "A": A}
        if by in ("edge", "both"):
            est = by_edge(a)
            record.update(volume_by_edge=est.value, error_bound_edge=est.error_bound)
        if by in ("angle", "both"):
            est = by_angle(A)
            record.update(volume_by_angle=est.value, error_bound_angle=est.error_bound)
        return record

    run.__name__ = name
    return run


tetra = cli.command(name="tetra", help="Volume of the regular spherical tetrahedron.")(
    _regular(
        "tetra",
        antiprism.tetra_edge_from_angle,
        antiprism.tetra_angle_from_edge,
        volume.tetra_volume_by_edge,
        volume.tetra_volume_by_angle,
    )
)
octa = cli.command(name="octa", help="Volume of the regular spherical octahedron.")(
    _regular(
        "octa",
        antiprism.octa_edge_from_angle,
        antiprism.octa_angle_from_edge,
        volume.octa_volume_by_edge,
        volume.octa_volume_by_angle,
    )
)


@cli.command()
@click.option("--n", "n", type=click.IntRange(min=2), required=True)
@click.option("--grid", type=click.IntRange(min=2), default=50, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None, help="CSV path (default stdout).")
@command
def region(n, grid, out):
    """Sample the existence region on a grid of (cos a, cos c) and write CSV."""
    rows = volume.region_grid(n, grid)
    handle = open(out, "w", newline="") if out else sys.stdout
    try:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(REGION_HEADER)
        for r in rows:
            writer.writerow(
                [format_value(v) for v in (r.cos_a, r.cos_c, r.inside, r.m1, r.m2, r.m3, r.volume)]
            )
    finally:
        if out:
            handle.close()
    if out:
        return {"n": n, "grid": grid, "rows": len(rows), "out": out}
    return None


@cli.command(name="verify")
@spec_options
@click.option("--samples", type=click.IntRange(min=1), default=1_000_000, show_default=True)
@click.option("--seed", type=click.IntRange(min=0, max=2**64 - 1), envvar="SPHERVOL_SEED", default=0, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--step", type=float, default=1e-4, show_default=True, help="Schläfli central-difference step.")
@command
def verify_cmd(n, a, c, samples, seed, workers, step):
    """Cross-check angles, centre distance and volume against the coordinate embedding."""
    rep = verify.verify_spec(_spec(n, a, c), samples=samples, seed=seed, workers=workers, step=step)
    record = {
        "n": n,
        "a": a,
        "c": c,
        "samples": samples,
        "seed": seed,
        "quadrature_volume": rep.quadrature_volume,
        "quadrature_error": rep.quadrature_error,
        "mc_volume": rep.mc_volume,
        "mc_sigma": rep.mc_sigma,
    }
    for check in rep.checks:
        record[check.name] = check.value
        record[f"{check.name}_tol"] = check.tolerance
        record[f"{check.name}_pass"] = check.passed
    record["passed"] = rep.passed
    record["_exit"] = 0 if rep.passed else EXIT_CHECK
    return record


@cli.command()
@click.option("--x", "x", type=float, required=True, help="Base at angle A (radians).")
@click.option("--y", "y", type=float, required=True, help="Lateral side (radians).")
@click.option("--z", "z", type=float, required=True, help="Base at angle C (radians).")
@command
def trapezoid(x, y, z):
    """Base angles of an isosceles spherical trapezoid."""
    A, C = spherical_trig.trapezoid_angles(spherical_trig.TrapezoidShape(x, y, z))
    return {"x": x, "y": y, "z": z, "A": A, "C": C}


def main():
    cli()


if __name__ == "__main__":
    main()
