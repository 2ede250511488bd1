"""Command-line interface.

Subcommands: area, verify, omega-grid, eval.  Exit codes: 0 ok,
1 verification tolerance failure, 2 input/domain error, 3 I/O error.
"""

from __future__ import annotations

import json
import sys

import click
import numpy as np

from .area import area_report
from .barycentric import EdgeLabel, VertexLabel, barycentric
from .errors import SphwhitneyError
from .fieldgrid import figure_preset, sample_grid, write_csv
from .forms import Covector, d_lambda, omega, whitney1
from .geom import make_triangle, normalize, tangent_basis
from .quadrature import ArcRule, TriangleRule, VERIFY_TOLERANCES, verify_triangle

__all__ = ["cli", "main"]


def _fail(exc: Exception, code: int = 2) -> None:
    click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
    sys.exit(code)


def _triangle_from(vertices: tuple[float, ...]):
    vs = [normalize(np.array(vertices[i : i + 3])) for i in (0, 3, 6)]
    return make_triangle(*vs)


@click.group()
def cli():
    """Geodesic-triangle areas, Whitney forms, and verification quadrature."""


@cli.command("area", context_settings={"ignore_unknown_options": True})
@click.argument("vertices", nargs=9, type=float)
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
def cmd_area(vertices, as_json):
    """Evaluate every area formula for the triangle VERTICES (nine reals,
    normalized before use)."""
    try:
        t = _triangle_from(vertices)
    except (SphwhitneyError, ValueError) as exc:
        _fail(exc)
    report = area_report(t)
    if as_json:
        click.echo(json.dumps(report.as_dict(), indent=2, sort_keys=True))
        return
    for key, val in report.as_dict().items():
        click.echo(f"{key:26s} {val:.15g}")


@cli.command("verify", context_settings={"ignore_unknown_options": True})
@click.argument("vertices", nargs=9, type=float)
@click.option("--arc-order", type=int, default=32, show_default=True, help="Gauss points per arc.")
@click.option("--depth", type=int, default=4, show_default=True, help="Triangle subdivision depth.")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
def cmd_verify(vertices, arc_order, depth, as_json):
    """Run the integral/algebraic identity suite; exit 0 only if every
    residual is below its declared tolerance."""
    try:
        t = _triangle_from(vertices)
        residuals = verify_triangle(t, ArcRule(arc_order), TriangleRule(depth))
    except (SphwhitneyError, ValueError) as exc:
        _fail(exc)
    ok = all(residuals[k] <= VERIFY_TOLERANCES[k] for k in residuals)
    if as_json:
        click.echo(
            json.dumps(
                {"residuals": residuals, "tolerances": VERIFY_TOLERANCES, "pass": ok},
                indent=2,
                sort_keys=True,
            )
        )
    else:
        for key in sorted(residuals):
            status = "ok" if residuals[key] <= VERIFY_TOLERANCES[key] else "FAIL"
            click.echo(f"{key:24s} {residuals[key]:.3e}  (tol {VERIFY_TOLERANCES[key]:.0e})  {status}")
        click.echo("pass" if ok else "FAIL")
    sys.exit(0 if ok else 1)


@cli.command("omega-grid", context_settings={"ignore_unknown_options": True})
@click.argument("vertices", nargs=-1, type=float)
@click.option("--figure", type=click.IntRange(1, 6), default=None, help="Built-in figure preset.")
@click.option("--hemisphere", type=click.Choice(["upper", "lower"]), default=None)
@click.option("--resolution", type=int, default=64, show_default=True)
@click.option("--scaled/--unscaled", default=True, help="Emit S*omega (default) or omega.")
@click.option("--out", type=click.Path(dir_okay=False, writable=False), default="-", show_default=True)
@click.option("--json", "as_json", is_flag=True, hidden=True)
def cmd_omega_grid(vertices, figure, hemisphere, resolution, scaled, out, as_json):
    """Sample the omega field over one hemisphere and emit the v1 CSV.

    Give either nine VERTICES or --figure; points inside the pole guard
    band are emitted with an empty value field.
    """
    notes: list[str] = []
    try:
        if figure is not None:
            if vertices:
                raise ValueError("give either nine vertices or --figure, not both")
            t, preset_hemisphere, notes = figure_preset(figure)
            notes = [f"figure preset {figure}"] + notes
            if hemisphere is None:
                hemisphere = preset_hemisphere
        else:
            if len(vertices) != 9:
                raise ValueError(f"expected 9 vertex components, got {len(vertices)}")
            t = _triangle_from(vertices)
            if hemisphere is None:
                hemisphere = "upper"
        grid = sample_grid(t, hemisphere=hemisphere, resolution=resolution, scaled=scaled, notes=notes)
    except (SphwhitneyError, ValueError) as exc:
        _fail(exc)
    try:
        if out == "-":
            write_csv(grid, sys.stdout)
        else:
            with open(out, "w", newline="") as fh:
                write_csv(grid, fh)
    except OSError as exc:
        _fail(exc, code=3)


@cli.command("eval", context_settings={"ignore_unknown_options": True})
@click.argument("vertices", nargs=9, type=float)
@click.argument("point", nargs=3, type=float)
@click.option(
    "--what",
    type=click.Choice(["lambda", "dlambda", "whitney1", "omega"]),
    default="lambda",
    show_default=True,
)
@click.option("--json", "as_json", is_flag=True, hidden=True)
def cmd_eval(vertices, point, what, as_json):
    """Evaluate barycentric coordinates, their differentials, Whitney
    1-forms, or omega at POINT (normalized before use).  Output is JSON."""

    def covector_payload(cov: Covector) -> dict:
        basis = tangent_basis(cov.base)
        c1, c2 = cov.tangent_components(basis)
        return {"coeff": list(map(float, cov.coeff)), "tangent_components": [c1, c2]}

    try:
        t = _triangle_from(vertices)
        x = normalize(np.array(point))
        if what == "lambda":
            lam = barycentric(t, x)
            payload = {"lambda": {"A": lam.lA, "B": lam.lB, "C": lam.lC}}
        elif what == "dlambda":
            payload = {
                "dlambda": {v.value: covector_payload(d_lambda(t, x, v)) for v in VertexLabel}
            }
        elif what == "whitney1":
            payload = {
                "whitney1": {e.value: covector_payload(whitney1(t, x, e)) for e in EdgeLabel}
            }
        else:
            payload = {"omega": omega(t, x)}
    except (SphwhitneyError, ValueError) as exc:
        _fail(exc)
    payload["point"] = list(map(float, x))
    click.echo(json.dumps(payload, indent=2, sort_keys=True))


def main():
    cli()


if __name__ == "__main__":
    main()
