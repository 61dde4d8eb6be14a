"""Command-line frontend.

Exit codes: 0 success (or member), 3 clean negative verdict, 2 input or
configuration error.  Flags mirror the class symbols: --m, --alpha,
--beta, --delta, --degree.
"""

from __future__ import annotations

import csv
import functools
import io as _io
import sys
from pathlib import Path

import click
import numpy as np

from . import io
from .errors import HarmonicError
from .operator import (
    ClassParams,
    apply_integral_operator,
    class_functional_values,
    coefficient_sum,
    convexity_radius,
    distortion_bounds,
    extreme_point_g,
    extreme_point_h,
    is_member_sufficient,
    random_member,
    sharp_function,
)
from .series import DEFAULT_DEGREE, Convention, convolve, evaluate, jacobian, starlike_values
from .series import neighborhood_distance
from .sweep import verify_all
from .verify import SampleGrid, check_neighborhood_starlike

EXIT_OK, EXIT_INPUT, EXIT_NEGATIVE = 0, 2, 3
fmt = io.fmt


def _fail(msg: str):
    click.echo(f"error: {msg}", err=True)
    sys.exit(EXIT_INPUT)


def guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (HarmonicError, OSError, ValueError) as exc:
            _fail(str(exc))
    return wrapper


def params_options(fn):
    fn = click.option("--beta", type=float, default=0.0, show_default=True)(fn)
    fn = click.option("--alpha", type=float, default=0.0, show_default=True)(fn)
    fn = click.option("--m", "m", type=int, default=0, show_default=True)(fn)
    return fn


def _params(m, alpha, beta) -> ClassParams:
    return ClassParams(m, alpha, beta)


def _emit(text: str, output):
    if output:
        Path(output).write_text(text)
    else:
        click.echo(text, nl=False)


def _emit_series(f, output):
    _emit(io.dumps(io.series_to_dict(f)) + "\n", output)


output_option = click.option("-o", "--output", type=click.Path(dir_okay=False),
                             help="Write to a file instead of stdout.")


@click.group()
def main():
    """Harmonic univalent classes defined through the operator I^m."""


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@params_options
@guarded
def member(file, m, alpha, beta):
    """Coefficient membership test for a series file."""
    params = _params(m, alpha, beta)
    f = io.load_series(file)
    s = coefficient_sum(f, params)
    ok = is_member_sufficient(f, params)
    click.echo(f"sum={fmt(s)} threshold={fmt(params.budget)} member={str(ok).lower()}")
    sys.exit(EXIT_OK if ok else EXIT_NEGATIVE)


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--m", "m", type=int, required=True)
@output_option
@guarded
def operator(file, m, output):
    """Apply I^m to a series file."""
    if m < 0:
        raise HarmonicError("--m must be nonnegative")
    _emit_series(apply_integral_operator(io.load_series(file), m), output)


@main.command()
@click.option("--kind", type=click.Choice(["h", "g"]), required=True)
@click.option("--v", "v", type=int, required=True)
@click.option("--degree", type=int, default=DEFAULT_DEGREE, show_default=True)
@params_options
@output_option
@guarded
def extremal(kind, v, degree, m, alpha, beta, output):
    """Extreme point h_v or g_v of the negative-coefficient class."""
    params = _params(m, alpha, beta)
    gen = extreme_point_h if kind == "h" else extreme_point_g
    _emit_series(gen(params, v, degree), output)


def _parse_weights(items, lo):
    out = {}
    for item in items:
        try:
            k, val = item.split("=")
            k, val = int(k), float(val)
        except ValueError:
            raise HarmonicError(f"weight '{item}' must look like v=weight") from None
        if k < lo:
            raise HarmonicError(f"weight index {k} must be >= {lo}")
        out[k] = val
    return out


@main.command()
@click.option("--x", "xs", multiple=True, help="Analytic weight, v=x_v (v >= 2).")
@click.option("--y", "ys", multiple=True, help="Co-analytic weight, v=y_v (v >= 1).")
@click.option("--degree", type=int, default=None)
@params_options
@output_option
@guarded
def sharp(xs, ys, degree, m, alpha, beta, output):
    """Member attaining equality in the coefficient bound."""
    params = _params(m, alpha, beta)
    x, y = _parse_weights(xs, 2), _parse_weights(ys, 1)
    n = max([1] + list(x) + list(y))
    degree = degree or n
    xv = [x.get(v, 0.0) for v in range(2, n + 1)]
    yv = [y.get(v, 0.0) for v in range(1, n + 1)]
    _emit_series(sharp_function(params, xv, yv, degree), output)


@main.command()
@click.option("--b1", type=float, default=0.0, show_default=True)
@click.option("--r", "radii", type=float, multiple=True, required=True)
@params_options
@guarded
def distort(b1, radii, m, alpha, beta):
    """Distortion bounds for |f| on |z| = r."""
    params = _params(m, alpha, beta)
    for r in radii:
        lo, hi = distortion_bounds(params, b1, r)
        click.echo(f"r={fmt(r)} lower={fmt(lo)} upper={fmt(hi)}")


@main.command()
@click.option("--beta", type=float, required=True)
@click.option("--b1", type=float, default=0.0, show_default=True)
@click.option("--max-v", type=int, default=DEFAULT_DEGREE, show_default=True)
@guarded
def radius(beta, b1, max_v):
    """Radius of the disc on which members are convex."""
    res = convexity_radius(beta, b1, max_v)
    click.echo(f"radius={fmt(res.radius)} v={res.v}")


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.argument("other", type=click.Path(dir_okay=False), required=False)
@click.option("--delta", type=float, default=None)
@click.option("--trials", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@params_options
@guarded
def neighborhood(file, other, delta, trials, seed, m, alpha, beta):
    """Distance between two series, or a neighborhood starlikeness check."""
    f = io.load_series(file)
    if other is not None:
        d = neighborhood_distance(f, io.load_series(other))
        line = f"distance={fmt(d)}"
        if delta is not None:
            line += f" in_neighborhood={str(d <= delta).lower()}"
        click.echo(line)
        if delta is not None and d > delta:
            sys.exit(EXIT_NEGATIVE)
        return
    if delta is None:
        raise HarmonicError("--delta is required without a second file")
    params = _params(m, alpha, beta)
    rep = check_neighborhood_starlike(f, params, delta, trials, seed)
    click.echo(io.dumps(io.report_to_dict(rep)))
    sys.exit(EXIT_OK if rep.passed else EXIT_NEGATIVE)


@main.command(name="convolve")
@click.argument("file", type=click.Path(dir_okay=False))
@click.argument("other", type=click.Path(dir_okay=False))
@output_option
@guarded
def convolve_cmd(file, other, output):
    """Modulus convolution of two negative-coefficient series."""
    _emit_series(convolve(io.load_series(file), io.load_series(other)), output)


@main.command()
@click.option("--degree", type=int, default=DEFAULT_DEGREE, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--convention", type=click.Choice([c.value for c in Convention]),
              default=Convention.NEGATIVE_THP.value, show_default=True)
@params_options
@output_option
@guarded
def sample(degree, seed, convention, m, alpha, beta, output):
    """Deterministic random member of the class."""
    params = _params(m, alpha, beta)
    _emit_series(random_member(params, degree, seed, Convention(convention)), output)


RENDER_HEADER = ["r", "theta", "re_f", "im_f", "jacobian",
                 "class_functional", "starlike_functional"]


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--radius", "radii", type=float, multiple=True,
              help="Circle radius; repeatable. Defaults to the standard grid.")
@click.option("--angles", type=int, default=256, show_default=True)
@params_options
@output_option
@guarded
def render(file, radii, angles, m, alpha, beta, output):
    """CSV samples of f and its functionals over a polar grid."""
    params = _params(m, alpha, beta)
    f = io.load_series(file)
    grid = SampleGrid(radii or (0.1, 0.3, 0.5, 0.7, 0.9, 0.99), angles)
    z = grid.points()
    r = np.repeat(grid.radii, angles)
    theta = np.tile(grid.angles, len(grid.radii))
    w = evaluate(f, z)
    jac = jacobian(f, z)
    cf = class_functional_values(f, params, z)
    sf = starlike_values(f, z)
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RENDER_HEADER)
    for row in zip(r, theta, w.real, w.imag, jac, cf, sf):
        writer.writerow([fmt(x) if not np.isnan(x) else "" for x in row])
    buf.write(f"# degenerate_points={int(np.isnan(sf).sum())}\n")
    _emit(buf.getvalue(), output)


@main.command(name="verify-all")
@click.option("--trials", type=int, default=100, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--degree", type=int, default=DEFAULT_DEGREE, show_default=True)
@params_options
@output_option
@guarded
def verify_all_cmd(trials, seed, degree, m, alpha, beta, output):
    """Run every checker and write a JSON report bundle."""
    params = _params(m, alpha, beta)
    if trials < 1 or degree < 1:
        raise HarmonicError("--trials and --degree must be positive")
    bundle = verify_all(params, trials, seed, degree)
    _emit(io.dumps(bundle) + "\n", output)
    sys.exit(EXIT_OK if bundle["all_gated_pass"] else EXIT_NEGATIVE)


if __name__ == "__main__":
    main()
