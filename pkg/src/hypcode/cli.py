"""Command line entry point: build tilings and codes, report parameters,
and run decoding simulations."""

from __future__ import annotations

import functools
import json
import sys
import time
from dataclasses import asdict, dataclass

import click

from . import __version__, csscode, distance, montecarlo, planar, tiling
from .errors import HypcodeError
from .fpgroup import enumerate_quotient


@dataclass
class RunManifest:
    subcommand: str
    arguments: dict
    version: str
    rng: str
    seed: int | None
    started: float
    finished: float


def _write_manifest(out_path: str, subcommand: str, arguments: dict,
                    seed: int | None, started: float):
    m = RunManifest(
        subcommand=subcommand,
        arguments=arguments,
        version=__version__,
        rng=montecarlo.RNG_NAME,
        seed=seed,
        started=started,
        finished=time.time(),
    )
    with open(out_path + ".manifest.json", "w") as f:
        json.dump(asdict(m), f, indent=2)


def _domain_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except HypcodeError as e:
            click.echo(f"{e.name}: {e}", err=True)
            sys.exit(1)

    return wrapper


def _resolve(code_ref: str):
    """Catalog id, toric-L, or path to a code/tiling JSON file.

    Returns (tiling or None, code, d or None).
    """
    if code_ref.startswith("toric-"):
        L = int(code_ref.split("-", 1)[1])
        t = tiling.build_toric(L)
        return t, csscode.from_tiling(t, code_id=code_ref), L
    try:
        entry = tiling.catalog_entry(code_ref)
    except KeyError:
        entry = None
    if entry is not None:
        t = tiling.build_tiling(
            enumerate_quotient(entry.presentation()), entry.r, entry.s
        )
        return t, csscode.from_tiling(t, code_id=code_ref), entry.d
    try:
        with open(code_ref) as f:
            doc = json.load(f)
    except OSError as e:
        raise click.ClickException(
            f"{code_ref!r} is not a catalog id, toric-L, or readable JSON file ({e})"
        )
    if "edge_vertices" in doc:
        t = tiling.Tiling.from_dict(doc)
        return t, csscode.from_tiling(t), None
    return None, csscode.CssCode.from_dict(doc), None


@click.group()
@click.version_option(
    __version__, message=f"%(prog)s %(version)s (rng: {montecarlo.RNG_NAME})"
)
def main():
    """Surface codes on compactified {r,s} tilings."""


@main.command()
def catalog():
    """List the built-in closed-surface codes."""
    click.echo("id       r  s     n    k   d  csys  csys*  words")
    for e in tiling.catalog():
        words = ";".join(e.words)
        click.echo(
            f"{e.code_id:<8} {e.r}  {e.s}  {e.n:>4} {e.k:>4} {e.d:>3}"
            f"  {e.csys:>4}  {e.csys_star:>5}  {words}"
        )


@main.command()
@click.option("--code", "code_ref", required=True, help="catalog id or JSON file")
@_domain_errors
def params(code_ref):
    """Print [[n,k,d]], systole, cosystole, and the rate-check verdict."""
    t, code, _ = _resolve(code_ref)
    if t is None:
        click.echo(f"[[{code.n},{code.k},?]] (no tiling: distances unavailable)")
        return
    csys = distance.systole(t, code)
    csys_star = distance.cosystole(t, code)
    d = min(csys, csys_star)
    report = csscode.rate_check(code, t.r, t.s)
    line = f"[[{code.n},{code.k},{d}]] csys={csys} csys*={csys_star} {report}"
    try:
        entry = tiling.catalog_entry(code_ref)
    except KeyError:
        entry = None
    if entry is not None:
        published = (entry.n, entry.k, entry.d)
        if published != (code.n, code.k, d):
            line += (
                f" catalog-check: MISMATCH (catalog says"
                f" [[{entry.n},{entry.k},{entry.d}]])"
            )
    click.echo(line)


@main.command()
@click.option("--code", "code_ref", required=True)
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--dual", is_flag=True, help="emit the dual tiling")
@_domain_errors
def build(code_ref, out_path, dual):
    """Write the tiling of a catalog code as JSON."""
    started = time.time()
    t, _, _ = _resolve(code_ref)
    if t is None:
        click.echo("BUILD_INPUT: code file carries no tiling", err=True)
        sys.exit(1)
    if dual:
        t = tiling.dual(t)
    with open(out_path, "w") as f:
        f.write(t.to_json())
    _write_manifest(out_path, "build",
                    {"code": code_ref, "dual": dual}, None, started)
    click.echo(f"wrote {out_path}")


@main.command("distance")
@click.option("--code", "code_ref", required=True)
@click.option("--witness", is_flag=True, help="print minimum-weight logicals")
@_domain_errors
def distance_cmd(code_ref, witness):
    """Print systole, cosystole, and distance."""
    t, code, _ = _resolve(code_ref)
    if t is None:
        click.echo("DISTANCE_INPUT: need a tiling-backed code", err=True)
        sys.exit(1)
    csys = distance.systole(t, code)
    csys_star = distance.cosystole(t, code)
    click.echo(f"csys={csys} csys*={csys_star} d={min(csys, csys_star)}")
    if witness:
        basis = distance.minimum_weight_logicals(t, code)
        click.echo(f"Z witness: {sorted(basis['Z'])}")
        click.echo(f"X witness: {sorted(basis['X'])}")


@main.command()
@click.option("--code", "code_ref", required=True)
@_domain_errors
def spectrum(code_ref):
    """Print the logical weight spectrum of both species."""
    t, code, _ = _resolve(code_ref)
    if t is None:
        click.echo("SPECTRUM_INPUT: need a tiling-backed code", err=True)
        sys.exit(1)
    spec = distance.logical_weight_spectrum(t, code)
    for species in ("Z", "X"):
        parts = ", ".join(f"{w} (x{c})" for w, c in spec[species])
        click.echo(f"{species}: {parts}")


def _parse_grid(p_grid: str | None, p_list: str | None) -> list:
    if (p_grid is None) == (p_list is None):
        raise click.UsageError("give exactly one of --p-grid or --p")
    if p_list is not None:
        return [float(x) for x in p_list.split(",")]
    a, b, step = (float(x) for x in p_grid.split(":"))
    if step <= 0:
        raise click.UsageError("grid step must be positive")
    grid = []
    v = a
    while v <= b + 1e-12:
        grid.append(round(v, 12))
        v += step
    return grid


@main.command()
@click.option("--code", "code_ref", required=True)
@click.option("--p-grid", default=None, help="a:b:step")
@click.option("--p", "p_list", default=None, help="comma-separated values")
@click.option("--trials", default=40_000, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--workers", default=1, show_default=True)
@_domain_errors
def simulate(code_ref, p_grid, p_list, trials, seed, out_path, workers):
    """Estimate logical error rates over a grid of physical error rates."""
    started = time.time()
    t, code, d = _resolve(code_ref)
    grid = _parse_grid(p_grid, p_list)
    if d is None and t is not None:
        d = distance.code_distance(t, code)
    curve = montecarlo.run_curve(
        code, grid, trials=trials, seed=seed, workers=workers,
        d=d if d is not None else -1,
    )
    montecarlo.write_csv([curve], out_path)
    _write_manifest(
        out_path, "simulate",
        {"code": code_ref, "p": grid, "trials": trials, "workers": workers},
        seed, started,
    )
    click.echo(f"wrote {out_path}")


@main.command("planar-build")
@click.option("--tiling", "rs", required=True, help="r,s")
@click.option("--seed-faces", default=1, show_default=True)
@click.option("--levels", default=2, show_default=True)
@click.option("--regions", required=True, type=int)
@click.option("--offset", default=0, show_default=True)
@click.option("--out", "out_path", required=True, type=click.Path())
@_domain_errors
def planar_build(rs, seed_faces, levels, regions, offset, out_path):
    """Grow a planar patch, carve rough/smooth boundaries, write the code."""
    started = time.time()
    r, s = (int(x) for x in rs.split(","))
    patch = planar.grow_patch(r, s, seed_faces=seed_faces, levels=levels)
    code = planar.carve_boundaries(patch, regions, offset=offset)
    with open(out_path, "w") as f:
        f.write(code.to_json())
    _write_manifest(
        out_path, "planar-build",
        {"tiling": rs, "seed_faces": seed_faces, "levels": levels,
         "regions": regions, "offset": offset},
        None, started,
    )
    click.echo(
        f"[[{code.n},{code.k},?]] from a {len(patch.boundary_edges)}-edge"
        f" boundary in {2 * regions} arcs; wrote {out_path}"
    )


if __name__ == "__main__":
    main()
