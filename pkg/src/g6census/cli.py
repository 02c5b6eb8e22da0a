"""Command line entry point: census run / verify / report / mass-formula."""

from __future__ import annotations

import json
import sys
import time

import click

from . import census
from .records import STRATA
from .strata.common import parse_shard


@click.group()
def main():
    """Isomorphism classes of genus-6 curves over F_2."""


@main.command()
@click.option("--stratum", type=click.Choice(STRATA), required=True)
@click.option("--shard", default="1/1", help="i/n with 1 <= i <= n")
@click.option("--out", "out", type=click.Path(dir_okay=False), required=True)
def run(stratum, shard, out):
    """Enumerate one stratum (or one shard of it) into a JSONL file."""
    try:
        parse_shard(shard)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--shard")
    t = time.time()
    recs = census.run(stratum, shard, out)
    click.echo(f"{stratum} {shard}: {len(recs)} records in {time.time() - t:.1f}s -> {out}",
               err=True)


@main.command()
@click.option("--in", "paths", type=click.Path(exists=True, dir_okay=False), multiple=True,
              required=True)
@click.option("--isogeny-list", type=click.Path(exists=True, dir_okay=False), default=None)
def verify(paths, isogeny_list):
    """Check totals, marked counts and zeta statistics."""
    recs = census.merge(paths)
    checks = census.verify(recs, isogeny_list)
    for c in checks:
        click.echo(c.line())
    bad = sum(not c.ok for c in checks)
    click.echo(f"{len(checks) - bad}/{len(checks)} checks passed")
    sys.exit(0 if bad == 0 else 1)


@main.command()
@click.option("--in", "paths", type=click.Path(exists=True, dir_okay=False), multiple=True,
              required=True)
@click.option("--json", "as_json", is_flag=True, help="machine-readable summary")
def report(paths, as_json):
    """Print the per-stratum table of classes and masses."""
    recs = census.merge(paths)
    if as_json:
        click.echo(json.dumps(census.summarize(recs, check_weil=False).as_dict(), indent=1, default=str))
    else:
        click.echo(census.report(recs))


@main.command("mass-formula")
@click.option("--g", "g", type=int, required=True)
@click.option("--q", "q", type=int, required=True)
@click.option("--oracle", is_flag=True, help="compare with the sum over elliptic curves")
def mass_formula(g, q, oracle):
    """Closed-form mass of bielliptic genus-g curves over F_q."""
    from .strata.bielliptic import biell_mass_closed_form, biell_mass_integral
    try:
        val = biell_mass_closed_form(g, q)
    except (ValueError, ArithmeticError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    click.echo(f"closed form (g={g}, q={q}): {val}")
    if oracle:
        try:
            ref = biell_mass_integral(g, q)
        except ValueError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        ok = ref == val
        click.echo(f"{'PASS' if ok else 'FAIL'} elliptic-curve sum: {ref}")
        sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
