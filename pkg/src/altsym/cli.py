"""Command-line entry points.

Exit codes: 0 success / all checks pass, 1 recognition failed or a check
failed, 2 bad input.
"""
from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

import click

from . import proportions as P
from .bench import bench as run_bench, run_report, timed_recognise
from .perm import GroupSpec, load_group_spec, save_group_spec


class InputError(click.ClickException):
    exit_code = 2


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


@click.group()
def main() -> None:
    """Black-box recognition of alternating and symmetric groups."""


@main.command()
@click.option("--group", "group_file", required=True, type=click.Path(dir_okay=False))
@click.option("--N", "N", required=True, type=int, help="Upper bound on the degree.")
@click.option("--epsilon", required=True, type=float)
@click.option("--seed", required=True, type=int)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def recognize(group_file: str, N: int, epsilon: float, seed: int, out: str | None) -> None:
    """Recognise the group in GROUP FILE and write a JSON run report."""
    try:
        spec = load_group_spec(group_file)
    except (OSError, ValueError, TypeError, KeyError) as exc:
        raise InputError(f"cannot read group file: {exc}")
    if N < 9:
        raise InputError("N must be at least 9")
    if not 0 < epsilon < 1:
        raise InputError("epsilon must lie in (0, 1)")
    outcome, wall = timed_recognise(spec, epsilon, N, seed)
    report = run_report(spec, outcome, epsilon=epsilon, N=N, seed=seed, wall_time=wall)
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", out)
    sys.exit(0 if outcome.success else 1)


@main.command("make-group")
@click.option("--name", required=True, help="alt-N, sym-N, c30, d20, psl28 or m11.")
@click.option("--shroud-seed", type=int, default=None)
@click.option("--padding", type=int, default=0)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
def make_group(name: str, shroud_seed: int | None, padding: int, out: str) -> None:
    """Write a group file."""
    try:
        spec = GroupSpec.named(name, shroud_seed, padding)
    except ValueError as exc:
        raise InputError(str(exc))
    save_group_spec(spec, out)


def _rows_for(table: str, n_min, n_max, k, b, t, alpha, epsilon) -> list[P.Row]:
    bs = (b,) if b else None
    if table == "small-support":
        lo, hi = n_min or 9, n_max or 35
        if hi > P.PARTITION_CAP:
            raise InputError(f"small-support is capped at n = {P.PARTITION_CAP}")
        return P.table_small_support(lo, hi)
    if table == "tb":
        hi = n_max or 400
        return P.table_tb(hi, bs or (2, 4, 8)) + P.table_no_multiple(min(hi, n_max or 200), bs or (2, 4, 8), n_min or 1)
    if table == "ub":
        if n_min or n_max:
            lo, hi = n_min or n_max, n_max or n_min
            rows = P.table_ub([n for n in range(lo, hi + 1) if n >= 404])
            return rows + P.table_utb(lo, hi, bs or (4, 8))
        return P.table_ub() + P.table_utb(bs=bs or (4, 8))
    if table == "trip":
        rows = P.table_trip(n_min or 9, n_max or 20)
        return [r for r in rows if k is None or r.param == f"k={k}"]
    if table == "sigma":
        return P.table_sigma(n_min or 9, n_max or 40, None if k is None else {k})
    if table == "prebolster":
        lo, hi = n_min or 7, n_max or 9
        if hi > 10:
            raise InputError("prebolster enumeration is capped at n = 10")
        return P.table_prebolster(lo, hi)
    if table == "common-fp":
        if n_min or n_max:
            a = alpha if alpha is not None else 0.7
            e = epsilon if epsilon is not None else 0.1
            lo, hi = n_min or n_max, n_max or n_min
            rows = P.table_common_fp([(n, a, e) for n in range(lo, hi + 1)])
            if t is not None and k is not None:
                v = P.common_fixed_point_prob(lo, k, t)
                rows.append(P.Row("common fixed point", lo, f"k={k},t={t}", P.fmt(v), "n/a", True))
            return rows
        return P.table_common_fp()
    raise InputError(f"unknown table {table!r}")


@main.command("proportions")
@click.option("--table", required=True, type=click.Choice(P.TABLES))
@click.option("--n-min", type=int, default=None)
@click.option("--n-max", type=int, default=None)
@click.option("--k", type=int, default=None)
@click.option("--b", type=int, default=None)
@click.option("--t", type=int, default=None)
@click.option("--alpha", type=float, default=None)
@click.option("--epsilon", type=float, default=None)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--json", "as_json", is_flag=True, help="JSON instead of CSV.")
def proportions_cmd(table, n_min, n_max, k, b, t, alpha, epsilon, out, as_json) -> None:
    """Exact values against the analytic bounds; exit 1 if any unflagged row fails."""
    if n_min is not None and n_max is not None and n_min > n_max:
        raise InputError("--n-min exceeds --n-max")
    try:
        rows = _rows_for(table, n_min, n_max, k, b, t, alpha, epsilon)
    except ValueError as exc:
        raise InputError(str(exc))
    dicts = [r.as_dict() for r in rows]
    if as_json:
        text = json.dumps(dicts, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["check", "n", "param", "exact", "bound", "pass", "flag"],
                                lineterminator="\n")
        writer.writeheader()
        writer.writerows(dicts)
        text = buf.getvalue()
    _emit(text, out)
    ok = all(r.passed or r.flag == "boundary-disputed" for r in rows)
    sys.exit(0 if ok else 1)


ORACLE_PREDICATES = P.PREDICATES + ("trip", "sigma", "sigma-unconditional", "non-commuting",
                                    "involution-count")


@main.command()
@click.option("--predicate", required=True, type=click.Choice(ORACLE_PREDICATES))
@click.option("--n", "n", required=True, type=int)
@click.option("--k", type=int, default=None)
@click.option("--b", type=int, default=None)
@click.option("--group", "group", type=click.Choice(["sym", "alt"]), default="sym")
def oracle(predicate: str, n: int, k: int | None, b: int | None, group: str) -> None:
    """Brute-force proportion (or count) by enumeration."""
    try:
        if predicate in ("trip", "sigma", "sigma-unconditional", "non-commuting", "involution-count"):
            if k is None:
                raise ValueError("this predicate needs --k")
            census = P.involution_census(n, k)
            value = {
                "trip": census.trip,
                "sigma": census.sigma,
                "sigma-unconditional": census.sigma_unconditional,
                "non-commuting": census.non_commuting_proportion,
                "involution-count": Fraction(census.class_size),
            }[predicate]
        else:
            value = P.enumerate_oracle(n, predicate, b=b, k=k, group=group)
    except ValueError as exc:
        raise InputError(str(exc))
    click.echo(P.fmt(value))


@main.command("bench")
@click.option("--degrees", required=True, help="Comma-separated list, e.g. 16,32,64,128.")
@click.option("--trials", required=True, type=int)
@click.option("--seed", required=True, type=int)
@click.option("--kind", type=click.Choice(["alt", "sym"]), default="alt")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def bench_cmd(degrees: str, trials: int, seed: int, kind: str, out: str | None) -> None:
    """Mean group-operation counts per degree and their log-log slope."""
    try:
        degs = [int(x) for x in degrees.split(",") if x.strip()]
        result = run_bench(degs, trials, seed, kind)
    except ValueError as exc:
        raise InputError(str(exc))
    _emit(json.dumps(result, indent=2) + "\n", out)


def entry() -> None:
    """Console entry point; any unexpected error still maps to exit 2."""
    try:
        main()
    except SystemExit:
        raise
    except Exception as exc:  # noqa: BLE001
        click.echo(f"Error: {exc}", err=True)
        sys.exit(2)


if __name__ == "__main__":
    entry()
