"""Command-line front end: generate graphs, solve instances, print bound
tables, and run verification campaigns.

Exit codes: 0 success, 1 verification-check failure, 2 usage or parse error.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from pathlib import Path

import click

from . import bounds as bounds_mod
from . import verify as verify_mod
from .graph import (
    Graph,
    GraphError,
    degree_profile,
    gen_circulant,
    gen_complete,
    gen_cycle,
    gen_gnp,
    gen_hajos,
    gen_path,
    gen_sun,
    parse_dimacs,
    parse_edge_list,
    to_dimacs,
    to_edge_list,
)
from .reference import reference_table
from .solver import BRUTE_FORCE_CAP, Mode, result_record, solve


def _load_graph(path: str, input_format: str, order: int | None) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise click.UsageError(f"cannot read {path}: {e}")
    if input_format == "auto":
        stripped = next((ln for ln in text.splitlines() if ln.strip()), "")
        input_format = "dimacs" if stripped.split()[:1] in (["p"], ["c"]) else "edgelist"
    try:
        if input_format == "dimacs":
            return parse_dimacs(text)
        return parse_edge_list(text, order=order)
    except GraphError as e:
        raise click.UsageError(f"{path}: {e}")


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        click.echo(text, nl=False)


def _records_to_csv(records: list[dict[str, object]]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(records[0].keys()))
    writer.writeheader()
    writer.writerows(records)
    return buf.getvalue()


@click.group()
@click.option("--format", "fmt", type=click.Choice(["csv", "jsonl", "text"]), default=None,
              help="Output format for records and tables (default per command).")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Base seed for seeded operations.")
@click.option("--deterministic", is_flag=True,
              help="Force single-worker execution with canonical witnesses.")
@click.option("--brute-cap", type=int, default=BRUTE_FORCE_CAP, show_default=True,
              help="Vertex limit for the exhaustive solver.")
@click.pass_context
def main(ctx: click.Context, fmt: str | None, seed: int, deterministic: bool, brute_cap: int) -> None:
    """Exact signed and nonnegative signed k-subdomination numbers."""
    ctx.obj = {
        "format": fmt,
        "seed": seed,
        "deterministic": deterministic,
        "brute_cap": brute_cap,
    }


@main.command()
@click.argument("family", type=click.Choice(["complete", "cycle", "path", "sun", "hajos", "circulant", "gnp"]))
@click.option("--n", type=int, help="Order, for complete/cycle/path/circulant/gnp.")
@click.option("--t", type=int, help="Half cycle length, for sun.")
@click.option("--p", type=float, help="Edge probability, for gnp.")
@click.option("--seed", type=int, default=None, help="Seed for gnp (falls back to the global seed).")
@click.option("--offsets", default="1", show_default=True, help="Comma-separated circulant offsets.")
@click.option("--graph-format", type=click.Choice(["edgelist", "dimacs"]), default="edgelist",
              show_default=True, help="On-disk format.")
@click.option("-o", "--output", type=click.Path(), default=None, help="Output file (default stdout).")
@click.pass_context
def gen(ctx, family, n, t, p, seed, offsets, graph_format, output):
    """Generate a named graph family member."""
    try:
        if family == "complete":
            graph = gen_complete(_require(n, "--n"))
        elif family == "cycle":
            graph = gen_cycle(_require(n, "--n"))
        elif family == "path":
            graph = gen_path(_require(n, "--n"))
        elif family == "sun":
            graph = gen_sun(_require(t, "--t"))
        elif family == "hajos":
            graph = gen_hajos()
        elif family == "circulant":
            offs = [int(s) for s in offsets.split(",") if s.strip()]
            graph = gen_circulant(_require(n, "--n"), offs)
        else:
            gnp_seed = seed if seed is not None else ctx.obj["seed"]
            graph = gen_gnp(_require(n, "--n"), _require(p, "--p"), gnp_seed)
    except ValueError as e:
        raise click.UsageError(str(e))
    text = to_dimacs(graph) if graph_format == "dimacs" else to_edge_list(graph)
    _emit(text, output)


def _require(value, flag):
    if value is None:
        raise click.UsageError(f"{flag} is required for this family")
    return value


@main.command(name="solve")
@click.argument("graph_file", type=click.Path(exists=True))
@click.option("--k", type=int, default=None, help="Subdomination parameter (default: n).")
@click.option("--mode", type=click.Choice(["nonneg", "signed"]), default="nonneg", show_default=True)
@click.option("--algorithm", type=click.Choice(["auto", "brute", "bnb"]), default="auto", show_default=True)
@click.option("--input-format", type=click.Choice(["auto", "edgelist", "dimacs"]), default="auto", show_default=True)
@click.option("--order", type=int, default=None, help="Vertex-count override for edge-list input.")
@click.option("-o", "--output", type=click.Path(), default=None)
@click.pass_context
def solve_cmd(ctx, graph_file, k, mode, algorithm, input_format, order, output):
    """Solve one instance exactly; emits one JSON-lines record."""
    graph = _load_graph(graph_file, input_format, order)
    if k is None:
        k = graph.vertex_count
    try:
        result = solve(graph, k, Mode.parse(mode), algorithm, brute_cap=ctx.obj["brute_cap"])
    except ValueError as e:
        raise click.UsageError(str(e))
    record = result_record(graph, k, Mode.parse(mode), result)
    if ctx.obj["format"] == "text":
        lines = [f"{key} = {value}" for key, value in record.items()]
        _emit("\n".join(lines) + "\n", output)
    else:
        _emit(json.dumps(record, sort_keys=True) + "\n", output)


@main.command(name="bounds")
@click.argument("graph_file", type=click.Path(exists=True))
@click.option("--k", type=int, default=None, help="Subdomination parameter (default: n).")
@click.option("--input-format", type=click.Choice(["auto", "edgelist", "dimacs"]), default="auto", show_default=True)
@click.option("--order", type=int, default=None, help="Vertex-count override for edge-list input.")
@click.option("-o", "--output", type=click.Path(), default=None)
@click.pass_context
def bounds_cmd(ctx, graph_file, k, input_format, order, output):
    """Print every named lower bound for one graph."""
    graph = _load_graph(graph_file, input_format, order)
    if k is None:
        k = graph.vertex_count
    try:
        report = bounds_mod.bound_report(graph, k)
    except ValueError as e:
        raise click.UsageError(str(e))
    fmt = ctx.obj["format"] or "text"
    if fmt == "jsonl":
        _emit(json.dumps(report.to_record(), sort_keys=True) + "\n", output)
    elif fmt == "csv":
        _emit(_records_to_csv([report.to_record()]), output)
    else:
        rows = [f"n={report.n} k={report.k} connected={report.connected}"]
        for name in bounds_mod.BOUND_NAMES:
            b = report[name]
            raw = "-" if b.raw is None else str(b.raw)
            lifted = "-" if b.parity_lifted is None else str(b.parity_lifted)
            flag = "" if b.applicable else "  (not applicable)"
            rows.append(f"{name:>16}  raw={raw:<10} lifted={lifted}{flag}")
        _emit("\n".join(rows) + "\n", output)


@main.command()
@click.option("--family", "families", multiple=True,
              type=click.Choice(list(verify_mod.ALL_FAMILIES)),
              help="Restrict the ensemble (repeatable; default: all families).")
@click.option("--n-min", type=int, default=4, show_default=True, help="Smallest G(n,p) order.")
@click.option("--n-max", type=int, default=9, show_default=True, help="Largest ensemble order.")
@click.option("--p", "p_values", multiple=True, type=float,
              help="G(n,p) edge probabilities (repeatable; default 0.2 0.5 0.8).")
@click.option("--seeds", type=int, default=50, show_default=True, help="Seeds per G(n,p) cell.")
@click.option("--check", "checks", multiple=True, type=click.Choice(list(verify_mod.CHECK_NAMES)),
              help="Run only these checks (repeatable; default: all).")
@click.option("--k", "k_policy", type=click.Choice(["default", "all"]), default="default",
              show_default=True, help="k sweep: {1, ceil(n/2), n} or all of 1..n.")
@click.option("--seed", type=int, default=None, help="Base seed (falls back to the global seed).")
@click.option("--workers", type=int, default=1, show_default=True, help="Parallel graph workers.")
@click.option("-o", "--output", type=click.Path(), default=None, help="Write the JSON report here.")
@click.pass_context
def verify(ctx, families, n_min, n_max, p_values, seeds, checks, k_policy, seed, workers, output):
    """Run invariant checks over a reproducible ensemble; exit 1 on failure."""
    spec = verify_mod.EnsembleSpec(
        families=tuple(families) or verify_mod.ALL_FAMILIES,
        n_min=n_min,
        n_max=n_max,
        p_values=tuple(p_values) or (0.2, 0.5, 0.8),
        seeds_per_cell=seeds,
        base_seed=seed if seed is not None else ctx.obj["seed"],
    )
    if ctx.obj["deterministic"]:
        workers = 1
    try:
        report = verify_mod.run_campaign(
            spec,
            k_policy=k_policy,
            checks=tuple(checks) or None,
            workers=workers,
        )
    except ValueError as e:
        raise click.UsageError(str(e))
    report_json = json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n"
    if output:
        Path(output).write_text(report_json)
    if ctx.obj["format"] == "jsonl":
        click.echo(json.dumps(report.to_dict(), sort_keys=True))
    else:
        click.echo(f"graphs: {report.graph_count}   k-policy: {report.k_policy}")
        for c in report.checks:
            status = "ok" if c.failed == 0 else "FAIL"
            click.echo(f"{c.name:>22}  passed={c.passed:<8} failed={c.failed:<6} {status}")
            for ce in c.counterexamples[:3]:
                click.echo(
                    f"    counterexample: {ce.graph_label} k={ce.k} mode={ce.mode} "
                    f"observed={ce.observed} expected={ce.expected} ({ce.detail})"
                )
        click.echo("RESULT: PASS" if report.all_passed else "RESULT: FAIL")
    if not report.all_passed:
        sys.exit(1)


@main.command()
@click.argument("family", type=click.Choice(["complete", "cycle", "path", "sun", "circulant"]))
@click.option("--start", type=int, required=True, help="First n (or t for sun).")
@click.option("--end", type=int, required=True, help="Last n (or t for sun), inclusive.")
@click.option("--offsets", default="1,2", show_default=True, help="Circulant offsets.")
@click.option("--k-policy", type=click.Choice(["full", "half", "one"]), default="full",
              show_default=True, help="k = n, ceil(n/2), or 1.")
@click.option("--mode", "mode_name", type=click.Choice(["nonneg", "signed", "both"]),
              default="nonneg", show_default=True)
@click.option("-o", "--output", type=click.Path(), default=None)
@click.pass_context
def table(ctx, family, start, end, offsets, k_policy, mode_name, output):
    """Sweep a family and tabulate exact values next to every bound."""
    builders = {
        "complete": gen_complete,
        "cycle": gen_cycle,
        "path": gen_path,
        "sun": gen_sun,
        "circulant": lambda n: gen_circulant(n, [int(s) for s in offsets.split(",") if s.strip()]),
    }
    modes = [Mode.NONNEG, Mode.SIGNED] if mode_name == "both" else [Mode.parse(mode_name)]
    records: list[dict[str, object]] = []
    for param in range(start, end + 1):
        try:
            graph = builders[family](param)
        except ValueError as e:
            raise click.UsageError(str(e))
        profile = degree_profile(graph)
        n = graph.vertex_count
        k = {"full": n, "half": math.ceil(n / 2), "one": 1}[k_policy]
        for mode in modes:
            result = solve(graph, k, mode, brute_cap=ctx.obj["brute_cap"])
            record: dict[str, object] = {
                "family": family,
                "param": param,
                "n": n,
                "m": profile.m,
                "delta": profile.delta,
                "Delta": profile.Delta,
                "n_e": profile.n_e,
                "mode": mode.value,
                "k": k,
                "exact": result.optimum,
            }
            report = bounds_mod.bound_report(graph, k)
            for name in bounds_mod.BOUND_NAMES:
                b = report[name]
                record[f"bound.{name}.raw"] = "" if b.raw is None else str(b.raw)
            records.append(record)
    fmt = ctx.obj["format"] or "csv"
    if fmt == "jsonl":
        _emit("".join(json.dumps(r, sort_keys=True) + "\n" for r in records), output)
    else:
        _emit(_records_to_csv(records), output)


@main.command()
@click.option("-o", "--output", type=click.Path(), default=None)
@click.pass_context
def refs(ctx, output):
    """Dump the table of known exact family values as CSV."""
    records = [
        {
            "family": rv.family,
            "params": ",".join(f"{key}={value}" for key, value in rv.params),
            "n": rv.build_graph().vertex_count,
            "k": rv.k,
            "mode": rv.mode.value,
            "value": rv.value,
            "provenance": rv.provenance,
        }
        for rv in reference_table()
    ]
    _emit(_records_to_csv(records), output)


if __name__ == "__main__":
    main()
