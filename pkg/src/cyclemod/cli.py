"""Command-line harness: extraction, certificate emission/verification,
instance generation, and the exhaustive desk-scale sweep.

Exit codes: 0 success, 1 parse/argument failure, 2 hypothesis not met,
3 nothing found / constructive gap, 4 verification failure,
5 infeasible generation, 6 budget exceeded.
"""

from __future__ import annotations

import sys

import click

from . import certify
from .cycles import branch_of, find_k_cycles, oracle_cycles, residue_map
from .errors import (
    BudgetExceeded,
    CyclemodError,
    GenerationInfeasible,
    HypothesisNotMet,
    InvalidArgument,
)
from .generate import GenSpec, generate
from .graph import format_graph, parse_graph
from .paths import ExtractionTrace, find_paths_flex, find_paths_length, oracle_paths
from .smallgraphs import two_connected_graphs

EXIT_PARSE = 1
EXIT_HYPOTHESIS = 2
EXIT_NONE = 3
EXIT_VERIFY = 4
EXIT_INFEASIBLE = 5
EXIT_BUDGET = 6


def _load_graph(path):
    try:
        with open(path) as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        click.echo(f"cannot read {path}: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    except (InvalidArgument, CyclemodError, ValueError) as exc:
        click.echo(f"bad graph file {path}: {exc}", err=True)
        sys.exit(EXIT_PARSE)


@click.group()
def main():
    """Constructive extraction of path/cycle families with controlled
    length patterns."""


@main.command("paths")
@click.option("--graph", "graph_file", required=True, type=click.Path())
@click.option("--x", required=True, type=int)
@click.option("--y", required=True, type=int)
@click.option("--k", required=True, type=int)
@click.option("--mode", type=click.Choice(["length", "flex"]), default="length")
@click.option("--oracle", is_flag=True, help="use the exhaustive oracle instead")
def paths_cmd(graph_file, x, y, k, mode, oracle):
    """k (x, y)-paths satisfying the length (or, with --mode flex, length
    or semi-length) condition; prints a certificate."""
    g = _load_graph(graph_file)
    if not (0 <= x < g.n and 0 <= y < g.n) or x == y or k < 1:
        click.echo("bad x/y/k arguments", err=True)
        sys.exit(EXIT_PARSE)
    trace = ExtractionTrace()
    try:
        if oracle:
            fam = oracle_paths(g, x, y, k, flex=(mode == "flex"))
            if fam is None:
                click.echo("oracle: no such family exists", err=True)
                sys.exit(EXIT_NONE)
        elif mode == "length":
            fam = find_paths_length(g, x, y, k, trace=trace)
        else:
            fam = find_paths_flex(g, x, y, k, trace=trace)
    except HypothesisNotMet as exc:
        click.echo(f"hypothesis not met: {exc}", err=True)
        sys.exit(EXIT_HYPOTHESIS)
    except BudgetExceeded as exc:
        click.echo(f"budget exceeded: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    except CyclemodError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    cert = certify.make_certificate(g, "paths", k, fam, x=x, y=y, trace=trace)
    click.echo(certify.to_json(cert), nl=False)
    if trace.constructive_gap:
        click.echo("constructive gap: oracle fallback was needed", err=True)
        sys.exit(EXIT_NONE)


@main.command("cycles")
@click.option("--graph", "graph_file", required=True, type=click.Path())
@click.option("--k", required=True, type=int)
@click.option("--mod", "with_mod", is_flag=True,
              help="also emit a residue map modulo k (odd k only)")
@click.option("--oracle", is_flag=True, help="use the exhaustive oracle instead")
def cycles_cmd(graph_file, k, with_mod, oracle):
    """k cycles of consecutive lengths or satisfying the length condition;
    prints a certificate."""
    g = _load_graph(graph_file)
    if k < 1:
        click.echo("bad k", err=True)
        sys.exit(EXIT_PARSE)
    if with_mod and k % 2 == 0:
        click.echo("residue coverage needs odd k", err=True)
        sys.exit(EXIT_HYPOTHESIS)
    trace = ExtractionTrace()
    try:
        if oracle:
            fam = oracle_cycles(g, k)
            if fam is None:
                click.echo("oracle: no such family exists", err=True)
                sys.exit(EXIT_NONE)
            branch = branch_of(g)
        else:
            fam, branch = find_k_cycles(g, k, trace=trace)
    except HypothesisNotMet as exc:
        click.echo(f"hypothesis not met: {exc}", err=True)
        sys.exit(EXIT_HYPOTHESIS)
    except BudgetExceeded as exc:
        click.echo(f"budget exceeded: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    except CyclemodError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    residues = residue_map(fam, k) if with_mod else None
    cert = certify.make_certificate(g, "cycles", k, fam, branch=branch,
                                    residues=residues, trace=trace)
    click.echo(certify.to_json(cert), nl=False)
    if trace.constructive_gap:
        click.echo("constructive gap: oracle fallback was needed", err=True)
        sys.exit(EXIT_NONE)


@main.command("verify")
@click.option("--cert", "cert_file", required=True, type=click.Path())
def verify_cmd(cert_file):
    """Independently re-check a certificate."""
    try:
        with open(cert_file) as fh:
            cert = certify.from_json(fh.read())
    except OSError as exc:
        click.echo(f"cannot read {cert_file}: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    except (ValueError, InvalidArgument) as exc:
        click.echo(f"bad certificate: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    ok, reason = certify.verify(cert)
    if ok:
        click.echo("OK")
    else:
        click.echo(f"FAIL: {reason}")
        sys.exit(EXIT_VERIFY)


@main.command("gen")
@click.option("--n", required=True, type=int)
@click.option("--mindeg", required=True, type=int)
@click.option("--conn", type=click.Choice(["2", "3"]), default="2")
@click.option("--bipartite", is_flag=True)
@click.option("--seed", type=int, default=0)
def gen_cmd(n, mindeg, conn, bipartite, seed):
    """Generate a random graph with the requested properties."""
    try:
        spec = GenSpec(n=n, min_degree=mindeg, connectivity=int(conn),
                       bipartite=bipartite, seed=seed)
        g = generate(spec)
    except InvalidArgument as exc:
        click.echo(f"bad generation spec: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    except GenerationInfeasible as exc:
        click.echo(f"infeasible: {exc}", err=True)
        sys.exit(EXIT_INFEASIBLE)
    click.echo(format_graph(g), nl=False)


@main.command("sweep")
@click.option("--nmax", required=True, type=int)
@click.option("--kmax", type=int, default=None)
@click.option("--exhaustive", is_flag=True)
@click.option("--samples", type=int, default=None)
def sweep_cmd(nmax, kmax, exhaustive, samples):
    """Run the cycle extractor across many instances and report pass/fail
    and constructive-gap counts per (n, k, branch)."""
    if exhaustive == (samples is not None):
        click.echo("choose exactly one of --exhaustive / --samples", err=True)
        sys.exit(EXIT_PARSE)
    instances = []
    if exhaustive:
        if nmax > 7:
            click.echo("exhaustive enumeration is available up to n = 7", err=True)
            sys.exit(EXIT_PARSE)
        for n in range(3, nmax + 1):
            instances.extend(two_connected_graphs(n))
    else:
        seed = 0
        while len(instances) < samples:
            n = 3 + seed % max(1, nmax - 2)
            d = 2 + seed % max(1, n - 2)
            try:
                g = generate(GenSpec(n=n, min_degree=d, seed=seed))
            except GenerationInfeasible:
                seed += 1
                continue
            instances.append(g)
            seed += 1
    report = {}
    fails = gaps = total = 0
    budget_hit = False
    for g in instances:
        top = g.min_degree() - 1
        if kmax is not None:
            top = min(top, kmax)
        for k in range(1, top + 1):
            total += 1
            trace = ExtractionTrace()
            key = (g.n, k, branch_of(g))
            row = report.setdefault(key, [0, 0, 0])  # pass, fail, gap
            try:
                find_k_cycles(g, k, trace=trace)
            except BudgetExceeded:
                budget_hit = True
                row[1] += 1
                fails += 1
                continue
            except CyclemodError:
                row[1] += 1
                fails += 1
                continue
            if trace.constructive_gap:
                row[2] += 1
                gaps += 1
            row[0] += 1
    click.echo("n k branch pass fail gap")
    for (n, k, br), (p, f, gp) in sorted(report.items()):
        click.echo(f"{n} {k} {br} {p} {f} {gp}")
    rate = gaps / total if total else 0.0
    click.echo(f"total {total} fails {fails} gaps {gaps} gap_rate {rate:.4f}")
    if budget_hit:
        sys.exit(EXIT_BUDGET)
    if fails:
        sys.exit(EXIT_VERIFY)
    if gaps:
        sys.exit(EXIT_NONE)


if __name__ == "__main__":
    main()
