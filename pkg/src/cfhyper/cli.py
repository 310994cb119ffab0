"""Command-line interface.

Exit codes: 0 success/OK, 1 negative mathematical answer (no factor,
violations found), 2 search budget or resample cap exceeded, 64 usage
errors, 65 malformed input data, 66 I/O failures.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import constructions as cons
from .exact_cf import chi_cf_exact
from .factors import SearchBudgetExceeded, find_ab_factor, parity_precheck
from .four_uniform import characterize_4uniform, color_4uniform
from .graph_io import (
    ParseError,
    load_coloring,
    load_hypergraph,
    save_coloring,
    save_factor,
    save_hypergraph,
)
from .greedy import greedy_cf_coloring
from .lll import DEFAULT_MAX_ROUNDS, LLLParams, color_bound, randomized_cf_coloring
from .model import HypergraphError, VertexRoleMap, dual, stats
from .verify import is_conflict_free


@click.group()
def cli() -> None:
    """Conflict-free hypergraph colorings and {a,b}-factor search."""


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _role_comments(roles: VertexRoleMap) -> str:
    return "".join(
        f"# role {v} {r.kind} {r.copy}\n" for v, r in enumerate(roles.roles, start=1))


@cli.command()
@click.option("--construction", "kind", required=True,
              type=click.Choice(cons.KINDS))
@click.option("--t", type=int, default=None, help="factor degree parameter")
@click.option("--r", type=int, default=None, help="regularity / edge size")
@click.option("--n", type=int, default=None, help="vertex count")
@click.option("--delta", type=int, default=None, help="maximum degree")
@click.option("-o", "--output", required=True, type=click.Path(dir_okay=False))
@click.option("--roles/--no-roles", default=False,
              help="emit '# role' comment lines for generated vertex roles")
def gen(kind: str, t: int | None, r: int | None, n: int | None,
        delta: int | None, output: str, roles: bool) -> int:
    """Generate a named construction and write it to a hypergraph file."""

    def need(value: int | None, flag: str) -> int:
        if value is None:
            raise click.UsageError(f"--construction {kind} requires {flag}")
        return value

    role_map = VertexRoleMap()
    if kind in ("g_tr", "h_block", "g_prime"):
        builder = {
            "g_tr": cons.build_g_tr,
            "h_block": cons.build_h_block,
            "g_prime": cons.build_g_prime,
        }[kind]
        h, role_map = builder(need(t, "--t"), need(r, "--r"))
    elif kind == "complete_graph":
        h = cons.complete_graph(need(n, "--n"))
    elif kind == "odd_cycle":
        h = cons.odd_cycle(need(n, "--n"))
    elif kind == "gap_nested":
        h = cons.gap_nested(need(delta, "--delta"))
    elif kind == "two_cliques":
        h = cons.two_cliques(need(delta, "--delta"))
    else:
        h = cons.k4e_gadget(need(r, "--r"))

    text = save_hypergraph(h)
    if roles and role_map.roles:
        text = _role_comments(role_map) + text
    _write(output, text)
    return 0


@cli.command()
@click.option("--algo", required=True,
              type=click.Choice(["greedy", "four", "lll", "exact"]))
@click.option("--colors", type=int, default=None,
              help="palette size (lll: defaults to the guaranteed bound; "
                   "exact: search cap)")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--max-resamples", type=int, default=DEFAULT_MAX_ROUNDS,
              show_default=True)
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", required=True, type=click.Path(dir_okay=False))
def color(algo: str, colors: int | None, seed: int, max_resamples: int,
          file: str, output: str) -> int:
    """Color the hypergraph in FILE and write the coloring to -o."""
    h = load_hypergraph(_read(file))
    if algo == "greedy":
        coloring = greedy_cf_coloring(h)
    elif algo == "four":
        coloring = color_4uniform(h)
    elif algo == "lll":
        if colors is None:
            st = stats(h)
            if st.uniform_r is None:
                raise HypergraphError(
                    "default palette needs a uniform hypergraph; pass --colors")
            colors = color_bound(st.uniform_r, st.max_degree)
        maybe = randomized_cf_coloring(
            h, LLLParams(k=colors, seed=seed, max_rounds=max_resamples))
        if maybe is None:
            click.echo("resample cap exceeded", err=True)
            return 2
        coloring = maybe
    else:
        result = chi_cf_exact(h, k_max=colors)
        if result is None:
            click.echo(f"no conflict-free coloring with {colors} colors", err=True)
            return 1
        coloring = result.witness
    _write(output, save_coloring(coloring))
    return 0


@cli.command()
@click.argument("hypergraph", type=click.Path(exists=True, dir_okay=False))
@click.argument("coloring", type=click.Path(exists=True, dir_okay=False))
def verify(hypergraph: str, coloring: str) -> int:
    """Check conflict-freeness; bad edge indices print one per line."""
    h = load_hypergraph(_read(hypergraph))
    c = load_coloring(_read(coloring))
    bad = is_conflict_free(h, c)
    for idx in bad:
        click.echo(str(idx))
    return 1 if bad else 0


@cli.command("dual")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", required=True, type=click.Path(dir_okay=False))
def dual_cmd(file: str, output: str) -> int:
    """Write the dual hypergraph of FILE to -o."""
    h = load_hypergraph(_read(file))
    _write(output, save_hypergraph(dual(h)))
    return 0


@cli.command()
@click.option("--a", "a", required=True, type=int)
@click.option("--b", "b", required=True, type=int)
@click.option("--budget", type=int, default=10**8, show_default=True,
              help="search-node limit")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
def factor(a: int, b: int, budget: int, file: str) -> int:
    """Search an {a,b}-factor; prints a factor file, NONE, or BUDGET."""
    g = load_hypergraph(_read(file))
    obstruction = parity_precheck(g, a, b)
    if obstruction is not None:
        click.echo(f"infeasible by parity: {obstruction}", err=True)
        click.echo("NONE")
        return 1
    try:
        found = find_ab_factor(g, a, b, budget=budget)
    except SearchBudgetExceeded as exc:
        click.echo(str(exc), err=True)
        click.echo("BUDGET")
        return 2
    if found is None:
        click.echo("NONE")
        return 1
    click.echo(save_factor(g.m, found.selected), nl=False)
    return 0


@cli.command("chi-cf")
@click.option("--max-k", type=int, default=None,
              help="largest palette to try (default: max degree + 1)")
@click.option("--mode", type=click.Choice(["exact", "characterize-4u"]),
              default="exact", show_default=True)
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
def chi_cf(max_k: int | None, mode: str, file: str) -> int:
    """Exact conflict-free chromatic number plus a witness coloring."""
    h = load_hypergraph(_read(file))
    if mode == "characterize-4u":
        res = characterize_4uniform(h)
        click.echo(str(res.chi_cf))
        click.echo(save_coloring(res.coloring), nl=False)
        return 0
    result = chi_cf_exact(h, k_max=max_k)
    if result is None:
        click.echo(f"above {max_k}")
        return 1
    click.echo(str(result.chi_cf))
    click.echo(save_coloring(result.witness), nl=False)
    return 0


@cli.command("stats")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
def stats_cmd(file: str) -> int:
    """Print size, degree, uniformity, regularity, and connectivity."""
    st = stats(load_hypergraph(_read(file)))
    click.echo(f"n {st.n}")
    click.echo(f"m {st.m}")
    click.echo(f"max-degree {st.max_degree}")
    click.echo(f"max-edge-degree {st.max_edge_degree}")
    click.echo(f"uniform {st.uniform_r if st.uniform_r is not None else 'none'}")
    click.echo(f"regular {st.regular_a if st.regular_a is not None else 'none'}")
    click.echo(f"connected {'yes' if st.connected else 'no'}")
    return 0


def main(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit-code contract."""
    try:
        rv = cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return 64
    except ParseError as exc:
        click.echo(f"input error: {exc}", err=True)
        return 65
    except HypergraphError as exc:
        click.echo(f"data error: {exc}", err=True)
        return 65
    except OSError as exc:
        click.echo(f"i/o error: {exc}", err=True)
        return 66
    return 0 if rv is None else int(rv)


if __name__ == "__main__":
    sys.exit(main())
