"""Command line interface.

Subcommands read graphs as edge lists and embeddings as JSON, from a file
argument or standard input, and write their result to standard output so they
can be chained with pipes. Logging goes to standard error.
"""

import json
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterator, Optional, TextIO

import click
from rich.console import Console
from rich.logging import RichHandler

from .bounds import dimension_interval
from .constructions import exact_embedding
from .errors import EmbeddingMismatchError
from .families import FamilyKind, FamilySpec, build_family, mycielskian
from .graph_core import Graph
from .io_utils import (
    certificate_to_dict,
    parse_edge_list,
    parse_embedding_json,
    report_to_dict,
    write_edge_list,
    write_embedding_json,
)
from .optimizer import SearchConfig, search_embedding
from .svg_utils import render_svg
from .vecneg import lower_bound_dim
from .verification import EXACT_TOL_EDGE, EXACT_TOL_SEP, Embedding, verify_embedding

logger = logging.getLogger(__name__)

CONTEXT_SETTINGS = {"help_option_names": ["-h", "--help"]}

GEN_FAMILIES = [kind.value.replace("_", "-") for kind in FamilyKind]
EMBED_FAMILIES = [
    kind.value.replace("_", "-") for kind in FamilyKind if kind is not FamilyKind.MOBIUS_LADDER
]


def _configure_logging(verbose: bool) -> None:
    package_logger = logging.getLogger(__package__)
    package_logger.handlers.clear()
    handler = RichHandler(console=Console(stderr=True), show_path=False)
    package_logger.addHandler(handler)
    package_logger.setLevel(logging.INFO if verbose else logging.WARNING)


@contextmanager
def _domain_errors() -> Iterator[None]:
    # domain errors and pydantic validation errors are both ValueErrors
    try:
        yield
    except ValueError as e:
        raise click.ClickException(str(e)) from e


def _family_spec(family: str, n: int) -> FamilySpec:
    return FamilySpec(kind=FamilyKind(family.replace("-", "_")), size=n)


def _echo_json(doc: Any) -> None:
    click.echo(json.dumps(doc, indent=2, ensure_ascii=False))


def _read_graph(stream: TextIO) -> Graph:
    return parse_edge_list(stream.read())


def _graph_and_embedding(documents: tuple[TextIO, ...]) -> tuple[Graph, Embedding]:
    """Resolve ``[GRAPH] [EMBEDDING]`` arguments; a lone embedding must carry its edges."""
    if len(documents) > 2:
        raise click.UsageError("expected at most GRAPH and EMBEDDING")
    if len(documents) == 2:
        g = _read_graph(documents[0])
        emb, _ = parse_embedding_json(documents[1].read())
        return g, emb
    stream = documents[0] if documents else click.get_text_stream("stdin")
    emb, g = parse_embedding_json(stream.read())
    if g is None:
        raise EmbeddingMismatchError(
            "embedding carries no edge list; pass the graph as the first argument"
        )
    return g, emb


@click.group(context_settings=CONTEXT_SETTINGS)
@click.option("-v", "--verbose", is_flag=True, help="Log progress to standard error.")
def cli(verbose: bool) -> None:
    """Unit-distance dimension toolkit: generate, bound, embed and verify graphs."""
    _configure_logging(verbose)


@cli.command()
@click.argument("family", type=click.Choice(GEN_FAMILIES))
@click.argument("n", type=int)
def gen(family: str, n: int) -> None:
    """Emit the edge list of a family member."""
    with _domain_errors():
        g = build_family(_family_spec(family, n))
    click.echo(write_edge_list(g), nl=False)


@cli.command()
@click.argument("graph", type=click.File("r"), default="-")
def mycielski(graph: TextIO) -> None:
    """Emit the Mycielskian of GRAPH."""
    with _domain_errors():
        m = mycielskian(_read_graph(graph))
    click.echo(write_edge_list(m), nl=False)


@cli.command()
@click.argument("graph", type=click.File("r"), default="-")
def check(graph: TextIO) -> None:
    """Print the certified lower bound on dim(GRAPH) with its certificate."""
    with _domain_errors():
        g = _read_graph(graph)
        lower = lower_bound_dim(g)
        _echo_json({
            "bound": lower.bound,
            "reason": lower.reason.value,
            "certificate": certificate_to_dict(g, lower.certificate),
        })


@cli.command()
@click.argument("family", type=click.Choice(EMBED_FAMILIES))
@click.argument("n", type=int)
@click.option("--dim", "dimension", type=click.IntRange(min=1), default=None,
              help="Ambient dimension; defaults to the construction's own.")
def embed(family: str, n: int, dimension: Optional[int]) -> None:
    """Emit a closed-form unit-distance embedding of a family member."""
    with _domain_errors():
        g, emb = exact_embedding(_family_spec(family, n), dimension)
    click.echo(write_embedding_json(emb, g), nl=False)


@cli.command()
@click.argument("graph", type=click.File("r"), default="-")
@click.option("--dim", "dimension", type=click.IntRange(min=1), required=True)
@click.option("--restarts", type=click.IntRange(min=1), default=50, show_default=True)
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=1, show_default=True)
@click.option("--max-iterations", type=click.IntRange(min=1), default=2000, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.pass_context
def search(
    ctx: click.Context,
    graph: TextIO,
    dimension: int,
    restarts: int,
    seed: int,
    max_iterations: int,
    workers: int,
) -> None:
    """Search numerically for an embedding of GRAPH in R^DIM."""
    with _domain_errors():
        g = _read_graph(graph)
        cfg = SearchConfig(
            dimension=dimension,
            restarts=restarts,
            seed=seed,
            max_iterations=max_iterations,
            workers=workers,
        )
        result = search_embedding(g, cfg)
    if not result.success:
        click.echo(
            f"no embedding found in R^{dimension} after {result.restarts_used} restarts "
            f"(best residual {result.best_residual:.3e})",
            err=True,
        )
        ctx.exit(1)
    click.echo(write_embedding_json(result.best_embedding, g), nl=False)


@cli.command()
@click.argument("documents", nargs=-1, type=click.File("r"))
@click.option("--tol-edge", type=click.FloatRange(min=0, min_open=True),
              default=EXACT_TOL_EDGE, show_default=True)
@click.option("--tol-sep", type=click.FloatRange(min=0, min_open=True),
              default=EXACT_TOL_SEP, show_default=True)
@click.pass_context
def verify(
    ctx: click.Context, documents: tuple[TextIO, ...], tol_edge: float, tol_sep: float
) -> None:
    """Check an embedding: [GRAPH] EMBEDDING, or an embedding on standard input.

    Exits with status 1 when the embedding is rejected.
    """
    with _domain_errors():
        g, emb = _graph_and_embedding(documents)
        report = verify_embedding(g, emb, tol_edge, tol_sep)
    _echo_json(report_to_dict(report))
    if not report.ok:
        ctx.exit(1)


@cli.command()
@click.argument("documents", nargs=-1, type=click.File("r"))
@click.option("-o", "--output", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write the SVG here instead of standard output.")
def plot(documents: tuple[TextIO, ...], output: Optional[Path]) -> None:
    """Draw [GRAPH] EMBEDDING as SVG."""
    with _domain_errors():
        g, emb = _graph_and_embedding(documents)
        svg = render_svg(g, emb)
    if output is None:
        click.echo(svg, nl=False)
    else:
        output.write_text(svg, encoding="utf-8")
        logger.info(f"Wrote {output}")


@cli.command()
@click.argument("graph", type=click.File("r"), default="-")
@click.option("--restarts", type=click.IntRange(min=1), default=50, show_default=True)
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=1, show_default=True)
@click.option("--no-search", is_flag=True, help="Only use closed-form and simplex upper bounds.")
def dim(graph: TextIO, restarts: int, seed: int, no_search: bool) -> None:
    """Print the interval known for dim(GRAPH)."""
    with _domain_errors():
        g = _read_graph(graph)
        cfg = None if no_search else SearchConfig(dimension=1, restarts=restarts, seed=seed)
        interval, lower, _ = dimension_interval(g, cfg)
        _echo_json({
            "lower": interval.lower,
            "upper": interval.upper,
            "interval": str(interval),
            "lower_reason": interval.lower_reason.value,
            "upper_source": interval.upper_source.value,
            "certificate": certificate_to_dict(g, lower.certificate),
        })


@cli.command(context_settings={"ignore_unknown_options": True, "allow_extra_args": True})
@click.argument("kedro_args", nargs=-1, type=click.UNPROCESSED)
def run(kedro_args: tuple[str, ...]) -> None:
    """Run the project pipelines; extra arguments go to ``kedro run``."""
    from kedro.framework.cli.utils import find_run_command
    from kedro.framework.project import configure_project

    package_name = Path(__file__).parent.name
    configure_project(package_name)
    kedro_run = find_run_command(package_name)
    kedro_run(list(kedro_args), standalone_mode=False)
