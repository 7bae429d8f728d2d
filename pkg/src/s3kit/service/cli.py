"""The `s3` command line interface.

Exit codes: 0 ok, 2 I/O error, 3 FQL syntax error, 64 usage error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from ..corpus import ExclusionRules, RootNotFound, scan_tree
from ..fql.ast import FqlError
from ..fql.parser import FqlSyntaxError
from ..metadata import dot as dot_mod
from ..metadata import spel as spel_mod
from ..metadata import tables as tables_mod
from .config import Config, ConfigError
from .core import Engine

EXIT_OK = 0
EXIT_IO = 2
EXIT_FQL_SYNTAX = 3
EXIT_USAGE = 64


def _engine(config_path: str | None) -> Engine:
    config = Config.load(config_path) if config_path else Config()
    return Engine(config)


def _emit(data: dict, as_json: bool, text: str | None = None) -> None:
    if as_json or text is None:
        click.echo(json.dumps(data, indent=2))
    else:
        click.echo(text)


@click.group()
def cli():
    """Explore large scientific codebases: feature queries, metadata
    analysis, and document Q&A."""


@cli.command()
@click.argument("root")
@click.option("--json", "as_json", is_flag=True, help="emit JSON instead of a table")
def scan(root, as_json):
    """Scan a source tree and print per-language statistics."""
    snapshot = scan_tree(root, ExclusionRules())
    stats = snapshot.stats
    artifact = {"type": "language_stats", **stats.to_dict()}
    lines = [f"{'Language':<10} {'Files':>8} {'Lines':>10}"]
    for lang, (files, line_count) in sorted(stats.per_language.items()):
        lines.append(f"{lang:<10} {files:>8} {line_count:>10}")
    lines.append(f"{'total':<10} {stats.total_files:>8} {stats.total_lines:>10}")
    _emit(artifact, as_json, "\n".join(lines))


@cli.command(name="fql")
@click.argument("query")
@click.option("--root", default=".", help="corpus root to scan")
@click.option("--json", "as_json", is_flag=True)
@click.option("--config", "config_path", default=None)
def fql_cmd(query, root, as_json, config_path):
    """Execute a literal FQL query over a source tree."""
    engine = _engine(config_path)
    snapshot = scan_tree(root, ExclusionRules(engine.config.exclude_globs,
                                              engine.config.max_file_bytes))
    artifact = engine.run_fql(query, snapshot)
    text = _render_report(artifact)
    _emit(artifact, as_json, text)


def _render_report(artifact: dict) -> str:
    lines = [artifact.get("query", "")]
    kind = artifact["kind"]
    if kind == "check":
        lines.append("matched" if artifact["matched"] else "no match")
        for h in artifact["hits"]:
            lines.append(f"  {h['file']}:{h['line']}  [{h['term']}]  {h['excerpt']}")
    elif kind == "max":
        w = artifact["winner"]
        lines.append(f"winner: {w['tag']}" if w else "winner: none")
    else:
        for e in artifact["entries"]:
            mark = "x" if e["matched"] else " "
            lines.append(f"  [{mark}] {e['tag']}: {e['hit_count']} hit(s)")
    return "\n".join(lines)


@cli.command()
@click.argument("question")
@click.option("--mode", type=click.Choice(["fql", "metadata", "docs"]), default="fql")
@click.option("--session", "session_id", default=None)
@click.option("--json", "as_json", is_flag=True)
@click.option("--config", "config_path", default=None)
def ask(question, mode, session_id, as_json, config_path):
    """Answer a natural-language question through the matching pipeline."""
    engine = _engine(config_path)
    result = engine.ask(mode, question, session_id)
    if as_json:
        click.echo(json.dumps(result, indent=2))
    else:
        click.echo(result["answer"])
        click.echo(f"(session: {result['session_id']})")
        click.echo(json.dumps(result["artifact"], indent=2))


@cli.command()
@click.argument("files", nargs=-1, required=True)
@click.option("--corpus", default="docs")
@click.option("--config", "config_path", default=None)
def ingest(files, corpus, config_path):
    """Chunk, embed, and append documents to a retrieval index."""
    for f in files:
        if not Path(f).is_file():
            raise click.FileError(f, "not found")
    engine = _engine(config_path)
    result = engine.ingest(list(files), corpus)
    click.echo(json.dumps(result))


@cli.group()
def meta():
    """Query code metadata files (DOT call graphs, CSV tables, loop
    matrices)."""


@meta.command(name="dot")
@click.argument("file", type=click.Path(exists=True))
@click.argument("subcommand", type=click.Choice(["modules", "callers", "callees", "edges"]))
@click.argument("function", required=False)
@click.option("--json", "as_json", is_flag=True)
def meta_dot(file, subcommand, function, as_json):
    """Parse a DOT call graph and run a query against it."""
    graph = dot_mod.parse_dot(Path(file).read_text(encoding="utf-8"))
    if subcommand == "modules":
        names = dot_mod.unique_modules(graph)
        _emit({"type": "module_list", "modules": names}, as_json, "\n".join(names))
        return
    if subcommand == "edges":
        _emit({"type": "call_graph", **graph.to_dict()}, True)
        return
    if not function:
        raise click.UsageError(f"'{subcommand}' requires a module::function argument")
    fn = dot_mod.callers if subcommand == "callers" else dot_mod.callees
    names = [str(q) for q in fn(graph, function)]
    _emit(
        {"type": "adjacency", "relation": subcommand, "function": function, "functions": names},
        as_json,
        "\n".join(names),
    )


@meta.command(name="csv")
@click.argument("file", type=click.Path(exists=True))
@click.argument("subcommand", type=click.Choice(["sql", "show"]))
@click.option("--name", default=None, help="table name (default: file stem)")
@click.option("--primary-key", default=None)
def meta_csv(file, subcommand, name, primary_key):
    """Load a headered CSV and show it or emit CREATE TABLE SQL."""
    table_name = name or Path(file).stem
    table = tables_mod.load_csv(table_name, Path(file).read_text(encoding="utf-8"), primary_key)
    if subcommand == "sql":
        click.echo(tables_mod.render_sql(table))
    else:
        click.echo(json.dumps({"type": "table", **table.to_dict()}, indent=2))


@meta.command(name="spel")
@click.argument("file", type=click.Path(exists=True))
@click.argument("subcommand", type=click.Choice(["sections", "loop"]))
@click.argument("indices", nargs=-1, type=int)
@click.option("--json", "as_json", is_flag=True)
def meta_spel(file, subcommand, indices, as_json):
    """Parse a loop-variable matrix and query loop usage."""
    matrix = spel_mod.parse_loop_matrix(Path(file).read_text(encoding="utf-8"))
    if subcommand == "sections":
        artifact = {"type": "loop_matrix", **matrix.to_dict()}
        text = "\n".join(f"{i}: {s.label} ({s.loop_count} loops)"
                         for i, s in enumerate(matrix.sections))
        _emit(artifact, as_json, text)
        return
    if len(indices) != 2:
        raise click.UsageError("'loop' requires SECTION and LOOP indices")
    usage = spel_mod.loop_usage(matrix, indices[0], indices[1])
    artifact = {
        "type": "loop_usage",
        "section": indices[0],
        "loop": indices[1],
        "variables": [{"name": v, "role": r.value} for v, r in usage],
    }
    _emit(artifact, as_json, "\n".join(f"{v:<20} {r.value}" for v, r in usage))


@cli.command()
@click.option("--config", "config_path", default=None)
def serve(config_path):
    """Run the HTTP API (and web UI, if built) as one process."""
    import uvicorn

    from .api import create_app

    config = Config.load(config_path) if config_path else Config()
    config.validate_paths()
    engine = Engine(config)
    app = create_app(engine)
    uvicorn.run(app, host=config.server.bind_address, port=config.server.port)


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return EXIT_OK
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except (click.UsageError, click.BadParameter) as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except FqlSyntaxError as exc:
        click.echo(f"FQL syntax error: {exc}", err=True)
        return EXIT_FQL_SYNTAX
    except FqlError as exc:
        click.echo(f"FQL error: {exc}", err=True)
        return EXIT_FQL_SYNTAX
    except (RootNotFound, ConfigError, OSError, click.FileError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_IO
    except click.Abort:
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
