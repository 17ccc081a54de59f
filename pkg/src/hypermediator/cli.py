"""Command-line entry point.

Subcommands:
  validate <dir>                      lint a corpus; exit 0 iff no errors
  build <dir> -o <out>                parse, build graph + records, write bundle
  export <out> --format gexf|json     GEXF file or byte-exact bundle copy
  record <out> --concept <id>         print one concept record as JSON
  stats <out>                         print graph statistics as JSON
  paths <out> --from A --to B         bounded simple paths between concepts
  ego <out> --concept A               ego network around a concept
  serve <out> --port <p>              run the read-only HTTP API + UI

Exit codes: 0 success, 1 validation errors / unknown concept / runtime
failure, 2 usage error. Diagnostics go to stderr, data to stdout.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .artifact import (
    ArtifactError,
    build_artifact,
    copy_bundle,
    dump_json,
    ego_response,
    load_artifact,
    paths_json,
    stats_json,
    write_bundle,
)
from .config import ConfigError, load_config
from .gexf import export_gexf
from .graph import UnknownConcept, WeightClass, find_paths
from .parsing import EmptyCorpus, render_report, report_json, validate


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypermediator", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="lint a corpus directory")
    p.add_argument("corpus", type=Path)
    p.add_argument("--json", action="store_true", help="machine-readable report")

    p = sub.add_parser("build", help="build the artifact bundle from a corpus")
    p.add_argument("corpus", type=Path)
    p.add_argument("-o", "--output", type=Path, required=True)
    p.add_argument("--strong-min", type=int, default=None)
    p.add_argument("--moderate-min", type=int, default=None)
    p.add_argument(
        "--analogy-labels", default=None,
        help="comma-separated relation type labels classified as analogy",
    )
    p.add_argument("--context-chars", type=int, default=None)

    p = sub.add_parser("export", help="export from a built artifact")
    p.add_argument("artifact", type=Path)
    p.add_argument("--format", choices=("gexf", "json"), required=True)
    p.add_argument("-o", "--output", type=Path, default=None)

    p = sub.add_parser("record", help="print one concept record as JSON")
    p.add_argument("artifact", type=Path)
    p.add_argument("--concept", required=True)

    p = sub.add_parser("stats", help="print graph statistics as JSON")
    p.add_argument("artifact", type=Path)

    p = sub.add_parser("paths", help="simple paths between two concepts")
    p.add_argument("artifact", type=Path)
    p.add_argument("--from", dest="source", required=True, metavar="FROM")
    p.add_argument("--to", dest="target", required=True, metavar="TO")
    p.add_argument("--max-hops", type=int, default=3)
    p.add_argument("--min-class", choices=("weak", "moderate", "strong"), default="weak")

    p = sub.add_parser("ego", help="ego network around a concept")
    p.add_argument("artifact", type=Path)
    p.add_argument("--concept", required=True)
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--min-class", choices=("weak", "moderate", "strong"), default="weak")

    p = sub.add_parser("serve", help="serve the artifact over HTTP")
    p.add_argument("artifact", type=Path)
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui", type=Path, default=None, help="directory of the built UI bundle")

    return parser


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def _emit(data: dict) -> None:
    sys.stdout.write(dump_json(data).decode("utf-8"))


def _min_class(name: str) -> WeightClass:
    return {c.label: c for c in WeightClass}[name]


def _resolve_concept(artifact, raw: str) -> Optional[str]:
    return artifact.resolve_concept(raw)


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        return _dispatch(args)
    except EmptyCorpus as exc:
        return _fail(str(exc))
    except ConfigError as exc:
        return _fail(str(exc))
    except ArtifactError as exc:
        return _fail(str(exc))
    except OSError as exc:
        return _fail(str(exc))


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "validate":
        report = validate(args.corpus)
        if args.json:
            _emit(report_json(report))
        else:
            print(render_report(report))
        return 0 if not report.errors else 1

    if args.command == "build":
        config = load_config(args.corpus).overridden(
            strong_min=args.strong_min,
            moderate_min=args.moderate_min,
            analogy_labels=(
                [s for s in args.analogy_labels.split(",") if s.strip()]
                if args.analogy_labels is not None
                else None
            ),
            context_chars=args.context_chars,
        )
        artifact, report = build_artifact(args.corpus, config)
        if report.errors:
            print(render_report(report), file=sys.stderr)
            print("error: corpus has validation errors; bundle not written", file=sys.stderr)
            return 1
        for warning in artifact.warnings:
            print(f"warning: {warning}", file=sys.stderr)
        write_bundle(artifact, args.output)
        graph_stats = artifact.graph.stats()
        print(
            f"built {args.output}: {len(artifact.corpus.articles)} article(s), "
            f"{graph_stats.concept_count} concept(s), {graph_stats.edge_count} edge(s)"
        )
        return 0

    if args.command == "export":
        artifact = load_artifact(args.artifact)
        if args.format == "gexf":
            output = args.output or args.artifact / "graph.gexf"
            output.write_bytes(export_gexf(artifact.graph))
            print(str(output))
            return 0
        if args.output is None:
            print("error: --output is required with --format json", file=sys.stderr)
            return 2
        copy_bundle(args.artifact, args.output)
        print(str(args.output))
        return 0

    if args.command == "record":
        artifact = load_artifact(args.artifact)
        concept = _resolve_concept(artifact, args.concept)
        if concept is None:
            return _fail(f"unknown concept: {args.concept!r}")
        _emit(artifact.records[artifact.concept_to_slug[concept]])
        return 0

    if args.command == "stats":
        artifact = load_artifact(args.artifact)
        _emit(stats_json(artifact.graph.stats()))
        return 0

    if args.command == "paths":
        artifact = load_artifact(args.artifact)
        if args.max_hops < 1:
            return _fail("--max-hops must be >= 1")
        source = _resolve_concept(artifact, args.source)
        target = _resolve_concept(artifact, args.target)
        if source is None:
            return _fail(f"unknown concept: {args.source!r}")
        if target is None:
            return _fail(f"unknown concept: {args.target!r}")
        paths = find_paths(
            artifact.graph, source, target, args.max_hops, _min_class(args.min_class)
        )
        _emit(paths_json(paths, artifact.graph, artifact.concept_to_slug))
        return 0

    if args.command == "ego":
        artifact = load_artifact(args.artifact)
        if args.depth < 1:
            return _fail("--depth must be >= 1")
        concept = _resolve_concept(artifact, args.concept)
        if concept is None:
            return _fail(f"unknown concept: {args.concept!r}")
        try:
            _emit(
                ego_response(
                    artifact, artifact.concept_to_slug[concept], args.depth,
                    _min_class(args.min_class),
                )
            )
        except UnknownConcept as exc:
            return _fail(f"unknown concept: {exc}")
        return 0

    if args.command == "serve":
        from .server import serve

        return serve(args.artifact, port=args.port, host=args.host, ui_dir=args.ui)

    raise AssertionError(f"unhandled command {args.command!r}")


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
