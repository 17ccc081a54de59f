"""Read-only HTTP API over a built artifact, plus static serving of the UI.

All endpoints serve the same JSON schemas as the on-disk bundle; nothing
mutates the artifact, so concurrent requests always see one consistent
snapshot. Every response carries the build input hash in the
``X-Artifact-Hash`` header for cache validation.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

from fastapi import FastAPI, Request
from fastapi.responses import FileResponse, HTMLResponse, JSONResponse

from .artifact import LoadedArtifact, ego_response, graph_json, load_artifact, paths_json, stats_json
from .graph import WeightClass, find_paths

_CLASS_NAMES = {c.label: c for c in WeightClass}


class _BadParam(ValueError):
    pass


def _parse_min_class(value: Optional[str]) -> WeightClass:
    if value is None or value == "":
        return WeightClass.WEAK
    cls = _CLASS_NAMES.get(value.lower())
    if cls is None:
        raise _BadParam(f"min_class must be one of {sorted(_CLASS_NAMES)}, got {value!r}")
    return cls


def _parse_positive(value: Optional[str], default: int, name: str) -> int:
    if value is None or value == "":
        return default
    try:
        parsed = int(value)
    except ValueError:
        raise _BadParam(f"{name} must be an integer, got {value!r}") from None
    if parsed < 1:
        raise _BadParam(f"{name} must be >= 1, got {parsed}")
    return parsed


def _resolve(artifact: LoadedArtifact, ref: str) -> Optional[str]:
    return artifact.resolve_concept(ref)


def create_app(artifact: LoadedArtifact, ui_dir: Optional[Path] = None) -> FastAPI:
    app = FastAPI(title="hypermediator", docs_url=None, redoc_url=None, openapi_url=None)

    def not_found(message: str) -> JSONResponse:
        return JSONResponse({"error": message}, status_code=404)

    def bad_request(message: str) -> JSONResponse:
        return JSONResponse({"error": message}, status_code=400)

    @app.middleware("http")
    async def artifact_hash_header(request: Request, call_next):
        response = await call_next(request)
        response.headers["X-Artifact-Hash"] = artifact.input_hash
        return response

    @app.get("/api/index")
    def api_index():
        return JSONResponse(artifact.index)

    @app.get("/api/graph")
    def api_graph():
        return JSONResponse(graph_json(artifact.graph, artifact.concept_to_slug))

    @app.get("/api/graph/ego/{slug}")
    def api_ego(slug: str, depth: Optional[str] = None, min_class: Optional[str] = None):
        try:
            depth_value = _parse_positive(depth, 1, "depth")
            min_class_value = _parse_min_class(min_class)
        except _BadParam as exc:
            return bad_request(str(exc))
        concept = _resolve(artifact, slug)
        if concept is None:
            return not_found(f"unknown concept: {slug!r}")
        return JSONResponse(
            ego_response(artifact, artifact.concept_to_slug[concept], depth_value, min_class_value)
        )

    @app.get("/api/graph/paths")
    def api_paths(
        request: Request,
        max_hops: Optional[str] = None,
        min_class: Optional[str] = None,
    ):
        source_ref = request.query_params.get("from")
        target_ref = request.query_params.get("to")
        if not source_ref or not target_ref:
            return bad_request("parameters 'from' and 'to' are required")
        try:
            hops = _parse_positive(max_hops, 3, "max_hops")
            min_class_value = _parse_min_class(min_class)
        except _BadParam as exc:
            return bad_request(str(exc))
        source = _resolve(artifact, source_ref)
        target = _resolve(artifact, target_ref)
        if source is None:
            return not_found(f"unknown concept: {source_ref!r}")
        if target is None:
            return not_found(f"unknown concept: {target_ref!r}")
        paths = find_paths(artifact.graph, source, target, hops, min_class_value)
        return JSONResponse(paths_json(paths, artifact.graph, artifact.concept_to_slug))

    @app.get("/api/concepts/{slug}")
    def api_concept(slug: str):
        record = artifact.record_for_slug(slug)
        if record is None:
            concept = _resolve(artifact, slug)
            if concept is None:
                return not_found(f"unknown concept: {slug!r}")
            record = artifact.record_for_slug(artifact.concept_to_slug[concept])
        return JSONResponse(record)

    @app.get("/api/articles/{article_id}")
    def api_article(article_id: str):
        article = artifact.article_for_id(article_id)
        if article is None:
            return not_found(f"unknown article: {article_id!r}")
        return JSONResponse(article)

    @app.get("/api/stats")
    def api_stats():
        return JSONResponse(stats_json(artifact.graph.stats()))

    @app.get("/{path:path}")
    def static_files(path: str):
        if path.startswith("api/") or path == "api":
            return not_found(f"no such endpoint: /{path}")
        if ui_dir is not None:
            candidate = (ui_dir / path).resolve() if path else ui_dir / "index.html"
            if path and candidate.is_file() and ui_dir.resolve() in candidate.parents:
                return FileResponse(candidate)
            # client-side routes fall back to the app shell
            index = ui_dir / "index.html"
            if index.is_file() and "." not in path.rsplit("/", 1)[-1]:
                return FileResponse(index)
            return not_found(f"no such file: /{path}")
        if path:
            return not_found(f"no such file: /{path}")
        return HTMLResponse(_fallback_page(artifact))

    return app


def _fallback_page(artifact: LoadedArtifact) -> str:
    concepts = len(artifact.index["concepts"])
    articles = len(artifact.index["articles"])
    return f"""<!doctype html>
<html><head><meta charset="utf-8"><title>hypermediator</title></head>
<body>
<h1>hypermediator API</h1>
<p>Artifact: {concepts} concepts, {articles} articles. No UI bundle configured
(start with --ui to serve one).</p>
<ul>
<li><a href="/api/index">/api/index</a></li>
<li><a href="/api/graph">/api/graph</a></li>
<li><a href="/api/stats">/api/stats</a></li>
<li>/api/concepts/&lt;slug&gt;</li>
<li>/api/articles/&lt;id&gt;</li>
<li>/api/graph/ego/&lt;slug&gt;?depth=&amp;min_class=</li>
<li>/api/graph/paths?from=&amp;to=&amp;max_hops=&amp;min_class=</li>
</ul>
</body></html>"""


def serve(
    artifact_dir: Union[str, Path],
    port: int = 8000,
    host: str = "127.0.0.1",
    ui_dir: Optional[Union[str, Path]] = None,
) -> int:
    """Load the artifact and run the HTTP service; returns an exit code."""
    import sys

    import uvicorn

    artifact = load_artifact(artifact_dir)
    ui = Path(ui_dir) if ui_dir is not None else None
    if ui is None:
        bundled = Path(artifact_dir) / "ui"
        if bundled.is_dir():
            ui = bundled
    app = create_app(artifact, ui)
    try:
        uvicorn.run(app, host=host, port=port, log_level="warning")
    except (OSError, SystemExit) as exc:
        print(f"error: cannot serve on {host}:{port}: {exc}", file=sys.stderr)
        return 1
    return 0
