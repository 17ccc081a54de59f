"""Build artifact: the on-disk JSON site bundle and its in-memory form.

The bundle written by ``build`` is the artifact — there is no opaque binary
store. ``serve`` and ``export`` read the same files, and the bundle doubles
as a static site payload:

    out/
      manifest.json          input hash, tool version, build configuration
      graph.json             nodes, edges, thresholds, fragment counts
      index.json             concept list with counts + article list
      concepts/<slug>.json   one concept record each
      articles/<slug>.json   article metadata + canonical body text

Rebuilding from identical inputs and configuration reproduces every file
byte-identically except the manifest timestamp.
"""

from __future__ import annotations

import hashlib
import json
import shutil
import urllib.parse
from dataclasses import dataclass
from datetime import datetime, timezone
from functools import cached_property
from pathlib import Path
from typing import Optional, Union

from . import __version__
from .config import CONFIG_FILENAME, BuildConfig, load_config
from .graph import (
    ConceptGraph,
    Edge,
    EdgeKind,
    GraphStats,
    Path as GraphPath,
    UnknownConcept,
    WeightThresholds,
    build_graph,
    ego_network,
    weight_class,
)
from .model import Corpus, TagKind
from .parsing import ValidationReport, parse_corpus
from .records import CATEGORY_ORDER, ConceptRecord, compose_record, list_concepts


def concept_slug(concept: str) -> str:
    """URL-safe slug: spaces become hyphens, everything else percent-encoded
    as needed. Collision resolution happens at bundle level (see _slug_map)."""
    return urllib.parse.quote(concept.replace(" ", "-"), safe="")


def _slug_map(concepts: list[str]) -> dict[str, str]:
    """Assign unique slugs; colliding concepts (e.g. ``a b`` vs ``a-b``) get
    a deterministic ``~2``, ``~3`` suffix in lexicographic concept order."""
    slugs: dict[str, str] = {}
    used: set[str] = set()
    for concept in sorted(concepts):
        base = concept_slug(concept)
        candidate, n = base, 2
        while candidate in used:
            candidate = f"{base}~{n}"
            n += 1
        slugs[concept] = candidate
        used.add(candidate)
    return slugs


def article_filename(article_id: str) -> str:
    return urllib.parse.quote(article_id, safe="")


def dump_json(data: object) -> bytes:
    return (json.dumps(data, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


@dataclass(frozen=True)
class BuildArtifact:
    corpus: Corpus
    graph: ConceptGraph
    records: dict[str, ConceptRecord]   # concept -> record
    config: BuildConfig
    input_hash: str
    warnings: tuple[str, ...] = ()


def hash_inputs(corpus_dir: Union[str, Path], config: BuildConfig) -> str:
    """SHA-256 over every input byte (article files and config file, sorted
    by name) plus the effective configuration."""
    corpus_dir = Path(corpus_dir)
    digest = hashlib.sha256()
    paths = sorted(corpus_dir.glob("*.xml"))
    config_path = corpus_dir / CONFIG_FILENAME
    if config_path.exists():
        paths.append(config_path)
    for path in paths:
        data = path.read_bytes()
        digest.update(path.name.encode("utf-8"))
        digest.update(b"\x00")
        digest.update(str(len(data)).encode("ascii"))
        digest.update(b"\x00")
        digest.update(data)
    digest.update(dump_json(_config_json(config)))
    return digest.hexdigest()


def _config_json(config: BuildConfig) -> dict:
    from dataclasses import fields

    return {
        "thresholds": {
            "strong_min": config.thresholds.strong_min,
            "moderate_min": config.thresholds.moderate_min,
        },
        "analogy_labels": list(config.analogy_labels),
        "context_chars": config.context_chars,
        "captions": {f.name: getattr(config.templates, f.name) for f in fields(config.templates)},
    }


def build_artifact(
    corpus_dir: Union[str, Path],
    config: Optional[BuildConfig] = None,
) -> tuple[BuildArtifact, ValidationReport]:
    """Parse, build the graph, and compose every concept record.

    The caller decides what to do with validation errors; fragments behind
    Error issues are already excluded from the corpus.
    """
    corpus_dir = Path(corpus_dir)
    if config is None:
        config = load_config(corpus_dir)
    corpus, report = parse_corpus(corpus_dir)
    graph, warnings = build_graph(corpus, config.thresholds, config.analogy_labels)
    records = {
        concept: compose_record(corpus, graph, concept, config.templates)
        for concept, _ in list_concepts(corpus)
    }
    artifact = BuildArtifact(
        corpus=corpus,
        graph=graph,
        records=records,
        config=config,
        input_hash=hash_inputs(corpus_dir, config),
        warnings=tuple(warnings),
    )
    return artifact, report


# --- Serialization -----------------------------------------------------------


def edge_json(edge: Edge, graph: ConceptGraph, slugs: dict[str, str]) -> dict:
    return {
        "source": edge.source,
        "target": edge.target,
        "source_slug": slugs.get(edge.source, concept_slug(edge.source)),
        "target_slug": slugs.get(edge.target, concept_slug(edge.target)),
        "kind": edge.kind.value,
        "directed": edge.kind.directed,
        "weight": edge.weight,
        "weight_class": graph.edge_class(edge).label,
        "rel_labels": list(edge.rel_labels),
        "fragments": list(edge.fragments),
    }


def graph_json(graph: ConceptGraph, slugs: Optional[dict[str, str]] = None) -> dict:
    """The graph.json document; also the schema of ego-network responses."""
    if slugs is None:
        slugs = _slug_map(list(graph.nodes))
    nodes = []
    for concept in graph.nodes:
        counts = graph.nodes[concept]
        nodes.append(
            {
                "id": concept,
                "slug": slugs.get(concept, concept_slug(concept)),
                "counts": {k.value: counts[k] for k in TagKind if counts.get(k)},
                "mentions": sum(counts.values()),
            }
        )
    return {
        "thresholds": {
            "strong_min": graph.thresholds.strong_min,
            "moderate_min": graph.thresholds.moderate_min,
        },
        "fragments_by_kind": {k.value: graph.fragments_by_kind.get(k, 0) for k in TagKind},
        "nodes": nodes,
        "edges": [edge_json(edge, graph, slugs) for edge in graph.edges],
    }


def stats_json(stats: GraphStats) -> dict:
    return {
        "concept_count": stats.concept_count,
        "edge_count": stats.edge_count,
        "edges_by_kind": dict(stats.edges_by_kind),
        "fragments_by_kind": dict(stats.fragments_by_kind),
    }


def paths_json(paths: list[GraphPath], graph: ConceptGraph, slugs: dict[str, str]) -> dict:
    return {
        "paths": [
            {
                "nodes": list(path.nodes),
                "edges": [edge_json(edge, graph, slugs) for edge in path.edges],
            }
            for path in paths
        ]
    }


def _meta_json(meta) -> dict:
    return {
        "id": meta.article_id,
        "title": meta.title,
        "authors": list(meta.authors),
        "year": meta.year,
        "theme": meta.theme,
    }


def record_json(record: ConceptRecord, graph: ConceptGraph, slugs: dict[str, str]) -> dict:
    categories = []
    grouped = record.by_category()
    for category in CATEGORY_ORDER:
        entries = []
        for entry in grouped[category]:
            related_slug = (
                slugs.get(entry.related_concept, concept_slug(entry.related_concept))
                if entry.related_concept is not None
                else None
            )
            entries.append(
                {
                    "fragment_key": entry.fragment_key,
                    "kind": entry.kind.value,
                    "category": entry.category.value,
                    "text": entry.text,
                    "caption": entry.caption,
                    "span": list(entry.span),
                    "related_concept": entry.related_concept,
                    "related_slug": related_slug,
                    "article_id": entry.source.article_id,
                    "source": _meta_json(entry.source),
                }
            )
        categories.append({"category": category.value, "entries": entries})
    neighbors = [
        {
            "concept": concept,
            "slug": slugs.get(concept, concept_slug(concept)),
            "kind": kind.value,
            "weight": weight,
            "weight_class": weight_class(weight, graph.thresholds).label,
        }
        for concept, kind, weight in record.neighbors
    ]
    return {
        "concept": record.concept,
        "slug": slugs[record.concept],
        "categories": categories,
        "neighbors": neighbors,
    }


def index_json(artifact: BuildArtifact, slugs: dict[str, str]) -> dict:
    concepts = []
    for concept, counts in list_concepts(artifact.corpus):
        concepts.append(
            {
                "id": concept,
                "slug": slugs[concept],
                "counts": {k.value: counts[k] for k in TagKind if counts.get(k)},
                "total": sum(counts.values()),
            }
        )
    articles = []
    for article in artifact.corpus.articles:
        entry = _meta_json(article.meta)
        entry["file"] = article_filename(article.meta.article_id)
        entry["fragments"] = len(article.fragments)
        articles.append(entry)
    return {"concepts": concepts, "articles": articles}


def article_json(article) -> dict:
    data = _meta_json(article.meta)
    data["body"] = article.body
    data["fragments"] = [
        {
            "fragment_key": f.fragment_id,
            "kind": f.kind.value,
            "span": list(f.span),
            "concepts": list(f.concepts()),
        }
        for f in article.fragments
    ]
    return data


def manifest_json(artifact: BuildArtifact, timestamp: Optional[str] = None) -> dict:
    if timestamp is None:
        timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return {
        "input_hash": artifact.input_hash,
        "tool_version": __version__,
        **_config_json(artifact.config),
        "generated_at": timestamp,
    }


def write_bundle(artifact: BuildArtifact, out_dir: Union[str, Path]) -> Path:
    """Write the JSON site bundle; replaces any previous bundle content."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for sub in ("concepts", "articles"):
        target = out_dir / sub
        if target.exists():
            shutil.rmtree(target)
        target.mkdir()

    slugs = _slug_map(list(artifact.records))
    (out_dir / "manifest.json").write_bytes(dump_json(manifest_json(artifact)))
    (out_dir / "graph.json").write_bytes(dump_json(graph_json(artifact.graph, slugs)))
    (out_dir / "index.json").write_bytes(dump_json(index_json(artifact, slugs)))
    for concept, record in sorted(artifact.records.items()):
        path = out_dir / "concepts" / f"{slugs[concept]}.json"
        path.write_bytes(dump_json(record_json(record, artifact.graph, slugs)))
    for article in artifact.corpus.articles:
        path = out_dir / "articles" / f"{article_filename(article.meta.article_id)}.json"
        path.write_bytes(dump_json(article_json(article)))
    return out_dir


def copy_bundle(artifact_dir: Union[str, Path], out_dir: Union[str, Path]) -> Path:
    """Byte-exact copy of a bundle (the ``export --format json`` operation)."""
    artifact_dir, out_dir = Path(artifact_dir), Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name in ("manifest.json", "graph.json", "index.json"):
        shutil.copyfile(artifact_dir / name, out_dir / name)
    for sub in ("concepts", "articles"):
        target = out_dir / sub
        if target.exists():
            shutil.rmtree(target)
        shutil.copytree(artifact_dir / sub, target)
    return out_dir


# --- Loading -----------------------------------------------------------------


class ArtifactError(Exception):
    """Raised when an artifact directory is missing or inconsistent."""


@dataclass(frozen=True)
class LoadedArtifact:
    """In-memory snapshot of a bundle, immutable and shareable across
    concurrent readers. Everything is loaded eagerly at open time."""

    root: Path
    manifest: dict
    graph: ConceptGraph
    index: dict
    records: dict[str, dict]    # slug -> record document
    articles: dict[str, dict]   # article id -> article document

    @property
    def input_hash(self) -> str:
        return self.manifest["input_hash"]

    @cached_property
    def concept_to_slug(self) -> dict[str, str]:
        return {item["id"]: item["slug"] for item in self.index["concepts"]}

    @cached_property
    def slug_to_concept(self) -> dict[str, str]:
        return {item["slug"]: item["id"] for item in self.index["concepts"]}

    def record_for_slug(self, slug: str) -> Optional[dict]:
        return self.records.get(slug)

    def article_for_id(self, article_id: str) -> Optional[dict]:
        return self.articles.get(article_id)

    def resolve_concept(self, ref: str) -> Optional[str]:
        """Resolve a concept reference: a slug, a URL-decoded slug (HTTP path
        parameters arrive percent-decoded), or a raw concept id."""
        concept = self.slug_to_concept.get(ref)
        if concept is not None:
            return concept
        concept = self.slug_to_concept.get(urllib.parse.quote(ref, safe=""))
        if concept is not None:
            return concept
        from .model import InvalidConceptId, normalize_concept_id

        try:
            normalized = normalize_concept_id(ref)
        except InvalidConceptId:
            return None
        return normalized if normalized in self.concept_to_slug else None


def _graph_from_json(data: dict) -> ConceptGraph:
    thresholds = WeightThresholds(
        data["thresholds"]["strong_min"], data["thresholds"]["moderate_min"]
    )
    nodes = {
        node["id"]: {TagKind(k): v for k, v in node.get("counts", {}).items()}
        for node in data["nodes"]
    }
    edges = tuple(
        Edge(
            source=e["source"],
            target=e["target"],
            kind=EdgeKind(e["kind"]),
            weight=e["weight"],
            rel_labels=tuple(e.get("rel_labels", ())),
            fragments=tuple(e.get("fragments", ())),
        )
        for e in data["edges"]
    )
    fragments_by_kind = {TagKind(k): v for k, v in data.get("fragments_by_kind", {}).items()}
    return ConceptGraph(
        nodes=nodes, edges=edges, thresholds=thresholds, fragments_by_kind=fragments_by_kind
    )


def load_artifact(artifact_dir: Union[str, Path]) -> LoadedArtifact:
    root = Path(artifact_dir)
    try:
        manifest = json.loads((root / "manifest.json").read_text(encoding="utf-8"))
        graph_data = json.loads((root / "graph.json").read_text(encoding="utf-8"))
        index = json.loads((root / "index.json").read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise ArtifactError(f"not a build artifact: {root} ({exc.filename} missing)") from exc
    except json.JSONDecodeError as exc:
        raise ArtifactError(f"corrupt artifact file in {root}: {exc}") from exc

    records: dict[str, dict] = {}
    for item in index["concepts"]:
        path = root / "concepts" / f"{item['slug']}.json"
        try:
            records[item["slug"]] = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError as exc:
            raise ArtifactError(f"record file missing for concept {item['id']!r}") from exc

    articles: dict[str, dict] = {}
    for item in index["articles"]:
        path = root / "articles" / f"{item['file']}.json"
        try:
            articles[item["id"]] = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError as exc:
            raise ArtifactError(f"article file missing for id {item['id']!r}") from exc

    graph = _graph_from_json(graph_data)
    return LoadedArtifact(
        root=root, manifest=manifest, graph=graph, index=index,
        records=records, articles=articles,
    )


def ego_response(artifact: LoadedArtifact, center_slug: str, depth: int, min_class) -> dict:
    """Ego-network response in graph.json schema; raises UnknownConcept."""
    concept = artifact.slug_to_concept.get(center_slug)
    if concept is None:
        raise UnknownConcept(center_slug)
    subgraph = ego_network(artifact.graph, concept, depth, min_class)
    return graph_json(subgraph, artifact.concept_to_slug)
