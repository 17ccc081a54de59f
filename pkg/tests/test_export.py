import json
import xml.etree.ElementTree as ET

import networkx as nx
import pytest

from hypermediator import build_graph, export_gexf, load_artifact, parse_corpus
from hypermediator.artifact import (
    build_artifact,
    concept_slug,
    copy_bundle,
    hash_inputs,
    write_bundle,
    _slug_map,
)
from hypermediator.config import BuildConfig
from test_graph import make_corpus


def read_gexf_counts(data: bytes, tmp_path):
    tmp_path.mkdir(parents=True, exist_ok=True)
    path = tmp_path / "g.gexf"
    path.write_bytes(data)
    parsed = nx.read_gexf(path)
    return parsed.number_of_nodes(), parsed.number_of_edges()


class TestGexf:
    def test_star_graph_counts_via_independent_reader(self, tmp_path):
        corpus = make_corpus(
            [("relation", "centre", leaf, "lien") for leaf in ("n1", "n2", "n3", "n4")]
        )
        graph, _ = build_graph(corpus)
        nodes, edges = read_gexf_counts(export_gexf(graph), tmp_path)
        assert (nodes, edges) == (5, 4)

    def test_fixture_graphs_round_trip(self, fixture_corpora, tmp_path):
        # networkx has no mixed-graph class, so it only reads graphs whose
        # edges all share one directedness; mixed fixtures are counted with an
        # independent structural parse instead (Gephi itself accepts mixed).
        ns = "{http://www.gexf.net/1.2draft}"
        for name, directory in fixture_corpora.items():
            corpus, _ = parse_corpus(directory)
            graph, _ = build_graph(corpus)
            data = export_gexf(graph)
            directedness = {e.kind.directed for e in graph.edges}
            if len(directedness) <= 1:
                nodes, edges = read_gexf_counts(data, tmp_path / name)
            else:
                root = ET.fromstring(data)
                nodes = len(root.find(f"{ns}graph/{ns}nodes"))
                edges = len(root.find(f"{ns}graph/{ns}edges"))
            assert (nodes, edges) == (len(graph.nodes), len(graph.edges)), name

    def test_empty_graph(self):
        from hypermediator import Corpus

        empty_graph, _ = build_graph(Corpus(()))
        root = ET.fromstring(export_gexf(empty_graph))
        ns = "{http://www.gexf.net/1.2draft}"
        assert root.find(f"{ns}graph/{ns}nodes") is not None
        assert len(root.find(f"{ns}graph/{ns}nodes")) == 0
        assert len(root.find(f"{ns}graph/{ns}edges")) == 0

    def test_deterministic_bytes(self, large_dir):
        corpus, _ = parse_corpus(large_dir)
        graph, _ = build_graph(corpus)
        assert export_gexf(graph) == export_gexf(graph)

    def test_per_edge_directedness(self, large_dir):
        corpus, _ = parse_corpus(large_dir)
        graph, _ = build_graph(corpus)
        root = ET.fromstring(export_gexf(graph))
        ns = "{http://www.gexf.net/1.2draft}"
        graph_el = root.find(f"{ns}graph")
        assert "defaultedgetype" not in graph_el.attrib
        edge_types = {}
        for edge_el in root.iter(f"{ns}edge"):
            kind = next(
                av.get("value")
                for av in edge_el.iter(f"{ns}attvalue")
                if av.get("for") == "kind"
            )
            edge_types.setdefault(kind, set()).add(edge_el.get("type"))
        assert edge_types["part_whole"] == {"directed"}
        assert edge_types["specification"] == {"directed"}
        assert edge_types["associative"] == {"undirected"}
        assert edge_types["analogy"] == {"undirected"}

    def test_weight_attributes(self, large_dir):
        corpus, _ = parse_corpus(large_dir)
        graph, _ = build_graph(corpus)
        root = ET.fromstring(export_gexf(graph))
        ns = "{http://www.gexf.net/1.2draft}"
        for edge_el in root.iter(f"{ns}edge"):
            values = {
                av.get("for"): av.get("value") for av in edge_el.iter(f"{ns}attvalue")
            }
            assert set(values) == {"kind", "weight", "weight_class", "rel_labels"}
            assert edge_el.get("weight") == values["weight"]
            assert values["weight_class"] in ("weak", "moderate", "strong")


class TestSlugs:
    def test_space_to_hyphen(self):
        assert concept_slug("parcours de lecture") == "parcours-de-lecture"

    def test_percent_encoding(self):
        assert concept_slug("systémique") == "syst%C3%A9mique"

    def test_collision_disambiguation(self):
        # "a b" sorts before "a-b" (space < hyphen), so it claims the base slug
        slugs = _slug_map(["a b", "a-b"])
        assert slugs["a b"] == "a-b"
        assert slugs["a-b"] == "a-b~2"
        assert len(set(slugs.values())) == 2


class TestBundle:
    def test_referential_completeness(self, large_dir, tmp_path):
        artifact, _ = build_artifact(large_dir)
        out = write_bundle(artifact, tmp_path / "out")
        index = json.loads((out / "index.json").read_text(encoding="utf-8"))
        for item in index["concepts"]:
            assert (out / "concepts" / f"{item['slug']}.json").is_file(), item
        for item in index["articles"]:
            assert (out / "articles" / f"{item['file']}.json").is_file(), item

    def test_record_spans_reslice_against_article_body(self, fixture_corpora, tmp_path):
        for name, directory in fixture_corpora.items():
            artifact, _ = build_artifact(directory)
            out = write_bundle(artifact, tmp_path / name)
            index = json.loads((out / "index.json").read_text(encoding="utf-8"))
            files = {item["id"]: item["file"] for item in index["articles"]}
            for item in index["concepts"]:
                record = json.loads(
                    (out / "concepts" / f"{item['slug']}.json").read_text(encoding="utf-8")
                )
                for category in record["categories"]:
                    for entry in category["entries"]:
                        article = json.loads(
                            (out / "articles" / f"{files[entry['article_id']]}.json").read_text(
                                encoding="utf-8"
                            )
                        )
                        body = article["body"].encode("utf-8")
                        start, end = entry["span"]
                        assert body[start:end].decode("utf-8") == entry["text"]

    def test_graph_json_partition_sums(self, large_dir, tmp_path):
        artifact, _ = build_artifact(large_dir)
        out = write_bundle(artifact, tmp_path / "out")
        data = json.loads((out / "graph.json").read_text(encoding="utf-8"))
        by_kind = {}
        for edge in data["edges"]:
            by_kind[edge["kind"]] = by_kind.get(edge["kind"], 0) + 1
        assert sum(by_kind.values()) == len(data["edges"])

    def test_rebuild_byte_identical_except_timestamp(self, large_dir, tmp_path):
        first, _ = build_artifact(large_dir)
        second, _ = build_artifact(large_dir)
        out1 = write_bundle(first, tmp_path / "one")
        out2 = write_bundle(second, tmp_path / "two")
        files1 = sorted(p.relative_to(out1) for p in out1.rglob("*.json"))
        files2 = sorted(p.relative_to(out2) for p in out2.rglob("*.json"))
        assert files1 == files2
        for relative in files1:
            a, b = (out1 / relative).read_bytes(), (out2 / relative).read_bytes()
            if relative.name == "manifest.json":
                ma, mb = json.loads(a), json.loads(b)
                ma.pop("generated_at"), mb.pop("generated_at")
                assert ma == mb
            else:
                assert a == b, relative

    def test_input_hash_covers_config(self, large_dir):
        default = hash_inputs(large_dir, BuildConfig())
        changed = hash_inputs(large_dir, BuildConfig().overridden(strong_min=4))
        assert default != changed

    def test_input_hash_covers_file_bytes(self, large_dir, tmp_path):
        workdir = tmp_path / "copy"
        workdir.mkdir()
        for path in large_dir.glob("*.xml"):
            (workdir / path.name).write_bytes(path.read_bytes())
        base = hash_inputs(workdir, BuildConfig())
        target = workdir / "navigation.xml"
        target.write_bytes(target.read_bytes() + b"\n")
        assert hash_inputs(workdir, BuildConfig()) != base

    def test_load_round_trip(self, large_dir, tmp_path):
        artifact, _ = build_artifact(large_dir)
        out = write_bundle(artifact, tmp_path / "out")
        loaded = load_artifact(out)
        assert loaded.input_hash == artifact.input_hash
        assert loaded.graph.edges == artifact.graph.edges
        assert dict(loaded.graph.nodes) == dict(artifact.graph.nodes)
        assert loaded.graph.thresholds == artifact.graph.thresholds
        assert loaded.graph.stats() == artifact.graph.stats()
        assert set(loaded.records) == {
            item["slug"] for item in loaded.index["concepts"]
        }

    def test_copy_bundle_is_byte_exact(self, large_dir, tmp_path):
        artifact, _ = build_artifact(large_dir)
        out = write_bundle(artifact, tmp_path / "out")
        copied = copy_bundle(out, tmp_path / "copy")
        for path in out.rglob("*.json"):
            relative = path.relative_to(out)
            assert (copied / relative).read_bytes() == path.read_bytes()

    def test_stale_bundle_files_removed(self, large_dir, basic_dir, tmp_path):
        big, _ = build_artifact(large_dir)
        out = write_bundle(big, tmp_path / "out")
        small, _ = build_artifact(basic_dir)
        write_bundle(small, out)
        loaded = load_artifact(out)
        on_disk = {p.stem for p in (out / "concepts").glob("*.json")}
        assert on_disk == set(loaded.records)
