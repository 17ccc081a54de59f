"""Brute-force reference implementations for cross-checking the package.

Everything here is deliberately independent of the hypermediator package:
articles are scanned with a hand-rolled tag tokenizer (no XML library), and
graph aggregation is flat triple counting over the scanned fragments. Keep it
dumb; its only job is to disagree loudly when the real implementation drifts.

Limitations (fine for the bundled fixtures): no CDATA sections, no comments
or processing instructions inside <body>, only the five predefined entities
plus numeric character references.
"""

from __future__ import annotations

import re
import unicodedata
from collections import Counter
from pathlib import Path

SCAC_KINDS = ("identity", "norm", "stakes", "position", "relations", "time", "spatial", "quote")

_TAG_RE = re.compile(r"<(/?)([A-Za-z_][\w.:-]*)((?:\s+[\w.:-]+\s*=\s*(?:\"[^\"]*\"|'[^']*'))*)\s*(/?)>")
_ATTR_RE = re.compile(r"([\w.:-]+)\s*=\s*(?:\"([^\"]*)\"|'([^']*)')")
_CHARREF_RE = re.compile(r"&(#x?[0-9A-Fa-f]+|[a-z]+);")

_ENTITIES = {"amp": "&", "lt": "<", "gt": ">", "quot": '"', "apos": "'"}


def unescape(text: str) -> str:
    def sub(match: re.Match) -> str:
        ref = match.group(1)
        if ref.startswith("#x") or ref.startswith("#X"):
            return chr(int(ref[2:], 16))
        if ref.startswith("#"):
            return chr(int(ref[1:]))
        return _ENTITIES[ref]

    return _CHARREF_RE.sub(sub, text)


def norm_concept(raw: str) -> str:
    s = unicodedata.normalize("NFC", raw)
    s = unicodedata.normalize("NFC", s.casefold())
    return " ".join(s.split())


def scan_article(path: Path) -> dict | None:
    """Scan one article file; returns {'id', 'fragments'} or None if the
    document is structurally hopeless (no body)."""
    raw = path.read_text(encoding="utf-8")

    root_match = re.search(r"<article(\s[^>]*)?>", raw)
    article_id = path.stem
    if root_match and root_match.group(1):
        attrs = _parse_attrs(root_match.group(1))
        if attrs.get("id", "").strip():
            article_id = attrs["id"].strip()

    body_match = re.search(r"<body(?:\s[^>]*)?>(.*)</body>", raw, re.DOTALL)
    if body_match is None:
        return None
    body_src = body_match.group(1)

    fragments: list[dict] = []
    stack: list[dict | None] = []  # None marks a non-SCAC element
    pos = 0
    texts: list[list[str]] = []  # text accumulators for open SCAC elements

    def add_text(chunk: str) -> None:
        if not chunk:
            return
        text = unescape(chunk)
        for acc in texts:
            acc.append(text)

    for match in _TAG_RE.finditer(body_src):
        add_text(body_src[pos : match.start()])
        pos = match.end()
        closing, name, attr_src, selfclosing = match.groups()
        if closing:
            entry = stack.pop()
            if entry is not None:
                entry["text"] = "".join(texts.pop())
                fragments.append(entry)
            continue
        if name in SCAC_KINDS:
            entry = {"kind": name, "attrs": _parse_attrs(attr_src), "article": article_id}
            if selfclosing:
                entry["text"] = ""
                fragments.append(entry)
            else:
                stack.append(entry)
                texts.append([])
        else:
            if not selfclosing:
                stack.append(None)
    add_text(body_src[pos:])

    return {"id": article_id, "fragments": [f for f in fragments if _accept(f)]}


def _parse_attrs(src: str) -> dict[str, str]:
    return {
        m.group(1): unescape(m.group(2) if m.group(2) is not None else m.group(3))
        for m in _ATTR_RE.finditer(src or "")
    }


def _concept_attr(attrs: dict, name: str) -> str | None:
    value = attrs.get(name)
    if value is None:
        return None
    normalized = norm_concept(value)
    return normalized or None


def _accept(fragment: dict) -> bool:
    """Replicate the acceptance rules; rewrites attrs to normalized form."""
    kind, attrs = fragment["kind"], fragment["attrs"]
    if not fragment["text"].strip():
        return False

    out: dict[str, str] = {}
    if kind in ("identity", "norm", "stakes"):
        concept = _concept_attr(attrs, "id")
        if concept is None:
            return False
        out["id"] = concept
    elif kind == "position":
        pw = {"holonym", "meronym"} & set(attrs)
        sp = {"hypernym", "hyponym"} & set(attrs)
        if (pw and sp) or not (pw or sp):
            return False
        names = ("hypernym", "hyponym") if sp else ("holonym", "meronym")
        for name in names:
            concept = _concept_attr(attrs, name)
            if concept is None:
                return False
            out[name] = concept
    elif kind == "relations":
        if "type" not in attrs:
            return False
        for name in ("a", "b"):
            concept = _concept_attr(attrs, name)
            if concept is None:
                return False
            out[name] = concept
        out["type"] = attrs["type"]
    else:
        concept = _concept_attr(attrs, "id")
        if concept is None:
            return False
        out["id"] = concept
        extras = {
            "time": ("date",),
            "spatial": ("lieu", "place"),
            "quote": ("auteur", "author", "reference"),
        }[kind]
        resolved: dict[str, str] = {}
        for name in extras:
            if name in attrs:
                canonical = {"place": "lieu", "author": "auteur"}.get(name, name)
                resolved.setdefault(canonical, attrs[name])
        required = {"time": ("date",), "spatial": ("lieu",), "quote": ("auteur", "reference")}[kind]
        for name in required:
            if name not in resolved:
                return False
        out.update(resolved)

    fragment["attrs"] = out
    return True


def scan_corpus(directory: Path) -> dict:
    """Scan every article file; first file (sorted by name) wins duplicate ids."""
    articles: dict[str, list[dict]] = {}
    for path in sorted(Path(directory).glob("*.xml")):
        scanned = scan_article(path)
        if scanned is None or scanned["id"] in articles:
            continue
        articles[scanned["id"]] = scanned["fragments"]
    fragments = [f for frags in articles.values() for f in frags]
    return {"articles": articles, "fragments": fragments}


def mentions(fragment: dict) -> tuple[str, ...]:
    attrs = fragment["attrs"]
    if fragment["kind"] == "position":
        pair = (
            (attrs["holonym"], attrs["meronym"])
            if "holonym" in attrs
            else (attrs["hypernym"], attrs["hyponym"])
        )
    elif fragment["kind"] == "relations":
        pair = (attrs["a"], attrs["b"])
    else:
        return (attrs["id"],)
    return pair if pair[0] != pair[1] else (pair[0],)


def count_fragments(fragments: list[dict]) -> Counter:
    return Counter(f["kind"] for f in fragments)


def concept_mentions(fragments: list[dict]) -> dict[str, Counter]:
    counts: dict[str, Counter] = {}
    for fragment in fragments:
        for concept in mentions(fragment):
            counts.setdefault(concept, Counter())[fragment["kind"]] += 1
    return counts


def count_triples(
    fragments: list[dict], analogy_labels: frozenset = frozenset({"analogy", "analogie", "analog"})
) -> dict[tuple[str, str, str], dict]:
    """Flat triple counting: (source, target, kind) -> weight + labels."""
    edges: dict[tuple[str, str, str], dict] = {}
    for fragment in fragments:
        attrs = fragment["attrs"]
        if fragment["kind"] == "position":
            if "holonym" in attrs:
                key = (attrs["holonym"], attrs["meronym"], "part_whole")
            else:
                key = (attrs["hypernym"], attrs["hyponym"], "specification")
            label = None
        elif fragment["kind"] == "relations":
            rel_type = attrs["type"]
            kind = (
                "analogy"
                if rel_type.strip() and norm_concept(rel_type) in analogy_labels
                else "associative"
            )
            a, b = sorted((attrs["a"], attrs["b"]))
            key = (a, b, kind)
            label = rel_type
        else:
            continue
        if key[0] == key[1]:
            continue  # self-loops never become edges
        entry = edges.setdefault(key, {"weight": 0, "labels": []})
        entry["weight"] += 1
        if label is not None:
            entry["labels"].append(label)
    for entry in edges.values():
        entry["labels"].sort()
    return edges


def brute_ego(edge_pairs: list[tuple[str, str]], center: str, depth: int) -> set[str]:
    """Nodes within ``depth`` hops of center, by repeated frontier expansion
    over an undirected pair list."""
    visited = {center}
    frontier = {center}
    for _ in range(depth):
        nxt = set()
        for a, b in edge_pairs:
            if a in frontier and b not in visited:
                nxt.add(b)
            if b in frontier and a not in visited:
                nxt.add(a)
        visited |= nxt
        frontier = nxt
    return visited


def brute_paths(
    edges: list[tuple[str, str, object]], source: str, target: str, max_hops: int
) -> list[tuple[tuple[str, ...], tuple[object, ...]]]:
    """All simple paths up to max_hops, as (node sequence, edge key sequence).
    ``edges`` are (a, b, key) triples traversable in both directions; parallel
    keys yield distinct paths."""
    results: list[tuple[tuple[str, ...], tuple[object, ...]]] = []
    if source == target:
        return results

    def rec(node: str, nodes: tuple[str, ...], keys: tuple[object, ...]) -> None:
        if len(keys) >= max_hops:
            return
        for a, b, key in edges:
            if node == a:
                nxt = b
            elif node == b:
                nxt = a
            else:
                continue
            if nxt in nodes:
                continue
            if nxt == target:
                results.append((nodes + (nxt,), keys + (key,)))
            else:
                rec(nxt, nodes + (nxt,), keys + (key,))

    rec(source, (source,), ())
    return results


def record_counts(fragments: list[dict], concept: str) -> Counter:
    """Entries per record category for one concept, by brute-force filter."""
    category = {
        "identity": "definitions",
        "norm": "definitions",
        "stakes": "stakes",
        "position": "positions",
        "relations": "relations",
        "time": "contexts",
        "spatial": "contexts",
        "quote": "citations",
    }
    counts: Counter = Counter()
    for fragment in fragments:
        if concept in mentions(fragment):
            counts[category[fragment["kind"]]] += 1
    return counts
