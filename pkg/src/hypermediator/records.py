"""Concept records: per-concept recomposed documents with full provenance.

A record gathers every fragment that mentions a concept in any attribute
role, groups them into display categories, and keeps each one traceable to
its source article. Fragment text is transcluded verbatim, never rewritten;
captions are generated from tag attributes through configurable templates.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, fields
from enum import Enum
from typing import Optional

from .graph import ConceptGraph, EdgeKind, UnknownConcept
from .model import (
    ArticleMeta,
    ConceptTag,
    Corpus,
    Fragment,
    PartWholeTag,
    QuoteTag,
    RelationTag,
    SpatialTag,
    SpecificationTag,
    TagKind,
    TimeTag,
    normalize_concept_id,
    parse_fragment_key,
)


class StaleEntry(Exception):
    """Raised when a record entry no longer resolves against the corpus."""


class RecordCategory(str, Enum):
    """Display categories of a concept record, in fixed menu order."""

    DEFINITIONS = "definitions"
    STAKES = "stakes"
    POSITIONS = "positions"
    RELATIONS = "relations"
    CONTEXTS = "contexts"
    CITATIONS = "citations"


CATEGORY_ORDER = tuple(RecordCategory)

# Identity fragments have no dedicated category; they read as definitions-like
# "identified mention" entries.
_KIND_TO_CATEGORY = {
    TagKind.IDENTITY: RecordCategory.DEFINITIONS,
    TagKind.NORM: RecordCategory.DEFINITIONS,
    TagKind.STAKES: RecordCategory.STAKES,
    TagKind.POSITION: RecordCategory.POSITIONS,
    TagKind.RELATIONS: RecordCategory.RELATIONS,
    TagKind.TIME: RecordCategory.CONTEXTS,
    TagKind.SPATIAL: RecordCategory.CONTEXTS,
    TagKind.QUOTE: RecordCategory.CITATIONS,
}


def category_for(kind: TagKind) -> RecordCategory:
    return _KIND_TO_CATEGORY[kind]


@dataclass(frozen=True)
class CaptionTemplates:
    """Format strings for generated entry captions.

    Available placeholders: ``{concept}`` (the record's concept), ``{partner}``
    (the other concept, where one exists), ``{rel_type}``, ``{date}``,
    ``{place}``, ``{author}``, ``{reference}``.
    """

    identity: str = 'identified mention of "{concept}"'
    norm: str = 'fragment defining "{concept}"'
    stakes: str = 'fragment stating the stakes of "{concept}"'
    whole: str = 'fragment in which "{concept}" is the whole containing "{partner}"'
    part: str = 'fragment in which "{concept}" is part of "{partner}"'
    general: str = 'fragment in which "{concept}" is specified into "{partner}"'
    specific: str = 'fragment in which "{concept}" is a kind of "{partner}"'
    relation: str = 'fragment in which "{concept}" relates to "{partner}" ({rel_type})'
    relation_untyped: str = 'fragment in which "{concept}" relates to "{partner}"'
    time: str = 'fragment dating "{concept}" ({date})'
    spatial: str = 'fragment locating "{concept}" ({place})'
    quote: str = 'quotation about "{concept}" by {author} ({reference})'

    def with_overrides(self, overrides: dict[str, str]) -> "CaptionTemplates":
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ValueError(f"unknown caption template(s): {sorted(unknown)}")
        merged = {f.name: getattr(self, f.name) for f in fields(self)}
        merged.update(overrides)
        return CaptionTemplates(**merged)


DEFAULT_TEMPLATES = CaptionTemplates()


def _caption(fragment: Fragment, concept: str, templates: CaptionTemplates) -> tuple[str, Optional[str]]:
    """Caption text and the related concept (None for single-concept kinds)."""
    attrs = fragment.attrs
    values = {"concept": concept}
    if isinstance(attrs, ConceptTag):
        name = "identity" if fragment.kind is TagKind.IDENTITY else fragment.kind.value
        return getattr(templates, name).format(**values), None
    if isinstance(attrs, PartWholeTag):
        if concept == attrs.holonym:
            return templates.whole.format(partner=attrs.meronym, **values), attrs.meronym
        return templates.part.format(partner=attrs.holonym, **values), attrs.holonym
    if isinstance(attrs, SpecificationTag):
        if concept == attrs.hypernym:
            return templates.general.format(partner=attrs.hyponym, **values), attrs.hyponym
        return templates.specific.format(partner=attrs.hypernym, **values), attrs.hypernym
    if isinstance(attrs, RelationTag):
        partner = attrs.b if concept == attrs.a else attrs.a
        template = templates.relation if attrs.rel_type.strip() else templates.relation_untyped
        return template.format(partner=partner, rel_type=attrs.rel_type, **values), partner
    if isinstance(attrs, TimeTag):
        return templates.time.format(date=attrs.date, **values), None
    if isinstance(attrs, SpatialTag):
        return templates.spatial.format(place=attrs.place, **values), None
    assert isinstance(attrs, QuoteTag)
    return templates.quote.format(author=attrs.author, reference=attrs.reference, **values), None


@dataclass(frozen=True)
class RecordEntry:
    fragment_key: str
    kind: TagKind
    category: RecordCategory
    text: str                 # byte-identical to the source fragment text
    caption: str
    source: ArticleMeta
    span: tuple[int, int]
    related_concept: Optional[str] = None


@dataclass(frozen=True)
class ConceptRecord:
    concept: str
    entries: tuple[RecordEntry, ...]                    # category order, then source order
    neighbors: tuple[tuple[str, EdgeKind, int], ...]    # (concept, kind, weight)

    def by_category(self) -> dict[RecordCategory, list[RecordEntry]]:
        grouped: dict[RecordCategory, list[RecordEntry]] = {c: [] for c in CATEGORY_ORDER}
        for entry in self.entries:
            grouped[entry.category].append(entry)
        return grouped


def compose_record(
    corpus: Corpus,
    graph: ConceptGraph,
    concept: str,
    templates: CaptionTemplates = DEFAULT_TEMPLATES,
) -> ConceptRecord:
    """Recompose every fragment mentioning ``concept`` into one record.

    Each mentioning fragment appears in exactly one entry; entries are grouped
    by category in fixed order and, within a category, ordered by source
    (article_id, then span). Neighbors come from the graph's incident edges,
    heaviest first.
    """
    concept = normalize_concept_id(concept)
    entries: list[RecordEntry] = []
    for article in corpus.articles:
        for fragment in article.fragments:
            if concept not in fragment.concepts():
                continue
            caption, related = _caption(fragment, concept, templates)
            entries.append(
                RecordEntry(
                    fragment_key=fragment.fragment_id,
                    kind=fragment.kind,
                    category=category_for(fragment.kind),
                    text=fragment.text,
                    caption=caption,
                    source=article.meta,
                    span=fragment.span,
                    related_concept=related,
                )
            )
    if not entries:
        raise UnknownConcept(concept)

    order = {category: index for index, category in enumerate(CATEGORY_ORDER)}
    entries.sort(
        key=lambda e: (order[e.category], e.source.article_id, e.span[0], e.span[1], e.kind.value)
    )

    neighbors = []
    if graph.has_node(concept):
        for edge in graph.incident(concept):
            neighbors.append((edge.other(concept), edge.kind, edge.weight))
    neighbors.sort(key=lambda n: (-n[2], n[0], n[1].value))

    return ConceptRecord(concept=concept, entries=tuple(entries), neighbors=tuple(neighbors))


@dataclass(frozen=True)
class TraceResult:
    meta: ArticleMeta
    span: tuple[int, int]
    context: str              # fragment text plus up to N chars each side
    offset_in_context: int    # character offset of the fragment inside context


def trace(entry: RecordEntry, corpus: Corpus, context_chars: int = 200) -> TraceResult:
    """Resolve an entry back to its source: article metadata, exact span, and
    a surrounding text window of up to ``context_chars`` characters per side,
    clamped to the body bounds.

    Raises :class:`StaleEntry` when the corpus no longer matches the record
    (article gone, span out of bounds, or text changed).
    """
    article_id, _, span = parse_fragment_key(entry.fragment_key)
    try:
        article = corpus.article(article_id)
    except KeyError:
        raise StaleEntry(f"article {article_id!r} not in corpus") from None

    body_bytes = article.body.encode("utf-8")
    if not (0 <= span[0] < span[1] <= len(body_bytes)):
        raise StaleEntry(f"span {span} out of bounds for article {article_id!r}")
    sliced = body_bytes[span[0]:span[1]]
    if sliced != entry.text.encode("utf-8"):
        raise StaleEntry(f"text at {entry.fragment_key} changed since composition")

    prefix = body_bytes[: span[0]].decode("utf-8")
    fragment_text = sliced.decode("utf-8")
    suffix = body_bytes[span[1]:].decode("utf-8")
    before = prefix[max(0, len(prefix) - context_chars):]
    after = suffix[:context_chars]
    return TraceResult(
        meta=article.meta,
        span=span,
        context=before + fragment_text + after,
        offset_in_context=len(before),
    )


def list_concepts(corpus: Corpus) -> list[tuple[str, dict[TagKind, int]]]:
    """Every concept mentioned anywhere, with per-kind mention counts,
    ordered lexicographically."""
    counts: dict[str, Counter] = {}
    for fragment in corpus.all_fragments():
        for concept in fragment.concepts():
            counts.setdefault(concept, Counter())[fragment.kind] += 1
    return [(concept, dict(counts[concept])) for concept in sorted(counts)]
