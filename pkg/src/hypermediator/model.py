"""Core domain types for SCAC-tagged corpora.

A corpus is a set of articles; each article carries metadata, a canonical
body text (prose with all markup removed), and the fragments extracted from
its SCAC elements. Everything here is immutable after construction and safe
to share across threads.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union


class InvalidConceptId(ValueError):
    """Raised when a concept identifier normalizes to the empty string."""


def normalize_concept_id(raw: str) -> str:
    """Normalize a raw concept identifier to its canonical form.

    Canonical form: Unicode NFC, case-folded, stripped, with internal
    whitespace runs collapsed to a single space. Normalization is idempotent
    and case-insensitive (``normalize(s) == normalize(s.upper())``), which is
    what lets occurrences like ``Cadrage`` and ``cadrage`` aggregate into one
    graph node.
    """
    s = unicodedata.normalize("NFC", raw)
    # Case folding (not plain lower()) keeps the case-insensitivity property
    # for characters like U+00DF whose uppercase round-trip changes length.
    s = unicodedata.normalize("NFC", s.casefold())
    s = " ".join(s.split())
    if not s:
        raise InvalidConceptId(f"concept id is empty after normalization: {raw!r}")
    return s


class TagKind(str, Enum):
    """The eight SCAC tag kinds. Values double as the XML element names."""

    IDENTITY = "identity"
    NORM = "norm"
    STAKES = "stakes"
    POSITION = "position"
    RELATIONS = "relations"
    TIME = "time"
    SPATIAL = "spatial"
    QUOTE = "quote"


@dataclass(frozen=True)
class ConceptTag:
    """Attributes of identity / norm / stakes elements: a single concept."""

    concept: str


@dataclass(frozen=True)
class PartWholeTag:
    """Position element in its holonym/meronym form (whole contains part)."""

    holonym: str
    meronym: str


@dataclass(frozen=True)
class SpecificationTag:
    """Position element in its hypernym/hyponym form (general to specific)."""

    hypernym: str
    hyponym: str


@dataclass(frozen=True)
class RelationTag:
    """Relations element: two concepts plus the verbatim ``type`` label."""

    a: str
    b: str
    rel_type: str


@dataclass(frozen=True)
class TimeTag:
    concept: str
    date: str  # verbatim, no calendar parsing


@dataclass(frozen=True)
class SpatialTag:
    concept: str
    place: str  # verbatim, source attribute "lieu"


@dataclass(frozen=True)
class QuoteTag:
    concept: str
    author: str  # source attribute "auteur"
    reference: str


TagAttributes = Union[
    ConceptTag, PartWholeTag, SpecificationTag, RelationTag, TimeTag, SpatialTag, QuoteTag
]


@dataclass(frozen=True)
class Fragment:
    """One tagged text span from one article.

    ``text`` is the element's inner text with nested SCAC markup stripped;
    ``span`` is the (byte_start, byte_end) of that text inside the article's
    canonical body, encoded as UTF-8. The invariant
    ``body_bytes[byte_start:byte_end] == text_bytes`` holds for every
    fragment a parser accepts.
    """

    fragment_id: str
    article_id: str
    kind: TagKind
    attrs: TagAttributes
    text: str
    span: tuple[int, int]

    def concepts(self) -> tuple[str, ...]:
        """Concepts this fragment mentions, in attribute order, deduplicated."""
        return mentioned_concepts(self.attrs)


def mentioned_concepts(attrs: TagAttributes) -> tuple[str, ...]:
    if isinstance(attrs, ConceptTag):
        return (attrs.concept,)
    if isinstance(attrs, PartWholeTag):
        raw = (attrs.holonym, attrs.meronym)
    elif isinstance(attrs, SpecificationTag):
        raw = (attrs.hypernym, attrs.hyponym)
    elif isinstance(attrs, RelationTag):
        raw = (attrs.a, attrs.b)
    else:  # Time / Spatial / Quote
        return (attrs.concept,)
    return raw if raw[0] != raw[1] else (raw[0],)


def fragment_key(article_id: str, kind: TagKind, span: tuple[int, int]) -> str:
    """Deterministic fragment identifier: ``article:kind:start-end``.

    Injective over distinct (article, span, kind) because well-formed XML
    cannot produce two same-kind elements with identical spans in one article.
    """
    return f"{article_id}:{kind.value}:{span[0]}-{span[1]}"


_KEY_RE = re.compile(r"^(?P<article>.+):(?P<kind>[a-z]+):(?P<start>\d+)-(?P<end>\d+)$")


def parse_fragment_key(key: str) -> tuple[str, TagKind, tuple[int, int]]:
    """Inverse of :func:`fragment_key`; raises ValueError on malformed keys."""
    m = _KEY_RE.match(key)
    if m is None:
        raise ValueError(f"malformed fragment key: {key!r}")
    return m["article"], TagKind(m["kind"]), (int(m["start"]), int(m["end"]))


@dataclass(frozen=True)
class ArticleMeta:
    """Source document metadata, as shown on record headers."""

    article_id: str
    title: str
    authors: tuple[str, ...] = ()
    year: Optional[int] = None
    theme: Optional[str] = None


@dataclass(frozen=True)
class Article:
    meta: ArticleMeta
    body: str  # canonical body text: markup removed, inner text retained
    fragments: tuple[Fragment, ...] = ()


@dataclass(frozen=True)
class Corpus:
    articles: tuple[Article, ...] = ()

    def __post_init__(self) -> None:
        ids = [a.meta.article_id for a in self.articles]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate article_id in corpus")
        for article in self.articles:
            for frag in article.fragments:
                if frag.article_id != article.meta.article_id:
                    raise ValueError(
                        f"fragment {frag.fragment_id} does not belong to "
                        f"article {article.meta.article_id}"
                    )

    def article(self, article_id: str) -> Article:
        for a in self.articles:
            if a.meta.article_id == article_id:
                return a
        raise KeyError(article_id)

    def all_fragments(self) -> tuple[Fragment, ...]:
        return tuple(f for a in self.articles for f in a.fragments)
