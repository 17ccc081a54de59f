"""Parser and validator for SCAC-tagged article files.

File format, one XML file per article:

    <article id="optional-stable-id">
      <meta>
        <title>...</title>
        <author>...</author>          <!-- one or more -->
        <year>2008</year>             <!-- optional -->
        <theme>...</theme>            <!-- optional -->
      </meta>
      <body>
        prose ... <norm id="concept">definition prose</norm> ...
      </body>
    </article>

Recognized body elements (the SCAC grid, element names bit-exact):
``identity``, ``norm``, ``stakes``, ``position``, ``relations``, ``time``,
``spatial``, ``quote``. Attribute names are the French forms ``id``,
``holonym``, ``meronym``, ``hypernym``, ``hyponym``, ``a``, ``b``, ``type``,
``date``, ``lieu``, ``auteur``, ``reference``; the English aliases ``place``
and ``author`` are accepted on input and normalized.

The canonical body text is the body's character data in document order with
every element tag removed. Fragment spans are byte offsets into the UTF-8
encoding of that canonical text, so ``body_bytes[start:end]`` reproduces the
fragment text exactly. Nested SCAC elements each yield their own fragment;
unknown elements are flattened to text with a warning and their SCAC
descendants are still extracted.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Optional, Sequence, Union
from xml.parsers import expat

from .model import (
    Article,
    ArticleMeta,
    ConceptTag,
    Corpus,
    Fragment,
    InvalidConceptId,
    PartWholeTag,
    QuoteTag,
    RelationTag,
    SpatialTag,
    SpecificationTag,
    TagAttributes,
    TagKind,
    TimeTag,
    fragment_key,
    normalize_concept_id,
)

SCAC_ELEMENTS = frozenset(kind.value for kind in TagKind)

# Allowed attributes per element, after alias normalization.
_ELEMENT_ATTRS = {
    TagKind.IDENTITY: frozenset({"id"}),
    TagKind.NORM: frozenset({"id"}),
    TagKind.STAKES: frozenset({"id"}),
    TagKind.POSITION: frozenset({"holonym", "meronym", "hypernym", "hyponym"}),
    TagKind.RELATIONS: frozenset({"a", "b", "type"}),
    TagKind.TIME: frozenset({"id", "date"}),
    TagKind.SPATIAL: frozenset({"id", "lieu"}),
    TagKind.QUOTE: frozenset({"id", "auteur", "reference"}),
}

# English input aliases, normalized to the French attribute names.
_ATTR_ALIASES = {
    TagKind.SPATIAL: {"place": "lieu"},
    TagKind.QUOTE: {"author": "auteur"},
}


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


class IssueCode(str, Enum):
    UNKNOWN_TAG = "UnknownTag"
    MISSING_ATTRIBUTE = "MissingAttribute"
    CONFLICTING_POSITION_ATTRIBUTES = "ConflictingPositionAttributes"
    EMPTY_FRAGMENT_TEXT = "EmptyFragmentText"
    MALFORMED_DOCUMENT = "MalformedDocument"
    DUPLICATE_ARTICLE_ID = "DuplicateArticleId"
    UNKNOWN_ATTRIBUTE = "UnknownAttribute"


@dataclass(frozen=True)
class ParseIssue:
    severity: Severity
    article_id: str
    code: IssueCode
    message: str
    line: Optional[int] = None
    column: Optional[int] = None

    def render(self) -> str:
        loc = f":{self.line}:{self.column}" if self.line is not None else ""
        return f"{self.severity.value}: {self.article_id}{loc}: {self.code.value}: {self.message}"


@dataclass
class ValidationReport:
    issues: list[ParseIssue] = field(default_factory=list)
    counts: dict[TagKind, int] = field(default_factory=dict)
    articles_parsed: int = 0

    @property
    def errors(self) -> list[ParseIssue]:
        return [i for i in self.issues if i.severity is Severity.ERROR]

    @property
    def warnings(self) -> list[ParseIssue]:
        return [i for i in self.issues if i.severity is Severity.WARNING]

    def total_fragments(self) -> int:
        return sum(self.counts.values())


class EmptyCorpus(Exception):
    """Raised when a corpus directory contains no article files."""


# --- XML tree with source positions -----------------------------------------


@dataclass
class _Node:
    tag: str
    attrs: dict[str, str]
    line: int
    column: int
    children: list[Union["_Node", str]] = field(default_factory=list)

    def inner_text(self) -> str:
        parts: list[str] = []
        for child in self.children:
            parts.append(child if isinstance(child, str) else child.inner_text())
        return "".join(parts)

    def elements(self) -> list["_Node"]:
        return [c for c in self.children if isinstance(c, _Node)]


class _NonUtf8Declaration(Exception):
    def __init__(self, encoding: str) -> None:
        self.encoding = encoding


def _build_tree(text: str) -> _Node:
    """Parse an XML string into a positioned node tree (expat-backed)."""
    parser = expat.ParserCreate()
    parser.buffer_text = True
    root: list[_Node] = []
    stack: list[_Node] = []

    def xml_decl(version: str, encoding: Optional[str], standalone: int) -> None:
        if encoding is not None and encoding.lower() not in ("utf-8", "utf8"):
            raise _NonUtf8Declaration(encoding)

    def start(name: str, attrs: dict[str, str]) -> None:
        node = _Node(name, attrs, parser.CurrentLineNumber, parser.CurrentColumnNumber + 1)
        if stack:
            stack[-1].children.append(node)
        else:
            root.append(node)
        stack.append(node)

    def end(name: str) -> None:
        stack.pop()

    def chars(data: str) -> None:
        if stack:
            stack[-1].children.append(data)

    parser.XmlDeclHandler = xml_decl
    parser.StartElementHandler = start
    parser.EndElementHandler = end
    parser.CharacterDataHandler = chars
    parser.Parse(text, True)
    return root[0]


# --- Article parsing ---------------------------------------------------------


@dataclass
class ParsedArticle:
    """Result of parsing one article file. ``meta`` is None when the document
    was rejected outright (malformed XML, bad container structure)."""

    meta: Optional[ArticleMeta]
    body: str
    fragments: tuple[Fragment, ...]
    issues: list[ParseIssue]
    root_line: int = 1
    root_column: int = 1

    @property
    def ok(self) -> bool:
        return self.meta is not None


def parse_article(source: bytes, default_article_id: str = "article") -> ParsedArticle:
    """Parse one article file into metadata, canonical body and fragments.

    ``default_article_id`` (normally the source filename stem) is used when
    the root element carries no ``id`` attribute, and for reporting issues in
    documents too broken to yield an id of their own.
    """
    issues: list[ParseIssue] = []

    def reject(message: str, line: Optional[int] = None, column: Optional[int] = None) -> ParsedArticle:
        issues.append(
            ParseIssue(
                Severity.ERROR, default_article_id, IssueCode.MALFORMED_DOCUMENT,
                message, line, column,
            )
        )
        return ParsedArticle(None, "", (), issues)

    try:
        text = source.decode("utf-8")
    except UnicodeDecodeError as exc:
        return reject(f"not valid UTF-8: {exc}")
    try:
        root = _build_tree(text)
    except _NonUtf8Declaration as exc:
        return reject(f"declared encoding {exc.encoding!r} is not UTF-8 (UTF-8 only)")
    except expat.ExpatError as exc:
        return reject(
            f"not well-formed XML: {expat.errors.messages[exc.code]}",
            exc.lineno, exc.offset + 1,
        )

    if root.tag != "article":
        return reject(f"root element must be <article>, found <{root.tag}>", root.line, root.column)

    article_id = default_article_id
    for name, value in root.attrs.items():
        if name == "id":
            if value.strip():
                article_id = value.strip()
            else:
                issues.append(
                    ParseIssue(
                        Severity.WARNING, default_article_id, IssueCode.MISSING_ATTRIBUTE,
                        "empty id attribute ignored; using filename-derived id",
                        root.line, root.column,
                    )
                )
        else:
            issues.append(
                ParseIssue(
                    Severity.WARNING, default_article_id, IssueCode.UNKNOWN_ATTRIBUTE,
                    f"unknown attribute {name!r} on <article>", root.line, root.column,
                )
            )

    meta_nodes = [n for n in root.elements() if n.tag == "meta"]
    body_nodes = [n for n in root.elements() if n.tag == "body"]
    for node in root.elements():
        if node.tag not in ("meta", "body"):
            issues.append(
                ParseIssue(
                    Severity.WARNING, article_id, IssueCode.UNKNOWN_TAG,
                    f"unexpected element <{node.tag}> under <article>", node.line, node.column,
                )
            )
    if len(meta_nodes) != 1:
        return reject(f"expected exactly one <meta>, found {len(meta_nodes)}", root.line, root.column)
    if len(body_nodes) != 1:
        return reject(f"expected exactly one <body>, found {len(body_nodes)}", root.line, root.column)

    meta = _parse_meta(meta_nodes[0], article_id, issues)
    if meta is None:
        return ParsedArticle(None, "", (), issues, root.line, root.column)

    body, fragments = _parse_body(body_nodes[0], article_id, issues)
    return ParsedArticle(meta, body, fragments, issues, root.line, root.column)


def _parse_meta(node: _Node, article_id: str, issues: list[ParseIssue]) -> Optional[ArticleMeta]:
    title: Optional[str] = None
    authors: list[str] = []
    year: Optional[int] = None
    theme: Optional[str] = None

    for child in node.elements():
        text = child.inner_text().strip()
        if child.tag == "title":
            if title is None:
                title = text
            else:
                issues.append(
                    ParseIssue(
                        Severity.WARNING, article_id, IssueCode.MALFORMED_DOCUMENT,
                        "multiple <title> elements; first one used", child.line, child.column,
                    )
                )
        elif child.tag == "author":
            if text:
                authors.append(text)
        elif child.tag == "year":
            if year is not None:
                continue
            try:
                year = int(text)
            except ValueError:
                issues.append(
                    ParseIssue(
                        Severity.WARNING, article_id, IssueCode.MALFORMED_DOCUMENT,
                        f"year {text!r} is not an integer; ignored", child.line, child.column,
                    )
                )
        elif child.tag == "theme":
            if theme is None:
                theme = text or None
        else:
            issues.append(
                ParseIssue(
                    Severity.WARNING, article_id, IssueCode.UNKNOWN_TAG,
                    f"unexpected element <{child.tag}> under <meta>", child.line, child.column,
                )
            )

    if not title:
        issues.append(
            ParseIssue(
                Severity.ERROR, article_id, IssueCode.MALFORMED_DOCUMENT,
                "<meta> must contain a non-empty <title>", node.line, node.column,
            )
        )
        return None
    if not authors:
        issues.append(
            ParseIssue(
                Severity.WARNING, article_id, IssueCode.MISSING_ATTRIBUTE,
                "<meta> has no <author>", node.line, node.column,
            )
        )
    return ArticleMeta(article_id, title, tuple(authors), year, theme)


@dataclass
class _Candidate:
    kind: TagKind
    attrs: dict[str, str]
    line: int
    column: int
    start: int  # byte offset into canonical body
    end: int = -1


def _parse_body(node: _Node, article_id: str, issues: list[ParseIssue]) -> tuple[str, tuple[Fragment, ...]]:
    pieces: list[str] = []
    byte_pos = 0
    candidates: list[_Candidate] = []

    def walk(elem: _Node) -> None:
        nonlocal byte_pos
        for child in elem.children:
            if isinstance(child, str):
                pieces.append(child)
                byte_pos += len(child.encode("utf-8"))
                continue
            if child.tag in SCAC_ELEMENTS:
                cand = _Candidate(
                    TagKind(child.tag), dict(child.attrs), child.line, child.column, byte_pos
                )
                walk(child)
                cand.end = byte_pos
                candidates.append(cand)
            else:
                issues.append(
                    ParseIssue(
                        Severity.WARNING, article_id, IssueCode.UNKNOWN_TAG,
                        f"unknown element <{child.tag}> in <body>; treated as plain text",
                        child.line, child.column,
                    )
                )
                walk(child)

    walk(node)
    body = "".join(pieces)
    body_bytes = body.encode("utf-8")

    fragments = []
    for cand in candidates:
        fragment = _accept(cand, article_id, body_bytes, issues)
        if fragment is not None:
            fragments.append(fragment)
    # Document order: candidates close in end-tag order, so re-sort by span.
    fragments.sort(key=lambda f: (f.span[0], -f.span[1]))
    return body, tuple(fragments)


def _accept(
    cand: _Candidate, article_id: str, body_bytes: bytes, issues: list[ParseIssue]
) -> Optional[Fragment]:
    def issue(severity: Severity, code: IssueCode, message: str) -> None:
        issues.append(ParseIssue(severity, article_id, code, message, cand.line, cand.column))

    attrs = dict(cand.attrs)
    for alias, canonical in _ATTR_ALIASES.get(cand.kind, {}).items():
        if alias in attrs:
            if canonical in attrs:
                issue(
                    Severity.WARNING, IssueCode.UNKNOWN_ATTRIBUTE,
                    f"alias attribute {alias!r} ignored ({canonical!r} also present)",
                )
                attrs.pop(alias)
            else:
                attrs[canonical] = attrs.pop(alias)

    allowed = _ELEMENT_ATTRS[cand.kind]
    for name in sorted(set(attrs) - allowed):
        issue(
            Severity.WARNING, IssueCode.UNKNOWN_ATTRIBUTE,
            f"unknown attribute {name!r} on <{cand.kind.value}>",
        )
        attrs.pop(name)

    def concept(name: str) -> str:
        if name not in attrs:
            raise _MissingAttr(name)
        try:
            return normalize_concept_id(attrs[name])
        except InvalidConceptId:
            raise _MissingAttr(name) from None  # empty value counts as absent

    def verbatim(name: str) -> str:
        if name not in attrs:
            raise _MissingAttr(name)
        return attrs[name]

    tag: TagAttributes
    try:
        if cand.kind in (TagKind.IDENTITY, TagKind.NORM, TagKind.STAKES):
            tag = ConceptTag(concept("id"))
        elif cand.kind is TagKind.POSITION:
            part_whole = {"holonym", "meronym"} & set(attrs)
            specification = {"hypernym", "hyponym"} & set(attrs)
            if part_whole and specification:
                issue(
                    Severity.ERROR, IssueCode.CONFLICTING_POSITION_ATTRIBUTES,
                    "<position> carries both holonym/meronym and hypernym/hyponym attributes",
                )
                return None
            if specification:
                tag = SpecificationTag(concept("hypernym"), concept("hyponym"))
            else:
                tag = PartWholeTag(concept("holonym"), concept("meronym"))
        elif cand.kind is TagKind.RELATIONS:
            tag = RelationTag(concept("a"), concept("b"), verbatim("type"))
        elif cand.kind is TagKind.TIME:
            tag = TimeTag(concept("id"), verbatim("date"))
        elif cand.kind is TagKind.SPATIAL:
            tag = SpatialTag(concept("id"), verbatim("lieu"))
        else:
            tag = QuoteTag(concept("id"), verbatim("auteur"), verbatim("reference"))
    except _MissingAttr as exc:
        issue(
            Severity.ERROR, IssueCode.MISSING_ATTRIBUTE,
            f"<{cand.kind.value}> requires attribute {exc.attr!r}",
        )
        return None

    span = (cand.start, cand.end)
    text = body_bytes[span[0]:span[1]].decode("utf-8")
    if not text.strip():
        issue(
            Severity.ERROR, IssueCode.EMPTY_FRAGMENT_TEXT,
            f"<{cand.kind.value}> has empty or whitespace-only text",
        )
        return None

    return Fragment(
        fragment_id=fragment_key(article_id, cand.kind, span),
        article_id=article_id,
        kind=cand.kind,
        attrs=tag,
        text=text,
        span=span,
    )


class _MissingAttr(Exception):
    def __init__(self, attr: str) -> None:
        self.attr = attr


# --- Corpus parsing ----------------------------------------------------------


def parse_files(paths: Sequence[Union[str, Path]]) -> tuple[Corpus, ValidationReport]:
    """Parse a set of article files into a corpus plus validation report.

    Output is independent of the order in which ``paths`` are given: files
    are processed sorted by name, articles are sorted by article_id, and the
    first file (by name) wins when two files claim the same article id.
    """
    report = ValidationReport(counts={kind: 0 for kind in TagKind})
    parsed: list[tuple[Path, ParsedArticle]] = []

    for path in sorted(Path(p) for p in paths):
        try:
            source = path.read_bytes()
        except OSError as exc:
            report.issues.append(
                ParseIssue(
                    Severity.ERROR, path.stem, IssueCode.MALFORMED_DOCUMENT,
                    f"cannot read file: {exc}",
                )
            )
            continue
        result = parse_article(source, default_article_id=path.stem)
        parsed.append((path, result))

    articles: list[Article] = []
    seen: dict[str, Path] = {}
    for path, result in parsed:
        if result.ok:
            assert result.meta is not None
            article_id = result.meta.article_id
            if article_id in seen:
                result.issues.append(
                    ParseIssue(
                        Severity.ERROR, article_id, IssueCode.DUPLICATE_ARTICLE_ID,
                        f"article id {article_id!r} already used by {seen[article_id].name}; "
                        f"{path.name} excluded",
                        result.root_line, result.root_column,
                    )
                )
                report.issues.extend(result.issues)
                continue
            seen[article_id] = path
            articles.append(Article(result.meta, result.body, result.fragments))
            for fragment in result.fragments:
                report.counts[fragment.kind] += 1
        report.issues.extend(result.issues)

    articles.sort(key=lambda a: a.meta.article_id)
    report.articles_parsed = len(articles)
    return Corpus(tuple(articles)), report


def parse_corpus(directory: Union[str, Path]) -> tuple[Corpus, ValidationReport]:
    """Parse every ``*.xml`` file in ``directory`` (non-recursive)."""
    directory = Path(directory)
    paths = sorted(directory.glob("*.xml"))
    if not paths:
        raise EmptyCorpus(f"no .xml article files in {directory}")
    return parse_files(paths)


def validate(directory: Union[str, Path]) -> ValidationReport:
    """Lint mode: identical issues to :func:`parse_corpus`, corpus discarded."""
    _, report = parse_corpus(directory)
    return report


def render_report(report: ValidationReport, stream: Optional[io.TextIOBase] = None) -> str:
    """Human-readable validation report; one line per issue plus a summary."""
    lines = [issue.render() for issue in report.issues]
    counts = ", ".join(f"{kind.value}={report.counts.get(kind, 0)}" for kind in TagKind)
    lines.append(
        f"{report.articles_parsed} article(s) parsed, "
        f"{report.total_fragments()} fragment(s) accepted ({counts}), "
        f"{len(report.errors)} error(s), {len(report.warnings)} warning(s)"
    )
    text = "\n".join(lines)
    if stream is not None:
        stream.write(text + "\n")
    return text


def report_json(report: ValidationReport) -> dict:
    """Machine-readable report: the shape emitted by ``validate --json``."""
    return {
        "issues": [
            {
                "severity": issue.severity.value,
                "article_id": issue.article_id,
                "line": issue.line,
                "column": issue.column,
                "code": issue.code.value,
                "message": issue.message,
            }
            for issue in report.issues
        ],
        "counts": {kind.value: report.counts.get(kind, 0) for kind in TagKind},
        "articles_parsed": report.articles_parsed,
        "errors": len(report.errors),
        "warnings": len(report.warnings),
    }
