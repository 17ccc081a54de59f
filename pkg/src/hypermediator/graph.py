"""Typed, recurrence-weighted concept graph.

Position and relations fragments aggregate into edges: one edge per distinct
(endpoints, kind, direction), weighted by the number of supporting fragments.
Part-whole and specification edges are directed (whole to part, general to
specific); analogy and associative edges are undirected and store their
endpoints in lexicographic order. Recurrence weights fall into three classes
(strong / moderate / weak) against configurable thresholds, and the graph
answers the two pathing-map queries: ego networks and bounded simple paths.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping, Optional

from .model import (
    Corpus,
    Fragment,
    PartWholeTag,
    RelationTag,
    SpecificationTag,
    TagKind,
    normalize_concept_id,
)

DEFAULT_ANALOGY_LABELS = frozenset({"analogy", "analogie", "analog"})


class UnknownConcept(KeyError):
    """Raised when a queried concept is not a node of the graph."""


class EdgeKind(str, Enum):
    PART_WHOLE = "part_whole"          # from holonym/meronym
    SPECIFICATION = "specification"    # from hypernym/hyponym
    ANALOGY = "analogy"
    ASSOCIATIVE = "associative"

    @property
    def directed(self) -> bool:
        return self in (EdgeKind.PART_WHOLE, EdgeKind.SPECIFICATION)


class WeightClass(Enum):
    WEAK = 1
    MODERATE = 2
    STRONG = 3

    def __ge__(self, other: "WeightClass") -> bool:
        return self.value >= other.value

    def __lt__(self, other: "WeightClass") -> bool:
        return self.value < other.value

    @property
    def label(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class WeightThresholds:
    """Cutoffs for the three recurrence classes.

    weight >= strong_min is strong, moderate_min <= weight < strong_min is
    moderate, anything below is weak. Defaults are the smallest integers that
    keep all three classes non-degenerate.
    """

    strong_min: int = 3
    moderate_min: int = 2

    def __post_init__(self) -> None:
        if self.moderate_min < 2 or self.strong_min < 2:
            raise ValueError("thresholds must be >= 2")
        if self.moderate_min > self.strong_min:
            raise ValueError("moderate_min must be <= strong_min")


def weight_class(weight: int, thresholds: WeightThresholds) -> WeightClass:
    if weight < 1:
        raise ValueError("weight must be >= 1")
    if weight >= thresholds.strong_min:
        return WeightClass.STRONG
    if weight >= thresholds.moderate_min:
        return WeightClass.MODERATE
    return WeightClass.WEAK


def classify_relation(rel_type: str, analogy_labels: Iterable[str] = DEFAULT_ANALOGY_LABELS) -> EdgeKind:
    """Analogy iff the normalized ``type`` label is in the configured set.

    Everything else, including the empty label, is associative; position
    fragments never reach this function (their kind is fixed by attributes).
    """
    if not rel_type.strip():
        return EdgeKind.ASSOCIATIVE
    return (
        EdgeKind.ANALOGY
        if normalize_concept_id(rel_type) in analogy_labels
        else EdgeKind.ASSOCIATIVE
    )


@dataclass(frozen=True)
class Edge:
    """One aggregated interrelation between two distinct concepts.

    For directed kinds ``source``/``target`` carry the semantic order
    (whole→part, general→specific); for undirected kinds they are stored in
    lexicographic order so the key is canonical.
    """

    source: str
    target: str
    kind: EdgeKind
    weight: int
    rel_labels: tuple[str, ...] = ()     # raw type labels, sorted multiset
    fragments: tuple[str, ...] = ()      # supporting fragment keys, sorted

    def __post_init__(self) -> None:
        if self.source == self.target:
            raise ValueError("self-loop edges are not allowed")
        if self.weight < 1:
            raise ValueError("edge weight must be >= 1")

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.source, self.target, self.kind.value)

    def endpoints(self) -> tuple[str, str]:
        return (self.source, self.target)

    def other(self, concept: str) -> str:
        if concept == self.source:
            return self.target
        if concept == self.target:
            return self.source
        raise ValueError(f"{concept!r} is not an endpoint of {self.key}")


@dataclass(frozen=True)
class GraphStats:
    concept_count: int
    edge_count: int
    edges_by_kind: Mapping[str, int]      # EdgeKind.value -> count, all kinds keyed
    fragments_by_kind: Mapping[str, int]  # TagKind.value -> count, all kinds keyed


@dataclass(frozen=True)
class ConceptGraph:
    """Immutable concept graph: nodes with per-kind fragment counts, edges
    keyed by (endpoints, kind, direction), plus the thresholds that built it.

    ``fragments_by_kind`` counts the accepted fragments behind the graph; for
    subgraphs it is the induced restriction (single-concept kinds from node
    counts, position/relations from supporting fragment keys).
    """

    nodes: Mapping[str, Mapping[TagKind, int]]
    edges: tuple[Edge, ...]
    thresholds: WeightThresholds
    fragments_by_kind: Mapping[TagKind, int]

    @cached_property
    def _adjacency(self) -> Mapping[str, tuple[Edge, ...]]:
        adjacency: dict[str, list[Edge]] = {concept: [] for concept in self.nodes}
        for edge in self.edges:
            adjacency[edge.source].append(edge)
            adjacency[edge.target].append(edge)
        return {c: tuple(sorted(e, key=lambda x: x.key)) for c, e in adjacency.items()}

    def incident(self, concept: str) -> tuple[Edge, ...]:
        if concept not in self.nodes:
            raise UnknownConcept(concept)
        return self._adjacency[concept]

    def has_node(self, concept: str) -> bool:
        return concept in self.nodes

    def edge_class(self, edge: Edge) -> WeightClass:
        return weight_class(edge.weight, self.thresholds)

    def stats(self) -> GraphStats:
        by_kind = Counter(edge.kind for edge in self.edges)
        return GraphStats(
            concept_count=len(self.nodes),
            edge_count=len(self.edges),
            edges_by_kind={kind.value: by_kind.get(kind, 0) for kind in EdgeKind},
            fragments_by_kind={kind.value: self.fragments_by_kind.get(kind, 0) for kind in TagKind},
        )


def build_graph(
    corpus: Corpus,
    thresholds: WeightThresholds = WeightThresholds(),
    analogy_labels: Iterable[str] = DEFAULT_ANALOGY_LABELS,
) -> tuple[ConceptGraph, list[str]]:
    """Fold a parsed corpus into its concept graph.

    Nodes are every concept mentioned by any fragment attribute. Fragments
    whose two endpoints normalize to the same concept are dropped from edge
    aggregation with a warning (they still count as node mentions). Repeating
    the same assertion, even within one article, adds 1 to the weight: the
    weighting counts recurrences.
    """
    labels = frozenset(normalize_concept_id(label) for label in analogy_labels)
    warnings: list[str] = []

    nodes: dict[str, Counter] = defaultdict(Counter)
    fragments_by_kind: Counter = Counter()
    grouped: dict[tuple[str, str, str], list[Fragment]] = defaultdict(list)

    for fragment in corpus.all_fragments():
        fragments_by_kind[fragment.kind] += 1
        for concept in fragment.concepts():
            nodes[concept][fragment.kind] += 1

        endpoints = _edge_endpoints(fragment, labels, warnings)
        if endpoints is not None:
            grouped[endpoints].append(fragment)

    edges = []
    for (source, target, kind_value), supporting in sorted(grouped.items()):
        kind = EdgeKind(kind_value)
        rel_labels = tuple(
            sorted(f.attrs.rel_type for f in supporting if isinstance(f.attrs, RelationTag))
        )
        edges.append(
            Edge(
                source=source,
                target=target,
                kind=kind,
                weight=len(supporting),
                rel_labels=rel_labels,
                fragments=tuple(sorted(f.fragment_id for f in supporting)),
            )
        )

    graph = ConceptGraph(
        nodes={concept: dict(counts) for concept, counts in sorted(nodes.items())},
        edges=tuple(edges),
        thresholds=thresholds,
        fragments_by_kind=dict(fragments_by_kind),
    )
    return graph, warnings


def _edge_endpoints(
    fragment: Fragment, analogy_labels: frozenset, warnings: list[str]
) -> Optional[tuple[str, str, str]]:
    attrs = fragment.attrs
    if isinstance(attrs, PartWholeTag):
        pair = (attrs.holonym, attrs.meronym)
        kind = EdgeKind.PART_WHOLE
    elif isinstance(attrs, SpecificationTag):
        pair = (attrs.hypernym, attrs.hyponym)
        kind = EdgeKind.SPECIFICATION
    elif isinstance(attrs, RelationTag):
        if not attrs.rel_type.strip():
            warnings.append(
                f"{fragment.fragment_id}: empty relation type, classified as associative"
            )
        kind = classify_relation(attrs.rel_type, analogy_labels)
        pair = (min(attrs.a, attrs.b), max(attrs.a, attrs.b))
    else:
        return None

    if pair[0] == pair[1]:
        warnings.append(f"{fragment.fragment_id}: self-referential {kind.value} dropped")
        return None
    return (pair[0], pair[1], kind.value)


def stats(graph: ConceptGraph) -> GraphStats:
    return graph.stats()


def _qualifying(graph: ConceptGraph, min_class: WeightClass) -> dict[str, list[Edge]]:
    adjacency: dict[str, list[Edge]] = defaultdict(list)
    for edge in graph.edges:
        if graph.edge_class(edge) >= min_class:
            adjacency[edge.source].append(edge)
            adjacency[edge.target].append(edge)
    return adjacency


def _subgraph(graph: ConceptGraph, kept_nodes: Iterable[str], kept_edges: Iterable[Edge]) -> ConceptGraph:
    node_map = {concept: dict(graph.nodes[concept]) for concept in kept_nodes}
    edges = tuple(sorted(kept_edges, key=lambda e: e.key))

    induced: Counter = Counter()
    single_concept = (
        TagKind.IDENTITY, TagKind.NORM, TagKind.STAKES,
        TagKind.TIME, TagKind.SPATIAL, TagKind.QUOTE,
    )
    for counts in node_map.values():
        for kind in single_concept:
            induced[kind] += counts.get(kind, 0)
    relational = {key for edge in edges for key in edge.fragments}
    for key in relational:
        kind_value = key.rsplit(":", 2)[1]
        induced[TagKind(kind_value)] += 1

    return ConceptGraph(
        nodes=node_map,
        edges=edges,
        thresholds=graph.thresholds,
        fragments_by_kind=dict(induced),
    )


def ego_network(
    graph: ConceptGraph,
    center: str,
    depth: int = 1,
    min_class: WeightClass = WeightClass.WEAK,
) -> ConceptGraph:
    """Breadth-first neighborhood of ``center`` over qualifying edges.

    Expands up to ``depth`` hops across edges whose weight class is at least
    ``min_class`` (direction does not constrain traversal); the result keeps
    exactly the visited nodes and every qualifying edge between them. Node
    iteration order is BFS layer, then lexicographic.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if center not in graph.nodes:
        raise UnknownConcept(center)

    adjacency = _qualifying(graph, min_class)
    visited: dict[str, None] = {center: None}  # dict as ordered set
    frontier = [center]
    for _ in range(depth):
        layer = sorted(
            {
                edge.other(node)
                for node in frontier
                for edge in adjacency.get(node, ())
                if edge.other(node) not in visited
            }
        )
        for concept in layer:
            visited[concept] = None
        frontier = layer
        if not frontier:
            break

    kept = [
        edge
        for edge in graph.edges
        if graph.edge_class(edge) >= min_class
        and edge.source in visited
        and edge.target in visited
    ]
    return _subgraph(graph, visited, kept)


@dataclass(frozen=True)
class Path:
    """A simple path as the sequence of nodes visited and edges taken."""

    nodes: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.edges)


def find_paths(
    graph: ConceptGraph,
    source: str,
    target: str,
    max_hops: int = 3,
    min_class: WeightClass = WeightClass.WEAK,
) -> list[Path]:
    """All simple paths of length <= max_hops over qualifying edges.

    Paths are ordered by (length, node sequence); parallel edges of different
    kinds yield distinct paths. ``source == target`` returns the empty list
    (zero-length paths are excluded).
    """
    if max_hops < 1:
        raise ValueError("max_hops must be >= 1")
    for concept in (source, target):
        if concept not in graph.nodes:
            raise UnknownConcept(concept)
    if source == target:
        return []

    adjacency = _qualifying(graph, min_class)
    results: list[Path] = []

    def extend(node: str, nodes: tuple[str, ...], edges: tuple[Edge, ...]) -> None:
        if len(edges) >= max_hops:
            return
        for edge in sorted(adjacency.get(node, ()), key=lambda e: (e.other(node), e.kind.value)):
            nxt = edge.other(node)
            if nxt in nodes:
                continue
            if nxt == target:
                results.append(Path(nodes + (nxt,), edges + (edge,)))
            else:
                extend(nxt, nodes + (nxt,), edges + (edge,))

    extend(source, (source,), ())
    results.sort(key=lambda p: (len(p.edges), p.nodes))
    return results
