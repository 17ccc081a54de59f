"""Compile SCAC-tagged article corpora into a navigable knowledge artifact:
validated fragments, per-concept records with provenance, and a typed
recurrence-weighted concept graph, exported as GEXF and a JSON site bundle
served over HTTP."""

__version__ = "0.1.0"

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
    TagKind,
    TimeTag,
    fragment_key,
    normalize_concept_id,
)
from .parsing import (
    EmptyCorpus,
    IssueCode,
    ParseIssue,
    Severity,
    ValidationReport,
    parse_article,
    parse_corpus,
    parse_files,
    validate,
)
from .graph import (
    ConceptGraph,
    Edge,
    EdgeKind,
    GraphStats,
    UnknownConcept,
    WeightClass,
    WeightThresholds,
    build_graph,
    classify_relation,
    ego_network,
    find_paths,
    stats,
    weight_class,
)
from .records import (
    CaptionTemplates,
    ConceptRecord,
    RecordCategory,
    RecordEntry,
    StaleEntry,
    compose_record,
    list_concepts,
    trace,
)
from .config import BuildConfig, ConfigError, load_config
from .artifact import (
    BuildArtifact,
    LoadedArtifact,
    build_artifact,
    concept_slug,
    load_artifact,
    write_bundle,
)
from .gexf import export_gexf
