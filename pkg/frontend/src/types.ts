// Wire types mirroring the JSON documents served by the hypermediator API.

export type EdgeKind = "part_whole" | "specification" | "analogy" | "associative";
export type WeightClass = "weak" | "moderate" | "strong";

export const EDGE_KINDS: EdgeKind[] = ["part_whole", "specification", "analogy", "associative"];
export const WEIGHT_CLASSES: WeightClass[] = ["weak", "moderate", "strong"];

export const CLASS_RANK: Record<WeightClass, number> = { weak: 1, moderate: 2, strong: 3 };

export interface GraphNodeDoc {
  id: string;
  slug: string;
  counts: Record<string, number>;
  mentions: number;
}

export interface GraphEdgeDoc {
  source: string;
  target: string;
  source_slug: string;
  target_slug: string;
  kind: EdgeKind;
  directed: boolean;
  weight: number;
  weight_class: WeightClass;
  rel_labels: string[];
  fragments: string[];
}

export interface GraphDoc {
  thresholds: { strong_min: number; moderate_min: number };
  fragments_by_kind: Record<string, number>;
  nodes: GraphNodeDoc[];
  edges: GraphEdgeDoc[];
}

export type RecordCategory =
  | "definitions"
  | "stakes"
  | "positions"
  | "relations"
  | "contexts"
  | "citations";

export const CATEGORY_ORDER: RecordCategory[] = [
  "definitions",
  "stakes",
  "positions",
  "relations",
  "contexts",
  "citations",
];

export interface SourceDoc {
  id: string;
  title: string;
  authors: string[];
  year: number | null;
  theme: string | null;
}

export interface EntryDoc {
  fragment_key: string;
  kind: string;
  category: RecordCategory;
  text: string;
  caption: string;
  span: [number, number];
  related_concept: string | null;
  related_slug: string | null;
  article_id: string;
  source: SourceDoc;
}

export interface NeighborDoc {
  concept: string;
  slug: string;
  kind: EdgeKind;
  weight: number;
  weight_class: WeightClass;
}

export interface RecordDoc {
  concept: string;
  slug: string;
  categories: { category: RecordCategory; entries: EntryDoc[] }[];
  neighbors: NeighborDoc[];
}

export interface IndexConceptDoc {
  id: string;
  slug: string;
  counts: Record<string, number>;
  total: number;
}

export interface IndexArticleDoc extends SourceDoc {
  file: string;
  fragments: number;
}

export interface IndexDoc {
  concepts: IndexConceptDoc[];
  articles: IndexArticleDoc[];
}

export interface ArticleFragmentDoc {
  fragment_key: string;
  kind: string;
  span: [number, number];
  concepts: string[];
}

export interface ArticleDoc extends SourceDoc {
  body: string;
  fragments: ArticleFragmentDoc[];
}

export interface StatsDoc {
  concept_count: number;
  edge_count: number;
  edges_by_kind: Record<string, number>;
  fragments_by_kind: Record<string, number>;
}
