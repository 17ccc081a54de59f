import type { EdgeKind, RecordCategory, WeightClass } from "./types";

// Display labels, French by default (the reference rendering); swap the
// active table to localize.
export interface Locale {
  categories: Record<RecordCategory, string>;
  edgeKinds: Record<EdgeKind, string>;
  weightClasses: Record<WeightClass, string>;
  ui: Record<string, string>;
}

export const FR: Locale = {
  categories: {
    definitions: "Définitions",
    stakes: "Enjeux",
    positions: "Positions",
    relations: "Relations",
    contexts: "Contextes",
    citations: "Citations",
  },
  edgeKinds: {
    part_whole: "partie–tout",
    specification: "spécification",
    analogy: "analogie",
    associative: "association",
  },
  weightClasses: { weak: "faible", moderate: "modéré", strong: "fort" },
  ui: {
    home: "Accueil",
    graph: "Carte des concepts",
    concepts: "Concepts",
    articles: "Articles",
    writtenBy: "Écrit par",
    theme: "Thème",
    article: "Article",
    semanticNetwork: "Réseau sémantique",
    back: "Retour",
    notFound: "Page introuvable",
    backToIndex: "Retour à l'accueil",
    source: "Voir dans l'article source",
    minClass: "Poids minimal",
    egoDepth: "Profondeur",
    apiError: "Erreur de chargement",
    emptyCategory: "Aucun extrait dans cette catégorie.",
    neighbors: "Concepts voisins",
    fragments: "extraits",
  },
};

export const locale: Locale = FR;
