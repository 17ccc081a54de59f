import { defaultFilters, type Filters, type View } from "./state";
import { CLASS_RANK, EDGE_KINDS, type WeightClass } from "./types";

// URL scheme (deep-linkable, reload restores the same view):
//   /                         home (concept index)
//   /graph                    full graph
//   /graph/ego/<slug>         ego network around a concept
//   /concepts/<slug>          concept record
//   /articles/<id>            article source, ?fragment= highlights one span
// Filter params (graph views): min_class, depth, kinds=a,b,c

function parseFilters(params: URLSearchParams): Filters {
  const filters = defaultFilters();
  const minClass = params.get("min_class");
  if (minClass && minClass in CLASS_RANK) filters.minClass = minClass as WeightClass;
  const depth = Number(params.get("depth"));
  if (Number.isInteger(depth) && depth >= 1) filters.egoDepth = depth;
  const kinds = params.get("kinds");
  if (kinds !== null) {
    const enabled = new Set(kinds.split(",").filter(Boolean));
    for (const kind of EDGE_KINDS) filters.kinds[kind] = enabled.has(kind);
  }
  return filters;
}

function filterParams(filters: Filters, withDepth: boolean): URLSearchParams {
  const params = new URLSearchParams();
  if (filters.minClass !== "weak") params.set("min_class", filters.minClass);
  if (withDepth && filters.egoDepth !== 1) params.set("depth", String(filters.egoDepth));
  const enabled = EDGE_KINDS.filter((kind) => filters.kinds[kind]);
  if (enabled.length !== EDGE_KINDS.length) params.set("kinds", enabled.join(","));
  return params;
}

export function parsePath(pathname: string, search: string): View {
  const params = new URLSearchParams(search);
  const filters = parseFilters(params);
  // Slugs are already percent-encoded identifiers: keep path segments raw so
  // a round trip through the URL cannot corrupt them.
  const segments = pathname.split("/").filter(Boolean);

  if (segments.length === 0) return { mode: "home", filters };
  if (segments[0] === "graph") {
    if (segments.length === 1) return { mode: "graph", ego: null, filters };
    if (segments.length === 3 && segments[1] === "ego") {
      return { mode: "graph", ego: segments[2], filters };
    }
  }
  if (segments[0] === "concepts" && segments.length === 2) {
    return { mode: "record", focus: segments[1], filters };
  }
  if (segments[0] === "articles" && segments.length === 2) {
    return {
      mode: "article",
      articleId: decodeURIComponent(segments[1]),
      fragment: params.get("fragment"),
      filters,
    };
  }
  return { mode: "notfound", path: pathname, filters };
}

export function viewUrl(view: View): string {
  switch (view.mode) {
    case "home":
      return "/";
    case "graph": {
      const params = filterParams(view.filters, view.ego !== null);
      const query = params.toString();
      const base = view.ego === null ? "/graph" : `/graph/ego/${view.ego}`;
      return query ? `${base}?${query}` : base;
    }
    case "record":
      return `/concepts/${view.focus}`;
    case "article": {
      const params = new URLSearchParams();
      if (view.fragment) params.set("fragment", view.fragment);
      const query = params.toString();
      return query
        ? `/articles/${encodeURIComponent(view.articleId)}?${query}`
        : `/articles/${encodeURIComponent(view.articleId)}`;
    }
    case "notfound":
      return view.path;
  }
}
