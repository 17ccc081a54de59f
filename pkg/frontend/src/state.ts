import { EDGE_KINDS, type EdgeKind, type WeightClass } from "./types";

export interface Filters {
  minClass: WeightClass;
  kinds: Record<EdgeKind, boolean>;
  egoDepth: number;
}

export function defaultFilters(): Filters {
  const kinds = {} as Record<EdgeKind, boolean>;
  for (const kind of EDGE_KINDS) kinds[kind] = true;
  return { minClass: "weak", kinds, egoDepth: 1 };
}

export type View =
  | { mode: "home"; filters: Filters }
  | { mode: "graph"; ego: string | null; filters: Filters }
  | { mode: "record"; focus: string; filters: Filters }
  | { mode: "article"; articleId: string; fragment: string | null; filters: Filters }
  | { mode: "notfound"; path: string; filters: Filters };

/** Current view plus the navigation stack. `back` restores the previous view
 *  exactly; a record view always carries its focus concept by construction. */
export interface ViewState {
  view: View;
  past: View[];
}

export type Action =
  | { type: "open_home" }
  | { type: "open_graph" }
  | { type: "open_ego"; slug: string }
  | { type: "open_concept"; slug: string }
  | { type: "open_article"; articleId: string; fragment?: string }
  | { type: "open_notfound"; path: string }
  | { type: "back" }
  | { type: "set_filters"; filters: Partial<Filters> };

export function initialState(view?: View): ViewState {
  return { view: view ?? { mode: "home", filters: defaultFilters() }, past: [] };
}

export function historyLength(state: ViewState): number {
  return state.past.length + 1;
}

function push(state: ViewState, view: View): ViewState {
  return { view, past: [...state.past, state.view] };
}

export function navigate(state: ViewState, action: Action): ViewState {
  const filters = state.view.filters;
  switch (action.type) {
    case "open_home":
      return push(state, { mode: "home", filters });
    case "open_graph":
      return push(state, { mode: "graph", ego: null, filters });
    case "open_ego":
      return push(state, { mode: "graph", ego: action.slug, filters });
    case "open_concept":
      return push(state, { mode: "record", focus: action.slug, filters });
    case "open_article":
      return push(state, {
        mode: "article",
        articleId: action.articleId,
        fragment: action.fragment ?? null,
        filters,
      });
    case "open_notfound":
      return push(state, { mode: "notfound", path: action.path, filters });
    case "back": {
      if (state.past.length === 0) return state;
      const past = [...state.past];
      const view = past.pop()!;
      return { view, past };
    }
    case "set_filters": {
      const merged: Filters = {
        ...filters,
        ...action.filters,
        kinds: { ...filters.kinds, ...(action.filters.kinds ?? {}) },
      };
      return { view: { ...state.view, filters: merged }, past: state.past };
    }
  }
}

export function viewsEqual(a: View, b: View): boolean {
  return JSON.stringify(a) === JSON.stringify(b);
}
