import { ApiClient, ApiError } from "./api";
import { ArticleView } from "./articleview";
import { GraphView } from "./graphview";
import { HomeView } from "./homeview";
import { locale } from "./locale";
import { RecordView } from "./recordview";
import { parsePath, viewUrl } from "./router";
import {
  historyLength,
  initialState,
  navigate,
  viewsEqual,
  type Action,
  type View,
  type ViewState,
} from "./state";

/** Application controller: a reducer-driven SPA over the read-only API.
 *
 *  Every transition goes through navigate(); the URL mirrors the current
 *  view so any state is deep-linkable, and the internal stack backs the
 *  "Retour" control so back-navigation restores prior views exactly. */
export class App {
  state: ViewState;
  readonly api: ApiClient;

  private readonly content: HTMLElement;
  private readonly banner: HTMLElement;
  private readonly backButton: HTMLButtonElement;
  private pending: Promise<void> = Promise.resolve();
  private readonly graphView: GraphView;
  private readonly recordView: RecordView;
  private readonly articleView: ArticleView;
  private readonly homeView: HomeView;

  constructor(
    private readonly root: HTMLElement,
    apiBase = "",
    private readonly pushUrl: boolean = true,
  ) {
    this.api = new ApiClient(apiBase);
    this.root.replaceChildren();

    const header = document.createElement("header");
    header.className = "app-header";
    const title = document.createElement("span");
    title.className = "app-title";
    title.textContent = "hypermediator";
    header.appendChild(title);
    header.appendChild(this.navLink(locale.ui.home, "/", { type: "open_home" }));
    header.appendChild(this.navLink(locale.ui.graph, "/graph", { type: "open_graph" }));
    this.backButton = document.createElement("button");
    this.backButton.type = "button";
    this.backButton.className = "back-button";
    this.backButton.textContent = `← ${locale.ui.back}`;
    this.backButton.addEventListener("click", () => void this.dispatch({ type: "back" }));
    header.appendChild(this.backButton);
    this.root.appendChild(header);

    this.banner = document.createElement("div");
    this.banner.className = "error-banner";
    this.banner.hidden = true;
    this.root.appendChild(this.banner);

    this.content = document.createElement("main");
    this.content.className = "app-content";
    this.root.appendChild(this.content);

    this.graphView = new GraphView(this.content, {
      onNodeClick: (slug) => void this.dispatch({ type: "open_concept", slug }),
      onFiltersChange: (filters) => void this.dispatch({ type: "set_filters", filters }),
    });
    this.recordView = new RecordView(this.content, {
      onConcept: (slug) => void this.dispatch({ type: "open_concept", slug }),
      onEgo: (slug) => void this.dispatch({ type: "open_ego", slug }),
      onArticle: (articleId, fragment) =>
        void this.dispatch({ type: "open_article", articleId, fragment }),
    });
    this.articleView = new ArticleView(this.content);
    this.homeView = new HomeView(this.content, {
      onConcept: (slug) => void this.dispatch({ type: "open_concept", slug }),
      onArticle: (articleId) => void this.dispatch({ type: "open_article", articleId }),
    });

    this.state = initialState(parsePath(window.location.pathname, window.location.search));

    window.addEventListener("popstate", () => {
      const view = parsePath(window.location.pathname, window.location.search);
      const top = this.state.past[this.state.past.length - 1];
      if (top && viewsEqual(top, view)) {
        this.state = navigate(this.state, { type: "back" });
      } else {
        this.state = { ...this.state, view };
      }
      this.pending = this.pending.then(() => this.render());
    });
  }

  private navLink(label: string, href: string, action: Action): HTMLAnchorElement {
    const link = document.createElement("a");
    link.href = href;
    link.className = "nav-link";
    link.textContent = label;
    link.addEventListener("click", (event) => {
      event.preventDefault();
      void this.dispatch(action);
    });
    return link;
  }

  /** Render the view encoded in the current URL. */
  start(): Promise<void> {
    this.pending = this.pending.then(() => this.render());
    return this.pending;
  }

  dispatch(action: Action): Promise<void> {
    const before = this.state;
    this.state = navigate(this.state, action);
    this.api.abort(); // cancel requests belonging to the superseded view
    if (this.pushUrl && this.state.view !== before.view) {
      const url = viewUrl(this.state.view);
      if (action.type === "set_filters") {
        window.history.replaceState(null, "", url);
      } else {
        window.history.pushState(null, "", url);
      }
    }
    this.pending = this.pending.then(() => this.render());
    return this.pending;
  }

  /** Settles when every queued render has finished (test convenience). */
  whenIdle(): Promise<void> {
    return this.pending;
  }

  historyDepth(): number {
    return historyLength(this.state);
  }

  private async render(): Promise<void> {
    this.banner.hidden = true;
    this.backButton.disabled = this.state.past.length === 0;
    const view = this.state.view;
    try {
      await this.renderView(view);
    } catch (error) {
      if ((error as DOMException).name === "AbortError") return;
      if (error instanceof ApiError && error.status === 404) {
        this.renderNotFound(viewUrl(view));
        return;
      }
      // API failure: visible banner, previous content stays (no blank screen)
      this.banner.textContent = `${locale.ui.apiError} : ${(error as Error).message}`;
      this.banner.hidden = false;
    }
  }

  private async renderView(view: View): Promise<void> {
    switch (view.mode) {
      case "home": {
        const index = await this.api.index();
        this.homeView.render(index);
        return;
      }
      case "graph": {
        const doc =
          view.ego === null
            ? await this.api.graph()
            : await this.api.ego(view.ego, view.filters.egoDepth, view.filters.minClass);
        this.graphView.render(doc, view.filters, view.ego);
        return;
      }
      case "record": {
        const record = await this.api.record(view.focus);
        this.recordView.render(record);
        return;
      }
      case "article": {
        const article = await this.api.article(view.articleId);
        this.articleView.render(article, view.fragment);
        return;
      }
      case "notfound":
        this.renderNotFound(view.path);
        return;
    }
  }

  private renderNotFound(path: string): void {
    this.content.replaceChildren();
    const page = document.createElement("div");
    page.className = "notfound-page";
    const heading = document.createElement("h1");
    heading.textContent = locale.ui.notFound;
    page.appendChild(heading);
    const detail = document.createElement("p");
    detail.textContent = path;
    page.appendChild(detail);
    const link = document.createElement("a");
    link.href = "/";
    link.className = "back-to-index";
    link.textContent = locale.ui.backToIndex;
    link.addEventListener("click", (event) => {
      event.preventDefault();
      void this.dispatch({ type: "open_home" });
    });
    page.appendChild(link);
    this.content.appendChild(page);
  }
}
