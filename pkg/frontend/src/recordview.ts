import { locale } from "./locale";
import { CATEGORY_ORDER, type EntryDoc, type RecordDoc } from "./types";

export interface RecordViewCallbacks {
  onConcept: (slug: string) => void;
  onEgo: (slug: string) => void;
  onArticle: (articleId: string, fragmentKey: string) => void;
}

/** Concept record page: category menu on the left, transcluded fragments on
 *  the right, every entry traceable to its source article. */
export class RecordView {
  constructor(
    private readonly container: HTMLElement,
    private readonly callbacks: RecordViewCallbacks,
  ) {}

  render(doc: RecordDoc): void {
    this.container.replaceChildren();
    const page = document.createElement("div");
    page.className = "record-page";

    const grouped = new Map(doc.categories.map((c) => [c.category, c.entries]));

    const menu = document.createElement("nav");
    menu.className = "category-menu";
    for (const category of CATEGORY_ORDER) {
      const count = grouped.get(category)?.length ?? 0;
      const item = document.createElement("a");
      item.className = "category-item";
      item.href = `#cat-${category}`;
      item.dataset.category = category;
      item.textContent = `${locale.categories[category]} (${count})`;
      menu.appendChild(item);
    }
    page.appendChild(menu);

    const main = document.createElement("div");
    main.className = "record-main";

    const header = document.createElement("header");
    header.className = "record-header";
    const title = document.createElement("h1");
    title.className = "concept-title";
    title.textContent = doc.concept;
    header.appendChild(title);

    const egoButton = document.createElement("button");
    egoButton.type = "button";
    egoButton.className = "semantic-network-button";
    egoButton.textContent = `${locale.ui.semanticNetwork} :`;
    egoButton.addEventListener("click", () => this.callbacks.onEgo(doc.slug));
    header.appendChild(egoButton);

    if (doc.neighbors.length > 0) {
      const neighbors = document.createElement("ul");
      neighbors.className = "neighbor-list";
      for (const neighbor of doc.neighbors) {
        const item = document.createElement("li");
        const link = document.createElement("a");
        link.href = `/concepts/${neighbor.slug}`;
        link.className = "neighbor-link";
        link.dataset.slug = neighbor.slug;
        link.textContent = neighbor.concept;
        link.addEventListener("click", (event) => {
          event.preventDefault();
          this.callbacks.onConcept(neighbor.slug);
        });
        item.appendChild(link);
        const detail = document.createElement("span");
        detail.className = "neighbor-detail";
        detail.textContent = ` ${locale.edgeKinds[neighbor.kind]} · ${neighbor.weight}`;
        item.appendChild(detail);
        neighbors.appendChild(item);
      }
      header.appendChild(neighbors);
    }
    main.appendChild(header);

    for (const category of CATEGORY_ORDER) {
      const entries = grouped.get(category) ?? [];
      const section = document.createElement("section");
      section.className = "category-panel";
      section.id = `cat-${category}`;
      const heading = document.createElement("h2");
      heading.textContent = `${locale.categories[category]} (${entries.length})`;
      section.appendChild(heading);
      if (entries.length === 0) {
        const empty = document.createElement("p");
        empty.className = "category-empty";
        empty.textContent = locale.ui.emptyCategory;
        section.appendChild(empty);
      }
      for (const entry of entries) {
        section.appendChild(this.entryElement(entry));
      }
      main.appendChild(section);
    }

    page.appendChild(main);
    this.container.appendChild(page);
  }

  private entryElement(entry: EntryDoc): HTMLElement {
    const wrapper = document.createElement("article");
    wrapper.className = "record-entry";
    wrapper.dataset.fragmentKey = entry.fragment_key;

    const caption = document.createElement("p");
    caption.className = "entry-caption";
    caption.textContent = `${entry.caption} :`;
    if (entry.related_slug && entry.related_concept) {
      const link = document.createElement("a");
      link.href = `/concepts/${entry.related_slug}`;
      link.className = "partner-link";
      link.dataset.slug = entry.related_slug;
      link.textContent = entry.related_concept;
      link.addEventListener("click", (event) => {
        event.preventDefault();
        this.callbacks.onConcept(entry.related_slug!);
      });
      caption.append(" → ", link);
    }
    wrapper.appendChild(caption);

    // verbatim transclusion: textContent only, never rewritten markup
    const text = document.createElement("blockquote");
    text.className = "entry-text";
    text.textContent = entry.text;
    wrapper.appendChild(text);

    const source = document.createElement("p");
    source.className = "entry-source";
    const articleLink = document.createElement("a");
    articleLink.href = `/articles/${encodeURIComponent(entry.article_id)}?fragment=${encodeURIComponent(entry.fragment_key)}`;
    articleLink.className = "source-link";
    articleLink.dataset.articleId = entry.article_id;
    articleLink.dataset.fragmentKey = entry.fragment_key;
    articleLink.textContent = entry.source.title;
    articleLink.addEventListener("click", (event) => {
      event.preventDefault();
      this.callbacks.onArticle(entry.article_id, entry.fragment_key);
    });
    source.append(`${locale.ui.article} : `, articleLink);

    const by = document.createElement("span");
    by.className = "source-authors";
    const year = entry.source.year !== null ? ` – ${entry.source.year}` : "";
    by.textContent = ` — ${locale.ui.writtenBy} : ${entry.source.authors.join(" et ")}${year}`;
    source.appendChild(by);

    if (entry.source.theme) {
      const theme = document.createElement("span");
      theme.className = "source-theme";
      theme.textContent = ` — ${locale.ui.theme} : ${entry.source.theme}`;
      source.appendChild(theme);
    }
    wrapper.appendChild(source);
    return wrapper;
  }
}
