import { locale } from "./locale";
import type { IndexDoc } from "./types";

export interface HomeViewCallbacks {
  onConcept: (slug: string) => void;
  onArticle: (articleId: string) => void;
}

/** Landing page: the concept index (one entry per record) plus the article
 *  list — the records-side door into the corpus. */
export class HomeView {
  constructor(
    private readonly container: HTMLElement,
    private readonly callbacks: HomeViewCallbacks,
  ) {}

  render(doc: IndexDoc): void {
    this.container.replaceChildren();
    const page = document.createElement("div");
    page.className = "home-page";

    const conceptsSection = document.createElement("section");
    const conceptsTitle = document.createElement("h1");
    conceptsTitle.textContent = locale.ui.concepts;
    conceptsSection.appendChild(conceptsTitle);
    const conceptList = document.createElement("ul");
    conceptList.className = "concept-index";
    for (const concept of doc.concepts) {
      const item = document.createElement("li");
      const link = document.createElement("a");
      link.href = `/concepts/${concept.slug}`;
      link.className = "concept-link";
      link.dataset.slug = concept.slug;
      link.textContent = concept.id;
      link.addEventListener("click", (event) => {
        event.preventDefault();
        this.callbacks.onConcept(concept.slug);
      });
      item.appendChild(link);
      const count = document.createElement("span");
      count.className = "concept-count";
      count.textContent = ` (${concept.total} ${locale.ui.fragments})`;
      item.appendChild(count);
      conceptList.appendChild(item);
    }
    conceptsSection.appendChild(conceptList);
    page.appendChild(conceptsSection);

    const articlesSection = document.createElement("section");
    const articlesTitle = document.createElement("h2");
    articlesTitle.textContent = locale.ui.articles;
    articlesSection.appendChild(articlesTitle);
    const articleList = document.createElement("ul");
    articleList.className = "article-index";
    for (const article of doc.articles) {
      const item = document.createElement("li");
      const link = document.createElement("a");
      link.href = `/articles/${encodeURIComponent(article.id)}`;
      link.className = "article-link";
      link.dataset.articleId = article.id;
      link.textContent = article.title;
      link.addEventListener("click", (event) => {
        event.preventDefault();
        this.callbacks.onArticle(article.id);
      });
      item.appendChild(link);
      const detail = document.createElement("span");
      detail.className = "article-detail";
      const year = article.year !== null ? ` – ${article.year}` : "";
      detail.textContent = ` — ${article.authors.join(" et ")}${year}`;
      item.appendChild(detail);
      articleList.appendChild(item);
    }
    articlesSection.appendChild(articleList);
    page.appendChild(articlesSection);

    this.container.appendChild(page);
  }
}
