import { locale } from "./locale";
import type { ArticleDoc } from "./types";

/** Article source page with one fragment span highlighted. Spans are byte
 *  offsets into the UTF-8 body, so slicing happens on encoded bytes. */
export class ArticleView {
  constructor(private readonly container: HTMLElement) {}

  render(doc: ArticleDoc, fragmentKey: string | null): void {
    this.container.replaceChildren();
    const page = document.createElement("div");
    page.className = "article-page";

    const header = document.createElement("header");
    const title = document.createElement("h1");
    title.className = "article-title";
    title.textContent = doc.title;
    header.appendChild(title);
    const byline = document.createElement("p");
    byline.className = "article-byline";
    const year = doc.year !== null ? ` – ${doc.year}` : "";
    const theme = doc.theme ? ` — ${locale.ui.theme} : ${doc.theme}` : "";
    byline.textContent = `${locale.ui.writtenBy} : ${doc.authors.join(" et ")}${year}${theme}`;
    header.appendChild(byline);
    page.appendChild(header);

    const body = document.createElement("div");
    body.className = "article-body";

    const fragment = fragmentKey
      ? doc.fragments.find((f) => f.fragment_key === fragmentKey)
      : undefined;

    if (fragment) {
      const bytes = new TextEncoder().encode(doc.body);
      const decoder = new TextDecoder();
      const [start, end] = fragment.span;
      body.append(decoder.decode(bytes.slice(0, start)));
      const mark = document.createElement("mark");
      mark.className = "fragment-highlight";
      mark.dataset.fragmentKey = fragment.fragment_key;
      mark.textContent = decoder.decode(bytes.slice(start, end));
      body.appendChild(mark);
      body.append(decoder.decode(bytes.slice(end)));
    } else {
      body.textContent = doc.body;
    }

    page.appendChild(body);
    this.container.appendChild(page);
    page.querySelector(".fragment-highlight")?.scrollIntoView?.({ block: "center" });
  }
}
