import * as d3 from "d3";

import type { Filters } from "./state";
import { locale } from "./locale";
import {
  CLASS_RANK,
  EDGE_KINDS,
  type EdgeKind,
  type GraphDoc,
  type GraphEdgeDoc,
  type GraphNodeDoc,
  type WeightClass,
} from "./types";

interface LayoutNode extends d3.SimulationNodeDatum {
  doc: GraphNodeDoc;
  radius: number;
}

interface LayoutEdge extends d3.SimulationLinkDatum<LayoutNode> {
  doc: GraphEdgeDoc;
}

export interface GraphViewCallbacks {
  onNodeClick: (slug: string) => void;
  onFiltersChange: (filters: Partial<Filters>) => void;
}

const WIDTH = 960;
const HEIGHT = 640;
const EDGE_WIDTH: Record<WeightClass, number> = { weak: 1.2, moderate: 2.6, strong: 4.2 };
const EDGE_DASH: Record<EdgeKind, string> = {
  part_whole: "",
  specification: "7 4",
  analogy: "2 4",
  associative: "",
};

export function edgeVisible(edge: GraphEdgeDoc, filters: Filters): boolean {
  return (
    filters.kinds[edge.kind] && CLASS_RANK[edge.weight_class] >= CLASS_RANK[filters.minClass]
  );
}

/** Force-directed concept map. Layout is computed client-side (the server
 *  ships no coordinates) and synchronously, so rendering is deterministic. */
export class GraphView {
  private model: { nodes: string[]; edges: GraphEdgeDoc[] } = { nodes: [], edges: [] };

  constructor(
    private readonly container: HTMLElement,
    private readonly callbacks: GraphViewCallbacks,
  ) {}

  /** Test hook: what the view believes it has drawn. */
  renderedModel(): { nodes: string[]; edges: GraphEdgeDoc[] } {
    return this.model;
  }

  render(doc: GraphDoc, filters: Filters, egoSlug: string | null): void {
    this.container.replaceChildren();
    this.container.appendChild(this.toolbar(filters, egoSlug !== null));

    const visibleEdges = doc.edges.filter((edge) => edgeVisible(edge, filters));
    // node size follows total incident weight in the fetched graph, not the
    // filtered one, so toggling filters does not make nodes jump around
    const incident = new Map<string, number>();
    for (const edge of doc.edges) {
      incident.set(edge.source, (incident.get(edge.source) ?? 0) + edge.weight);
      incident.set(edge.target, (incident.get(edge.target) ?? 0) + edge.weight);
    }

    const nodes: LayoutNode[] = doc.nodes.map((node) => ({
      doc: node,
      radius: 6 + 3 * Math.sqrt(incident.get(node.id) ?? 0),
    }));
    const byId = new Map(nodes.map((node) => [node.doc.id, node]));
    const links: LayoutEdge[] = visibleEdges.map((edge) => ({
      doc: edge,
      source: byId.get(edge.source)!,
      target: byId.get(edge.target)!,
    }));

    const simulation = d3
      .forceSimulation(nodes)
      .force("link", d3.forceLink<LayoutNode, LayoutEdge>(links).distance(110).strength(0.4))
      .force("charge", d3.forceManyBody().strength(-260))
      .force("center", d3.forceCenter(WIDTH / 2, HEIGHT / 2))
      .force("collide", d3.forceCollide<LayoutNode>().radius((node) => node.radius + 14))
      .stop();
    simulation.tick(200);

    const svg = d3
      .create("svg")
      .attr("class", "graph-canvas")
      .attr("viewBox", `0 0 ${WIDTH} ${HEIGHT}`)
      .attr("preserveAspectRatio", "xMidYMid meet");

    svg
      .append("defs")
      .append("marker")
      .attr("id", "arrow")
      .attr("viewBox", "0 -5 10 10")
      .attr("refX", 18)
      .attr("markerWidth", 7)
      .attr("markerHeight", 7)
      .attr("orient", "auto")
      .append("path")
      .attr("d", "M0,-5L10,0L0,5")
      .attr("class", "arrow-head");

    svg
      .append("g")
      .attr("class", "edges")
      .selectAll("line")
      .data(links)
      .join("line")
      .attr("class", (link) => `edge edge-${link.doc.kind} edge-${link.doc.weight_class}`)
      .attr("stroke-width", (link) => EDGE_WIDTH[link.doc.weight_class])
      .attr("stroke-dasharray", (link) => EDGE_DASH[link.doc.kind])
      .attr("marker-end", (link) => (link.doc.directed ? "url(#arrow)" : null))
      .attr("x1", (link) => (link.source as LayoutNode).x!)
      .attr("y1", (link) => (link.source as LayoutNode).y!)
      .attr("x2", (link) => (link.target as LayoutNode).x!)
      .attr("y2", (link) => (link.target as LayoutNode).y!)
      .append("title")
      .text(
        (link) =>
          `${link.doc.source} — ${link.doc.target} · ${locale.edgeKinds[link.doc.kind]} · ` +
          `${locale.weightClasses[link.doc.weight_class]} (${link.doc.weight})`,
      );

    const nodeGroups = svg
      .append("g")
      .attr("class", "nodes")
      .selectAll("g")
      .data(nodes)
      .join("g")
      .attr("class", (node) => `node${node.doc.slug === egoSlug ? " node-focus" : ""}`)
      .attr("data-slug", (node) => node.doc.slug)
      .attr("data-concept", (node) => node.doc.id)
      .attr("transform", (node) => `translate(${node.x},${node.y})`);

    nodeGroups
      .append("circle")
      .attr("r", (node) => node.radius)
      .on("click", (_event, node) => this.callbacks.onNodeClick(node.doc.slug));

    nodeGroups
      .append("text")
      .attr("class", "node-label")
      .attr("dy", (node) => -node.radius - 4)
      .text((node) => node.doc.id)
      .on("click", (_event, node) => this.callbacks.onNodeClick(node.doc.slug));

    // hover: concept id plus per-kind fragment counts
    nodeGroups.append("title").text((node) => {
      const counts = Object.entries(node.doc.counts)
        .map(([kind, count]) => `${kind}: ${count}`)
        .join(", ");
      return counts ? `${node.doc.id}\n${counts}` : node.doc.id;
    });

    this.container.appendChild(svg.node()!);
    this.model = { nodes: doc.nodes.map((node) => node.id), edges: visibleEdges };
  }

  private toolbar(filters: Filters, isEgo: boolean): HTMLElement {
    const bar = document.createElement("div");
    bar.className = "graph-toolbar";

    const classLabel = document.createElement("label");
    classLabel.textContent = `${locale.ui.minClass} `;
    const select = document.createElement("select");
    select.className = "min-class-select";
    for (const value of ["weak", "moderate", "strong"] as WeightClass[]) {
      const option = document.createElement("option");
      option.value = value;
      option.textContent = locale.weightClasses[value];
      option.selected = filters.minClass === value;
      select.appendChild(option);
    }
    select.addEventListener("change", () =>
      this.callbacks.onFiltersChange({ minClass: select.value as WeightClass }),
    );
    classLabel.appendChild(select);
    bar.appendChild(classLabel);

    for (const kind of EDGE_KINDS) {
      const label = document.createElement("label");
      label.className = "kind-toggle";
      const box = document.createElement("input");
      box.type = "checkbox";
      box.checked = filters.kinds[kind];
      box.dataset.kind = kind;
      box.addEventListener("change", () =>
        this.callbacks.onFiltersChange({ kinds: { [kind]: box.checked } as never }),
      );
      label.append(box, ` ${locale.edgeKinds[kind]}`);
      bar.appendChild(label);
    }

    if (isEgo) {
      const depthLabel = document.createElement("label");
      depthLabel.textContent = `${locale.ui.egoDepth} `;
      const depth = document.createElement("input");
      depth.type = "number";
      depth.min = "1";
      depth.max = "6";
      depth.value = String(filters.egoDepth);
      depth.className = "ego-depth-input";
      depth.addEventListener("change", () => {
        const value = Number(depth.value);
        if (Number.isInteger(value) && value >= 1) {
          this.callbacks.onFiltersChange({ egoDepth: value });
        }
      });
      depthLabel.appendChild(depth);
      bar.appendChild(depthLabel);
    }
    return bar;
  }
}
