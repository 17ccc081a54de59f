"""GEXF 1.2 export of the concept graph, for Gephi interoperability.

One node per concept (label = concept id), one edge per aggregated
interrelation with kind / weight / weight_class / rel_labels carried as edge
attributes. Part-whole and specification edges are written directed, analogy
and associative edges undirected; there is no ``defaultedgetype`` since the
two styles coexist. Output is deterministic: nodes sorted lexicographically,
edges in canonical key order, no timestamps.
"""

from __future__ import annotations

from xml.sax.saxutils import quoteattr

from .graph import ConceptGraph

GEXF_XMLNS = "http://www.gexf.net/1.2draft"

_EDGE_ATTRIBUTES = (
    ("kind", "string"),
    ("weight", "integer"),
    ("weight_class", "string"),
    ("rel_labels", "string"),
)


def export_gexf(graph: ConceptGraph) -> bytes:
    """Serialize the graph as a GEXF 1.2 document (UTF-8 bytes)."""
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<gexf xmlns={quoteattr(GEXF_XMLNS)} version="1.2">',
        '  <graph mode="static">',
        '    <attributes class="edge">',
    ]
    for name, attr_type in _EDGE_ATTRIBUTES:
        lines.append(f'      <attribute id="{name}" title="{name}" type="{attr_type}"/>')
    lines.append("    </attributes>")

    lines.append("    <nodes>")
    for concept in sorted(graph.nodes):
        lines.append(f"      <node id={quoteattr(concept)} label={quoteattr(concept)}/>")
    lines.append("    </nodes>")

    lines.append("    <edges>")
    for index, edge in enumerate(sorted(graph.edges, key=lambda e: e.key)):
        edge_type = "directed" if edge.kind.directed else "undirected"
        lines.append(
            f'      <edge id="e{index}" source={quoteattr(edge.source)} '
            f"target={quoteattr(edge.target)} type=\"{edge_type}\" weight=\"{edge.weight}\">"
        )
        lines.append("        <attvalues>")
        values = {
            "kind": edge.kind.value,
            "weight": str(edge.weight),
            "weight_class": graph.edge_class(edge).label,
            "rel_labels": ", ".join(edge.rel_labels),
        }
        for name, _ in _EDGE_ATTRIBUTES:
            lines.append(f'          <attvalue for="{name}" value={quoteattr(values[name])}/>')
        lines.append("        </attvalues>")
        lines.append("      </edge>")
    lines.append("    </edges>")

    lines.append("  </graph>")
    lines.append("</gexf>")
    return ("\n".join(lines) + "\n").encode("utf-8")
