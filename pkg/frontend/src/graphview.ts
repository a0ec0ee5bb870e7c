import { nodeColor, nodeStroke } from "./palette";
import type { ApiNode, NetworkDocument } from "./types";

/** Network visualization model. Layout is a small deterministic
 *  force-directed relaxation (seeded by node order), purely cosmetic; the
 *  edge structure mirrors the engine's premise -> S-node -> conclusion
 *  orientation. */

export interface LayoutNode {
  id: string;
  kind: ApiNode["kind"];
  summary: string;
  x: number;
  y: number;
  color: string;
  stroke: string;
  dimmed: boolean;
}

export interface LayoutEdge {
  from: string;
  to: string;
  kind: "premise" | "conclusion";
}

export interface GraphView {
  nodes: LayoutNode[];
  edges: LayoutEdge[];
  width: number;
  height: number;
}

export function documentEdges(doc: NetworkDocument): LayoutEdge[] {
  const edges: LayoutEdge[] = [];
  for (const node of doc.nodes) {
    for (const premise of node.premises) {
      edges.push({ from: premise, to: node.id, kind: "premise" });
    }
    if (node.conclusion) {
      edges.push({ from: node.id, to: node.conclusion, kind: "conclusion" });
    }
  }
  return edges;
}

export function layoutGraph(
  doc: NetworkDocument,
  width = 900,
  height = 600,
  iterations = 120,
  blocked: Set<string> = new Set(),
): GraphView {
  const nodes = doc.nodes.map((node, index) => {
    // deterministic ring seed: reloading the same document reproduces the view
    const angle = (2 * Math.PI * index) / Math.max(doc.nodes.length, 1);
    return {
      id: node.id,
      kind: node.kind,
      summary: node.summary,
      x: width / 2 + (width / 3) * Math.cos(angle),
      y: height / 2 + (height / 3) * Math.sin(angle),
      color: nodeColor(node.kind),
      stroke: nodeStroke(node.kind),
      dimmed: blocked.has(node.id),
    };
  });
  const byId = new Map(nodes.map((n) => [n.id, n]));
  const edges = documentEdges(doc).filter((e) => byId.has(e.from) && byId.has(e.to));

  const repulsion = 12000;
  const springLength = 120;
  const springStrength = 0.02;
  for (let step = 0; step < iterations; step += 1) {
    const fx = new Map<string, number>();
    const fy = new Map<string, number>();
    for (const node of nodes) {
      fx.set(node.id, 0);
      fy.set(node.id, 0);
    }
    for (let i = 0; i < nodes.length; i += 1) {
      for (let j = i + 1; j < nodes.length; j += 1) {
        const a = nodes[i];
        const b = nodes[j];
        const dx = a.x - b.x;
        const dy = a.y - b.y;
        const dist2 = Math.max(dx * dx + dy * dy, 1);
        const force = repulsion / dist2;
        const dist = Math.sqrt(dist2);
        fx.set(a.id, fx.get(a.id)! + (force * dx) / dist);
        fy.set(a.id, fy.get(a.id)! + (force * dy) / dist);
        fx.set(b.id, fx.get(b.id)! - (force * dx) / dist);
        fy.set(b.id, fy.get(b.id)! - (force * dy) / dist);
      }
    }
    for (const edge of edges) {
      const a = byId.get(edge.from)!;
      const b = byId.get(edge.to)!;
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const dist = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const pull = springStrength * (dist - springLength);
      fx.set(a.id, fx.get(a.id)! + (pull * dx) / dist);
      fy.set(a.id, fy.get(a.id)! + (pull * dy) / dist);
      fx.set(b.id, fx.get(b.id)! - (pull * dx) / dist);
      fy.set(b.id, fy.get(b.id)! - (pull * dy) / dist);
    }
    const damping = 0.85;
    for (const node of nodes) {
      node.x += Math.max(-15, Math.min(15, fx.get(node.id)! * damping));
      node.y += Math.max(-15, Math.min(15, fy.get(node.id)! * damping));
      node.x = Math.max(40, Math.min(width - 40, node.x));
      node.y = Math.max(30, Math.min(height - 30, node.y));
    }
  }
  return { nodes, edges, width, height };
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderSvg(view: GraphView, selected: string | null = null): string {
  const edgeLines = view.edges
    .map((edge) => {
      const a = view.nodes.find((n) => n.id === edge.from)!;
      const b = view.nodes.find((n) => n.id === edge.to)!;
      return `<line x1="${a.x.toFixed(1)}" y1="${a.y.toFixed(1)}" x2="${b.x.toFixed(1)}" y2="${b.y.toFixed(1)}" class="edge-${edge.kind}" stroke="#888" marker-end="url(#arrow)" />`;
    })
    .join("\n    ");
  const nodeShapes = view.nodes
    .map((node) => {
      const selectedClass = node.id === selected ? " selected" : "";
      const opacity = node.dimmed ? ' opacity="0.35"' : "";
      const label = node.summary.length > 28 ? `${node.summary.slice(0, 28)}…` : node.summary;
      return `<g class="node kind-${node.kind}${selectedClass}" data-node="${node.id}"${opacity}>
      <circle cx="${node.x.toFixed(1)}" cy="${node.y.toFixed(1)}" r="16" fill="${node.color}" stroke="${node.stroke}" stroke-width="2" />
      <text x="${node.x.toFixed(1)}" y="${(node.y + 30).toFixed(1)}" text-anchor="middle" font-size="10">${escapeXml(label)}</text>
    </g>`;
    })
    .join("\n    ");
  return `<svg viewBox="0 0 ${view.width} ${view.height}" xmlns="http://www.w3.org/2000/svg">
    <defs><marker id="arrow" markerWidth="8" markerHeight="8" refX="20" refY="4" orient="auto"><path d="M0,0 L8,4 L0,8 z" fill="#888"/></marker></defs>
    ${edgeLines}
    ${nodeShapes}
  </svg>`;
}
