import type { NodeKind } from "./types";

/** Fixed node palette: information white, rule green, conflict red,
 *  preference blue. Presentation contract shared with the DOT export. */
export const NODE_COLORS: Record<NodeKind, string> = {
  I: "white",
  RA: "green",
  CA: "red",
  PA: "blue",
};

export function nodeColor(kind: NodeKind): string {
  return NODE_COLORS[kind];
}

/** Readable outline so white nodes stay visible on a light canvas. */
export function nodeStroke(kind: NodeKind): string {
  return kind === "I" ? "#333333" : NODE_COLORS[kind];
}
