import type { NetworkDocument, SchemeDescriptor, WhatIfResponse } from "./types";
import type { SchemeForm } from "./forms";

/** Workbench state. The view is always derived from the last fetched
 *  document plus an optional what-if overlay; the client never mutates
 *  network state locally, so reloading reproduces the identical view. */

export interface WorkbenchState {
  document: NetworkDocument | null;
  schemes: SchemeDescriptor[];
  selectedNode: string | null;
  draft: SchemeForm | null;
  whatifOverlay: WhatIfResponse | null;
}

export function initialState(): WorkbenchState {
  return {
    document: null,
    schemes: [],
    selectedNode: null,
    draft: null,
    whatifOverlay: null,
  };
}

export function applySnapshot(state: WorkbenchState, document: NetworkDocument): WorkbenchState {
  const stillExists = state.selectedNode !== null
    && document.nodes.some((node) => node.id === state.selectedNode);
  return {
    ...state,
    document,
    selectedNode: stillExists ? state.selectedNode : null,
    // a fresh snapshot invalidates any preview computed against the old one
    whatifOverlay: null,
  };
}

export function applySchemes(state: WorkbenchState, schemes: SchemeDescriptor[]): WorkbenchState {
  return { ...state, schemes };
}

export function selectNode(state: WorkbenchState, nodeId: string | null): WorkbenchState {
  return { ...state, selectedNode: nodeId, whatifOverlay: null };
}

export function startDraft(state: WorkbenchState, draft: SchemeForm): WorkbenchState {
  return { ...state, draft };
}

export function clearDraft(state: WorkbenchState): WorkbenchState {
  return { ...state, draft: null, whatifOverlay: null };
}

export function setOverlay(state: WorkbenchState, overlay: WhatIfResponse): WorkbenchState {
  return { ...state, whatifOverlay: overlay };
}

export function blockedTargets(state: WorkbenchState): Set<string> {
  const doc = state.document;
  if (!doc) return new Set();
  return new Set(
    doc.cq_instances.filter((cq) => cq.status === "open").map((cq) => cq.target),
  );
}

export function schemeOfTarget(state: WorkbenchState): (target: string) => string | null {
  const byId = new Map((state.document?.nodes ?? []).map((node) => [node.id, node]));
  return (target: string) => byId.get(target)?.scheme ?? null;
}
