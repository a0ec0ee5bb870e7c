import { describe, expect, it } from "vitest";

import { NODE_COLORS, nodeColor } from "../src/palette";
import { documentEdges, layoutGraph, renderSvg } from "../src/graphview";
import {
  applySnapshot,
  blockedTargets,
  initialState,
  selectNode,
  setOverlay,
} from "../src/state";
import type { NetworkDocument, WhatIfResponse } from "../src/types";
import networkFixture from "./fixtures/network.json";
import previewFixture from "./fixtures/whatif_preview.json";

const network = networkFixture as unknown as NetworkDocument;
const preview = previewFixture as unknown as WhatIfResponse;

describe("palette", () => {
  it("is the fixed I/RA/CA/PA to white/green/red/blue mapping", () => {
    expect(NODE_COLORS).toStrictEqual({ I: "white", RA: "green", CA: "red", PA: "blue" });
    expect(nodeColor("CA")).toBe("red");
  });
});

describe("graph view", () => {
  it("derives premise->S and S->conclusion edges from the document", () => {
    const edges = documentEdges(network);
    const ra = network.nodes.find((n) => n.kind === "RA")!;
    expect(edges).toContainEqual({ from: ra.premises[0], to: ra.id, kind: "premise" });
    expect(edges).toContainEqual({ from: ra.id, to: ra.conclusion!, kind: "conclusion" });
    const sCount = network.nodes.filter((n) => n.kind !== "I").length;
    const premiseCount = network.nodes.reduce((acc, n) => acc + n.premises.length, 0);
    expect(edges).toHaveLength(sCount + premiseCount);
  });

  it("produces a deterministic layout for the same document", () => {
    const a = layoutGraph(network);
    const b = layoutGraph(network);
    expect(a).toStrictEqual(b);
    for (const node of a.nodes) {
      expect(node.x).toBeGreaterThanOrEqual(0);
      expect(node.x).toBeLessThanOrEqual(a.width);
    }
  });

  it("renders every node with its palette colour and dims blocked ones", () => {
    const blocked = new Set([network.nodes.find((n) => n.kind === "RA")!.id]);
    const svg = renderSvg(layoutGraph(network, 900, 600, 30, blocked));
    for (const node of network.nodes) {
      expect(svg).toContain(`data-node="${node.id}"`);
    }
    expect(svg).toContain('fill="red"');
    expect(svg).toContain('opacity="0.35"');
  });
});

describe("workbench state", () => {
  it("is derived purely from the fetched snapshot (reload reproduces it)", () => {
    const first = applySnapshot(initialState(), network);
    const reloaded = applySnapshot(initialState(), network);
    expect(first).toStrictEqual(reloaded);
  });

  it("clears previews when a fresh snapshot arrives", () => {
    let state = applySnapshot(initialState(), network);
    state = setOverlay(state, preview);
    expect(state.whatifOverlay).not.toBeNull();
    state = applySnapshot(state, network);
    expect(state.whatifOverlay).toBeNull();
  });

  it("drops the selection when the node disappears from the snapshot", () => {
    let state = applySnapshot(initialState(), network);
    state = selectNode(state, network.nodes[0].id);
    const smaller: NetworkDocument = { ...network, nodes: network.nodes.slice(1) };
    state = applySnapshot(state, smaller);
    expect(state.selectedNode).toBeNull();
  });

  it("derives blocked targets from open critical questions only", () => {
    const withCq: NetworkDocument = {
      ...network,
      cq_instances: [
        { id: "q1", target: "n000004", cq_index: 0, challenge_text: "", status: "open", raised_by: "", resolution_text: null },
        { id: "q2", target: "n000008", cq_index: 0, challenge_text: "", status: "resolved", raised_by: "", resolution_text: "ok" },
      ],
    };
    const state = applySnapshot(initialState(), withCq);
    expect(blockedTargets(state)).toStrictEqual(new Set(["n000004"]));
  });
});
