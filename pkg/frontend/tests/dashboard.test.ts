import { describe, expect, it } from "vitest";

import {
  renderContradictionPanel,
  renderCriticalQuestionPanel,
  renderExplanationPanel,
  renderStatusPanel,
} from "../src/dashboard";
import type {
  ContradictionResponse,
  CQInstance,
  ExplanationResponse,
  SchemeDescriptor,
  ValidityResponse,
} from "../src/types";
import simpleFixture from "./fixtures/contradiction_simple.json";
import weightedFixture from "./fixtures/contradiction_weighted.json";
import argument1Fixture from "./fixtures/argument1_validity.json";
import claimFixture from "./fixtures/claim_validity.json";
import explanationFixture from "./fixtures/claim_explanation.json";
import schemesFixture from "./fixtures/schemes.json";

const simple = simpleFixture as unknown as ContradictionResponse;
const weighted = weightedFixture as unknown as ContradictionResponse;
const argument1 = argument1Fixture as unknown as ValidityResponse;
const claim = claimFixture as unknown as ValidityResponse;
const explanation = explanationFixture as unknown as ExplanationResponse;
const schemes = (schemesFixture as { schemes: SchemeDescriptor[] }).schemes;

describe("dashboard panels", () => {
  it("contradiction panel shows the API's 0.25 on the software debate", () => {
    expect(simple.value).toBe(0.25);
    const html = renderContradictionPanel(simple, weighted);
    expect(html).toContain('<span class="dc-simple">0.25</span>');
    expect(html).toContain("1 conflict / 3 rule / 1 preference");
    expect(html).toContain(`<span class="dc-weighted">${String(weighted.value)}</span>`);
  });

  it("status panel carries the failed-argument wording", () => {
    expect(argument1.valid).toBe(false);
    const html = renderStatusPanel(argument1);
    expect(html).toContain("is not sufficiently supported");
    expect(html).toContain(`<span class="credibility">${String(argument1.credibility)}</span>`);
    expect(html).toContain('class="status-panel invalid"');
  });

  it("status panel renders every factor verbatim", () => {
    const html = renderStatusPanel(claim);
    for (const value of Object.values(claim.breakdown)) {
      expect(html).toContain(`<td class="num">${String(value)}</td>`);
    }
  });

  it("explanation panel shows the assembled text and per-hop credibilities", () => {
    const html = renderExplanationPanel(explanation);
    expect(html).toContain("Java applications are usually free");
    expect(html).toContain("in conflict with");
    for (const value of explanation.path_credibilities) {
      expect(html).toContain(`(${String(value)})`);
    }
  });

  it("critical-question panel resolves descriptor texts and offers controls", () => {
    const open: CQInstance[] = [{
      id: "q000001",
      target: "n000004",
      cq_index: 1,
      challenge_text: "really trustworthy?",
      status: "open",
      raised_by: "sally",
      resolution_text: null,
    }];
    const byId = new Map(schemes.map((s) => [s.id, s]));
    const html = renderCriticalQuestionPanel(open, byId,
      () => "argument_from_position_to_know");
    expect(html).toContain("Open critical questions (1)");
    expect(html).toContain("Is E an honest, trustworthy and reliable source?");
    expect(html).toContain('data-resolve="q000001"');
  });

  it("critical-question panel handles the empty case", () => {
    const html = renderCriticalQuestionPanel([], new Map(), () => null);
    expect(html).toContain("Open critical questions (0)");
    expect(html).toContain("none");
  });
});
