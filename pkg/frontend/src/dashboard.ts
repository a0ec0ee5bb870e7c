import { formatNumber } from "./whatif";
import type {
  ContradictionResponse,
  CQInstance,
  ExplanationResponse,
  SchemeDescriptor,
  ValidityResponse,
} from "./types";

/** Debate dashboard panels: verdict + factor breakdown for the selected
 *  node, its best explanation, the topic's contradiction degrees, and the
 *  open critical questions with their controls. Pure render functions;
 *  every displayed number is the API's value verbatim. */

export function renderStatusPanel(validity: ValidityResponse): string {
  const cls = validity.valid ? "valid" : "invalid";
  const rows = (Object.entries(validity.breakdown) as Array<[string, number]>)
    .map(([factor, value]) => `<tr><td>${factor}</td><td class="num">${formatNumber(value)}</td></tr>`)
    .join("");
  return `
  <section class="status-panel ${cls}" data-node="${validity.node}">
    <h3>Argument status</h3>
    <p class="status-text">${escapeHtml(validity.status_text)}</p>
    <p>credibility <span class="credibility">${formatNumber(validity.credibility)}</span>
       vs balance point ${formatNumber(validity.balance_point)}</p>
    <table class="breakdown">${rows}</table>
  </section>`;
}

export function renderExplanationPanel(explanation: ExplanationResponse): string {
  const hops = explanation.path
    .map((id, index) => `<li>${id} <span class="num">(${formatNumber(explanation.path_credibilities[index])})</span></li>`)
    .join("");
  return `
  <section class="explanation-panel">
    <h3>Explanation</h3>
    <p class="explanation-text">${escapeHtml(explanation.text)}</p>
    <ol class="explanation-path">${hops}</ol>
  </section>`;
}

export function renderContradictionPanel(
  simple: ContradictionResponse,
  weighted: ContradictionResponse | null,
): string {
  const weightedLine = weighted
    ? `<p>weighted (credibility mass): <span class="dc-weighted">${formatNumber(weighted.value)}</span></p>`
    : "";
  return `
  <section class="contradiction-panel" data-topic="${simple.topic ?? ""}">
    <h3>Contradiction degree</h3>
    <p>simple (count ratio): <span class="dc-simple">${formatNumber(simple.value)}</span></p>
    ${weightedLine}
    <p class="census">${simple.census.ca} conflict / ${simple.census.ra} rule / ${simple.census.pa} preference</p>
  </section>`;
}

export function renderCriticalQuestionPanel(
  open: CQInstance[],
  schemesById: Map<string, SchemeDescriptor>,
  schemeOfTarget: (target: string) => string | null,
): string {
  const items = open
    .map((cq) => {
      const schemeId = schemeOfTarget(cq.target);
      const descriptor = schemeId ? schemesById.get(schemeId) : undefined;
      const question = descriptor?.critical_questions[cq.cq_index] ?? cq.challenge_text;
      return `
      <li class="open-cq" data-cq="${cq.id}">
        <span class="cq-target">${cq.target}</span>: ${escapeHtml(question)}
        <em>${escapeHtml(cq.challenge_text)}</em>
        <button data-resolve="${cq.id}">Resolve</button>
      </li>`;
    })
    .join("");
  return `
  <section class="cq-panel">
    <h3>Open critical questions (${open.length})</h3>
    <ul>${items || "<li class='none'>none</li>"}</ul>
  </section>`;
}

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
