import type { Breakdown, WhatIfResponse } from "./types";

/** What-if preview rendering. Numbers come from the service verbatim:
 *  the preview is evaluated on a server-side overlay, so the same drafts,
 *  once committed, evaluate to exactly the numbers shown here. */

export function formatNumber(value: number): string {
  return String(value);
}

export interface DeltaRow {
  factor: keyof Breakdown;
  before: string;
  after: string;
  changed: boolean;
}

export function breakdownDelta(before: Breakdown, after: Breakdown): DeltaRow[] {
  const factors: Array<keyof Breakdown> = ["c", "u", "m", "a", "p", "s", "total"];
  return factors.map((factor) => ({
    factor,
    before: formatNumber(before[factor]),
    after: formatNumber(after[factor]),
    changed: before[factor] !== after[factor],
  }));
}

export function renderWhatIfPanel(preview: WhatIfResponse): string {
  const rows = breakdownDelta(preview.before.breakdown, preview.after.breakdown)
    .map(
      (row) => `
      <tr class="${row.changed ? "changed" : ""}">
        <td>${row.factor}</td><td>${row.before}</td><td>${row.after}</td>
      </tr>`,
    )
    .join("");
  const flip = preview.flipped
    ? `<p class="validity-flip">Validity flips: ${preview.before.verdict.valid} &rarr; ${preview.after.verdict.valid}</p>`
    : `<p class="validity-kept">Verdict unchanged (${preview.after.verdict.valid ? "valid" : "invalid"})</p>`;
  return `
  <section class="whatif-panel" data-target="${preview.target}">
    <h3>What-if preview for &quot;${escapeHtml(preview.summary)}&quot;</h3>
    <p><span class="before-total">${formatNumber(preview.before.breakdown.total)}</span>
       &rarr;
       <span class="after-total">${formatNumber(preview.after.breakdown.total)}</span></p>
    ${flip}
    <table class="breakdown-delta"><thead><tr><th>factor</th><th>before</th><th>after</th></tr></thead>
    <tbody>${rows}</tbody></table>
    <p class="note">Nothing committed yet; drafts would become ${preview.draft_ids.join(", ")}.</p>
  </section>`;
}

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
