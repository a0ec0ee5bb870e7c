import type { ApiNode, CertaintyLevel, DraftNode, NodeKind, SchemeDescriptor } from "./types";

/** Scheme-guided authoring: the form renders one slot per premise
 *  descriptor plus a conclusion slot, with the scheme's critical questions
 *  shown alongside as authoring guidance. Each slot either reuses an
 *  existing I-node (by id) or introduces a new statement. */

export interface PremiseSlot {
  label: string;
  /** id of a reused node, or empty when introducing a new statement */
  nodeId: string;
  newSummary: string;
}

export interface SchemeForm {
  scheme: SchemeDescriptor;
  kind: NodeKind;
  summary: string;
  certainty: CertaintyLevel;
  premiseSlots: PremiseSlot[];
  conclusionLabel: string;
  conclusionNodeId: string;
  conclusionNewSummary: string;
  author: string;
}

const KIND_BY_SCHEME_KIND: Record<SchemeDescriptor["scheme_kind"], NodeKind> = {
  inference: "RA",
  conflict: "CA",
  preference: "PA",
};

export function buildSchemeForm(scheme: SchemeDescriptor, author = ""): SchemeForm {
  return {
    scheme,
    kind: KIND_BY_SCHEME_KIND[scheme.scheme_kind],
    summary: "",
    certainty: "average",
    premiseSlots: scheme.premise_descriptors.map((label) => ({
      label,
      nodeId: "",
      newSummary: "",
    })),
    conclusionLabel: scheme.conclusion_descriptor,
    conclusionNodeId: "",
    conclusionNewSummary: "",
    author,
  };
}

export interface FormProblem {
  field: string;
  message: string;
}

export function validateForm(form: SchemeForm): FormProblem[] {
  const problems: FormProblem[] = [];
  if (!form.summary.trim()) {
    problems.push({ field: "summary", message: "summary must be non-empty" });
  }
  form.premiseSlots.forEach((slot, index) => {
    if (!slot.nodeId && !slot.newSummary.trim()) {
      problems.push({
        field: `premise-${index}`,
        message: `premise ${index + 1} needs an existing statement or a new one`,
      });
    }
  });
  if (!form.conclusionNodeId && !form.conclusionNewSummary.trim()) {
    problems.push({ field: "conclusion", message: "conclusion needs a statement" });
  }
  return problems;
}

export interface CommitPlan {
  /** new I-nodes to create first, in order */
  newStatements: DraftNode[];
  /** builds the S-node draft once the new statement ids are known */
  assemble: (createdIds: string[]) => DraftNode;
}

/** Turn a filled form into creation payloads. New premise statements and a
 *  new conclusion (when not reusing) become I-node drafts; the S-node draft
 *  references them by position. */
export function planCommit(form: SchemeForm): CommitPlan {
  const newStatements: DraftNode[] = [];
  const premiseSources: Array<{ reused: string } | { created: number }> = [];
  for (const slot of form.premiseSlots) {
    if (slot.nodeId) {
      premiseSources.push({ reused: slot.nodeId });
    } else {
      premiseSources.push({ created: newStatements.length });
      newStatements.push({
        kind: "I",
        summary: slot.newSummary.trim(),
        certainty: form.certainty,
        author: form.author,
      });
    }
  }
  let conclusionSource: { reused: string } | { created: number };
  if (form.conclusionNodeId) {
    conclusionSource = { reused: form.conclusionNodeId };
  } else {
    conclusionSource = { created: newStatements.length };
    newStatements.push({
      kind: "I",
      summary: form.conclusionNewSummary.trim(),
      certainty: form.certainty,
      author: form.author,
    });
  }
  const assemble = (createdIds: string[]): DraftNode => {
    if (createdIds.length !== newStatements.length) {
      throw new Error(`expected ${newStatements.length} created ids, got ${createdIds.length}`);
    }
    const resolve = (source: { reused: string } | { created: number }): string =>
      "reused" in source ? source.reused : createdIds[source.created];
    return {
      kind: form.kind,
      summary: form.summary.trim(),
      certainty: form.certainty,
      premises: premiseSources.map(resolve),
      conclusion: resolve(conclusionSource),
      scheme: form.scheme.id,
      author: form.author,
    };
  };
  return { newStatements, assemble };
}

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Render the form as HTML. Premise inputs carry their descriptor text as
 *  label and placeholder; the scheme's critical questions are listed so the
 *  author sees the standard challenges up front. */
export function renderSchemeForm(form: SchemeForm, reusable: ApiNode[] = []): string {
  const options = reusable
    .filter((node) => node.kind === "I")
    .map((node) => `<option value="${escapeHtml(node.id)}">${escapeHtml(node.summary)}</option>`)
    .join("");
  const premiseInputs = form.premiseSlots
    .map(
      (slot, index) => `
      <div class="premise-slot" data-slot="${index}">
        <label for="premise-${index}">${escapeHtml(slot.label)}</label>
        <input id="premise-${index}" placeholder="${escapeHtml(slot.label)}"
               value="${escapeHtml(slot.newSummary)}" />
        <select id="premise-${index}-reuse"><option value="">(new statement)</option>${options}</select>
      </div>`,
    )
    .join("");
  const questions = form.scheme.critical_questions
    .map((question) => `<li class="critical-question">${escapeHtml(question)}</li>`)
    .join("");
  return `
  <form class="scheme-form" data-scheme="${escapeHtml(form.scheme.id)}" data-kind="${form.kind}">
    <h3>${escapeHtml(form.scheme.name)}</h3>
    <label for="arg-summary">Argument summary</label>
    <input id="arg-summary" value="${escapeHtml(form.summary)}" />
    ${premiseInputs}
    <div class="conclusion-slot">
      <label for="conclusion">${escapeHtml(form.conclusionLabel)}</label>
      <input id="conclusion" placeholder="${escapeHtml(form.conclusionLabel)}"
             value="${escapeHtml(form.conclusionNewSummary)}" />
      <select id="conclusion-reuse"><option value="">(new statement)</option>${options}</select>
    </div>
    <details open class="cq-list"><summary>Critical questions (${form.scheme.critical_questions.length})</summary>
      <ul>${questions}</ul>
    </details>
    <button type="submit">Commit argument</button>
  </form>`;
}
