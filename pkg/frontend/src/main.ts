import { ArgnetClient } from "./api";
import {
  renderContradictionPanel,
  renderCriticalQuestionPanel,
  renderExplanationPanel,
  renderStatusPanel,
} from "./dashboard";
import { buildSchemeForm, planCommit, renderSchemeForm, validateForm } from "./forms";
import { layoutGraph, renderSvg } from "./graphview";
import {
  applySchemes,
  applySnapshot,
  blockedTargets,
  clearDraft,
  initialState,
  schemeOfTarget,
  selectNode,
  setOverlay,
  startDraft,
  type WorkbenchState,
} from "./state";
import { renderWhatIfPanel } from "./whatif";

/** DOM wiring only; all rendering logic lives in the pure modules. */

const params = new URLSearchParams(window.location.search);
const client = new ArgnetClient(params.get("api") ?? "http://127.0.0.1:8000");
let state: WorkbenchState = initialState();

function el(id: string): HTMLElement {
  const element = document.getElementById(id);
  if (!element) throw new Error(`missing element #${id}`);
  return element;
}

async function refresh(): Promise<void> {
  const [document_, schemes] = await Promise.all([client.network(), client.schemes()]);
  state = applySchemes(applySnapshot(state, document_), schemes.schemes);
  renderAll();
}

function renderAll(): void {
  renderGraph();
  renderSchemePicker();
  void renderPanels();
}

function renderGraph(): void {
  if (!state.document) return;
  const view = layoutGraph(state.document, 900, 560, 120, blockedTargets(state));
  el("graph").innerHTML = renderSvg(view, state.selectedNode);
  for (const group of el("graph").querySelectorAll<SVGGElement>("g.node")) {
    group.addEventListener("click", () => {
      state = selectNode(state, group.dataset.node ?? null);
      renderAll();
    });
  }
}

function renderSchemePicker(): void {
  const picker = el("scheme-picker") as HTMLSelectElement;
  picker.innerHTML =
    `<option value="">pick a scheme…</option>` +
    state.schemes
      .map((scheme) => `<option value="${scheme.id}">${scheme.name}</option>`)
      .join("");
  picker.onchange = () => {
    const scheme = state.schemes.find((s) => s.id === picker.value);
    if (!scheme) return;
    state = startDraft(state, buildSchemeForm(scheme, "workbench-user"));
    renderDraftForm();
  };
}

function renderDraftForm(): void {
  if (!state.draft || !state.document) return;
  el("authoring").innerHTML = renderSchemeForm(state.draft, state.document.nodes);
  const form = el("authoring").querySelector("form");
  if (!form) return;
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void commitDraft();
  });
}

function readDraftFromDom(): void {
  if (!state.draft) return;
  const summary = (el("arg-summary") as HTMLInputElement).value;
  const slots = state.draft.premiseSlots.map((slot, index) => ({
    ...slot,
    newSummary: (document.getElementById(`premise-${index}`) as HTMLInputElement).value,
    nodeId: (document.getElementById(`premise-${index}-reuse`) as HTMLSelectElement).value,
  }));
  state = startDraft(state, {
    ...state.draft,
    summary,
    premiseSlots: slots,
    conclusionNewSummary: (el("conclusion") as HTMLInputElement).value,
    conclusionNodeId: (document.getElementById("conclusion-reuse") as HTMLSelectElement).value,
  });
}

async function commitDraft(): Promise<void> {
  if (!state.draft) return;
  readDraftFromDom();
  const problems = validateForm(state.draft!);
  if (problems.length > 0) {
    el("errors").textContent = problems.map((p) => p.message).join("; ");
    return;
  }
  try {
    const plan = planCommit(state.draft!);
    const createdIds: string[] = [];
    for (const statement of plan.newStatements) {
      createdIds.push((await client.createINode(statement)).id);
    }
    await client.createSNode(plan.assemble(createdIds));
    el("errors").textContent = "";
    state = clearDraft(state);
    el("authoring").innerHTML = "";
    await refresh();
  } catch (error) {
    // service validation errors render inline; nothing was committed
    el("errors").textContent = String(error);
  }
}

async function previewDraftAttack(): Promise<void> {
  if (!state.draft || !state.selectedNode) return;
  readDraftFromDom();
  const plan = planCommit(state.draft!);
  // preview uses placeholder references resolved server-side on the overlay
  const preview = await client.whatIf(state.selectedNode, [
    ...plan.newStatements,
  ]);
  state = setOverlay(state, preview);
  el("whatif").innerHTML = renderWhatIfPanel(preview);
}

async function renderPanels(): Promise<void> {
  if (!state.document) return;
  const topic = (el("topic-input") as HTMLInputElement).value || undefined;
  const [simple, weighted] = await Promise.all([
    client.contradiction(topic, false).catch(() => null),
    client.contradiction(topic, true).catch(() => null),
  ]);
  if (simple) el("contradiction").innerHTML = renderContradictionPanel(simple, weighted);
  const open = await client.openCriticalQuestions();
  const schemesById = new Map(state.schemes.map((s) => [s.id, s]));
  el("cq-panel").innerHTML = renderCriticalQuestionPanel(
    open.cq_instances,
    schemesById,
    schemeOfTarget(state),
  );
  for (const button of el("cq-panel").querySelectorAll<HTMLButtonElement>("button[data-resolve]")) {
    button.addEventListener("click", async () => {
      await client.resolveCriticalQuestion(button.dataset.resolve!, "resolved from workbench");
      await refresh();
    });
  }
  if (state.selectedNode) {
    const [validity, explanation] = await Promise.all([
      client.validity(state.selectedNode),
      client.explanation(state.selectedNode),
    ]);
    el("status").innerHTML = renderStatusPanel(validity);
    el("explanation").innerHTML = renderExplanationPanel(explanation);
  }
}

el("refresh-button").addEventListener("click", () => void refresh());
el("preview-button").addEventListener("click", () => void previewDraftAttack());
el("topic-input").addEventListener("change", () => void renderPanels());

void refresh();
