/** Wire types for the argnet HTTP API. */

export type NodeKind = "I" | "RA" | "CA" | "PA";
export type CertaintyLevel = "very_low" | "low" | "average" | "high" | "very_high";

export interface ContextTerm {
  term: string;
  weight: number;
}

export interface ApiNode {
  id: string;
  kind: NodeKind;
  summary: string;
  text: string;
  certainty: CertaintyLevel;
  support_url: string | null;
  context: ContextTerm[];
  topic: ContextTerm[];
  author: string;
  created_at: string | null;
  premises: string[];
  conclusion: string | null;
  scheme: string | null;
  default_form: string | null;
}

export interface SchemeDescriptor {
  id: string;
  name: string;
  premise_descriptors: string[];
  conclusion_descriptor: string;
  critical_questions: string[];
  scheme_kind: "inference" | "conflict" | "preference";
}

export interface Breakdown {
  c: number;
  u: number;
  m: number;
  a: number;
  p: number;
  s: number;
  total: number;
}

export interface Verdict {
  node: string;
  credibility: number;
  valid: boolean;
  balance_point: number;
}

export interface ValidityResponse extends Verdict {
  status_text: string;
  breakdown: Breakdown;
}

export interface ExplanationResponse {
  path: string[];
  text: string;
  path_credibilities: number[];
}

export interface ContradictionResponse {
  value: number;
  weighted: boolean;
  topic: string | null;
  scope: string[];
  census: { ca: number; ra: number; pa: number };
}

export interface CQInstance {
  id: string;
  target: string;
  cq_index: number;
  challenge_text: string;
  status: "open" | "resolved";
  raised_by: string;
  resolution_text: string | null;
}

export interface NetworkDocument {
  version: string;
  nodes: ApiNode[];
  schemes: SchemeDescriptor[];
  cq_instances: CQInstance[];
}

export interface DraftNode {
  kind: NodeKind;
  summary: string;
  certainty?: CertaintyLevel;
  text?: string;
  support_url?: string | null;
  context?: ContextTerm[];
  topic?: ContextTerm[];
  premises?: string[];
  conclusion?: string | null;
  scheme?: string | null;
  default_form?: string | null;
  author?: string;
}

export interface WhatIfSide {
  breakdown: Breakdown;
  verdict: Verdict;
}

export interface WhatIfResponse {
  target: string;
  summary: string;
  before: WhatIfSide;
  after: WhatIfSide;
  flipped: boolean;
  draft_ids: string[];
}

export interface ApiError {
  code: string;
  message: string;
  violations?: { code: string; node_id: string | null; message: string }[];
}
