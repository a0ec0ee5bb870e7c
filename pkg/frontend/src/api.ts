import type {
  ApiError,
  ApiNode,
  ContradictionResponse,
  CQInstance,
  DraftNode,
  ExplanationResponse,
  NetworkDocument,
  SchemeDescriptor,
  ValidityResponse,
  WhatIfResponse,
} from "./types";

export class ApiRequestError extends Error {
  constructor(public readonly status: number, public readonly body: ApiError) {
    super(`${body.code}: ${body.message}`);
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin typed client over the service endpoints. The workbench never
 *  recomputes engine numbers; everything shown comes from these calls. */
export class ArgnetClient {
  constructor(
    private readonly baseUrl: string = "http://127.0.0.1:8000",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method,
      headers: body === undefined ? undefined : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      throw new ApiRequestError(response.status, (await response.json()) as ApiError);
    }
    return (await response.json()) as T;
  }

  network(): Promise<NetworkDocument> {
    return this.request("GET", "/network");
  }

  schemes(): Promise<{ schemes: SchemeDescriptor[] }> {
    return this.request("GET", "/schemes");
  }

  node(id: string): Promise<ApiNode> {
    return this.request("GET", `/nodes/${encodeURIComponent(id)}`);
  }

  createINode(draft: DraftNode): Promise<ApiNode> {
    return this.request("POST", "/nodes/i", draft);
  }

  createSNode(draft: DraftNode): Promise<ApiNode> {
    return this.request("POST", "/nodes/s", draft);
  }

  validity(id: string): Promise<ValidityResponse> {
    return this.request("GET", `/nodes/${encodeURIComponent(id)}/validity`);
  }

  explanation(id: string): Promise<ExplanationResponse> {
    return this.request("GET", `/nodes/${encodeURIComponent(id)}/explanation`);
  }

  contradiction(topic?: string, weighted = false): Promise<ContradictionResponse> {
    const params = new URLSearchParams();
    if (topic) params.set("topic", topic);
    if (weighted) params.set("weighted", "true");
    const suffix = params.toString() ? `?${params.toString()}` : "";
    return this.request("GET", `/contradiction${suffix}`);
  }

  openCriticalQuestions(): Promise<{ cq_instances: CQInstance[] }> {
    return this.request("GET", "/cq?status=open");
  }

  raiseCriticalQuestion(target: string, cqIndex: number, text: string, by: string): Promise<CQInstance> {
    return this.request("POST", "/cq", {
      target,
      cq_index: cqIndex,
      challenge_text: text,
      raised_by: by,
    });
  }

  resolveCriticalQuestion(id: string, text: string): Promise<CQInstance> {
    return this.request("POST", `/cq/${encodeURIComponent(id)}/resolve`, { resolution_text: text });
  }

  whatIf(target: string, nodes: DraftNode[]): Promise<WhatIfResponse> {
    return this.request("POST", "/whatif", { target, nodes });
  }
}
