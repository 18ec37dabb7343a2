// Thin fetch client for the play service. Every response is validated by the
// type guards before it reaches the UI; rule violations surface as
// ServiceRejection carrying the server's reason code verbatim.

import {
  ChallengeResult,
  LegalMoves,
  Rejection,
  SessionState,
  isRejection,
  parseChallengeResult,
  parseLegalMoves,
  parseSessionState,
} from "./types.js";

export interface CreateSessionRequest {
  game: string;
  ruleset?: string;
  width?: number | "max";
  mode?: "human-vs-human" | "human-vs-engine";
  engine_side?: "LEFT" | "RIGHT";
  first?: "LEFT" | "RIGHT";
  validation?: "strict" | "honor";
}

export class ServiceRejection extends Error {
  readonly rejection: Rejection;
  readonly status: number;

  constructor(status: number, rejection: Rejection) {
    super(rejection.reason);
    this.status = status;
    this.rejection = rejection;
  }
}

async function decode(response: Response): Promise<unknown> {
  const body: unknown = await response.json();
  if (response.ok) return body;
  const detail =
    typeof body === "object" && body !== null && "detail" in body
      ? (body as { detail: unknown }).detail
      : body;
  if (isRejection(detail)) throw new ServiceRejection(response.status, detail);
  throw new Error(`service error ${response.status}`);
}

export class ApiClient {
  constructor(private readonly baseUrl: string) {}

  private async request(path: string, init?: RequestInit): Promise<unknown> {
    const response = await fetch(`${this.baseUrl}${path}`, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    return decode(response);
  }

  async createSession(request: CreateSessionRequest): Promise<SessionState> {
    return parseSessionState(
      await this.request("/sessions", {
        method: "POST",
        body: JSON.stringify(request),
      }),
    );
  }

  async getSession(id: string): Promise<SessionState> {
    return parseSessionState(await this.request(`/sessions/${id}`));
  }

  async submitMove(id: string, qmove: string): Promise<SessionState> {
    return parseSessionState(
      await this.request(`/sessions/${id}/moves`, {
        method: "POST",
        body: JSON.stringify({ qmove }),
      }),
    );
  }

  async challenge(id: string): Promise<ChallengeResult> {
    return parseChallengeResult(
      await this.request(`/sessions/${id}/challenge`, { method: "POST" }),
    );
  }

  async hint(id: string): Promise<string | null> {
    const body = await this.request(`/sessions/${id}/hint`);
    if (typeof body === "object" && body !== null && "qmove" in body) {
      const q = (body as { qmove: unknown }).qmove;
      if (q === null || typeof q === "string") return q;
    }
    throw new Error("malformed hint payload");
  }

  async legalMoves(id: string): Promise<LegalMoves> {
    return parseLegalMoves(await this.request(`/sessions/${id}/legal-moves`));
  }
}
