// DOM-free controller: session lifecycle, move composition, challenges and
// hint handling. main.ts binds this to the document; tests drive it directly.

import { ApiClient, CreateSessionRequest, ServiceRejection } from "./api.js";
import { CloudView, realisationCloud } from "./boards.js";
import { MoveComposer } from "./compose.js";
import { LegalMoves, SessionState, Verdict } from "./types.js";

export interface ControllerView {
  session: SessionState | null;
  legal: LegalMoves | null;
  cloud: CloudView | null;
  verdict: Verdict | null;
  notice: string | null;
}

export class GameController {
  private session: SessionState | null = null;
  private legal: LegalMoves | null = null;
  private verdict: Verdict | null = null;
  private notice: string | null = null;
  composer: MoveComposer = new MoveComposer(2);

  constructor(private readonly api: ApiClient) {}

  view(): ControllerView {
    return {
      session: this.session,
      legal: this.legal,
      cloud: this.session ? realisationCloud(this.session.realisations) : null,
      verdict: this.verdict,
      notice: this.notice,
    };
  }

  private async syncLegal(): Promise<void> {
    if (!this.session || this.session.status === "FINISHED") {
      this.legal = null;
      return;
    }
    this.legal = await this.api.legalMoves(this.session.id);
  }

  private adopt(session: SessionState): void {
    this.session = session;
    this.composer = new MoveComposer(session.width);
    this.notice = null;
  }

  async start(request: CreateSessionRequest): Promise<SessionState> {
    const session = await this.api.createSession(request);
    this.adopt(session);
    this.verdict = null;
    await this.syncLegal();
    return session;
  }

  async refresh(): Promise<void> {
    if (!this.session) return;
    this.adopt(await this.api.getSession(this.session.id));
    await this.syncLegal();
  }

  toggleMove(move: string): void {
    this.composer.toggle(move);
  }

  canAnnounce(): boolean {
    return this.session !== null && this.composer.canSubmit();
  }

  async announce(): Promise<void> {
    if (!this.session || !this.canAnnounce()) return;
    const qmove = this.composer.toQmoveString();
    try {
      this.adopt(await this.api.submitMove(this.session.id, qmove));
      await this.syncLegal();
    } catch (error) {
      if (error instanceof ServiceRejection) {
        // surface the server's reason code verbatim; state is untouched
        const branch = error.rejection.offending_branch;
        this.notice = branch
          ? `${error.rejection.reason} (${branch})`
          : error.rejection.reason;
        return;
      }
      throw error;
    }
  }

  canChallenge(): boolean {
    return (
      this.session !== null &&
      this.session.status !== "FINISHED" &&
      (this.session.pending !== null || this.session.history.length > 0)
    );
  }

  async challenge(): Promise<Verdict | null> {
    if (!this.session || !this.canChallenge()) return null;
    const result = await this.api.challenge(this.session.id);
    this.session = result.session;
    this.verdict = result.verdict;
    this.legal = null;
    return result.verdict;
  }

  async hint(): Promise<string | null> {
    if (!this.session) return null;
    const qmove = await this.api.hint(this.session.id);
    if (qmove) {
      // pre-fill the composer with the engine's branches
      this.composer.clear();
      for (const move of qmove.slice(1, -1).split(" & ")) this.composer.toggle(move);
    }
    return qmove;
  }

  statusLine(): string {
    const s = this.session;
    if (!s) return "no session";
    if (s.status === "FINISHED") {
      return s.winner ? `finished: ${s.winner} wins` : "finished";
    }
    const waiting = `${s.turn} to act`;
    return s.pending ? `${s.pending_by} announced ${s.pending}; ${waiting}` : waiting;
  }
}
