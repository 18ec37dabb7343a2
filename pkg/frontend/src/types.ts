// Wire types for the play service, with runtime guards so recorded fixtures
// and live responses are validated before use. The client never derives game
// state itself; everything renders from these payloads.

export type Player = "LEFT" | "RIGHT";

export interface SessionState {
  id: string;
  game: string;
  initial: string;
  ruleset: string;
  width: number | "max";
  mode: string;
  engine_side: Player | null;
  validation: "strict" | "honor";
  first: Player;
  status: string;
  turn: Player | null;
  winner: Player | null;
  realisations: string[];
  history: string[];
  pending: string | null;
  pending_by: Player | null;
}

export interface LegalMoves {
  classical_moves: string[];
  qmoves: string[];
  qmove_count: number;
}

export interface Witness {
  branch_move: string;
  run: string[];
}

export interface Verdict {
  upheld: boolean;
  witnesses: Witness[];
}

export interface ChallengeResult {
  verdict: Verdict;
  session: SessionState;
}

export interface Rejection {
  reason: string;
  offending_branch?: string | null;
  message?: string;
}

function isRecord(x: unknown): x is Record<string, unknown> {
  return typeof x === "object" && x !== null;
}

function isStringArray(x: unknown): x is string[] {
  return Array.isArray(x) && x.every((v) => typeof v === "string");
}

function isPlayerOrNull(x: unknown): x is Player | null {
  return x === null || x === "LEFT" || x === "RIGHT";
}

export function isSessionState(x: unknown): x is SessionState {
  if (!isRecord(x)) return false;
  return (
    typeof x.id === "string" &&
    typeof x.game === "string" &&
    typeof x.initial === "string" &&
    typeof x.ruleset === "string" &&
    (typeof x.width === "number" || x.width === "max") &&
    (x.validation === "strict" || x.validation === "honor") &&
    typeof x.status === "string" &&
    isPlayerOrNull(x.turn) &&
    isPlayerOrNull(x.winner) &&
    isStringArray(x.realisations) &&
    x.realisations.length >= 1 &&
    isStringArray(x.history) &&
    (x.pending === null || typeof x.pending === "string") &&
    isPlayerOrNull(x.pending_by)
  );
}

export function isLegalMoves(x: unknown): x is LegalMoves {
  if (!isRecord(x)) return false;
  return (
    isStringArray(x.classical_moves) &&
    isStringArray(x.qmoves) &&
    typeof x.qmove_count === "number"
  );
}

export function isWitness(x: unknown): x is Witness {
  return isRecord(x) && typeof x.branch_move === "string" && isStringArray(x.run);
}

export function isVerdict(x: unknown): x is Verdict {
  if (!isRecord(x)) return false;
  return (
    typeof x.upheld === "boolean" &&
    Array.isArray(x.witnesses) &&
    x.witnesses.every(isWitness)
  );
}

export function isChallengeResult(x: unknown): x is ChallengeResult {
  return isRecord(x) && isVerdict(x.verdict) && isSessionState(x.session);
}

export function isRejection(x: unknown): x is Rejection {
  return isRecord(x) && typeof x.reason === "string";
}

export function parseSessionState(x: unknown): SessionState {
  if (!isSessionState(x)) throw new Error("malformed session payload");
  return x;
}

export function parseLegalMoves(x: unknown): LegalMoves {
  if (!isLegalMoves(x)) throw new Error("malformed legal-moves payload");
  return x;
}

export function parseChallengeResult(x: unknown): ChallengeResult {
  if (!isChallengeResult(x)) throw new Error("malformed challenge payload");
  return x;
}
