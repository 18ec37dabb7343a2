// Recorded service responses must parse into the client's types unchanged.

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import {
  isRejection,
  parseChallengeResult,
  parseLegalMoves,
  parseSessionState,
} from "../src/types.js";
import { realisationCloud } from "../src/boards.js";

const fixtures = join(dirname(fileURLToPath(import.meta.url)), "..", "fixtures");

function load(name: string): unknown {
  return JSON.parse(readFileSync(join(fixtures, name), "utf-8"));
}

describe("recorded fixtures", () => {
  it("create response is a session", () => {
    const session = parseSessionState(load("create.json"));
    expect(session.realisations).toEqual(["nim:1,1,2"]);
    expect(session.validation).toBe("honor");
    expect(session.status).toBe("AWAITING_LEFT");
  });

  it("legal-moves response parses", () => {
    const legal = parseLegalMoves(load("legal_moves.json"));
    expect(legal.classical_moves).toEqual(["1:-1", "2:-1", "3:-1", "3:-2"]);
    expect(legal.qmove_count).toBeGreaterThan(0);
  });

  it("move response keeps the announced move pending", () => {
    const session = parseSessionState(load("move.json"));
    expect(session.pending).toBe("[1:-1 & 2:-1]");
    expect(session.pending_by).toBe("LEFT");
    expect(session.realisations).toEqual(["nim:1,1,2"]);
  });

  it("challenge response carries witnesses and the finished session", () => {
    const result = parseChallengeResult(load("challenge.json"));
    expect(result.verdict.upheld).toBe(true);
    expect(result.verdict.witnesses.map((w) => w.branch_move)).toEqual([
      "1:-1",
      "2:-1",
    ]);
    expect(result.session.status).toBe("FINISHED");
    expect(result.session.winner).toBe("LEFT");
  });

  it("rejections carry the server's reason code", () => {
    const doc = load("rejection.json") as { status: number; body: { detail: unknown } };
    expect(doc.status).toBe(409);
    expect(isRejection(doc.body.detail)).toBe(true);
    expect((doc.body.detail as { reason: string }).reason).toBe(
      "UNSUPERPOSED_FORBIDDEN",
    );
  });

  it("realisations render into a cloud view", () => {
    const session = parseSessionState(load("create.json"));
    const cloud = realisationCloud(session.realisations);
    expect(cloud.boards).toHaveLength(1);
    expect(cloud.boards[0]).toEqual({ kind: "heaps", heaps: [1, 1, 2] });
  });

  it("malformed payloads are refused", () => {
    expect(() => parseSessionState({ id: 1 })).toThrow();
    expect(() => parseLegalMoves({ classical_moves: "no" })).toThrow();
  });
});
