// Browser entry point: bind the controller to the document. State renders
// only after the server acknowledges; there is no optimistic update path.

import { ApiClient } from "./api.js";
import { GameController } from "./app.js";
import { BoardView } from "./boards.js";
import { Verdict } from "./types.js";

const api = new ApiClient("");
const controller = new GameController(api);

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderBoard(view: BoardView): HTMLElement {
  switch (view.kind) {
    case "heaps": {
      const board = el("div", "board heaps");
      view.heaps.forEach((h, i) => {
        const heap = el("div", "heap");
        heap.appendChild(el("div", "heap-label", `#${i + 1}`));
        const col = el("div", "tokens");
        for (let t = 0; t < h; t++) col.appendChild(el("div", "token"));
        if (h === 0) col.appendChild(el("div", "empty", "-"));
        heap.appendChild(col);
        board.appendChild(heap);
      });
      return board;
    }
    case "pins": {
      const board = el("div", "board pins");
      view.pins.forEach((standing, i) => {
        const pin = el("div", standing ? "pin up" : "pin down", String(i + 1));
        board.appendChild(pin);
      });
      return board;
    }
    case "grid": {
      const board = el("div", "board grid");
      const free = new Set(view.free.map(([x, y]) => `${x},${y}`));
      for (let y = view.height - 1; y >= 0; y--) {
        const row = el("div", "grid-row");
        for (let x = 0; x < view.width; x++) {
          row.appendChild(el("div", free.has(`${x},${y}`) ? "cell free" : "cell gone"));
        }
        board.appendChild(row);
      }
      if (view.free.length === 0) board.appendChild(el("div", "empty", "full"));
      return board;
    }
    case "stalks": {
      const board = el("div", "board stalks");
      for (const stalk of view.stalks) {
        const column = el("div", "stalk");
        for (const edge of [...stalk].reverse()) {
          column.appendChild(el("div", `edge ${edge.color}`, edge.label));
        }
        if (stalk.length === 0) column.appendChild(el("div", "empty", "·"));
        board.appendChild(column);
      }
      return board;
    }
    case "sum": {
      const board = el("div", "board sum");
      board.appendChild(renderBoard(view.left));
      board.appendChild(el("div", "sum-plus", "+"));
      board.appendChild(renderBoard(view.right));
      return board;
    }
  }
}

function renderVerdict(verdict: Verdict): HTMLElement {
  const box = el("div", "verdict");
  box.appendChild(
    el("div", "verdict-head", verdict.upheld ? "move upheld - challenger loses" : "move refuted - challenger wins"),
  );
  for (const witness of verdict.witnesses) {
    const run = witness.run.length ? witness.run.join(" , ") : "(empty run)";
    box.appendChild(
      el("div", "witness", `branch ${witness.branch_move}: run ${run}`),
    );
  }
  return box;
}

function render(): void {
  const view = controller.view();
  const status = document.getElementById("status")!;
  status.textContent = controller.statusLine();

  const notice = document.getElementById("notice")!;
  notice.textContent = view.notice ?? "";

  const cloud = document.getElementById("cloud")!;
  cloud.replaceChildren();
  if (view.cloud) {
    view.cloud.boards.forEach((board, i) => {
      const card = el("div", "realisation");
      card.appendChild(renderBoard(board));
      card.appendChild(el("div", "encoding", view.cloud!.encodings[i]!));
      cloud.appendChild(card);
    });
  }

  const moves = document.getElementById("moves")!;
  moves.replaceChildren();
  if (view.legal) {
    for (const move of view.legal.classical_moves) {
      const button = el("button", controller.composer.isSelected(move) ? "move selected" : "move");
      button.textContent = move;
      button.onclick = () => {
        controller.toggleMove(move);
        render();
      };
      moves.appendChild(button);
    }
  }

  (document.getElementById("announce") as HTMLButtonElement).disabled =
    !controller.canAnnounce();
  (document.getElementById("challenge") as HTMLButtonElement).disabled =
    !controller.canChallenge();

  const verdictBox = document.getElementById("verdict")!;
  verdictBox.replaceChildren();
  if (view.verdict) verdictBox.appendChild(renderVerdict(view.verdict));

  const historyBox = document.getElementById("history")!;
  historyBox.replaceChildren();
  if (view.session) {
    for (const move of view.session.history) {
      historyBox.appendChild(el("li", "past-move", move));
    }
  }
}

async function act(action: () => Promise<unknown>): Promise<void> {
  try {
    await action();
  } catch (error) {
    document.getElementById("notice")!.textContent = String(error);
  }
  render();
}

function bind(): void {
  const form = document.getElementById("setup") as HTMLFormElement;
  form.onsubmit = (event) => {
    event.preventDefault();
    const data = new FormData(form);
    void act(() =>
      controller.start({
        game: String(data.get("game") || "nim:2,2"),
        ruleset: String(data.get("ruleset") || "D"),
        width: data.get("width") === "max" ? "max" : Number(data.get("width") || 2),
        mode: data.get("mode") === "human-vs-engine" ? "human-vs-engine" : "human-vs-human",
        engine_side: "RIGHT",
      }),
    );
  };
  document.getElementById("announce")!.onclick = () => void act(() => controller.announce());
  document.getElementById("challenge")!.onclick = () => void act(() => controller.challenge());
  document.getElementById("hint")!.onclick = () => void act(() => controller.hint());
  document.getElementById("refresh")!.onclick = () => void act(() => controller.refresh());
}

bind();
render();
