// Position-string parsing into render-ready view models. These mirror the
// service's text grammar for display purposes only; no rules live here.

export interface HeapsView {
  kind: "heaps";
  heaps: number[];
}

export interface PinsView {
  kind: "pins";
  pins: boolean[];
}

export interface GridView {
  kind: "grid";
  free: Array<[number, number]>;
  width: number;
  height: number;
}

export interface StalkEdge {
  color: "blue" | "red";
  label: string;
}

export interface StalksView {
  kind: "stalks";
  stalks: StalkEdge[][];
}

export interface SumView {
  kind: "sum";
  left: BoardView;
  right: BoardView;
}

export type BoardView = HeapsView | PinsView | GridView | StalksView | SumView;

export interface CloudView {
  boards: BoardView[];
  encodings: string[];
}

export function parseBoard(text: string): BoardView {
  const at = text.indexOf(":");
  if (at < 0) throw new Error(`bad position '${text}'`);
  const game = text.slice(0, at);
  const payload = text.slice(at + 1);
  switch (game) {
    case "nim":
      return {
        kind: "heaps",
        heaps: payload.split(",").map((h) => {
          const n = Number(h);
          if (!Number.isInteger(n) || n < 0) throw new Error(`bad heap '${h}'`);
          return n;
        }),
      };
    case "octal06":
      if (!/^[01]+$/.test(payload)) throw new Error(`bad pin line '${payload}'`);
      return { kind: "pins", pins: [...payload].map((c) => c === "1") };
    case "domineering": {
      const free: Array<[number, number]> = [];
      if (payload.trim() !== "") {
        for (const part of payload.split(";")) {
          const m = /^\((-?\d+),(-?\d+)\)$/.exec(part.trim());
          if (!m) throw new Error(`bad cell '${part}'`);
          free.push([Number(m[1]), Number(m[2])]);
        }
      }
      const xs = free.map(([x]) => x);
      const ys = free.map(([, y]) => y);
      return {
        kind: "grid",
        free,
        width: free.length ? Math.max(...xs) + 1 : 0,
        height: free.length ? Math.max(...ys) + 1 : 0,
      };
    }
    case "hackenbush":
      return {
        kind: "stalks",
        stalks: payload.split("|").map((stalk) =>
          stalk === ""
            ? []
            : stalk.split(",").map((edge) => {
                const color = edge[0];
                if ((color !== "B" && color !== "R") || edge.length < 2) {
                  throw new Error(`bad edge '${edge}'`);
                }
                return {
                  color: color === "B" ? "blue" : "red",
                  label: edge.slice(1),
                } satisfies StalkEdge;
              }),
        ),
      };
    case "sum": {
      const plus = payload.indexOf("+");
      if (plus < 0) throw new Error(`bad sum '${payload}'`);
      return {
        kind: "sum",
        left: parseBoard(payload.slice(0, plus)),
        right: parseBoard(payload.slice(plus + 1)),
      };
    }
    default:
      throw new Error(`unknown game '${game}'`);
  }
}

export function realisationCloud(realisations: string[]): CloudView {
  return { boards: realisations.map(parseBoard), encodings: [...realisations] };
}
