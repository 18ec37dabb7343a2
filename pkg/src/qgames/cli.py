"""Command-line front door.

Subcommands: solve a position, emit two-heap value tables, enumerate legal
superposed moves, run the recorded example scenarios, verify and challenge a
history file, and launch the play service. Exit codes: 0 success, 1 domain
error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .example_suite import run_all
from .games.base import NotationError, PlayerId, UsageError
from .notation import (
    format_qmove,
    parse_any_position,
    parse_qmove,
    parse_ruleset,
    ruleset_flags,
)
from .quantum import QMoveRejected, RulesetKind, enumerate_qmoves
from .referee import History, exhibit_runs, replay_history, verdict_json
from .solver import (
    TranspositionTable,
    grundy,
    outcome,
    table_csv,
    table_json,
    value_table,
)

_KIND_BY_FLAG = {k.flag: k for k in RulesetKind}


def _json_out(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def cmd_solve(args) -> int:
    game, S = parse_any_position(args.game)
    r = parse_ruleset(args.ruleset, args.width)
    tt = TranspositionTable()
    out = outcome(S, r, tt)
    result = {"game": args.game, "ruleset": args.ruleset, "outcome": out.value}
    if r.width is not None:
        result["width"] = r.width
    else:
        result["width"] = "max"
    if game.impartial:
        result["grundy"] = grundy(S, r, tt)
    if args.format == "json":
        sys.stdout.write(_json_out(result))
    else:
        if game.impartial:
            print(f"grundy={result['grundy']} outcome={out.value}")
        else:
            print(f"outcome={out.value}")
    return 0


def cmd_table(args) -> int:
    if args.ruleset == "classical":
        raise UsageError("tables are defined for the superposed rulesets")
    kind = _KIND_BY_FLAG.get(args.ruleset)
    if kind is None:
        raise NotationError(f"unknown ruleset '{args.ruleset}'", token=args.ruleset)
    width = None if args.width == "max" else int(args.width)
    values = value_table(args.imax, args.jmax, kind, width)
    if args.format == "json":
        sys.stdout.write(table_json(values, kind, width))
    elif args.format == "csv":
        sys.stdout.write(table_csv(values))
    else:
        cell = max(2, len(str(max(max(row) for row in values))))
        header = "i\\j " + " ".join(f"{j:>{cell}}" for j in range(args.jmax + 1))
        print(header)
        for i, row in enumerate(values):
            print(f"{i:>3} " + " ".join(f"{v:>{cell}}" for v in row))
    return 0


def cmd_legal(args) -> int:
    game, S = parse_any_position(args.game)
    r = parse_ruleset(args.ruleset, args.width)
    who = PlayerId[args.player]
    moves = enumerate_qmoves(S, who, r)
    if args.format == "json":
        sys.stdout.write(_json_out({"qmoves": [format_qmove(game, q) for q in moves]}))
    else:
        for q in moves:
            print(format_qmove(game, q))
        if not moves:
            print(f"(no legal moves: {who.value} to move loses here)")
    return 0


def cmd_examples(args) -> int:
    results = run_all()
    failed = 0
    for scenario, checks in results:
        for check in checks:
            ok = "PASS" if check.passed else "FAIL"
            print(f"[{ok}] {scenario}: {check.name}")
            if not check.passed:
                failed += 1
                print(f"       {check.detail}")
    total = sum(len(c) for _, c in results)
    print(f"{total - failed}/{total} checks passed")
    return 0 if failed == 0 else 1


def cmd_verify(args) -> int:
    with open(args.history, encoding="utf-8") as fh:
        doc = json.load(fh)
    game, S0 = parse_any_position(doc["initial"])
    if len(S0) != 1:
        raise UsageError("history files start from a classical position")
    r = parse_ruleset(doc.get("ruleset", "D"), doc.get("width", 2))
    first = PlayerId[doc.get("first", "LEFT")]
    moves = doc.get("moves", [])
    h = History.start(game, S0.realisations[0], r, first)
    for text in moves[:-1]:
        q = parse_qmove(game, text, h.next_mover)
        try:
            h = h.append(q)
        except QMoveRejected as exc:
            print(f"illegal move {text}: {exc.reason.value}", file=sys.stderr)
            return 1
    result = {"realisations": [p.encode() for p in replay_history(h).realisations]}
    if moves:
        challenged = parse_qmove(game, moves[-1], h.next_mover)
        verdict = exhibit_runs(h, challenged)
        result["challenged"] = moves[-1]
        result["verdict"] = verdict_json(game, verdict)
    sys.stdout.write(_json_out(result))
    return 0


def cmd_serve(args) -> int:
    import os

    import uvicorn

    from .service import create_app

    port = args.port or int(os.environ.get("PORT", "8000"))
    app = create_app(
        journal_dir=os.environ.get("JOURNAL_DIR"), static_dir=args.static
    )
    uvicorn.run(app, host=args.host, port=port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgames",
        description="Solve, tabulate, referee, and serve superposed-move games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_width=True):
        p.add_argument("--ruleset", default="D", choices=ruleset_flags())
        if with_width:
            p.add_argument("--width", default="2", help="superposition cap, or 'max'")
        p.add_argument("--format", default="text", choices=["text", "json", "csv"])

    p = sub.add_parser("solve", help="outcome (and value for impartial games)")
    p.add_argument("--game", required=True, help="position string, classical or {braced}")
    add_common(p)
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("table", help="two-heap value table")
    add_common(p)
    p.add_argument("--imax", type=int, default=4)
    p.add_argument("--jmax", type=int, default=4)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("legal", help="enumerate legal superposed moves")
    p.add_argument("--game", required=True)
    p.add_argument("--player", default="LEFT", choices=["LEFT", "RIGHT"])
    add_common(p)
    p.set_defaults(fn=cmd_legal)

    p = sub.add_parser("examples", help="run the recorded example scenarios")
    p.set_defaults(fn=cmd_examples)

    p = sub.add_parser("verify", help="replay a history file and challenge its last move")
    p.add_argument("--history", required=True, help="JSON file with initial/ruleset/moves")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("serve", help="start the play service")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", default=None, help="directory of UI assets to serve at /")
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except NotationError as exc:
        token = f" (offending token: '{exc.token}')" if exc.token else ""
        print(f"error: {exc}{token}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QMoveRejected as exc:
        print(f"illegal move: {exc.reason.value}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
