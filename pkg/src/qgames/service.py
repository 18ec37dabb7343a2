"""Session-oriented JSON-over-HTTP play service.

Two validation modes:

* strict — the server checks each submitted move against the realisation set
  and rejects illegal ones immediately (default for human-vs-engine). A
  challenge adjudicates the opponent's latest accepted move, so it is always
  upheld and the challenger loses.
* honor — a submitted move is only announced (held pending). The opponent
  either challenges it (the announcer wins exactly when the exhibition
  succeeds, and the game ends) or answers with a move, which first commits
  the pending one. A pending move that fails commit-time validation never
  enters the history.

Requests on one session are serialized; distinct sessions run concurrently.
Sessions live in memory, with an optional append-only journal per session for
crash recovery.
"""
from __future__ import annotations

import json
import os
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal, Optional, Union

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .games.base import ClassicalGame, NotationError, PlayerId, UsageError
from .notation import format_qmove, parse_any_position, parse_qmove, parse_ruleset
from .quantum import (
    QMove,
    QMoveRejected,
    available_classical_moves,
    check_qmove,
    enumerate_qmoves,
    transition,
)
from .referee import History, exhibit_runs, replay_history, verdict_json
from .solver import TranspositionTable, best_move


class CreateSessionBody(BaseModel):
    game: str
    ruleset: str = "D"
    width: Union[int, Literal["max"], None] = 2
    mode: Literal["human-vs-human", "human-vs-engine"] = "human-vs-human"
    engine_side: Literal["LEFT", "RIGHT"] = "RIGHT"
    first: Literal["LEFT", "RIGHT"] = "LEFT"
    validation: Optional[Literal["strict", "honor"]] = None


class MoveBody(BaseModel):
    qmove: str


@dataclass
class Session:
    id: str
    game: ClassicalGame
    initial_text: str
    ruleset_flag: str
    width: Union[int, str]
    mode: str
    engine_side: Optional[PlayerId]
    validation: str
    history: History
    pending: Optional[QMove] = None
    winner: Optional[PlayerId] = None
    finished: bool = False
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def turn(self) -> Optional[PlayerId]:
        if self.finished:
            return None
        if self.pending is not None:
            return self.pending.owner.opponent
        return self.history.next_mover

    def to_json(self) -> dict:
        realisations = [p.encode() for p in replay_history(self.history).realisations]
        status = "FINISHED" if self.finished else f"AWAITING_{self.turn.value}"
        return {
            "id": self.id,
            "game": self.game.game_id,
            "initial": self.initial_text,
            "ruleset": self.ruleset_flag,
            "width": self.width,
            "mode": self.mode,
            "engine_side": self.engine_side.value if self.engine_side else None,
            "validation": self.validation,
            "first": self.history.first.value,
            "status": status,
            "turn": self.turn.value if self.turn else None,
            "winner": self.winner.value if self.winner else None,
            "realisations": realisations,
            "history": [format_qmove(self.game, q) for q in self.history.entries],
            "pending": format_qmove(self.game, self.pending) if self.pending else None,
            "pending_by": self.pending.owner.value if self.pending else None,
        }


def _reject(status: int, reason: str, branch: Optional[str] = None):
    raise HTTPException(
        status_code=status, detail={"reason": reason, "offending_branch": branch}
    )


class SessionStore:
    def __init__(self, journal_dir: Optional[str] = None):
        self.sessions: dict[str, Session] = {}
        self.tt = TranspositionTable()
        self.journal_dir = Path(journal_dir) if journal_dir else None
        if self.journal_dir:
            self.journal_dir.mkdir(parents=True, exist_ok=True)
            self._recover()

    # -- journal ----------------------------------------------------------

    def _journal(self, session_id: str, event: dict):
        if not self.journal_dir:
            return
        with open(self.journal_dir / f"{session_id}.jsonl", "a", encoding="utf-8") as fh:
            fh.write(json.dumps(event, sort_keys=True) + "\n")

    def _recover(self):
        for path in sorted(self.journal_dir.glob("*.jsonl")):
            try:
                events = [json.loads(line) for line in path.read_text().splitlines() if line]
            except json.JSONDecodeError:
                continue
            if not events or events[0].get("event") != "create":
                continue
            session = self._build(events[0], session_id=path.stem)
            for event in events[1:]:
                kind = event.get("event")
                if kind == "announce":
                    session.pending = parse_qmove(
                        session.game, event["qmove"], PlayerId[event["by"]]
                    )
                elif kind == "commit":
                    q = parse_qmove(session.game, event["qmove"], PlayerId[event["by"]])
                    session.history = session.history.append(q)
                    session.pending = None
                    self._maybe_finish(session)
                elif kind == "finish":
                    session.finished = True
                    session.winner = PlayerId[event["winner"]] if event.get("winner") else None
            self.sessions[session.id] = session

    # -- session construction ---------------------------------------------

    def _build(self, cfg: dict, session_id: Optional[str] = None) -> Session:
        game, S = parse_any_position(cfg["game"])
        if len(S) != 1:
            raise UsageError("sessions start from a classical position")
        ruleset = parse_ruleset(cfg["ruleset"], cfg["width"])
        width = "max" if ruleset.width is None else ruleset.width
        mode = cfg.get("mode", "human-vs-human")
        validation = cfg.get("validation") or (
            "strict" if mode == "human-vs-engine" else "honor"
        )
        engine_side = PlayerId[cfg["engine_side"]] if mode == "human-vs-engine" else None
        history = History.start(game, S.realisations[0], ruleset, PlayerId[cfg["first"]])
        return Session(
            id=session_id or uuid.uuid4().hex,
            game=game,
            initial_text=cfg["game"],
            ruleset_flag=cfg["ruleset"],
            width=width,
            mode=mode,
            engine_side=engine_side,
            validation=validation,
            history=history,
        )

    def create(self, body: CreateSessionBody) -> Session:
        cfg = {
            "game": body.game,
            "ruleset": body.ruleset,
            "width": body.width,
            "mode": body.mode,
            "engine_side": body.engine_side,
            "first": body.first,
            "validation": body.validation,
        }
        session = self._build(cfg)
        self.sessions[session.id] = session
        self._journal(session.id, {"event": "create", **{k: v for k, v in cfg.items()}})
        with session.lock:
            self._maybe_finish(session)
            self._engine_turn(session)
        return session

    def get(self, session_id: str) -> Session:
        session = self.sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail={"reason": "NO_SUCH_SESSION"})
        return session

    # -- game flow ----------------------------------------------------------

    def _maybe_finish(self, session: Session):
        if session.finished:
            return
        mover = session.history.next_mover
        state = replay_history(session.history)
        if not enumerate_qmoves(state, mover, session.history.ruleset):
            session.finished = True
            session.winner = mover.opponent
            self._journal(
                session.id, {"event": "finish", "winner": session.winner.value}
            )

    def _commit(self, session: Session, q: QMove):
        try:
            session.history = session.history.append(q)
        except QMoveRejected as exc:
            branch = session.game.format_move(exc.branch) if exc.branch else None
            _reject(409, exc.reason.value, branch)
        session.pending = None
        self._journal(
            session.id,
            {"event": "commit", "qmove": format_qmove(session.game, q), "by": q.owner.value},
        )
        self._maybe_finish(session)

    def _engine_turn(self, session: Session):
        while (
            not session.finished
            and session.mode == "human-vs-engine"
            and session.history.next_mover is session.engine_side
        ):
            state = replay_history(session.history)
            q = best_move(state, session.engine_side, session.history.ruleset, self.tt)
            if q is None:
                self._maybe_finish(session)
                return
            self._commit(session, q)

    def submit_move(self, session: Session, text: str) -> Session:
        with session.lock:
            if session.finished:
                _reject(409, "GAME_OVER")
            mover = session.turn
            if session.mode == "human-vs-engine" and mover is session.engine_side:
                _reject(409, "NOT_YOUR_TURN")
            try:
                q = parse_qmove(session.game, text, mover)
            except NotationError as exc:
                raise HTTPException(
                    status_code=400, detail={"reason": "BAD_MOVE", "message": str(exc)}
                ) from exc
            if session.validation == "honor":
                if session.pending is not None:
                    self._commit(session, session.pending)  # acceptance by answering
                    if session.finished:
                        _reject(409, "GAME_OVER")
                session.pending = q
                self._journal(
                    session.id,
                    {
                        "event": "announce",
                        "qmove": format_qmove(session.game, q),
                        "by": q.owner.value,
                    },
                )
            else:
                self._commit(session, q)
                self._engine_turn(session)
            return session

    def challenge(self, session: Session) -> dict:
        with session.lock:
            if session.finished:
                _reject(409, "GAME_OVER")
            if session.pending is not None:
                challenged = session.pending
                h = session.history
            elif session.history.entries:
                challenged = session.history.entries[-1]
                if challenged.owner is session.turn:
                    _reject(409, "NOTHING_TO_CHALLENGE")
                h = History(
                    session.game,
                    session.history.ruleset,
                    session.history.initial,
                    session.history.first,
                    session.history.entries[:-1],
                )
            else:
                _reject(409, "NOTHING_TO_CHALLENGE")
            verdict = exhibit_runs(h, challenged)
            session.finished = True
            session.winner = challenged.owner if verdict.upheld else challenged.owner.opponent
            session.pending = None
            self._journal(
                session.id, {"event": "finish", "winner": session.winner.value}
            )
            return verdict_json(session.game, verdict)

    def hint(self, session: Session) -> Optional[str]:
        with session.lock:
            if session.finished:
                _reject(409, "GAME_OVER")
            if session.pending is not None:
                _reject(409, "PENDING_DECISION")
            state = replay_history(session.history)
            q = best_move(state, session.history.next_mover, session.history.ruleset, self.tt)
            return format_qmove(session.game, q) if q else None

    def legal_moves(self, session: Session) -> dict:
        with session.lock:
            if session.finished:
                return {"classical_moves": [], "qmoves": []}
            state = replay_history(session.history)
            mover = session.history.next_mover
            if session.pending is not None:
                if check_qmove(state, session.pending, session.history.ruleset) is None:
                    state = transition(state, session.pending)
                    mover = session.pending.owner.opponent
            classical = available_classical_moves(state, mover)
            qmoves = enumerate_qmoves(state, mover, session.history.ruleset)
            return {
                "classical_moves": [session.game.format_move(m) for m in classical],
                "qmoves": [format_qmove(session.game, q) for q in qmoves[:500]],
                "qmove_count": len(qmoves),
            }


def create_app(journal_dir: Optional[str] = None, static_dir: Optional[str] = None) -> FastAPI:
    store = SessionStore(journal_dir=journal_dir)
    app = FastAPI(title="qgames play service")
    app.state.store = store

    @app.post("/sessions")
    def create_session(body: CreateSessionBody):
        try:
            session = store.create(body)
        except NotationError as exc:
            raise HTTPException(
                status_code=400,
                detail={"reason": "BAD_POSITION", "message": str(exc), "token": exc.token},
            ) from exc
        except UsageError as exc:
            raise HTTPException(
                status_code=400, detail={"reason": "BAD_CONFIG", "message": str(exc)}
            ) from exc
        return session.to_json()

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        return store.get(session_id).to_json()

    @app.post("/sessions/{session_id}/moves")
    def post_move(session_id: str, body: MoveBody):
        session = store.get(session_id)
        return store.submit_move(session, body.qmove).to_json()

    @app.post("/sessions/{session_id}/challenge")
    def post_challenge(session_id: str):
        session = store.get(session_id)
        verdict = store.challenge(session)
        return {"verdict": verdict, "session": session.to_json()}

    @app.get("/sessions/{session_id}/hint")
    def get_hint(session_id: str):
        session = store.get(session_id)
        return {"qmove": store.hint(session)}

    @app.get("/sessions/{session_id}/legal-moves")
    def get_legal(session_id: str):
        session = store.get(session_id)
        return store.legal_moves(session)

    if static_dir and os.path.isdir(static_dir):
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
