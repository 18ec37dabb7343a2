"""Move-history tracking, run exhibition, and challenge adjudication.

A history is the sequence of q-moves played so far. A run picks one classical
move from every entry; it is valid when the picks form a legal classical play
from the initial position. The realisations of the game are exactly the end
positions of valid runs, which also equal the fold of the quantum transition
over the entries (the equality is covered by tests, not assumed here).

Challenges: the announcer of a q-move must exhibit, for every classical move
in it, a valid run after which that move is legal. Single-move announcements
additionally face the ruleset's unsuperposed-move conditions, which run over
the full realisation set.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .games.base import ClassicalGame, MoveLabel, PlayerId, Position, UsageError
from .quantum import (
    QMove,
    QMoveRejected,
    QuantumPosition,
    RulesetVariant,
    check_qmove,
    singleton,
    transition,
)


@dataclass(frozen=True)
class History:
    game: ClassicalGame
    ruleset: RulesetVariant
    initial: Position
    first: PlayerId
    entries: tuple[QMove, ...] = ()

    @staticmethod
    def start(
        game: ClassicalGame,
        initial: Position,
        ruleset: RulesetVariant,
        first: PlayerId = PlayerId.LEFT,
    ) -> "History":
        game.check_position(initial)
        return History(game, ruleset, initial, first)

    @property
    def next_mover(self) -> PlayerId:
        return self.first if len(self.entries) % 2 == 0 else self.first.opponent

    def append(self, q: QMove) -> "History":
        """New history with q appended; q must be the next mover's and legal
        at this turn."""
        if q.owner is not self.next_mover:
            raise UsageError(f"it is {self.next_mover.value}'s turn")
        rejection = check_qmove(self.replay(), q, self.ruleset)
        if rejection is not None:
            raise QMoveRejected(*rejection)
        return replace(self, entries=self.entries + (q,))

    def replay(self) -> QuantumPosition:
        state = singleton(self.game, self.initial)
        for q in self.entries:
            state = transition(state, q)
        return state


def replay_history(h: History) -> QuantumPosition:
    """Realisation set after h's entries."""
    return h.replay()


@dataclass(frozen=True)
class Run:
    """One classical choice per history entry."""

    choices: tuple[MoveLabel, ...]


def valid_runs(h: History) -> list[tuple[Run, Position]]:
    """All valid runs with their end positions, by brute-force search over
    the choice product (prefixes that die are pruned)."""
    game = h.game
    results: list[tuple[Run, Position]] = []

    def rec(i: int, pos: Position, picks: list[MoveLabel]):
        if i == len(h.entries):
            results.append((Run(tuple(picks)), pos))
            return
        for m in h.entries[i].moves:
            nxt = game.apply(pos, m)
            if nxt is not None:
                picks.append(m)
                rec(i + 1, nxt, picks)
                picks.pop()

    rec(0, h.initial, [])
    return results


@dataclass(frozen=True)
class Witness:
    branch_move: MoveLabel
    run: tuple[MoveLabel, ...]


@dataclass(frozen=True)
class ChallengeVerdict:
    upheld: bool
    witnesses: tuple[Witness, ...] = ()


def exhibit_runs(h: History, q: QMove) -> ChallengeVerdict:
    """Adjudicate the announced (not yet appended) q-move by exhibition.

    The realisation set is rebuilt here from the run search rather than taken
    from replay_history, so the verdict and the engine's legality check stay
    independent of each other.
    """
    runs = valid_runs(h)
    if not runs:
        return ChallengeVerdict(upheld=False)
    ends = {pos for _, pos in runs}
    state = QuantumPosition.of(h.game, ends)
    if check_qmove(state, q, h.ruleset) is not None:
        return ChallengeVerdict(upheld=False)
    witnesses = []
    for m in q.moves:
        witness = next(
            (
                Witness(m, run.choices)
                for run, end in runs
                if h.game.apply(end, m) is not None
            ),
            None,
        )
        if witness is None:
            return ChallengeVerdict(upheld=False)
        witnesses.append(witness)
    return ChallengeVerdict(upheld=True, witnesses=tuple(witnesses))


def adjudicate_challenge(h: History, q: QMove) -> PlayerId:
    """Winner of the challenge: the announcer when the exhibition succeeds,
    the challenger otherwise. Either way the game ends here."""
    return q.owner if exhibit_runs(h, q).upheld else q.owner.opponent


def verify_witness(h: History, witness: Witness) -> bool:
    """Replay a witness classically: every pick must be legal in order, and
    the challenged branch must be legal at the end."""
    if len(witness.run) != len(h.entries):
        return False
    pos: Optional[Position] = h.initial
    for pick, entry in zip(witness.run, h.entries):
        if pick not in entry.moves:
            return False
        pos = h.game.apply(pos, pick)
        if pos is None:
            return False
    return h.game.apply(pos, witness.branch_move) is not None


def verdict_json(game: ClassicalGame, verdict: ChallengeVerdict) -> dict:
    return {
        "upheld": verdict.upheld,
        "witnesses": [
            {
                "branch_move": game.format_move(w.branch_move),
                "run": [game.format_move(m) for m in w.run],
            }
            for w in verdict.witnesses
        ],
    }
