"""Superposed play over classical games.

A quantum position is the deduplicated set of classical realisations reachable
so far; a q-move is a nonempty set of classical moves played as one turn.
Playing a q-move keeps, for every (realisation, branch move) pair, the
successors where the branch is legal, and drops everything else.

Five legality variants differ only in when a single-move q-move is allowed:

    A   never
    B   only when it is the mover's sole available move
    C   only when it is legal in every realisation
    C'  only when it is legal in every realisation where the mover can move
    D   always (when the move is available at all)

Multi-move q-moves are legal in all variants as soon as every member is legal
in at least one realisation.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .games.base import ClassicalGame, MoveLabel, PlayerId, Position, UsageError


class RulesetKind(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    CPRIME = "Cp"
    D = "D"

    @property
    def flag(self) -> str:
        return self.value


KINDS_WITH_REMOVAL = frozenset((RulesetKind.A, RulesetKind.B, RulesetKind.D))


@dataclass(frozen=True, slots=True)
class RulesetVariant:
    """Legality kind plus an optional cap on superposition size.

    width None means unbounded. Kinds A and B need width >= 2: a width-1 game
    of kind A has no legal moves at all, and kind B almost none.
    """

    kind: RulesetKind
    width: Optional[int] = None

    def __post_init__(self):
        if self.width is not None:
            if self.width < 1:
                raise UsageError(f"width must be positive, got {self.width}")
            if self.width < 2 and self.kind in (RulesetKind.A, RulesetKind.B):
                raise UsageError(f"kind {self.kind.flag} needs width >= 2")

    def describe(self) -> str:
        return f"{self.kind.flag}|{'max' if self.width is None else self.width}"


class RejectionReason(enum.Enum):
    WIDTH_EXCEEDED = "WIDTH_EXCEEDED"
    UNSUPERPOSED_FORBIDDEN = "UNSUPERPOSED_FORBIDDEN"
    NO_SUPPORT = "NO_SUPPORT"
    NOT_UNIVERSAL = "NOT_UNIVERSAL"


class QMoveRejected(Exception):
    def __init__(self, reason: RejectionReason, branch: Optional[MoveLabel] = None):
        super().__init__(reason.value)
        self.reason = reason
        self.branch = branch


@dataclass(frozen=True, slots=True, eq=False)
class QMove:
    """A superposition of classical moves announced as one turn."""

    moves: tuple[MoveLabel, ...]
    owner: PlayerId
    cached_hash: int = field(init=False, repr=False, default=0)

    def __post_init__(self):
        object.__setattr__(self, "cached_hash", hash((self.moves, self.owner)))

    def __eq__(self, other):
        if not isinstance(other, QMove):
            return NotImplemented
        return self.moves == other.moves and self.owner is other.owner

    def __hash__(self):
        return self.cached_hash

    @staticmethod
    def of(moves: Iterable[MoveLabel], owner: PlayerId) -> "QMove":
        unique = sorted(set(moves))
        if not unique:
            raise UsageError("a q-move needs at least one classical move")
        game_ids = {m.game_id for m in unique}
        if len(game_ids) != 1:
            raise UsageError(f"q-move mixes games {sorted(game_ids)}")
        for m in unique:
            if owner not in m.owner:
                raise UsageError(f"{owner.value} does not own move {m.payload}")
        return QMove(tuple(unique), owner)

    def __len__(self) -> int:
        return len(self.moves)


@dataclass(frozen=True, eq=False)
class QuantumPosition:
    """Nonempty, deduplicated, canonically sorted set of realisations."""

    game: ClassicalGame
    game_id: str
    realisations: tuple[Position, ...]
    cached_hash: int = field(init=False, repr=False, default=0)

    def __post_init__(self):
        object.__setattr__(self, "cached_hash", hash((self.game_id, self.realisations)))

    def __eq__(self, other):
        if not isinstance(other, QuantumPosition):
            return NotImplemented
        return self.game_id == other.game_id and self.realisations == other.realisations

    def __hash__(self):
        return self.cached_hash

    @staticmethod
    def of(game: ClassicalGame, realisations: Iterable[Position]) -> "QuantumPosition":
        unique = frozenset(game.intern_position(pos) for pos in realisations)
        if not unique:
            raise UsageError("a quantum position needs at least one realisation")
        for pos in unique:
            if pos.game_id != game.game_id:
                raise UsageError(
                    f"realisation of game '{pos.game_id}' in a '{game.game_id}' superposition"
                )
        return _intern(game, unique)

    def encode(self) -> str:
        return "{" + " | ".join(p.encode() for p in self.realisations) + "}"

    def __len__(self) -> int:
        return len(self.realisations)


_INTERNED: dict[tuple[str, frozenset], QuantumPosition] = {}


def _intern(game: ClassicalGame, realisations: frozenset) -> QuantumPosition:
    """One QuantumPosition object per distinct realisation set, so repeated
    transitions skip re-sorting and share cached hashes."""
    key = (game.game_id, realisations)
    hit = _INTERNED.get(key)
    if hit is None:
        ordered = tuple(sorted(realisations, key=Position.encode))
        hit = QuantumPosition(game, game.game_id, ordered)
        _INTERNED[key] = hit
    return hit


def singleton(game: ClassicalGame, pos: Position) -> QuantumPosition:
    return QuantumPosition.of(game, [pos])


def available_classical_moves(S: QuantumPosition, who: PlayerId) -> list[MoveLabel]:
    """Classical moves legal in at least one realisation, sorted."""
    moves: set[MoveLabel] = set()
    for pos in S.realisations:
        moves.update(S.game.cached_legal_moves(pos, who))
    return sorted(moves)


def _legal_everywhere(S: QuantumPosition, m: MoveLabel) -> bool:
    game = S.game
    return all(m in game.cached_transitions(pos) for pos in S.realisations)


def _legal_wherever_mover_can_move(S: QuantumPosition, m: MoveLabel, who: PlayerId) -> bool:
    game = S.game
    return all(
        m in game.cached_transitions(pos)
        for pos in S.realisations
        if game.cached_legal_moves(pos, who)
    )


def check_qmove(
    S: QuantumPosition, q: QMove, r: RulesetVariant
) -> Optional[tuple[RejectionReason, Optional[MoveLabel]]]:
    """None when q is legal on S under r, else (reason, offending branch)."""
    for m in q.moves:
        if m.game_id != S.game_id:
            raise UsageError(
                f"q-move of game '{m.game_id}' on a '{S.game_id}' position"
            )
    if r.width is not None and len(q) > r.width:
        return (RejectionReason.WIDTH_EXCEEDED, None)
    available = set(available_classical_moves(S, q.owner))
    for m in q.moves:
        if m not in available:
            return (RejectionReason.NO_SUPPORT, m)
    if len(q) == 1:
        m = q.moves[0]
        kind = r.kind
        if kind is RulesetKind.A:
            return (RejectionReason.UNSUPERPOSED_FORBIDDEN, m)
        if kind is RulesetKind.B and available != {m}:
            return (RejectionReason.UNSUPERPOSED_FORBIDDEN, m)
        if kind is RulesetKind.C and not _legal_everywhere(S, m):
            return (RejectionReason.NOT_UNIVERSAL, m)
        if kind is RulesetKind.CPRIME and not _legal_wherever_mover_can_move(S, m, q.owner):
            return (RejectionReason.NOT_UNIVERSAL, m)
    return None


def is_legal_qmove(S: QuantumPosition, q: QMove, r: RulesetVariant) -> bool:
    return check_qmove(S, q, r) is None


def transition(S: QuantumPosition, q: QMove) -> QuantumPosition:
    """Successor realisation set, assuming q is legal on S."""
    game = S.game
    successors = set()
    for pos in S.realisations:
        row = game.cached_transitions(pos)
        for m in q.moves:
            nxt = row.get(m)
            if nxt is not None:
                successors.add(nxt)
    return _intern(game, frozenset(successors))


def apply_qmove(S: QuantumPosition, q: QMove, r: RulesetVariant) -> QuantumPosition:
    """Play q on S; raises QMoveRejected with a reason code when illegal."""
    rejection = check_qmove(S, q, r)
    if rejection is not None:
        raise QMoveRejected(*rejection)
    return transition(S, q)


def enumerate_qmoves(S: QuantumPosition, who: PlayerId, r: RulesetVariant) -> list[QMove]:
    """All legal q-moves for `who`, singletons first, then by size and label
    order. An empty result means `who` loses here."""
    available = available_classical_moves(S, who)
    kind = r.kind
    out: list[QMove] = []
    if kind is RulesetKind.D:
        singles = available
    elif kind is RulesetKind.B:
        singles = available if len(available) == 1 else []
    elif kind is RulesetKind.C:
        singles = [m for m in available if _legal_everywhere(S, m)]
    elif kind is RulesetKind.CPRIME:
        singles = [m for m in available if _legal_wherever_mover_can_move(S, m, who)]
    else:
        singles = []
    out.extend(QMove((m,), who) for m in singles)
    top = len(available) if r.width is None else min(r.width, len(available))
    for size in range(2, top + 1):
        out.extend(QMove(combo, who) for combo in itertools.combinations(available, size))
    return out


@dataclass
class CoveredMemo:
    """Cache for the covered relation; hits must equal fresh recomputation."""

    cache: dict = field(default_factory=dict)


def is_covered(
    g1: Position,
    rest: Iterable[Position],
    game: ClassicalGame,
    memo: Optional[CoveredMemo] = None,
) -> bool:
    """Whether g1 adds nothing to a superposition also containing `rest`:
    every legal move on g1 is matched, recursively, by moves supported in the
    other realisations (or g1 has no legal moves at all)."""
    memo = memo if memo is not None else CoveredMemo()
    rest_set = frozenset(rest)

    def rec(pos: Position, others: frozenset) -> bool:
        key = (pos, others)
        hit = memo.cache.get(key)
        if hit is not None:
            return hit
        row = game.cached_transitions(pos)
        result = True
        for m in row:
            next_rest = frozenset(
                nxt
                for other in others
                if (nxt := game.cached_transitions(other).get(m)) is not None
            )
            if not next_rest or not rec(row[m], next_rest):
                result = False
                break
        memo.cache[key] = result
        return result

    return rec(g1, rest_set)


def canonicalize(
    S: QuantumPosition,
    r: RulesetVariant,
    memo: Optional[CoveredMemo] = None,
) -> QuantumPosition:
    """Drop covered realisations, which is value-preserving for kinds A, B
    and D only; positions under C and C' are returned unchanged. Scans in
    ascending encoding order and rescans after each removal."""
    if r.kind not in KINDS_WITH_REMOVAL or len(S) == 1:
        return S
    memo = memo if memo is not None else CoveredMemo()
    reals = list(S.realisations)
    changed = True
    while changed and len(reals) > 1:
        changed = False
        for i, pos in enumerate(reals):
            rest = reals[:i] + reals[i + 1:]
            if is_covered(pos, rest, S.game, memo):
                del reals[i]
                changed = True
                break
    return QuantumPosition.of(S.game, reals)
