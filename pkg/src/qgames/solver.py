"""Outcome and value computation over quantum positions.

Depth-first search with explicit memoization; depth is bounded by the game's
birthday, which is small at desk scale. Memo keys combine the canonical
realisation set with the ruleset kind and width (plus the mover for win/loss
bits), so one table can be shared freely across queries.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .games.base import ClassicalGame, PlayerId, Position, UsageError
from .games.nim import NIM, NimPosition
from .games.sums import SumPosition, make_sum
from .quantum import (
    KINDS_WITH_REMOVAL,
    CoveredMemo,
    QMove,
    QuantumPosition,
    RulesetKind,
    RulesetVariant,
    canonicalize,
    enumerate_qmoves,
    singleton,
    transition,
)


class Outcome(enum.Enum):
    N = "N"  # first player wins
    P = "P"  # second player wins
    L = "L"  # Left wins no matter who starts
    R = "R"  # Right wins no matter who starts


def mex(values: Iterable[int]) -> int:
    """Least nonnegative integer not in `values`."""
    present = set(values)
    k = 0
    while k in present:
        k += 1
    return k


@dataclass
class TranspositionTable:
    grundy_cache: dict = field(default_factory=dict)
    win_cache: dict = field(default_factory=dict)
    covered: CoveredMemo = field(default_factory=CoveredMemo)


def grundy(
    S: QuantumPosition,
    r: RulesetVariant,
    tt: Optional[TranspositionTable] = None,
    *,
    use_canonical: bool = True,
) -> int:
    """Value of an impartial quantum position under r.

    With use_canonical (the default), covered realisations are dropped before
    lookup for kinds A/B/D, which is value-preserving there; pass False to
    evaluate positions exactly as given.
    """
    if not S.game.impartial:
        raise UsageError("grundy needs an impartial game; use outcome() instead")
    tt = tt if tt is not None else TranspositionTable()
    reduce = use_canonical and r.kind in KINDS_WITH_REMOVAL
    cache = tt.grundy_cache

    def rec(pos: QuantumPosition) -> int:
        if reduce:
            pos = canonicalize(pos, r, tt.covered)
        key = (pos, r.kind, r.width)
        hit = cache.get(key)
        if hit is not None:
            return hit
        options = {
            rec(transition(pos, q)) for q in enumerate_qmoves(pos, PlayerId.LEFT, r)
        }
        value = mex(options)
        cache[key] = value
        return value

    return rec(S)


def wins_moving_first(
    S: QuantumPosition,
    who: PlayerId,
    r: RulesetVariant,
    tt: Optional[TranspositionTable] = None,
    *,
    use_canonical: bool = True,
) -> bool:
    """Whether `who`, to move on S, can force a win."""
    tt = tt if tt is not None else TranspositionTable()
    reduce = use_canonical and r.kind in KINDS_WITH_REMOVAL
    cache = tt.win_cache

    def rec(pos: QuantumPosition, mover: PlayerId) -> bool:
        if reduce:
            pos = canonicalize(pos, r, tt.covered)
        key = (pos, r.kind, r.width, mover)
        hit = cache.get(key)
        if hit is not None:
            return hit
        result = any(
            not rec(transition(pos, q), mover.opponent)
            for q in enumerate_qmoves(pos, mover, r)
        )
        cache[key] = result
        return result

    return rec(S, who)


def outcome(
    S: QuantumPosition, r: RulesetVariant, tt: Optional[TranspositionTable] = None
) -> Outcome:
    """Outcome class from the two first-player win bits."""
    tt = tt if tt is not None else TranspositionTable()
    left_starts = wins_moving_first(S, PlayerId.LEFT, r, tt)
    right_starts = wins_moving_first(S, PlayerId.RIGHT, r, tt)
    if left_starts and right_starts:
        return Outcome.N
    if not left_starts and not right_starts:
        return Outcome.P
    return Outcome.L if left_starts else Outcome.R


def best_move(
    S: QuantumPosition,
    who: PlayerId,
    r: RulesetVariant,
    tt: Optional[TranspositionTable] = None,
) -> Optional[QMove]:
    """A winning q-move when one exists, else the first legal q-move, else
    None (meaning `who` has lost)."""
    tt = tt if tt is not None else TranspositionTable()
    moves = enumerate_qmoves(S, who, r)
    if not moves:
        return None
    for q in moves:
        if not wins_moving_first(transition(S, q), who.opponent, r, tt):
            return q
    return moves[0]


def value_table(
    imax: int,
    jmax: int,
    kind: RulesetKind,
    width: Optional[int] = 2,
    tt: Optional[TranspositionTable] = None,
) -> list[list[int]]:
    """Grundy values of two-heap token positions (i, j) for 0 <= i <= imax,
    0 <= j <= jmax, under the given kind and width cap."""
    if imax < 0 or jmax < 0:
        raise UsageError("table bounds must be nonnegative")
    tt = tt if tt is not None else TranspositionTable()
    r = RulesetVariant(kind, width)
    return [
        [grundy(singleton(NIM, NimPosition((i, j))), r, tt) for j in range(jmax + 1)]
        for i in range(imax + 1)
    ]


def table_csv(values: list[list[int]]) -> str:
    jmax = len(values[0]) - 1 if values else -1
    lines = ["i\\j," + ",".join(str(j) for j in range(jmax + 1))]
    for i, row in enumerate(values):
        lines.append(f"{i}," + ",".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def table_json(values: list[list[int]], kind: RulesetKind, width: Optional[int]) -> str:
    payload = {
        "game": "nim-two-heaps",
        "ruleset": kind.flag,
        "width": "max" if width is None else width,
        "imax": len(values) - 1,
        "jmax": len(values[0]) - 1 if values else -1,
        "values": values,
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _compound_grundy(
    s1: QuantumPosition, s2: QuantumPosition, r: RulesetVariant, cache: dict
) -> int:
    """Selective compound of two quantum games: a turn plays a legal q-move
    in one component, or in both simultaneously."""
    key = (s1, s2)
    hit = cache.get(key)
    if hit is not None:
        return hit
    moves1 = enumerate_qmoves(s1, PlayerId.LEFT, r)
    moves2 = enumerate_qmoves(s2, PlayerId.LEFT, r)
    options = set()
    for q1 in moves1:
        options.add(_compound_grundy(transition(s1, q1), s2, r, cache))
    for q2 in moves2:
        options.add(_compound_grundy(s1, transition(s2, q2), r, cache))
    for q1 in moves1:
        n1 = transition(s1, q1)
        for q2 in moves2:
            options.add(_compound_grundy(n1, transition(s2, q2), r, cache))
    value = mex(options)
    cache[key] = value
    return value


def compare_product_claim(
    game1: ClassicalGame,
    pos1: Position,
    game2: ClassicalGame,
    pos2: Position,
    bound: int = 10,
    tt: Optional[TranspositionTable] = None,
) -> dict:
    """Compare, under unbounded kind-D play, the superposed lift of the
    classical sum against the selective compound of the two separately lifted
    games. Equality between the two is reported, never assumed: cross-operand
    superpositions in the lifted sum correlate realisations across operands in
    a way the independent compound cannot express.
    """
    if not (game1.impartial and game2.impartial):
        raise UsageError("product comparison is defined for impartial games")
    if game1.measure(pos1) > bound or game2.measure(pos2) > bound:
        raise UsageError(f"operands exceed the size bound {bound}")
    r = RulesetVariant(RulesetKind.D, None)
    sum_game = make_sum(game1, game2)
    lifted_sum = singleton(sum_game, SumPosition(pos1, pos2))
    lhs = grundy(lifted_sum, r, tt)
    rhs = _compound_grundy(singleton(game1, pos1), singleton(game2, pos2), r, {})
    return {
        "lhs": lifted_sum.encode(),
        "rhs": f"{singleton(game1, pos1).encode()} (x) {singleton(game2, pos2).encode()}",
        "lhs_value": lhs,
        "rhs_value": rhs,
        "equal": lhs == rhs,
    }
