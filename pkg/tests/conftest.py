from __future__ import annotations

import random

import pytest

from qgames.games.base import PlayerId
from qgames.games.nim import NIM, NimPosition
from qgames.games.octal06 import OCTAL06, PinLinePosition
from qgames.quantum import (
    QMove,
    QuantumPosition,
    RulesetKind,
    RulesetVariant,
    enumerate_qmoves,
    singleton,
)
from qgames.referee import History, replay_history

ALL_KINDS = list(RulesetKind)


def nim_qpos(*heap_tuples) -> QuantumPosition:
    return QuantumPosition.of(NIM, [NimPosition(tuple(h)) for h in heap_tuples])


def single_heap_qpos(heights) -> QuantumPosition:
    return QuantumPosition.of(NIM, [NimPosition((h,)) for h in heights])


def random_small_start(rng: random.Random):
    """A small starting game: nim with heaps <= (3,3) or a pin line <= 5."""
    if rng.random() < 0.5:
        heaps = tuple(rng.randint(0, 3) for _ in range(rng.randint(1, 2)))
        return NIM, NimPosition(heaps)
    n = rng.randint(1, 5)
    return OCTAL06, PinLinePosition(tuple(rng.random() < 0.8 for _ in range(n)))


def random_ruleset(rng: random.Random, width=2) -> RulesetVariant:
    return RulesetVariant(rng.choice(ALL_KINDS), width)


def random_history(rng: random.Random, max_entries: int = 4) -> History:
    """A legal history over a random small game, built by random legal play."""
    game, pos = random_small_start(rng)
    ruleset = random_ruleset(rng)
    h = History.start(game, pos, ruleset, rng.choice(list(PlayerId)))
    for _ in range(rng.randint(0, max_entries)):
        moves = enumerate_qmoves(replay_history(h), h.next_mover, ruleset)
        if not moves:
            break
        h = h.append(rng.choice(moves))
    return h


def random_candidate_qmove(rng: random.Random, h: History) -> QMove:
    """A q-move for h's next mover that may or may not be legal."""
    game = h.game
    if game.game_id == "nim":
        heaps = len(h.initial.heaps)
        top = max(h.initial.heaps) if any(h.initial.heaps) else 1
        alphabet = [
            game.label(i, -j) for i in range(1, heaps + 1) for j in range(1, top + 1)
        ]
    else:
        alphabet = [game.label(i) for i in range(1, len(h.initial.pins) + 1)]
    size = rng.randint(1, min(3, len(alphabet)))
    return QMove.of(rng.sample(alphabet, size), h.next_mover)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
