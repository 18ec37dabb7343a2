"""Recorded desk-scale scenarios with their expected verdicts.

Each scenario returns a list of named checks so the CLI can print a pass/fail
matrix and the tests can assert on the same data. Expectations cover the
classical baseline and all five superposed-play variants; every scenario here
is small enough to solve exactly in well under a second.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .games.base import PlayerId
from .games.nim import NIM, NimPosition
from .notation import parse_game_position
from .quantum import (
    QMove,
    QuantumPosition,
    RulesetKind,
    RulesetVariant,
    is_legal_qmove,
    singleton,
    transition,
)
from .solver import Outcome, TranspositionTable, best_move, outcome, wins_moving_first

CLASSICAL = RulesetVariant(RulesetKind.D, 1)

OCTAL_LINE_4 = "octal06:1111"
DOMINEERING_ELL = "domineering:(0,0);(1,0);(2,0);(2,1)"
HACKENBUSH_STALKS = "hackenbush:R1|Ba,R2|Bb,R3"
NIM_2_2 = "nim:2,2"


@dataclass
class Check:
    name: str
    passed: bool
    detail: str


def _outcome_checks(
    position: str, expected: dict[str, str], width: Optional[int], tt: TranspositionTable
) -> list[Check]:
    game, pos = parse_game_position(position)
    S = singleton(game, pos)
    checks = []
    for flag, want in expected.items():
        r = CLASSICAL if flag == "classical" else RulesetVariant(RulesetKind(flag), width)
        got = outcome(S, r, tt).value
        checks.append(
            Check(
                f"{flag}-outcome",
                got == want,
                f"{position} under {flag}: got {got}, expected {want}",
            )
        )
    return checks


def _is_winning(S: QuantumPosition, q: QMove, r: RulesetVariant, tt: TranspositionTable) -> bool:
    return is_legal_qmove(S, q, r) and not wins_moving_first(
        transition(S, q), q.owner.opponent, r, tt
    )


def octal_line_of_four(tt: TranspositionTable) -> list[Check]:
    expected = {"classical": "P", "A": "N", "B": "N", "C": "N", "Cp": "N", "D": "N"}
    checks = _outcome_checks(OCTAL_LINE_4, expected, 2, tt)
    game, pos = parse_game_position(OCTAL_LINE_4)
    S = singleton(game, pos)
    q14 = QMove.of([game.label(1), game.label(4)], PlayerId.LEFT)
    for kind in RulesetKind:
        r = RulesetVariant(kind, 2)
        checks.append(
            Check(
                f"{kind.flag}-pin-pair-1-4-wins",
                _is_winning(S, q14, r, tt),
                f"pin pair {{1,4}} should win under {kind.flag}",
            )
        )
        bm = best_move(S, PlayerId.LEFT, r, tt)
        checks.append(
            Check(
                f"{kind.flag}-engine-finds-win",
                bm is not None and _is_winning(S, bm, r, tt),
                f"engine move under {kind.flag} should be winning",
            )
        )
    return checks


def domineering_ell(tt: TranspositionTable) -> list[Check]:
    expected = {"classical": "R", "A": "R", "B": "P", "C": "R", "Cp": "R", "D": "R"}
    return _outcome_checks(DOMINEERING_ELL, expected, 2, tt)


def hackenbush_three_stalks(tt: TranspositionTable) -> list[Check]:
    expected = {"classical": "P", "A": "L", "B": "R", "C": "P", "Cp": "R", "D": "R"}
    return _outcome_checks(HACKENBUSH_STALKS, expected, 2, tt)


def nim_two_two(tt: TranspositionTable) -> list[Check]:
    checks = _outcome_checks(NIM_2_2, {"D": "N", "Cp": "P"}, 2, tt)
    S = singleton(NIM, NimPosition((2, 2)))
    q = QMove.of([NIM.label(1, -1), NIM.label(2, -1)], PlayerId.LEFT)
    checks.append(
        Check(
            "D-pair-move-wins",
            _is_winning(S, q, RulesetVariant(RulesetKind.D, 2), tt),
            "the two-heap pair move should win under D",
        )
    )
    return checks


def paired_move_sequence(tt: TranspositionTable) -> list[Check]:
    """Playing the same two-branch move twice collapses the superposition."""
    r = RulesetVariant(RulesetKind.D, 2)
    S = singleton(NIM, NimPosition((1, 1, 2)))
    pair = [NIM.label(1, -1), NIM.label(2, -1)]
    s1 = transition(S, QMove.of(pair, PlayerId.LEFT))
    s2 = transition(s1, QMove.of(pair, PlayerId.RIGHT))
    checks = [
        Check(
            "first-move-superposes",
            s1.encode() == "{nim:0,1,2 | nim:1,0,2}",
            f"got {s1.encode()}",
        ),
        Check(
            "second-move-collapses",
            s2.encode() == "{nim:0,0,2}",
            f"got {s2.encode()}",
        ),
        Check(
            "first-move-legal-under-D",
            is_legal_qmove(S, QMove.of(pair, PlayerId.LEFT), r),
            "pair move from the unsuperposed start",
        ),
    ]
    for heaps in [(1, 0, 2), (0, 1, 2)]:
        Sx = singleton(NIM, NimPosition(heaps))
        q = QMove.of(pair, PlayerId.LEFT)
        checks.append(
            Check(
                f"pair-illegal-on-{','.join(map(str, heaps))}-under-A",
                not is_legal_qmove(Sx, q, RulesetVariant(RulesetKind.A, 2)),
                "one branch has no supporting realisation",
            )
        )
    return checks


SCENARIOS: list[tuple[str, Callable[[TranspositionTable], list[Check]]]] = [
    ("octal06-line4", octal_line_of_four),
    ("domineering-ell", domineering_ell),
    ("hackenbush-three-stalks", hackenbush_three_stalks),
    ("nim-2-2", nim_two_two),
    ("paired-move-sequence", paired_move_sequence),
]


def run_all(tt: Optional[TranspositionTable] = None) -> list[tuple[str, list[Check]]]:
    tt = tt if tt is not None else TranspositionTable()
    return [(name, fn(tt)) for name, fn in SCENARIOS]
