"""History replay, run exhibition, and challenge adjudication."""
from __future__ import annotations

import itertools

import pytest

from conftest import random_candidate_qmove, random_history
from qgames.games import NIM, PlayerId, UsageError
from qgames.games.nim import NimPosition
from qgames.quantum import (
    QMove,
    QMoveRejected,
    RulesetKind,
    RulesetVariant,
    is_legal_qmove,
    singleton,
)
from qgames.referee import (
    History,
    adjudicate_challenge,
    exhibit_runs,
    replay_history,
    valid_runs,
    verdict_json,
    verify_witness,
)
from qgames.solver import TranspositionTable, best_move, outcome, Outcome, wins_moving_first

LEFT, RIGHT = PlayerId.LEFT, PlayerId.RIGHT
D2 = RulesetVariant(RulesetKind.D, 2)


def q(owner, *moves):
    return QMove.of([NIM.label(i, a) for i, a in moves], owner)


def figure_history() -> History:
    """Nim(4): take 3-or-2, then take 2-or-1."""
    h = History.start(NIM, NimPosition((4,)), D2, LEFT)
    h = h.append(q(LEFT, (1, -3), (1, -2)))
    return h.append(q(RIGHT, (1, -2), (1, -1)))


def brute_force_runs(h: History):
    """Oracle: try every choice product classically."""
    out = []
    for picks in itertools.product(*[entry.moves for entry in h.entries]):
        pos = h.initial
        for m in picks:
            pos = h.game.apply(pos, m)
            if pos is None:
                break
        else:
            out.append((picks, pos))
    return out


class TestReplay:
    def test_empty_history_is_the_initial_singleton(self):
        h = History.start(NIM, NimPosition((4,)), D2, LEFT)
        assert replay_history(h) == singleton(NIM, NimPosition((4,)))

    def test_figure_history_realisations_and_runs(self):
        h = figure_history()
        oracle = brute_force_runs(h)
        assert len(oracle) == 3  # taking 3 then 2 dies
        assert {pos for _, pos in oracle} == {NimPosition((0,)), NimPosition((1,))}
        assert replay_history(h).encode() == "{nim:0 | nim:1}"
        assert len(valid_runs(h)) == 3

    def test_paired_moves_collapse(self):
        h = History.start(NIM, NimPosition((1, 1, 2)), D2, LEFT)
        h = h.append(q(LEFT, (1, -1), (2, -1)))
        h = h.append(q(RIGHT, (1, -1), (2, -1)))
        assert replay_history(h).encode() == "{nim:0,0,2}"

    def test_append_enforces_turn_order(self):
        h = History.start(NIM, NimPosition((4,)), D2, LEFT)
        with pytest.raises(UsageError):
            h.append(q(RIGHT, (1, -1)))

    def test_append_enforces_legality(self):
        h = History.start(NIM, NimPosition((4,)), RulesetVariant(RulesetKind.A, 2), LEFT)
        with pytest.raises(QMoveRejected):
            h.append(q(LEFT, (1, -1)))


class TestExhibit:
    def test_unsuperposed_followup_is_upheld(self):
        h = figure_history()
        verdict = exhibit_runs(h, q(LEFT, (1, -1)))
        assert verdict.upheld
        assert len(verdict.witnesses) == 1
        assert verify_witness(h, verdict.witnesses[0])

    def test_pair_without_support_not_upheld(self):
        h = History.start(NIM, NimPosition((1, 0, 2)), RulesetVariant(RulesetKind.A, 2), LEFT)
        verdict = exhibit_runs(h, q(LEFT, (1, -1), (2, -1)))
        assert not verdict.upheld

    def test_alien_label_not_upheld(self):
        h = figure_history()
        assert not exhibit_runs(h, q(LEFT, (1, -9))).upheld

    def test_witnesses_cover_every_branch(self):
        h = History.start(NIM, NimPosition((2, 2)), D2, LEFT)
        verdict = exhibit_runs(h, q(LEFT, (1, -1), (2, -2)))
        assert verdict.upheld
        assert [w.branch_move for w in verdict.witnesses] == list(
            q(LEFT, (1, -1), (2, -2)).moves
        )
        assert all(verify_witness(h, w) for w in verdict.witnesses)

    def test_verdict_json_shape(self):
        h = figure_history()
        doc = verdict_json(NIM, exhibit_runs(h, q(LEFT, (1, -1))))
        assert doc["upheld"] is True
        assert doc["witnesses"][0]["branch_move"] == "1:-1"
        assert len(doc["witnesses"][0]["run"]) == 2


class TestAdjudicate:
    def test_legal_move_wins_for_the_mover(self):
        h = figure_history()
        assert adjudicate_challenge(h, q(LEFT, (1, -1))) is LEFT

    def test_illegal_move_loses_for_the_mover(self):
        h = figure_history()
        assert adjudicate_challenge(h, q(LEFT, (1, -4))) is RIGHT

    def test_challenges_never_change_optimal_outcomes(self):
        # optimal play with a standing offer to challenge every announcement:
        # each announced move is engine-legal, so any challenge would be
        # upheld, and the winner matches the solved outcome.
        tt = TranspositionTable()
        for start, kind in [
            ((3,), RulesetKind.D),
            ((2, 2), RulesetKind.CPRIME),
            ((2, 1), RulesetKind.A),
            ((3, 1), RulesetKind.B),
        ]:
            r = RulesetVariant(kind, 2)
            h = History.start(NIM, NimPosition(start), r, LEFT)
            mover = LEFT
            while True:
                state = replay_history(h)
                move = best_move(state, mover, r, tt)
                if move is None:
                    winner = mover.opponent
                    break
                assert adjudicate_challenge(h, move) is mover
                h = h.append(move)
                mover = mover.opponent
            out = outcome(singleton(NIM, NimPosition(start)), r, tt)
            expected = LEFT if out in (Outcome.N, Outcome.L) else RIGHT
            assert winner is expected


class TestRandomisedEquivalences:
    def test_replay_equals_brute_force_runs(self, rng):
        for _ in range(150):
            h = random_history(rng)
            oracle_ends = {pos for _, pos in brute_force_runs(h)}
            assert set(replay_history(h).realisations) == oracle_ends

    def test_exhibit_matches_engine_legality(self, rng):
        for _ in range(150):
            h = random_history(rng)
            candidate = random_candidate_qmove(rng, h)
            verdict = exhibit_runs(h, candidate)
            assert verdict.upheld == is_legal_qmove(
                replay_history(h), candidate, h.ruleset
            )
            if verdict.upheld:
                assert all(verify_witness(h, w) for w in verdict.witnesses)
