"""Acceptance suite: every recorded desk-scale result, checked exactly.

All values here are integers and outcome classes, so every comparison is
exact; there are no tolerances anywhere. One [ACCEPTANCE] line is printed per
criterion.

Known red: the golden table for variant Cp disagrees with the variant's own
single-move rule on 7 of its 25 cells. The recorded table matches a stricter
reading (a lone move is playable only when it is the mover's sole available
move, or legal in every realisation including dead ones), while the single-heap
case split, the worked examples, and the move-legality contract all pin the
reading implemented here (dead realisations are exempt). Both cannot hold at
once; the mismatching cells fail below with their coordinates rather than
being patched over.
"""
from __future__ import annotations

import csv
import itertools
import random
from contextlib import contextmanager
from pathlib import Path

import pytest

from conftest import nim_qpos, single_heap_qpos
from qgames.example_suite import (
    DOMINEERING_ELL,
    HACKENBUSH_STALKS,
    OCTAL_LINE_4,
)
from qgames.games import NIM, OCTAL06, PlayerId
from qgames.games.nim import NimPosition
from qgames.games.octal06 import PinLinePosition
from qgames.notation import parse_game_position
from qgames.quantum import (
    QMove,
    QuantumPosition,
    RulesetKind,
    RulesetVariant,
    canonicalize,
    enumerate_qmoves,
    is_covered,
    is_legal_qmove,
    singleton,
    transition,
)
from qgames.referee import History, exhibit_runs, replay_history, valid_runs
from qgames.solver import (
    Outcome,
    TranspositionTable,
    best_move,
    compare_product_claim,
    grundy,
    outcome,
    value_table,
    wins_moving_first,
)

LEFT, RIGHT = PlayerId.LEFT, PlayerId.RIGHT
GOLDEN = Path(__file__).parent / "golden"
ALL_KINDS = list(RulesetKind)
SHARED_TT = TranspositionTable()


@contextmanager
def criterion(name: str):
    try:
        yield
    except Exception:
        print(f"[ACCEPTANCE] {name}: FAIL")
        raise
    print(f"[ACCEPTANCE] {name}: PASS")


def expected_single_heap(H: set[int], kind: RulesetKind) -> int:
    k = max(H)
    if kind is RulesetKind.A:
        return k - 1
    if kind is RulesetKind.B:
        return 1 if k == 1 else (0 if k == 2 else k - 1)
    if kind is RulesetKind.C:
        return k if len(H) == 1 else k - 1
    if kind is RulesetKind.D:
        return k
    if H in ({1, 2}, {0, 1, 2}):
        return 0
    if k == 1:
        return 1
    if (k - 1) in H:
        return k - 1
    return k


def test_single_heap_value_suite():
    with criterion("single-heap value suite (254 subsets x 5 rulesets)"):
        failures = []
        for r in range(1, 9):
            for combo in itertools.combinations(range(8), r):
                H = set(combo)
                if max(H) < 1:
                    continue
                S = single_heap_qpos(H)
                for kind in ALL_KINDS:
                    got = grundy(S, RulesetVariant(kind, None), SHARED_TT)
                    want = expected_single_heap(H, kind)
                    if got != want:
                        failures.append((sorted(H), kind.flag, got, want))
        assert not failures, f"single-heap mismatches: {failures[:10]}"


def load_golden(name: str) -> dict[tuple[int, int], int]:
    cells = {}
    with open(GOLDEN / name, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    header = [int(x) for x in rows[0][1:]]
    for row in rows[1:]:
        i = int(row[0])
        for j, value in zip(header, row[1:]):
            if value != "":
                cells[(i, j)] = int(value)
    return cells


def check_golden_table(kind: RulesetKind, filename: str, imax: int, jmax: int):
    golden = load_golden(filename)
    computed = value_table(imax, jmax, kind, 2, SHARED_TT)
    absent, mismatched = [], []
    for i in range(imax + 1):
        for j in range(jmax + 1):
            want = golden.get((i, j))
            if want is None:
                absent.append((i, j))
                continue
            if computed[i][j] != want:
                mismatched.append(((i, j), computed[i][j], want))
    assert not mismatched, (
        f"table {kind.flag} cells (i,j): got != recorded: {mismatched}"
    )
    return absent


def test_recorded_table_a():
    with criterion("golden table A (0..5)"):
        assert check_golden_table(RulesetKind.A, "table_A.csv", 5, 5) == []


def test_recorded_table_b():
    with criterion("golden table B (0..5)"):
        assert check_golden_table(RulesetKind.B, "table_B.csv", 5, 5) == []


def test_recorded_table_c():
    with criterion("golden table C (0..6, 46 recorded cells)"):
        absent = check_golden_table(RulesetKind.C, "table_C.csv", 6, 6)
        # the source table is truncated at these three cells
        assert absent == [(5, 6), (6, 5), (6, 6)]


def test_recorded_table_cp():
    with criterion("golden table Cp (0..4) [known 7-cell conflict]"):
        assert check_golden_table(RulesetKind.CPRIME, "table_Cp.csv", 4, 4) == []


def test_recorded_table_d():
    with criterion("golden table D (0..4)"):
        assert check_golden_table(RulesetKind.D, "table_D.csv", 4, 4) == []


def outcomes_for(position: str, widths=(2, None)) -> dict[str, set[str]]:
    game, pos = parse_game_position(position)
    S = singleton(game, pos)
    results: dict[str, set[str]] = {"classical": {outcome(S, RulesetVariant(RulesetKind.D, 1), SHARED_TT).value}}
    for kind in ALL_KINDS:
        results[kind.flag] = {
            outcome(S, RulesetVariant(kind, w), SHARED_TT).value for w in widths
        }
    return results


def test_example_1_octal06_line_of_four():
    with criterion("octal06 line of four"):
        got = outcomes_for(OCTAL_LINE_4)
        assert got["classical"] == {"P"}
        for flag in ("A", "B", "C", "Cp", "D"):
            assert got[flag] == {"N"}, f"{flag}: {got[flag]}"
        game, pos = parse_game_position(OCTAL_LINE_4)
        S = singleton(game, pos)
        q14 = QMove.of([game.label(1), game.label(4)], LEFT)
        for kind in ALL_KINDS:
            r = RulesetVariant(kind, 2)
            assert is_legal_qmove(S, q14, r)
            assert not wins_moving_first(transition(S, q14), RIGHT, r, SHARED_TT), (
                f"pin pair {{1,4}} must win under {kind.flag}"
            )
            engine = best_move(S, LEFT, r, SHARED_TT)
            assert engine is not None
            assert not wins_moving_first(transition(S, engine), RIGHT, r, SHARED_TT)


def test_example_2_domineering_ell_board():
    with criterion("domineering ell board"):
        got = outcomes_for(DOMINEERING_ELL)
        assert got["classical"] == {"R"}
        for flag in ("A", "C", "Cp", "D"):
            assert got[flag] == {"R"}, f"{flag}: {got[flag]}"
        # the recorded B outcome reads P; the engine's verdict is compared
        # directly, and any disagreement must surface here unpatched
        assert got["B"] == {"P"}, (
            f"variant B verdict {got['B']} disagrees with the recorded P; "
            "that expectation is marked uncertain, so surface it, never patch it"
        )


def test_example_3_hackenbush_stalks():
    with criterion("hackenbush three stalks"):
        got = outcomes_for(HACKENBUSH_STALKS)
        assert got["classical"] == {"P"}
        assert got["C"] == {"P"}
        assert got["A"] == {"L"}
        for flag in ("B", "Cp", "D"):
            assert got[flag] == {"R"}, f"{flag}: {got[flag]}"


def test_example_4_two_heaps_of_two():
    with criterion("nim 2,2 separation"):
        got = outcomes_for("nim:2,2")
        assert got["D"] == {"N"}
        assert got["Cp"] == {"P"}


def test_width_cap_equivalence_and_counterexample():
    with criterion("width-2 equivalence and 3-heap counterexample"):
        S = nim_qpos((1, 1, 1))
        assert grundy(S, RulesetVariant(RulesetKind.A, 2), SHARED_TT) == 0
        assert grundy(S, RulesetVariant(RulesetKind.A, None), SHARED_TT) == 1
        for kind in (RulesetKind.A, RulesetKind.B, RulesetKind.D):
            for i in range(5):
                for j in range(5):
                    S = nim_qpos((i, j))
                    w2 = grundy(S, RulesetVariant(kind, 2), SHARED_TT)
                    wmax = grundy(S, RulesetVariant(kind, None), SHARED_TT)
                    assert w2 == wmax, (kind.flag, i, j, w2, wmax)


def test_two_heap_closed_form_kind_a():
    with criterion("two-heap closed form under A"):
        r = RulesetVariant(RulesetKind.A, None)
        for i in range(1, 6):
            for j in range(1, 6):
                S = nim_qpos((i, 0), (0, j))
                want = max(i, j) - 1 + (1 if i == j else 0)
                assert grundy(S, r, SHARED_TT) == want, (i, j)


def test_covered_and_value_preservation():
    with criterion("covered relation and removal-invariance"):
        for k in range(7):
            for kk in range(7):
                covered = is_covered(
                    NimPosition((k,)), [NimPosition((kk,))], NIM, SHARED_TT.covered
                )
                assert covered == (k <= kk), (k, kk)
        rng = random.Random(20260808)
        kinds = [RulesetKind.A, RulesetKind.B, RulesetKind.D]
        for trial in range(200):
            heap_count = rng.randint(1, 2)
            reals = set()
            for _ in range(rng.randint(1, 4)):
                budget = 6
                heaps = []
                for _ in range(heap_count):
                    take = rng.randint(0, budget)
                    heaps.append(take)
                    budget -= take
                reals.add(tuple(heaps))
            S = QuantumPosition.of(NIM, [NimPosition(t) for t in reals])
            kind = kinds[trial % 3]
            r = RulesetVariant(kind, 3)
            reduced = canonicalize(S, r, SHARED_TT.covered)
            a = grundy(S, r, SHARED_TT, use_canonical=False)
            b = grundy(reduced, r, SHARED_TT, use_canonical=False)
            assert a == b, (S.encode(), kind.flag, a, b)
        # removal is not value-preserving under C and must stay off there
        rC = RulesetVariant(RulesetKind.C, None)
        assert grundy(single_heap_qpos([3]), rC, SHARED_TT) == 3
        assert grundy(single_heap_qpos([0, 3]), rC, SHARED_TT) == 2
        assert canonicalize(single_heap_qpos([0, 3]), rC) == single_heap_qpos([0, 3])


def test_paired_move_sequence_and_legality():
    with criterion("paired-move collapse and singleton-game legality"):
        r = RulesetVariant(RulesetKind.D, 2)
        S = nim_qpos((1, 1, 2))
        pair_l = QMove.of([NIM.label(1, -1), NIM.label(2, -1)], LEFT)
        pair_r = QMove.of([NIM.label(1, -1), NIM.label(2, -1)], RIGHT)
        s1 = transition(S, pair_l)
        assert s1.encode() == "{nim:0,1,2 | nim:1,0,2}"
        s2 = transition(s1, pair_r)
        assert s2.encode() == "{nim:0,0,2}"
        rA = RulesetVariant(RulesetKind.A, 2)
        for heaps in [(1, 0, 2), (0, 1, 2)]:
            assert not is_legal_qmove(singleton(NIM, NimPosition(heaps)), pair_l, rA)


def brute_force_runs(h: History):
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


def test_referee_equivalences():
    from conftest import random_candidate_qmove, random_history

    with criterion("referee equivalences on 500 random histories"):
        h = History.start(NIM, NimPosition((4,)), RulesetVariant(RulesetKind.D, 2), LEFT)
        h = h.append(QMove.of([NIM.label(1, -3), NIM.label(1, -2)], LEFT))
        h = h.append(QMove.of([NIM.label(1, -2), NIM.label(1, -1)], RIGHT))
        assert len(valid_runs(h)) == 3
        assert replay_history(h).encode() == "{nim:0 | nim:1}"

        rng = random.Random(8_080_808)
        for _ in range(500):
            rh = random_history(rng)
            fold = replay_history(rh)
            brute = {pos for _, pos in brute_force_runs(rh)}
            assert set(fold.realisations) == brute
            candidate = random_candidate_qmove(rng, rh)
            assert exhibit_runs(rh, candidate).upheld == is_legal_qmove(
                fold, candidate, rh.ruleset
            )


def test_permissivity_lattice_sampled():
    with criterion("permissivity lattice on 500 samples"):
        rng = random.Random(5_0_5)
        for _ in range(500):
            if rng.random() < 0.6:
                count = rng.randint(1, 4)
                reals = {
                    tuple(rng.randint(0, 3) for _ in range(rng.randint(1, 2) if count == 1 else 2))
                    for _ in range(count)
                }
                # realisations must share the heap count
                width = max(len(t) for t in reals)
                reals = {t + (0,) * (width - len(t)) for t in reals}
                S = QuantumPosition.of(NIM, [NimPosition(t) for t in reals])
            else:
                n = rng.randint(1, 5)
                reals = {
                    tuple(rng.random() < 0.7 for _ in range(n))
                    for _ in range(rng.randint(1, 3))
                }
                S = QuantumPosition.of(OCTAL06, [PinLinePosition(t) for t in reals])
            legal = {
                kind: set(enumerate_qmoves(S, LEFT, RulesetVariant(kind, 3)))
                for kind in ALL_KINDS
            }
            assert legal[RulesetKind.A] <= legal[RulesetKind.B] <= legal[
                RulesetKind.CPRIME
            ] <= legal[RulesetKind.D], S.encode()
            assert legal[RulesetKind.C] <= legal[RulesetKind.CPRIME], S.encode()


def test_product_comparison_reports():
    with criterion("sum-vs-compound comparison reports"):
        for i, j in [(1, 1), (1, 2), (2, 2)]:
            report = compare_product_claim(
                NIM, NimPosition((i,)), NIM, NimPosition((j,)), bound=6
            )
            assert set(report) >= {"lhs_value", "rhs_value", "equal"}
            assert isinstance(report["lhs_value"], int)
            assert isinstance(report["rhs_value"], int)
            assert report["equal"] == (report["lhs_value"] == report["rhs_value"])
        report = compare_product_claim(NIM, NimPosition((1,)), NIM, NimPosition((1,)))
        assert report["lhs_value"] == 0  # exhaustively derived two-move game
