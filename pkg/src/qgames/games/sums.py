"""Disjunctive sum of two games over pair positions.

Move alphabets are made disjoint by tagging each operand's labels with the
operand side; a move acts on exactly one operand and is illegal whenever it is
illegal there.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Optional

from .base import ClassicalGame, MoveLabel, NotationError, PlayerId, Position

_SIDE_NAMES = ("L", "R")


@dataclass(frozen=True, slots=True, eq=False)
class SumPosition(Position):
    left: Position
    right: Position

    game_id: ClassVar[str] = "sum"

    def _identity(self) -> tuple:
        return (self.left, self.right)

    def _encode(self) -> str:
        return f"sum:{self.left.encode()}+{self.right.encode()}"


class SumGame(ClassicalGame):
    game_id = "sum"

    def __init__(self, left: ClassicalGame, right: ClassicalGame):
        self.left = left
        self.right = right
        self.impartial = left.impartial and right.impartial

    def lift(self, side: int, inner: MoveLabel) -> MoveLabel:
        if side not in (0, 1):
            raise NotationError(f"bad sum operand {side}")
        return MoveLabel(
            "sum",
            (side, inner),
            inner.owner,
            (side, inner.game_id) + inner.key,
        )

    def _operand(self, side: int) -> ClassicalGame:
        return self.left if side == 0 else self.right

    def apply(self, pos: SumPosition, move: MoveLabel) -> Optional[SumPosition]:
        self.check_move(move)
        side, inner = move.payload
        sub = pos.left if side == 0 else pos.right
        result = self._operand(side).apply(sub, inner)
        if result is None:
            return None
        if side == 0:
            return SumPosition(result, pos.right)
        return SumPosition(pos.left, result)

    def legal_moves(self, pos: SumPosition, who: PlayerId) -> list[MoveLabel]:
        moves = [self.lift(0, m) for m in self.left.legal_moves(pos.left, who)]
        moves += [self.lift(1, m) for m in self.right.legal_moves(pos.right, who)]
        return sorted(moves)

    def measure(self, pos: SumPosition) -> int:
        return self.left.measure(pos.left) + self.right.measure(pos.right)

    def parse_position(self, text: str) -> SumPosition:
        left_text, sep, right_text = text.partition("+")
        if not sep:
            raise NotationError(f"sum position needs '+': '{text}'", token=text)
        return SumPosition(
            self._parse_operand(0, left_text), self._parse_operand(1, right_text)
        )

    def _parse_operand(self, side: int, text: str) -> Position:
        game = self._operand(side)
        prefix = game.game_id + ":"
        if not text.startswith(prefix):
            raise NotationError(
                f"operand '{text}' does not belong to game '{game.game_id}'", token=text
            )
        return game.parse_position(text[len(prefix):])

    def parse_move(self, text: str) -> MoveLabel:
        head, sep, tail = text.partition(".")
        if not sep or head not in _SIDE_NAMES:
            raise NotationError(f"sum move needs an 'L.'/'R.' prefix: '{text}'", token=text)
        side = _SIDE_NAMES.index(head)
        return self.lift(side, self._operand(side).parse_move(tail))

    def format_move(self, move: MoveLabel) -> str:
        side, inner = move.payload
        return f"{_SIDE_NAMES[side]}.{self._operand(side).format_move(inner)}"


def make_sum(left: ClassicalGame, right: ClassicalGame) -> SumGame:
    return SumGame(left, right)
