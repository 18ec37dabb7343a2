"""Domino-placement game on an arbitrary set of grid cells.

Left places vertical dominoes, Right horizontal ones. A move is labeled by
the two cells the domino occupies, so the label stays meaningful (possibly
illegal) as the board fills up. The position tracks the free cells.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import ClassVar, Optional

from .base import (
    LEFT_ONLY,
    RIGHT_ONLY,
    ClassicalGame,
    MoveLabel,
    NotationError,
    PlayerId,
    Position,
)

Cell = tuple[int, int]

_CELL_RE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def _parse_cell(text: str) -> Cell:
    m = _CELL_RE.fullmatch(text.strip())
    if not m:
        raise NotationError(f"bad cell '{text}'", token=text)
    return (int(m.group(1)), int(m.group(2)))


@dataclass(frozen=True, slots=True, eq=False)
class GridPosition(Position):
    free: frozenset[Cell]

    game_id: ClassVar[str] = "domineering"

    def _identity(self) -> tuple:
        return (self.free,)

    def _encode(self) -> str:
        return "domineering:" + ";".join(f"({x},{y})" for x, y in sorted(self.free))


class DomineeringGame(ClassicalGame):
    game_id = "domineering"
    impartial = False

    def _label(self, a: Cell, b: Cell) -> MoveLabel:
        a, b = sorted((a, b))
        if b == (a[0], a[1] + 1):
            owner = LEFT_ONLY  # vertical domino
        elif b == (a[0] + 1, a[1]):
            owner = RIGHT_ONLY  # horizontal domino
        else:
            raise NotationError(f"cells {a} and {b} are not domino-adjacent")
        return MoveLabel("domineering", (a, b), owner, (a, b))

    def vertical(self, cell: Cell) -> MoveLabel:
        return self._label(cell, (cell[0], cell[1] + 1))

    def horizontal(self, cell: Cell) -> MoveLabel:
        return self._label(cell, (cell[0] + 1, cell[1]))

    def apply(self, pos: GridPosition, move: MoveLabel) -> Optional[GridPosition]:
        self.check_move(move)
        a, b = move.payload
        if a not in pos.free or b not in pos.free:
            return None
        return GridPosition(pos.free - {a, b})

    def legal_moves(self, pos: GridPosition, who: PlayerId) -> list[MoveLabel]:
        step = (0, 1) if who is PlayerId.LEFT else (1, 0)
        make = self.vertical if who is PlayerId.LEFT else self.horizontal
        moves = [
            make(cell)
            for cell in pos.free
            if (cell[0] + step[0], cell[1] + step[1]) in pos.free
        ]
        return sorted(moves)

    def measure(self, pos: GridPosition) -> int:
        return len(pos.free)

    def parse_position(self, text: str) -> GridPosition:
        text = text.strip()
        if not text:
            return GridPosition(frozenset())
        cells = [_parse_cell(part) for part in text.split(";")]
        if len(set(cells)) != len(cells):
            raise NotationError(f"duplicate cell in '{text}'", token=text)
        return GridPosition(frozenset(cells))

    def parse_move(self, text: str) -> MoveLabel:
        parts = text.split("+")
        if len(parts) != 2:
            raise NotationError(f"bad domino move '{text}'", token=text)
        return self._label(_parse_cell(parts[0]), _parse_cell(parts[1]))

    def format_move(self, move: MoveLabel) -> str:
        (a, b) = move.payload
        return f"({a[0]},{a[1]})+({b[0]},{b[1]})"


DOMINEERING = DomineeringGame()
