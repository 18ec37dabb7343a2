"""Token-removal game on an ordered vector of heaps.

Heaps are positional: move (i, -j) always means "take j tokens from heap i",
whatever the current heap contents, so the same label can be replayed in any
position of the game. Heap order is significant and never normalised.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Optional

from .base import BOTH_PLAYERS, ClassicalGame, MoveLabel, NotationError, PlayerId, Position


@dataclass(frozen=True, slots=True, eq=False)
class NimPosition(Position):
    heaps: tuple[int, ...]

    game_id: ClassVar[str] = "nim"

    def _identity(self) -> tuple:
        return self.heaps

    def _encode(self) -> str:
        return "nim:" + ",".join(str(h) for h in self.heaps)


class NimGame(ClassicalGame):
    game_id = "nim"
    impartial = True

    def label(self, heap: int, amount: int) -> MoveLabel:
        """Move label (heap, amount) with amount <= -1 tokens removed."""
        if heap < 1 or amount > -1:
            raise NotationError(f"bad nim move ({heap},{amount})")
        return MoveLabel("nim", (heap, amount), BOTH_PLAYERS, (heap, -amount))

    def apply(self, pos: NimPosition, move: MoveLabel) -> Optional[NimPosition]:
        self.check_move(move)
        heap, amount = move.payload
        take = -amount
        if not 1 <= heap <= len(pos.heaps) or pos.heaps[heap - 1] < take:
            return None
        heaps = list(pos.heaps)
        heaps[heap - 1] -= take
        return NimPosition(tuple(heaps))

    def legal_moves(self, pos: NimPosition, who: PlayerId) -> list[MoveLabel]:
        return [
            self.label(i, -take)
            for i, size in enumerate(pos.heaps, 1)
            for take in range(1, size + 1)
        ]

    def measure(self, pos: NimPosition) -> int:
        return sum(pos.heaps)

    def parse_position(self, text: str) -> NimPosition:
        parts = text.split(",")
        heaps = []
        for part in parts:
            part = part.strip()
            if not part.isdigit():
                raise NotationError(f"bad nim heap '{part}'", token=part)
            heaps.append(int(part))
        if not heaps:
            raise NotationError("nim position needs at least one heap", token=text)
        return NimPosition(tuple(heaps))

    def parse_move(self, text: str) -> MoveLabel:
        head, sep, tail = text.partition(":")
        if not sep or not head.strip().isdigit():
            raise NotationError(f"bad nim move '{text}'", token=text)
        try:
            amount = int(tail)
        except ValueError:
            raise NotationError(f"bad nim move '{text}'", token=text) from None
        if amount > -1:
            raise NotationError(f"nim move must remove tokens: '{text}'", token=text)
        return self.label(int(head), amount)

    def format_move(self, move: MoveLabel) -> str:
        heap, amount = move.payload
        return f"{heap}:{amount}"


NIM = NimGame()


def nim_position(*heaps: int) -> NimPosition:
    return NimPosition(tuple(heaps))
