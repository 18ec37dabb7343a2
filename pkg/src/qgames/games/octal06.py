"""Pin-line game: remove a single standing pin that still has a standing
neighbor. Pin i becomes unplayable once both i-1 and i+1 are gone (end pins
have one neighbor only)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Optional

from .base import BOTH_PLAYERS, ClassicalGame, MoveLabel, NotationError, PlayerId, Position


@dataclass(frozen=True, slots=True, eq=False)
class PinLinePosition(Position):
    pins: tuple[bool, ...]

    game_id: ClassVar[str] = "octal06"

    def _identity(self) -> tuple:
        return self.pins

    def _encode(self) -> str:
        return "octal06:" + "".join("1" if p else "0" for p in self.pins)


class Octal06Game(ClassicalGame):
    game_id = "octal06"
    impartial = True

    def label(self, pin: int) -> MoveLabel:
        if pin < 1:
            raise NotationError(f"bad pin index {pin}")
        return MoveLabel("octal06", (pin,), BOTH_PLAYERS, (pin,))

    def _playable(self, pos: PinLinePosition, pin: int) -> bool:
        pins = pos.pins
        n = len(pins)
        if not 1 <= pin <= n or not pins[pin - 1]:
            return False
        return (pin >= 2 and pins[pin - 2]) or (pin <= n - 1 and pins[pin])

    def apply(self, pos: PinLinePosition, move: MoveLabel) -> Optional[PinLinePosition]:
        self.check_move(move)
        (pin,) = move.payload
        if not self._playable(pos, pin):
            return None
        pins = list(pos.pins)
        pins[pin - 1] = False
        return PinLinePosition(tuple(pins))

    def legal_moves(self, pos: PinLinePosition, who: PlayerId) -> list[MoveLabel]:
        return [self.label(i) for i in range(1, len(pos.pins) + 1) if self._playable(pos, i)]

    def measure(self, pos: PinLinePosition) -> int:
        return sum(pos.pins)

    def parse_position(self, text: str) -> PinLinePosition:
        if not text or any(c not in "01" for c in text):
            raise NotationError(f"bad pin line '{text}'", token=text)
        return PinLinePosition(tuple(c == "1" for c in text))

    def parse_move(self, text: str) -> MoveLabel:
        if not text.strip().isdigit():
            raise NotationError(f"bad pin move '{text}'", token=text)
        return self.label(int(text))

    def format_move(self, move: MoveLabel) -> str:
        return str(move.payload[0])


OCTAL06 = Octal06Game()
