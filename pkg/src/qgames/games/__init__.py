from .base import (
    BOTH_PLAYERS,
    LEFT_ONLY,
    RIGHT_ONLY,
    ClassicalGame,
    MoveLabel,
    NotationError,
    PlayerId,
    Position,
    UsageError,
    apply_move,
    legal_classical_moves,
)
from .domineering import DOMINEERING, DomineeringGame, GridPosition
from .hackenbush import BLUE, RED, HackenbushGame, StalkPosition, parse_stalks
from .nim import NIM, NimGame, NimPosition, nim_position
from .octal06 import OCTAL06, Octal06Game, PinLinePosition
from .sums import SumGame, SumPosition, make_sum

__all__ = [
    "BLUE",
    "BOTH_PLAYERS",
    "ClassicalGame",
    "DOMINEERING",
    "DomineeringGame",
    "GridPosition",
    "HackenbushGame",
    "LEFT_ONLY",
    "MoveLabel",
    "NIM",
    "NimGame",
    "NimPosition",
    "NotationError",
    "OCTAL06",
    "Octal06Game",
    "PinLinePosition",
    "PlayerId",
    "Position",
    "RED",
    "RIGHT_ONLY",
    "StalkPosition",
    "SumGame",
    "SumPosition",
    "UsageError",
    "apply_move",
    "legal_classical_moves",
    "make_sum",
    "nim_position",
    "parse_stalks",
]
