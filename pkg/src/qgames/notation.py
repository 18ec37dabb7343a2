"""Text grammar shared by the CLI, the play service, and the tests.

Positions:  nim:4,2,0   octal06:1111   domineering:(0,0);(1,0)
            hackenbush:R1|Ba,R2|Bb,R3   sum:nim:1+nim:2
Moves:      nim 1:-2, octal06 2, domineering (2,0)+(2,1), hackenbush a,
            sum moves prefixed L. / R. by operand.
Q-moves:    [1:-1 & 2:-1]
Quantum positions: {nim:0,1,2 | nim:1,0,2}
Rulesets:   A, B, C, Cp, D plus the pseudo-ruleset "classical" (single
            classical moves only); width is an integer or "max".
"""
from __future__ import annotations

from typing import Optional, Union

from .games.base import ClassicalGame, NotationError, PlayerId, Position
from .games.domineering import DOMINEERING
from .games.hackenbush import HackenbushGame, parse_stalks
from .games.nim import NIM
from .games.octal06 import OCTAL06
from .games.sums import SumGame
from .quantum import QMove, QuantumPosition, RulesetKind, RulesetVariant

_SIMPLE_GAMES = {"nim": NIM, "octal06": OCTAL06, "domineering": DOMINEERING}


def parse_game_position(text: str) -> tuple[ClassicalGame, Position]:
    """Parse a prefixed position string into its game and position.

    For hackenbush the parsed position defines the game's edge catalog; for
    sums the operands are parsed recursively (the left operand of a sum must
    not itself be a sum — nest to the right).
    """
    game_id, sep, payload = text.strip().partition(":")
    if not sep:
        raise NotationError(f"position '{text}' needs a game prefix", token=text)
    if game_id in _SIMPLE_GAMES:
        game = _SIMPLE_GAMES[game_id]
        return game, game.parse_position(payload)
    if game_id == "hackenbush":
        pos = parse_stalks(payload)
        return HackenbushGame.for_position(pos), pos
    if game_id == "sum":
        left_text, plus, right_text = payload.partition("+")
        if not plus:
            raise NotationError(f"sum position '{text}' needs '+'", token=text)
        left_game, left_pos = parse_game_position(left_text)
        if left_game.game_id == "sum":
            raise NotationError("left operand of a sum cannot be a sum", token=left_text)
        right_game, right_pos = parse_game_position(right_text)
        game = SumGame(left_game, right_game)
        return game, game.parse_position(payload)
    raise NotationError(f"unknown game '{game_id}'", token=game_id)


def parse_quantum_position(text: str) -> tuple[ClassicalGame, QuantumPosition]:
    """Parse "{pos | pos | ...}"; realisations must share one game."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise NotationError(f"quantum position '{text}' needs braces", token=text)
    chunks = [c.strip() for c in text[1:-1].split("|")]
    # Hackenbush stalks use '|' internally, so reassemble around game prefixes.
    if chunks and chunks[0].startswith("hackenbush:"):
        merged: list[str] = []
        for chunk in text[1:-1].split("|"):
            chunk = chunk.strip()
            if chunk.startswith("hackenbush:") or not merged:
                merged.append(chunk)
            else:
                merged[-1] += "|" + chunk
        chunks = merged
    if not chunks or not chunks[0]:
        raise NotationError("empty quantum position", token=text)
    parsed = [parse_game_position(chunk) for chunk in chunks]
    games = {game.game_id for game, _ in parsed}
    if len(games) != 1:
        raise NotationError(f"realisations mix games {sorted(games)}", token=text)
    game = parsed[0][0]
    if isinstance(game, HackenbushGame):
        catalog: dict[str, str] = {}
        for sub, _ in parsed:
            assert isinstance(sub, HackenbushGame)
            for label, color in sub.edge_colors.items():
                if catalog.setdefault(label, color) != color:
                    raise NotationError(f"edge '{label}' changes color", token=label)
        game = HackenbushGame(catalog)
    return game, QuantumPosition.of(game, [pos for _, pos in parsed])


def parse_any_position(text: str) -> tuple[ClassicalGame, QuantumPosition]:
    """Accept either a classical position (lifted to a singleton) or a braced
    quantum position."""
    if text.strip().startswith("{"):
        return parse_quantum_position(text)
    game, pos = parse_game_position(text)
    return game, QuantumPosition.of(game, [pos])


def format_qmove(game: ClassicalGame, q: QMove) -> str:
    return "[" + " & ".join(game.format_move(m) for m in q.moves) + "]"


def parse_qmove(game: ClassicalGame, text: str, owner: PlayerId) -> QMove:
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    parts = [p.strip() for p in body.split("&")]
    if not parts or not any(parts):
        raise NotationError(f"empty q-move '{text}'", token=text)
    return QMove.of([game.parse_move(p) for p in parts if p], owner)


_KINDS = {k.flag: k for k in RulesetKind}
_KINDS["C'"] = RulesetKind.CPRIME


def parse_width(width: Union[int, str, None]) -> Optional[int]:
    if width is None or width == "max":
        return None
    try:
        return int(width)
    except (TypeError, ValueError):
        raise NotationError(f"bad width '{width}'", token=str(width)) from None


def parse_ruleset(kind: str, width: Union[int, str, None] = 2) -> RulesetVariant:
    """Map a ruleset flag plus width to a variant. "classical" plays single
    classical moves only and ignores the width argument."""
    kind = kind.strip()
    if kind == "classical":
        return RulesetVariant(RulesetKind.D, 1)
    if kind not in _KINDS:
        raise NotationError(f"unknown ruleset '{kind}'", token=kind)
    return RulesetVariant(_KINDS[kind], parse_width(width))


def ruleset_flags() -> list[str]:
    return ["classical"] + [k.flag for k in RulesetKind]
