"""Vertical-stalk Hackenbush.

The position is an ordered list of stalks, each an ordered bottom-to-top list
of colored, labeled edges. Left removes a blue edge together with everything
above it in its stalk; Right does the same with a red edge. A move is labeled
by the edge label alone, so the game instance keeps a catalog mapping labels
to colors (edges never change color, they only disappear).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Mapping, Optional

from .base import (
    LEFT_ONLY,
    RIGHT_ONLY,
    ClassicalGame,
    MoveLabel,
    NotationError,
    PlayerId,
    Position,
)

BLUE = "B"
RED = "R"

Edge = tuple[str, str]  # (color, label)

_LABEL_FORBIDDEN = set(",|:+&[]{} \t")


@dataclass(frozen=True, slots=True, eq=False)
class StalkPosition(Position):
    stalks: tuple[tuple[Edge, ...], ...]

    game_id: ClassVar[str] = "hackenbush"

    def _identity(self) -> tuple:
        return self.stalks

    def _encode(self) -> str:
        return "hackenbush:" + "|".join(
            ",".join(color + label for color, label in stalk) for stalk in self.stalks
        )

    def labels(self) -> list[str]:
        return [label for stalk in self.stalks for _, label in stalk]


def parse_stalks(text: str) -> StalkPosition:
    stalks = []
    for chunk in text.split("|"):
        chunk = chunk.strip()
        edges = []
        if chunk:
            for token in chunk.split(","):
                token = token.strip()
                if len(token) < 2 or token[0] not in (BLUE, RED):
                    raise NotationError(f"bad edge '{token}'", token=token)
                label = token[1:]
                if set(label) & _LABEL_FORBIDDEN:
                    raise NotationError(f"bad edge label '{label}'", token=label)
                edges.append((token[0], label))
        stalks.append(tuple(edges))
    pos = StalkPosition(tuple(stalks))
    labels = pos.labels()
    if len(set(labels)) != len(labels):
        raise NotationError(f"duplicate edge label in '{text}'", token=text)
    return pos


class HackenbushGame(ClassicalGame):
    game_id = "hackenbush"
    impartial = False

    def __init__(self, edge_colors: Mapping[str, str]):
        self.edge_colors = dict(edge_colors)

    @classmethod
    def for_position(cls, pos: StalkPosition) -> "HackenbushGame":
        return cls({label: color for stalk in pos.stalks for color, label in stalk})

    def label(self, edge_label: str) -> MoveLabel:
        color = self.edge_colors.get(edge_label)
        if color is None:
            raise NotationError(f"unknown edge '{edge_label}'", token=edge_label)
        owner = LEFT_ONLY if color == BLUE else RIGHT_ONLY
        return MoveLabel("hackenbush", (edge_label,), owner, (edge_label,))

    def apply(self, pos: StalkPosition, move: MoveLabel) -> Optional[StalkPosition]:
        self.check_move(move)
        (edge_label,) = move.payload
        for i, stalk in enumerate(pos.stalks):
            for j, (color, label) in enumerate(stalk):
                if label == edge_label:
                    want = BLUE if PlayerId.LEFT in move.owner else RED
                    if color != want:
                        return None
                    stalks = list(pos.stalks)
                    stalks[i] = stalk[:j]  # the edge and everything above it go
                    return StalkPosition(tuple(stalks))
        return None

    def legal_moves(self, pos: StalkPosition, who: PlayerId) -> list[MoveLabel]:
        want = BLUE if who is PlayerId.LEFT else RED
        moves = [
            self.label(label)
            for stalk in pos.stalks
            for color, label in stalk
            if color == want
        ]
        return sorted(moves)

    def measure(self, pos: StalkPosition) -> int:
        return sum(len(stalk) for stalk in pos.stalks)

    def parse_position(self, text: str) -> StalkPosition:
        pos = parse_stalks(text)
        for stalk in pos.stalks:
            for color, label in stalk:
                if self.edge_colors.get(label) != color:
                    raise NotationError(
                        f"edge '{label}' does not belong to this game", token=label
                    )
        return pos

    def parse_move(self, text: str) -> MoveLabel:
        return self.label(text.strip())

    def format_move(self, move: MoveLabel) -> str:
        return move.payload[0]
