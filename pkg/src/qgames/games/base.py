"""Shared vocabulary for labeled-move games: players, move labels, positions.

A game is a mapping from (position, move label) to a successor position or
None. Move labels are position-independent: the same label can be tested in
any position of its game, where it may simply be illegal.
"""
from __future__ import annotations

import enum
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import ClassVar, Optional


class PlayerId(enum.Enum):
    LEFT = "LEFT"
    RIGHT = "RIGHT"

    @property
    def opponent(self) -> "PlayerId":
        return PlayerId.RIGHT if self is PlayerId.LEFT else PlayerId.LEFT


BOTH_PLAYERS: frozenset = frozenset((PlayerId.LEFT, PlayerId.RIGHT))
LEFT_ONLY: frozenset = frozenset((PlayerId.LEFT,))
RIGHT_ONLY: frozenset = frozenset((PlayerId.RIGHT,))


class UsageError(ValueError):
    """The caller broke an interface contract (wrong game, bad arguments)."""


class NotationError(UsageError):
    """A position, move, or ruleset string does not parse."""

    def __init__(self, message: str, token: Optional[str] = None):
        super().__init__(message)
        self.token = token


@dataclass(frozen=True, slots=True, eq=False)
class MoveLabel:
    """One classical move, identified independently of any position.

    `key` gives the total order used for canonical encodings; `owner` is the
    set of players allowed to play the move (both players in impartial games).
    Equality and hashing use (game_id, payload) only; the hash is precomputed
    because labels are hot dictionary keys in the search layers.
    """

    game_id: str
    payload: tuple
    owner: frozenset
    key: tuple
    cached_hash: int = field(init=False, repr=False, default=0)

    def __post_init__(self):
        object.__setattr__(self, "cached_hash", hash((self.game_id, self.payload)))

    def __eq__(self, other):
        if not isinstance(other, MoveLabel):
            return NotImplemented
        return self.game_id == other.game_id and self.payload == other.payload

    def __hash__(self):
        return self.cached_hash

    def __lt__(self, other: "MoveLabel"):
        if not isinstance(other, MoveLabel):
            return NotImplemented
        return (self.game_id, self.key) < (other.game_id, other.key)


class Position(ABC):
    """A classical position. Two positions are equal iff their canonical
    encodings are byte-equal; hash and encoding are cached lazily."""

    __slots__ = ("_hash", "_enc")

    game_id: ClassVar[str]

    @abstractmethod
    def _identity(self) -> tuple:
        """The payload tuple that determines equality."""

    @abstractmethod
    def _encode(self) -> str:
        """Build the canonical text form, prefixed with the game id."""

    def encode(self) -> str:
        try:
            return self._enc
        except AttributeError:
            enc = self._encode()
            object.__setattr__(self, "_enc", enc)
            return enc

    def __eq__(self, other):
        if other.__class__ is not self.__class__:
            return NotImplemented
        return self._identity() == other._identity()

    def __hash__(self):
        try:
            return self._hash
        except AttributeError:
            h = hash((self.game_id, self._identity()))
            object.__setattr__(self, "_hash", h)
            return h


class ClassicalGame(ABC):
    """Ruleset of a classical game: positions x move labels -> position/None."""

    game_id: ClassVar[str]
    impartial: ClassVar[bool]

    @abstractmethod
    def apply(self, pos: Position, move: MoveLabel) -> Optional[Position]:
        """Successor of `pos` under `move`, or None when the move is illegal.

        Never mutates `pos`. Raises UsageError when `move` belongs to a
        different game (distinct from an in-game illegal move).
        """

    @abstractmethod
    def legal_moves(self, pos: Position, who: PlayerId) -> list[MoveLabel]:
        """All labels m with apply(pos, m) != None and who in m.owner,
        sorted by label."""

    @abstractmethod
    def measure(self, pos: Position) -> int:
        """Nonnegative size that every move strictly decreases; bounds the
        number of moves playable from `pos`."""

    @abstractmethod
    def parse_position(self, text: str) -> Position:
        """Parse the payload part of a position string (no game prefix)."""

    @abstractmethod
    def parse_move(self, text: str) -> MoveLabel: ...

    @abstractmethod
    def format_move(self, move: MoveLabel) -> str: ...

    def cached_legal_moves(self, pos: Position, who: PlayerId) -> tuple[MoveLabel, ...]:
        """legal_moves with a per-game memo; positions are immutable so hits
        always equal recomputation."""
        try:
            cache = self._legal_cache
        except AttributeError:
            cache = self._legal_cache = {}
        key = (pos, who)
        hit = cache.get(key)
        if hit is None:
            hit = tuple(self.legal_moves(pos, who))
            cache[key] = hit
        return hit

    def cached_apply(self, pos: Position, move: MoveLabel) -> Optional[Position]:
        """apply via the memoized per-position transition row."""
        return self.cached_transitions(pos).get(move)

    def cached_transitions(self, pos: Position) -> dict[MoveLabel, Position]:
        """All legal moves from `pos` (either player) mapped to successors.

        Successor objects are shared across queries, so their lazily cached
        hashes and encodings are computed once per distinct position.
        """
        try:
            cache = self._transition_cache
        except AttributeError:
            cache = self._transition_cache = {}
        row = cache.get(pos)
        if row is None:
            row = {}
            for who in PlayerId:
                for m in self.cached_legal_moves(pos, who):
                    if m not in row:
                        row[m] = self.intern_position(self.apply(pos, m))
            cache[pos] = row
        return row

    def intern_position(self, pos: Position) -> Position:
        """One shared object per distinct position, so set operations in the
        search layers hit the identity fast path."""
        try:
            table = self._pos_intern
        except AttributeError:
            table = self._pos_intern = {}
        return table.setdefault(pos, pos)

    def check_position(self, pos: Position) -> None:
        if pos.game_id != self.game_id:
            raise UsageError(
                f"position of game '{pos.game_id}' passed to game '{self.game_id}'"
            )

    def check_move(self, move: MoveLabel) -> None:
        if move.game_id != self.game_id:
            raise UsageError(
                f"move of game '{move.game_id}' passed to game '{self.game_id}'"
            )


def apply_move(game: ClassicalGame, pos: Position, move: MoveLabel) -> Optional[Position]:
    """Apply one classical move; None means illegal, UsageError means the
    move or position belongs to a different game."""
    game.check_position(pos)
    game.check_move(move)
    return game.apply(pos, move)


def legal_classical_moves(game: ClassicalGame, pos: Position, who: PlayerId) -> list[MoveLabel]:
    game.check_position(pos)
    return game.legal_moves(pos, who)
