"""Superposed-move variants of combinatorial games.

Classical games with labeled moves (token heaps, pin lines, domino grids,
edge stalks, and their disjunctive sums), a quantum lift where a turn plays a
set of classical moves at once under five legality variants, a memoized
solver for outcomes and values, and a referee for live play with an
announce/challenge/exhibit protocol.
"""

from .games import (
    BOTH_PLAYERS,
    DOMINEERING,
    NIM,
    OCTAL06,
    ClassicalGame,
    HackenbushGame,
    MoveLabel,
    NotationError,
    PlayerId,
    Position,
    UsageError,
    apply_move,
    legal_classical_moves,
    make_sum,
    nim_position,
)
from .quantum import (
    QMove,
    QMoveRejected,
    QuantumPosition,
    RejectionReason,
    RulesetKind,
    RulesetVariant,
    apply_qmove,
    available_classical_moves,
    canonicalize,
    enumerate_qmoves,
    is_covered,
    is_legal_qmove,
    singleton,
)
from .referee import (
    ChallengeVerdict,
    History,
    Run,
    adjudicate_challenge,
    exhibit_runs,
    replay_history,
    valid_runs,
)
from .solver import (
    Outcome,
    TranspositionTable,
    best_move,
    compare_product_claim,
    grundy,
    mex,
    outcome,
    value_table,
    wins_moving_first,
)

__version__ = "0.1.0"
