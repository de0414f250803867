"""The multiple hook removing game: move rule and reachability.

A move picks a box and removes its hook.  If exactly one box of the
once-removed diagram carries the same hook label multiset as the removed
hook, that second hook is removed too in the same move (tag MHR2);
otherwise the move ends after one removal (tag MHR1).  The count of such
matching boxes is always 0 or 1, which is what makes the rule well defined.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache

from .diagram import (
    Board,
    Box,
    Parts,
    box_count,
    boxes,
    full_rectangle,
    hook_multiset,
    remove_hook,
    transition_indices,
    index_set,
    reflect_index,
)

OP_SINGLE = "MHR1"
OP_DOUBLE = "MHR2"

DEFAULT_MAX_POSITIONS = 1_000_000
MAX_POSITIONS_ENV = "MHRG_MAX_POSITIONS"


class PositionLimitError(ValueError):
    """Raised when a board's position count exceeds the enumeration guardrail."""


@dataclass(frozen=True)
class MoveRecord:
    """One complete move: the chosen box, its window, and the final position.

    second_box and second_lr are present exactly when op is MHR2; the second
    window is always the first one mirrored, (m+n+2-r, m+n+2-l).
    """

    source: Parts
    box: Box
    first_lr: tuple[int, int]
    op: str
    second_box: Box | None
    second_lr: tuple[int, int] | None
    target: Parts


@dataclass
class GameGraph:
    """All positions reachable from start, with every move between them.

    edges maps each node to its MoveRecords in row-major box order; the
    empty diagram maps to an empty tuple.
    """

    board: Board
    start: Parts
    nodes: frozenset[Parts]
    edges: dict[Parts, tuple[MoveRecord, ...]]

    def records(self, parts: Parts) -> tuple[MoveRecord, ...]:
        """Every move out of a node, one record per box."""
        if parts not in self.edges:
            raise ValueError(f"{parts} is not a node of this graph")
        return self.edges[parts]

    def option_targets(self, parts: Parts) -> tuple[Parts, ...]:
        """Distinct positions reachable in one move, sorted."""
        return tuple(sorted({rec.target for rec in self.records(parts)}))


@lru_cache(maxsize=1 << 16)
def _hook_patterns(board: Board, parts: Parts) -> tuple[tuple[Box, tuple[int, ...]], ...]:
    """Hook label multiset of every box, row-major, cached per position."""
    return tuple((b, hook_multiset(board, parts, *b)) for b in boxes(parts))


def _matching_boxes(board: Board, parts: Parts, pattern: tuple[int, ...]) -> list[Box]:
    return [b for b, pat in _hook_patterns(board, parts) if pat == pattern]


def f_value(board: Board, parts: Parts, box: Box) -> int:
    """How many boxes of the once-removed diagram repeat the removed hook's labels.

    Computed by direct multiset scan, the definitional route; the result is
    guaranteed to be 0 or 1.
    """
    pattern = hook_multiset(board, parts, *box)
    once = remove_hook(parts, *box)
    matches = _matching_boxes(board, once, pattern)
    assert len(matches) <= 1, f"multiple pattern matches after removing {box} from {parts}"
    return len(matches)


def f_value_by_index_criterion(board: Board, parts: Parts, box: Box) -> int:
    """Second route to f_value, via the index set of the once-removed diagram.

    With (l, r) the removal window, the forced second removal exists exactly
    when the mirror of r is absent from the new index set while the mirror
    of l-1 is present.  Kept separate from f_value so the two can be checked
    against each other; they must agree everywhere.
    """
    l, r = transition_indices(board, parts, *box)
    elems = set(index_set(board, remove_hook(parts, *box)))
    hit = reflect_index(board, r) not in elems and reflect_index(board, l - 1) in elems
    return 1 if hit else 0


def mhr_move(board: Board, parts: Parts, box: Box) -> MoveRecord:
    """Play the full move at a box, including the forced second removal if any."""
    i, j = box
    first_lr = transition_indices(board, parts, i, j)
    pattern = hook_multiset(board, parts, i, j)
    once = remove_hook(parts, i, j)
    matches = _matching_boxes(board, once, pattern)
    assert len(matches) <= 1, f"multiple pattern matches after removing {box} from {parts}"
    if not matches:
        return MoveRecord(parts, (i, j), first_lr, OP_SINGLE, None, None, once)
    second = matches[0]
    second_lr = transition_indices(board, once, *second)
    return MoveRecord(parts, (i, j), first_lr, OP_DOUBLE, second, second_lr,
                      remove_hook(once, *second))


def moves_from(board: Board, parts: Parts) -> tuple[MoveRecord, ...]:
    """All moves out of a position, one per box, in row-major order."""
    return tuple(mhr_move(board, parts, b) for b in boxes(parts))


def options(board: Board, parts: Parts) -> tuple[Parts, ...]:
    """Distinct positions reachable in one move, sorted; empty diagram has none."""
    if box_count(parts) == 0:
        raise ValueError("the empty diagram has no moves")
    return tuple(sorted({rec.target for rec in moves_from(board, parts)}))


def position_count(board: Board) -> int:
    """Number of partitions fitting the board, C(m+n, m)."""
    return math.comb(board.m + board.n, board.m)


def effective_position_limit(max_positions: int | None = None) -> int:
    """The enumeration guardrail: explicit argument, else env override, else default."""
    if max_positions is not None:
        return max_positions
    env = os.environ.get(MAX_POSITIONS_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"{MAX_POSITIONS_ENV} must be an integer, got {env!r}") from exc
    return DEFAULT_MAX_POSITIONS


def reachable_graph(board: Board, max_positions: int | None = None,
                    start: Parts | None = None) -> GameGraph:
    """Breadth-first closure of the move rule from the full rectangle.

    The guardrail refuses boards whose total partition count exceeds the
    limit (argument, MHRG_MAX_POSITIONS env var, or one million), since the
    node set can approach it.  The start parameter is experimental: the game
    is defined from the full rectangle, and reachability from other starting
    positions comes with no correctness claims.
    """
    limit = effective_position_limit(max_positions)
    total = position_count(board)
    if total > limit:
        raise PositionLimitError(
            f"board ({board.m}, {board.n}) has {total} partitions, over the limit {limit}")
    root = full_rectangle(board) if start is None else start
    edges: dict[Parts, tuple[MoveRecord, ...]] = {}
    frontier = [root]
    while frontier:
        fresh: list[Parts] = []
        for parts in frontier:
            if parts in edges:
                continue
            recs = moves_from(board, parts)
            edges[parts] = recs
            fresh.extend(rec.target for rec in recs if rec.target not in edges)
        frontier = fresh
    return GameGraph(board, root, frozenset(edges), edges)
