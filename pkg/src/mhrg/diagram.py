"""Young diagrams confined to an m-by-n rectangle.

A position is a partition, stored as a plain tuple of m weakly decreasing
nonnegative parts (padded with zeros, never trimmed).  Boxes are 1-based
(row, column) pairs.  This module carries the combinatorial machinery the
game engine is built on: the partition/index-set bijection, duals, hooks
and hook removal, the unimodal box numbering, diagonal count vectors, and
the (l, r) window transition that hook removal induces on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

Parts = tuple[int, ...]
Box = tuple[int, int]


@dataclass(frozen=True)
class Board:
    """An m-by-n rectangle (m <= n) with its derived labeling constants.

    parity is 1 when m+n is even and 0 otherwise; max_label is the largest
    value the unimodal numbering takes on the rectangle, (m+n-1+parity)/2.
    """

    m: int
    n: int
    parity: int
    max_label: int


def make_board(m: int, n: int) -> Board:
    """Build the board for an m-by-n rectangle; requires 1 <= m <= n."""
    if not (isinstance(m, int) and isinstance(n, int)):
        raise ValueError("board dimensions must be integers")
    if not 1 <= m <= n:
        raise ValueError(f"invalid board ({m}, {n}): need 1 <= m <= n")
    parity = 1 if (m + n) % 2 == 0 else 0
    return Board(m, n, parity, (m + n - 1 + parity) // 2)


def partition(board: Board, parts) -> Parts:
    """Validate a part sequence against the board and pad it to length m.

    Accepts any iterable of at most m integers with
    n >= parts[0] >= ... >= parts[-1] >= 0.
    """
    given = tuple(int(p) for p in parts)
    padded = given + (0,) * (board.m - len(given))
    if len(padded) > board.m:
        raise ValueError(f"partition {padded} has more than {board.m} rows")
    if any(padded[i] < padded[i + 1] for i in range(len(padded) - 1)):
        raise ValueError(f"parts {padded} are not weakly decreasing")
    if padded and (padded[0] > board.n or padded[-1] < 0):
        raise ValueError(f"parts {padded} leave the {board.m}x{board.n} rectangle")
    return padded


def full_rectangle(board: Board) -> Parts:
    """The starting position: every row filled to width n."""
    return (board.n,) * board.m


def empty_diagram(board: Board) -> Parts:
    """The ending position: no boxes."""
    return (0,) * board.m


def box_count(parts: Parts) -> int:
    """Number of boxes in the diagram."""
    return sum(parts)


def boxes(parts: Parts) -> Iterator[Box]:
    """All boxes of the diagram in row-major order."""
    for i, width in enumerate(parts, start=1):
        for j in range(1, width + 1):
            yield (i, j)


def has_box(parts: Parts, i: int, j: int) -> bool:
    """Whether (i, j) is a box of the diagram."""
    return 1 <= i <= len(parts) and 1 <= j <= parts[i - 1]


def column_height(parts: Parts, j: int) -> int:
    """Number of rows whose width reaches column j (the conjugate part)."""
    return sum(1 for width in parts if width >= j)


def all_partitions(board: Board) -> Iterator[Parts]:
    """Every partition fitting the board, in ascending lexicographic order."""

    def rows(row: int, cap: int) -> Iterator[Parts]:
        if row == board.m:
            yield ()
            return
        for width in range(cap + 1):
            for rest in rows(row + 1, width):
                yield (width,) + rest

    return rows(0, board.n)


def index_set(board: Board, parts: Parts) -> tuple[int, ...]:
    """The m-element subset of [1, m+n] encoding the partition.

    Element t (from smallest) is the t-th part counted from the bottom row
    plus t, which makes the map a bijection between partitions in the
    rectangle and m-subsets of [1, m+n].
    """
    m = board.m
    return tuple(parts[m - t] + t for t in range(1, m + 1))


def partition_of_index_set(board: Board, elements) -> Parts:
    """Inverse of index_set; rejects inputs that are not m-subsets of [1, m+n]."""
    elems = sorted(elements)
    m, n = board.m, board.n
    if len(elems) != m or len(set(elems)) != m:
        raise ValueError(f"index set {elems} must have exactly {m} distinct elements")
    if elems[0] < 1 or elems[-1] > m + n:
        raise ValueError(f"index set {elems} leaves the range [1, {m + n}]")
    return tuple(elems[m - k] - (m - k + 1) for k in range(1, m + 1))


def reflect_index(board: Board, x: int) -> int:
    """Mirror an index-set element across the middle of [1, m+n]."""
    return board.m + board.n + 1 - x


def dual(board: Board, parts: Parts) -> Parts:
    """The complement of the diagram in the rectangle, rotated half a turn."""
    return tuple(board.n - p for p in reversed(parts))


def unimodal_label(board: Board, i: int, j: int) -> int:
    """The numbering min(j-i+m, i-j+n) of box (i, j) of the rectangle."""
    if not (1 <= i <= board.m and 1 <= j <= board.n):
        raise ValueError(f"box ({i}, {j}) outside the {board.m}x{board.n} rectangle")
    return min(j - i + board.m, i - j + board.n)


def _check_box(parts: Parts, i: int, j: int) -> None:
    if not has_box(parts, i, j):
        raise ValueError(f"box ({i}, {j}) not in diagram {parts}")


def hook_cells(parts: Parts, i: int, j: int) -> set[Box]:
    """The box (i, j) with its arm (same row, right) and leg (same column, below)."""
    _check_box(parts, i, j)
    cells = {(i, jj) for jj in range(j, parts[i - 1] + 1)}
    cells.update((ii, j) for ii in range(i + 1, column_height(parts, j) + 1))
    return cells


def hook_multiset(board: Board, parts: Parts, i: int, j: int) -> tuple[int, ...]:
    """Sorted tuple of unimodal labels over the hook at (i, j)."""
    return tuple(sorted(unimodal_label(board, a, b) for a, b in hook_cells(parts, i, j)))


def remove_hook(parts: Parts, i: int, j: int) -> Parts:
    """Delete the hook at (i, j) and close the gap.

    Boxes strictly below-right of the hook corner shift up-left by one
    diagonal step; rows above i and rows below the hook's leg are untouched.
    In part terms: rows i..depth-1 take the next row's width minus one and
    row depth (the leg's last row) is cut to j-1.
    """
    _check_box(parts, i, j)
    depth = column_height(parts, j)
    out = list(parts)
    for row in range(i, depth):
        out[row - 1] = parts[row] - 1
    out[depth - 1] = j - 1
    return tuple(out)


def transition_indices(board: Board, parts: Parts, i: int, j: int) -> tuple[int, int]:
    """The window (l, r) that removing the hook at (i, j) subtracts from.

    With depth the deepest occupied row of column j and reach the rightmost
    occupied column of row i: l = m+j-depth+1 and r = m+reach-i+1.  The
    diagonal count vector of the result equals that of parts with one
    subtracted from every entry l..r.
    """
    _check_box(parts, i, j)
    depth = column_height(parts, j)
    reach = parts[i - 1]
    return (board.m + j - depth + 1, board.m + reach - i + 1)


def diagonal_expression(board: Board, parts: Parts) -> tuple[int, ...]:
    """Box counts per diagonal, indexed so entry k counts boxes with j-i = k-m-1.

    The vector has m+n+1 entries; the first and last are always zero since
    the extreme diagonals lie outside the rectangle.
    """
    counts = [0] * (board.m + board.n + 1)
    for i, width in enumerate(parts, start=1):
        for j in range(1, width + 1):
            counts[j - i + board.m] += 1
    return tuple(counts)


def partition_of_diagonal(board: Board, counts) -> Parts:
    """Inverse of diagonal_expression; rejects vectors no diagram produces.

    A valid vector starts and ends at zero, climbs by 0 or 1 up to the main
    diagonal's entry, and descends by 0 or 1 after it.  Row i of the result
    has one box on each diagonal whose run of rows covers i.
    """
    m, n = board.m, board.n
    a = tuple(int(x) for x in counts)
    if len(a) != m + n + 1:
        raise ValueError(f"diagonal vector needs {m + n + 1} entries, got {len(a)}")
    if a[0] != 0 or a[-1] != 0:
        raise ValueError("diagonal vector must start and end at zero")
    for k in range(2, m + 2):
        if not 0 <= a[k - 1] - a[k - 2] <= 1:
            raise ValueError(f"entries {k - 1}..{k} of {a} step outside [0, 1]")
    for k in range(m + 1, m + n + 1):
        if not 0 <= a[k - 1] - a[k] <= 1:
            raise ValueError(f"entries {k}..{k + 1} of {a} step outside [0, -1]")
    parts = []
    for i in range(1, m + 1):
        width = 0
        for k in range(2, m + 2):
            if m + 2 - k <= i <= m + 1 - k + a[k - 1]:
                width += 1
        for k in range(m + 2, m + n + 1):
            if i <= a[k - 1]:
                width += 1
        parts.append(width)
    return tuple(parts)


def apply_lr(board: Board, parts: Parts, l: int, r: int) -> Parts | None:
    """Apply a window transition directly on the index set, if possible.

    A hook removal with window (l, r) exists exactly when l-1 is missing
    from the index set and r is present; the result swaps r out for l-1.
    Returns None when no box of the diagram has that transition.
    """
    if not 2 <= l <= r <= board.m + board.n:
        raise ValueError(f"window ({l}, {r}) outside 2 <= l <= r <= {board.m + board.n}")
    elems = set(index_set(board, parts))
    if l - 1 in elems or r not in elems:
        return None
    elems.discard(r)
    elems.add(l - 1)
    return partition_of_index_set(board, elems)
