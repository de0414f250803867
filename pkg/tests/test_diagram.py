"""Diagram machinery: frozen examples plus independent brute-force oracles."""

import itertools

import pytest

from mhrg import (
    all_partitions,
    apply_lr,
    box_count,
    boxes,
    column_height,
    diagonal_expression,
    dual,
    empty_diagram,
    full_rectangle,
    has_box,
    hook_cells,
    hook_multiset,
    index_set,
    make_board,
    partition,
    partition_of_diagonal,
    partition_of_index_set,
    reflect_index,
    remove_hook,
    transition_indices,
    unimodal_label,
)

SWEEP_BOARDS = [(1, 1), (1, 2), (1, 5), (2, 2), (2, 3), (2, 4), (2, 5),
                (3, 3), (3, 4), (3, 5), (4, 4), (1, 7)]


def brute_partitions(m, n):
    """All weakly decreasing tuples, generated without the index bijection."""
    out = []
    for combo in itertools.product(range(n + 1), repeat=m):
        if all(combo[i] >= combo[i + 1] for i in range(m - 1)):
            out.append(combo)
    return sorted(out)


def removed_box_set(parts, i, j):
    """Hook removal spelled as a set of boxes: drop the hook, shift the rest."""
    hook = hook_cells(parts, i, j)
    kept = set()
    for (a, b) in boxes(parts):
        if (a, b) in hook:
            continue
        if a > i and b > j:
            kept.add((a - 1, b - 1))
        else:
            kept.add((a, b))
    return kept


def test_make_board_frozen():
    assert make_board(2, 3) == make_board(2, 3)
    b = make_board(2, 3)
    assert (b.m, b.n, b.parity, b.max_label) == (2, 3, 0, 2)
    b = make_board(3, 5)
    assert (b.parity, b.max_label) == (1, 4)
    b = make_board(1, 1)
    assert (b.parity, b.max_label) == (1, 1)


@pytest.mark.parametrize("m,n", [(0, 1), (3, 2), (2, 0), (-1, 4)])
def test_make_board_rejects(m, n):
    with pytest.raises(ValueError):
        make_board(m, n)


def test_partition_factory_pads_and_validates():
    b = make_board(3, 5)
    assert partition(b, (4, 3)) == (4, 3, 0)
    assert partition(b, ()) == (0, 0, 0)
    assert partition(b, [5, 5, 5]) == (5, 5, 5)
    with pytest.raises(ValueError):
        partition(b, (1, 2))
    with pytest.raises(ValueError):
        partition(b, (6, 1))
    with pytest.raises(ValueError):
        partition(b, (3, 1, -1))
    with pytest.raises(ValueError):
        partition(b, (1, 1, 1, 1))


def test_box_helpers():
    parts = (3, 1)
    assert box_count(parts) == 4
    assert list(boxes(parts)) == [(1, 1), (1, 2), (1, 3), (2, 1)]
    assert has_box(parts, 1, 3) and not has_box(parts, 2, 2)
    assert column_height(parts, 1) == 2 and column_height(parts, 2) == 1
    b = make_board(2, 3)
    assert full_rectangle(b) == (3, 3) and empty_diagram(b) == (0, 0)


def test_index_set_frozen():
    b = make_board(2, 3)
    assert index_set(b, (3, 3)) == (4, 5)
    assert index_set(b, (0, 0)) == (1, 2)
    assert index_set(make_board(3, 5), (4, 3, 1)) == (2, 5, 7)


def test_partition_of_index_set_frozen():
    b = make_board(2, 3)
    assert partition_of_index_set(b, (4, 5)) == (3, 3)
    assert partition_of_index_set(b, (1, 2)) == (0, 0)
    assert partition_of_index_set(make_board(3, 5), (1, 2, 7)) == (4, 0, 0)


def test_partition_of_index_set_rejects():
    b = make_board(2, 3)
    with pytest.raises(ValueError):
        partition_of_index_set(b, (4,))
    with pytest.raises(ValueError):
        partition_of_index_set(b, (4, 4))
    with pytest.raises(ValueError):
        partition_of_index_set(b, (0, 3))
    with pytest.raises(ValueError):
        partition_of_index_set(b, (2, 6))


@pytest.mark.parametrize("m,n", SWEEP_BOARDS)
def test_index_bijection_sweep(m, n):
    board = make_board(m, n)
    everything = list(all_partitions(board))
    assert everything == brute_partitions(m, n)
    for parts in everything:
        assert partition_of_index_set(board, index_set(board, parts)) == parts
    for subset in itertools.combinations(range(1, m + n + 1), m):
        assert index_set(board, partition_of_index_set(board, subset)) == subset


def test_dual_frozen():
    b = make_board(2, 3)
    assert dual(b, (3, 1)) == (2, 0)
    assert dual(b, (0, 0)) == (3, 3)
    assert dual(make_board(3, 5), (4, 3, 1)) == (4, 2, 1)


@pytest.mark.parametrize("m,n", SWEEP_BOARDS)
def test_dual_involution_and_reflection_sweep(m, n):
    board = make_board(m, n)
    for parts in all_partitions(board):
        co = dual(board, parts)
        assert dual(board, co) == parts
        mirrored = tuple(sorted(reflect_index(board, x)
                                for x in index_set(board, parts)))
        assert index_set(board, co) == mirrored


def test_unimodal_label_frozen():
    b = make_board(3, 5)
    assert unimodal_label(b, 1, 1) == 3
    assert unimodal_label(b, 2, 3) == 4
    assert unimodal_label(b, 3, 1) == 1
    b = make_board(2, 3)
    grid = [[unimodal_label(b, i, j) for j in (1, 2, 3)] for i in (1, 2)]
    assert grid == [[2, 2, 1], [1, 2, 2]]
    with pytest.raises(ValueError):
        unimodal_label(b, 3, 1)
    with pytest.raises(ValueError):
        unimodal_label(b, 1, 4)


@pytest.mark.parametrize("m,n", SWEEP_BOARDS)
def test_unimodal_label_range_sweep(m, n):
    board = make_board(m, n)
    labels = [unimodal_label(board, i, j) for i, j in boxes(full_rectangle(board))]
    assert min(labels) == 1
    assert max(labels) == board.max_label


def test_hook_cells_frozen():
    assert hook_cells((3, 3), 1, 3) == {(1, 3), (2, 3)}
    assert hook_cells((1,), 1, 1) == {(1, 1)}
    assert hook_cells((4, 3, 1), 2, 1) == {(2, 1), (2, 2), (2, 3), (3, 1)}
    with pytest.raises(ValueError):
        hook_cells((3, 1), 2, 2)


def test_hook_multiset_frozen():
    b = make_board(2, 3)
    assert hook_multiset(b, (3, 3), 1, 3) == (1, 2)
    assert hook_multiset(b, (3, 3), 1, 1) == (1, 1, 2, 2)
    assert hook_multiset(make_board(1, 1), (1,), 1, 1) == (1,)


def test_remove_hook_frozen():
    assert remove_hook((4, 3, 1), 2, 1) == (4, 0, 0)
    assert remove_hook((1,), 1, 1) == (0,)
    assert remove_hook((3, 3), 1, 3) == (2, 2)
    with pytest.raises(ValueError):
        remove_hook((2, 2), 1, 3)


@pytest.mark.parametrize("m,n", SWEEP_BOARDS)
def test_remove_hook_matches_box_oracle(m, n):
    board = make_board(m, n)
    for parts in all_partitions(board):
        for (i, j) in boxes(parts):
            shrunk = remove_hook(parts, i, j)
            assert partition(board, shrunk) == shrunk
            assert set(boxes(shrunk)) == removed_box_set(parts, i, j)
            assert box_count(shrunk) == box_count(parts) - len(hook_cells(parts, i, j))


def test_transition_indices_frozen():
    assert transition_indices(make_board(3, 5), (4, 3, 1), 2, 1) == (2, 5)
    assert transition_indices(make_board(1, 1), (1,), 1, 1) == (2, 2)
    assert transition_indices(make_board(2, 3), (3, 3), 1, 3) == (4, 5)
    with pytest.raises(ValueError):
        transition_indices(make_board(2, 3), (3, 1), 2, 2)


@pytest.mark.parametrize("m,n", SWEEP_BOARDS)
def test_transition_window_sweep(m, n):
    board = make_board(m, n)
    for parts in all_partitions(board):
        before = diagonal_expression(board, parts)
        for (i, j) in boxes(parts):
            l, r = transition_indices(board, parts, i, j)
            assert 2 <= l <= r <= m + n
            after = list(before)
            for k in range(l, r + 1):
                after[k - 1] -= 1
            assert tuple(after) == diagonal_expression(board, remove_hook(parts, i, j))


def test_diagonal_expression_frozen():
    b = make_board(3, 5)
    assert diagonal_expression(b, (4, 3, 1)) == (0, 1, 1, 2, 2, 1, 1, 0, 0)
    assert diagonal_expression(b, (0, 0, 0)) == (0,) * 9
    assert diagonal_expression(b, (5, 5, 5)) == (0, 1, 2, 3, 3, 3, 2, 1, 0)


def test_partition_of_diagonal_frozen():
    b = make_board(3, 5)
    assert partition_of_diagonal(b, (0, 1, 1, 2, 2, 1, 1, 0, 0)) == (4, 3, 1)
    assert partition_of_diagonal(b, (0,) * 9) == (0, 0, 0)
    assert partition_of_diagonal(make_board(2, 3), (0, 1, 2, 2, 1, 0)) == (3, 3)


def test_partition_of_diagonal_rejects():
    b = make_board(2, 3)
    with pytest.raises(ValueError):
        partition_of_diagonal(b, (0, 1, 2, 2, 1))
    with pytest.raises(ValueError):
        partition_of_diagonal(b, (1, 1, 2, 2, 1, 0))
    with pytest.raises(ValueError):
        partition_of_diagonal(b, (0, 1, 2, 2, 1, 1))
    with pytest.raises(ValueError):
        partition_of_diagonal(b, (0, 2, 2, 2, 1, 0))
    with pytest.raises(ValueError):
        partition_of_diagonal(b, (0, 1, 0, 2, 1, 0))


@pytest.mark.parametrize("m,n", SWEEP_BOARDS)
def test_diagonal_bijection_sweep(m, n):
    board = make_board(m, n)
    seen = set()
    total = 0
    for parts in all_partitions(board):
        expr = diagonal_expression(board, parts)
        assert sum(expr) == box_count(parts)
        assert partition_of_diagonal(board, expr) == parts
        seen.add(expr)
        total += 1
    assert len(seen) == total


def test_apply_lr_frozen():
    assert apply_lr(make_board(3, 5), (4, 3, 1), 2, 5) == (4, 0, 0)
    b = make_board(2, 3)
    for l in range(2, 6):
        for r in range(l, 6):
            assert apply_lr(b, (0, 0), l, r) is None
    assert apply_lr(b, (3, 3), 4, 5) == (2, 2)
    with pytest.raises(ValueError):
        apply_lr(b, (3, 3), 1, 2)
    with pytest.raises(ValueError):
        apply_lr(b, (3, 3), 4, 6)


@pytest.mark.parametrize("m,n", SWEEP_BOARDS)
def test_apply_lr_matches_box_search_sweep(m, n):
    board = make_board(m, n)
    for parts in all_partitions(board):
        by_window = {}
        for (i, j) in boxes(parts):
            window = transition_indices(board, parts, i, j)
            by_window.setdefault(window, set()).add(remove_hook(parts, i, j))
        for l in range(2, m + n + 1):
            for r in range(l, m + n + 1):
                direct = apply_lr(board, parts, l, r)
                if (l, r) in by_window:
                    assert by_window[(l, r)] == {direct}
                else:
                    assert direct is None
