"""Acceptance checks.

Each test covers one acceptance criterion at its stated bound and prints
one PASS or FAIL line; run with `pytest tests/test_acceptance.py -v -s`.
"""

import time
from contextlib import contextmanager
from functools import lru_cache

from mhrg import (
    OP_DOUBLE,
    all_partitions,
    boxes,
    diagonal_expression,
    dual,
    f_value,
    f_value_by_index_criterion,
    full_rectangle,
    grundy_table,
    hook_multiset,
    index_set,
    is_position_index_test,
    is_position_part_sum_test,
    make_board,
    mhr_move,
    moves_from,
    p_positions_m2_closed_form,
    p_positions_two_rows_closed_form,
    partition,
    partition_of_diagonal,
    partition_of_index_set,
    reachable_graph,
    remove_hook,
    transition_indices,
)


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"FAIL: {name}")
        raise
    print(f"PASS: {name}")


def boards_with_sum_up_to(max_sum):
    for m in range(1, max_sum // 2 + 1):
        for n in range(m, max_sum - m + 1):
            yield make_board(m, n)


def test_board_2x3_reachable_set():
    with criterion("board 2x3 reachable set and excluded set"):
        started = time.monotonic()
        board = make_board(2, 3)
        graph = reachable_graph(board)
        assert graph.nodes == {(3, 3), (3, 1), (2, 0), (0, 0)}
        excluded = set(all_partitions(board)) - graph.nodes
        assert excluded == {(1, 0), (1, 1), (2, 1), (2, 2), (3, 0), (3, 2)}
        assert time.monotonic() - started < 1.0


def test_diagonal_expression_and_transition_window():
    with criterion("diagonal expression of (4,3,1) and transition of box (2,1)"):
        started = time.monotonic()
        board = make_board(3, 5)
        parts = partition(board, (4, 3, 1))
        assert diagonal_expression(board, parts) == (0, 1, 1, 2, 2, 1, 1, 0, 0)
        assert transition_indices(board, parts, 2, 1) == (2, 5)
        assert remove_hook(parts, 2, 1) == (4, 0, 0)
        assert time.monotonic() - started < 1.0


def test_membership_characterizations_coincide():
    with criterion("membership characterizations coincide, m+n <= 12"):
        started = time.monotonic()
        for board in boards_with_sum_up_to(12):
            reachable = reachable_graph(board).nodes
            by_index = set()
            by_sums = set()
            for parts in all_partitions(board):
                if is_position_index_test(board, parts):
                    by_index.add(parts)
                if is_position_part_sum_test(board, parts):
                    by_sums.add(parts)
            assert by_index == reachable, board
            assert by_sums == reachable, board
            for parts in reachable:
                assert dual(board, parts) in reachable, (board, parts)
        assert time.monotonic() - started < 120.0


def test_match_count_bound_and_index_criterion():
    with criterion("match count <= 1 and index criterion agreement, m+n <= 12"):
        for board in boards_with_sum_up_to(12):
            for parts in all_partitions(board):
                for i, j in boxes(parts):
                    pattern = hook_multiset(board, parts, i, j)
                    shrunk = remove_hook(parts, i, j)
                    raw = sum(hook_multiset(board, shrunk, a, b) == pattern
                              for a, b in boxes(shrunk))
                    assert raw <= 1, (board, parts, i, j)
                    assert raw == f_value(board, parts, (i, j))
                    assert raw == f_value_by_index_criterion(board, parts, (i, j))


def test_pattern_removal_properties():
    with criterion("pattern gone after double removal; equal patterns move alike"):
        for board in boards_with_sum_up_to(10):
            for parts in all_partitions(board):
                records = {}
                for i, j in boxes(parts):
                    record = mhr_move(board, parts, (i, j))
                    pattern = hook_multiset(board, parts, i, j)
                    if record.op == OP_DOUBLE:
                        final = record.target
                        assert all(
                            hook_multiset(board, final, a, b) != pattern
                            for a, b in boxes(final)), (board, parts, i, j)
                    records.setdefault(pattern, []).append(record)
                for group in records.values():
                    ops = {record.op for record in group}
                    targets = {record.target for record in group}
                    assert len(ops) == 1 and len(targets) == 1, (board, parts)


def test_grundy_chain_2x3_against_brute_force():
    with criterion("grundy values 3,2,1,0 on the 2x3 chain by brute force"):
        board = make_board(2, 3)

        @lru_cache(maxsize=None)
        def brute(parts):
            seen = {brute(r.target) for r in moves_from(board, parts)}
            value = 0
            while value in seen:
                value += 1
            return value

        chain = [(3, 3), (3, 1), (2, 0), (0, 0)]
        assert [brute(p) for p in chain] == [3, 2, 1, 0]
        table = grundy_table(reachable_graph(board))
        assert [table[p] for p in chain] == [3, 2, 1, 0]


def test_row_count_transfer():
    with criterion("membership and grundy transfer across boards, m+n <= 12"):
        started = time.monotonic()
        for big in boards_with_sum_up_to(12):
            m, n = big.m, big.n
            big_graph = reachable_graph(big)
            big_table = grundy_table(big_graph)
            for t in range(0, m + 1):
                small = make_board(t, n - m + t) if t else None
                if small is not None:
                    small_graph = reachable_graph(small)
                    small_table = grundy_table(small_graph)
                for parts in all_partitions(big):
                    if any(parts[row] for row in range(t, m)):
                        continue
                    member = parts in big_graph.nodes
                    if t == 0:
                        # only the empty diagram has no occupied row
                        assert member, (big, t)
                        assert big_table[parts] == 0, (big, t)
                        continue
                    if parts[0] > small.n:
                        # too wide to fit the small rectangle: never a member
                        assert not member, (big, t, parts)
                        continue
                    shrunk = partition(small, parts[:t])
                    assert member == (shrunk in small_graph.nodes), \
                        (big, t, parts)
                    if member:
                        assert big_table[parts] == small_table[shrunk], \
                            (big, t, parts)
        assert time.monotonic() - started < 180.0


def test_m2_closed_form_matches_grundy_zeros():
    with criterion("two-row board closed form equals grundy zeros, n <= 18"):
        started = time.monotonic()
        for n in range(2, 19):
            board = make_board(2, n)
            graph = reachable_graph(board)
            table = grundy_table(graph)
            zeros = {p for p in graph.nodes if table[p] == 0}
            assert p_positions_m2_closed_form(n) == zeros, n
        assert time.monotonic() - started < 60.0


def test_two_rows_closed_form_matches_grundy_zeros():
    with criterion("at-most-two-rows closed form equals grundy zeros, m+n <= 14"):
        for board in boards_with_sum_up_to(14):
            if board.m < 2:
                continue
            graph = reachable_graph(board)
            table = grundy_table(graph)
            zeros = {p for p in graph.nodes
                     if table[p] == 0
                     and all(p[row] == 0 for row in range(2, board.m))}
            expected = p_positions_two_rows_closed_form(board.m, board.n)
            assert expected == zeros, board


def test_bijection_round_trips():
    with criterion("index-set and diagonal round trips, m+n <= 10"):
        for board in boards_with_sum_up_to(10):
            for parts in all_partitions(board):
                elems = index_set(board, parts)
                assert partition_of_index_set(board, elems) == parts
                diag = diagonal_expression(board, parts)
                assert partition_of_diagonal(board, diag) == parts


def test_every_member_has_member_predecessor():
    with criterion("every member except the start has a member in-edge, m+n <= 10"):
        for board in boards_with_sum_up_to(10):
            graph = reachable_graph(board)
            targets = {record.target
                       for parts in graph.nodes
                       for record in graph.records(parts)}
            start = full_rectangle(board)
            assert graph.nodes - {start} <= targets, board
