"""Grundy values, membership characterizations, and closed-form P-positions.

Everything here works over the immutable game graphs the engine produces.
Verification entry points return machine-readable reports (counts plus
violation lists) instead of booleans, so callers can attach diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .diagram import (
    Board,
    Parts,
    all_partitions,
    box_count,
    diagonal_expression,
    dual,
    empty_diagram,
    full_rectangle,
    index_set,
    make_board,
    partition_of_diagonal,
    partition_of_index_set,
    reflect_index,
    remove_hook,
    unimodal_label,
    boxes,
    hook_multiset,
    apply_lr,
)
from .engine import (
    OP_DOUBLE,
    OP_SINGLE,
    GameGraph,
    f_value,
    f_value_by_index_criterion,
    mhr_move,
    reachable_graph,
)


def mex(values: Iterable[int]) -> int:
    """Least nonnegative integer missing from the collection."""
    present = set(values)
    k = 0
    while k in present:
        k += 1
    return k


@dataclass
class GrundyTable:
    """Grundy value of every node of a game graph."""

    board: Board
    values: dict[Parts, int]

    def __getitem__(self, parts: Parts) -> int:
        if parts not in self.values:
            raise ValueError(f"{parts} is not a node of the graph this table covers")
        return self.values[parts]

    def p_positions(self) -> frozenset[Parts]:
        """Nodes with Grundy value zero (previous player wins)."""
        return frozenset(p for p, g in self.values.items() if g == 0)


@dataclass
class OutcomeReport:
    """The nodes of a graph split into P-positions and N-positions."""

    board: Board
    p_positions: frozenset[Parts]
    n_positions: frozenset[Parts]


def grundy_table(graph: GameGraph) -> GrundyTable:
    """Evaluate the mex recurrence bottom-up.

    Moves strictly decrease box count, so sweeping nodes by increasing count
    is a topological order and no recursion is needed.
    """
    values: dict[Parts, int] = {}
    for parts in sorted(graph.nodes, key=lambda p: (box_count(p), p)):
        if box_count(parts) == 0:
            values[parts] = 0
        else:
            values[parts] = mex(values[t] for t in graph.option_targets(parts))
    return GrundyTable(graph.board, values)


def outcome_report(graph: GameGraph, table: GrundyTable) -> OutcomeReport:
    """Split the graph's nodes by winner under perfect play."""
    p = table.p_positions()
    return OutcomeReport(graph.board, p, frozenset(graph.nodes - p))


def best_moves(graph: GameGraph, table: GrundyTable, parts: Parts) -> tuple[Parts, ...]:
    """The Grundy-zero options of a node, sorted; empty iff the node is a P-position."""
    if parts not in graph.nodes:
        raise ValueError(f"{parts} is not a node of the graph")
    if box_count(parts) == 0:
        raise ValueError("the empty diagram has no moves")
    return tuple(t for t in graph.option_targets(parts) if table[t] == 0)


def choose_reply(graph: GameGraph, table: GrundyTable, parts: Parts) -> Parts:
    """Deterministic perfect-play reply: the lexicographically smallest winning
    option, falling back to the smallest option when every choice loses."""
    winning = best_moves(graph, table, parts)
    return winning[0] if winning else graph.option_targets(parts)[0]


def restricted_index_set(board: Board, parts: Parts) -> tuple[int, ...]:
    """Index-set elements in the upper window [c+1-parity, m+n]."""
    low = board.max_label + 1 - board.parity
    return tuple(x for x in index_set(board, parts) if x >= low)


def is_position_index_test(board: Board, parts: Parts) -> bool:
    """Reachability test via index sets: the upper-window elements of the
    diagram and of its dual must not collide."""
    mine = set(restricted_index_set(board, parts))
    return mine.isdisjoint(restricted_index_set(board, dual(board, parts)))


def is_position_part_sum_test(board: Board, parts: Parts) -> bool:
    """Reachability test via part sums: no pair of rows i <= j may satisfy
    parts_i + parts_j = n - m + i + j - 1."""
    base = board.n - board.m - 1
    for i in range(1, board.m + 1):
        for j in range(i, board.m + 1):
            if parts[i - 1] + parts[j - 1] == base + i + j:
                return False
    return True


def embed_partition(parts, t: int, m: int, n: int) -> Parts:
    """Pad a diagram of at most t rows with m-t zero rows.

    The result lives on the (m, n) board; membership and Grundy values of
    such positions transfer to the (t, n-m+t) board.
    """
    given = tuple(int(p) for p in parts)
    given = given + (0,) * (t - len(given))
    if not 0 <= t <= m <= n:
        raise ValueError(f"need 0 <= t <= m <= n, got t={t}, m={m}, n={n}")
    if len(given) > t:
        raise ValueError(f"{given} has more than {t} rows")
    if any(given[i] < given[i + 1] for i in range(len(given) - 1)):
        raise ValueError(f"parts {given} are not weakly decreasing")
    if given and (given[0] > n or given[-1] < 0):
        raise ValueError(f"parts {given} leave the {m}x{n} rectangle")
    return given + (0,) * (m - t)


def index_sum(board: Board, parts: Parts) -> int:
    """Sum of the index-set elements; strictly increases toward the full rectangle."""
    return sum(index_set(board, parts))


def p_positions_m2_closed_form(n: int) -> frozenset[Parts]:
    """P-positions of the two-row board (2, n), by the four-case closed form.

    The cases split on n-2 modulo 4; rational range bounds like (p-1)/2 mean
    integer q up to the floor of the bound, so several ranges are empty for
    small p.
    """
    if n < 2:
        raise ValueError(f"two-row board needs n >= 2, got {n}")
    c = make_board(2, n).max_label
    p, s = divmod(n - 2, 4)

    def consecutive(i: int, q: int) -> Parts:
        top = c + i + 4 * q
        return (top, top - 1)

    out: set[Parts] = {(2 * q, 2 * q) for q in range(p + 1)}
    if s == 0:
        for q in range((p - 1) // 2 + 1):
            out.add(consecutive(1, q))
            out.add(consecutive(2, q))
    elif s == 1:
        for q in range((p - 1) // 2 + 1):
            out.add(consecutive(2, q))
            out.add(consecutive(3, q))
    elif s == 2:
        for q in range(p // 2 + 1):
            out.add(consecutive(0, q))
            out.add(consecutive(1, q))
    else:
        out.add((2 * p + 4, 2 * p + 2))
        out.add((2 * p + 5, 2 * p + 4))
        for q in range(1, p // 2 + 1):
            out.add(consecutive(1, q))
            out.add(consecutive(2, q))
    return frozenset(out)


def p_positions_two_rows_closed_form(m: int, n: int) -> frozenset[Parts]:
    """P-positions with at most two rows on the (m, n) board, in closed form.

    Same four cases as the two-row board, keyed on n-m modulo 4 and shifted
    by the board's label constant; every pair is padded with m-2 zero rows.
    """
    if not 2 <= m <= n:
        raise ValueError(f"need 2 <= m <= n, got m={m}, n={n}")
    c = make_board(m, n).max_label
    p, s = divmod(n - m, 4)

    def consecutive(i: int, q: int) -> Parts:
        top = c - m + 2 + i + 4 * q
        return (top, top - 1)

    pairs: set[Parts] = {(2 * q, 2 * q) for q in range(p + 1)}
    if s == 0:
        for q in range((p - 1) // 2 + 1):
            pairs.add(consecutive(1, q))
            pairs.add(consecutive(2, q))
    elif s == 1:
        for q in range((p - 1) // 2 + 1):
            pairs.add(consecutive(2, q))
            pairs.add(consecutive(3, q))
    elif s == 2:
        for q in range(p // 2 + 1):
            pairs.add(consecutive(0, q))
            pairs.add(consecutive(1, q))
    else:
        pairs.add((2 * p + 4, 2 * p + 2))
        pairs.add((2 * p + 5, 2 * p + 4))
        for q in range(1, p // 2 + 1):
            pairs.add(consecutive(1, q))
            pairs.add(consecutive(2, q))
    return frozenset(embed_partition(pair, 2, m, n) for pair in pairs)


@dataclass
class Check:
    """One named verification sweep: how many cases ran, which ones failed."""

    name: str
    checked: int = 0
    violations: list[dict] = field(default_factory=list)

    def expect(self, condition: bool, **details) -> None:
        self.checked += 1
        if not condition:
            self.violations.append(details)


@dataclass
class VerificationReport:
    """Outcome of one verification suite run against one parameter set."""

    suite: str
    params: dict
    checks: list[Check]

    @property
    def violation_count(self) -> int:
        return sum(len(c.violations) for c in self.checks)

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "ok": self.ok,
            "violations": self.violation_count,
            "checks": [
                {
                    "name": c.name,
                    "checked": c.checked,
                    "violations": c.violations[:20],
                }
                for c in self.checks
            ],
        }


def verify_membership(board: Board, max_positions: int | None = None) -> VerificationReport:
    """Check that reachability and both membership formulas agree everywhere.

    Sweeps every partition of the board: reachable-from-full, the index-set
    disjointness test, and the part-sum test must coincide, and membership
    must be closed under taking duals.
    """
    graph = reachable_graph(board, max_positions)
    nodes = graph.nodes
    via_index = Check("reachable-iff-index-test")
    via_sums = Check("reachable-iff-part-sum-test")
    dual_closed = Check("membership-dual-closure")
    total = 0
    for parts in all_partitions(board):
        total += 1
        member = parts in nodes
        via_index.expect(member == is_position_index_test(board, parts),
                         parts=list(parts), member=member)
        via_sums.expect(member == is_position_part_sum_test(board, parts),
                        parts=list(parts), member=member)
        dual_closed.expect(member == (dual(board, parts) in nodes),
                           parts=list(parts), member=member)
    return VerificationReport(
        "main",
        {"m": board.m, "n": board.n, "positions_total": total, "members": len(nodes)},
        [via_index, via_sums, dual_closed],
    )


def verify_row_transfer(t: int, m: int, n: int,
                        max_positions: int | None = None) -> VerificationReport:
    """Check that <=t-row positions behave identically on the (t, n-m+t) board.

    For every diagram with at most t rows fitting the small board: embedded
    membership on (m, n) must match membership on the small board, members
    must carry equal Grundy values, and every <=t-row member of the big
    board must fit the small one.
    """
    if not 0 <= t <= m <= n:
        raise ValueError(f"need 0 <= t <= m <= n, got t={t}, m={m}, n={n}")
    board = make_board(m, n)
    graph = reachable_graph(board, max_positions)
    table = grundy_table(graph)
    membership = Check("membership-transfer")
    grundy = Check("grundy-transfer")
    row_bound = Check("member-first-row-bound")
    params = {"t": t, "m": m, "n": n, "small_n": n - m + t}

    if t == 0:
        empty = empty_diagram(board)
        membership.expect(empty in graph.nodes, parts=[0] * m)
        grundy.expect(table[empty] == 0, parts=[0] * m, grundy=table[empty])
    else:
        small_board = make_board(t, n - m + t)
        small_graph = reachable_graph(small_board, max_positions)
        small_table = grundy_table(small_graph)
        for small in all_partitions(small_board):
            big = embed_partition(small, t, m, n)
            inner = small in small_graph.nodes
            outer = big in graph.nodes
            membership.expect(inner == outer, parts=list(small),
                              small_member=inner, big_member=outer)
            if inner and outer:
                grundy.expect(small_table[small] == table[big], parts=list(small),
                              small_grundy=small_table[small], big_grundy=table[big])

    for parts in graph.nodes:
        if all(p == 0 for p in parts[t:]):
            # a member with at most t rows must fit the small board
            first_row_cap = n - m + t if t else 0
            row_bound.expect(parts[0] <= first_row_cap, parts=list(parts))
    return VerificationReport("t-rows", params, [membership, grundy, row_bound])


def verify_m2_closed_form(n: int, max_positions: int | None = None) -> VerificationReport:
    """Check the (2, n) closed form against the computed Grundy-zero set."""
    board = make_board(2, n)
    graph = reachable_graph(board, max_positions)
    table = grundy_table(graph)
    computed = table.p_positions()
    formula = p_positions_m2_closed_form(n)
    agreement = Check("closed-form-equals-grundy-zeros")
    agreement.expect(formula == computed,
                     missing=sorted(computed - formula),
                     extra=sorted(formula - computed))
    return VerificationReport(
        "closed-form-m2",
        {"n": n, "p_positions": len(computed)},
        [agreement],
    )


def verify_two_rows_closed_form(m: int, n: int,
                                max_positions: int | None = None) -> VerificationReport:
    """Check the general closed form against the <=2-row Grundy-zero subset."""
    board = make_board(m, n)
    graph = reachable_graph(board, max_positions)
    table = grundy_table(graph)
    computed = frozenset(p for p in table.p_positions() if all(x == 0 for x in p[2:]))
    formula = p_positions_two_rows_closed_form(m, n)
    agreement = Check("closed-form-equals-two-row-grundy-zeros")
    agreement.expect(formula == computed,
                     missing=sorted(computed - formula),
                     extra=sorted(formula - computed))
    return VerificationReport(
        "closed-form-two-rows",
        {"m": m, "n": n, "p_positions": len(computed)},
        [agreement],
    )


def _predicts_double(board: Board, source: Parts, l: int, r: int) -> bool:
    """Whether a move with window (l, r) out of source must be an MHR2 move."""
    mirror = reflect_index(board, l - 1)
    elems = set(index_set(board, source))
    return (mirror in elems and mirror != r) or l - 1 == mirror


def _ascend(board: Board, graph: GameGraph, parts: Parts):
    """Construct a member with a move into parts, with the expected op tag.

    Chooses the largest absent index above n and swaps it against the
    largest present index below it; when the mirror of the absent index is
    itself present (and distinct from the swapped element), the predecessor
    must instead give up that mirror pair, which forces an MHR2 move.
    """
    elems = set(index_set(board, parts))
    r = max(x for x in range(board.n + 1, board.m + board.n + 1) if x not in elems)
    x = max(e for e in elems if e < r)
    l = x + 1
    r_mirror = reflect_index(board, r)
    if r_mirror not in elems or r_mirror == l - 1:
        pred_elems = (elems - {l - 1}) | {r}
        op = OP_SINGLE
    else:
        pred_elems = (elems - {r_mirror, l - 1}) | {r, reflect_index(board, l - 1)}
        op = OP_DOUBLE
    return partition_of_index_set(board, pred_elems), (l, r), op


def verify_engine_invariants(board: Board,
                             max_positions: int | None = None) -> VerificationReport:
    """Exhaustive structural sweep over one board.

    Covers the bijection round-trips, dual reflection, label ranges, the
    move rule's match-count bound and its index-set criterion, window
    transitions on diagonal vectors, the multiset decomposition of a hook
    removal, the forced second window's mirrored form, equal-pattern boxes
    moving alike, op prediction on every graph edge, and the ascent
    construction that gives every member an in-edge from a member.
    """
    graph = reachable_graph(board, max_positions)
    table = grundy_table(graph)
    m, n = board.m, board.n

    index_trip = Check("index-set-round-trip")
    diag_trip = Check("diagonal-round-trip")
    dual_mirror = Check("dual-reflects-index-set")
    label_range = Check("labels-within-range")
    match_bound = Check("match-count-at-most-one")
    match_criterion = Check("match-criterion-agreement")
    window = Check("window-subtracts-on-diagonals")
    decomposition = Check("hook-multiset-decomposition")
    mirrored_second = Check("second-window-mirrored")
    pattern_gone = Check("pattern-absent-after-move")
    same_pattern = Check("equal-patterns-move-alike")
    window_search = Check("window-route-matches-box-route")
    grundy_recheck = Check("grundy-recurrence-holds")
    descent = Check("edge-op-predicted-from-window")
    ascent = Check("member-has-member-predecessor")

    seen_expressions: set[tuple[int, ...]] = set()
    for parts in all_partitions(board):
        elems = index_set(board, parts)
        index_trip.expect(partition_of_index_set(board, elems) == parts,
                          parts=list(parts), index_set=list(elems))
        expr = diagonal_expression(board, parts)
        diag_trip.expect(partition_of_diagonal(board, expr) == parts,
                         parts=list(parts), diagonal=list(expr))
        seen_expressions.add(expr)
        mirrored = tuple(sorted(reflect_index(board, x) for x in elems))
        co = dual(board, parts)
        dual_mirror.expect(index_set(board, co) == mirrored and dual(board, co) == parts,
                           parts=list(parts))

        patterns = {b: hook_multiset(board, parts, *b) for b in boxes(parts)}
        whole = sorted(unimodal_label(board, i, j) for i, j in boxes(parts))
        records = {}
        for box, pattern in patterns.items():
            label_range.expect(all(1 <= v <= board.max_label for v in pattern),
                               parts=list(parts), box=box)
            scan = f_value(board, parts, box)
            match_bound.expect(scan in (0, 1), parts=list(parts), box=box)
            match_criterion.expect(
                scan == f_value_by_index_criterion(board, parts, box),
                parts=list(parts), box=box, scan=scan)
            rec = mhr_move(board, parts, box)
            records[box] = rec
            once = apply_lr(board, parts, *rec.first_lr)
            shrunk = list(diagonal_expression(board, parts))
            for k in range(rec.first_lr[0], rec.first_lr[1] + 1):
                shrunk[k - 1] -= 1
            window.expect(
                once is not None and tuple(shrunk) == diagonal_expression(board, once),
                parts=list(parts), box=box, window=rec.first_lr)
            kept = sorted(unimodal_label(board, i, j) for i, j in boxes(once))
            decomposition.expect(sorted(kept + list(pattern)) == whole,
                                 parts=list(parts), box=box)
            if rec.op == OP_DOUBLE:
                l, r = rec.first_lr
                mirrored_second.expect(
                    rec.second_lr == (m + n + 2 - r, m + n + 2 - l),
                    parts=list(parts), box=box, windows=[rec.first_lr, rec.second_lr])
                final_patterns = [hook_multiset(board, rec.target, *b)
                                  for b in boxes(rec.target)]
                pattern_gone.expect(pattern not in final_patterns,
                                    parts=list(parts), box=box)
        for box, rec in records.items():
            for other, rec2 in records.items():
                if box < other and patterns[box] == patterns[other]:
                    same_pattern.expect(
                        (rec.op, rec.target) == (rec2.op, rec2.target),
                        parts=list(parts), boxes=[box, other])
        windows = {rec.first_lr for rec in records.values()}
        for l in range(2, m + n + 1):
            for r in range(l, m + n + 1):
                direct = apply_lr(board, parts, l, r)
                if (l, r) in windows:
                    via_box = {remove_hook(parts, *rec.box)
                               for rec in records.values() if rec.first_lr == (l, r)}
                    window_search.expect(direct is not None and via_box == {direct},
                                         parts=list(parts), window=[l, r])
                else:
                    window_search.expect(direct is None,
                                         parts=list(parts), window=[l, r])

    diag_trip.expect(len(seen_expressions) == sum(1 for _ in all_partitions(board)),
                     distinct_expressions=len(seen_expressions))

    full = full_rectangle(board)
    label_range.expect(
        max(unimodal_label(board, i, j) for i, j in boxes(full)) == board.max_label,
        full=list(full))

    for parts in graph.nodes:
        if box_count(parts):
            expected = mex(table[t] for t in graph.option_targets(parts))
        else:
            expected = 0
        grundy_recheck.expect(table[parts] == expected, parts=list(parts))
        for rec in graph.records(parts):
            predicted = OP_DOUBLE if _predicts_double(board, parts, *rec.first_lr) \
                else OP_SINGLE
            descent.expect(rec.op == predicted, parts=list(parts), box=rec.box,
                           op=rec.op, predicted=predicted)
        if parts != full:
            pred, first_lr, op = _ascend(board, graph, parts)
            hits = [rec for rec in graph.edges.get(pred, ())
                    if rec.first_lr == first_lr]
            ascent.expect(
                pred in graph.nodes
                and any(rec.target == parts and rec.op == op for rec in hits)
                and index_sum(board, pred) > index_sum(board, parts),
                parts=list(parts), predecessor=list(pred), window=first_lr, op=op)

    return VerificationReport(
        "engine-invariants",
        {"m": m, "n": n, "members": len(graph.nodes)},
        [index_trip, diag_trip, dual_mirror, label_range, match_bound,
         match_criterion, window, decomposition, mirrored_second, pattern_gone,
         same_pattern, window_search, grundy_recheck, descent, ascent],
    )
