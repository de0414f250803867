"""Engine and analysis toolkit for the multiple hook removing game."""

from .diagram import (
    Board,
    Box,
    Parts,
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
from .engine import (
    DEFAULT_MAX_POSITIONS,
    MAX_POSITIONS_ENV,
    OP_DOUBLE,
    OP_SINGLE,
    GameGraph,
    MoveRecord,
    PositionLimitError,
    f_value,
    f_value_by_index_criterion,
    mhr_move,
    moves_from,
    options,
    position_count,
    reachable_graph,
)
from .analysis import (
    Check,
    GrundyTable,
    OutcomeReport,
    VerificationReport,
    best_moves,
    choose_reply,
    embed_partition,
    grundy_table,
    index_sum,
    is_position_index_test,
    is_position_part_sum_test,
    mex,
    outcome_report,
    p_positions_m2_closed_form,
    p_positions_two_rows_closed_form,
    restricted_index_set,
    verify_engine_invariants,
    verify_m2_closed_form,
    verify_membership,
    verify_row_transfer,
    verify_two_rows_closed_form,
)

__version__ = "0.1.0"
