"""Multiple hook removing game on Young diagrams.

Partitions are lists of ints padded with zeros to the board's row count m.
Invalid boards or positions raise ValueError; boards above the enumeration
limit raise ResourceLimitError.
"""

from ._mhrg import (
    ResourceLimitError,
    all_partitions,
    apply_lr,
    board_params,
    diagonal_expression,
    dual,
    f_value,
    graph,
    graph_dot,
    grundy_values,
    hook_multiset,
    index_set,
    member_by_index_sets,
    member_by_parts,
    mhr_move,
    options,
    p_positions_m2_closed_form,
    p_positions_two_rows_closed_form,
    partition_of_diagonal,
    partition_of_index_set,
    position,
    position_limit,
    reachable_positions,
    remove_hook,
    transition_indices,
    unimodal_label,
    verify_closed_form_m2,
    verify_closed_form_two_rows,
    verify_main_theorem,
    verify_t_rows,
)

__all__ = [name for name in dir() if not name.startswith("_")]
