#pragma once

// Grundy values, outcome classes, membership tests for the reachable set,
// the row-embedding between boards and closed-form P-position sets.

#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "mhrg/diagram.hpp"
#include "mhrg/engine.hpp"

namespace mhrg {

// Least nonnegative integer absent from values (duplicates allowed).
int mex(std::span<const int> values);

struct GrundyTable {
    BoardParams board;
    std::map<Partition, int> values;

    // Throws InvalidPosition for positions not in the table.
    int at(const Partition& p) const;
    std::optional<int> find(const Partition& p) const;
};

// Evaluated in order of increasing box count; every move removes boxes.
GrundyTable grundy_table(const GameGraph& graph);

struct OutcomeReport {
    BoardParams board;
    std::set<Partition> p_positions;
    std::set<Partition> n_positions;
};

OutcomeReport outcome_report(const GrundyTable& table);

// I(Y) intersected with [c + 1 - chi, m + n].
std::vector<int> right_index_set(const BoardParams& board, const Partition& p);

// I_R(Y) and I_R(Y^D) are disjoint.
bool member_by_index_sets(const BoardParams& board, const Partition& p);

// lambda_i + lambda_j != n - m + i + j - 1 for all 1 <= i <= j <= m.
bool member_by_parts(const BoardParams& board, const Partition& p);

// Same as member_by_parts but over all ordered pairs 1 <= i, j <= m.
bool member_by_parts_all_pairs(const BoardParams& board, const Partition& p);

// Pads a partition with at most t rows to m rows. Requires 0 <= t <= m <= n
// and parts bounded by n; throws InvalidPosition / InvalidBoard otherwise.
Partition embed_partition(const Partition& p, int t, int m, int n);

// Closed-form P-positions of the 2 x n board (n >= 2).
std::set<Partition> p_positions_m2_closed_form(int n);

// Closed-form P-positions with at most two rows on the m x n board
// (2 <= m <= n), as m-row partitions.
std::set<Partition> p_positions_two_rows_closed_form(int m, int n);

// Options of p with Grundy value 0; empty iff p is itself a P-position.
// Throws InvalidPosition when p is not a node or is the empty diagram.
std::set<Partition> best_moves(const GameGraph& graph, const GrundyTable& table, const Partition& p);

// Deterministic perfect-play reply: the lexicographically smallest Grundy-0
// option, or the lexicographically smallest option when none exists.
Partition engine_reply(const GameGraph& graph, const GrundyTable& table, const Partition& p);

} // namespace mhrg
