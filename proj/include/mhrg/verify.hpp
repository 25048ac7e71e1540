#pragma once

// Exhaustive cross-checks between the move engine and the combinatorial
// characterizations. Each suite returns a report instead of throwing so that
// callers can print diagnostics; a report passes when it has no violations.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mhrg/analysis.hpp"
#include "mhrg/diagram.hpp"
#include "mhrg/engine.hpp"

namespace mhrg {

struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, int>> params;
    std::map<std::string, std::int64_t> counts;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// All boards with 1 <= m <= n and m + n <= max_sum, ordered by (m + n, m).
std::vector<BoardParams> boards_up_to(int max_sum);

// Reachable set == index-set criterion == part-sum criterion (both index
// conventions), and membership is closed under the dual.
VerificationReport verify_main_theorem(const BoardParams& board);

// Membership and Grundy values of partitions with at most t rows agree
// between the m x n board and the t x (n - m + t) board.
VerificationReport verify_t_rows(int t, int m, int n);

VerificationReport verify_closed_form_m2(int n);
VerificationReport verify_closed_form_two_rows(int m, int n);

// Both bijections (index set, diagonal expression) round-trip, the dual is an
// involution mapping I to its bar image, hook windows match diagonal
// differences, label multisets split over a hook removal, and apply_lr agrees
// with the box search.
VerificationReport verify_diagram_identities(const BoardParams& board);

// At most one matching box after any hook removal; the index-set criterion
// agrees with the multiset scan; the second window is (m+n+2-r, m+n+2-l).
// Runs over every box of every partition of the board.
VerificationReport verify_hook_uniqueness(const BoardParams& board);

// After a double removal no box repeats the original hook numbering, and
// boxes with equal hook multisets produce the same move type and result.
VerificationReport verify_repeat_removal(const BoardParams& board);

// Along every edge of the game graph the move type predicted from index sets
// matches the engine's.
VerificationReport verify_descent(const GameGraph& graph);

// Every member other than the full rectangle has an in-edge from a member,
// and the explicit predecessor built from each admissible (l, r) is a member
// with a move of the predicted type into it.
VerificationReport verify_ascent(const GameGraph& graph);

// Grundy recurrence at every node and P-positions == Grundy-zero positions.
VerificationReport verify_grundy_recurrence(const GameGraph& graph, const GrundyTable& table);

} // namespace mhrg
