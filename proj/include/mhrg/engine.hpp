#pragma once

// The multiple hook removing move rule and reachability from the full
// rectangle.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "mhrg/diagram.hpp"

namespace mhrg {

enum class HookOp {
    Single,  // MHR1: one hook removed
    Double,  // MHR2: the forced second removal happened
};

std::string_view to_string(HookOp op);
// Accepts "MHR1" / "MHR2"; throws std::invalid_argument otherwise.
HookOp hook_op_from_string(std::string_view s);

struct MoveRecord {
    Partition from;
    Box box;
    LrPair first_lr;
    HookOp op = HookOp::Single;
    // Box of the intermediate diagram from[box removed]; present iff op is Double.
    std::optional<Box> second_box;
    std::optional<LrPair> second_lr;
    Partition to;

    bool operator==(const MoveRecord&) const = default;
};

// Boxes of p<b> whose hook multiset equals that of b in p.
std::vector<Box> matching_boxes(const BoardParams& board, const Partition& p, Box b);

// Number of matching boxes after removing the hook at b (0 or 1).
int f_value(const BoardParams& board, const Partition& p, Box b);

// Same quantity from index sets alone: with (l, r) the first window and
// Y' = p<b>, 1 iff m+n+1-r is not in I(Y') and m+n+2-l is.
int f_value_by_index_set(const BoardParams& board, const Partition& p, Box b);

MoveRecord mhr_move(const BoardParams& board, const Partition& p, Box b);

// Distinct positions reachable in one move; throws InvalidPosition on the empty diagram.
std::set<Partition> options(const BoardParams& board, const Partition& p);

// Enumeration limit on C(m+n, m): MHRG_MAX_POSITIONS when set to a positive
// integer, else 1'000'000.
std::uint64_t position_limit();
// Throws ResourceLimit when the board exceeds position_limit().
void check_guardrail(const BoardParams& board);

class GameGraph {
public:
    GameGraph(BoardParams board, Partition start,
              std::map<Partition, std::vector<MoveRecord>> moves);

    const BoardParams& board() const { return board_; }
    const Partition& start() const { return start_; }
    // Nodes in lexicographic order, each with every move record (one per box).
    const std::map<Partition, std::vector<MoveRecord>>& moves() const { return moves_; }

    std::size_t node_count() const { return moves_.size(); }
    bool contains(const Partition& p) const { return moves_.contains(p); }
    // Throws InvalidPosition when p is not a node.
    const std::vector<MoveRecord>& moves_from(const Partition& p) const;
    // Distinct destination positions of p.
    std::set<Partition> options_of(const Partition& p) const;
    // Number of distinct (from, to) pairs.
    std::size_t distinct_edge_count() const;

    bool operator==(const GameGraph&) const = default;

private:
    BoardParams board_;
    Partition start_;
    std::map<Partition, std::vector<MoveRecord>> moves_;
};

// BFS closure of the move rule from the full rectangle.
GameGraph reachable_graph(const BoardParams& board);

// Experimental: closure from an arbitrary start position. The game is only
// defined from the full rectangle; no claim is made about these sets.
GameGraph reachable_graph_from(const BoardParams& board, const Partition& start);

} // namespace mhrg
