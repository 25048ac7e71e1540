#include "mhrg/engine.hpp"

#include <charconv>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <string>

#include "mhrg/errors.hpp"

namespace mhrg {

std::string_view to_string(HookOp op)
{
    return op == HookOp::Single ? "MHR1" : "MHR2";
}

HookOp hook_op_from_string(std::string_view s)
{
    if (s == "MHR1") {
        return HookOp::Single;
    }
    if (s == "MHR2") {
        return HookOp::Double;
    }
    throw std::invalid_argument("unknown move type '" + std::string(s) + "'");
}

namespace {

int hook_length(const Partition& p, Box b)
{
    return (p.row(b.row) - b.col) + (p.column_height(b.col) - b.row) + 1;
}

void require_box(const Partition& p, Box b)
{
    if (!p.contains(b)) {
        throw InvalidPosition("box (" + std::to_string(b.row) + "," + std::to_string(b.col) +
                              ") is not in diagram " + to_string(p));
    }
}

} // namespace

std::vector<Box> matching_boxes(const BoardParams& board, const Partition& p, Box b)
{
    require_box(p, b);
    const HookMultiset target = hook_multiset(board, p, b);
    const Partition removed = remove_hook(p, b);
    const int size = static_cast<int>(target.labels.size());
    std::vector<Box> out;
    for (Box cand : removed.boxes()) {
        if (hook_length(removed, cand) == size && hook_multiset(board, removed, cand) == target) {
            out.push_back(cand);
        }
    }
    return out;
}

int f_value(const BoardParams& board, const Partition& p, Box b)
{
    const auto found = matching_boxes(board, p, b);
    if (found.size() > 1) {
        throw std::logic_error("more than one box of " + to_string(remove_hook(p, b)) +
                               " repeats the removed hook's numbering");
    }
    return static_cast<int>(found.size());
}

int f_value_by_index_set(const BoardParams& board, const Partition& p, Box b)
{
    const LrPair lr = transition_indices(board, p, b);
    const IndexSet after = index_set(board, remove_hook(p, b));
    const int total = board.m() + board.n();
    return (!after.contains(total + 1 - lr.r) && after.contains(total + 2 - lr.l)) ? 1 : 0;
}

MoveRecord mhr_move(const BoardParams& board, const Partition& p, Box b)
{
    MoveRecord rec;
    rec.from = p;
    rec.box = b;
    rec.first_lr = transition_indices(board, p, b);
    const Partition once = remove_hook(p, b);
    const auto found = matching_boxes(board, p, b);
    if (found.size() > 1) {
        throw std::logic_error("more than one box of " + to_string(once) +
                               " repeats the removed hook's numbering");
    }
    if (found.empty()) {
        rec.op = HookOp::Single;
        rec.to = once;
        return rec;
    }
    const Box second = found.front();
    rec.op = HookOp::Double;
    rec.second_box = second;
    rec.second_lr = transition_indices(board, once, second);
    rec.to = remove_hook(once, second);
    return rec;
}

std::set<Partition> options(const BoardParams& board, const Partition& p)
{
    if (p.empty()) {
        throw InvalidPosition("the empty diagram is the ending position and has no options");
    }
    std::set<Partition> out;
    for (Box b : p.boxes()) {
        out.insert(mhr_move(board, p, b).to);
    }
    return out;
}

std::uint64_t position_limit()
{
    constexpr std::uint64_t kDefault = 1'000'000;
    const char* env = std::getenv("MHRG_MAX_POSITIONS");
    if (env == nullptr) {
        return kDefault;
    }
    std::string_view text(env);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
        return kDefault;
    }
    return value;
}

void check_guardrail(const BoardParams& board)
{
    const std::uint64_t count = binomial(board.m() + board.n(), board.m());
    const std::uint64_t limit = position_limit();
    if (count > limit) {
        throw ResourceLimit("board " + std::to_string(board.m()) + "x" + std::to_string(board.n()) +
                            " has " + std::to_string(count) + " partitions, above the limit of " +
                            std::to_string(limit) + " (set MHRG_MAX_POSITIONS to raise it)");
    }
}

GameGraph::GameGraph(BoardParams board, Partition start,
                     std::map<Partition, std::vector<MoveRecord>> moves)
    : board_(board), start_(std::move(start)), moves_(std::move(moves))
{
}

const std::vector<MoveRecord>& GameGraph::moves_from(const Partition& p) const
{
    const auto it = moves_.find(p);
    if (it == moves_.end()) {
        throw InvalidPosition(to_string(p) + " is not a game position of this graph");
    }
    return it->second;
}

std::set<Partition> GameGraph::options_of(const Partition& p) const
{
    std::set<Partition> out;
    for (const MoveRecord& rec : moves_from(p)) {
        out.insert(rec.to);
    }
    return out;
}

std::size_t GameGraph::distinct_edge_count() const
{
    std::size_t total = 0;
    for (const auto& [node, recs] : moves_) {
        total += options_of(node).size();
    }
    return total;
}

GameGraph reachable_graph_from(const BoardParams& board, const Partition& start)
{
    check_guardrail(board);
    if (!fits_board(board, start)) {
        throw InvalidPosition(to_string(start) + " does not fit the board");
    }
    std::map<Partition, std::vector<MoveRecord>> moves;
    std::deque<Partition> frontier{start};
    moves.emplace(start, std::vector<MoveRecord>{});
    while (!frontier.empty()) {
        const Partition cur = std::move(frontier.front());
        frontier.pop_front();
        std::vector<MoveRecord> recs;
        for (Box b : cur.boxes()) {
            recs.push_back(mhr_move(board, cur, b));
            const Partition& next = recs.back().to;
            if (moves.emplace(next, std::vector<MoveRecord>{}).second) {
                frontier.push_back(next);
            }
        }
        moves[cur] = std::move(recs);
    }
    return GameGraph(board, start, std::move(moves));
}

GameGraph reachable_graph(const BoardParams& board)
{
    return reachable_graph_from(board, full_rectangle(board));
}

} // namespace mhrg
