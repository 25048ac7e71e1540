#include "mhrg/analysis.hpp"

#include <algorithm>

#include "mhrg/errors.hpp"

namespace mhrg {

int mex(std::span<const int> values)
{
    std::vector<bool> seen(values.size() + 1, false);
    for (int v : values) {
        if (v >= 0 && static_cast<std::size_t>(v) < seen.size()) {
            seen[v] = true;
        }
    }
    int g = 0;
    while (seen[g]) {
        ++g;
    }
    return g;
}

int GrundyTable::at(const Partition& p) const
{
    const auto it = values.find(p);
    if (it == values.end()) {
        throw InvalidPosition(to_string(p) + " has no Grundy value on this board");
    }
    return it->second;
}

std::optional<int> GrundyTable::find(const Partition& p) const
{
    const auto it = values.find(p);
    if (it == values.end()) {
        return std::nullopt;
    }
    return it->second;
}

GrundyTable grundy_table(const GameGraph& graph)
{
    std::vector<const Partition*> order;
    order.reserve(graph.node_count());
    for (const auto& [node, recs] : graph.moves()) {
        order.push_back(&node);
    }
    std::stable_sort(order.begin(), order.end(), [](const Partition* a, const Partition* b) {
        return a->box_count() < b->box_count();
    });

    GrundyTable table{graph.board(), {}};
    std::vector<int> seen;
    for (const Partition* node : order) {
        seen.clear();
        for (const MoveRecord& rec : graph.moves_from(*node)) {
            seen.push_back(table.values.at(rec.to));
        }
        table.values.emplace(*node, mex(seen));
    }
    return table;
}

OutcomeReport outcome_report(const GrundyTable& table)
{
    OutcomeReport report{table.board, {}, {}};
    for (const auto& [pos, g] : table.values) {
        (g == 0 ? report.p_positions : report.n_positions).insert(pos);
    }
    return report;
}

std::vector<int> right_index_set(const BoardParams& board, const Partition& p)
{
    const int lo = board.c() + 1 - board.chi();
    std::vector<int> out;
    for (int x : index_set(board, p).elements) {
        if (x >= lo) {
            out.push_back(x);
        }
    }
    return out;
}

bool member_by_index_sets(const BoardParams& board, const Partition& p)
{
    const std::vector<int> own = right_index_set(board, p);
    const std::vector<int> of_dual = right_index_set(board, dual(board, p));
    std::vector<int> common;
    std::set_intersection(own.begin(), own.end(), of_dual.begin(), of_dual.end(),
                          std::back_inserter(common));
    return common.empty();
}

namespace {

bool parts_avoid_diagonal(const BoardParams& board, const Partition& p, bool ordered_pairs)
{
    const int m = board.m();
    for (int i = 1; i <= m; ++i) {
        for (int j = ordered_pairs ? 1 : i; j <= m; ++j) {
            if (p.row(i) + p.row(j) == board.n() - m + i + j - 1) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

bool member_by_parts(const BoardParams& board, const Partition& p)
{
    return parts_avoid_diagonal(board, p, false);
}

bool member_by_parts_all_pairs(const BoardParams& board, const Partition& p)
{
    return parts_avoid_diagonal(board, p, true);
}

Partition embed_partition(const Partition& p, int t, int m, int n)
{
    if (t < 0 || t > m || m > n || m < 1) {
        throw InvalidBoard("embedding requires 0 <= t <= m <= n with m >= 1");
    }
    std::vector<int> parts = p.parts;
    while (static_cast<int>(parts.size()) > t && parts.back() == 0) {
        parts.pop_back();
    }
    if (static_cast<int>(parts.size()) > t) {
        throw InvalidPosition(to_string(p) + " has more than t=" + std::to_string(t) + " rows");
    }
    return make_partition(make_board(m, n), std::move(parts));
}

namespace {

// Largest integer q with q <= num / den (den > 0).
int floor_div(int num, int den)
{
    return num >= 0 ? num / den : -((-num + den - 1) / den);
}

// The four-case family shared by the 2 x n formula and its embedding. The
// offsets are written relative to base = c + i for the 2-row board on which
// the family lives; `gap` is n - 2 there (n - m in the embedded form).
std::set<std::pair<int, int>> two_row_family(int gap, int base)
{
    const int p = gap / 4;
    const int rem = gap % 4;
    auto cq = [&](int i, int q) { return base + i + 4 * q; };

    std::set<std::pair<int, int>> out;
    for (int q = 0; q <= p; ++q) {
        out.insert({2 * q, 2 * q});
    }
    switch (rem) {
    case 0:
        for (int q = 0; q <= floor_div(p - 1, 2); ++q) {
            out.insert({cq(1, q), cq(0, q)});
            out.insert({cq(2, q), cq(1, q)});
        }
        break;
    case 1:
        for (int q = 0; q <= floor_div(p - 1, 2); ++q) {
            out.insert({cq(2, q), cq(1, q)});
            out.insert({cq(3, q), cq(2, q)});
        }
        break;
    case 2:
        for (int q = 0; q <= floor_div(p, 2); ++q) {
            out.insert({cq(0, q), cq(-1, q)});
            out.insert({cq(1, q), cq(0, q)});
        }
        break;
    default:
        out.insert({2 * p + 4, 2 * p + 2});
        out.insert({2 * p + 5, 2 * p + 4});
        for (int q = 1; q <= floor_div(p, 2); ++q) {
            out.insert({cq(1, q), cq(0, q)});
            out.insert({cq(2, q), cq(1, q)});
        }
        break;
    }
    return out;
}

} // namespace

std::set<Partition> p_positions_m2_closed_form(int n)
{
    if (n < 2) {
        throw InvalidBoard("the 2 x n closed form needs n >= 2");
    }
    const BoardParams board = make_board(2, n);
    std::set<Partition> out;
    for (const auto& [a, b] : two_row_family(n - 2, board.c())) {
        out.insert(Partition({a, b}));
    }
    return out;
}

std::set<Partition> p_positions_two_rows_closed_form(int m, int n)
{
    if (m < 2) {
        throw InvalidBoard("the two-row closed form needs m >= 2");
    }
    const BoardParams board = make_board(m, n);
    std::set<Partition> out;
    for (const auto& [a, b] : two_row_family(n - m, board.c() - m + 2)) {
        std::vector<int> parts(m, 0);
        parts[0] = a;
        parts[1] = b;
        out.insert(Partition(std::move(parts)));
    }
    return out;
}

std::set<Partition> best_moves(const GameGraph& graph, const GrundyTable& table, const Partition& p)
{
    if (p.empty()) {
        throw InvalidPosition("the empty diagram is the ending position and has no moves");
    }
    std::set<Partition> out;
    for (const Partition& opt : graph.options_of(p)) {
        if (table.at(opt) == 0) {
            out.insert(opt);
        }
    }
    return out;
}

Partition engine_reply(const GameGraph& graph, const GrundyTable& table, const Partition& p)
{
    const std::set<Partition> winning = best_moves(graph, table, p);
    if (!winning.empty()) {
        return *winning.begin();
    }
    return *graph.options_of(p).begin();
}

} // namespace mhrg
