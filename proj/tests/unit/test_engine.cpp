#include <doctest.h>

#include <cstdlib>
#include <iterator>

#include "../oracle.hpp"
#include "mhrg/engine.hpp"
#include "mhrg/errors.hpp"

using namespace mhrg;

namespace {

Partition P(std::vector<int> parts)
{
    return Partition(std::move(parts));
}

// Restores MHRG_MAX_POSITIONS on scope exit.
class ScopedLimit {
public:
    explicit ScopedLimit(const char* value)
    {
        if (const char* old = std::getenv("MHRG_MAX_POSITIONS")) {
            saved_ = old;
            had_ = true;
        }
        if (value) {
            ::setenv("MHRG_MAX_POSITIONS", value, 1);
        } else {
            ::unsetenv("MHRG_MAX_POSITIONS");
        }
    }
    ~ScopedLimit()
    {
        if (had_) {
            ::setenv("MHRG_MAX_POSITIONS", saved_.c_str(), 1);
        } else {
            ::unsetenv("MHRG_MAX_POSITIONS");
        }
    }

private:
    std::string saved_;
    bool had_ = false;
};

} // namespace

TEST_CASE("hook op names")
{
    CHECK(to_string(HookOp::Single) == "MHR1");
    CHECK(to_string(HookOp::Double) == "MHR2");
    CHECK(hook_op_from_string("MHR2") == HookOp::Double);
    CHECK_THROWS_AS(hook_op_from_string("MHR3"), std::invalid_argument);
}

TEST_CASE("f_value examples")
{
    const auto b23 = make_board(2, 3);
    CHECK(f_value(b23, P({3, 3}), {2, 2}) == 0);
    CHECK(f_value(b23, P({3, 3}), {1, 3}) == 1);
    CHECK(matching_boxes(b23, P({3, 3}), {1, 3}) == std::vector<Box>{{2, 1}});
    CHECK(f_value(make_board(1, 1), P({1}), {1, 1}) == 0);
    CHECK_THROWS_AS(f_value(b23, P({3, 1}), {2, 2}), InvalidPosition);
}

TEST_CASE("mhr_move examples")
{
    const auto b23 = make_board(2, 3);

    const auto single = mhr_move(b23, P({3, 3}), {2, 2});
    CHECK(single.op == HookOp::Single);
    CHECK(single.to == P({3, 1}));
    CHECK_FALSE(single.second_box.has_value());
    CHECK_FALSE(single.second_lr.has_value());

    const auto twice = mhr_move(b23, P({3, 3}), {1, 3});
    CHECK(twice.op == HookOp::Double);
    CHECK(twice.to == P({2, 0}));
    REQUIRE(twice.second_box.has_value());
    CHECK(*twice.second_box == Box{2, 1});
    CHECK(twice.first_lr == LrPair{4, 5});
    CHECK(twice.second_lr == LrPair{2, 3});

    const auto to_empty = mhr_move(b23, P({3, 3}), {1, 2});
    CHECK(to_empty.op == HookOp::Double);
    CHECK(to_empty.to == P({0, 0}));

    CHECK_THROWS_AS(mhr_move(b23, P({0, 0}), {1, 1}), InvalidPosition);
}

TEST_CASE("options examples")
{
    const auto b23 = make_board(2, 3);
    CHECK(options(b23, P({3, 3})) == std::set<Partition>{P({3, 1}), P({2, 0}), P({0, 0})});
    CHECK(options(b23, P({3, 1})) == std::set<Partition>{P({2, 0}), P({0, 0})});
    CHECK(options(b23, P({2, 0})) == std::set<Partition>{P({0, 0})});
    CHECK_THROWS_AS(options(b23, P({0, 0})), InvalidPosition);
}

TEST_CASE("reachable_graph examples")
{
    const auto b23 = make_board(2, 3);
    const auto graph = reachable_graph(b23);
    CHECK(graph.start() == P({3, 3}));
    CHECK(graph.node_count() == 4);
    for (const auto& p : {P({3, 3}), P({3, 1}), P({2, 0}), P({0, 0})}) {
        CHECK(graph.contains(p));
    }
    for (const auto& p : {P({3, 2}), P({2, 2}), P({2, 1}), P({3, 0}), P({1, 1}), P({1, 0})}) {
        CHECK_FALSE(graph.contains(p));
    }
    CHECK(graph.distinct_edge_count() == 6);
    CHECK(graph.moves_from(P({0, 0})).empty());
    CHECK(graph.moves_from(P({3, 3})).size() == 6);
    CHECK_THROWS_AS(graph.moves_from(P({2, 1})), InvalidPosition);

    const auto tiny = reachable_graph(make_board(1, 1));
    CHECK(tiny.node_count() == 2);
    CHECK(tiny.contains(P({1})));
    CHECK(tiny.contains(P({0})));
}

TEST_CASE("move records satisfy their invariants on every board up to m+n = 10")
{
    for (int m = 1; m <= 5; ++m) {
        for (int n = m; m + n <= 10; ++n) {
            const auto board = make_board(m, n);
            for (const auto& p : all_partitions(board)) {
                for (Box b : p.boxes()) {
                    const auto rec = mhr_move(board, p, b);
                    CHECK(rec.from == p);
                    CHECK(rec.box == b);
                    CHECK(rec.first_lr == transition_indices(board, p, b));
                    CHECK(rec.to.box_count() < p.box_count());
                    const bool twice = rec.op == HookOp::Double;
                    CHECK(rec.second_box.has_value() == twice);
                    CHECK(rec.second_lr.has_value() == twice);
                    CHECK(f_value(board, p, b) == (twice ? 1 : 0));
                    CHECK(f_value_by_index_set(board, p, b) == f_value(board, p, b));
                    if (twice) {
                        const auto [l, r] = rec.first_lr;
                        CHECK(*rec.second_lr == LrPair{m + n + 2 - r, m + n + 2 - l});
                    }
                }
            }
        }
    }
}

TEST_CASE("engine moves agree with the set-level oracle")
{
    for (int m = 1; m <= 4; ++m) {
        for (int n = m; m + n <= 8; ++n) {
            const auto board = make_board(m, n);
            for (const auto& p : all_partitions(board)) {
                const auto cells = oracle::from_parts(p.parts);
                for (Box b : p.boxes()) {
                    const auto want = oracle::to_parts(oracle::move(m, n, cells, {b.row, b.col}), m);
                    CHECK(mhr_move(board, p, b).to.parts == want);
                }
            }
        }
    }
}

TEST_CASE("reachable sets agree with the oracle's search")
{
    for (int m = 1; m <= 5; ++m) {
        for (int n = m; m + n <= 10; ++n) {
            const auto graph = reachable_graph(make_board(m, n));
            std::set<std::vector<int>> got;
            for (const auto& [p, recs] : graph.moves()) {
                got.insert(p.parts);
                for (const auto& rec : recs) {
                    CHECK(graph.contains(rec.to));
                }
            }
            std::set<std::vector<int>> want;
            for (const auto& d : oracle::reachable(m, n)) {
                want.insert(oracle::to_parts(d, m));
            }
            CHECK(got == want);
        }
    }
}

TEST_CASE("experimental reachability from a member start stays inside the game")
{
    const auto board = make_board(3, 4);
    const auto full = reachable_graph(board);
    const Partition start = std::next(full.moves().begin(), static_cast<long>(full.node_count() / 2))->first;
    const auto sub = reachable_graph_from(board, start);
    CHECK(sub.start() == start);
    CHECK(sub.node_count() < full.node_count());
    for (const auto& [p, recs] : sub.moves()) {
        CHECK(full.contains(p));
    }
    CHECK_THROWS_AS(reachable_graph_from(board, P({5, 0, 0})), InvalidPosition);
}

TEST_CASE("guardrail honours MHRG_MAX_POSITIONS")
{
    {
        ScopedLimit unset(nullptr);
        CHECK(position_limit() == 1'000'000);
        CHECK_NOTHROW(check_guardrail(make_board(10, 10)));  // C(20,10) = 184756
        CHECK_THROWS_AS(check_guardrail(make_board(12, 12)), ResourceLimit);
    }
    {
        ScopedLimit small("5");
        CHECK(position_limit() == 5);
        CHECK_THROWS_AS(reachable_graph(make_board(2, 3)), ResourceLimit);
        CHECK_NOTHROW(reachable_graph(make_board(1, 3)));
    }
    {
        ScopedLimit junk("lots");
        CHECK(position_limit() == 1'000'000);
    }
}
