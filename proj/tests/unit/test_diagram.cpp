#include <doctest.h>

#include <algorithm>
#include <random>

#include "../oracle.hpp"
#include "mhrg/diagram.hpp"
#include "mhrg/errors.hpp"

using namespace mhrg;

namespace {

Partition P(std::vector<int> parts)
{
    return Partition(std::move(parts));
}

std::vector<Box> sorted(std::vector<Box> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("make_board derives chi and c")
{
    const auto b23 = make_board(2, 3);
    CHECK(b23.chi() == 0);
    CHECK(b23.c() == 2);
    const auto b35 = make_board(3, 5);
    CHECK(b35.chi() == 1);
    CHECK(b35.c() == 4);
    const auto b11 = make_board(1, 1);
    CHECK(b11.chi() == 1);
    CHECK(b11.c() == 1);

    CHECK_THROWS_AS(make_board(3, 2), InvalidBoard);
    CHECK_THROWS_AS(make_board(0, 2), InvalidBoard);
    CHECK_THROWS_AS(make_board(-1, -1), InvalidBoard);
}

TEST_CASE("c is the largest label of the full rectangle")
{
    for (int m = 1; m <= 7; ++m) {
        for (int n = m; n <= 9; ++n) {
            const auto board = make_board(m, n);
            int best = 0;
            for (int i = 1; i <= m; ++i) {
                for (int j = 1; j <= n; ++j) {
                    const int lab = unimodal_label(board, i, j);
                    CHECK(lab >= 1);
                    CHECK(lab <= board.c());
                    best = std::max(best, lab);
                }
            }
            CHECK(best == board.c());
        }
    }
}

TEST_CASE("unimodal labels of the 3x5 example grid")
{
    const auto board = make_board(3, 5);
    CHECK(unimodal_label(board, 1, 1) == 3);
    CHECK(unimodal_label(board, 2, 3) == 4);
    CHECK(unimodal_label(board, 3, 1) == 1);
    // (4,4,2) as drawn: rows 3 4 3 2 / 2 3 4 3 / 1 2
    const std::vector<std::vector<int>> grid{{3, 4, 3, 2}, {2, 3, 4, 3}, {1, 2}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < static_cast<int>(grid[i].size()); ++j) {
            CHECK(unimodal_label(board, i + 1, j + 1) == grid[i][j]);
        }
    }
    CHECK_THROWS_AS(unimodal_label(board, 4, 1), InvalidPosition);
    CHECK_THROWS_AS(unimodal_label(board, 1, 6), InvalidPosition);
}

TEST_CASE("make_partition pads and validates")
{
    const auto board = make_board(3, 5);
    CHECK(make_partition(board, {4}) == P({4, 0, 0}));
    CHECK(make_partition(board, {4, 3, 1, 0}) == P({4, 3, 1}));
    CHECK_THROWS_AS(make_partition(board, {1, 2}), InvalidPosition);
    CHECK_THROWS_AS(make_partition(board, {6}), InvalidPosition);
    CHECK_THROWS_AS(make_partition(board, {1, 1, 1, 1}), InvalidPosition);
    CHECK_THROWS_AS(make_partition(board, {-1}), InvalidPosition);
    CHECK(empty_partition(board).empty());
    CHECK(full_rectangle(board).box_count() == 15);
}

TEST_CASE("all_partitions matches brute-force enumeration")
{
    for (int m = 1; m <= 4; ++m) {
        for (int n = m; n <= 6; ++n) {
            const auto board = make_board(m, n);
            const auto got = all_partitions(board);
            const auto want = oracle::brute_partitions(m, n);
            REQUIRE(got.size() == want.size());
            CHECK(got.size() == binomial(m + n, m));
            for (std::size_t k = 0; k < got.size(); ++k) {
                CHECK(got[k].parts == want[k]);
            }
        }
    }
    CHECK(binomial(12, 6) == 924);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 7) == 0);
}

TEST_CASE("index_set examples")
{
    const auto b23 = make_board(2, 3);
    CHECK(index_set(b23, P({3, 3})).elements == std::vector<int>{4, 5});
    CHECK(index_set(b23, P({0, 0})).elements == std::vector<int>{1, 2});
    const auto b35 = make_board(3, 5);
    CHECK(index_set(b35, P({4, 3, 1})).elements == std::vector<int>{2, 5, 7});
    CHECK(oracle::index_set_by_path({4, 3, 1}, 3, 5) == std::vector<int>{2, 5, 7});
}

TEST_CASE("index_set agrees with the boundary-path oracle")
{
    for (int m = 1; m <= 5; ++m) {
        for (int n = m; n + m <= 10; ++n) {
            const auto board = make_board(m, n);
            for (const auto& p : all_partitions(board)) {
                CHECK(index_set(board, p).elements == oracle::index_set_by_path(p.parts, m, n));
            }
        }
    }
}

TEST_CASE("partition_of_index_set examples and errors")
{
    const auto b23 = make_board(2, 3);
    CHECK(partition_of_index_set(b23, {{4, 5}}) == P({3, 3}));
    CHECK(partition_of_index_set(b23, {{1, 2}}) == P({0, 0}));
    const auto b35 = make_board(3, 5);
    CHECK(partition_of_index_set(b35, {{1, 2, 7}}) == P({4, 0, 0}));

    CHECK_THROWS_AS(make_index_set(b23, {1}), InvalidPosition);
    CHECK_THROWS_AS(make_index_set(b23, {1, 2, 3}), InvalidPosition);
    CHECK_THROWS_AS(make_index_set(b23, {0, 2}), InvalidPosition);
    CHECK_THROWS_AS(make_index_set(b23, {2, 6}), InvalidPosition);
    CHECK_THROWS_AS(make_index_set(b23, {3, 3}), InvalidPosition);
    CHECK_THROWS_AS(partition_of_index_set(b23, {{2, 6}}), InvalidPosition);
    CHECK(make_index_set(b23, {5, 4}).elements == std::vector<int>{4, 5});
}

TEST_CASE("index set bijection round-trips over every m-subset")
{
    // {1,2,7} -> (4,0,0) was found by scanning all C(8,3) subsets.
    for (int m = 1; m <= 5; ++m) {
        for (int n = m; n + m <= 10; ++n) {
            const auto board = make_board(m, n);
            std::vector<bool> pick(m + n, false);
            std::fill(pick.begin(), pick.begin() + m, true);
            std::set<Partition> images;
            do {
                std::vector<int> elems;
                for (int x = 0; x < m + n; ++x) {
                    if (pick[x]) {
                        elems.push_back(x + 1);
                    }
                }
                const IndexSet s{elems};
                const Partition p = partition_of_index_set(board, s);
                CHECK(fits_board(board, p));
                CHECK(index_set(board, p) == s);
                images.insert(p);
            } while (std::prev_permutation(pick.begin(), pick.end()));
            CHECK(images.size() == binomial(m + n, m));
        }
    }
}

TEST_CASE("dual examples and involution")
{
    const auto b23 = make_board(2, 3);
    CHECK(dual(b23, P({3, 1})) == P({2, 0}));
    CHECK(dual(b23, P({0, 0})) == P({3, 3}));
    const auto b35 = make_board(3, 5);
    CHECK(dual(b35, P({4, 3, 1})) == P({4, 2, 1}));

    for (const auto& p : all_partitions(b35)) {
        CHECK(dual(b35, dual(b35, p)) == p);
        std::vector<int> barred;
        for (int x : index_set(b35, p).elements) {
            barred.push_back(bar(b35, x));
        }
        std::sort(barred.begin(), barred.end());
        CHECK(index_set(b35, dual(b35, p)).elements == barred);
    }
}

TEST_CASE("hook_cells examples")
{
    using V = std::vector<Box>;
    CHECK(sorted(hook_cells(P({3, 3}), {1, 3})) == V{{1, 3}, {2, 3}});
    CHECK(hook_cells(P({1}), {1, 1}) == V{{1, 1}});
    CHECK(sorted(hook_cells(P({4, 3, 1}), {2, 1})) == V{{2, 1}, {2, 2}, {2, 3}, {3, 1}});
    CHECK_THROWS_AS(hook_cells(P({3, 1}), {2, 2}), InvalidPosition);
    CHECK_THROWS_AS(hook_cells(P({3, 1}), {0, 1}), InvalidPosition);
}

TEST_CASE("hook_multiset examples")
{
    const auto b23 = make_board(2, 3);
    CHECK(hook_multiset(b23, P({3, 3}), {1, 3}).labels == std::vector<int>{1, 2});
    CHECK(hook_multiset(b23, P({3, 3}), {1, 1}).labels == std::vector<int>{1, 1, 2, 2});
    CHECK(hook_multiset(make_board(1, 1), P({1}), {1, 1}).labels == std::vector<int>{1});
    CHECK_THROWS_AS(hook_multiset(b23, P({3, 1}), {2, 3}), InvalidPosition);
}

TEST_CASE("remove_hook examples")
{
    CHECK(remove_hook(P({4, 3, 1}), {2, 1}) == P({4, 0, 0}));
    CHECK(remove_hook(P({1}), {1, 1}) == P({0}));
    CHECK(remove_hook(P({3, 3}), {1, 3}) == P({2, 2}));
    CHECK_THROWS_AS(remove_hook(P({3, 3}), {3, 1}), InvalidPosition);
}

TEST_CASE("hooks and hook removal agree with the set-level definitions")
{
    for (int m = 1; m <= 4; ++m) {
        for (int n = m; n + m <= 9; ++n) {
            const auto board = make_board(m, n);
            for (const auto& p : all_partitions(board)) {
                const auto cells = oracle::from_parts(p.parts);
                for (Box b : p.boxes()) {
                    const oracle::Cell c{b.row, b.col};
                    std::vector<Box> expect;
                    for (const auto& [i, j] : oracle::hook(cells, c)) {
                        expect.push_back({i, j});
                    }
                    CHECK(sorted(hook_cells(p, b)) == expect);
                    CHECK(hook_multiset(board, p, b).labels == oracle::hook_labels(m, n, cells, c));
                    const Partition removed = remove_hook(p, b);
                    CHECK(removed.parts == oracle::to_parts(oracle::remove(cells, c), m));
                    CHECK(fits_board(board, removed));
                    CHECK(removed.box_count() == p.box_count() - static_cast<int>(hook_cells(p, b).size()));
                }
            }
        }
    }
}

TEST_CASE("transition_indices examples")
{
    CHECK(transition_indices(make_board(3, 5), P({4, 3, 1}), {2, 1}) == LrPair{2, 5});
    CHECK(transition_indices(make_board(1, 1), P({1}), {1, 1}) == LrPair{2, 2});
    CHECK(transition_indices(make_board(2, 3), P({3, 3}), {1, 3}) == LrPair{4, 5});
    CHECK_THROWS_AS(transition_indices(make_board(2, 3), P({3, 1}), {2, 2}), InvalidPosition);
}

TEST_CASE("diagonal_expression examples")
{
    const auto b35 = make_board(3, 5);
    CHECK(diagonal_expression(b35, P({4, 3, 1})).counts == std::vector<int>{0, 1, 1, 2, 2, 1, 1, 0, 0});
    CHECK(diagonal_expression(b35, P({0, 0, 0})).counts == std::vector<int>(9, 0));
    CHECK(diagonal_expression(b35, P({5, 5, 5})).counts == std::vector<int>{0, 1, 2, 3, 3, 3, 2, 1, 0});
    CHECK(oracle::diagonal_counts(oracle::from_parts({5, 5, 5}), 3, 5) ==
          std::vector<int>{0, 1, 2, 3, 3, 3, 2, 1, 0});
    // The example's hook removal lands on (0,0,0,1,1,1,1,0,0).
    CHECK(diagonal_expression(b35, P({4, 0, 0})).counts == std::vector<int>{0, 0, 0, 1, 1, 1, 1, 0, 0});
}

TEST_CASE("partition_of_diagonal examples and errors")
{
    const auto b35 = make_board(3, 5);
    CHECK(partition_of_diagonal(b35, {{0, 1, 1, 2, 2, 1, 1, 0, 0}}) == P({4, 3, 1}));
    CHECK(partition_of_diagonal(b35, {std::vector<int>(9, 0)}) == P({0, 0, 0}));
    const auto b23 = make_board(2, 3);
    CHECK(partition_of_diagonal(b23, {{0, 1, 2, 2, 1, 0}}) == P({3, 3}));

    // Brute-force match for the (2,3) example over all 10 partitions.
    int hits = 0;
    for (const auto& p : all_partitions(b23)) {
        if (oracle::diagonal_counts(oracle::from_parts(p.parts), 2, 3) == std::vector<int>{0, 1, 2, 2, 1, 0}) {
            CHECK(p == P({3, 3}));
            ++hits;
        }
    }
    CHECK(hits == 1);

    CHECK_THROWS_AS(partition_of_diagonal(b23, {{0, 1, 2, 2, 1}}), InvalidPosition);
    CHECK_THROWS_AS(partition_of_diagonal(b23, {{1, 1, 2, 2, 1, 0}}), InvalidPosition);
    CHECK_THROWS_AS(partition_of_diagonal(b23, {{0, 2, 2, 2, 1, 0}}), InvalidPosition);
    CHECK_THROWS_AS(partition_of_diagonal(b23, {{0, 1, 2, 0, 1, 0}}), InvalidPosition);
    CHECK(is_valid_diagonal(b23, {{0, 0, 1, 0, 0, 0}}));
}

TEST_CASE("diagonal constraint set has exactly C(m+n, m) elements and D is a bijection onto it")
{
    for (int m = 1; m <= 4; ++m) {
        for (int n = m; n + m <= 8; ++n) {
            const auto board = make_board(m, n);
            // Enumerate the constraint set directly: step patterns for each half.
            std::set<DiagonalExpression> valid;
            const int len = m + n + 1;
            std::vector<int> a(len, 0);
            std::function<void(int)> rec = [&](int k) {
                if (k > len) {
                    DiagonalExpression d{a};
                    if (is_valid_diagonal(board, d)) {
                        valid.insert(d);
                    }
                    return;
                }
                if (k == 1 || k == len) {
                    a[k - 1] = 0;
                    rec(k + 1);
                    return;
                }
                for (int v = 0; v <= std::min(m, n); ++v) {
                    a[k - 1] = v;
                    rec(k + 1);
                }
            };
            rec(1);
            CHECK(valid.size() == binomial(m + n, m));
            for (const auto& d : valid) {
                const Partition p = partition_of_diagonal(board, d);
                CHECK(diagonal_expression(board, p) == d);
            }
        }
    }
}

TEST_CASE("apply_lr examples")
{
    const auto b35 = make_board(3, 5);
    CHECK(apply_lr(b35, P({4, 3, 1}), 2, 5) == P({4, 0, 0}));
    const auto b23 = make_board(2, 3);
    for (int l = 2; l <= 5; ++l) {
        for (int r = l; r <= 5; ++r) {
            CHECK_FALSE(apply_lr(b23, P({0, 0}), l, r).has_value());
        }
    }
    CHECK(apply_lr(b23, P({3, 3}), 4, 5) == P({2, 2}));
    CHECK_FALSE(apply_lr(b23, P({3, 3}), 1, 5).has_value());
    CHECK_FALSE(apply_lr(b23, P({3, 3}), 5, 4).has_value());
    CHECK_FALSE(apply_lr(b23, P({3, 3}), 2, 6).has_value());
}

TEST_CASE("apply_lr matches a search over boxes")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 4);
        const int n = m + static_cast<int>(rng() % 4);
        const auto board = make_board(m, n);
        const auto parts = all_partitions(board);
        const Partition& p = parts[rng() % parts.size()];
        for (int l = 2; l <= m + n; ++l) {
            for (int r = l; r <= m + n; ++r) {
                std::optional<Partition> by_search;
                for (Box b : p.boxes()) {
                    if (transition_indices(board, p, b) == LrPair{l, r}) {
                        by_search = remove_hook(p, b);
                    }
                }
                CHECK(apply_lr(board, p, l, r) == by_search);
            }
        }
    }
}

TEST_CASE("label multiset splits over a hook removal")
{
    const auto board = make_board(3, 4);
    for (const auto& p : all_partitions(board)) {
        for (Box b : p.boxes()) {
            auto joined = label_multiset(board, remove_hook(p, b)).labels;
            const auto hook = hook_multiset(board, p, b).labels;
            joined.insert(joined.end(), hook.begin(), hook.end());
            std::sort(joined.begin(), joined.end());
            CHECK(joined == label_multiset(board, p).labels);
        }
    }
}
