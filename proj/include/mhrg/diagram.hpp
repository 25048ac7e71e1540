#pragma once

// Young diagrams inside an m x n rectangle: partitions, index sets, duals,
// hooks, hook removal, the unimodal numbering and diagonal expressions.
//
// All coordinates are 1-based: box (i, j) is row i, column j.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mhrg {

struct Box {
    int row = 0;
    int col = 0;

    auto operator<=>(const Box&) const = default;
};

// A window d_l..d_r of the diagonal expression that a hook removal decrements.
struct LrPair {
    int l = 0;
    int r = 0;

    auto operator<=>(const LrPair&) const = default;
};

class BoardParams {
public:
    int m() const { return m_; }
    int n() const { return n_; }
    // 1 when m + n is even.
    int chi() const { return chi_; }
    // Largest unimodal label on the board.
    int c() const { return c_; }

    bool operator==(const BoardParams&) const = default;

private:
    friend BoardParams make_board(int m, int n);
    BoardParams(int m, int n, int chi, int c) : m_(m), n_(n), chi_(chi), c_(c) {}

    int m_;
    int n_;
    int chi_;
    int c_;
};

// Throws InvalidBoard unless 1 <= m <= n.
BoardParams make_board(int m, int n);

// Weakly decreasing row lengths. Inside a board context the sequence always
// has exactly m entries (trailing zeros kept).
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

    int rows() const { return static_cast<int>(parts.size()); }
    // Row length for 1-based row i; 0 beyond the stored rows.
    int row(int i) const { return (i >= 1 && i <= rows()) ? parts[i - 1] : 0; }
    // Number of boxes in column j.
    int column_height(int j) const;
    int box_count() const;
    bool empty() const { return box_count() == 0; }
    bool contains(Box b) const { return b.row >= 1 && b.col >= 1 && b.col <= row(b.row); }
    std::vector<Box> boxes() const;

    auto operator<=>(const Partition&) const = default;
};

std::string to_string(const Partition& p);

bool fits_board(const BoardParams& board, const Partition& p);
// Pads with zeros to length m and validates; throws InvalidPosition.
Partition make_partition(const BoardParams& board, std::vector<int> parts);
Partition full_rectangle(const BoardParams& board);
Partition empty_partition(const BoardParams& board);

// Every partition of the board in lexicographic order of the part sequence.
std::vector<Partition> all_partitions(const BoardParams& board);

// Exact binomial coefficient; saturates at UINT64_MAX.
std::uint64_t binomial(int n, int k);

// Strictly increasing m-subset of [1, m+n].
struct IndexSet {
    std::vector<int> elements;

    bool contains(int x) const;
    auto operator<=>(const IndexSet&) const = default;
};

// Sorts and validates; throws InvalidPosition on wrong size, duplicates or range.
IndexSet make_index_set(const BoardParams& board, std::vector<int> elements);

IndexSet index_set(const BoardParams& board, const Partition& p);
Partition partition_of_index_set(const BoardParams& board, const IndexSet& s);

// x -> m + n + 1 - x
inline int bar(const BoardParams& board, int x) { return board.m() + board.n() + 1 - x; }

Partition dual(const BoardParams& board, const Partition& p);

// min(j - i + m, i - j + n); throws InvalidPosition outside the rectangle.
int unimodal_label(const BoardParams& board, int i, int j);

// The box itself, then its arm left to right, then its leg top to bottom.
std::vector<Box> hook_cells(const Partition& p, Box b);

// Sorted labels of the hook; equality of two multisets is plain vector equality.
struct HookMultiset {
    std::vector<int> labels;

    auto operator<=>(const HookMultiset&) const = default;
};

HookMultiset hook_multiset(const BoardParams& board, const Partition& p, Box b);
// Sorted labels of every box of p.
HookMultiset label_multiset(const BoardParams& board, const Partition& p);

Partition remove_hook(const Partition& p, Box b);

LrPair transition_indices(const BoardParams& board, const Partition& p, Box b);

// Length m + n + 1 vector of diagonal box counts.
struct DiagonalExpression {
    std::vector<int> counts;

    auto operator<=>(const DiagonalExpression&) const = default;
};

bool is_valid_diagonal(const BoardParams& board, const DiagonalExpression& a);
DiagonalExpression diagonal_expression(const BoardParams& board, const Partition& p);
// Throws InvalidPosition when a violates the diagonal constraints.
Partition partition_of_diagonal(const BoardParams& board, const DiagonalExpression& a);

// The diagram obtained by the unique hook removal whose diagonal window is
// (l, r), via I -> (I \ {r}) u {l - 1}. Absent when l - 1 is in I, r is not,
// or (l, r) is outside 2 <= l <= r <= m + n.
std::optional<Partition> apply_lr(const BoardParams& board, const Partition& p, int l, int r);

} // namespace mhrg
