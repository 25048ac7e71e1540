#include "mhrg/diagram.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mhrg/errors.hpp"

namespace mhrg {

BoardParams make_board(int m, int n)
{
    if (m < 1 || n < 1 || m > n) {
        throw InvalidBoard("board requires 1 <= m <= n, got m=" + std::to_string(m) +
                           " n=" + std::to_string(n));
    }
    const int chi = ((m + n) % 2 == 0) ? 1 : 0;
    return BoardParams(m, n, chi, (m + n - 1 + chi) / 2);
}

int Partition::column_height(int j) const
{
    int h = 0;
    while (h < rows() && parts[h] >= j) {
        ++h;
    }
    return j >= 1 ? h : 0;
}

int Partition::box_count() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<Box> Partition::boxes() const
{
    std::vector<Box> out;
    for (int i = 1; i <= rows(); ++i) {
        for (int j = 1; j <= row(i); ++j) {
            out.push_back({i, j});
        }
    }
    return out;
}

std::string to_string(const Partition& p)
{
    std::string s = "(";
    for (int i = 0; i < p.rows(); ++i) {
        if (i > 0) {
            s += ",";
        }
        s += std::to_string(p.parts[i]);
    }
    return s + ")";
}

bool fits_board(const BoardParams& board, const Partition& p)
{
    if (p.rows() != board.m()) {
        return false;
    }
    int prev = board.n();
    for (int part : p.parts) {
        if (part < 0 || part > prev) {
            return false;
        }
        prev = part;
    }
    return true;
}

Partition make_partition(const BoardParams& board, std::vector<int> parts)
{
    if (static_cast<int>(parts.size()) > board.m()) {
        // Trailing zeros beyond m rows are harmless; anything else is not.
        if (std::any_of(parts.begin() + board.m(), parts.end(), [](int x) { return x != 0; })) {
            throw InvalidPosition("partition has more than m=" + std::to_string(board.m()) +
                                  " nonzero rows");
        }
        parts.resize(board.m());
    }
    parts.resize(board.m(), 0);
    Partition p(std::move(parts));
    if (!fits_board(board, p)) {
        throw InvalidPosition("parts " + to_string(p) + " are not weakly decreasing within [0, " +
                              std::to_string(board.n()) + "]");
    }
    return p;
}

Partition full_rectangle(const BoardParams& board)
{
    return Partition(std::vector<int>(board.m(), board.n()));
}

Partition empty_partition(const BoardParams& board)
{
    return Partition(std::vector<int>(board.m(), 0));
}

namespace {

void extend_partitions(const BoardParams& board, std::vector<int>& prefix,
                       std::vector<Partition>& out)
{
    if (static_cast<int>(prefix.size()) == board.m()) {
        out.emplace_back(prefix);
        return;
    }
    const int cap = prefix.empty() ? board.n() : prefix.back();
    for (int v = 0; v <= cap; ++v) {
        prefix.push_back(v);
        extend_partitions(board, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> all_partitions(const BoardParams& board)
{
    std::vector<Partition> out;
    std::vector<int> prefix;
    prefix.reserve(board.m());
    extend_partitions(board, prefix, out);
    return out;
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (r > std::numeric_limits<std::uint64_t>::max() / num) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        // r * num is divisible by i at every step.
        r = r * num / static_cast<std::uint64_t>(i);
    }
    return r;
}

bool IndexSet::contains(int x) const
{
    return std::binary_search(elements.begin(), elements.end(), x);
}

IndexSet make_index_set(const BoardParams& board, std::vector<int> elements)
{
    std::sort(elements.begin(), elements.end());
    if (static_cast<int>(elements.size()) != board.m()) {
        throw InvalidPosition("index set must have exactly m=" + std::to_string(board.m()) +
                              " elements");
    }
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
        throw InvalidPosition("index set elements must be distinct");
    }
    if (!elements.empty() && (elements.front() < 1 || elements.back() > board.m() + board.n())) {
        throw InvalidPosition("index set elements must lie in [1, m+n]");
    }
    return IndexSet{std::move(elements)};
}

IndexSet index_set(const BoardParams& board, const Partition& p)
{
    const int m = board.m();
    std::vector<int> out(m);
    for (int t = 1; t <= m; ++t) {
        out[t - 1] = p.row(m - t + 1) + t;
    }
    return IndexSet{std::move(out)};
}

Partition partition_of_index_set(const BoardParams& board, const IndexSet& s)
{
    const IndexSet checked = make_index_set(board, s.elements);
    const int m = board.m();
    std::vector<int> parts(m);
    for (int t = 1; t <= m; ++t) {
        parts[m - t] = checked.elements[t - 1] - t;
    }
    return Partition(std::move(parts));
}

Partition dual(const BoardParams& board, const Partition& p)
{
    const int m = board.m();
    std::vector<int> parts(m);
    for (int i = 1; i <= m; ++i) {
        parts[i - 1] = board.n() - p.row(m - i + 1);
    }
    return Partition(std::move(parts));
}

int unimodal_label(const BoardParams& board, int i, int j)
{
    if (i < 1 || i > board.m() || j < 1 || j > board.n()) {
        throw InvalidPosition("box (" + std::to_string(i) + "," + std::to_string(j) +
                              ") lies outside the board");
    }
    return std::min(j - i + board.m(), i - j + board.n());
}

namespace {

void require_box(const Partition& p, Box b)
{
    if (!p.contains(b)) {
        throw InvalidPosition("box (" + std::to_string(b.row) + "," + std::to_string(b.col) +
                              ") is not in diagram " + to_string(p));
    }
}

} // namespace

std::vector<Box> hook_cells(const Partition& p, Box b)
{
    require_box(p, b);
    std::vector<Box> cells{b};
    for (int j = b.col + 1; j <= p.row(b.row); ++j) {
        cells.push_back({b.row, j});
    }
    const int height = p.column_height(b.col);
    for (int i = b.row + 1; i <= height; ++i) {
        cells.push_back({i, b.col});
    }
    return cells;
}

HookMultiset hook_multiset(const BoardParams& board, const Partition& p, Box b)
{
    HookMultiset h;
    for (Box cell : hook_cells(p, b)) {
        h.labels.push_back(unimodal_label(board, cell.row, cell.col));
    }
    std::sort(h.labels.begin(), h.labels.end());
    return h;
}

HookMultiset label_multiset(const BoardParams& board, const Partition& p)
{
    HookMultiset h;
    for (Box cell : p.boxes()) {
        h.labels.push_back(unimodal_label(board, cell.row, cell.col));
    }
    std::sort(h.labels.begin(), h.labels.end());
    return h;
}

Partition remove_hook(const Partition& p, Box b)
{
    require_box(p, b);
    // Rows from b.row on keep their first b.col - 1 boxes; the block strictly
    // below and right of b moves up-left by one, so row k inherits row k+1's
    // boxes beyond column b.col.
    std::vector<int> parts = p.parts;
    for (int k = b.row; k <= p.rows(); ++k) {
        const int next = p.row(k + 1);
        parts[k - 1] = next > b.col ? next - 1 : std::min(p.row(k), b.col - 1);
    }
    return Partition(std::move(parts));
}

LrPair transition_indices(const BoardParams& board, const Partition& p, Box b)
{
    require_box(p, b);
    const int leg_end = p.column_height(b.col);
    const int arm_end = p.row(b.row);
    return {board.m() + b.col - leg_end + 1, board.m() + arm_end - b.row + 1};
}

bool is_valid_diagonal(const BoardParams& board, const DiagonalExpression& a)
{
    const int m = board.m();
    const int len = board.m() + board.n() + 1;
    if (static_cast<int>(a.counts.size()) != len) {
        return false;
    }
    auto at = [&](int k) { return a.counts[k - 1]; };
    if (at(1) != 0 || at(len) != 0) {
        return false;
    }
    for (int k = 2; k <= m + 1; ++k) {
        const int step = at(k) - at(k - 1);
        if (step < 0 || step > 1) {
            return false;
        }
    }
    for (int k = m + 1; k <= len - 1; ++k) {
        const int step = at(k) - at(k + 1);
        if (step < 0 || step > 1) {
            return false;
        }
    }
    return true;
}

DiagonalExpression diagonal_expression(const BoardParams& board, const Partition& p)
{
    DiagonalExpression d;
    d.counts.assign(board.m() + board.n() + 1, 0);
    for (Box cell : p.boxes()) {
        // j - i = -m - 1 + k
        d.counts[cell.col - cell.row + board.m()] += 1;
    }
    return d;
}

Partition partition_of_diagonal(const BoardParams& board, const DiagonalExpression& a)
{
    if (!is_valid_diagonal(board, a)) {
        throw InvalidPosition("sequence is not a diagonal expression for the board");
    }
    const int m = board.m();
    const int n = board.n();
    // Boxes on one diagonal of a Young diagram form an initial segment
    // starting at the rectangle's border, so a_k boxes fill diagonal k from
    // its first box. Row i then has as many boxes as were placed in it.
    std::vector<int> filled(m, 0);
    std::vector<int> rightmost(m, 0);
    for (int k = 1; k <= m + n + 1; ++k) {
        const int offset = k - m - 1;
        const int i0 = offset <= 0 ? 1 - offset : 1;
        const int j0 = offset <= 0 ? 1 : 1 + offset;
        for (int t = 0; t < a.counts[k - 1]; ++t) {
            const int i = i0 + t;
            const int j = j0 + t;
            if (i > m || j > n) {
                throw InvalidPosition("diagonal count exceeds the diagonal's length");
            }
            filled[i - 1] += 1;
            rightmost[i - 1] = std::max(rightmost[i - 1], j);
        }
    }
    if (filled != rightmost) {
        throw InvalidPosition("diagonal counts do not form a Young diagram");
    }
    Partition p(std::move(filled));
    if (!fits_board(board, p) || diagonal_expression(board, p) != a) {
        throw InvalidPosition("diagonal counts do not form a Young diagram");
    }
    return p;
}

std::optional<Partition> apply_lr(const BoardParams& board, const Partition& p, int l, int r)
{
    if (l < 2 || l > r || r > board.m() + board.n()) {
        return std::nullopt;
    }
    IndexSet s = index_set(board, p);
    if (s.contains(l - 1) || !s.contains(r)) {
        return std::nullopt;
    }
    std::replace(s.elements.begin(), s.elements.end(), r, l - 1);
    std::sort(s.elements.begin(), s.elements.end());
    return partition_of_index_set(board, s);
}

} // namespace mhrg
