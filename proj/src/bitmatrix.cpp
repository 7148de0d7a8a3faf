#include "pcr/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace pcr {

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (cols < 1 || cols > kMaxCols) throw std::invalid_argument("BitMatrix: bad column count");
    if (rows < 0) throw std::invalid_argument("BitMatrix: negative row count");
    words_ = (cols + 63) / 64;
    bits_.assign(static_cast<std::size_t>(rows) * words_, 0);
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) throw std::invalid_argument("BitMatrix: no rows");
    BitMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows_; ++r) {
        if (static_cast<int>(rows[r].size()) != m.cols_)
            throw std::invalid_argument("BitMatrix: ragged rows");
        for (int c = 0; c < m.cols_; ++c) {
            char ch = rows[r][c];
            if (ch != '0' && ch != '1') throw std::invalid_argument("BitMatrix: bad character");
            if (ch == '1') m.set(r, c, true);
        }
    }
    return m;
}

BitMatrix BitMatrix::from_row_masks(const std::vector<std::uint64_t>& rows, int cols) {
    BitMatrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows_; ++r) m.bits_[static_cast<std::size_t>(r) * m.words_] = rows[r];
    return m;
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

std::uint64_t BitMatrix::row_mask(int r) const {
    assert(cols_ <= 64);
    return bits_[static_cast<std::size_t>(r) * words_];
}

void BitMatrix::xor_row_mask(int r, std::uint64_t mask) {
    assert(cols_ <= 64);
    bits_[static_cast<std::size_t>(r) * words_] ^= mask;
}

int BitMatrix::row_weight(int r) const {
    int w = 0;
    for (int i = 0; i < words_; ++i)
        w += std::popcount(bits_[static_cast<std::size_t>(r) * words_ + i]);
    return w;
}

int BitMatrix::col_weight(int c) const {
    int w = 0;
    for (int r = 0; r < rows_; ++r) w += get(r, c);
    return w;
}

std::vector<int> BitMatrix::row_support(int r) const {
    std::vector<int> s;
    for (int c = 0; c < cols_; ++c)
        if (get(r, c)) s.push_back(c);
    return s;
}

bool BitMatrix::row_is_zero(int r) const {
    for (int i = 0; i < words_; ++i)
        if (bits_[static_cast<std::size_t>(r) * words_ + i]) return false;
    return true;
}

void BitMatrix::xor_rows(int dst, int src) {
    for (int i = 0; i < words_; ++i)
        bits_[static_cast<std::size_t>(dst) * words_ + i] ^=
            bits_[static_cast<std::size_t>(src) * words_ + i];
}

void BitMatrix::swap_rows(int a, int b) {
    for (int i = 0; i < words_; ++i)
        std::swap(bits_[static_cast<std::size_t>(a) * words_ + i],
                  bits_[static_cast<std::size_t>(b) * words_ + i]);
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_ == 0 ? 1 : rows_);
    if (rows_ == 0) return BitMatrix(cols_, 1);  // degenerate; callers avoid this
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

bool BitMatrix::in_kernel(const std::vector<int>& c) const {
    assert(static_cast<int>(c.size()) == cols_);
    for (int r = 0; r < rows_; ++r) {
        int parity = 0;
        for (int j = 0; j < cols_; ++j)
            if (c[j] & 1) parity ^= get(r, j);
        if (parity) return false;
    }
    return true;
}

void BitMatrix::append_row(const BitMatrix& src, int src_row) {
    assert(src.cols_ == cols_);
    bits_.insert(bits_.end(), src.bits_.begin() + static_cast<std::size_t>(src_row) * words_,
                 src.bits_.begin() + static_cast<std::size_t>(src_row + 1) * words_);
    ++rows_;
}

void BitMatrix::append_row_mask(std::uint64_t mask) {
    assert(cols_ <= 64);
    bits_.resize(bits_.size() + words_, 0);
    bits_[static_cast<std::size_t>(rows_) * words_] = mask;
    ++rows_;
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (int r = 0; r < rows_; ++r) {
        std::string s(cols_, '0');
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) s[c] = '1';
        out.push_back(std::move(s));
    }
    return out;
}

RrefResult rref_and_rank(const BitMatrix& m) {
    RrefResult res{m, 0, {}};
    BitMatrix& a = res.reduced;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.get(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        a.swap_rows(r, piv);
        for (int i = 0; i < a.rows(); ++i)
            if (i != r && a.get(i, c)) a.xor_rows(i, r);
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

BitMatrix kernel_basis(const BitMatrix& m) {
    const int n = m.cols();
    RrefResult rr = rref_and_rank(m);
    std::vector<bool> is_pivot(n, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    const int dim = static_cast<int>(free_cols.size());
    BitMatrix basis(dim, n);
    for (int b = 0; b < dim; ++b) {
        int f = free_cols[b];
        basis.set(b, f, true);
        for (int i = 0; i < rr.rank; ++i)
            if (rr.reduced.get(i, f)) basis.set(b, rr.pivots[i], true);
    }
    // lexicographic order with column 0 most significant
    std::vector<int> order(dim);
    for (int i = 0; i < dim; ++i) order[i] = i;
    auto lex_less = [&](int a, int b) {
        for (int c = 0; c < n; ++c) {
            bool x = basis.get(a, c), y = basis.get(b, c);
            if (x != y) return y;  // '0' sorts before '1'
        }
        return false;
    };
    std::sort(order.begin(), order.end(), lex_less);
    BitMatrix out(dim, n);
    for (int i = 0; i < dim; ++i)
        for (int c = 0; c < n; ++c)
            if (basis.get(order[i], c)) out.set(i, c, true);
    return out;
}

}  // namespace pcr
